#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "poset/poset.hpp"

namespace morse {

// Integer-coefficient polynomial in t, coefficient of t^j at index j.
struct PoincarePolynomial {
    std::vector<long long> coeffs;

    void trim();
    int degree() const; // -1 for the zero polynomial
    long long at(int j) const { return j >= 0 && j < (int)coeffs.size() ? coeffs[j] : 0; }
    long long eval_at_one() const;
    PoincarePolynomial plus(const PoincarePolynomial& o) const;
    PoincarePolynomial shifted(int k) const; // multiply by t^k
    static PoincarePolynomial one() { return {{1}}; }
    std::string str() const; // sparse "c*t^j" form
    bool operator==(const PoincarePolynomial&) const = default;
};

// Per-stratum homotopy data: the retract is a d-torus quotient. This input is
// external; the built-in mode treats every stratum as contractible and says so.
struct StratumHomotopyPlugin {
    enum class Mode { contractible, table };
    Mode mode = Mode::contractible;
    struct Entry {
        long long torus_dim = 0;
        PoincarePolynomial poincare;
    };
    std::map<std::string, Entry> entries; // by class id
    std::vector<long long> betti;         // optional: Betti input for reports
    std::vector<std::string> warnings;

    static StratumHomotopyPlugin contractible();
    static StratumHomotopyPlugin from_json(const std::string& text);
    std::optional<Entry> lookup(const std::string& class_id) const;
    std::string describe() const;
};

// (-1)^(q-1) times the number of one-level classes. Needs no stratum data.
long long euler_characteristic(const std::vector<CanonicalClass>& classes, int q);

// Q(t) = sum over strata of t^(q - s) * P(stratum). Err::missing_stratum_data
// lists every uncovered class when the plugin is a partial table.
PoincarePolynomial q_polynomial(const StrataPoset& poset, const StratumHomotopyPlugin& plugin);

struct MorseSmaleReport {
    struct Row {
        int j = 0;
        long long beta_alt = 0, q_alt = 0; // alternating partial sums
        bool alternating_ok = false;
        long long beta = 0, q = 0;
        bool weak_ok = false;
    };
    std::vector<Row> rows;
    bool pass = false;      // all alternating bounds hold
    bool weak_pass = false; // all coefficientwise bounds hold
};

MorseSmaleReport morse_smale_check(const std::vector<long long>& betti, const PoincarePolynomial& q_poly);

struct VanishingReport {
    int degree = 0; // of Q
    int bound = 0;  // 3q
    bool ok = false;
};

// deg Q <= 3q: stratum dimensions cap the polynomial degree, which is what
// forces the Betti vanishing beyond 3q+1.
VanishingReport dimension_vanishing_check(const PoincarePolynomial& q_poly, int q);

// Homotopy type of the ambient identity-component factor for a closed surface
// with this many fixed points: "RP3", "S1", "T2" or "point".
std::string identity_component_factor(const SurfaceSignature& sig, const LabelSpec& labels);

} // namespace morse
