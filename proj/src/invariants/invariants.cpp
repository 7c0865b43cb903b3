#include "invariants/invariants.hpp"

#include <algorithm>

#include <json.hpp>

#include "support/errors.hpp"
#include "support/intmat.hpp"

namespace morse {

void PoincarePolynomial::trim() {
    while (!coeffs.empty() && coeffs.back() == 0)
        coeffs.pop_back();
}

int PoincarePolynomial::degree() const {
    for (int j = (int)coeffs.size() - 1; j >= 0; --j)
        if (coeffs[j] != 0)
            return j;
    return -1;
}

long long PoincarePolynomial::eval_at_one() const {
    long long s = 0;
    for (long long c : coeffs)
        s = checked_add(s, c);
    return s;
}

PoincarePolynomial PoincarePolynomial::plus(const PoincarePolynomial& o) const {
    PoincarePolynomial out;
    out.coeffs.resize(std::max(coeffs.size(), o.coeffs.size()), 0);
    for (size_t j = 0; j < out.coeffs.size(); ++j)
        out.coeffs[j] = checked_add(at((int)j), o.at((int)j));
    out.trim();
    return out;
}

PoincarePolynomial PoincarePolynomial::shifted(int k) const {
    PoincarePolynomial out;
    out.coeffs.assign(coeffs.size() + k, 0);
    for (size_t j = 0; j < coeffs.size(); ++j)
        out.coeffs[j + k] = coeffs[j];
    out.trim();
    return out;
}

std::string PoincarePolynomial::str() const {
    std::string s;
    for (int j = 0; j < (int)coeffs.size(); ++j) {
        if (coeffs[j] == 0)
            continue;
        if (!s.empty())
            s += " + ";
        if (j == 0)
            s += std::to_string(coeffs[j]);
        else if (coeffs[j] == 1)
            s += "t^" + std::to_string(j);
        else
            s += std::to_string(coeffs[j]) + "*t^" + std::to_string(j);
    }
    return s.empty() ? "0" : s;
}

StratumHomotopyPlugin StratumHomotopyPlugin::contractible() {
    StratumHomotopyPlugin p;
    p.mode = Mode::contractible;
    return p;
}

StratumHomotopyPlugin StratumHomotopyPlugin::from_json(const std::string& text) {
    nlohmann::ordered_json j;
    try {
        j = nlohmann::ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail(Err::parse_error, std::string("bad plugin JSON: ") + e.what());
    }
    try {
        StratumHomotopyPlugin p;
        std::string mode = j.at("mode").get<std::string>();
        if (mode == "contractible") {
            p.mode = Mode::contractible;
        } else if (mode == "table") {
            p.mode = Mode::table;
            for (const auto& [id, val] : j.at("entries").items()) {
                Entry e;
                e.torus_dim = val.at("torus_dim").get<long long>();
                e.poincare.coeffs = val.at("poincare").get<std::vector<long long>>();
                e.poincare.trim();
                for (long long c : e.poincare.coeffs)
                    if (c < 0)
                        fail(Err::parse_error, "negative Betti coefficient for " + id);
                // quotient of a d-torus by a free finite action: total rank
                // divides the torus rank times the group order bound
                long long bound = 1;
                for (long long i = 1; i <= e.torus_dim && bound < (1LL << 40); ++i)
                    bound *= 2 * i;
                if (e.torus_dim >= 0 && e.poincare.eval_at_one() > 0 && bound % e.poincare.eval_at_one() != 0)
                    p.warnings.push_back("entry " + id + ": total rank " +
                                         std::to_string(e.poincare.eval_at_one()) +
                                         " does not divide 2^d*d! for d=" + std::to_string(e.torus_dim));
                p.entries[id] = std::move(e);
            }
        } else {
            fail(Err::parse_error, "plugin mode must be \"contractible\" or \"table\"");
        }
        if (j.contains("betti"))
            p.betti = j.at("betti").get<std::vector<long long>>();
        return p;
    } catch (const nlohmann::json::exception& e) {
        fail(Err::parse_error, std::string("bad plugin document: ") + e.what());
    }
}

std::optional<StratumHomotopyPlugin::Entry> StratumHomotopyPlugin::lookup(const std::string& class_id) const {
    if (mode == Mode::contractible)
        return Entry{0, PoincarePolynomial::one()};
    auto it = entries.find(class_id);
    if (it == entries.end())
        return std::nullopt;
    return it->second;
}

std::string StratumHomotopyPlugin::describe() const {
    return mode == Mode::contractible
               ? "contractible stratum assumption (every stratum counted as a point)"
               : "user-supplied stratum table with " + std::to_string(entries.size()) + " entries";
}

long long euler_characteristic(const std::vector<CanonicalClass>& classes, int q) {
    long long one_level = 0;
    for (const auto& c : classes)
        if (c.s_value == 1)
            ++one_level;
    return (q % 2 == 1 ? 1 : -1) * one_level;
}

PoincarePolynomial q_polynomial(const StrataPoset& poset, const StratumHomotopyPlugin& plugin) {
    PoincarePolynomial q_poly;
    std::vector<std::string> missing;
    for (const auto& node : poset.nodes) {
        auto entry = plugin.lookup(node.cls.class_id);
        if (!entry) {
            missing.push_back(node.cls.class_id);
            continue;
        }
        q_poly = q_poly.plus(entry->poincare.shifted(poset.saddles - node.cls.s_value));
    }
    if (!missing.empty()) {
        std::string what = "stratum data missing for:";
        for (const auto& id : missing)
            what += " " + id;
        fail(Err::missing_stratum_data, what);
    }
    return q_poly;
}

MorseSmaleReport morse_smale_check(const std::vector<long long>& betti, const PoincarePolynomial& q_poly) {
    MorseSmaleReport rep;
    int top = std::max((int)betti.size(), (int)q_poly.coeffs.size()) + 2;
    long long beta_alt = 0, q_alt = 0;
    rep.pass = rep.weak_pass = true;
    for (int j = 0; j < top; ++j) {
        long long beta = j < (int)betti.size() ? betti[j] : 0;
        long long qj = q_poly.at(j);
        beta_alt = beta - beta_alt;
        q_alt = qj - q_alt;
        MorseSmaleReport::Row row;
        row.j = j;
        row.beta = beta;
        row.q = qj;
        row.beta_alt = beta_alt;
        row.q_alt = q_alt;
        row.alternating_ok = beta_alt <= q_alt;
        row.weak_ok = beta <= qj;
        rep.pass = rep.pass && row.alternating_ok;
        rep.weak_pass = rep.weak_pass && row.weak_ok;
        rep.rows.push_back(row);
    }
    return rep;
}

VanishingReport dimension_vanishing_check(const PoincarePolynomial& q_poly, int q) {
    VanishingReport rep;
    rep.degree = q_poly.degree();
    rep.bound = 3 * q;
    rep.ok = rep.degree <= rep.bound;
    return rep;
}

std::string identity_component_factor(const SurfaceSignature& sig, const LabelSpec& labels) {
    int chi = sig.euler_char();
    int fixed = labels.fixed_total();
    if (chi == 2 && fixed == 0)
        return "RP3";
    if (chi == 0 && fixed == 0)
        return "T2";
    if (fixed > 0 && chi - fixed >= 0 && chi - fixed <= 1)
        return "S1";
    if (chi < fixed)
        return "point";
    return "point";
}

} // namespace morse
