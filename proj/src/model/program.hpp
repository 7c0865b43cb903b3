#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "model/types.hpp"

namespace morse {

// A Morse class is encoded as a leveled surgery program: p oriented circles
// (one per minimum), marked with attachment sites; each saddle consumes two
// marks, merging two circles or splitting one; the circles left at the top are
// capped by the maxima. Each circle word lists the owning saddle of its marks
// in cyclic order, so a saddle id appears exactly twice across all circles.

// Wire-shaped form, one-to-one with the JSON document. May be arbitrarily
// broken; validate() reports everything wrong with it.
struct RawProgram {
    SurfaceSignature signature;
    LabelSpec labels;
    OrderedPartition partition;
    struct Circle {
        int minimum = 0;            // 1..p
        std::vector<int> marks;     // mark ids, cyclic order
    };
    std::vector<Circle> circles;
    std::map<int, std::array<int, 2>> moves; // saddle id -> the two marks it consumes
    std::vector<int> caps;                   // final circle (creation order) -> maximum id
};

struct ValidationReport {
    struct Violation {
        std::string code;
        std::string detail;
    };
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    std::string summary() const;
};

// Checked form: circle i belongs to minimum i+1 and its word lists saddle ids.
struct Program {
    SurfaceSignature signature;
    LabelSpec labels;
    OrderedPartition partition;
    std::vector<std::vector<int>> circles;
    std::vector<int> caps;

    bool operator==(const Program&) const = default;
    bool operator<(const Program& o) const;
    RawProgram raw() const; // with marks renumbered 1..2q in scan order
};

ValidationReport validate_program(const RawProgram& raw);
// Throws Err::invalid_program with the report summary unless raw is valid.
Program check_program(const RawProgram& raw);

// -- execution ---------------------------------------------------------------

struct Item {
    enum Kind : unsigned char { token = 0, gap = 1, scar = 2 };
    Kind kind;
    int a; // token: saddle id; gap: circle index; scar: saddle id
    int b; // token: occurrence 0/1; gap: position; scar: side 0/1
    int c; // scar only: mark index whose level edge follows this scar

    bool operator==(const Item&) const = default;
    bool operator<(const Item& o) const { return std::tie(kind, a, b, c) < std::tie(o.kind, o.a, o.b, o.c); }
};

struct ExecCircle {
    std::vector<Item> items;
    int birth_level = 0;  // 0 = initial
    int death_level = 0;  // set when consumed; levels+1 when capped
    std::vector<std::pair<int, int>> gap_set() const;
};

struct Execution {
    std::vector<ExecCircle> circles;           // creation order, every circle ever alive
    std::vector<std::vector<int>> alive_before; // [k] = circle indices alive before level k (1-based; [0] unused)
    std::vector<int> finals;                    // circle indices surviving all levels, creation order
    bool connected = false;

    int levels() const { return (int)alive_before.size() - 1; }
};

// Runs the surgery program. Pure function of the representation: within a
// level, saddles execute in increasing id order (the outcome up to scar
// bookkeeping is order-independent; gaps and final circles are not affected).
Execution execute(const Program& p);

// Mark index: each saddle occurrence (j, occ) with occ in {0,1}, numbered by
// first appearance scanning circles in order. 2q marks total.
inline int mark_index(int saddle, int occ) { return 2 * (saddle - 1) + occ; }

// surface counts with the checked accessors; throws on structurally impossible
// values (cannot happen for valid programs).
SurfaceSignature surface_signature(const Program& p);

} // namespace morse
