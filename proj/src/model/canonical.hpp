#pragma once

#include <functional>
#include <string>
#include <vector>

#include "model/program.hpp"

namespace morse {

// One re-encoding / equivalence move: rename unlabeled minima, saddles and
// maxima, and rotate each circle's list representation. Labeled points (the
// leading ids of each index) stay put. Caps ride along: they are re-derived so
// the move is a pure re-encoding of the same leveled surgery structure.
struct GroupMove {
    std::vector<int> min_perm; // image of minimum i+1 at index i (1-based values)
    std::vector<int> sad_perm;
    std::vector<int> max_perm;
    std::vector<int> rotations; // per original circle index

    static GroupMove identity(const Program& p);
    bool is_identity() const;
};

struct MoveResult {
    Program program;
    std::vector<int> mark_map; // old mark index -> new mark index, size 2q
};

MoveResult apply_move(const Program& p, const GroupMove& m);

// Calls fn for every admissible move, identity first, in a fixed order.
// Returning false from fn stops the walk.
void for_each_move(const Program& p, const std::function<bool(const GroupMove&)>& fn);

struct CanonicalClass {
    Program canonical_program;
    std::string class_id; // content digest of the canonical form
    int s_value = 0;
    OrderedPartition partition;

    bool operator==(const CanonicalClass& o) const { return class_id == o.class_id; }
};

struct CanonicalResult {
    CanonicalClass cls;
    GroupMove move;             // the move taking the input to the canonical form
    std::vector<int> mark_map;  // input marks -> canonical marks
};

// Lexicographic minimum of (partition, circles, caps) over all moves.
// Deterministic: ties resolve to the earliest move, so canonicalizing a
// canonical program yields the identity move.
CanonicalResult canonical_form(const Program& p);

std::string class_digest(const Program& canonical);

// Label-preserving self-mappings of a canonical program, recorded by their
// action on saddles and on the 2q marks (equivalently the 2q level arcs).
struct AutomorphismGroup {
    struct Element {
        std::vector<int> saddle_perm; // 1-based images, size q
        std::vector<int> edge_perm;   // mark index -> mark index, size 2q
        bool is_identity() const;
    };
    std::vector<Element> elements; // deduplicated, identity first

    bool contains(const Element& e) const;
    Element compose(const Element& a, const Element& b) const; // apply a, then b
    Element inverse(const Element& e) const;
};

AutomorphismGroup automorphism_group(const CanonicalClass& cls);

} // namespace morse
