#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "enumerate/enumerate.hpp"

namespace morse {

// Stratification skeleton of the moduli space for one query: one node per
// class, an edge (f, g) whenever some proper re-leveling of f lands in g,
// each edge annotated with every witnessing refinement. Stratum dimension is
// s + 2q inside the 3q-dimensional total space.
struct StrataPoset {
    struct Node {
        CanonicalClass cls;
        int dim = 0;
    };
    struct Edge {
        int from = 0, to = 0;
        std::vector<OrderedPartition> witnesses;
    };
    int saddles = 0; // q
    std::vector<Node> nodes;  // sorted by class_id
    std::vector<Edge> edges;  // sorted by (from, to)

    int index_of(const std::string& class_id) const; // -1 when absent
    std::vector<int> successors(int node) const;

    // Total space dimension 3q.
    int total_dim() const { return 3 * saddles; }
};

// Evaluates delta on every proper refinement of every node. The class set
// must be the full enumeration of its query; a delta image outside it raises
// Err::incomplete_input.
StrataPoset build_poset(const ClassSet& classes);

// Nodes with at least `s` saddle levels. s = q+1 gives the empty set,
// s = 1 everything.
std::vector<int> filtration(const StrataPoset& poset, int s);

// The node together with all transitive delta-successors: every stratum its
// open neighborhood meets.
std::set<int> specialty_neighborhood(const StrataPoset& poset, int node);

std::string poset_to_dot(const StrataPoset& poset);
std::string poset_to_json(const StrataPoset& poset, int indent = 2);
std::string poset_to_csv(const StrataPoset& poset);

} // namespace morse
