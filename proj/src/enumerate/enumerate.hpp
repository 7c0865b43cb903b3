#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "model/canonical.hpp"
#include "model/program.hpp"
#include "support/prng.hpp"

namespace morse {

struct EnumerationQuery {
    SurfaceSignature signature;
    LabelSpec labels;
    std::optional<int> filter_s;                     // keep classes with exactly this many levels
    std::optional<std::vector<int>> filter_shape;    // exact block-size sequence
    std::optional<OrderedPartition> filter_partition;
    std::optional<int> filter_genus;
    long long budget = 20'000'000;
    int threads = 1;

    void check() const; // Err::invalid_argument on inconsistent filters
    std::string digest() const;
    std::string str() const;
};

struct ClassSet {
    EnumerationQuery query;
    std::vector<CanonicalClass> classes; // sorted by class_id, duplicate-free

    std::map<int, long long> s_histogram() const;
    const CanonicalClass* find(const std::string& class_id) const;
};

// Exhaustive generation of all classes matching the query. Deterministic
// output order regardless of thread count. Throws Err::budget_exceeded once
// the node budget is passed; partial results are never returned.
ClassSet enumerate_classes(const EnumerationQuery& query);

std::map<int, long long> count_by_saddle_levels(const EnumerationQuery& query);

// Same moves under a finer level structure. Marks stay put; caps are
// re-derived for the new execution order. Err::not_a_refinement if `finer`
// does not refine the program's partition.
Program refine_order(const Program& program, const OrderedPartition& finer);

// Class of the perturbed function: canonical form of the re-leveled program.
CanonicalClass delta(const CanonicalClass& cls, const OrderedPartition& finer);
// Also exposes the saddle renaming and mark map into the finer class's
// canonical coordinates.
CanonicalResult delta_with_maps(const CanonicalClass& cls, const OrderedPartition& finer);

// Rejection-samples a valid program with the given signature; used by
// property tests and the randomized check runs.
Program random_valid_program(Prng& rng, const SurfaceSignature& sig, const LabelSpec& labels);
// Random signature with saddles <= max_saddles and a valid program for it.
Program random_valid_program(Prng& rng, int max_saddles);

} // namespace morse
