#pragma once

#include <optional>
#include <string>
#include <vector>

namespace morse {

// Critical point counts of a function on a closed oriented surface: p local
// minima, q saddles, r local maxima.
struct SurfaceSignature {
    int minima = 0;  // p
    int saddles = 0; // q
    int maxima = 0;  // r

    int euler_char() const { return minima - saddles + maxima; }
    bool counts_positive() const { return minima >= 1 && saddles >= 1 && maxima >= 1; }
    bool euler_even() const { return euler_char() % 2 == 0; }
    // Throws unless chi is even and <= 2.
    int genus() const;

    bool operator==(const SurfaceSignature&) const = default;
};

// How many critical points of each index carry labels, and how many of those
// are additionally pinned to fixed positions. By convention the labeled points
// are the first `labeled_*` of each index and the fixed ones the first
// `fixed_*` of the labeled ones.
struct LabelSpec {
    int labeled_minima = 0, labeled_saddles = 0, labeled_maxima = 0;
    int fixed_minima = 0, fixed_saddles = 0, fixed_maxima = 0;

    bool consistent_with(const SurfaceSignature& sig) const;
    // labeled count exceeds the Euler characteristic.
    bool satisfies_main_condition(const SurfaceSignature& sig) const {
        return labeled_minima + labeled_saddles + labeled_maxima > sig.euler_char();
    }
    int fixed_total() const { return fixed_minima + fixed_saddles + fixed_maxima; }

    static LabelSpec all_labeled(const SurfaceSignature& sig);
    static LabelSpec none() { return LabelSpec{}; }

    bool operator==(const LabelSpec&) const = default;
};

// Ordered partition of the saddle set {1..q} into level blocks, lowest level
// first. Blocks are kept sorted ascending; the block sequence is the data.
struct OrderedPartition {
    std::vector<std::vector<int>> blocks;

    int levels() const { return (int)blocks.size(); } // s
    int total() const;
    bool well_formed(int q) const;
    // Level index (1-based) of a saddle, 0 if absent.
    int level_of(int saddle) const;

    // True when *this is a refinement of `coarser`: every coarse block is the
    // union of a consecutive run of blocks of *this.
    bool refines(const OrderedPartition& coarser) const;

    static OrderedPartition single_block(int q);
    static OrderedPartition singletons(int q);
    static std::vector<OrderedPartition> all(int q);
    // Every partition strictly finer than *this (in-place block splitting).
    std::vector<OrderedPartition> proper_refinements() const;
    // All refinements including *this.
    std::vector<OrderedPartition> refinements() const;

    std::string str() const;
    bool operator==(const OrderedPartition&) const = default;
    bool operator<(const OrderedPartition& o) const { return blocks < o.blocks; }
};

} // namespace morse
