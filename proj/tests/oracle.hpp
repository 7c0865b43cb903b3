#pragma once

// Independent brute-force reference for class counting. Deliberately avoids
// the library's canonical forms and execution engine: programs are grouped by
// pairwise orbit membership under the re-encoding moves, with its own little
// surgery interpreter. Slow and simple on purpose.

#include <map>
#include <vector>

namespace oracle {

struct NaiveProgram {
    int minima = 0, saddles = 0, maxima = 0;
    int labeled_minima = 0, labeled_saddles = 0, labeled_maxima = 0;
    std::vector<std::vector<int>> partition; // blocks sorted ascending
    std::vector<std::vector<int>> words;     // circle i: saddle ids
    std::vector<int> caps;                   // final circle (naive execution order) -> max id

    bool operator==(const NaiveProgram& o) const {
        return partition == o.partition && words == o.words && caps == o.caps;
    }
};

struct NaiveRun {
    bool valid = false;
    // gap set of each surviving circle, in naive creation order
    std::vector<std::vector<std::pair<int, int>>> final_gaps;
};

NaiveRun naive_run(const NaiveProgram& p);

// All valid programs for the counts, every rotation and cap assignment.
std::vector<NaiveProgram> naive_generate(int p, int q, int r, bool all_labeled);

bool naive_equivalent(const NaiveProgram& a, const NaiveProgram& b);

struct NaiveSummary {
    long long classes = 0;
    std::map<int, long long> s_histogram;
};

// Grouping by pairwise equivalence.
NaiveSummary naive_classes(int p, int q, int r, bool all_labeled);

} // namespace oracle
