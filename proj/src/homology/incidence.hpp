#pragma once

#include "enumerate/enumerate.hpp"
#include "model/canonical.hpp"
#include "support/intmat.hpp"

namespace morse {

// Transition data from a class to the class of a re-leveled perturbation.
// Periods transport along the persistent marks: each arc is indexed by the
// mark opening it, and the refined class keeps that indexing through the
// canonical renaming. The H0 component is the saddle identification.
struct IncidenceData {
    std::vector<int> saddle_perm; // coarse saddle -> fine saddle (1-based)
    IntMat matrix;                // 2q x 2q, unimodular, maps coarse periods to fine periods
    CanonicalClass target;
};

// Err::not_a_refinement when `finer` does not refine the class partition;
// Err::non_unimodular if the assembled matrix is not invertible over the
// integers (cannot happen for mark transport; kept as a certificate).
IncidenceData incidence_matrix(const CanonicalClass& coarse, const OrderedPartition& finer);

} // namespace morse
