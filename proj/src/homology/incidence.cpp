#include "homology/incidence.hpp"

#include <cstdlib>

#include "support/errors.hpp"

namespace morse {

IncidenceData incidence_matrix(const CanonicalClass& coarse, const OrderedPartition& finer) {
    CanonicalResult fine = delta_with_maps(coarse, finer);
    const int two_q = 2 * coarse.canonical_program.signature.saddles;

    IncidenceData out;
    out.target = fine.cls;
    out.saddle_perm = fine.move.sad_perm;
    out.matrix = IntMat(two_q, two_q);
    for (int m = 0; m < two_q; ++m)
        out.matrix.at(fine.mark_map[m], m) = 1;
    if (std::llabs(out.matrix.det()) != 1)
        fail(Err::non_unimodular, "incidence matrix is not unimodular");
    return out;
}

} // namespace morse
