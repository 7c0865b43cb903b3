#pragma once

#include <string>
#include <vector>

#include "model/level_graph.hpp"
#include "model/program.hpp"
#include "support/intmat.hpp"

namespace morse {

// Finite cell structure with integer boundary maps. 1-cell boundaries are
// (head, tail) vertex pairs; 2-cell boundaries are signed 1-chains.
struct CellComplex {
    int zero_cells = 0;
    std::vector<std::pair<int, int>> one_cells;                       // (head, tail)
    std::vector<std::vector<std::pair<int, long long>>> two_cells;    // signed 1-cell incidences

    std::vector<int> saddle_vertices;   // distinguished 0-cells
    std::vector<int> level_edge_cells;  // 1-cell index per mark index (2q entries, -1 when absent)
    std::vector<int> min_disk_cells;    // deleted 2-cells
    std::vector<int> max_disk_cells;

    int euler_char() const {
        return zero_cells - (int)one_cells.size() + (int)two_cells.size();
    }
    IntMat boundary1() const;
    IntMat boundary2() const;
    bool boundary_squares_to_zero() const;
};

// The closed-surface complex of a program plus its per-level slabs. The slab
// complexes are the surface cut along the regular interface circles: one piece
// per singular level, where the 2q arcs freely generate relative H1.
struct SurfaceComplex {
    CellComplex closed;              // entire surface; min/max disks flagged
    std::vector<CellComplex> slabs;  // one per level, saddle-bearing components only
    LevelGraph graph;
};

SurfaceComplex build_cell_complex(const Program& p);

// Integer certificate that the 2q arc classes form a basis of the leveled
// relative H1: their coordinate matrix in a Smith-basis, with determinant.
struct EdgeBasisCertificate {
    IntMat matrix; // 2q x 2q
    long long determinant = 0;
};

struct RelativeH1 {
    int rank = 0;                       // of H1(surface minus min/max disks, saddles)
    std::vector<long long> torsion;     // invariant factors > 1 (none expected)
    EdgeBasisCertificate certificate;   // from the leveled pair
};

// Rank of the relative H1 of the punctured surface (must be 2q, else
// Err::rank_mismatch) together with the leveled edge-basis certificate.
RelativeH1 relative_h1(const SurfaceComplex& complex);

std::string matrix_to_csv(const IntMat& m);
std::string matrix_to_json(const IntMat& m);

} // namespace morse
