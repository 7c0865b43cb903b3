#pragma once

#include <vector>

#include "model/program.hpp"

namespace morse {

// Union of the saddle-bearing singular level sets: q four-valent vertices and
// exactly 2q oriented arcs. Edge m (a mark index) starts at its mark's saddle
// and runs forward along the carrying circle to the next same-level mark.
struct LevelGraph {
    struct Vertex {
        int saddle;
        int level;
    };
    struct Edge {
        int id;            // mark index 2*(saddle-1)+occ
        int level;
        int source_saddle;
        int target_saddle;
        int circle;        // ordinal of the carrying circle in that level's interface
        int position;      // item index of the source mark on the carrying circle
        std::vector<Item> material; // items strictly between source and target marks
    };

    std::vector<Vertex> vertices; // by saddle id
    std::vector<Edge> edges;      // by edge id, size 2q

    std::vector<int> degrees() const; // per saddle, loops counted twice
};

LevelGraph extract_level_graph(const Program& p);
LevelGraph extract_level_graph(const Program& p, const Execution& ex);

} // namespace morse
