#include "model/level_graph.hpp"

#include <algorithm>

#include "support/errors.hpp"

namespace morse {

LevelGraph extract_level_graph(const Program& p) {
    Execution ex = execute(p);
    return extract_level_graph(p, ex);
}

LevelGraph extract_level_graph(const Program& p, const Execution& ex) {
    const int q = p.signature.saddles;
    LevelGraph g;
    g.vertices.resize(q);
    for (int j = 1; j <= q; ++j)
        g.vertices[j - 1] = {j, p.partition.level_of(j)};
    g.edges.resize(2 * q);

    for (int k = 1; k <= p.partition.levels(); ++k) {
        const auto& alive = ex.alive_before[k];
        for (size_t ord = 0; ord < alive.size(); ++ord) {
            const auto& items = ex.circles[alive[ord]].items;
            std::vector<int> level_marks;
            for (size_t t = 0; t < items.size(); ++t)
                if (items[t].kind == Item::token && p.partition.level_of(items[t].a) == k)
                    level_marks.push_back((int)t);
            if (level_marks.empty())
                continue; // regular circle at this level, not part of the graph
            for (size_t i = 0; i < level_marks.size(); ++i) {
                int t_src = level_marks[i];
                int t_dst = level_marks[(i + 1) % level_marks.size()];
                const Item& src = items[t_src];
                const Item& dst = items[t_dst];
                LevelGraph::Edge e;
                e.id = mark_index(src.a, src.b);
                e.level = k;
                e.source_saddle = src.a;
                e.target_saddle = dst.a;
                e.circle = (int)ord;
                e.position = t_src;
                for (int t = (t_src + 1) % (int)items.size(); t != t_dst; t = (t + 1) % (int)items.size())
                    e.material.push_back(items[t]);
                g.edges[e.id] = std::move(e);
            }
        }
    }
    for (const auto& e : g.edges)
        if (e.source_saddle == 0)
            fail(Err::internal, "level graph is missing an edge");
    return g;
}

std::vector<int> LevelGraph::degrees() const {
    std::vector<int> deg(vertices.size(), 0);
    for (const auto& e : edges) {
        deg[e.source_saddle - 1]++;
        deg[e.target_saddle - 1]++;
    }
    return deg;
}

} // namespace morse
