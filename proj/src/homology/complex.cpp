#include "homology/complex.hpp"

#include <algorithm>
#include <map>

#include "support/errors.hpp"

namespace morse {

IntMat CellComplex::boundary1() const {
    IntMat d(zero_cells, (int)one_cells.size());
    for (size_t j = 0; j < one_cells.size(); ++j) {
        d.at(one_cells[j].first, (int)j) = checked_add(d.at(one_cells[j].first, (int)j), 1);
        d.at(one_cells[j].second, (int)j) = checked_add(d.at(one_cells[j].second, (int)j), -1);
    }
    return d;
}

IntMat CellComplex::boundary2() const {
    IntMat d((int)one_cells.size(), (int)two_cells.size());
    for (size_t j = 0; j < two_cells.size(); ++j)
        for (auto [cell, coeff] : two_cells[j])
            d.at(cell, (int)j) = checked_add(d.at(cell, (int)j), coeff);
    return d;
}

bool CellComplex::boundary_squares_to_zero() const {
    return boundary1().mul(boundary2()).is_zero();
}

namespace {

// Cell bookkeeping for one interface circle of the telescope: vertex and arc
// ids per item, plus the vertical 1-cells of each glued end.
struct CircleCells {
    int circle;                  // execution circle index
    std::vector<int> vertex;     // per item
    std::vector<int> arc;        // per item t: from item t to item t+1
    std::vector<int> bot_vert;   // per item, -1 when not bottom-glued
    std::vector<int> top_vert;
};

// First item at or after t (cyclically) satisfying pred.
template <typename Pred>
int forward_scan(const std::vector<Item>& items, int t, Pred pred) {
    int n = (int)items.size();
    for (int step = 0; step < n; ++step) {
        int u = (t + step) % n;
        if (pred(items[u]))
            return u;
    }
    fail(Err::internal, "interface circle lacks the expected glued item");
}

} // namespace

SurfaceComplex build_cell_complex(const Program& p) {
    const int q = p.signature.saddles;
    const int s = p.partition.levels();
    Execution ex = execute(p);
    SurfaceComplex out;
    out.graph = extract_level_graph(p, ex);

    CellComplex& cx = out.closed;
    cx.zero_cells = q; // saddle vertices first
    for (int j = 0; j < q; ++j)
        cx.saddle_vertices.push_back(j);
    auto saddle_vertex = [](int saddle) { return saddle - 1; };

    cx.level_edge_cells.assign(2 * q, -1);
    for (const auto& e : out.graph.edges) {
        cx.level_edge_cells[e.id] = (int)cx.one_cells.size();
        cx.one_cells.emplace_back(saddle_vertex(e.target_saddle), saddle_vertex(e.source_saddle));
    }

    std::vector<CircleCells> circles;
    std::map<int, int> circle_cells_of; // execution circle -> index into `circles`

    for (size_t ci = 0; ci < ex.circles.size(); ++ci) {
        const ExecCircle& c = ex.circles[ci];
        if (c.birth_level >= c.death_level)
            continue; // transient circle inside one level, not an interface
        if (c.birth_level == 0 && c.death_level == s + 1)
            fail(Err::internal, "untouched circle in a connected program");
        CircleCells cc;
        cc.circle = (int)ci;
        int n = (int)c.items.size();
        for (int t = 0; t < n; ++t) {
            cc.vertex.push_back(cx.zero_cells++);
        }
        for (int t = 0; t < n; ++t) {
            cc.arc.push_back((int)cx.one_cells.size());
            cx.one_cells.emplace_back(cc.vertex[(t + 1) % n], cc.vertex[t]);
        }

        const bool bottom_glued = c.birth_level >= 1;
        const bool top_glued = c.death_level <= s;
        cc.bot_vert.assign(n, -1);
        cc.top_vert.assign(n, -1);
        for (int t = 0; t < n; ++t) {
            if (bottom_glued) {
                int anchor = forward_scan(c.items, t, [&](const Item& it) {
                    return it.kind == Item::scar && p.partition.level_of(it.a) == c.birth_level;
                });
                cc.bot_vert[t] = (int)cx.one_cells.size();
                cx.one_cells.emplace_back(saddle_vertex(c.items[anchor].a), cc.vertex[t]);
            }
            if (top_glued) {
                int anchor = forward_scan(c.items, t, [&](const Item& it) {
                    return it.kind == Item::token && p.partition.level_of(it.a) == c.death_level;
                });
                cc.top_vert[t] = (int)cx.one_cells.size();
                cx.one_cells.emplace_back(saddle_vertex(c.items[anchor].a), cc.vertex[t]);
            }
        }

        // Cylinder squares: arc on the circle, image chain on the singular
        // level, verticals on the sides. The image is a whole level arc when
        // the item opens one, else the square degenerates to a triangle.
        for (int t = 0; t < n; ++t) {
            const Item& it = c.items[t];
            if (bottom_glued) {
                std::vector<std::pair<int, long long>> b;
                b.emplace_back(cc.arc[t], 1);
                b.emplace_back(cc.bot_vert[(t + 1) % n], 1);
                if (it.kind == Item::scar && p.partition.level_of(it.a) == c.birth_level)
                    b.emplace_back(cx.level_edge_cells[it.c], -1);
                b.emplace_back(cc.bot_vert[t], -1);
                cx.two_cells.push_back(std::move(b));
            }
            if (top_glued) {
                std::vector<std::pair<int, long long>> b;
                b.emplace_back(cc.arc[t], 1);
                b.emplace_back(cc.top_vert[(t + 1) % n], 1);
                if (it.kind == Item::token && p.partition.level_of(it.a) == c.death_level)
                    b.emplace_back(cx.level_edge_cells[mark_index(it.a, it.b)], -1);
                b.emplace_back(cc.top_vert[t], -1);
                cx.two_cells.push_back(std::move(b));
            }
        }
        if (c.birth_level == 0) {
            std::vector<std::pair<int, long long>> b;
            for (int t = 0; t < n; ++t)
                b.emplace_back(cc.arc[t], 1);
            cx.min_disk_cells.push_back((int)cx.two_cells.size());
            cx.two_cells.push_back(std::move(b));
        }
        if (c.death_level == s + 1) {
            std::vector<std::pair<int, long long>> b;
            for (int t = 0; t < n; ++t)
                b.emplace_back(cc.arc[t], 1);
            cx.max_disk_cells.push_back((int)cx.two_cells.size());
            cx.two_cells.push_back(std::move(b));
        }
        circle_cells_of[(int)ci] = (int)circles.size();
        circles.push_back(std::move(cc));
    }

    // Per-level slabs: the surface cut along every regular interface. Each
    // slab re-hosts the circles dying into and born from its singular level.
    for (int k = 1; k <= s; ++k) {
        CellComplex slab;
        std::map<int, int> local_saddle;
        for (int j : p.partition.blocks[k - 1]) {
            local_saddle[j] = slab.zero_cells;
            slab.saddle_vertices.push_back(slab.zero_cells++);
        }
        slab.level_edge_cells.assign(2 * q, -1);
        for (const auto& e : out.graph.edges)
            if (e.level == k) {
                slab.level_edge_cells[e.id] = (int)slab.one_cells.size();
                slab.one_cells.emplace_back(local_saddle[e.target_saddle], local_saddle[e.source_saddle]);
            }

        for (const auto& cc : circles) {
            const ExecCircle& c = ex.circles[cc.circle];
            bool as_bottom = c.death_level == k; // glued up into this level
            bool as_top = c.birth_level == k;    // glued down into this level
            if (!as_bottom && !as_top)
                continue;
            int n = (int)c.items.size();
            std::vector<int> vertex(n), arc(n), vert(n);
            for (int t = 0; t < n; ++t)
                vertex[t] = slab.zero_cells++;
            for (int t = 0; t < n; ++t) {
                arc[t] = (int)slab.one_cells.size();
                slab.one_cells.emplace_back(vertex[(t + 1) % n], vertex[t]);
            }
            for (int t = 0; t < n; ++t) {
                int anchor = as_bottom
                                 ? forward_scan(c.items, t,
                                                [&](const Item& it) {
                                                    return it.kind == Item::token &&
                                                           p.partition.level_of(it.a) == k;
                                                })
                                 : forward_scan(c.items, t, [&](const Item& it) {
                                       return it.kind == Item::scar && p.partition.level_of(it.a) == k;
                                   });
                vert[t] = (int)slab.one_cells.size();
                slab.one_cells.emplace_back(local_saddle[c.items[anchor].a], vertex[t]);
            }
            for (int t = 0; t < n; ++t) {
                const Item& it = c.items[t];
                std::vector<std::pair<int, long long>> b;
                b.emplace_back(arc[t], 1);
                b.emplace_back(vert[(t + 1) % n], 1);
                if (as_bottom && it.kind == Item::token && p.partition.level_of(it.a) == k)
                    b.emplace_back(slab.level_edge_cells[mark_index(it.a, it.b)], -1);
                if (as_top && it.kind == Item::scar && p.partition.level_of(it.a) == k)
                    b.emplace_back(slab.level_edge_cells[it.c], -1);
                b.emplace_back(vert[t], -1);
                slab.two_cells.push_back(std::move(b));
            }
        }
        out.slabs.push_back(std::move(slab));
    }
    return out;
}

namespace {

struct QuotientH1 {
    int free_rank = 0;
    std::vector<long long> torsion;
    IntMat cycle_coords; // rows = requested cycles, cols = free basis
};

// H1 of (complex minus dropped 2-cells) relative to the killed 0-cells,
// with the requested relative cycles expressed in a basis of the free part.
QuotientH1 relative_h1_of(const CellComplex& cx, const std::vector<int>& killed0,
                          const std::vector<int>& dropped2,
                          const std::vector<int>& cycle_one_cells) {
    int n1 = (int)cx.one_cells.size();
    std::vector<int> row_of(cx.zero_cells, -1);
    int rows = 0;
    {
        std::vector<char> killed(cx.zero_cells, 0);
        for (int v : killed0)
            killed[v] = 1;
        for (int v = 0; v < cx.zero_cells; ++v)
            if (!killed[v])
                row_of[v] = rows++;
    }
    IntMat d1(rows, n1);
    for (int j = 0; j < n1; ++j) {
        auto [head, tail] = cx.one_cells[j];
        if (row_of[head] >= 0)
            d1.at(row_of[head], j) = checked_add(d1.at(row_of[head], j), 1);
        if (row_of[tail] >= 0)
            d1.at(row_of[tail], j) = checked_add(d1.at(row_of[tail], j), -1);
    }

    std::vector<char> dropped(cx.two_cells.size(), 0);
    for (int c : dropped2)
        dropped[c] = 1;
    std::vector<int> kept2;
    for (int c = 0; c < (int)cx.two_cells.size(); ++c)
        if (!dropped[c])
            kept2.push_back(c);
    IntMat d2(n1, (int)kept2.size());
    for (int jj = 0; jj < (int)kept2.size(); ++jj)
        for (auto [cell, coeff] : cx.two_cells[kept2[jj]])
            d2.at(cell, jj) = checked_add(d2.at(cell, jj), coeff);

    SmithForm s1 = smith_normal_form(d1);
    int kdim = n1 - s1.rank;
    auto kernel_coords = [&](const std::vector<long long>& chain) {
        std::vector<long long> w = s1.v_inv.mul(chain);
        for (int i = 0; i < s1.rank; ++i)
            if (w[i] != 0)
                fail(Err::internal, "chain is not a relative cycle");
        return std::vector<long long>(w.begin() + s1.rank, w.end());
    };

    IntMat m(kdim, (int)kept2.size());
    for (int jj = 0; jj < (int)kept2.size(); ++jj) {
        std::vector<long long> col(n1, 0);
        for (auto [cell, coeff] : cx.two_cells[kept2[jj]])
            col[cell] = checked_add(col[cell], coeff);
        auto x = kernel_coords(col);
        for (int i = 0; i < kdim; ++i)
            m.at(i, jj) = x[i];
    }
    SmithForm s2 = smith_normal_form(m);

    QuotientH1 out;
    out.free_rank = kdim - s2.rank;
    for (long long d : s2.diag)
        if (d > 1)
            out.torsion.push_back(d);

    out.cycle_coords = IntMat((int)cycle_one_cells.size(), out.free_rank);
    for (size_t zi = 0; zi < cycle_one_cells.size(); ++zi) {
        std::vector<long long> chain(n1, 0);
        chain[cycle_one_cells[zi]] = 1;
        auto y = s2.u.mul(kernel_coords(chain));
        for (int i = 0; i < out.free_rank; ++i)
            out.cycle_coords.at((int)zi, i) = y[s2.rank + i];
    }
    return out;
}

} // namespace

RelativeH1 relative_h1(const SurfaceComplex& complex) {
    const CellComplex& cx = complex.closed;
    const int two_q = (int)cx.level_edge_cells.size();

    std::vector<int> dropped = cx.min_disk_cells;
    dropped.insert(dropped.end(), cx.max_disk_cells.begin(), cx.max_disk_cells.end());
    QuotientH1 honest = relative_h1_of(cx, cx.saddle_vertices, dropped, {});

    RelativeH1 out;
    out.rank = honest.free_rank;
    out.torsion = honest.torsion;
    if (honest.free_rank != two_q || !honest.torsion.empty())
        fail(Err::rank_mismatch, "relative H1 has rank " + std::to_string(honest.free_rank) +
                                     (honest.torsion.empty() ? "" : " plus torsion") + ", expected " +
                                     std::to_string(two_q));

    // Leveled certificate: per-slab quotients, edges expressed in each slab's
    // Smith basis, assembled block-diagonally in mark order.
    out.certificate.matrix = IntMat(two_q, two_q);
    int col_base = 0;
    for (const auto& slab : complex.slabs) {
        std::vector<int> marks;
        for (int mk = 0; mk < two_q; ++mk)
            if (slab.level_edge_cells[mk] >= 0)
                marks.push_back(mk);
        std::vector<int> cycle_cells;
        for (int mk : marks)
            cycle_cells.push_back(slab.level_edge_cells[mk]);
        QuotientH1 local = relative_h1_of(slab, slab.saddle_vertices, {}, cycle_cells);
        if (local.free_rank != (int)marks.size() || !local.torsion.empty())
            fail(Err::rank_mismatch, "slab relative H1 rank " + std::to_string(local.free_rank) +
                                         ", expected " + std::to_string(marks.size()));
        for (size_t i = 0; i < marks.size(); ++i)
            for (int c = 0; c < local.free_rank; ++c)
                out.certificate.matrix.at(marks[i], col_base + c) = local.cycle_coords.at((int)i, c);
        col_base += local.free_rank;
    }
    if (col_base != two_q)
        fail(Err::rank_mismatch, "leveled basis has rank " + std::to_string(col_base));
    out.certificate.determinant = out.certificate.matrix.det();
    return out;
}

std::string matrix_to_csv(const IntMat& m) {
    std::string s;
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (j) s += ",";
            s += std::to_string(m.at(i, j));
        }
        s += "\n";
    }
    return s;
}

std::string matrix_to_json(const IntMat& m) {
    std::string s = "[";
    for (int i = 0; i < m.rows(); ++i) {
        if (i) s += ",";
        s += "[";
        for (int j = 0; j < m.cols(); ++j) {
            if (j) s += ",";
            s += std::to_string(m.at(i, j));
        }
        s += "]";
    }
    return s + "]";
}

} // namespace morse
