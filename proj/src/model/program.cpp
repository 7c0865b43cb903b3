#include "model/program.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "support/errors.hpp"

namespace morse {

std::string ValidationReport::summary() const {
    std::string s;
    for (const auto& v : violations) {
        if (!s.empty()) s += "; ";
        s += v.code;
        if (!v.detail.empty()) s += " (" + v.detail + ")";
    }
    return s;
}

bool Program::operator<(const Program& o) const {
    return std::tie(partition.blocks, circles, caps) < std::tie(o.partition.blocks, o.circles, o.caps);
}

RawProgram Program::raw() const {
    RawProgram r;
    r.signature = signature;
    r.labels = labels;
    r.partition = partition;
    int next_mark = 1;
    std::map<int, std::array<int, 2>> moves;
    std::map<int, int> seen;
    for (size_t i = 0; i < circles.size(); ++i) {
        RawProgram::Circle c;
        c.minimum = (int)i + 1;
        for (int saddle : circles[i]) {
            int id = next_mark++;
            c.marks.push_back(id);
            moves[saddle][seen[saddle]++] = id;
        }
        r.circles.push_back(std::move(c));
    }
    r.moves = std::move(moves);
    r.caps = caps;
    return r;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace

ValidationReport validate_program(const RawProgram& raw) {
    ValidationReport rep;
    auto bad = [&rep](const std::string& code, const std::string& detail) {
        rep.violations.push_back({code, detail});
    };

    const int p = raw.signature.minima, q = raw.signature.saddles, r = raw.signature.maxima;
    if (!raw.signature.counts_positive())
        bad("bad signature", "p, q, r must all be at least 1");
    if (!raw.labels.consistent_with(raw.signature))
        bad("bad labels", "need 0 <= fixed <= labeled <= count per index");
    if (!raw.partition.well_formed(q))
        bad("bad partition", "blocks must be disjoint, nonempty and cover 1..q");

    if ((int)raw.circles.size() != p)
        bad("circle count mismatch", std::to_string(raw.circles.size()) + " circles for p=" + std::to_string(p));
    std::set<int> mins;
    for (const auto& c : raw.circles)
        if (c.minimum < 1 || c.minimum > p || !mins.insert(c.minimum).second)
            bad("bad minimum tag", "circle tags must be a permutation of 1..p");

    // Marks must be globally unique and each consumed by exactly one saddle.
    std::map<int, int> mark_owner; // mark id -> saddle, 0 = unclaimed
    bool marks_ok = true;
    for (const auto& c : raw.circles)
        for (int m : c.marks)
            if (!mark_owner.emplace(m, 0).second) {
                bad("duplicate mark id", "mark " + std::to_string(m));
                marks_ok = false;
            }
    for (int j = 1; j <= q; ++j) {
        auto it = raw.moves.find(j);
        if (it == raw.moves.end()) {
            bad("missing move", "saddle " + std::to_string(j));
            marks_ok = false;
            continue;
        }
        for (int m : it->second) {
            auto own = mark_owner.find(m);
            if (own == mark_owner.end()) {
                bad("unknown mark", "saddle " + std::to_string(j) + " references mark " + std::to_string(m));
                marks_ok = false;
            } else if (own->second != 0) {
                bad("level marks not disjoint",
                    "mark " + std::to_string(m) + " used by saddles " + std::to_string(own->second) + " and " +
                        std::to_string(j));
                marks_ok = false;
            } else {
                own->second = j;
            }
        }
        if (it->second[0] == it->second[1]) {
            bad("degenerate move", "saddle " + std::to_string(j) + " uses one mark twice");
            marks_ok = false;
        }
    }
    for (auto& [j, _] : raw.moves)
        if (j < 1 || j > q)
            bad("unknown saddle", "move for saddle " + std::to_string(j));
    for (auto& [m, owner] : mark_owner)
        if (owner == 0)
            bad("unused mark", "mark " + std::to_string(m));

    if (!rep.ok() || !marks_ok)
        return rep; // structure too broken to execute

    // Assemble the word form and run it.
    Program prog;
    prog.signature = raw.signature;
    prog.labels = raw.labels;
    prog.partition = raw.partition;
    prog.circles.resize(p);
    for (const auto& c : raw.circles) {
        auto& word = prog.circles[c.minimum - 1];
        for (int m : c.marks)
            word.push_back(mark_owner[m]);
    }
    prog.caps = raw.caps;

    Execution ex = execute(prog);
    if ((int)ex.finals.size() != r)
        bad("cap count mismatch",
            std::to_string(ex.finals.size()) + " circles remain, " + std::to_string(r) + " maxima");
    if ((int)raw.caps.size() != (int)ex.finals.size())
        bad("cap count mismatch", "caps lists " + std::to_string(raw.caps.size()) + " entries");
    std::set<int> maxs(raw.caps.begin(), raw.caps.end());
    if ((int)maxs.size() != (int)raw.caps.size() ||
        (!raw.caps.empty() && (*maxs.begin() < 1 || *maxs.rbegin() > r)))
        bad("bad cap ids", "caps must be a permutation of 1..r");
    if (!ex.connected)
        bad("disconnected trace", "the traced surface is not connected");
    return rep;
}

Program check_program(const RawProgram& raw) {
    ValidationReport rep = validate_program(raw);
    if (!rep.ok())
        fail(Err::invalid_program, rep.summary());
    Program prog;
    prog.signature = raw.signature;
    prog.labels = raw.labels;
    prog.partition = raw.partition;
    prog.circles.resize(raw.signature.minima);
    std::map<int, int> owner;
    for (const auto& [j, marks] : raw.moves)
        for (int m : marks)
            owner[m] = j;
    for (const auto& c : raw.circles)
        for (int m : c.marks)
            prog.circles[c.minimum - 1].push_back(owner[m]);
    prog.caps = raw.caps;
    return prog;
}

std::vector<std::pair<int, int>> ExecCircle::gap_set() const {
    std::vector<std::pair<int, int>> g;
    for (const auto& it : items)
        if (it.kind == Item::gap)
            g.emplace_back(it.a, it.b);
    std::sort(g.begin(), g.end());
    return g;
}

Execution execute(const Program& p) {
    const int q = p.signature.saddles;
    Execution ex;
    std::vector<int> alive;

    std::map<int, int> occ_count;
    for (size_t i = 0; i < p.circles.size(); ++i) {
        ExecCircle c;
        c.birth_level = 0;
        const auto& word = p.circles[i];
        for (size_t k = 0; k < word.size(); ++k) {
            c.items.push_back(Item{Item::token, word[k], occ_count[word[k]]++, 0});
            c.items.push_back(Item{Item::gap, (int)i, (int)k, 0});
        }
        alive.push_back((int)ex.circles.size());
        ex.circles.push_back(std::move(c));
    }

    UnionFind uf(p.signature.minima + q + p.signature.maxima);
    std::vector<int> node; // union-find node carried by each circle
    for (int i = 0; i < (int)p.circles.size(); ++i)
        node.push_back(i);
    auto saddle_node = [&](int j) { return p.signature.minima + j - 1; };
    auto max_node = [&](int m) { return p.signature.minima + q + m - 1; };

    const int s = p.partition.levels();
    ex.alive_before.assign(s + 1, {});

    auto find_token = [&](int saddle, int occ) -> std::pair<int, int> {
        for (int ci : alive) {
            const auto& items = ex.circles[ci].items;
            for (size_t t = 0; t < items.size(); ++t)
                if (items[t].kind == Item::token && items[t].a == saddle && items[t].b == occ)
                    return {ci, (int)t};
        }
        fail(Err::internal, "token not found during execution");
    };

    for (int k = 1; k <= s; ++k) {
        ex.alive_before[k] = alive;
        for (int j : p.partition.blocks[k - 1]) {
            auto [c0, t0] = find_token(j, 0);
            auto [c1, t1] = find_token(j, 1);
            auto strictly_between = [&](const std::vector<Item>& v, int from, int to) {
                std::vector<Item> out;
                for (int t = (from + 1) % (int)v.size(); t != to; t = (t + 1) % (int)v.size())
                    out.push_back(v[t]);
                return out;
            };
            if (c0 == c1) {
                // Split: each side closes up with a scar where the saddle sat.
                const auto& v = ex.circles[c0].items;
                ExecCircle a, b;
                a.items = strictly_between(v, t0, t1);
                a.items.push_back(Item{Item::scar, j, 0, mark_index(j, 0)});
                b.items = strictly_between(v, t1, t0);
                b.items.push_back(Item{Item::scar, j, 1, mark_index(j, 1)});
                a.birth_level = b.birth_level = k;
                ex.circles[c0].death_level = k;
                uf.unite(saddle_node(j), node[c0]);
                alive.erase(std::find(alive.begin(), alive.end(), c0));
                node.push_back(saddle_node(j));
                alive.push_back((int)ex.circles.size());
                ex.circles.push_back(std::move(a));
                node.push_back(saddle_node(j));
                alive.push_back((int)ex.circles.size());
                ex.circles.push_back(std::move(b));
            } else {
                // Merge: concatenate the two cut circles, scars at the joints.
                // The run after scar side 0 is occurrence 1's material, so the
                // following level edge is e(j,1), and symmetrically.
                const auto& v0 = ex.circles[c0].items;
                const auto& v1 = ex.circles[c1].items;
                ExecCircle m;
                auto cut = [&](const std::vector<Item>& v, int t) {
                    std::vector<Item> out;
                    for (int x = (t + 1) % (int)v.size(); x != t; x = (x + 1) % (int)v.size())
                        out.push_back(v[x]);
                    return out;
                };
                auto part0 = cut(v0, t0), part1 = cut(v1, t1);
                m.items = std::move(part0);
                m.items.push_back(Item{Item::scar, j, 0, mark_index(j, 1)});
                m.items.insert(m.items.end(), part1.begin(), part1.end());
                m.items.push_back(Item{Item::scar, j, 1, mark_index(j, 0)});
                m.birth_level = k;
                ex.circles[c0].death_level = k;
                ex.circles[c1].death_level = k;
                uf.unite(saddle_node(j), node[c0]);
                uf.unite(saddle_node(j), node[c1]);
                alive.erase(std::find(alive.begin(), alive.end(), c0));
                alive.erase(std::find(alive.begin(), alive.end(), c1));
                node.push_back(saddle_node(j));
                alive.push_back((int)ex.circles.size());
                ex.circles.push_back(std::move(m));
            }
        }
    }

    ex.finals = alive;
    for (size_t t = 0; t < ex.finals.size(); ++t) {
        ex.circles[ex.finals[t]].death_level = s + 1;
        if (t < p.caps.size() && p.caps[t] >= 1 && p.caps[t] <= p.signature.maxima)
            uf.unite(max_node(p.caps[t]), node[ex.finals[t]]);
    }
    int root = uf.find(0);
    ex.connected = true;
    for (int i = 0; i < p.signature.minima + q + p.signature.maxima; ++i)
        if (uf.find(i) != root) {
            ex.connected = false;
            break;
        }
    return ex;
}

SurfaceSignature surface_signature(const Program& p) {
    SurfaceSignature sig = p.signature;
    sig.genus(); // throws on odd chi or chi > 2; impossible for valid programs
    return sig;
}

} // namespace morse
