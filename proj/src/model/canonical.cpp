#include "model/canonical.hpp"

#include <algorithm>
#include <map>

#include "support/digest.hpp"
#include "support/errors.hpp"

namespace morse {

GroupMove GroupMove::identity(const Program& p) {
    GroupMove m;
    for (int i = 1; i <= p.signature.minima; ++i) m.min_perm.push_back(i);
    for (int i = 1; i <= p.signature.saddles; ++i) m.sad_perm.push_back(i);
    for (int i = 1; i <= p.signature.maxima; ++i) m.max_perm.push_back(i);
    m.rotations.assign(p.circles.size(), 0);
    return m;
}

bool GroupMove::is_identity() const {
    for (size_t i = 0; i < min_perm.size(); ++i)
        if (min_perm[i] != (int)i + 1) return false;
    for (size_t i = 0; i < sad_perm.size(); ++i)
        if (sad_perm[i] != (int)i + 1) return false;
    for (size_t i = 0; i < max_perm.size(); ++i)
        if (max_perm[i] != (int)i + 1) return false;
    for (int r : rotations)
        if (r != 0) return false;
    return true;
}

namespace {

// Occurrence index (0/1) of every word position, scanning circles in order.
std::vector<std::vector<int>> occurrence_table(const Program& p) {
    std::map<int, int> count;
    std::vector<std::vector<int>> occ(p.circles.size());
    for (size_t i = 0; i < p.circles.size(); ++i)
        for (int saddle : p.circles[i])
            occ[i].push_back(count[saddle]++);
    return occ;
}

} // namespace

MoveResult apply_move(const Program& p, const GroupMove& m) {
    const int q = p.signature.saddles;
    MoveResult out;
    out.program.signature = p.signature;
    out.program.labels = p.labels;

    out.program.circles.resize(p.circles.size());
    for (size_t i = 0; i < p.circles.size(); ++i) {
        const auto& w = p.circles[i];
        int L = (int)w.size();
        auto& nw = out.program.circles[m.min_perm[i] - 1];
        nw.resize(L);
        for (int k = 0; k < L; ++k)
            nw[k] = m.sad_perm[w[(k + m.rotations[i]) % std::max(L, 1)] - 1];
    }

    out.program.partition.blocks.reserve(p.partition.blocks.size());
    for (const auto& b : p.partition.blocks) {
        std::vector<int> nb;
        for (int x : b)
            nb.push_back(m.sad_perm[x - 1]);
        std::sort(nb.begin(), nb.end());
        out.program.partition.blocks.push_back(std::move(nb));
    }

    // Caps ride along the move: match final circles through their gap sets,
    // with gaps transported by the explicit position map.
    Execution old_ex = execute(p);
    std::map<std::vector<std::pair<int, int>>, int> transported;
    for (size_t t = 0; t < old_ex.finals.size(); ++t) {
        auto gaps = old_ex.circles[old_ex.finals[t]].gap_set();
        for (auto& g : gaps) {
            int L = (int)p.circles[g.first].size();
            g = {m.min_perm[g.first] - 1, ((g.second - m.rotations[g.first]) % L + L) % L};
        }
        std::sort(gaps.begin(), gaps.end());
        int cap = t < p.caps.size() ? p.caps[t] : 0;
        transported[gaps] = cap >= 1 && cap <= (int)m.max_perm.size() ? m.max_perm[cap - 1] : cap;
    }
    Execution new_ex = execute(out.program);
    for (int fi : new_ex.finals) {
        auto it = transported.find(new_ex.circles[fi].gap_set());
        if (it == transported.end())
            fail(Err::internal, "gap sets did not match under re-encoding move");
        out.program.caps.push_back(it->second);
    }

    // Mark map: position transport plus fresh occurrence numbering.
    auto old_occ = occurrence_table(p);
    auto new_occ = occurrence_table(out.program);
    out.mark_map.assign(2 * q, -1);
    for (size_t i = 0; i < p.circles.size(); ++i) {
        int L = (int)p.circles[i].size();
        for (int k = 0; k < L; ++k) {
            int ni = m.min_perm[i] - 1;
            int nk = ((k - m.rotations[i]) % L + L) % L;
            out.mark_map[mark_index(p.circles[i][k], old_occ[i][k])] =
                mark_index(out.program.circles[ni][nk], new_occ[ni][nk]);
        }
    }
    return out;
}

namespace {

std::vector<std::vector<int>> tail_permutations(int n, int fixed) {
    std::vector<int> tail;
    for (int i = fixed + 1; i <= n; ++i)
        tail.push_back(i);
    std::vector<std::vector<int>> out;
    do {
        std::vector<int> perm;
        for (int i = 1; i <= fixed; ++i)
            perm.push_back(i);
        perm.insert(perm.end(), tail.begin(), tail.end());
        out.push_back(std::move(perm));
    } while (std::next_permutation(tail.begin(), tail.end()));
    return out;
}

} // namespace

void for_each_move(const Program& p, const std::function<bool(const GroupMove&)>& fn) {
    auto min_perms = tail_permutations(p.signature.minima, p.labels.labeled_minima);
    auto sad_perms = tail_permutations(p.signature.saddles, p.labels.labeled_saddles);
    auto max_perms = tail_permutations(p.signature.maxima, p.labels.labeled_maxima);
    std::vector<int> rot(p.circles.size(), 0);
    for (const auto& mp : min_perms)
        for (const auto& sp : sad_perms)
            for (const auto& xp : max_perms) {
                std::fill(rot.begin(), rot.end(), 0);
                while (true) {
                    GroupMove m{mp, sp, xp, rot};
                    if (!fn(m))
                        return;
                    size_t i = 0;
                    while (i < rot.size()) {
                        int L = std::max<int>(1, (int)p.circles[i].size());
                        if (++rot[i] < L)
                            break;
                        rot[i] = 0;
                        ++i;
                    }
                    if (i == rot.size())
                        break;
                }
            }
}

std::string class_digest(const Program& c) {
    std::string s;
    auto put = [&s](int v) { s += std::to_string(v); s += ','; };
    put(c.signature.minima); put(c.signature.saddles); put(c.signature.maxima);
    put(c.labels.labeled_minima); put(c.labels.labeled_saddles); put(c.labels.labeled_maxima);
    put(c.labels.fixed_minima); put(c.labels.fixed_saddles); put(c.labels.fixed_maxima);
    s += 'J';
    for (const auto& b : c.partition.blocks) {
        for (int x : b) put(x);
        s += '|';
    }
    s += 'C';
    for (const auto& w : c.circles) {
        for (int x : w) put(x);
        s += '|';
    }
    s += 'K';
    for (int x : c.caps) put(x);
    return sha256_hex(s);
}

CanonicalResult canonical_form(const Program& p) {
    bool have = false;
    MoveResult best;
    GroupMove best_move;
    auto key = [](const Program& prog) {
        return std::tie(prog.partition.blocks, prog.circles, prog.caps);
    };
    for_each_move(p, [&](const GroupMove& m) {
        MoveResult r = apply_move(p, m);
        if (!have || key(r.program) < key(best.program)) {
            best = std::move(r);
            best_move = m;
            have = true;
        }
        return true;
    });
    CanonicalResult out;
    out.cls.canonical_program = best.program;
    out.cls.class_id = class_digest(best.program);
    out.cls.s_value = best.program.partition.levels();
    out.cls.partition = best.program.partition;
    out.move = best_move;
    out.mark_map = best.mark_map;
    return out;
}

bool AutomorphismGroup::Element::is_identity() const {
    for (size_t i = 0; i < saddle_perm.size(); ++i)
        if (saddle_perm[i] != (int)i + 1) return false;
    for (size_t i = 0; i < edge_perm.size(); ++i)
        if (edge_perm[i] != (int)i) return false;
    return true;
}

bool AutomorphismGroup::contains(const Element& e) const {
    for (const auto& g : elements)
        if (g.saddle_perm == e.saddle_perm && g.edge_perm == e.edge_perm)
            return true;
    return false;
}

AutomorphismGroup::Element AutomorphismGroup::compose(const Element& a, const Element& b) const {
    Element c;
    c.saddle_perm.resize(a.saddle_perm.size());
    c.edge_perm.resize(a.edge_perm.size());
    for (size_t i = 0; i < a.saddle_perm.size(); ++i)
        c.saddle_perm[i] = b.saddle_perm[a.saddle_perm[i] - 1];
    for (size_t i = 0; i < a.edge_perm.size(); ++i)
        c.edge_perm[i] = b.edge_perm[a.edge_perm[i]];
    return c;
}

AutomorphismGroup::Element AutomorphismGroup::inverse(const Element& e) const {
    Element inv;
    inv.saddle_perm.resize(e.saddle_perm.size());
    inv.edge_perm.resize(e.edge_perm.size());
    for (size_t i = 0; i < e.saddle_perm.size(); ++i)
        inv.saddle_perm[e.saddle_perm[i] - 1] = (int)i + 1;
    for (size_t i = 0; i < e.edge_perm.size(); ++i)
        inv.edge_perm[e.edge_perm[i]] = (int)i;
    return inv;
}

AutomorphismGroup automorphism_group(const CanonicalClass& cls) {
    const Program& c = cls.canonical_program;
    AutomorphismGroup g;
    for_each_move(c, [&](const GroupMove& m) {
        MoveResult r = apply_move(c, m);
        if (r.program == c) {
            AutomorphismGroup::Element e{m.sad_perm, r.mark_map};
            if (!g.contains(e))
                g.elements.push_back(std::move(e));
        }
        return true;
    });
    return g;
}

} // namespace morse
