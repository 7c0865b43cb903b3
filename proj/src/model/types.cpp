#include "model/types.hpp"

#include <algorithm>
#include <set>

#include "support/errors.hpp"

namespace morse {

int SurfaceSignature::genus() const {
    int chi = euler_char();
    if (chi % 2 != 0)
        fail(Err::internal, "odd Euler characteristic: no closed oriented surface");
    if (chi > 2)
        fail(Err::internal, "Euler characteristic above 2: genus would be negative");
    return (2 - chi) / 2;
}

bool LabelSpec::consistent_with(const SurfaceSignature& sig) const {
    auto ok = [](int fixed, int labeled, int count) {
        return 0 <= fixed && fixed <= labeled && labeled <= count;
    };
    return ok(fixed_minima, labeled_minima, sig.minima) &&
           ok(fixed_saddles, labeled_saddles, sig.saddles) &&
           ok(fixed_maxima, labeled_maxima, sig.maxima);
}

LabelSpec LabelSpec::all_labeled(const SurfaceSignature& sig) {
    LabelSpec l;
    l.labeled_minima = sig.minima;
    l.labeled_saddles = sig.saddles;
    l.labeled_maxima = sig.maxima;
    return l;
}

int OrderedPartition::total() const {
    int n = 0;
    for (const auto& b : blocks)
        n += (int)b.size();
    return n;
}

bool OrderedPartition::well_formed(int q) const {
    std::set<int> seen;
    for (const auto& b : blocks) {
        if (b.empty())
            return false;
        if (!std::is_sorted(b.begin(), b.end()))
            return false;
        for (int x : b) {
            if (x < 1 || x > q || !seen.insert(x).second)
                return false;
        }
    }
    return (int)seen.size() == q;
}

int OrderedPartition::level_of(int saddle) const {
    for (int k = 0; k < (int)blocks.size(); ++k)
        if (std::binary_search(blocks[k].begin(), blocks[k].end(), saddle))
            return k + 1;
    return 0;
}

bool OrderedPartition::refines(const OrderedPartition& coarser) const {
    size_t i = 0;
    for (const auto& big : coarser.blocks) {
        std::vector<int> merged;
        while (merged.size() < big.size()) {
            if (i >= blocks.size())
                return false;
            merged.insert(merged.end(), blocks[i].begin(), blocks[i].end());
            ++i;
        }
        std::sort(merged.begin(), merged.end());
        if (merged != big)
            return false;
    }
    return i == blocks.size();
}

OrderedPartition OrderedPartition::single_block(int q) {
    OrderedPartition j;
    j.blocks.emplace_back();
    for (int i = 1; i <= q; ++i)
        j.blocks.back().push_back(i);
    return j;
}

OrderedPartition OrderedPartition::singletons(int q) {
    OrderedPartition j;
    for (int i = 1; i <= q; ++i)
        j.blocks.push_back({i});
    return j;
}

namespace {

// Ordered set partitions of an arbitrary sorted set.
void ordered_partitions_of(const std::vector<int>& set, std::vector<std::vector<std::vector<int>>>& out) {
    if (set.empty()) {
        out.push_back({});
        return;
    }
    int n = (int)set.size();
    // Choose the first block = any nonempty subset, recurse on the rest.
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> first, rest;
        for (int i = 0; i < n; ++i)
            ((mask >> i) & 1 ? first : rest).push_back(set[i]);
        std::vector<std::vector<std::vector<int>>> tails;
        ordered_partitions_of(rest, tails);
        for (auto& t : tails) {
            std::vector<std::vector<int>> p;
            p.push_back(first);
            p.insert(p.end(), t.begin(), t.end());
            out.push_back(std::move(p));
        }
    }
}

} // namespace

std::vector<OrderedPartition> OrderedPartition::all(int q) {
    std::vector<int> set;
    for (int i = 1; i <= q; ++i)
        set.push_back(i);
    std::vector<std::vector<std::vector<int>>> raw;
    ordered_partitions_of(set, raw);
    std::vector<OrderedPartition> out;
    for (auto& p : raw)
        out.push_back(OrderedPartition{std::move(p)});
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<OrderedPartition> OrderedPartition::refinements() const {
    // Per block: all ordered partitions of that block; then the product,
    // concatenated in block order.
    std::vector<std::vector<std::vector<std::vector<int>>>> per_block;
    for (const auto& b : blocks) {
        std::vector<std::vector<std::vector<int>>> subs;
        ordered_partitions_of(b, subs);
        per_block.push_back(std::move(subs));
    }
    std::vector<OrderedPartition> out;
    std::vector<size_t> idx(blocks.size(), 0);
    while (true) {
        OrderedPartition j;
        for (size_t k = 0; k < blocks.size(); ++k)
            for (const auto& sub : per_block[k][idx[k]])
                j.blocks.push_back(sub);
        out.push_back(std::move(j));
        size_t k = 0;
        while (k < idx.size() && ++idx[k] == per_block[k].size()) {
            idx[k] = 0;
            ++k;
        }
        if (k == idx.size())
            break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<OrderedPartition> OrderedPartition::proper_refinements() const {
    auto all = refinements();
    std::vector<OrderedPartition> out;
    for (auto& j : all)
        if (!(j == *this))
            out.push_back(std::move(j));
    return out;
}

std::string OrderedPartition::str() const {
    std::string s = "(";
    for (size_t k = 0; k < blocks.size(); ++k) {
        if (k) s += "|";
        for (size_t i = 0; i < blocks[k].size(); ++i) {
            if (i) s += ",";
            s += std::to_string(blocks[k][i]);
        }
    }
    return s + ")";
}

} // namespace morse
