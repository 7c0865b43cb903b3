#include "enumerate/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>

#include "support/digest.hpp"
#include "support/errors.hpp"

namespace morse {

void EnumerationQuery::check() const {
    if (!signature.counts_positive())
        fail(Err::invalid_argument, "p, q, r must all be at least 1");
    if (!labels.consistent_with(signature))
        fail(Err::invalid_argument, "label counts inconsistent with signature");
    if (filter_s && (*filter_s < 1 || *filter_s > signature.saddles))
        fail(Err::invalid_argument, "s filter out of range 1..q");
    if (filter_shape) {
        int sum = 0;
        for (int x : *filter_shape) {
            if (x < 1)
                fail(Err::invalid_argument, "shape filter blocks must be nonempty");
            sum += x;
        }
        if (sum != signature.saddles)
            fail(Err::invalid_argument, "shape filter must sum to q");
    }
    if (filter_partition && !filter_partition->well_formed(signature.saddles))
        fail(Err::invalid_argument, "partition filter not a partition of 1..q");
    if (budget <= 0)
        fail(Err::invalid_argument, "budget must be positive");
    if (threads < 1)
        fail(Err::invalid_argument, "threads must be at least 1");
}

std::string EnumerationQuery::str() const {
    std::string s = "p=" + std::to_string(signature.minima) + ",q=" + std::to_string(signature.saddles) +
                    ",r=" + std::to_string(signature.maxima);
    s += ",labels=" + std::to_string(labels.labeled_minima) + "." + std::to_string(labels.labeled_saddles) +
         "." + std::to_string(labels.labeled_maxima) + "/" + std::to_string(labels.fixed_minima) + "." +
         std::to_string(labels.fixed_saddles) + "." + std::to_string(labels.fixed_maxima);
    if (filter_s)
        s += ",s=" + std::to_string(*filter_s);
    if (filter_shape) {
        s += ",shape=";
        for (int x : *filter_shape)
            s += std::to_string(x) + ".";
    }
    if (filter_partition)
        s += ",J=" + filter_partition->str();
    if (filter_genus)
        s += ",genus=" + std::to_string(*filter_genus);
    return s;
}

std::string EnumerationQuery::digest() const { return sha256_hex("enumeration:" + str()); }

std::map<int, long long> ClassSet::s_histogram() const {
    std::map<int, long long> h;
    for (const auto& c : classes)
        h[c.s_value]++;
    return h;
}

const CanonicalClass* ClassSet::find(const std::string& class_id) const {
    auto it = std::lower_bound(classes.begin(), classes.end(), class_id,
                               [](const CanonicalClass& c, const std::string& id) { return c.class_id < id; });
    if (it != classes.end() && it->class_id == class_id)
        return &*it;
    return nullptr;
}

namespace {

// Compositions of n into k positive parts.
std::vector<std::vector<int>> compositions(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int parts) {
        if (parts == 1) {
            if (left >= 1) {
                cur.push_back(left);
                out.push_back(cur);
                cur.pop_back();
            }
            return;
        }
        for (int first = 1; first + (parts - 1) <= left; ++first) {
            cur.push_back(first);
            rec(left - first, parts - 1);
            cur.pop_back();
        }
    };
    if (k >= 1)
        rec(n, k);
    return out;
}

bool is_minimal_rotation(const std::vector<int>& w) {
    int L = (int)w.size();
    for (int r = 1; r < L; ++r)
        for (int k = 0; k < L; ++k) {
            int a = w[(k + r) % L], b = w[k];
            if (a != b) {
                if (a < b)
                    return false; // some rotation is smaller
                break;
            }
        }
    return true;
}

struct WorkItem {
    OrderedPartition partition;
    std::vector<int> composition;
};

// All ways to spread the token multiset {1,1,...,q,q} over circle words of the
// given sizes. Circle words are restricted to minimal rotations; classes are
// closed under rotation so nothing is lost.
void for_each_word_system(int q, const std::vector<int>& sizes,
                          const std::function<void(const std::vector<std::vector<int>>&)>& fn) {
    std::vector<int> tokens;
    for (int j = 1; j <= q; ++j) {
        tokens.push_back(j);
        tokens.push_back(j);
    }
    std::sort(tokens.begin(), tokens.end());
    std::vector<std::vector<int>> words(sizes.size());
    do {
        size_t pos = 0;
        bool ok = true;
        for (size_t i = 0; i < sizes.size() && ok; ++i) {
            words[i].assign(tokens.begin() + pos, tokens.begin() + pos + sizes[i]);
            pos += sizes[i];
            if (!is_minimal_rotation(words[i]))
                ok = false;
        }
        if (ok)
            fn(words);
    } while (std::next_permutation(tokens.begin(), tokens.end()));
}

} // namespace

ClassSet enumerate_classes(const EnumerationQuery& query) {
    query.check();
    ClassSet out;
    out.query = query;

    const int p = query.signature.minima, q = query.signature.saddles, r = query.signature.maxima;
    if (query.signature.euler_char() % 2 != 0 || query.signature.euler_char() > 2)
        return out; // no closed oriented surface with these counts
    if (query.filter_genus && *query.filter_genus != query.signature.genus())
        return out;
    if (2 * q < p) // every circle needs at least one mark or the trace is disconnected
        return out;

    std::vector<OrderedPartition> partitions;
    for (auto& j : OrderedPartition::all(q)) {
        if (query.filter_s && j.levels() != *query.filter_s)
            continue;
        if (query.filter_partition && !(j == *query.filter_partition))
            continue;
        if (query.filter_shape) {
            std::vector<int> shape;
            for (const auto& b : j.blocks)
                shape.push_back((int)b.size());
            if (shape != *query.filter_shape)
                continue;
        }
        partitions.push_back(std::move(j));
    }

    std::vector<WorkItem> items;
    for (const auto& part : partitions)
        for (auto& comp : compositions(2 * q, p))
            items.push_back({part, std::move(comp)});

    std::atomic<long long> nodes{0};
    std::atomic<bool> over_budget{false};
    std::atomic<size_t> next_item{0};
    std::vector<std::vector<CanonicalClass>> results(std::max(1, query.threads));

    auto worker = [&](int wid) {
        std::vector<int> caps_id(r);
        while (true) {
            size_t idx = next_item.fetch_add(1);
            if (idx >= items.size() || over_budget.load())
                return;
            const WorkItem& item = items[idx];
            for_each_word_system(q, item.composition, [&](const std::vector<std::vector<int>>& words) {
                if (over_budget.load())
                    return;
                Program prog;
                prog.signature = query.signature;
                prog.labels = query.labels;
                prog.partition = item.partition;
                prog.circles = words;
                for (int i = 0; i < r; ++i)
                    caps_id[i] = i + 1;
                prog.caps = caps_id;
                if (nodes.fetch_add(1) + 1 > query.budget) {
                    over_budget.store(true);
                    return;
                }
                Execution ex = execute(prog);
                if ((int)ex.finals.size() != r || !ex.connected)
                    return;
                std::vector<int> caps(r);
                for (int i = 0; i < r; ++i)
                    caps[i] = i + 1;
                do {
                    prog.caps = caps;
                    if (nodes.fetch_add(1) + 1 > query.budget) {
                        over_budget.store(true);
                        return;
                    }
                    results[wid].push_back(canonical_form(prog).cls);
                } while (std::next_permutation(caps.begin(), caps.end()));
            });
        }
    };

    if (query.threads <= 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < query.threads; ++t)
            pool.emplace_back(worker, t);
        for (auto& th : pool)
            th.join();
    }
    if (over_budget.load())
        fail(Err::budget_exceeded, "enumeration node budget of " + std::to_string(query.budget) + " exceeded");

    for (auto& part : results)
        out.classes.insert(out.classes.end(), part.begin(), part.end());
    std::sort(out.classes.begin(), out.classes.end(),
              [](const CanonicalClass& a, const CanonicalClass& b) { return a.class_id < b.class_id; });
    out.classes.erase(std::unique(out.classes.begin(), out.classes.end(),
                                  [](const CanonicalClass& a, const CanonicalClass& b) {
                                      return a.class_id == b.class_id;
                                  }),
                      out.classes.end());
    return out;
}

std::map<int, long long> count_by_saddle_levels(const EnumerationQuery& query) {
    return enumerate_classes(query).s_histogram();
}

Program refine_order(const Program& program, const OrderedPartition& finer) {
    if (!finer.refines(program.partition))
        fail(Err::not_a_refinement, "partition " + finer.str() + " does not refine " + program.partition.str());
    Program out = program;
    out.partition = finer;
    out.caps.clear();

    // Same surgeries, new execution order: re-key caps through the gap sets.
    Execution old_ex = execute(program);
    std::map<std::vector<std::pair<int, int>>, int> by_gaps;
    for (size_t t = 0; t < old_ex.finals.size(); ++t)
        by_gaps[old_ex.circles[old_ex.finals[t]].gap_set()] =
            t < program.caps.size() ? program.caps[t] : 0;
    Execution new_ex = execute(out);
    for (int fi : new_ex.finals) {
        auto it = by_gaps.find(new_ex.circles[fi].gap_set());
        if (it == by_gaps.end())
            fail(Err::internal, "gap sets changed under re-leveling");
        out.caps.push_back(it->second);
    }
    return out;
}

CanonicalResult delta_with_maps(const CanonicalClass& cls, const OrderedPartition& finer) {
    return canonical_form(refine_order(cls.canonical_program, finer));
}

CanonicalClass delta(const CanonicalClass& cls, const OrderedPartition& finer) {
    return delta_with_maps(cls, finer).cls;
}

Program random_valid_program(Prng& rng, const SurfaceSignature& sig, const LabelSpec& labels) {
    const int p = sig.minima, q = sig.saddles, r = sig.maxima;
    for (int attempt = 0; attempt < 100000; ++attempt) {
        Program prog;
        prog.signature = sig;
        prog.labels = labels;
        auto parts = OrderedPartition::all(q);
        prog.partition = parts[rng.below(parts.size())];
        prog.circles.assign(p, {});
        std::vector<int> tokens;
        for (int j = 1; j <= q; ++j) {
            tokens.push_back(j);
            tokens.push_back(j);
        }
        for (int i = (int)tokens.size() - 1; i > 0; --i)
            std::swap(tokens[i], tokens[rng.below(i + 1)]);
        for (int t = 0; t < (int)tokens.size(); ++t) {
            // keep every circle nonempty by seeding the first p tokens round-robin
            int circle = t < p ? t : (int)rng.below(p);
            auto& w = prog.circles[circle];
            w.insert(w.begin() + rng.below(w.size() + 1), tokens[t]);
        }
        prog.caps.resize(r);
        for (int i = 0; i < r; ++i)
            prog.caps[i] = i + 1;
        for (int i = r - 1; i > 0; --i)
            std::swap(prog.caps[i], prog.caps[rng.below(i + 1)]);
        Execution ex = execute(prog);
        if ((int)ex.finals.size() == r && ex.connected)
            return prog;
    }
    fail(Err::internal, "random program sampling failed to find a valid program");
}

Program random_valid_program(Prng& rng, int max_saddles) {
    while (true) {
        int q = 1 + (int)rng.below(max_saddles);
        int genus = (int)rng.below(3);
        int chi = 2 - 2 * genus;
        if (chi + q - 1 < 1)
            continue;
        int p = 1 + (int)rng.below(chi + q - 1);
        int r = chi - p + q;
        if (r < 1 || 2 * q < p)
            continue;
        SurfaceSignature sig{p, q, r};
        LabelSpec labels = rng.below(2) ? LabelSpec::all_labeled(sig) : LabelSpec::none();
        return random_valid_program(rng, sig, labels);
    }
}

} // namespace morse
