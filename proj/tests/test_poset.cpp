#include <doctest.h>

#include <algorithm>

#include "poset/poset.hpp"
#include "support/errors.hpp"

using namespace morse;

namespace {

ClassSet full_labeled(int p, int q, int r) {
    EnumerationQuery query;
    query.signature = {p, q, r};
    query.labels = LabelSpec::all_labeled(query.signature);
    return enumerate_classes(query);
}

} // namespace

TEST_CASE("one-saddle poset has no edges and dimension 3q everywhere") {
    StrataPoset poset = build_poset(full_labeled(2, 1, 1));
    CHECK(poset.edges.empty());
    for (const auto& n : poset.nodes)
        CHECK(n.dim == 3); // s + 2q = 1 + 2 = 3q
}

TEST_CASE("poset dimensions, filtration and neighborhoods at two saddles") {
    ClassSet classes = full_labeled(2, 2, 2);
    StrataPoset poset = build_poset(classes);
    const int q = 2;
    for (const auto& n : poset.nodes) {
        CHECK(n.dim == n.cls.s_value + 2 * q);
        CHECK(n.dim <= 3 * q);
    }
    int top = 0;
    for (const auto& n : poset.nodes)
        if (n.dim == 3 * q)
            ++top;
    CHECK(top > 0);

    // edges strictly increase s; top strata have no outgoing edges
    for (const auto& e : poset.edges) {
        CHECK(poset.nodes[e.to].cls.s_value > poset.nodes[e.from].cls.s_value);
        CHECK(!e.witnesses.empty());
        for (const auto& w : e.witnesses)
            CHECK(w.refines(poset.nodes[e.from].cls.partition));
    }

    CHECK(filtration(poset, 1).size() == poset.nodes.size());
    CHECK(filtration(poset, q + 1).empty());
    auto deep = filtration(poset, 2);
    for (int i : deep)
        CHECK(poset.nodes[i].dim == 6);
    CHECK_THROWS_AS(filtration(poset, 0), MorseError);

    // neighborhoods: top strata are singletons; the union covers everything
    std::set<int> covered;
    for (int i = 0; i < (int)poset.nodes.size(); ++i) {
        auto nb = specialty_neighborhood(poset, i);
        if (poset.nodes[i].cls.s_value == q)
            CHECK(nb == std::set<int>{i});
        for (int x : nb)
            covered.insert(x);
        // one refinement step from an s=1 node only reaches s=2 nodes
        if (poset.nodes[i].cls.s_value == 1)
            for (int x : nb)
                if (x != i)
                    CHECK(poset.nodes[x].cls.s_value == 2);
    }
    CHECK((int)covered.size() == (int)poset.nodes.size());
}

TEST_CASE("s=1 nodes have outgoing edges only to s=2 nodes at q=2") {
    StrataPoset poset = build_poset(full_labeled(1, 2, 3));
    for (const auto& e : poset.edges) {
        CHECK(poset.nodes[e.from].cls.s_value == 1);
        CHECK(poset.nodes[e.to].cls.s_value == 2);
    }
}

TEST_CASE("one-level node count matches the level histogram") {
    EnumerationQuery query;
    query.signature = {2, 2, 2};
    query.labels = LabelSpec::all_labeled(query.signature);
    auto hist = count_by_saddle_levels(query);
    StrataPoset poset = build_poset(enumerate_classes(query));
    long long ones = 0;
    for (const auto& n : poset.nodes)
        if (n.cls.s_value == 1)
            ++ones;
    CHECK(ones == hist[1]);
}

TEST_CASE("rebuilding from a permuted enumeration gives the same poset") {
    ClassSet classes = full_labeled(2, 2, 2);
    ClassSet shuffled = classes;
    std::rotate(shuffled.classes.begin(), shuffled.classes.begin() + 1, shuffled.classes.end());
    std::sort(shuffled.classes.begin(), shuffled.classes.end(),
              [](const CanonicalClass& a, const CanonicalClass& b) { return a.class_id < b.class_id; });
    StrataPoset a = build_poset(classes);
    StrataPoset b = build_poset(shuffled);
    REQUIRE(a.nodes.size() == b.nodes.size());
    for (size_t i = 0; i < a.nodes.size(); ++i)
        CHECK(a.nodes[i].cls.class_id == b.nodes[i].cls.class_id);
    REQUIRE(a.edges.size() == b.edges.size());
    for (size_t i = 0; i < a.edges.size(); ++i) {
        CHECK(a.edges[i].from == b.edges[i].from);
        CHECK(a.edges[i].to == b.edges[i].to);
    }
}

TEST_CASE("incomplete class sets are rejected") {
    ClassSet classes = full_labeled(2, 2, 2);
    // drop one class that is a delta image of something
    ClassSet broken = classes;
    int removed = -1;
    for (size_t i = 0; i < broken.classes.size(); ++i)
        if (broken.classes[i].s_value == 2) {
            removed = (int)i;
            break;
        }
    REQUIRE(removed >= 0);
    StrataPoset full = build_poset(classes);
    bool is_image = false;
    for (const auto& e : full.edges)
        if (full.nodes[e.to].cls.class_id == classes.classes[removed].class_id)
            is_image = true;
    broken.classes.erase(broken.classes.begin() + removed);
    if (is_image)
        CHECK_THROWS_AS(build_poset(broken), MorseError);
}

TEST_CASE("exports are well formed") {
    StrataPoset poset = build_poset(full_labeled(1, 2, 3));
    std::string dot = poset_to_dot(poset);
    CHECK(dot.find("digraph") != std::string::npos);
    std::string csv = poset_to_csv(poset);
    CHECK(csv.find("class_id,s,dim") == 0);
    std::string json = poset_to_json(poset);
    CHECK(json.find("\"total_dim\": 6") != std::string::npos);
}
