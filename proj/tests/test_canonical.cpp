#include <doctest.h>

#include "helpers.hpp"
#include "support/prng.hpp"
#include "enumerate/enumerate.hpp"

using namespace morse;
using namespace morse::testhelp;

TEST_CASE("swapping unlabeled maxima does not change the class") {
    LabelSpec labels; // nothing labeled
    Program a = make_program(1, 1, 2, labels, {{1}}, {{1, 1}}, {1, 2});
    Program b = make_program(1, 1, 2, labels, {{1}}, {{1, 1}}, {2, 1});
    CHECK(canonical_form(a).cls.class_id == canonical_form(b).cls.class_id);
}

TEST_CASE("relocating a labeled minimum changes the class") {
    // Three labeled minima merged into one cap. Minimum 1 attaches to saddle 1
    // in the first program and to saddle 2 in the second; with labeled saddles
    // these embeddings are inequivalent.
    LabelSpec labels = LabelSpec::all_labeled({3, 2, 1});
    Program a = make_program(3, 2, 1, labels, {{1}, {2}}, {{1}, {1, 2}, {2}}, {1});
    Program b = make_program(3, 2, 1, labels, {{1}, {2}}, {{2}, {1, 2}, {1}}, {1});
    CHECK(canonical_form(a).cls.class_id != canonical_form(b).cls.class_id);
}

TEST_CASE("canonical form is idempotent") {
    Prng rng(11);
    for (int i = 0; i < 60; ++i) {
        Program p = random_valid_program(rng, 3);
        CanonicalResult first = canonical_form(p);
        CanonicalResult second = canonical_form(first.cls.canonical_program);
        CHECK(second.cls.class_id == first.cls.class_id);
        CHECK(second.cls.canonical_program == first.cls.canonical_program);
        CHECK(second.move.is_identity());
    }
}

TEST_CASE("canonical form is constant on move orbits") {
    Prng rng(23);
    for (int i = 0; i < 25; ++i) {
        Program p = random_valid_program(rng, 3);
        std::string id = canonical_form(p).cls.class_id;
        int count = 0;
        for_each_move(p, [&](const GroupMove& m) {
            CHECK(canonical_form(apply_move(p, m).program).cls.class_id == id);
            return ++count < 40; // a sample of the orbit is enough
        });
    }
}

TEST_CASE("fully labeled symmetric merge has a trivial group") {
    CanonicalClass cls = canonical_form(sphere_merge_211()).cls;
    AutomorphismGroup g = automorphism_group(cls);
    REQUIRE(g.elements.size() == 1);
    CHECK(g.elements[0].is_identity());
}

TEST_CASE("unlabeled minima give the order-two loop swap") {
    LabelSpec labels = LabelSpec::all_labeled({2, 1, 1});
    labels.labeled_minima = 0; // minima anonymous, saddle and maximum labeled
    Program p = make_program(2, 1, 1, labels, {{1}}, {{1}, {1}}, {1});
    AutomorphismGroup g = automorphism_group(canonical_form(p).cls);
    REQUIRE(g.elements.size() == 2);
    bool has_swap = false;
    for (const auto& e : g.elements) {
        if (e.is_identity())
            continue;
        // the nontrivial element swaps the two loop arcs
        CHECK(e.saddle_perm == std::vector<int>{1});
        CHECK(e.edge_perm == std::vector<int>{1, 0});
        has_swap = true;
    }
    CHECK(has_swap);
}

TEST_CASE("automorphism groups satisfy the group axioms") {
    Prng rng(5);
    for (int i = 0; i < 30; ++i) {
        Program p = random_valid_program(rng, 3);
        AutomorphismGroup g = automorphism_group(canonical_form(p).cls);
        REQUIRE(!g.elements.empty());
        CHECK(g.elements[0].is_identity());
        for (const auto& a : g.elements) {
            CHECK(g.contains(g.inverse(a)));
            for (const auto& b : g.elements)
                CHECK(g.contains(g.compose(a, b)));
        }
    }
}

TEST_CASE("every automorphism fixes the canonical program") {
    // Re-derive stabilizing moves and check they reproduce exactly the
    // recorded (saddle, edge) actions.
    Program p = make_program(1, 2, 1, LabelSpec::none(), {{1}, {2}}, {{1, 2, 1, 2}}, {1});
    CanonicalClass cls = canonical_form(p).cls;
    AutomorphismGroup g = automorphism_group(cls);
    for (const auto& e : g.elements) {
        bool witnessed = false;
        for_each_move(cls.canonical_program, [&](const GroupMove& m) {
            MoveResult r = apply_move(cls.canonical_program, m);
            if (r.program == cls.canonical_program && m.sad_perm == e.saddle_perm &&
                r.mark_map == e.edge_perm)
                witnessed = true;
            return !witnessed;
        });
        CHECK(witnessed);
    }
}

TEST_CASE("torus one-level class has the rotation symmetry") {
    // cyclic word (1,2,1,2) on one level: rotating by two positions preserves
    // the program and induces a nontrivial arc permutation.
    Program p = make_program(1, 2, 1, LabelSpec::all_labeled({1, 2, 1}), {{1, 2}}, {{1, 2, 1, 2}}, {1});
    AutomorphismGroup g = automorphism_group(canonical_form(p).cls);
    CHECK(g.elements.size() >= 2);
}
