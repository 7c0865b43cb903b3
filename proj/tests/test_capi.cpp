#include <doctest.h>

#include <string>

#include "morsemoduli.h"

namespace {

std::string take(char* s) {
    std::string out = s ? s : "";
    mm_string_free(s);
    return out;
}

const char* kMergeProgram = R"({
  "format": "morse-program",
  "version": 1,
  "signature": {"minima": 2, "saddles": 1, "maxima": 1},
  "labels": {"labeled_minima": 2, "labeled_saddles": 1, "labeled_maxima": 1,
             "fixed_minima": 0, "fixed_saddles": 0, "fixed_maxima": 0},
  "partition": [[1]],
  "circles": [{"minimum": 1, "marks": [1]}, {"minimum": 2, "marks": [2]}],
  "moves": {"1": [1, 2]},
  "caps": [1]
})";

} // namespace

TEST_CASE("program lifecycle through the c api") {
    mm_program* prog = nullptr;
    REQUIRE(mm_program_parse(kMergeProgram, &prog) == MM_OK);

    int p = 0, q = 0, r = 0, chi = 0, genus = -1;
    REQUIRE(mm_program_signature(prog, &p, &q, &r, &chi, &genus) == MM_OK);
    CHECK(p == 2);
    CHECK(q == 1);
    CHECK(r == 1);
    CHECK(chi == 2);
    CHECK(genus == 0);

    char* json = nullptr;
    REQUIRE(mm_program_to_json(prog, &json) == MM_OK);
    std::string text = take(json);
    mm_program* again = nullptr;
    REQUIRE(mm_program_parse(text.c_str(), &again) == MM_OK);
    char* json2 = nullptr;
    REQUIRE(mm_program_to_json(again, &json2) == MM_OK);
    CHECK(take(json2) == text); // byte-exact round trip
    mm_program_free(again);

    char* graph = nullptr;
    REQUIRE(mm_program_level_graph(prog, &graph) == MM_OK);
    std::string gtext = take(graph);
    CHECK(gtext.find("\"degrees\": [\n    4\n  ]") != std::string::npos);

    char* class_id = nullptr;
    mm_program* canonical = nullptr;
    REQUIRE(mm_program_canonical(prog, &class_id, &canonical) == MM_OK);
    CHECK(take(class_id).size() == 64);
    mm_program_free(canonical);

    char* autos = nullptr;
    REQUIRE(mm_program_automorphisms(prog, &autos) == MM_OK);
    CHECK(take(autos).find("\"order\": 1") != std::string::npos);

    char* homology = nullptr;
    REQUIRE(mm_program_homology(prog, &homology) == MM_OK);
    std::string htext = take(homology);
    CHECK(htext.find("\"rank\": 2") != std::string::npos);

    mm_program_free(prog);
}

TEST_CASE("validation reports through the c api") {
    char* report = nullptr;
    REQUIRE(mm_program_validate(kMergeProgram, &report) == MM_OK);
    CHECK(take(report).find("\"ok\": true") != std::string::npos);

    std::string broken = kMergeProgram;
    broken.replace(broken.find("\"caps\": [1]"), 11, "\"caps\": [1, 1]");
    REQUIRE(mm_program_validate(broken.c_str(), &report) == MM_OK);
    std::string text = take(report);
    CHECK(text.find("\"ok\": false") != std::string::npos);

    mm_program* bad = nullptr;
    CHECK(mm_program_parse("{\"format\": \"nope\"}", &bad) == MM_ERR_PARSE);
    CHECK(std::string(mm_last_error()).find("morse-program") != std::string::npos);
}

TEST_CASE("enumeration poset and reports through the c api") {
    const char* query = R"({"minima":2,"saddles":2,"maxima":2,"labels":"all"})";
    mm_classset* set = nullptr;
    REQUIRE(mm_enumerate(query, &set) == MM_OK);
    long long n = 0;
    REQUIRE(mm_classset_count(set, &n) == MM_OK);
    CHECK(n > 0);
    char* id0 = nullptr;
    REQUIRE(mm_classset_class_id(set, 0, &id0) == MM_OK);
    CHECK(take(id0).size() == 64);
    CHECK(mm_classset_class_id(set, n, &id0) == MM_ERR_INVALID_ARGUMENT);
    char* hist = nullptr;
    REQUIRE(mm_classset_histogram(set, &hist) == MM_OK);
    CHECK(take(hist).find("\"1\"") != std::string::npos);
    long long chi = 0;
    REQUIRE(mm_classset_euler(set, &chi) == MM_OK);
    CHECK(chi < 0); // q = 2: minus the one-level count

    mm_poset* poset = nullptr;
    REQUIRE(mm_poset_build(set, &poset) == MM_OK);
    long long nodes = 0, edges = 0;
    REQUIRE(mm_poset_counts(poset, &nodes, &edges) == MM_OK);
    CHECK(nodes == n);
    CHECK(edges > 0);
    char* dot = nullptr;
    REQUIRE(mm_poset_export(poset, "dot", &dot) == MM_OK);
    CHECK(take(dot).find("digraph") != std::string::npos);
    CHECK(mm_poset_export(poset, "yaml", &dot) == MM_ERR_INVALID_ARGUMENT);

    char* qrep = nullptr;
    REQUIRE(mm_poset_q_polynomial(poset, "", &qrep) == MM_OK);
    CHECK(take(qrep).find("\"degree_ok\": true") != std::string::npos);
    mm_poset_free(poset);

    char* atlas = nullptr;
    REQUIRE(mm_atlas_check(set, 5, 7, &atlas) == MM_OK);
    std::string areport = take(atlas);
    CHECK(areport.find("\"cocycle_failures\": 0") != std::string::npos);
    CHECK(areport.find("\"cone_violations\": 0") != std::string::npos);
    mm_classset_free(set);
}

TEST_CASE("morse smale endpoint") {
    char* rep = nullptr;
    REQUIRE(mm_morse_smale("[1,2,1]", "[1,2,1]", &rep) == MM_OK);
    CHECK(take(rep).find("\"pass\": true") != std::string::npos);
    REQUIRE(mm_morse_smale("[9]", "[1]", &rep) == MM_OK);
    CHECK(take(rep).find("\"pass\": false") != std::string::npos);
    CHECK(mm_morse_smale("oops", "[1]", &rep) == MM_ERR_PARSE);
}

TEST_CASE("budget surfaces as a dedicated status") {
    const char* query = R"({"minima":2,"saddles":2,"maxima":2,"labels":"all","budget":2})";
    mm_classset* set = nullptr;
    CHECK(mm_enumerate(query, &set) == MM_ERR_BUDGET_EXCEEDED);
}
