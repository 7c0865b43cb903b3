#pragma once

#include <vector>

#include "model/canonical.hpp"
#include "model/program.hpp"

namespace morse::testhelp {

// Assembles a word-form program and runs it through raw-form validation, so
// tests exercise the same path as parsed documents.
inline Program make_program(int p, int q, int r, const LabelSpec& labels,
                            std::vector<std::vector<int>> blocks,
                            std::vector<std::vector<int>> words, std::vector<int> caps) {
    Program prog;
    prog.signature = {p, q, r};
    prog.labels = labels;
    prog.partition = OrderedPartition{std::move(blocks)};
    prog.circles = std::move(words);
    prog.caps = std::move(caps);
    return check_program(prog.raw());
}

inline Program sphere_merge_211() { // two minima merged once, one cap
    return make_program(2, 1, 1, LabelSpec::all_labeled({2, 1, 1}), {{1}}, {{1}, {1}}, {1});
}

inline Program sphere_split_112() { // one minimum split once, two caps
    return make_program(1, 1, 2, LabelSpec::all_labeled({1, 1, 2}), {{1}}, {{1, 1}}, {1, 2});
}

inline Program torus_121(std::vector<std::vector<int>> blocks = {{1}, {2}}) {
    return make_program(1, 2, 1, LabelSpec::all_labeled({1, 2, 1}), std::move(blocks), {{1, 2, 1, 2}}, {1});
}

} // namespace morse::testhelp
