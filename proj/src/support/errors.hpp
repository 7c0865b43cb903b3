#pragma once

#include <stdexcept>
#include <string>

namespace morse {

enum class Err {
    invalid_argument,
    parse_error,
    invalid_program,
    not_a_refinement,
    budget_exceeded,
    incomplete_input,
    missing_stratum_data,
    rank_mismatch,
    non_unimodular,
    value_out_of_range,
    not_in_star,
    non_positive_period,
    foreign_element,
    not_adjacent,
    cone_violation,
    io_error,
    internal,
};

class MorseError : public std::runtime_error {
public:
    MorseError(Err code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Err code() const { return code_; }

private:
    Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) { throw MorseError(code, what); }

} // namespace morse
