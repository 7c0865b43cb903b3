#pragma once

#include <string>

#include "model/program.hpp"

namespace morse {

// Versioned JSON document for surgery programs. Documents we emit round-trip
// byte-exactly through parse + emit.
std::string program_to_json(const RawProgram& p, int indent = 2);
RawProgram program_from_json(const std::string& text);

} // namespace morse
