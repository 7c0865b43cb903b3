#pragma once

#include <string>

namespace morse {

// SHA-256 hex digest. Used for class ids and cache keys; self-contained so the
// library carries no crypto dependency.
std::string sha256_hex(const std::string& data);

} // namespace morse
