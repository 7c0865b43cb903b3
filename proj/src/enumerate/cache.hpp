#pragma once

#include <optional>
#include <string>

#include "enumerate/enumerate.hpp"

namespace morse {

// Content-addressed result cache: one JSON file per query digest. Loads
// re-verify both the payload digest and every stored class id, so a corrupt
// or tampered file is treated as absent rather than trusted.
std::string cache_path(const std::string& dir, const EnumerationQuery& query);
std::optional<ClassSet> cache_load(const std::string& dir, const EnumerationQuery& query);
void cache_store(const std::string& dir, const ClassSet& set);

// Enumerates through the cache; recomputes (and stores) on miss.
ClassSet enumerate_cached(const EnumerationQuery& query, const std::string& dir, bool use_cache);

} // namespace morse
