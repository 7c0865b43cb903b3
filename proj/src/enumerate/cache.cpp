#include "enumerate/cache.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "model/serialize.hpp"
#include "support/digest.hpp"
#include "support/errors.hpp"

namespace morse {

using ordered_json = nlohmann::ordered_json;

std::string cache_path(const std::string& dir, const EnumerationQuery& query) {
    return (std::filesystem::path(dir) / (query.digest() + ".json")).string();
}

std::optional<ClassSet> cache_load(const std::string& dir, const EnumerationQuery& query) {
    std::ifstream in(cache_path(dir, query));
    if (!in)
        return std::nullopt;
    std::stringstream buf;
    buf << in.rdbuf();
    ordered_json j;
    try {
        j = ordered_json::parse(buf.str());
        std::string payload = j.at("payload").dump();
        if (j.at("digest").get<std::string>() != sha256_hex(payload))
            return std::nullopt; // stale or corrupt, recompute
        ClassSet set;
        set.query = query;
        for (const auto& entry : j.at("payload").at("classes")) {
            CanonicalClass cls;
            cls.canonical_program = check_program(program_from_json(entry.at("program").dump()));
            cls.class_id = entry.at("class_id").get<std::string>();
            if (class_digest(cls.canonical_program) != cls.class_id)
                return std::nullopt;
            cls.s_value = cls.canonical_program.partition.levels();
            cls.partition = cls.canonical_program.partition;
            set.classes.push_back(std::move(cls));
        }
        return set;
    } catch (...) {
        return std::nullopt;
    }
}

void cache_store(const std::string& dir, const ClassSet& set) {
    std::filesystem::create_directories(dir);
    ordered_json payload;
    payload["query"] = set.query.str();
    auto classes = ordered_json::array();
    for (const auto& cls : set.classes) {
        ordered_json entry;
        entry["class_id"] = cls.class_id;
        entry["program"] = ordered_json::parse(program_to_json(cls.canonical_program.raw(), -1));
        classes.push_back(std::move(entry));
    }
    payload["classes"] = std::move(classes);
    ordered_json j;
    j["digest"] = sha256_hex(payload.dump());
    j["payload"] = std::move(payload);
    std::ofstream out(cache_path(dir, set.query));
    if (!out)
        fail(Err::io_error, "cannot write cache file in " + dir);
    out << j.dump(2) << "\n";
}

ClassSet enumerate_cached(const EnumerationQuery& query, const std::string& dir, bool use_cache) {
    if (use_cache && !dir.empty()) {
        if (auto hit = cache_load(dir, query))
            return *hit;
    }
    ClassSet set = enumerate_classes(query);
    if (use_cache && !dir.empty())
        cache_store(dir, set);
    return set;
}

} // namespace morse
