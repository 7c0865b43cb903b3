#include "model/serialize.hpp"

#include <json.hpp>

#include "support/errors.hpp"

namespace morse {

using ordered_json = nlohmann::ordered_json;

std::string program_to_json(const RawProgram& p, int indent) {
    ordered_json j;
    j["format"] = "morse-program";
    j["version"] = 1;
    j["signature"] = {{"minima", p.signature.minima},
                      {"saddles", p.signature.saddles},
                      {"maxima", p.signature.maxima}};
    j["labels"] = {{"labeled_minima", p.labels.labeled_minima},
                   {"labeled_saddles", p.labels.labeled_saddles},
                   {"labeled_maxima", p.labels.labeled_maxima},
                   {"fixed_minima", p.labels.fixed_minima},
                   {"fixed_saddles", p.labels.fixed_saddles},
                   {"fixed_maxima", p.labels.fixed_maxima}};
    j["partition"] = p.partition.blocks;
    auto circles = ordered_json::array();
    for (const auto& c : p.circles)
        circles.push_back({{"minimum", c.minimum}, {"marks", c.marks}});
    j["circles"] = std::move(circles);
    auto moves = ordered_json::object();
    for (const auto& [saddle, marks] : p.moves)
        moves[std::to_string(saddle)] = {marks[0], marks[1]};
    j["moves"] = std::move(moves);
    j["caps"] = p.caps;
    return j.dump(indent) + "\n";
}

RawProgram program_from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail(Err::parse_error, std::string("bad JSON: ") + e.what());
    }
    try {
        if (j.at("format").get<std::string>() != "morse-program")
            fail(Err::parse_error, "not a morse-program document");
        if (j.at("version").get<int>() != 1)
            fail(Err::parse_error, "unsupported program version");
        RawProgram p;
        const auto& sig = j.at("signature");
        p.signature = {sig.at("minima").get<int>(), sig.at("saddles").get<int>(), sig.at("maxima").get<int>()};
        const auto& lab = j.at("labels");
        p.labels.labeled_minima = lab.at("labeled_minima").get<int>();
        p.labels.labeled_saddles = lab.at("labeled_saddles").get<int>();
        p.labels.labeled_maxima = lab.at("labeled_maxima").get<int>();
        p.labels.fixed_minima = lab.at("fixed_minima").get<int>();
        p.labels.fixed_saddles = lab.at("fixed_saddles").get<int>();
        p.labels.fixed_maxima = lab.at("fixed_maxima").get<int>();
        p.partition.blocks = j.at("partition").get<std::vector<std::vector<int>>>();
        for (const auto& c : j.at("circles")) {
            RawProgram::Circle circle;
            circle.minimum = c.at("minimum").get<int>();
            circle.marks = c.at("marks").get<std::vector<int>>();
            p.circles.push_back(std::move(circle));
        }
        for (const auto& [key, val] : j.at("moves").items()) {
            auto marks = val.get<std::vector<int>>();
            if (marks.size() != 2)
                fail(Err::parse_error, "move for saddle " + key + " must list exactly two marks");
            p.moves[std::stoi(key)] = {marks[0], marks[1]};
        }
        p.caps = j.at("caps").get<std::vector<int>>();
        return p;
    } catch (const nlohmann::json::exception& e) {
        fail(Err::parse_error, std::string("bad program document: ") + e.what());
    } catch (const std::invalid_argument&) {
        fail(Err::parse_error, "bad saddle key in moves");
    }
}

} // namespace morse
