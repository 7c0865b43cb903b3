#include "atlas/atlas.hpp"

#include <algorithm>
#include <map>

#include <json.hpp>

#include "support/errors.hpp"

namespace morse {

OrderedPartition induced_partition(const SaddleValues& values) {
    std::map<Rational, std::vector<int>, std::less<Rational>> groups;
    for (size_t j = 0; j < values.values.size(); ++j)
        groups[values.values[j]].push_back((int)j + 1);
    OrderedPartition out;
    for (auto& [value, block] : groups)
        out.blocks.push_back(block);
    return out;
}

AtlasPoint make_point(const CanonicalClass& chart, SaddleValues values, EdgePeriods periods) {
    const int q = chart.canonical_program.signature.saddles;
    if ((int)values.values.size() != q)
        fail(Err::invalid_argument, "expected " + std::to_string(q) + " saddle values");
    if ((int)periods.periods.size() != 2 * q)
        fail(Err::invalid_argument, "expected " + std::to_string(2 * q) + " edge periods");
    for (const auto& c : values.values)
        if (!(Rational(-1) < c && c < Rational(1)))
            fail(Err::value_out_of_range, "saddle value " + c.str() + " outside (-1,1)");
    for (const auto& u : periods.periods)
        if (!u.positive())
            fail(Err::non_positive_period, "edge period " + u.str() + " is not positive");
    if (!induced_partition(values).refines(chart.partition))
        fail(Err::not_in_star, "value partition " + induced_partition(values).str() +
                                   " does not refine the chart partition " + chart.partition.str());
    return AtlasPoint{chart, std::move(values), std::move(periods)};
}

AtlasPoint act(const AutomorphismGroup::Element& g, const AtlasPoint& point,
               const AutomorphismGroup& group) {
    if (!group.contains(g))
        fail(Err::foreign_element, "element does not belong to the chart automorphism group");
    AtlasPoint out;
    out.chart = point.chart;
    out.saddle_values.values.resize(point.saddle_values.values.size());
    for (size_t j = 0; j < point.saddle_values.values.size(); ++j)
        out.saddle_values.values[g.saddle_perm[j] - 1] = point.saddle_values.values[j];
    out.edge_periods.periods.resize(point.edge_periods.periods.size());
    for (size_t m = 0; m < point.edge_periods.periods.size(); ++m)
        out.edge_periods.periods[g.edge_perm[m]] = point.edge_periods.periods[m];
    return out;
}

namespace {

bool point_less(const AtlasPoint& a, const AtlasPoint& b) {
    for (size_t i = 0; i < a.saddle_values.values.size(); ++i) {
        if (a.saddle_values.values[i] < b.saddle_values.values[i]) return true;
        if (b.saddle_values.values[i] < a.saddle_values.values[i]) return false;
    }
    for (size_t i = 0; i < a.edge_periods.periods.size(); ++i) {
        if (a.edge_periods.periods[i] < b.edge_periods.periods[i]) return true;
        if (b.edge_periods.periods[i] < a.edge_periods.periods[i]) return false;
    }
    return false;
}

} // namespace

AtlasPoint canonicalize_point(const AtlasPoint& point) {
    AutomorphismGroup group = automorphism_group(point.chart);
    AtlasPoint best = point;
    for (const auto& g : group.elements) {
        AtlasPoint candidate = act(g, point, group);
        if (point_less(candidate, best))
            best = candidate;
    }
    return best;
}

AtlasPoint transition(const AtlasPoint& point, const CanonicalClass& target) {
    OrderedPartition induced = induced_partition(point.saddle_values);

    // Witnesses: partitions between the induced one and the chart's, whose
    // delta image is the requested target; take the coarsest.
    std::vector<OrderedPartition> witnesses;
    for (const auto& mid : point.chart.partition.refinements())
        if (induced.refines(mid) && delta(point.chart, mid).class_id == target.class_id)
            witnesses.push_back(mid);
    if (witnesses.empty())
        fail(Err::not_adjacent, "target chart is not an incidence image for this point");
    std::sort(witnesses.begin(), witnesses.end(), [](const OrderedPartition& a, const OrderedPartition& b) {
        if (a.levels() != b.levels())
            return a.levels() < b.levels();
        return a < b;
    });

    AtlasPoint result;
    bool have = false;
    for (const auto& witness : witnesses) {
        IncidenceData inc = incidence_matrix(point.chart, witness);
        AtlasPoint moved;
        moved.chart = inc.target;
        moved.saddle_values.values.resize(point.saddle_values.values.size());
        for (size_t j = 0; j < point.saddle_values.values.size(); ++j)
            moved.saddle_values.values[inc.saddle_perm[j] - 1] = point.saddle_values.values[j];
        const int two_q = (int)point.edge_periods.periods.size();
        moved.edge_periods.periods.assign(two_q, Rational(0));
        for (int m = 0; m < two_q; ++m) {
            Rational pushed(0);
            for (int c = 0; c < two_q; ++c)
                if (long long w = inc.matrix.at(m, c); w != 0)
                    pushed = pushed + Rational(w) * point.edge_periods.periods[c];
            if (!pushed.positive())
                fail(Err::cone_violation, "transition produced a non-positive period");
            moved.edge_periods.periods[m] = pushed;
        }
        moved = canonicalize_point(
            make_point(inc.target, std::move(moved.saddle_values), std::move(moved.edge_periods)));
        if (!have) {
            result = std::move(moved);
            have = true;
        } else if (!result.same_location(moved)) {
            fail(Err::internal, "incidence witnesses disagree after canonicalization");
        }
    }
    return result;
}

std::string point_to_json(const AtlasPoint& point, int indent) {
    nlohmann::ordered_json j;
    j["chart"] = point.chart.class_id;
    auto vals = nlohmann::ordered_json::array();
    for (const auto& c : point.saddle_values.values)
        vals.push_back(c.str());
    j["saddle_values"] = std::move(vals);
    auto per = nlohmann::ordered_json::array();
    for (const auto& u : point.edge_periods.periods)
        per.push_back(u.str());
    j["edge_periods"] = std::move(per);
    return j.dump(indent) + "\n";
}

AtlasPoint point_from_json(const std::string& text, const std::vector<CanonicalClass>& charts) {
    nlohmann::ordered_json j;
    try {
        j = nlohmann::ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail(Err::parse_error, std::string("bad JSON: ") + e.what());
    }
    try {
        std::string id = j.at("chart").get<std::string>();
        const CanonicalClass* chart = nullptr;
        for (const auto& c : charts)
            if (c.class_id == id)
                chart = &c;
        if (!chart)
            fail(Err::invalid_argument, "unknown chart " + id);
        SaddleValues values;
        for (const auto& v : j.at("saddle_values"))
            values.values.push_back(Rational::parse(v.get<std::string>()));
        EdgePeriods periods;
        for (const auto& v : j.at("edge_periods"))
            periods.periods.push_back(Rational::parse(v.get<std::string>()));
        return make_point(*chart, std::move(values), std::move(periods));
    } catch (const nlohmann::json::exception& e) {
        fail(Err::parse_error, std::string("bad point document: ") + e.what());
    }
}

AtlasPoint sample_point(const CanonicalClass& chart, Prng& rng) {
    const int q = chart.canonical_program.signature.saddles;
    const int s = chart.partition.levels();
    SaddleValues values;
    values.values.assign(q, Rational(0));
    for (int k = 1; k <= s; ++k) {
        // Values of block k live in the k-th of s bands covering (-1,1);
        // repeats inside a band are allowed and exercise coarser points.
        long long den = 2 + (long long)rng.below(9);
        for (int saddle : chart.partition.blocks[k - 1]) {
            long long num = 1 + (long long)rng.range(0, 2 * den - 2);
            values.values[saddle - 1] = Rational(-1) + Rational(2 * (k - 1) * den + num, s * den);
        }
    }
    EdgePeriods periods;
    for (int m = 0; m < 2 * q; ++m)
        periods.periods.push_back(Rational(rng.range(1, 24), rng.range(1, 8)));
    return make_point(chart, std::move(values), std::move(periods));
}

} // namespace morse
