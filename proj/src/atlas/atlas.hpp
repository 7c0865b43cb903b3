#pragma once

#include <string>
#include <vector>

#include "homology/incidence.hpp"
#include "model/canonical.hpp"
#include "support/prng.hpp"
#include "support/rational.hpp"

namespace morse {

// Saddle critical values, exact rationals strictly inside (-1, 1); extrema are
// pinned to -1 and 1 by the normalization, so these are the free coordinates.
struct SaddleValues {
    std::vector<Rational> values; // index = saddle id - 1

    bool operator==(const SaddleValues&) const = default;
};

// Positive functional on the 2q oriented arcs, indexed by mark.
struct EdgePeriods {
    std::vector<Rational> periods;

    bool operator==(const EdgePeriods&) const = default;
};

struct AtlasPoint {
    CanonicalClass chart;
    SaddleValues saddle_values;
    EdgePeriods edge_periods;

    bool same_location(const AtlasPoint& o) const {
        return chart.class_id == o.chart.class_id && saddle_values == o.saddle_values &&
               edge_periods == o.edge_periods;
    }
};

// Level structure read off the values: blocks of equal values, increasing.
OrderedPartition induced_partition(const SaddleValues& values);

// Validates coordinates against the chart: values in range, induced partition
// inside the chart star, periods positive.
AtlasPoint make_point(const CanonicalClass& chart, SaddleValues values, EdgePeriods periods);

// Componentwise action: values through the saddle permutation, periods through
// the arc permutation. The element must belong to the chart's group.
AtlasPoint act(const AutomorphismGroup::Element& g, const AtlasPoint& point,
               const AutomorphismGroup& group);

// Lexicographically minimal representative of the finite orbit; idempotent.
AtlasPoint canonicalize_point(const AtlasPoint& point);

// Chart transition into `target`, which must be a delta image of the point's
// chart for a witness compatible with the point's induced partition. The
// witnessing refinement is recovered from the coordinates (coarsest choice);
// every witness must land in the same orbit, which is cross-checked.
AtlasPoint transition(const AtlasPoint& point, const CanonicalClass& target);

std::string point_to_json(const AtlasPoint& point, int indent = 2);
// chart is looked up by class id among `charts`.
AtlasPoint point_from_json(const std::string& text, const std::vector<CanonicalClass>& charts);

// Seeded sample inside the chart star: block-banded values (so the induced
// partition refines the chart's), positive periods.
AtlasPoint sample_point(const CanonicalClass& chart, Prng& rng);

} // namespace morse
