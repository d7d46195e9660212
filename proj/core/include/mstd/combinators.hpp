#pragma once

#include "mstd/point_set.hpp"
#include "mstd/sumset.hpp"

#include <vector>

namespace mstd {

/// One chain requirement |xA - yA| > |wA - zA| at level j = x + y = w + z.
struct ChainLevel {
    unsigned j = 0;
    SumDiffSpec greater;
    SumDiffSpec lesser;

    friend bool operator==(const ChainLevel&, const ChainLevel&) = default;
};

struct ChainSpec {
    std::vector<ChainLevel> levels;

    /// Throws ArgumentError unless every level is consistent, levels are
    /// distinct and lie in [2, k].
    void validate(unsigned k) const;
    /// Largest level present; 0 when empty.
    unsigned top_level() const noexcept;

    friend bool operator==(const ChainSpec&, const ChainSpec&) = default;
};

/// C = A_1 + m A_2 + ... + m^{r-1} A_r. Parts must share a dimension, have
/// non-negative coordinates, and m must exceed k times the largest
/// coordinate so that sumsets of up to k summands decompose uniquely.
PointSet base_expand(std::span<const PointSet> parts, Coord m, unsigned k);

/// Smallest m accepted by base_expand: k * (largest coordinate) + 1.
Coord minimal_base(std::span<const PointSet> parts, unsigned k);

struct Chain {
    PointSet set;
    Coord m = 0;
    /// Non-trivial components in expansion order (multiplier m^0 first).
    std::vector<PointSet> components;
    /// Level of each component, parallel to `components`.
    std::vector<unsigned> component_levels;
};

/// Builds one component per level with build_2d at the smallest admissible
/// side and base-expands them, largest component first.
Chain build_chain(const ChainSpec& spec, unsigned k);

/// Chain with levels 2c: (2c, 0) > (c, c) for c = 1..k.
ChainSpec k_generational_spec(unsigned k);
Chain build_k_generational(unsigned k);

} // namespace mstd
