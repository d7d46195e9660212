#pragma once

#include "mstd/point_set.hpp"
#include "mstd/sumset.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace mstd {

/// Which sets count as hits.
struct DensityPredicate {
    enum class Kind { mstd, generalized, never };
    Kind kind = Kind::mstd;
    /// |s1 A - d1 A| > |s2 A - d2 A| for Kind::generalized.
    SumDiffSpec spec1{2, 0};
    SumDiffSpec spec2{1, 1};

    static DensityPredicate mstd() { return {}; }
    static DensityPredicate generalized(SumDiffSpec a, SumDiffSpec b) { return {Kind::generalized, a, b}; }
    static DensityPredicate never() { return {Kind::never, {}, {}}; }

    std::string to_string() const;
};

struct DensityEstimate {
    Coord n = 0;
    std::uint64_t trials = 0;
    std::uint64_t hits = 0;
    double proportion = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
    std::uint64_t seed = 0;
};

struct HitRecord {
    std::uint64_t trial = 0;
    std::vector<Coord> elements;
};

struct DensityOptions {
    /// 0 picks std::thread::hardware_concurrency().
    unsigned workers = 0;
    /// When set, receives every hit sorted by trial index.
    std::vector<HitRecord>* hit_log = nullptr;
};

inline constexpr double wilson_z95 = 1.959963984540054;

/// Wilson score interval for hits out of trials.
std::pair<double, double> wilson_interval(std::uint64_t hits, std::uint64_t trials, double z = wilson_z95);

/// Elements of {0..n}, each kept with probability 1/2. Bit e of the sample
/// comes from splitmix64 keyed on (seed, trial, e / 64), so any trial can be
/// drawn without the ones before it.
std::vector<Coord> sample_elements(Coord n, std::uint64_t seed, std::uint64_t trial);

PointSet sample_subset(Coord n, std::uint64_t seed, std::uint64_t trial);

/// Predicate on a sorted one-dimensional set. Empty sets never match.
bool density_predicate_holds(const std::vector<Coord>& elements, const DensityPredicate& predicate);

/// |sA - dA| for a sorted one-dimensional set by word-parallel shift-or.
std::uint64_t sumdiff_size_1d(const std::vector<Coord>& elements, SumDiffSpec spec);

DensityEstimate estimate_density(Coord n, std::uint64_t trials, std::uint64_t seed,
                                 const DensityPredicate& predicate, const DensityOptions& options = {});

/// One summary line: n trials hits proportion ci_low ci_high seed, tab separated.
std::string to_string(const DensityEstimate& e);

} // namespace mstd
