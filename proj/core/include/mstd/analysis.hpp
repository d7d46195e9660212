#pragma once

#include "mstd/combinators.hpp"
#include "mstd/point_set.hpp"
#include "mstd/sumset.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mstd {

// ---------------------------------------------------------------------------
// Cardinalities

enum class SizeRoute {
    /// Split base-expanded sets into factors when the split is certified,
    /// otherwise materialize.
    automatic,
    /// Always build sA - dA explicitly.
    materialize,
};

/// C = offset + P + m Q with P inside [0, m)^d.
struct BaseFactorization {
    PointSet low;
    PointSet high;
    Coord m = 0;
    std::vector<Coord> offset;
};

/// Looks for C = offset + P + m Q with |P| |Q| = |C|, trying the first few
/// coordinate gaps as candidates for m. Returns the first valid split.
std::optional<BaseFactorization> find_base_factorization(const PointSet& c);

/// |sA - dA|. With SizeRoute::automatic a base-expanded set is split and
/// the product law applied, provided (s + d) * width(P) < m on every axis.
std::uint64_t sumdiff_size(const PointSet& a, SumDiffSpec spec, SizeRoute route = SizeRoute::automatic);

// ---------------------------------------------------------------------------
// Classification and verification

enum class Verdict { mstd, balanced, difference_dominant };

std::string to_string(Verdict v);

struct Classification {
    std::uint64_t sum_size = 0;
    std::uint64_t diff_size = 0;
    Verdict verdict = Verdict::balanced;
};

Classification classify(const PointSet& a, SizeRoute route = SizeRoute::automatic);

enum class Comparison {
    /// lhs > rhs
    strict,
    /// lhs == rhs
    balance,
    /// lhs >= rhs
    at_least,
};

struct VerificationReport {
    std::string label;
    Comparison comparison = Comparison::strict;
    std::uint64_t lhs_size = 0;
    std::uint64_t rhs_size = 0;
    std::int64_t gap = 0;
    bool passed = false;
    /// Missing-point counts by region and other diagnostics.
    std::map<std::string, std::int64_t> details;
};

VerificationReport make_report(std::string label, Comparison comparison, std::uint64_t lhs, std::uint64_t rhs);

/// Points of the bounding box of `s` that are not in `s`, split by which
/// half of the box they lie in on every axis. Keys look like "missing.-+"
/// ('-' for the low half) plus "missing.total".
std::map<std::string, std::int64_t> missing_by_corner(const PointSet& s);

/// |s1 A - d1 A| > |s2 A - d2 A|. Both specs need the same level >= 2.
/// Details hold per-corner missing counts of both sides when they were
/// materialized.
VerificationReport verify_generalized(const PointSet& a, SumDiffSpec spec1, SumDiffSpec spec2,
                                      SizeRoute route = SizeRoute::automatic);

/// |s1 A - d1 A| == |s2 A - d2 A|.
VerificationReport verify_balanced(const PointSet& a, SumDiffSpec spec1, SumDiffSpec spec2,
                                   SizeRoute route = SizeRoute::automatic);

/// One strict report per chain level.
std::vector<VerificationReport> verify_chain(const PointSet& a, const ChainSpec& spec);

bool all_passed(const std::vector<VerificationReport>& reports);

// ---------------------------------------------------------------------------
// One-dimensional structure

struct StabilizationProfile {
    std::vector<Coord> C;
    Coord c = 0;
    Coord d_r = 0;
    std::vector<Coord> D;
    std::uint64_t k_threshold = 0;
    /// max(A).
    Coord a = 0;
};

/// Decomposes kA = C u [c, ka - d_r] u (ka - D) at k = a^2 m and checks the
/// same decomposition at k + 1 and k + 2. A must contain 0, have
/// non-negative elements with gcd 1.
StabilizationProfile nathanson_stabilize(const PointSet& a);

/// True iff kA equals C u [c, ka - d_r] u (ka - D).
bool matches_profile(const PointSet& a, const StabilizationProfile& profile, std::uint64_t k);

/// Whether `value` is a sum of exactly k elements of A (repetition allowed).
bool membership_in_kfold(const PointSet& a, Coord value, std::uint64_t k);

/// Holes of kA near the right end lie inside [(k - a1) a_m, k a_m] and
/// holes near the left end inside [0, a1 a_m]. Details record how many
/// right holes fall outside the narrower window [(k - 1) a_m, k a_m].
VerificationReport right_fringe_check(const PointSet& a, std::uint64_t k);

// ---------------------------------------------------------------------------
// Two-dimensional growth

struct GrowthParameters {
    Coord a = 0;
    Coord a_prime = 0;
    Coord b = 0;
    Coord b_prime = 0;
    std::uint64_t N = 0;
};

/// Reads a, a', b, b' off A and checks the coprimality and nine-point
/// hypotheses. Throws HypothesisError naming the failure.
GrowthParameters growth_parameters(const PointSet& a);

struct GrowthProfile {
    GrowthParameters params;
    std::uint64_t N = 0;
    std::int64_t alpha = 0;
    std::int64_t beta = 0;
    std::uint64_t fit_lo = 0;
    std::uint64_t fit_hi = 0;
    /// mu(k) for k = N .. validate_hi.
    std::vector<std::int64_t> mu;
    /// mu(k) - (alpha + beta k) for the same range.
    std::vector<std::int64_t> residuals;
    std::uint64_t validate_hi = 0;
    /// Columns and rows of NA that miss the middle band entirely.
    std::int64_t missing_columns = 0;
    std::int64_t missing_rows = 0;

    bool exact() const;
};

/// mu(k) = (k a' + 1)(k b' + 1) - |kA|, fitted as alpha + beta k on
/// k = N, N+1, N+2 and checked on N+3 .. N+2+extra.
GrowthProfile growth_profile(const PointSet& a, unsigned extra = 3);

/// |kA - kA| >= |kA + kA| for k >= N.
VerificationReport diff_dominance_check(const PointSet& a, std::uint64_t k);

/// Classification of cA for c = 1..k, i.e. |2cA| against |cA - cA|.
std::vector<Classification> check_k_generational(const PointSet& a, unsigned k);

bool all_mstd(const std::vector<Classification>& gens);

// ---------------------------------------------------------------------------
// Arithmetic family scan

struct ScanResult {
    std::vector<Coord> elements;
    Coord a1 = 0;
    Coord x = 0;
    VerificationReport report;
};

/// Every A = {0, a1, a2, ..., am} with a_i = c1 a1 + c2 x, c1 >= 1,
/// 0 <= c2 x <= a1, 1 < x < a1 coprime to a1, a1 <= a1_max, x <= x_max,
/// 2 <= m <= size_max and elements at most a1 * size_max. Each report
/// compares |A - A| >= |A + A|. Ordered by (a1, x, elements).
std::vector<ScanResult> theoremA1_scan(Coord a1_max, Coord x_max, unsigned size_max);

} // namespace mstd
