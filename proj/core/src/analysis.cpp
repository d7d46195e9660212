#include "mstd/analysis.hpp"

#include "bits.hpp"
#include "mstd/affine.hpp"
#include "mstd/errors.hpp"

#include <algorithm>
#include <memory>
#include <numeric>

namespace mstd {

namespace {

// Sets smaller than this are always materialized; splitting them costs more
// than it saves.
constexpr std::size_t kFactorizationMinSize = 1024;
constexpr std::size_t kCandidatesPerAxis = 3;

// Collects points into a PointSet, through a grid when the box is small.
class Collector {
public:
    Collector(std::size_t dim, std::vector<Coord> lo, std::vector<Coord> hi) : dim_(dim) {
        std::uint64_t volume = 1;
        bool small = true;
        std::vector<std::size_t> ext(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            ext[i] = static_cast<std::size_t>(hi[i] - lo[i]) + 1;
            if (volume > (std::uint64_t{1} << 30) / ext[i]) {
                small = false;
                break;
            }
            volume *= ext[i];
        }
        if (small) {
            grid_.emplace(std::move(lo), std::move(ext));
        }
    }

    void add(std::span<const Coord> p) {
        if (grid_) {
            grid_->set(p);
        } else {
            flat_.insert(flat_.end(), p.begin(), p.end());
        }
    }

    PointSet finish() {
        if (grid_) {
            return PointSet::from_grid(std::move(*grid_));
        }
        return PointSet::from_points(dim_, std::move(flat_));
    }

private:
    std::size_t dim_;
    std::optional<DenseGrid> grid_;
    std::vector<Coord> flat_;
};

// Start of each run that follows a gap in the distinct values of one axis.
std::vector<Coord> gap_candidates(const PointSet& c, std::size_t axis) {
    const Coord lo = c.min_corner()[axis];
    const Coord hi = c.max_corner()[axis];
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    std::vector<Coord> out;
    if (span > (std::uint64_t{1} << 34)) {
        return out;
    }
    std::vector<std::uint64_t> seen(bits::words_for(span), 0);
    c.for_each([&](std::span<const Coord> p) { bits::set(seen, static_cast<std::size_t>(p[axis] - lo)); });
    bool in_gap = false;
    for (std::uint64_t v = 0; v < span && out.size() < kCandidatesPerAxis; ++v) {
        const bool present = bits::test(seen, v);
        if (!present) {
            in_gap = true;
        } else if (in_gap) {
            out.push_back(static_cast<Coord>(v));
            in_gap = false;
        }
    }
    return out;
}

std::optional<BaseFactorization> try_split(const PointSet& c, Coord m) {
    const std::size_t d = c.dimension();
    const auto lo = c.min_corner();
    const auto hi = c.max_corner();
    std::vector<Coord> qhi(d);
    for (std::size_t i = 0; i < d; ++i) {
        qhi[i] = (hi[i] - lo[i]) / m;
    }
    Collector low(d, std::vector<Coord>(d, 0), std::vector<Coord>(d, m - 1));
    Collector high(d, std::vector<Coord>(d, 0), qhi);
    std::vector<Coord> r(d);
    std::vector<Coord> q(d);
    c.for_each([&](std::span<const Coord> p) {
        for (std::size_t i = 0; i < d; ++i) {
            const Coord t = p[i] - lo[i];
            q[i] = t / m;
            r[i] = t % m;
        }
        low.add(r);
        high.add(q);
    });
    PointSet pl = low.finish();
    PointSet ph = high.finish();
    if (pl.size() < 2 || ph.size() < 2) {
        return std::nullopt;
    }
    if (static_cast<Int128>(pl.size()) * ph.size() != static_cast<Int128>(c.size())) {
        return std::nullopt;
    }
    return BaseFactorization{std::move(pl), std::move(ph), m, std::vector<Coord>(lo.begin(), lo.end())};
}

bool certified(const BaseFactorization& f, SumDiffSpec spec) {
    const auto lo = f.low.min_corner();
    const auto hi = f.low.max_corner();
    for (std::size_t i = 0; i < lo.size(); ++i) {
        if (static_cast<Int128>(spec.level()) * (hi[i] - lo[i]) >= f.m) {
            return false;
        }
    }
    return true;
}

// Cardinality evaluator that remembers the factorization tree of one set
// across several specs.
class SizeOracle {
public:
    SizeOracle(PointSet set, SizeRoute route) : set_(std::move(set)), route_(route) {}

    struct Result {
        std::uint64_t size;
        std::optional<PointSet> materialized;
    };

    Result evaluate(SumDiffSpec spec) {
        if (route_ == SizeRoute::automatic) {
            split();
            if (factor_ && certified(*factor_, spec)) {
                return {low_->evaluate(spec).size * high_->evaluate(spec).size, std::nullopt};
            }
        }
        PointSet s = iterated_sumdiff(set_, spec);
        const auto n = s.size();
        return {n, std::move(s)};
    }

private:
    void split() {
        if (tried_) {
            return;
        }
        tried_ = true;
        if (set_.size() < kFactorizationMinSize) {
            return;
        }
        factor_ = find_base_factorization(set_);
        if (factor_) {
            low_ = std::make_unique<SizeOracle>(factor_->low, route_);
            high_ = std::make_unique<SizeOracle>(factor_->high, route_);
        }
    }

    PointSet set_;
    SizeRoute route_;
    bool tried_ = false;
    std::optional<BaseFactorization> factor_;
    std::unique_ptr<SizeOracle> low_;
    std::unique_ptr<SizeOracle> high_;
};

std::string spec_label(SumDiffSpec s) {
    return "|" + std::to_string(s.s) + "A-" + std::to_string(s.d) + "A|";
}

void require_1d(const PointSet& a, const char* what) {
    if (a.empty()) {
        throw EmptySetError(std::string(what) + " of the empty set");
    }
    if (a.dimension() != 1) {
        throw DimensionError(std::string(what) + " needs a 1D set");
    }
}

Coord gcd_of_nonzero(const PointSet& a) {
    Coord g = 0;
    for (Coord x : a.flat()) {
        g = std::gcd(g, x);
    }
    return g;
}

} // namespace

// ---------------------------------------------------------------------------

std::optional<BaseFactorization> find_base_factorization(const PointSet& c) {
    if (c.size() < 4) {
        return std::nullopt;
    }
    std::vector<Coord> candidates;
    for (std::size_t axis = 0; axis < c.dimension(); ++axis) {
        const auto found = gap_candidates(c, axis);
        candidates.insert(candidates.end(), found.begin(), found.end());
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (Coord m : candidates) {
        if (m < 2) {
            continue;
        }
        if (auto f = try_split(c, m)) {
            return f;
        }
    }
    return std::nullopt;
}

std::uint64_t sumdiff_size(const PointSet& a, SumDiffSpec spec, SizeRoute route) {
    if (spec.level() == 0) {
        throw ArgumentError("sA - dA needs s + d >= 1");
    }
    SizeOracle oracle(a, route);
    return oracle.evaluate(spec).size;
}

std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::mstd:
        return "MSTD";
    case Verdict::balanced:
        return "balanced";
    case Verdict::difference_dominant:
        return "difference_dominant";
    }
    return "?";
}

namespace {

Classification make_classification(std::uint64_t sum, std::uint64_t diff) {
    Classification c{sum, diff, Verdict::balanced};
    if (sum > diff) {
        c.verdict = Verdict::mstd;
    } else if (sum < diff) {
        c.verdict = Verdict::difference_dominant;
    }
    return c;
}

} // namespace

Classification classify(const PointSet& a, SizeRoute route) {
    if (a.empty()) {
        throw EmptySetError("classification of the empty set");
    }
    SizeOracle oracle(a, route);
    const auto sum = oracle.evaluate({2, 0}).size;
    const auto diff = oracle.evaluate({1, 1}).size;
    return make_classification(sum, diff);
}

VerificationReport make_report(std::string label, Comparison comparison, std::uint64_t lhs, std::uint64_t rhs) {
    VerificationReport r;
    r.label = std::move(label);
    r.comparison = comparison;
    r.lhs_size = lhs;
    r.rhs_size = rhs;
    r.gap = static_cast<std::int64_t>(lhs) - static_cast<std::int64_t>(rhs);
    switch (comparison) {
    case Comparison::strict:
        r.passed = r.gap > 0;
        break;
    case Comparison::balance:
        r.passed = r.gap == 0;
        break;
    case Comparison::at_least:
        r.passed = r.gap >= 0;
        break;
    }
    return r;
}

std::map<std::string, std::int64_t> missing_by_corner(const PointSet& s) {
    std::map<std::string, std::int64_t> out;
    if (s.empty()) {
        return out;
    }
    const std::size_t d = s.dimension();
    const auto lo = s.min_corner();
    const auto hi = s.max_corner();
    std::vector<Coord> mid(d);
    std::vector<Int128> low_len(d);
    std::vector<Int128> high_len(d);
    for (std::size_t i = 0; i < d; ++i) {
        const Coord len = hi[i] - lo[i] + 1;
        mid[i] = lo[i] + len / 2;
        low_len[i] = len / 2;
        high_len[i] = len - len / 2;
    }
    const std::size_t regions = std::size_t{1} << d;
    std::vector<std::int64_t> present(regions, 0);
    s.for_each([&](std::span<const Coord> p) {
        std::size_t r = 0;
        for (std::size_t i = 0; i < d; ++i) {
            r = (r << 1) | (p[i] >= mid[i] ? 1U : 0U);
        }
        ++present[r];
    });
    std::int64_t total = 0;
    for (std::size_t r = 0; r < regions; ++r) {
        std::string key = "missing.";
        Int128 volume = 1;
        for (std::size_t i = 0; i < d; ++i) {
            const bool high = (r >> (d - 1 - i)) & 1U;
            key += high ? '+' : '-';
            volume *= high ? high_len[i] : low_len[i];
        }
        const Int128 miss = volume - present[r];
        const auto clipped = static_cast<std::int64_t>(std::min<Int128>(miss, INT64_MAX));
        out[key] = clipped;
        total = clipped > INT64_MAX - total ? INT64_MAX : total + clipped;
    }
    out["missing.total"] = total;
    return out;
}

namespace {

VerificationReport compare_specs(const PointSet& a, SumDiffSpec spec1, SumDiffSpec spec2, SizeRoute route,
                                 Comparison comparison) {
    if (a.empty()) {
        throw EmptySetError("verification of the empty set");
    }
    if (spec1.level() != spec2.level()) {
        throw ArgumentError("specs " + spec1.to_string() + " and " + spec2.to_string() + " have different levels");
    }
    if (spec1.level() < 2) {
        throw ArgumentError("comparisons need level s + d >= 2");
    }
    SizeOracle oracle(a, route);
    auto lhs = oracle.evaluate(spec1);
    auto rhs = oracle.evaluate(spec2);
    const char* op = comparison == Comparison::strict ? " > " : (comparison == Comparison::balance ? " = " : " >= ");
    auto report = make_report(spec_label(spec1) + op + spec_label(spec2), comparison, lhs.size, rhs.size);
    if (lhs.materialized) {
        for (auto& [key, value] : missing_by_corner(*lhs.materialized)) {
            report.details["lhs." + key] = value;
        }
    }
    if (rhs.materialized) {
        for (auto& [key, value] : missing_by_corner(*rhs.materialized)) {
            report.details["rhs." + key] = value;
        }
    }
    return report;
}

} // namespace

VerificationReport verify_generalized(const PointSet& a, SumDiffSpec spec1, SumDiffSpec spec2, SizeRoute route) {
    return compare_specs(a, spec1, spec2, route, Comparison::strict);
}

VerificationReport verify_balanced(const PointSet& a, SumDiffSpec spec1, SumDiffSpec spec2, SizeRoute route) {
    return compare_specs(a, spec1, spec2, route, Comparison::balance);
}

std::vector<VerificationReport> verify_chain(const PointSet& a, const ChainSpec& spec) {
    spec.validate(std::max(2U, spec.top_level()));
    if (a.empty()) {
        throw EmptySetError("verification of the empty set");
    }
    SizeOracle oracle(a, SizeRoute::automatic);
    std::vector<VerificationReport> out;
    for (const auto& lv : spec.levels) {
        const auto lhs = oracle.evaluate(lv.greater).size;
        const auto rhs = oracle.evaluate(lv.lesser).size;
        auto r = make_report("level " + std::to_string(lv.j) + ": " + spec_label(lv.greater) + " > " +
                                 spec_label(lv.lesser),
                             Comparison::strict, lhs, rhs);
        out.push_back(std::move(r));
    }
    return out;
}

bool all_passed(const std::vector<VerificationReport>& reports) {
    return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed; });
}

// ---------------------------------------------------------------------------
// One-dimensional structure

namespace {

void require_stabilization_input(const PointSet& a) {
    require_1d(a, "stabilization");
    if (a.min_corner()[0] < 0) {
        throw ArgumentError("stabilization needs non-negative elements");
    }
    if (!a.contains(LatticePoint{0})) {
        throw ArgumentError("stabilization needs 0 in A");
    }
    const Coord g = gcd_of_nonzero(a);
    if (g != 1) {
        throw GcdError("gcd of the nonzero elements is " + std::to_string(g) + ", not 1");
    }
}

PointSet kfold(const PointSet& a, std::uint64_t k) {
    if (k == 0 || k > UINT32_MAX) {
        throw ArgumentError("k-fold sum needs 1 <= k < 2^32");
    }
    return iterated_sumdiff(a, {static_cast<unsigned>(k), 0});
}

} // namespace

StabilizationProfile nathanson_stabilize(const PointSet& a) {
    require_stabilization_input(a);
    StabilizationProfile prof;
    prof.a = a.max_corner()[0];
    const auto m = static_cast<std::uint64_t>(a.size() - 1);
    const Int128 threshold = static_cast<Int128>(prof.a) * prof.a * m;
    if (threshold * prof.a > static_cast<Int128>(kMaxDenseCells)) {
        throw ArgumentError("stabilization threshold a^2 m = " + std::to_string(static_cast<std::int64_t>(threshold)) +
                            " is too large to enumerate");
    }
    prof.k_threshold = static_cast<std::uint64_t>(threshold);
    const PointSet ka = kfold(a, prof.k_threshold);
    const auto elems = ka.flat();

    // Longest maximal run of consecutive values.
    std::size_t best_start = 0;
    std::size_t best_len = 0;
    bool tie = false;
    for (std::size_t i = 0; i < elems.size();) {
        std::size_t j = i + 1;
        while (j < elems.size() && elems[j] == elems[j - 1] + 1) {
            ++j;
        }
        if (j - i > best_len) {
            best_len = j - i;
            best_start = i;
            tie = false;
        } else if (j - i == best_len) {
            tie = true;
        }
        i = j;
    }
    if (tie) {
        throw StructureError("kA has two longest runs at k = " + std::to_string(prof.k_threshold));
    }
    const Coord top = static_cast<Coord>(prof.k_threshold) * prof.a;
    prof.c = elems[best_start];
    const Coord run_end = elems[best_start + best_len - 1];
    prof.d_r = top - run_end;
    for (std::size_t i = 0; i < best_start; ++i) {
        prof.C.push_back(elems[i]);
    }
    for (std::size_t i = elems.size(); i-- > best_start + best_len;) {
        prof.D.push_back(top - elems[i]);
    }
    for (std::uint64_t extra : {1U, 2U}) {
        if (!matches_profile(a, prof, prof.k_threshold + extra)) {
            throw StructureError("decomposition does not persist at k = " + std::to_string(prof.k_threshold + extra));
        }
    }
    return prof;
}

bool matches_profile(const PointSet& a, const StabilizationProfile& profile, std::uint64_t k) {
    require_1d(a, "profile check");
    const Coord top = static_cast<Coord>(k) * profile.a;
    std::vector<Coord> expect(profile.C);
    for (Coord x = profile.c; x <= top - profile.d_r; ++x) {
        expect.push_back(x);
    }
    for (Coord x : profile.D) {
        expect.push_back(top - x);
    }
    return kfold(a, k) == PointSet::from_points(1, std::move(expect));
}

bool membership_in_kfold(const PointSet& a, Coord value, std::uint64_t k) {
    require_1d(a, "k-fold membership");
    if (a.min_corner()[0] < 0) {
        throw ArgumentError("k-fold membership needs non-negative elements");
    }
    if (value < 0) {
        return false;
    }
    if (value >= static_cast<Coord>(kMaxDenseCells)) {
        throw ArgumentError("value is too large for the membership table");
    }
    const auto len = static_cast<std::size_t>(value) + 1;
    std::vector<std::uint64_t> reach(bits::words_for(len), 0);
    std::vector<std::uint64_t> next(reach.size());
    bits::set(reach, 0);
    const auto elems = a.flat();
    const auto tail_mask = len % 64 == 0 ? ~std::uint64_t{0} : (~std::uint64_t{0} >> (64 - len % 64));
    for (std::uint64_t step = 0; step < k; ++step) {
        std::fill(next.begin(), next.end(), 0);
        for (Coord x : elems) {
            if (x <= value) {
                bits::or_shifted(next, reach, static_cast<std::size_t>(x));
            }
        }
        next.back() &= tail_mask;
        if (next == reach) {
            break;
        }
        reach.swap(next);
    }
    return bits::test(reach, static_cast<std::size_t>(value));
}

VerificationReport right_fringe_check(const PointSet& a, std::uint64_t k) {
    require_1d(a, "fringe check");
    if (a.min_corner()[0] != 0 || a.size() < 2) {
        throw ArgumentError("fringe check needs 0 = min A and at least two elements");
    }
    const auto elems = a.flat();
    const Coord a1 = elems[1];
    const Coord am = elems.back();
    const PointSet ka = kfold(a, k);
    const Coord top = static_cast<Coord>(k) * am;
    const Coord left_hi = a1 * am;
    const Coord right_lo = (static_cast<Coord>(k) - a1) * am;
    const Coord naive_lo = (static_cast<Coord>(k) - 1) * am;
    std::int64_t total = 0;
    std::int64_t inside = 0;
    std::int64_t outside_naive = 0;
    std::int64_t left = 0;
    std::int64_t right = 0;
    for (Coord x = 0; x <= top; ++x) {
        if (ka.contains(LatticePoint{x})) {
            continue;
        }
        ++total;
        if (2 * x < top) {
            ++left;
            inside += x <= left_hi ? 1 : 0;
        } else {
            ++right;
            inside += x >= right_lo ? 1 : 0;
            outside_naive += x < naive_lo ? 1 : 0;
        }
    }
    auto r = make_report("holes of " + std::to_string(k) + "A inside the corrected fringes", Comparison::balance,
                         static_cast<std::uint64_t>(inside), static_cast<std::uint64_t>(total));
    r.details["left_holes"] = left;
    r.details["right_holes"] = right;
    r.details["right_holes_outside_uncorrected_window"] = outside_naive;
    return r;
}

// ---------------------------------------------------------------------------
// Two-dimensional growth

GrowthParameters growth_parameters(const PointSet& a) {
    if (a.empty()) {
        throw EmptySetError("growth analysis of the empty set");
    }
    if (a.dimension() != 2) {
        throw DimensionError("growth analysis needs a 2D set");
    }
    if (a.min_corner()[0] < 0 || a.min_corner()[1] < 0) {
        throw HypothesisError("growth analysis needs non-negative coordinates");
    }
    GrowthParameters g;
    g.a_prime = a.max_corner()[0];
    g.b_prime = a.max_corner()[1];
    Coord sx = 0;
    Coord sy = 0;
    a.for_each([&](std::span<const Coord> p) {
        if (p[0] != 0 && (sx == 0 || p[0] < sx)) {
            sx = p[0];
        }
        if (p[1] != 0 && (sy == 0 || p[1] < sy)) {
            sy = p[1];
        }
    });
    if (sx == 0 || sy == 0) {
        throw HypothesisError("A needs nonzero coordinates on both axes");
    }
    g.a = sx;
    g.b = sy;
    if (std::gcd(g.a, g.a_prime) != 1) {
        throw HypothesisError("gcd(a, a') = gcd(" + std::to_string(g.a) + ", " + std::to_string(g.a_prime) +
                              ") is not 1");
    }
    if (std::gcd(g.b, g.b_prime) != 1) {
        throw HypothesisError("gcd(b, b') = gcd(" + std::to_string(g.b) + ", " + std::to_string(g.b_prime) +
                              ") is not 1");
    }
    const Coord xs[] = {0, g.a, g.a_prime};
    const Coord ys[] = {0, g.b, g.b_prime};
    for (Coord x : xs) {
        for (Coord y : ys) {
            if (!a.contains(LatticePoint{x, y})) {
                throw HypothesisError("required point (" + std::to_string(x) + "," + std::to_string(y) +
                                      ") is missing");
            }
        }
    }
    const Int128 n = 2 * static_cast<Int128>(std::max(g.a_prime, g.b_prime)) * std::max(g.a_prime, g.b_prime);
    if (n > UINT32_MAX) {
        throw ArgumentError("growth threshold N is too large");
    }
    g.N = static_cast<std::uint64_t>(n);
    return g;
}

bool GrowthProfile::exact() const {
    return std::all_of(residuals.begin(), residuals.end(), [](std::int64_t r) { return r == 0; });
}

GrowthProfile growth_profile(const PointSet& a, unsigned extra) {
    GrowthProfile prof;
    prof.params = growth_parameters(a);
    const auto& g = prof.params;
    prof.N = g.N;
    prof.fit_lo = g.N;
    prof.fit_hi = g.N + 2;
    prof.validate_hi = g.N + 2 + extra;

    PointSet ka = kfold(a, g.N);
    for (std::uint64_t k = g.N; k <= prof.validate_hi; ++k) {
        if (k != g.N) {
            ka = minkowski_sum(ka, a);
        }
        const Int128 box = (static_cast<Int128>(k) * g.a_prime + 1) * (static_cast<Int128>(k) * g.b_prime + 1);
        prof.mu.push_back(static_cast<std::int64_t>(box - static_cast<Int128>(ka.size())));
        if (k == g.N) {
            const Coord xmid = static_cast<Coord>(k) * g.a_prime / 2;
            const Coord ymid = static_cast<Coord>(k) * g.b_prime / 2;
            for (Coord x = 0; x <= static_cast<Coord>(k) * g.a_prime; ++x) {
                prof.missing_columns += ka.contains(LatticePoint{x, ymid}) ? 0 : 1;
            }
            for (Coord y = 0; y <= static_cast<Coord>(k) * g.b_prime; ++y) {
                prof.missing_rows += ka.contains(LatticePoint{xmid, y}) ? 0 : 1;
            }
        }
    }
    prof.beta = prof.mu[1] - prof.mu[0];
    prof.alpha = prof.mu[0] - prof.beta * static_cast<std::int64_t>(g.N);
    for (std::size_t i = 0; i < prof.mu.size(); ++i) {
        const auto k = static_cast<std::int64_t>(g.N + i);
        prof.residuals.push_back(prof.mu[i] - (prof.alpha + prof.beta * k));
    }
    return prof;
}

VerificationReport diff_dominance_check(const PointSet& a, std::uint64_t k) {
    const auto g = growth_parameters(a);
    if (k < g.N) {
        throw ArgumentError("k = " + std::to_string(k) + " is below the threshold N = " + std::to_string(g.N));
    }
    const PointSet ka = kfold(a, k);
    const auto diff = minkowski_sum(ka, negate(ka)).size();
    const auto sum = minkowski_sum(ka, ka).size();
    return make_report("|kA-kA| >= |kA+kA| at k=" + std::to_string(k), Comparison::at_least, diff, sum);
}

std::vector<Classification> check_k_generational(const PointSet& a, unsigned k) {
    if (a.empty()) {
        throw EmptySetError("generational check of the empty set");
    }
    SizeOracle oracle(a, SizeRoute::automatic);
    std::vector<Classification> out;
    for (unsigned c = 1; c <= k; ++c) {
        const auto sum = oracle.evaluate({2 * c, 0}).size;
        const auto diff = oracle.evaluate({c, c}).size;
        out.push_back(make_classification(sum, diff));
    }
    return out;
}

bool all_mstd(const std::vector<Classification>& gens) {
    return !gens.empty() &&
           std::all_of(gens.begin(), gens.end(), [](const auto& c) { return c.verdict == Verdict::mstd; });
}

// ---------------------------------------------------------------------------
// Arithmetic family scan

std::vector<ScanResult> theoremA1_scan(Coord a1_max, Coord x_max, unsigned size_max) {
    if (a1_max < 1 || x_max < 1 || size_max < 1) {
        throw ArgumentError("scan bounds must be positive");
    }
    std::vector<ScanResult> out;
    for (Coord a1 = 3; a1 <= a1_max; ++a1) {
        for (Coord x = 2; x < a1 && x <= x_max; ++x) {
            if (std::gcd(a1, x) != 1) {
                continue;
            }
            const Coord limit = a1 * static_cast<Coord>(size_max);
            std::vector<Coord> pool;
            for (Coord c2 = 0; c2 * x <= a1; ++c2) {
                for (Coord c1 = 1; c1 * a1 + c2 * x <= limit; ++c1) {
                    const Coord v = c1 * a1 + c2 * x;
                    if (v > a1) {
                        pool.push_back(v);
                    }
                }
            }
            std::sort(pool.begin(), pool.end());
            pool.erase(std::unique(pool.begin(), pool.end()), pool.end());

            // Subsets of the pool in lexicographic order, m = 1 + |subset|.
            std::vector<Coord> chosen;
            auto visit = [&](auto&& self, std::size_t from) -> void {
                if (!chosen.empty()) {
                    std::vector<Coord> elems{0, a1};
                    elems.insert(elems.end(), chosen.begin(), chosen.end());
                    const auto set = PointSet::from_points(1, elems);
                    const auto cls = classify(set, SizeRoute::materialize);
                    ScanResult res;
                    res.elements = std::move(elems);
                    res.a1 = a1;
                    res.x = x;
                    std::string label = "{";
                    for (std::size_t i = 0; i < res.elements.size(); ++i) {
                        label += (i ? "," : "") + std::to_string(res.elements[i]);
                    }
                    res.report = make_report(label + "}: |A-A| >= |A+A|", Comparison::at_least, cls.diff_size,
                                             cls.sum_size);
                    out.push_back(std::move(res));
                }
                if (chosen.size() + 1 >= size_max) {
                    return;
                }
                for (std::size_t i = from; i < pool.size(); ++i) {
                    chosen.push_back(pool[i]);
                    self(self, i + 1);
                    chosen.pop_back();
                }
            };
            visit(visit, 0);
        }
    }
    return out;
}

} // namespace mstd
