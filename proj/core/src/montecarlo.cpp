#include "mstd/montecarlo.hpp"

#include "mstd/errors.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <iterator>
#include <thread>
#include <tuple>

namespace mstd {

namespace {

constexpr std::uint64_t golden = 0x9e3779b97f4a7c15ULL;

constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t sample_word(std::uint64_t seed, std::uint64_t trial, std::uint64_t index) {
    const std::uint64_t key = mix64(seed + golden) ^ mix64(trial * golden + 0x632be59bd9b4e019ULL);
    return mix64(key + (index + 1) * golden);
}

using Words = std::vector<std::uint64_t>;

// dst |= src << shift, truncated to dst's length.
void or_shifted(Words& dst, const Words& src, std::size_t shift, std::size_t src_words) {
    const std::size_t ws = shift / 64;
    const unsigned bs = shift % 64;
    for (std::size_t i = 0; i < src_words && i + ws < dst.size(); ++i) {
        const std::uint64_t w = src[i];
        if (w == 0) {
            continue;
        }
        dst[i + ws] |= w << bs;
        if (bs != 0 && i + ws + 1 < dst.size()) {
            dst[i + ws + 1] |= w >> (64 - bs);
        }
    }
}

} // namespace

std::string DensityPredicate::to_string() const {
    switch (kind) {
    case Kind::mstd:
        return "mstd";
    case Kind::never:
        return "never";
    case Kind::generalized:
        return spec1.to_string() + ">" + spec2.to_string();
    }
    return "?";
}

std::pair<double, double> wilson_interval(std::uint64_t hits, std::uint64_t trials, double z) {
    if (trials == 0) {
        throw ArgumentError("wilson_interval: trials must be positive");
    }
    const double nt = static_cast<double>(trials);
    const double p = static_cast<double>(hits) / nt;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / nt;
    const double centre = (p + z2 / (2.0 * nt)) / denom;
    const double half = z * std::sqrt(p * (1.0 - p) / nt + z2 / (4.0 * nt * nt)) / denom;
    return {std::max(0.0, std::min(p, centre - half)), std::min(1.0, std::max(p, centre + half))};
}

std::vector<Coord> sample_elements(Coord n, std::uint64_t seed, std::uint64_t trial) {
    if (n < 1) {
        throw ArgumentError("sample_subset: n must be at least 1");
    }
    std::vector<Coord> out;
    const auto count = static_cast<std::uint64_t>(n) + 1;
    for (std::uint64_t w = 0; w * 64 < count; ++w) {
        std::uint64_t bits = sample_word(seed, trial, w);
        const std::uint64_t len = std::min<std::uint64_t>(64, count - w * 64);
        if (len < 64) {
            bits &= (std::uint64_t{1} << len) - 1;
        }
        while (bits != 0) {
            out.push_back(static_cast<Coord>(w * 64 + static_cast<unsigned>(std::countr_zero(bits))));
            bits &= bits - 1;
        }
    }
    return out;
}

PointSet sample_subset(Coord n, std::uint64_t seed, std::uint64_t trial) {
    auto elements = sample_elements(n, seed, trial);
    return PointSet::from_points(1, std::move(elements));
}

std::uint64_t sumdiff_size_1d(const std::vector<Coord>& elements, SumDiffSpec spec) {
    if (elements.empty()) {
        throw EmptySetError("sumdiff_size_1d: empty set");
    }
    if (spec.s + spec.d == 0) {
        return 1;
    }
    const Coord lo = elements.front();
    const auto width = static_cast<std::size_t>(elements.back() - lo);
    std::vector<std::size_t> up;
    std::vector<std::size_t> down;
    for (Coord x : elements) {
        up.push_back(static_cast<std::size_t>(x - lo));
        down.push_back(width - static_cast<std::size_t>(x - lo));
    }
    const std::size_t total_bits = (spec.s + spec.d) * width + 1;
    const std::size_t words = (total_bits + 63) / 64;
    Words cur(words, 0);
    Words next(words, 0);
    cur[0] = 1;
    std::size_t reach = 0;
    for (unsigned step = 0; step < spec.s + spec.d; ++step) {
        const auto& shifts = step < spec.s ? up : down;
        std::fill(next.begin(), next.end(), 0);
        const std::size_t used = reach / 64 + 1;
        for (std::size_t sh : shifts) {
            or_shifted(next, cur, sh, used);
        }
        reach += width;
        std::swap(cur, next);
    }
    std::uint64_t total = 0;
    for (auto w : cur) {
        total += static_cast<std::uint64_t>(std::popcount(w));
    }
    return total;
}

bool density_predicate_holds(const std::vector<Coord>& elements, const DensityPredicate& predicate) {
    if (elements.empty()) {
        return false;
    }
    switch (predicate.kind) {
    case DensityPredicate::Kind::never:
        return false;
    case DensityPredicate::Kind::mstd:
        return sumdiff_size_1d(elements, {2, 0}) > sumdiff_size_1d(elements, {1, 1});
    case DensityPredicate::Kind::generalized:
        return sumdiff_size_1d(elements, predicate.spec1) > sumdiff_size_1d(elements, predicate.spec2);
    }
    return false;
}

DensityEstimate estimate_density(Coord n, std::uint64_t trials, std::uint64_t seed,
                                 const DensityPredicate& predicate, const DensityOptions& options) {
    if (n < 1) {
        throw ArgumentError("estimate_density: n must be at least 1");
    }
    if (trials == 0) {
        throw ArgumentError("estimate_density: trials must be positive");
    }
    unsigned workers = options.workers != 0 ? options.workers : std::max(1U, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, trials));

    std::vector<std::uint64_t> hits(workers, 0);
    std::vector<std::vector<HitRecord>> logs(workers);
    auto run = [&](unsigned w) {
        const std::uint64_t begin = trials * w / workers;
        const std::uint64_t end = trials * (w + 1) / workers;
        for (std::uint64_t t = begin; t < end; ++t) {
            auto elements = sample_elements(n, seed, t);
            if (density_predicate_holds(elements, predicate)) {
                ++hits[w];
                if (options.hit_log != nullptr) {
                    logs[w].push_back({t, std::move(elements)});
                }
            }
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back(run, w);
        }
    }

    DensityEstimate e;
    e.n = n;
    e.trials = trials;
    e.seed = seed;
    for (auto h : hits) {
        e.hits += h;
    }
    e.proportion = static_cast<double>(e.hits) / static_cast<double>(trials);
    std::tie(e.ci_low, e.ci_high) = wilson_interval(e.hits, trials);
    if (options.hit_log != nullptr) {
        options.hit_log->clear();
        // Chunks are contiguous and in order, so concatenation is sorted.
        for (auto& log : logs) {
            std::move(log.begin(), log.end(), std::back_inserter(*options.hit_log));
        }
    }
    return e;
}

std::string to_string(const DensityEstimate& e) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "%lld\t%llu\t%llu\t%.6e\t%.6e\t%.6e\t%llu", static_cast<long long>(e.n),
                  static_cast<unsigned long long>(e.trials), static_cast<unsigned long long>(e.hits), e.proportion,
                  e.ci_low, e.ci_high, static_cast<unsigned long long>(e.seed));
    return buf;
}

} // namespace mstd
