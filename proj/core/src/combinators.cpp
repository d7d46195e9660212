#include "mstd/combinators.hpp"

#include "mstd/affine.hpp"
#include "mstd/constructions.hpp"
#include "mstd/errors.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <string>

namespace mstd {

void ChainSpec::validate(unsigned k) const {
    if (k < 2) {
        throw ArgumentError("chain length k must be at least 2");
    }
    if (levels.empty()) {
        throw ArgumentError("chain spec has no levels");
    }
    std::vector<bool> seen(k + 1, false);
    for (const auto& lv : levels) {
        const std::string where = "level " + std::to_string(lv.j) + ": ";
        if (lv.j < 2 || lv.j > k) {
            throw ArgumentError(where + "must lie in [2, " + std::to_string(k) + "]");
        }
        if (seen[lv.j]) {
            throw ArgumentError(where + "appears twice");
        }
        seen[lv.j] = true;
        if (lv.greater.level() != lv.j || lv.lesser.level() != lv.j) {
            throw ArgumentError(where + "both sides need s + d = " + std::to_string(lv.j));
        }
        if (lv.greater == lv.lesser || lv.greater == lv.lesser.mirrored()) {
            throw ArgumentError(where + "sides coincide up to order, so they are always equal");
        }
    }
}

unsigned ChainSpec::top_level() const noexcept {
    unsigned top = 0;
    for (const auto& lv : levels) {
        top = std::max(top, lv.j);
    }
    return top;
}

namespace {

Coord largest_coordinate(std::span<const PointSet> parts) {
    if (parts.empty()) {
        throw ArgumentError("base expansion needs at least one part");
    }
    const std::size_t d = parts.front().dimension();
    Coord top = 0;
    for (const auto& p : parts) {
        if (p.empty()) {
            throw EmptySetError("base expansion part is empty");
        }
        if (p.dimension() != d) {
            throw DimensionError("base expansion parts differ in dimension");
        }
        for (std::size_t i = 0; i < d; ++i) {
            if (p.min_corner()[i] < 0) {
                throw ArgumentError("base expansion parts need non-negative coordinates");
            }
            top = std::max(top, p.max_corner()[i]);
        }
    }
    return top;
}

} // namespace

Coord minimal_base(std::span<const PointSet> parts, unsigned k) {
    if (k == 0) {
        throw ArgumentError("base expansion level k must be positive");
    }
    const Int128 m = static_cast<Int128>(largest_coordinate(parts)) * k + 1;
    if (m >= kCoordLimit) {
        throw ArgumentError("base expansion multiplier exceeds the coordinate bound");
    }
    return static_cast<Coord>(m);
}

PointSet base_expand(std::span<const PointSet> parts, Coord m, unsigned k) {
    if (k == 0) {
        throw ArgumentError("base expansion level k must be positive");
    }
    const Coord top = largest_coordinate(parts);
    if (static_cast<Int128>(m) <= static_cast<Int128>(top) * k) {
        throw ArgumentError("base m = " + std::to_string(m) + " must exceed k * max coordinate = " +
                            std::to_string(k) + " * " + std::to_string(top));
    }
    // Every coordinate of kC must stay inside the bound.
    Int128 scale = 1;
    Int128 reach = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        reach += scale * top;
        if (reach * k >= kCoordLimit) {
            throw ArgumentError("base expansion of " + std::to_string(parts.size()) +
                                " parts overflows the coordinate bound");
        }
        if (i + 1 < parts.size()) {
            scale *= m;
        }
    }
    PointSet acc = parts.front();
    Coord factor = 1;
    for (std::size_t i = 1; i < parts.size(); ++i) {
        factor *= m;
        acc = minkowski_sum(acc, dilate(parts[i], factor));
    }
    return acc;
}

Chain build_chain(const ChainSpec& spec, unsigned k) {
    spec.validate(k);
    std::vector<std::future<PointSet>> pending;
    for (const auto& lv : spec.levels) {
        pending.push_back(std::async(std::launch::async, [lv] {
            ConstructionParams p;
            p.k = lv.j;
            const Coord n = minimum_side(lv.j);
            p.dims = {n, n};
            p.spec1 = lv.greater;
            p.spec2 = lv.lesser;
            return build_2d(p).set;
        }));
    }
    std::vector<std::pair<PointSet, unsigned>> parts;
    for (std::size_t i = 0; i < pending.size(); ++i) {
        PointSet s = pending[i].get();
        if (s.size() > 1) {
            parts.emplace_back(std::move(s), spec.levels[i].j);
        }
    }
    // Largest part first, so it carries the multiplier 1.
    std::stable_sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) {
        return a.first.max_corner()[0] > b.first.max_corner()[0];
    });

    Chain out;
    for (auto& [set, level] : parts) {
        out.components.push_back(set);
        out.component_levels.push_back(level);
    }
    double volume = 1;
    for (const auto& c : out.components) {
        volume *= static_cast<double>(c.size());
    }
    if (volume > static_cast<double>(kMaxDenseCells)) {
        throw ArgumentError("chain would have about " + std::to_string(volume) +
                            " points, beyond what can be materialized");
    }
    const unsigned top = spec.top_level();
    out.m = minimal_base(out.components, top);
    out.set = base_expand(out.components, out.m, top);
    return out;
}

ChainSpec k_generational_spec(unsigned k) {
    if (k == 0) {
        throw ArgumentError("k-generational sets need k >= 1");
    }
    ChainSpec spec;
    for (unsigned c = 1; c <= k; ++c) {
        spec.levels.push_back({2 * c, {2 * c, 0}, {c, c}});
    }
    return spec;
}

Chain build_k_generational(unsigned k) {
    const ChainSpec spec = k_generational_spec(k);
    return build_chain(spec, 2 * k);
}

} // namespace mstd
