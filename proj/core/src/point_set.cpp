#include "mstd/point_set.hpp"

#include "bits.hpp"
#include "mstd/errors.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <limits>
#include <numeric>
#include <optional>
#include <string>

namespace mstd {

LatticePoint::LatticePoint(std::vector<Coord> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) {
        throw ArgumentError("a lattice point needs at least one coordinate");
    }
}

LatticePoint::LatticePoint(std::initializer_list<Coord> coords)
    : LatticePoint(std::vector<Coord>(coords)) {}

// ---------------------------------------------------------------------------
// DenseGrid

DenseGrid::DenseGrid(std::vector<Coord> origin, std::vector<std::size_t> extents)
    : origin_(std::move(origin)), extents_(std::move(extents)) {
    if (origin_.empty() || origin_.size() != extents_.size()) {
        throw DimensionError("grid origin and extents must have the same positive length");
    }
    std::uint64_t cells = 1;
    for (std::size_t e : extents_) {
        if (e == 0) {
            throw ArgumentError("grid extents must be positive");
        }
        if (cells > kMaxDenseCells / e) {
            throw ArgumentError("grid exceeds the dense backend limit of 2^32 cells");
        }
        cells *= e;
    }
    const std::size_t d = extents_.size();
    row_strides_.assign(d - 1, 1);
    for (std::size_t i = d - 1; i-- > 0;) {
        row_strides_[i] = (i + 2 < d) ? row_strides_[i + 1] * extents_[i + 1] : 1;
    }
    rows_ = 1;
    for (std::size_t i = 0; i + 1 < d; ++i) {
        rows_ *= extents_[i];
    }
    words_per_row_ = bits::words_for(extents_.back());
    bits_.assign(rows_ * words_per_row_, 0);
}

bool DenseGrid::in_box(std::span<const Coord> p) const noexcept {
    if (p.size() != origin_.size()) {
        return false;
    }
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] < origin_[i] || p[i] - origin_[i] >= static_cast<Coord>(extents_[i])) {
            return false;
        }
    }
    return true;
}

std::size_t DenseGrid::locate(std::span<const Coord> p, std::size_t& bit) const {
    std::size_t r = 0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        r += static_cast<std::size_t>(p[i] - origin_[i]) * row_strides_[i];
    }
    bit = static_cast<std::size_t>(p.back() - origin_.back());
    return r;
}

bool DenseGrid::test(std::span<const Coord> p) const noexcept {
    if (!in_box(p)) {
        return false;
    }
    std::size_t bit = 0;
    const std::size_t r = locate(p, bit);
    return bits::test(row(r), bit);
}

void DenseGrid::set(std::span<const Coord> p) {
    if (!in_box(p)) {
        throw ArgumentError("point lies outside the grid box");
    }
    std::size_t bit = 0;
    const std::size_t r = locate(p, bit);
    bits::set(row(r), bit);
}

void DenseGrid::reset(std::span<const Coord> p) {
    if (!in_box(p)) {
        return;
    }
    std::size_t bit = 0;
    const std::size_t r = locate(p, bit);
    row(r)[bit / 64] &= ~(std::uint64_t{1} << (bit % 64));
}

void DenseGrid::fill(std::span<const Coord> lo, std::span<const Coord> hi) {
    const std::size_t d = dimension();
    if (lo.size() != d || hi.size() != d) {
        throw DimensionError("fill box has the wrong dimension");
    }
    std::vector<std::size_t> from(d);
    std::vector<std::size_t> to(d);
    for (std::size_t i = 0; i < d; ++i) {
        const Coord a = std::max(lo[i], origin_[i]);
        const Coord b = std::min(hi[i], origin_[i] + static_cast<Coord>(extents_[i]) - 1);
        if (a > b) {
            return;
        }
        from[i] = static_cast<std::size_t>(a - origin_[i]);
        to[i] = static_cast<std::size_t>(b - origin_[i]);
    }
    // Odometer over the prefix axes.
    std::vector<std::size_t> idx(from.begin(), from.end() - 1);
    while (true) {
        std::size_t r = 0;
        for (std::size_t i = 0; i + 1 < d; ++i) {
            r += idx[i] * row_strides_[i];
        }
        bits::set_range(row(r), from[d - 1], to[d - 1]);
        bool done = true;
        for (std::size_t axis = d - 1; axis-- > 0;) {
            if (++idx[axis] <= to[axis]) {
                done = false;
                break;
            }
            idx[axis] = from[axis];
        }
        if (done) {
            return;
        }
    }
}

std::uint64_t DenseGrid::count() const noexcept {
    std::uint64_t c = 0;
    for (std::uint64_t w : bits_) {
        c += static_cast<std::uint64_t>(std::popcount(w));
    }
    return c;
}

void DenseGrid::shift_origin(std::span<const Coord> delta) {
    if (delta.size() != origin_.size()) {
        throw DimensionError("origin shift has the wrong dimension");
    }
    for (std::size_t i = 0; i < delta.size(); ++i) {
        origin_[i] += delta[i];
        const Coord far = origin_[i] + static_cast<Coord>(extents_[i]) - 1;
        if (origin_[i] <= -kCoordLimit || far >= kCoordLimit) {
            throw ArgumentError("translation leaves the 62-bit coordinate bound");
        }
    }
}

// ---------------------------------------------------------------------------
// PointSet storage

struct PointSet::Storage {
    std::size_t dim = 0;
    std::size_t count = 0;
    std::vector<Coord> lo;
    std::vector<Coord> hi;
    std::optional<DenseGrid> grid;
    std::vector<Coord> flat;
};

namespace {

template <std::size_t D>
void sort_unique_fixed(std::vector<Coord>& flat) {
    using Tuple = std::array<Coord, D>;
    const std::size_t n = flat.size() / D;
    std::vector<Tuple> tuples(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::copy_n(flat.begin() + static_cast<std::ptrdiff_t>(i * D), D, tuples[i].begin());
    }
    std::sort(tuples.begin(), tuples.end());
    tuples.erase(std::unique(tuples.begin(), tuples.end()), tuples.end());
    flat.resize(tuples.size() * D);
    for (std::size_t i = 0; i < tuples.size(); ++i) {
        std::copy(tuples[i].begin(), tuples[i].end(), flat.begin() + static_cast<std::ptrdiff_t>(i * D));
    }
}

void sort_unique_generic(std::size_t d, std::vector<Coord>& flat) {
    const std::size_t n = flat.size() / d;
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    auto tuple = [&](std::size_t i) { return std::span<const Coord>(flat.data() + i * d, d); };
    auto less = [&](std::size_t a, std::size_t b) {
        auto ta = tuple(a);
        auto tb = tuple(b);
        return std::lexicographical_compare(ta.begin(), ta.end(), tb.begin(), tb.end());
    };
    std::sort(order.begin(), order.end(), less);
    std::vector<Coord> out;
    out.reserve(flat.size());
    for (std::size_t k = 0; k < n; ++k) {
        auto t = tuple(order[k]);
        if (!out.empty() && std::equal(t.begin(), t.end(), out.end() - static_cast<std::ptrdiff_t>(d))) {
            continue;
        }
        out.insert(out.end(), t.begin(), t.end());
    }
    flat = std::move(out);
}

void sort_unique(std::size_t d, std::vector<Coord>& flat) {
    switch (d) {
    case 1:
        std::sort(flat.begin(), flat.end());
        flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
        break;
    case 2:
        sort_unique_fixed<2>(flat);
        break;
    case 3:
        sort_unique_fixed<3>(flat);
        break;
    default:
        sort_unique_generic(d, flat);
    }
}

void check_coords(std::span<const Coord> flat) {
    for (Coord c : flat) {
        if (c <= -kCoordLimit || c >= kCoordLimit) {
            throw ArgumentError("coordinate " + std::to_string(c) + " exceeds the 62-bit coordinate bound");
        }
    }
}

// Box volume in cells, saturated to max when it exceeds the dense limit.
std::uint64_t box_volume(std::span<const Coord> lo, std::span<const Coord> hi) {
    std::uint64_t v = 1;
    for (std::size_t i = 0; i < lo.size(); ++i) {
        const auto e = static_cast<std::uint64_t>(hi[i] - lo[i]) + 1;
        if (v > kMaxDenseCells / e) {
            return std::numeric_limits<std::uint64_t>::max();
        }
        v *= e;
    }
    return v;
}

bool prefers_dense(std::uint64_t count, std::uint64_t volume) {
    return volume <= kMaxDenseCells && count * 64 >= volume;
}

std::vector<std::size_t> extents_of(std::span<const Coord> lo, std::span<const Coord> hi) {
    std::vector<std::size_t> e(lo.size());
    for (std::size_t i = 0; i < lo.size(); ++i) {
        e[i] = static_cast<std::size_t>(hi[i] - lo[i]) + 1;
    }
    return e;
}

// Iterates the non-empty rows of a grid, handing the prefix (local
// coordinates on axes 0..d-2) and the row words to `fn`.
template <class Fn>
void for_each_row(const DenseGrid& g, Fn&& fn) {
    const std::size_t d = g.dimension();
    std::vector<std::size_t> prefix(d - 1, 0);
    for (std::size_t r = 0; r < g.rows(); ++r) {
        auto words = g.row(r);
        if (!bits::none(words)) {
            fn(std::span<const std::size_t>(prefix), words);
        }
        for (std::size_t axis = d - 1; axis-- > 0;) {
            if (++prefix[axis] < g.extents()[axis]) {
                break;
            }
            prefix[axis] = 0;
        }
    }
}

} // namespace

PointSet::PointSet() : rep_(std::make_shared<Storage>()) {}

PointSet::PointSet(std::shared_ptr<const Storage> rep) : rep_(std::move(rep)) {}

PointSet PointSet::from_points(std::size_t dim, std::vector<Coord> flat) {
    if (dim == 0) {
        throw DimensionError("point sets need dimension >= 1");
    }
    if (flat.size() % dim != 0) {
        throw DimensionError("flat coordinate array is not a whole number of points");
    }
    check_coords(flat);
    sort_unique(dim, flat);

    auto rep = std::make_shared<Storage>();
    rep->dim = dim;
    rep->count = flat.size() / dim;
    if (rep->count == 0) {
        return PointSet(std::move(rep));
    }
    rep->lo.assign(flat.begin(), flat.begin() + static_cast<std::ptrdiff_t>(dim));
    rep->hi = rep->lo;
    for (std::size_t i = 0; i < flat.size(); ++i) {
        const std::size_t a = i % dim;
        rep->lo[a] = std::min(rep->lo[a], flat[i]);
        rep->hi[a] = std::max(rep->hi[a], flat[i]);
    }
    if (prefers_dense(rep->count, box_volume(rep->lo, rep->hi))) {
        DenseGrid g(rep->lo, extents_of(rep->lo, rep->hi));
        for (std::size_t i = 0; i < rep->count; ++i) {
            g.set(std::span<const Coord>(flat.data() + i * dim, dim));
        }
        rep->grid.emplace(std::move(g));
    } else {
        rep->flat = std::move(flat);
    }
    return PointSet(std::move(rep));
}

PointSet PointSet::from_points(std::span<const LatticePoint> points) {
    if (points.empty()) {
        throw EmptySetError("cannot infer a dimension from an empty point list");
    }
    const std::size_t d = points.front().dimension();
    std::vector<Coord> flat;
    flat.reserve(points.size() * d);
    for (const auto& p : points) {
        if (p.dimension() != d) {
            throw DimensionError("points of mixed dimension");
        }
        flat.insert(flat.end(), p.coords().begin(), p.coords().end());
    }
    return from_points(d, std::move(flat));
}

PointSet PointSet::from_grid(DenseGrid grid) {
    const std::size_t d = grid.dimension();
    auto rep = std::make_shared<Storage>();
    rep->dim = d;

    // Tight box, in local coordinates.
    std::vector<std::size_t> lo(d, std::numeric_limits<std::size_t>::max());
    std::vector<std::size_t> hi(d, 0);
    std::uint64_t count = 0;
    for_each_row(grid, [&](std::span<const std::size_t> prefix, std::span<const std::uint64_t> words) {
        for (std::size_t i = 0; i + 1 < d; ++i) {
            lo[i] = std::min(lo[i], prefix[i]);
            hi[i] = std::max(hi[i], prefix[i]);
        }
        lo[d - 1] = std::min(lo[d - 1], bits::first_set(words));
        hi[d - 1] = std::max(hi[d - 1], bits::last_set(words));
        count += bits::popcount(words);
    });
    rep->count = count;
    if (count == 0) {
        return PointSet(std::move(rep));
    }
    rep->lo.resize(d);
    rep->hi.resize(d);
    for (std::size_t i = 0; i < d; ++i) {
        rep->lo[i] = grid.origin()[i] + static_cast<Coord>(lo[i]);
        rep->hi[i] = grid.origin()[i] + static_cast<Coord>(hi[i]);
    }

    bool tight = true;
    for (std::size_t i = 0; i < d; ++i) {
        tight = tight && lo[i] == 0 && hi[i] + 1 == grid.extents()[i];
    }

    if (prefers_dense(count, box_volume(rep->lo, rep->hi))) {
        if (tight) {
            rep->grid.emplace(std::move(grid));
        } else {
            DenseGrid cropped(rep->lo, extents_of(rep->lo, rep->hi));
            const std::size_t len = hi[d - 1] - lo[d - 1] + 1;
            for_each_row(grid, [&](std::span<const std::size_t> prefix, std::span<const std::uint64_t> words) {
                std::size_t r = 0;
                for (std::size_t i = 0; i + 1 < d; ++i) {
                    r += (prefix[i] - lo[i]) * cropped.row_strides()[i];
                }
                bits::extract(cropped.row(r), words, lo[d - 1], len);
            });
            rep->grid.emplace(std::move(cropped));
        }
    } else {
        rep->flat.reserve(count * d);
        std::vector<Coord> p(d);
        for_each_row(grid, [&](std::span<const std::size_t> prefix, std::span<const std::uint64_t> words) {
            for (std::size_t i = 0; i + 1 < d; ++i) {
                p[i] = grid.origin()[i] + static_cast<Coord>(prefix[i]);
            }
            bits::for_each_set(words, [&](std::size_t b) {
                p[d - 1] = grid.origin()[d - 1] + static_cast<Coord>(b);
                rep->flat.insert(rep->flat.end(), p.begin(), p.end());
            });
        });
    }
    return PointSet(std::move(rep));
}

PointSet PointSet::of(std::initializer_list<Coord> values) {
    return from_points(1, std::vector<Coord>(values));
}

PointSet PointSet::of(std::initializer_list<LatticePoint> points) {
    return from_points(std::span<const LatticePoint>(points.begin(), points.size()));
}

PointSet PointSet::interval(Coord lo, Coord hi) {
    if (lo > hi) {
        return from_points(1, {});
    }
    DenseGrid g({lo}, {static_cast<std::size_t>(hi - lo) + 1});
    g.fill({lo}, {hi});
    return from_grid(std::move(g));
}

std::size_t PointSet::dimension() const noexcept { return rep_->dim; }
std::size_t PointSet::size() const noexcept { return rep_->count; }

Backend PointSet::backend() const noexcept {
    return rep_->grid ? Backend::dense : Backend::sparse;
}

bool PointSet::contains(std::span<const Coord> p) const {
    if (p.size() != rep_->dim) {
        throw DimensionError("query point has the wrong dimension");
    }
    if (rep_->grid) {
        return rep_->grid->test(p);
    }
    const std::size_t d = rep_->dim;
    std::size_t lo = 0;
    std::size_t hi = rep_->count;
    while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        const Coord* t = rep_->flat.data() + mid * d;
        if (std::lexicographical_compare(t, t + d, p.begin(), p.end())) {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    return lo < rep_->count && std::equal(p.begin(), p.end(), rep_->flat.data() + lo * d);
}

void PointSet::for_each(const std::function<void(std::span<const Coord>)>& fn) const {
    const std::size_t d = rep_->dim;
    if (!rep_->grid) {
        for (std::size_t i = 0; i < rep_->count; ++i) {
            fn(std::span<const Coord>(rep_->flat.data() + i * d, d));
        }
        return;
    }
    const DenseGrid& g = *rep_->grid;
    std::vector<Coord> p(d);
    for_each_row(g, [&](std::span<const std::size_t> prefix, std::span<const std::uint64_t> words) {
        for (std::size_t i = 0; i + 1 < d; ++i) {
            p[i] = g.origin()[i] + static_cast<Coord>(prefix[i]);
        }
        bits::for_each_set(words, [&](std::size_t b) {
            p[d - 1] = g.origin()[d - 1] + static_cast<Coord>(b);
            fn(std::span<const Coord>(p));
        });
    });
}

std::vector<LatticePoint> PointSet::points() const {
    std::vector<LatticePoint> out;
    out.reserve(size());
    for_each([&](std::span<const Coord> p) { out.emplace_back(std::vector<Coord>(p.begin(), p.end())); });
    return out;
}

std::vector<Coord> PointSet::flat() const {
    if (!rep_->grid) {
        return rep_->flat;
    }
    std::vector<Coord> out;
    out.reserve(size() * rep_->dim);
    for_each([&](std::span<const Coord> p) { out.insert(out.end(), p.begin(), p.end()); });
    return out;
}

std::span<const Coord> PointSet::min_corner() const {
    if (empty()) {
        throw EmptySetError("bounding box of an empty set");
    }
    return rep_->lo;
}

std::span<const Coord> PointSet::max_corner() const {
    if (empty()) {
        throw EmptySetError("bounding box of an empty set");
    }
    return rep_->hi;
}

const DenseGrid* PointSet::dense_grid() const noexcept {
    return rep_->grid ? &*rep_->grid : nullptr;
}

std::span<const Coord> PointSet::sparse_flat() const noexcept { return rep_->flat; }

bool operator==(const PointSet& a, const PointSet& b) {
    if (a.rep_ == b.rep_) {
        return true;
    }
    if (a.dimension() != b.dimension() || a.size() != b.size()) {
        return false;
    }
    if (a.empty()) {
        return true;
    }
    if (a.rep_->lo != b.rep_->lo || a.rep_->hi != b.rep_->hi) {
        return false;
    }
    const DenseGrid* ga = a.dense_grid();
    const DenseGrid* gb = b.dense_grid();
    if (ga && gb) {
        for (std::size_t r = 0; r < ga->rows(); ++r) {
            auto ra = ga->row(r);
            auto rb = gb->row(r);
            if (!std::equal(ra.begin(), ra.end(), rb.begin())) {
                return false;
            }
        }
        return true;
    }
    return a.flat() == b.flat();
}

} // namespace mstd
