#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <span>
#include <vector>

namespace mstd {

using Coord = std::int64_t;

/// Coordinates of every stored point satisfy |x| < kCoordLimit. Leaves one
/// bit of headroom so a single sum or difference of two coordinates cannot
/// overflow before it is checked.
inline constexpr Coord kCoordLimit = Coord{1} << 62;

/// Largest bounding box (in cells) the dense backend will allocate.
inline constexpr std::uint64_t kMaxDenseCells = std::uint64_t{1} << 32;

/// A point of Z^d.
class LatticePoint {
public:
    LatticePoint() = default;
    explicit LatticePoint(std::vector<Coord> coords);
    LatticePoint(std::initializer_list<Coord> coords);

    std::size_t dimension() const noexcept { return coords_.size(); }
    Coord operator[](std::size_t i) const { return coords_[i]; }
    std::span<const Coord> coords() const noexcept { return coords_; }

    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;

private:
    std::vector<Coord> coords_;
};

enum class Backend { dense, sparse };

/// Mutable bit grid over an axis-aligned box. Rows run along the last axis
/// and are padded to whole 64-bit words, so a point's bit lives at
/// row(prefix)[last / 64] bit (last % 64).
///
/// Used both as the builder for explicit constructions and as the storage
/// of dense PointSets.
class DenseGrid {
public:
    DenseGrid(std::vector<Coord> origin, std::vector<std::size_t> extents);

    std::size_t dimension() const noexcept { return origin_.size(); }
    std::span<const Coord> origin() const noexcept { return origin_; }
    std::span<const std::size_t> extents() const noexcept { return extents_; }
    std::uint64_t volume() const noexcept { return rows_ * extents_.back(); }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t row_length() const noexcept { return extents_.back(); }
    std::size_t words_per_row() const noexcept { return words_per_row_; }
    std::span<std::uint64_t> row(std::size_t r) noexcept {
        return {bits_.data() + r * words_per_row_, words_per_row_};
    }
    std::span<const std::uint64_t> row(std::size_t r) const noexcept {
        return {bits_.data() + r * words_per_row_, words_per_row_};
    }
    /// Row strides over the first d-1 axes (empty for d = 1).
    std::span<const std::size_t> row_strides() const noexcept { return row_strides_; }

    bool in_box(std::span<const Coord> p) const noexcept;
    bool test(std::span<const Coord> p) const noexcept;
    void set(std::span<const Coord> p);
    void reset(std::span<const Coord> p);
    void set(std::initializer_list<Coord> p) { set(std::span<const Coord>(p.begin(), p.size())); }
    void reset(std::initializer_list<Coord> p) { reset(std::span<const Coord>(p.begin(), p.size())); }

    /// Sets every cell of the inclusive box [lo, hi] that lies inside the grid.
    void fill(std::span<const Coord> lo, std::span<const Coord> hi);
    void fill(std::initializer_list<Coord> lo, std::initializer_list<Coord> hi) {
        fill(std::span<const Coord>(lo.begin(), lo.size()), std::span<const Coord>(hi.begin(), hi.size()));
    }

    std::uint64_t count() const noexcept;

    /// Moves the box by `delta` without touching the bits.
    void shift_origin(std::span<const Coord> delta);

private:
    std::size_t locate(std::span<const Coord> p, std::size_t& bit) const;

    std::vector<Coord> origin_;
    std::vector<std::size_t> extents_;
    std::vector<std::size_t> row_strides_;
    std::size_t rows_ = 1;
    std::size_t words_per_row_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// Immutable finite subset of Z^d. Copies share storage.
///
/// Storage is either a DenseGrid cropped to the bounding box or a
/// lexicographically sorted flat coordinate list. The dense form is used
/// when the box has at most kMaxDenseCells cells and at least 1/64 of
/// them are occupied. Both forms have identical set semantics.
class PointSet {
public:
    /// Empty set of dimension 0.
    PointSet();

    /// Points given as a flat array of `dim`-tuples; duplicates are merged.
    static PointSet from_points(std::size_t dim, std::vector<Coord> flat);
    static PointSet from_points(std::span<const LatticePoint> points);
    static PointSet from_grid(DenseGrid grid);

    static PointSet of(std::initializer_list<Coord> values);
    static PointSet of(std::initializer_list<LatticePoint> points);
    /// The 1D interval [lo, hi].
    static PointSet interval(Coord lo, Coord hi);

    std::size_t dimension() const noexcept;
    std::size_t size() const noexcept;
    bool empty() const noexcept { return size() == 0; }
    Backend backend() const noexcept;

    bool contains(std::span<const Coord> p) const;
    bool contains(const LatticePoint& p) const { return contains(p.coords()); }

    /// Visits points in lexicographic order.
    void for_each(const std::function<void(std::span<const Coord>)>& fn) const;
    std::vector<LatticePoint> points() const;
    /// Lexicographically sorted flat coordinates.
    std::vector<Coord> flat() const;

    /// Tight bounding box corners. Throws EmptySetError on the empty set.
    std::span<const Coord> min_corner() const;
    std::span<const Coord> max_corner() const;

    /// Backend access for the sumset engine; null when the other form is used.
    const DenseGrid* dense_grid() const noexcept;
    std::span<const Coord> sparse_flat() const noexcept;

    friend bool operator==(const PointSet& a, const PointSet& b);

private:
    struct Storage;
    explicit PointSet(std::shared_ptr<const Storage> rep);
    std::shared_ptr<const Storage> rep_;
};

} // namespace mstd
