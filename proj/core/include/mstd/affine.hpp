#pragma once

#include "mstd/point_set.hpp"

#include <vector>

namespace mstd {

__extension__ typedef __int128 Int128;

/// x -> M x + t on Z^d with an integer matrix M.
class IntegerAffineMap {
public:
    /// `matrix` is row-major, d rows of d entries. An empty offset means 0.
    IntegerAffineMap(std::vector<std::vector<Coord>> matrix, std::vector<Coord> offset = {});

    static IntegerAffineMap identity(std::size_t dim);

    /// Upper unitriangular shear x_i += sum_{j > i} m_{i,j} x_j, with slopes
    /// listed as m_{1,2}, m_{1,3}, ..., m_{1,d}, m_{2,3}, ..., m_{d-1,d}.
    /// In 2D this is (x, y) -> (x + m y, y).
    static IntegerAffineMap shear(std::size_t dim, std::span<const Coord> slopes);

    std::size_t dimension() const noexcept { return matrix_.size(); }
    const std::vector<std::vector<Coord>>& matrix() const noexcept { return matrix_; }
    std::span<const Coord> offset() const noexcept { return offset_; }

    /// Exact determinant (fraction-free elimination in 128-bit arithmetic).
    Int128 determinant() const;
    bool injective() const { return determinant() != 0; }

    /// Image of a point; throws ArgumentError if a coordinate leaves the
    /// 62-bit bound.
    std::vector<Coord> operator()(std::span<const Coord> p) const;

private:
    std::vector<std::vector<Coord>> matrix_;
    std::vector<Coord> offset_;
};

enum class Injectivity { required, not_required };

/// {T(a) : a in A}. With Injectivity::required a singular matrix raises
/// SingularMapError.
PointSet apply_affine(const PointSet& a, const IntegerAffineMap& map,
                      Injectivity injectivity = Injectivity::required);

} // namespace mstd
