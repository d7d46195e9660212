#include "mstd/affine.hpp"

#include "mstd/errors.hpp"

#include <utility>

namespace mstd {

IntegerAffineMap::IntegerAffineMap(std::vector<std::vector<Coord>> matrix, std::vector<Coord> offset)
    : matrix_(std::move(matrix)), offset_(std::move(offset)) {
    const std::size_t d = matrix_.size();
    if (d == 0) {
        throw DimensionError("affine map needs dimension >= 1");
    }
    for (const auto& row : matrix_) {
        if (row.size() != d) {
            throw DimensionError("affine map matrix must be square");
        }
    }
    if (offset_.empty()) {
        offset_.assign(d, 0);
    }
    if (offset_.size() != d) {
        throw DimensionError("affine offset has the wrong dimension");
    }
}

IntegerAffineMap IntegerAffineMap::identity(std::size_t dim) {
    std::vector<std::vector<Coord>> m(dim, std::vector<Coord>(dim, 0));
    for (std::size_t i = 0; i < dim; ++i) {
        m[i][i] = 1;
    }
    return IntegerAffineMap(std::move(m));
}

IntegerAffineMap IntegerAffineMap::shear(std::size_t dim, std::span<const Coord> slopes) {
    if (slopes.size() != dim * (dim - 1) / 2) {
        throw ArgumentError("shear in dimension " + std::to_string(dim) + " needs " +
                            std::to_string(dim * (dim - 1) / 2) + " slopes");
    }
    auto map = identity(dim);
    std::size_t k = 0;
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = i + 1; j < dim; ++j) {
            map.matrix_[i][j] = slopes[k++];
        }
    }
    return map;
}

Int128 IntegerAffineMap::determinant() const {
    const std::size_t n = matrix_.size();
    std::vector<std::vector<Int128>> a(n, std::vector<Int128>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            a[i][j] = matrix_[i][j];
        }
    }
    // Bareiss elimination; every intermediate is a minor of the input.
    int sign = 1;
    Int128 prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) {
                ++p;
            }
            if (p == n) {
                return 0;
            }
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

std::vector<Coord> IntegerAffineMap::operator()(std::span<const Coord> p) const {
    const std::size_t d = matrix_.size();
    if (p.size() != d) {
        throw DimensionError("point dimension does not match the affine map");
    }
    std::vector<Coord> out(d);
    for (std::size_t i = 0; i < d; ++i) {
        Int128 acc = offset_[i];
        for (std::size_t j = 0; j < d; ++j) {
            acc += static_cast<Int128>(matrix_[i][j]) * p[j];
        }
        if (acc <= -static_cast<Int128>(kCoordLimit) || acc >= static_cast<Int128>(kCoordLimit)) {
            throw ArgumentError("affine image leaves the 62-bit coordinate bound");
        }
        out[i] = static_cast<Coord>(acc);
    }
    return out;
}

PointSet apply_affine(const PointSet& a, const IntegerAffineMap& map, Injectivity injectivity) {
    if (injectivity == Injectivity::required && !map.injective()) {
        throw SingularMapError("affine map is not injective");
    }
    if (a.empty()) {
        return a;
    }
    if (a.dimension() != map.dimension()) {
        throw DimensionError("set dimension does not match the affine map");
    }
    std::vector<Coord> flat;
    flat.reserve(a.size() * a.dimension());
    a.for_each([&](std::span<const Coord> p) {
        const auto q = map(p);
        flat.insert(flat.end(), q.begin(), q.end());
    });
    return PointSet::from_points(a.dimension(), std::move(flat));
}

} // namespace mstd
