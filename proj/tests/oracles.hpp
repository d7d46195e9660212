#pragma once

// Brute-force reference implementations used only by the tests. They work on
// std::set of coordinate vectors and share no code with the library.

#include <cstdint>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using Point = std::vector<std::int64_t>;
using Set = std::set<Point>;

inline Set sum(const Set& a, const Set& b) {
    Set out;
    for (const auto& p : a) {
        for (const auto& q : b) {
            Point r(p.size());
            for (std::size_t i = 0; i < p.size(); ++i) {
                r[i] = p[i] + q[i];
            }
            out.insert(r);
        }
    }
    return out;
}

inline Set neg(const Set& a) {
    Set out;
    for (auto p : a) {
        for (auto& c : p) {
            c = -c;
        }
        out.insert(p);
    }
    return out;
}

/// sA - dA by folding one copy at a time.
inline Set sumdiff(const Set& a, unsigned s, unsigned d) {
    Set acc;
    bool started = false;
    const Set na = neg(a);
    for (unsigned i = 0; i < s + d; ++i) {
        const Set& term = i < s ? a : na;
        acc = started ? sum(acc, term) : term;
        started = true;
    }
    return acc;
}

inline Set from_1d(const std::vector<std::int64_t>& xs) {
    Set out;
    for (auto x : xs) {
        out.insert({x});
    }
    return out;
}

inline Set from_1d(std::initializer_list<std::int64_t> xs) { return from_1d(std::vector<std::int64_t>(xs)); }

/// Each cell of the box [0, side)^dim kept with probability p.
inline Set random_set(std::mt19937_64& rng, std::size_t dim, std::int64_t side, double p) {
    Set out;
    std::bernoulli_distribution keep(p);
    Point cur(dim, 0);
    while (true) {
        if (keep(rng)) {
            out.insert(cur);
        }
        std::size_t axis = dim;
        while (axis-- > 0) {
            if (++cur[axis] < side) {
                break;
            }
            cur[axis] = 0;
        }
        if (axis == static_cast<std::size_t>(-1)) {
            break;
        }
    }
    if (out.empty()) {
        out.insert(Point(dim, 0));
    }
    return out;
}

/// Random point cloud spread over a wide box so the sparse path is used.
inline Set random_sparse(std::mt19937_64& rng, std::size_t dim, std::size_t n, std::int64_t spread) {
    Set out;
    std::uniform_int_distribution<std::int64_t> coord(-spread, spread);
    while (out.size() < n) {
        Point p(dim);
        for (auto& c : p) {
            c = coord(rng);
        }
        out.insert(p);
    }
    return out;
}

} // namespace oracle
