#pragma once

// Translate-and-OR reference sumset for sets too large for std::set: every
// point of S stamps a shifted copy of T's row bitmaps into a flat bitmap.
// Shares no code with the library.

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

namespace oracle {

struct Cloud {
    std::size_t dim = 0;
    std::vector<std::int64_t> flat;

    std::size_t size() const { return dim == 0 ? 0 : flat.size() / dim; }
    const std::int64_t* at(std::size_t i) const { return flat.data() + i * dim; }
};

inline Cloud negated(Cloud c) {
    for (auto& x : c.flat) {
        x = -x;
    }
    return c;
}

inline Cloud row_sum(const Cloud& s, const Cloud& t) {
    const std::size_t d = s.dim;
    std::vector<std::int64_t> slo(d, INT64_MAX), shi(d, INT64_MIN), tlo(d, INT64_MAX), thi(d, INT64_MIN);
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            slo[j] = std::min(slo[j], s.at(i)[j]);
            shi[j] = std::max(shi[j], s.at(i)[j]);
        }
    }
    for (std::size_t i = 0; i < t.size(); ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            tlo[j] = std::min(tlo[j], t.at(i)[j]);
            thi[j] = std::max(thi[j], t.at(i)[j]);
        }
    }
    std::vector<std::int64_t> ext(d);
    for (std::size_t j = 0; j < d; ++j) {
        ext[j] = shi[j] + thi[j] - slo[j] - tlo[j] + 1;
    }
    const std::size_t width = static_cast<std::size_t>(ext[d - 1]);
    const std::size_t words = (width + 63) / 64;
    std::vector<std::size_t> stride(d, 0);
    std::size_t rows = 1;
    for (std::size_t j = d - 1; j-- > 0;) {
        stride[j] = rows;
        rows *= static_cast<std::size_t>(ext[j]);
    }

    // T grouped into rows keyed by the offset of their prefix from tlo.
    const std::size_t twidth = static_cast<std::size_t>(thi[d - 1] - tlo[d - 1] + 1);
    const std::size_t twords = (twidth + 63) / 64;
    std::map<std::size_t, std::vector<std::uint64_t>> trows;
    for (std::size_t i = 0; i < t.size(); ++i) {
        std::size_t r = 0;
        for (std::size_t j = 0; j + 1 < d; ++j) {
            r += static_cast<std::size_t>(t.at(i)[j] - tlo[j]) * stride[j];
        }
        auto& row = trows[r];
        row.resize(twords, 0);
        const auto b = static_cast<std::size_t>(t.at(i)[d - 1] - tlo[d - 1]);
        row[b / 64] |= std::uint64_t{1} << (b % 64);
    }

    std::vector<std::uint64_t> grid(rows * words, 0);
    for (std::size_t i = 0; i < s.size(); ++i) {
        std::size_t base = 0;
        for (std::size_t j = 0; j + 1 < d; ++j) {
            base += static_cast<std::size_t>(s.at(i)[j] - slo[j]) * stride[j];
        }
        const auto shift = static_cast<std::size_t>(s.at(i)[d - 1] - slo[d - 1]);
        const std::size_t ws = shift / 64;
        const unsigned bs = shift % 64;
        for (const auto& [r, row] : trows) {
            std::uint64_t* dst = grid.data() + (base + r) * words;
            for (std::size_t w = 0; w < twords; ++w) {
                dst[w + ws] |= row[w] << bs;
                if (bs != 0 && w + ws + 1 < words) {
                    dst[w + ws + 1] |= row[w] >> (64 - bs);
                }
            }
        }
    }

    Cloud out;
    out.dim = d;
    std::vector<std::int64_t> p(d);
    for (std::size_t r = 0; r < rows; ++r) {
        std::size_t rem = r;
        for (std::size_t j = 0; j + 1 < d; ++j) {
            p[j] = slo[j] + tlo[j] + static_cast<std::int64_t>(rem / stride[j]);
            rem %= stride[j];
        }
        for (std::size_t w = 0; w < words; ++w) {
            std::uint64_t bits = grid[r * words + w];
            while (bits != 0) {
                const int b = __builtin_ctzll(bits);
                bits &= bits - 1;
                p[d - 1] = slo[d - 1] + tlo[d - 1] + static_cast<std::int64_t>(w * 64 + static_cast<unsigned>(b));
                out.flat.insert(out.flat.end(), p.begin(), p.end());
            }
        }
    }
    return out;
}

/// sA - dA for every s + d <= level, built one summand at a time.
inline std::map<std::pair<unsigned, unsigned>, Cloud> row_sumdiff_table(const Cloud& a, unsigned level) {
    std::map<std::pair<unsigned, unsigned>, Cloud> table;
    const Cloud na = negated(a);
    table[{1, 0}] = a;
    table[{0, 1}] = na;
    for (unsigned l = 2; l <= level; ++l) {
        for (unsigned s = 0; s <= l; ++s) {
            const unsigned d = l - s;
            table[{s, d}] = s > 0 ? row_sum(table.at({s - 1, d}), a) : row_sum(table.at({s, d - 1}), na);
        }
    }
    return table;
}

} // namespace oracle
