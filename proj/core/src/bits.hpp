#pragma once

// Word-level helpers for rows of the dense backend. A row is a span of
// 64-bit words; bit i lives in word i / 64 at position i % 64.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>

namespace mstd::bits {

using Word = std::uint64_t;

constexpr std::size_t words_for(std::size_t nbits) noexcept { return (nbits + 63) / 64; }

inline bool test(std::span<const Word> row, std::size_t i) noexcept {
    return (row[i / 64] >> (i % 64)) & 1U;
}

inline void set(std::span<Word> row, std::size_t i) noexcept { row[i / 64] |= Word{1} << (i % 64); }

/// Sets bits [from, to], inclusive.
inline void set_range(std::span<Word> row, std::size_t from, std::size_t to) noexcept {
    std::size_t wf = from / 64;
    const std::size_t wt = to / 64;
    const Word head = ~Word{0} << (from % 64);
    const Word tail = ~Word{0} >> (63 - to % 64);
    if (wf == wt) {
        row[wf] |= head & tail;
        return;
    }
    row[wf] |= head;
    for (++wf; wf < wt; ++wf) {
        row[wf] = ~Word{0};
    }
    row[wt] |= tail;
}

inline bool none(std::span<const Word> row) noexcept {
    for (Word w : row) {
        if (w != 0) {
            return false;
        }
    }
    return true;
}

inline std::uint64_t popcount(std::span<const Word> row) noexcept {
    std::uint64_t c = 0;
    for (Word w : row) {
        c += static_cast<std::uint64_t>(std::popcount(w));
    }
    return c;
}

/// Index of the lowest set bit; the row must not be empty.
inline std::size_t first_set(std::span<const Word> row) noexcept {
    std::size_t i = 0;
    while (row[i] == 0) {
        ++i;
    }
    return i * 64 + static_cast<std::size_t>(std::countr_zero(row[i]));
}

/// Index of the highest set bit; the row must not be empty.
inline std::size_t last_set(std::span<const Word> row) noexcept {
    std::size_t i = row.size() - 1;
    while (row[i] == 0) {
        --i;
    }
    return i * 64 + 63 - static_cast<std::size_t>(std::countl_zero(row[i]));
}

template <class Fn>
void for_each_set(std::span<const Word> row, Fn&& fn) {
    for (std::size_t i = 0; i < row.size(); ++i) {
        Word w = row[i];
        while (w != 0) {
            fn(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
            w &= w - 1;
        }
    }
}

/// Calls fn(start, length) for each maximal run of set bits.
template <class Fn>
void for_each_run(std::span<const Word> row, Fn&& fn) {
    std::size_t pos = 0;
    const std::size_t nwords = row.size();
    while (true) {
        std::size_t w = pos / 64;
        if (w >= nwords) {
            return;
        }
        Word cur = row[w] & (~Word{0} << (pos % 64));
        while (cur == 0) {
            if (++w == nwords) {
                return;
            }
            cur = row[w];
        }
        const std::size_t start = w * 64 + static_cast<std::size_t>(std::countr_zero(cur));
        Word gap = ~row[w] & (~Word{0} << (start % 64));
        while (gap == 0) {
            if (++w == nwords) {
                fn(start, nwords * 64 - start);
                return;
            }
            gap = ~row[w];
        }
        const std::size_t end = w * 64 + static_cast<std::size_t>(std::countr_zero(gap));
        fn(start, end - start);
        pos = end;
    }
}

/// dst |= src << shift. Bits pushed past the end of dst are dropped.
inline void or_shifted(std::span<Word> dst, std::span<const Word> src, std::size_t shift) noexcept {
    const std::size_t ws = shift / 64;
    const unsigned bs = shift % 64;
    if (bs == 0) {
        for (std::size_t i = 0; i < src.size() && i + ws < dst.size(); ++i) {
            dst[i + ws] |= src[i];
        }
        return;
    }
    for (std::size_t i = 0; i < src.size() && i + ws < dst.size(); ++i) {
        const Word w = src[i];
        dst[i + ws] |= w << bs;
        if (i + ws + 1 < dst.size()) {
            dst[i + ws + 1] |= w >> (64 - bs);
        }
    }
}

/// row |= row << shift, in place.
inline void or_self_shifted(std::span<Word> row, std::size_t shift) noexcept {
    const std::size_t ws = shift / 64;
    const unsigned bs = shift % 64;
    for (std::size_t i = row.size(); i-- > ws;) {
        Word v = row[i - ws] << bs;
        if (bs != 0 && i > ws) {
            v |= row[i - ws - 1] >> (64 - bs);
        }
        row[i] |= v;
    }
}

/// row becomes OR_{t < len} (row << t); len >= 1. Uses O(log len) passes.
inline void smear(std::span<Word> row, std::size_t len) noexcept {
    std::size_t covered = 1;
    while (covered * 2 <= len) {
        or_self_shifted(row, covered);
        covered *= 2;
    }
    if (covered < len) {
        or_self_shifted(row, len - covered);
    }
}

/// dst = src bits [offset, offset + len), written from bit 0 of dst.
inline void extract(std::span<Word> dst, std::span<const Word> src, std::size_t offset, std::size_t len) noexcept {
    const std::size_t ws = offset / 64;
    const unsigned bs = offset % 64;
    const std::size_t nw = words_for(len);
    for (std::size_t i = 0; i < nw; ++i) {
        Word v = (i + ws < src.size()) ? src[i + ws] >> bs : 0;
        if (bs != 0 && i + ws + 1 < src.size()) {
            v |= src[i + ws + 1] << (64 - bs);
        }
        dst[i] = v;
    }
    if (len % 64 != 0) {
        dst[nw - 1] &= ~Word{0} >> (64 - len % 64);
    }
}

} // namespace mstd::bits
