#include "mstd/io.hpp"

#include "mstd/errors.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <numeric>

namespace mstd {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) {
            ++i;
        }
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t') {
            ++j;
        }
        if (j > i) {
            out.push_back(s.substr(i, j - i));
        }
        i = j;
    }
    return out;
}

template <class Int>
bool parse_int(std::string_view s, Int& out) {
    if (!s.empty() && s.front() == '+') {
        s.remove_prefix(1);
    }
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && ptr == s.data() + s.size() && !s.empty();
}

// Calls fn(line_number, content) for every non-blank, non-comment line.
template <class Fn>
void for_each_line(std::string_view text, Fn fn) {
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        line = trim(line);
        if (line.empty() || line.front() == '#') {
            continue;
        }
        fn(line_no, line);
    }
}

SumDiffSpec parse_pair(std::string_view s, std::size_t line) {
    const auto comma = s.find(',');
    unsigned a = 0;
    unsigned b = 0;
    if (comma == std::string_view::npos || !parse_int(trim(s.substr(0, comma)), a) ||
        !parse_int(trim(s.substr(comma + 1)), b)) {
        throw ParseError(line, "expected 'x,y', got '" + std::string(s) + "'");
    }
    return {a, b};
}

} // namespace

std::string write_pts(const PointSet& a) {
    std::ostringstream out;
    write_pts(a, out);
    return out.str();
}

void write_pts(const PointSet& a, std::ostream& out) {
    if (a.empty()) {
        throw EmptySetError("write_pts: empty set");
    }
    const std::size_t d = a.dimension();
    std::string buf = "dim " + std::to_string(d) + "\n";
    a.for_each([&](std::span<const Coord> p) {
        for (std::size_t i = 0; i < d; ++i) {
            if (i != 0) {
                buf += ' ';
            }
            buf += std::to_string(p[i]);
        }
        buf += '\n';
        if (buf.size() > (1U << 16)) {
            out << buf;
            buf.clear();
        }
    });
    out << buf;
}

PointSet parse_pts(std::string_view text) {
    std::size_t dim = 0;
    std::vector<Coord> flat;
    std::vector<std::size_t> lines;
    for_each_line(text, [&](std::size_t line_no, std::string_view line) {
        const auto fields = split_ws(line);
        if (dim == 0) {
            if (fields.size() != 2 || fields[0] != "dim" || !parse_int(fields[1], dim) || dim == 0) {
                throw ParseError(line_no, "expected header 'dim <d>' with d >= 1");
            }
            return;
        }
        if (fields.size() != dim) {
            throw ParseError(line_no, "expected " + std::to_string(dim) + " coordinates, got " +
                                          std::to_string(fields.size()));
        }
        for (auto f : fields) {
            Coord v = 0;
            if (!parse_int(f, v)) {
                throw ParseError(line_no, "bad integer '" + std::string(f) + "'");
            }
            flat.push_back(v);
        }
        lines.push_back(line_no);
    });
    if (dim == 0) {
        throw ParseError(1, "missing header 'dim <d>'");
    }

    const std::size_t n = lines.size();
    auto at = [&](std::size_t i) { return flat.begin() + static_cast<std::ptrdiff_t>(i * dim); };
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        if (std::equal(at(x), at(x) + dim, at(y))) {
            return x < y;
        }
        return std::lexicographical_compare(at(x), at(x) + dim, at(y), at(y) + dim);
    });
    for (std::size_t i = 1; i < n; ++i) {
        if (std::equal(at(order[i - 1]), at(order[i - 1]) + dim, at(order[i]))) {
            throw DuplicateError(lines[order[i]],
                                 "duplicate point (first seen on line " + std::to_string(lines[order[i - 1]]) + ")");
        }
    }
    return PointSet::from_points(dim, std::move(flat));
}

PointSet parse_pts(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_pts(buf.str());
}

PointSet read_pts_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open '" + path + "'");
    }
    return parse_pts(in);
}

void write_pts_file(const PointSet& a, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("cannot write '" + path + "'");
    }
    write_pts(a, out);
}

std::string render_pbm(const PointSet& a) {
    if (a.dimension() != 2) {
        throw DimensionError("render_pbm: needs a 2D set");
    }
    if (a.empty()) {
        throw EmptySetError("render_pbm: empty set");
    }
    const auto lo = a.min_corner();
    const auto hi = a.max_corner();
    const auto width = static_cast<std::size_t>(hi[0] - lo[0] + 1);
    const auto height = static_cast<std::size_t>(hi[1] - lo[1] + 1);
    std::string out = "P1\n" + std::to_string(width) + " " + std::to_string(height) + "\n";
    out.reserve(out.size() + height * (width + width / 70 + 1));
    std::vector<Coord> p(2);
    for (std::size_t r = 0; r < height; ++r) {
        p[1] = hi[1] - static_cast<Coord>(r);
        for (std::size_t c = 0; c < width; ++c) {
            if (c != 0 && c % 70 == 0) {
                out += '\n';
            }
            p[0] = lo[0] + static_cast<Coord>(c);
            out += a.contains(std::span<const Coord>(p)) ? '1' : '0';
        }
        out += '\n';
    }
    return out;
}

ChainSpec parse_chain_spec(std::string_view text) {
    ChainSpec spec;
    for_each_line(text, [&](std::size_t line_no, std::string_view line) {
        const auto colon = line.find(':');
        const auto gt = line.find('>');
        unsigned j = 0;
        if (colon == std::string_view::npos || gt == std::string_view::npos || gt < colon ||
            !parse_int(trim(line.substr(0, colon)), j)) {
            throw ParseError(line_no, "expected 'j: x,y > w,z'");
        }
        ChainLevel level{j, parse_pair(trim(line.substr(colon + 1, gt - colon - 1)), line_no),
                         parse_pair(trim(line.substr(gt + 1)), line_no)};
        if (level.greater.level() != j || level.lesser.level() != j) {
            throw ParseError(line_no, "both specs must have level " + std::to_string(j));
        }
        spec.levels.push_back(level);
    });
    if (spec.levels.empty()) {
        throw ParseError(0, "chain spec has no levels");
    }
    return spec;
}

std::string format_chain_spec(const ChainSpec& spec) {
    std::string out;
    for (const auto& l : spec.levels) {
        out += std::to_string(l.j) + ": " + std::to_string(l.greater.s) + "," + std::to_string(l.greater.d) +
               " > " + std::to_string(l.lesser.s) + "," + std::to_string(l.lesser.d) + "\n";
    }
    return out;
}

std::string to_string(Comparison c) {
    switch (c) {
    case Comparison::strict:
        return ">";
    case Comparison::balance:
        return "=";
    case Comparison::at_least:
        return ">=";
    }
    return "?";
}

std::string format_report(const VerificationReport& r, bool details) {
    std::string out = r.label + "\t" + to_string(r.comparison) + "\t" + std::to_string(r.lhs_size) + "\t" +
                      std::to_string(r.rhs_size) + "\t" + (r.gap >= 0 ? "+" : "") + std::to_string(r.gap) + "\t" +
                      (r.passed ? "PASS" : "FAIL") + "\n";
    if (details) {
        for (const auto& [key, value] : r.details) {
            out += "  " + key + "\t" + std::to_string(value) + "\n";
        }
    }
    return out;
}

} // namespace mstd
