#pragma once

#include "mstd/analysis.hpp"
#include "mstd/combinators.hpp"
#include "mstd/point_set.hpp"

#include <iosfwd>
#include <string>
#include <string_view>

namespace mstd {

/// "dim d" followed by one point per line in lexicographic order.
std::string write_pts(const PointSet& a);
void write_pts(const PointSet& a, std::ostream& out);

/// Blank lines and lines starting with '#' are skipped. Throws ParseError
/// with the 1-based line number, DuplicateError on a repeated point.
PointSet parse_pts(std::string_view text);
PointSet parse_pts(std::istream& in);

PointSet read_pts_file(const std::string& path);
void write_pts_file(const PointSet& a, const std::string& path);

/// Plain PBM (P1) over the bounding box, top raster row = largest y.
/// Raster lines are wrapped at 70 characters.
std::string render_pbm(const PointSet& a);

/// Lines "j: x,y > w,z"; blank lines and '#' comments ignored.
ChainSpec parse_chain_spec(std::string_view text);
std::string format_chain_spec(const ChainSpec& spec);

/// label, comparison, lhs, rhs, gap, PASS/FAIL, tab separated, followed by
/// one "  key\tvalue" line per detail when `details` is set.
std::string format_report(const VerificationReport& r, bool details = false);

std::string to_string(Comparison c);

} // namespace mstd
