#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "clasp/curve.hpp"

namespace clasp::cli {

enum ExitCode : int {
  kOk = 0,
  kDisagreement = 1,
  kInputError = 2,
  kIoError = 3,
};

inline constexpr int kPixelsPerUnit = 40;

/// SVG of c: one polyline through its vertices, a start marker, and optional
/// grid lines. The region is filled when c is simple and closed.
std::string render_curve_svg(const LatticeCurve& c, bool grid);

/// Runs one subcommand. args excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace clasp::cli
