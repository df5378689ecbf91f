#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "clasp/word.hpp"

namespace clasp {

struct GridPoint {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

/// A unit-step path in Z^2 starting at the origin.
class LatticeCurve {
public:
  /// The length-0 curve sitting at the origin.
  LatticeCurve() : vertices_{GridPoint{}} {}

  /// Throws std::invalid_argument unless vertices start at (0,0) and every
  /// consecutive pair is one cardinal unit step apart.
  static LatticeCurve from_vertices(std::vector<GridPoint> vertices);

  std::span<const GridPoint> vertices() const noexcept { return vertices_; }
  std::size_t length() const noexcept { return vertices_.size() - 1; }
  const GridPoint& back() const noexcept { return vertices_.back(); }

  friend bool operator==(const LatticeCurve&, const LatticeCurve&) = default;

private:
  explicit LatticeCurve(std::vector<GridPoint> v) : vertices_(std::move(v)) {}
  std::vector<GridPoint> vertices_;

  friend LatticeCurve build_curve(const ClaspWord&, int, int);
};

/// x_i steps right, x_i^-1 left, x_j up, x_j^-1 down; other letters are skipped.
LatticeCurve build_curve(const ClaspWord& w, int i, int j);

bool is_closed(const LatticeCurve& c);

/// True for an embedded closed curve: length >= 4 and no vertex revisited
/// except the shared start/end. Throws std::invalid_argument on an open curve.
bool is_simple(const LatticeCurve& c);

/// Exact value of the closed-or-open integral of x dy along c.
std::int64_t line_integral_x_dy(const LatticeCurve& c);

/// Same path walked backwards, translated to start at the origin.
LatticeCurve orientation_reversed(const LatticeCurve& c);

/// One "x y" line per vertex.
std::string to_vertex_list(const LatticeCurve& c);

}  // namespace clasp
