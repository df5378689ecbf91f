#include "clasp/curve.hpp"

#include <algorithm>
#include <stdexcept>

namespace clasp {

namespace {

bool unit_step(const GridPoint& p, const GridPoint& q) {
  auto dx = q.x - p.x;
  auto dy = q.y - p.y;
  return (dx == 0 && (dy == 1 || dy == -1)) || (dy == 0 && (dx == 1 || dx == -1));
}

}  // namespace

LatticeCurve LatticeCurve::from_vertices(std::vector<GridPoint> vertices) {
  if (vertices.empty() || vertices.front() != GridPoint{})
    throw std::invalid_argument("lattice curve must start at (0,0)");
  for (std::size_t n = 1; n < vertices.size(); ++n)
    if (!unit_step(vertices[n - 1], vertices[n]))
      throw std::invalid_argument("lattice curve vertices " + std::to_string(n - 1) + " and " +
                                  std::to_string(n) + " are not a unit step apart");
  return LatticeCurve(std::move(vertices));
}

LatticeCurve build_curve(const ClaspWord& w, int i, int j) {
  if (i == j)
    throw std::invalid_argument("build_curve needs two distinct indices");
  std::vector<GridPoint> path{GridPoint{}};
  path.reserve(w.size() + 1);
  GridPoint at{};
  for (const auto& letter : w) {
    if (letter.index == i)
      at.x += letter.sign;
    else if (letter.index == j)
      at.y += letter.sign;
    else
      continue;
    path.push_back(at);
  }
  return LatticeCurve(std::move(path));
}

bool is_closed(const LatticeCurve& c) { return c.back() == GridPoint{}; }

bool is_simple(const LatticeCurve& c) {
  if (!is_closed(c))
    throw std::invalid_argument("is_simple is only defined for closed curves");
  // Length 0 is a point and length 2 retraces one edge.
  if (c.length() < 4)
    return false;
  auto v = c.vertices();
  std::vector<GridPoint> seen(v.begin(), v.end() - 1);
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

std::int64_t line_integral_x_dy(const LatticeCurve& c) {
  std::int64_t total = 0;
  auto v = c.vertices();
  for (std::size_t n = 1; n < v.size(); ++n)
    total += v[n - 1].x * (v[n].y - v[n - 1].y);
  return total;
}

LatticeCurve orientation_reversed(const LatticeCurve& c) {
  auto v = c.vertices();
  std::vector<GridPoint> out;
  out.reserve(v.size());
  const GridPoint origin = c.back();
  for (auto it = v.rbegin(); it != v.rend(); ++it)
    out.push_back({it->x - origin.x, it->y - origin.y});
  return LatticeCurve::from_vertices(std::move(out));
}

std::string to_vertex_list(const LatticeCurve& c) {
  std::string out;
  for (const auto& p : c.vertices()) {
    out += std::to_string(p.x);
    out += ' ';
    out += std::to_string(p.y);
    out += '\n';
  }
  return out;
}

}  // namespace clasp
