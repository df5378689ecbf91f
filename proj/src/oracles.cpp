#include "clasp/oracles.hpp"

#include <algorithm>
#include <iomanip>
#include <set>
#include <sstream>
#include <stdexcept>

#include "clasp/bounds.hpp"
#include "clasp/invariants.hpp"
#include "clasp/word.hpp"

namespace clasp::oracle {

namespace {

constexpr Cell kSteps[4] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};

std::vector<Cell> normalized(std::vector<Cell> cells) {
  int min_x = cells.front().x;
  int min_y = cells.front().y;
  for (const auto& c : cells) {
    min_x = std::min(min_x, c.x);
    min_y = std::min(min_y, c.y);
  }
  for (auto& c : cells) {
    c.x -= min_x;
    c.y -= min_y;
  }
  std::sort(cells.begin(), cells.end());
  return cells;
}

bool edge_connected(const std::vector<Cell>& sorted) {
  std::vector<bool> seen(sorted.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Cell c = sorted[stack.back()];
    stack.pop_back();
    for (const auto& s : kSteps) {
      auto it = std::lower_bound(sorted.begin(), sorted.end(), Cell{c.x + s.x, c.y + s.y});
      if (it == sorted.end() || *it != Cell{c.x + s.x, c.y + s.y})
        continue;
      auto idx = static_cast<std::size_t>(it - sorted.begin());
      if (!seen[idx]) {
        seen[idx] = true;
        ++reached;
        stack.push_back(idx);
      }
    }
  }
  return reached == sorted.size();
}

void check_area(int area, int cap) {
  if (area < 1 || area > cap)
    throw std::out_of_range("polyomino area " + std::to_string(area) + " outside 1.." + std::to_string(cap));
}

}  // namespace

Polyomino::Polyomino(std::vector<Cell> cells) {
  if (cells.empty())
    throw std::invalid_argument("a polyomino needs at least one cell");
  cells_ = normalized(std::move(cells));
  if (std::adjacent_find(cells_.begin(), cells_.end()) != cells_.end())
    throw std::invalid_argument("polyomino cells must be distinct");
  if (!edge_connected(cells_))
    throw std::invalid_argument("polyomino cells must be edge-connected");
}

std::uint64_t perimeter(const Polyomino& p) {
  auto cells = p.cells();
  std::uint64_t adjacent = 0;
  for (const auto& c : cells)
    for (Cell n : {Cell{c.x + 1, c.y}, Cell{c.x, c.y + 1}})
      if (std::binary_search(cells.begin(), cells.end(), n))
        ++adjacent;
  return 4 * cells.size() - 2 * adjacent;
}

std::vector<Polyomino> enumerate_polyominoes(int area, int cap) {
  check_area(area, cap);
  std::set<std::vector<Cell>> level{{Cell{0, 0}}};
  for (int size = 1; size < area; ++size) {
    std::set<std::vector<Cell>> next;
    for (const auto& shape : level)
      for (const auto& c : shape)
        for (const auto& s : kSteps) {
          Cell n{c.x + s.x, c.y + s.y};
          if (std::binary_search(shape.begin(), shape.end(), n))
            continue;
          auto grown = shape;
          grown.push_back(n);
          next.insert(normalized(std::move(grown)));
        }
    level = std::move(next);
  }
  std::vector<Polyomino> out;
  out.reserve(level.size());
  for (const auto& shape : level)
    out.emplace_back(shape);
  return out;
}

namespace {

// Cells with y > 0, or y == 0 and x >= 0, so every fixed polyomino is counted
// once with its lowest-leftmost cell at the origin.
class Redelmeier {
public:
  explicit Redelmeier(int n) : n_(n), width_(2 * n + 1), reached_(static_cast<std::size_t>(width_ * (n + 1)), false) {}

  std::uint64_t run() {
    std::vector<Cell> untried{{0, 0}};
    mark(Cell{0, 0}, true);
    recurse(untried, 0);
    return found_;
  }

private:
  bool allowed(const Cell& c) const { return c.y > 0 || (c.y == 0 && c.x >= 0); }
  std::size_t slot(const Cell& c) const { return static_cast<std::size_t>(c.y * width_ + c.x + n_); }
  bool is_reached(const Cell& c) const { return reached_[slot(c)]; }
  void mark(const Cell& c, bool v) { reached_[slot(c)] = v; }

  void recurse(std::vector<Cell> untried, int size) {
    while (!untried.empty()) {
      Cell c = untried.back();
      untried.pop_back();
      if (size + 1 == n_) {
        ++found_;
        continue;
      }
      std::vector<Cell> fresh;
      for (const auto& s : kSteps) {
        Cell nb{c.x + s.x, c.y + s.y};
        if (allowed(nb) && !is_reached(nb)) {
          mark(nb, true);
          fresh.push_back(nb);
        }
      }
      auto next = untried;
      next.insert(next.end(), fresh.begin(), fresh.end());
      recurse(std::move(next), size + 1);
      for (const auto& nb : fresh)
        mark(nb, false);
    }
  }

  int n_;
  int width_;
  std::vector<bool> reached_;
  std::uint64_t found_ = 0;
};

}  // namespace

std::uint64_t count_fixed_polyominoes(int area, int cap) {
  check_area(area, cap);
  return Redelmeier(area).run();
}

bool PolyominoSweep::all_agree() const {
  return std::all_of(reports.begin(), reports.end(), [](const OracleReport& r) { return r.agree; }) &&
         counts == counts_check;
}

PolyominoSweep verify_min_perimeter(int max_area, int cap) {
  check_area(max_area, cap);
  PolyominoSweep sweep;
  for (int a = 1; a <= max_area; ++a) {
    auto shapes = enumerate_polyominoes(a, cap);
    std::uint64_t best = perimeter(shapes.front());
    for (const auto& p : shapes)
      best = std::min(best, perimeter(p));
    OracleReport r;
    r.parameter = a;
    r.observed = best;
    r.predicted = min_polyomino_perimeter(static_cast<std::uint64_t>(a));
    r.agree = r.observed == r.predicted;
    sweep.reports.push_back(r);
    sweep.counts.push_back(shapes.size());
    sweep.counts_check.push_back(count_fixed_polyominoes(a, cap));
  }
  return sweep;
}

bool WordSweep::all_agree() const {
  return length_bound_violations == 0 && curve_bound_violations == 0 && integral_mismatches == 0 &&
         std::all_of(reports.begin(), reports.end(), [](const OracleReport& r) { return r.agree; });
}

namespace {

class WordSearch {
public:
  WordSearch(int max_len, WordSweep& out) : max_len_(max_len), out_(out) {}

  void run() { extend(); }

  std::map<std::uint64_t, std::uint64_t> shortest;  // |A| -> shortest word length

private:
  void extend() {
    const auto len = static_cast<std::int64_t>(letters_.size());
    if (x_ == 0 && y_ == 0)
      record();
    if (len == max_len_)
      return;
    for (const auto& s : kSteps) {
      auto nx = x_ + s.x;
      auto ny = y_ + s.y;
      // Must still be able to walk home.
      if (std::abs(nx) + std::abs(ny) > max_len_ - len - 1)
        continue;
      letters_.emplace_back(s.x != 0 ? 1 : 2, s.x + s.y);
      std::int64_t saved = area_;
      area_ += x_ * s.y;
      x_ = nx;
      y_ = ny;
      extend();
      x_ -= s.x;
      y_ -= s.y;
      area_ = saved;
      letters_.pop_back();
    }
  }

  void record() {
    ClaspWord w(letters_);
    const auto len = static_cast<std::uint64_t>(w.size());
    const auto e = e_ij(w, 1, 2);
    const std::uint64_t abs_e = static_cast<std::uint64_t>(e < 0 ? -e : e);
    const std::uint64_t abs_area = static_cast<std::uint64_t>(area_ < 0 ? -area_ : area_);
    ++out_.words_checked;
    if (e != area_)
      ++out_.integral_mismatches;
    if (len < 2 * ceil_two_sqrt(abs_e))
      ++out_.length_bound_violations;
    if (len < 2 * ceil_two_sqrt(abs_area))
      ++out_.curve_bound_violations;
    auto [it, inserted] = shortest.emplace(abs_e, len);
    if (!inserted)
      it->second = std::min(it->second, len);
  }

  std::int64_t max_len_;
  WordSweep& out_;
  std::vector<SignedLetter> letters_;
  std::int64_t x_ = 0;
  std::int64_t y_ = 0;
  std::int64_t area_ = 0;  // running integral of x dy along the walk
};

}  // namespace

WordSweep verify_word_length_bound(int max_len, int cap) {
  if (max_len < 1 || max_len > cap)
    throw std::out_of_range("word length " + std::to_string(max_len) + " outside 1.." + std::to_string(cap));
  WordSweep sweep;
  WordSearch search(max_len, sweep);
  search.run();
  for (const auto& [a, len] : search.shortest) {
    OracleReport r;
    r.parameter = static_cast<std::int64_t>(a);
    r.observed = len;
    r.predicted = 2 * ceil_two_sqrt(a);
    r.agree = r.observed == r.predicted;
    sweep.reports.push_back(r);
  }
  return sweep;
}

std::string format_reports(const std::string& parameter_name, std::span<const OracleReport> reports) {
  std::ostringstream out;
  out << std::left << std::setw(12) << parameter_name << std::right << std::setw(10) << "observed"
      << std::setw(11) << "predicted" << std::setw(7) << "agree" << '\n';
  for (const auto& r : reports)
    out << std::left << std::setw(12) << r.parameter << std::right << std::setw(10) << r.observed
        << std::setw(11) << r.predicted << std::setw(7) << (r.agree ? "yes" : "NO") << '\n';
  return out.str();
}

}  // namespace clasp::oracle
