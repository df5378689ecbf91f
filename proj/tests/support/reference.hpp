#pragma once

// Test-only reference computations, kept independent of the library code paths.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <tuple>
#include <cstdlib>
#include <vector>

#include "clasp/curve.hpp"
#include "clasp/word.hpp"

namespace clasp::testing {

/// Literal double sum over v and u <= v of delta(i_u,i) delta(i_v,j) eps_u eps_v.
inline std::int64_t e_ij_double_sum(const ClaspWord& w, int i, int j) {
  std::int64_t total = 0;
  for (std::size_t v = 0; v < w.size(); ++v)
    for (std::size_t u = 0; u <= v; ++u)
      if (w[u].index == i && w[v].index == j)
        total += w[u].sign * w[v].sign;
  return total;
}

/// Number of unit cells whose centre is inside c by the even-odd rule.
inline std::int64_t even_odd_cell_count(const LatticeCurve& c) {
  auto v = c.vertices();
  std::int64_t lo_x = 0, hi_x = 0, lo_y = 0, hi_y = 0;
  for (const auto& p : v) {
    lo_x = std::min(lo_x, p.x);
    hi_x = std::max(hi_x, p.x);
    lo_y = std::min(lo_y, p.y);
    hi_y = std::max(hi_y, p.y);
  }
  std::int64_t inside = 0;
  for (std::int64_t cy = lo_y; cy < hi_y; ++cy)
    for (std::int64_t cx = lo_x; cx < hi_x; ++cx) {
      int crossings = 0;
      for (std::size_t n = 1; n < v.size(); ++n) {
        const auto& p = v[n - 1];
        const auto& q = v[n];
        if (p.x == q.x && p.x > cx && std::min(p.y, q.y) == cy)
          ++crossings;
      }
      inside += crossings % 2;
    }
  return inside;
}

/// +1 if the simple closed curve turns left at its lowest-leftmost vertex, else -1.
inline int turn_orientation(const LatticeCurve& c) {
  auto v = c.vertices();
  std::size_t n = v.size() - 1;  // last vertex repeats the first
  std::size_t best = 0;
  for (std::size_t k = 1; k < n; ++k)
    if (std::tie(v[k].y, v[k].x) < std::tie(v[best].y, v[best].x))
      best = k;
  const auto& prev = v[(best + n - 1) % n];
  const auto& here = v[best];
  const auto& next = v[(best + 1) % n];
  auto cross = (here.x - prev.x) * (next.y - here.y) - (here.y - prev.y) * (next.x - here.x);
  return cross > 0 ? 1 : -1;
}

/// Calls visit(vertices) for every closed unit-step walk from the origin of length 1..max_len.
inline void for_each_closed_walk(int max_len, const std::function<void(const std::vector<GridPoint>&)>& visit,
                                 bool self_avoiding = false) {
  static constexpr int dx[4] = {1, -1, 0, 0};
  static constexpr int dy[4] = {0, 0, 1, -1};
  std::vector<GridPoint> path{GridPoint{}};
  std::set<GridPoint> on_path{GridPoint{}};
  std::function<void()> step = [&]() {
    const auto len = static_cast<int>(path.size()) - 1;
    if (len > 0 && path.back() == GridPoint{}) {
      visit(path);
      if (self_avoiding)
        return;
    }
    if (len == max_len)
      return;
    for (int d = 0; d < 4; ++d) {
      GridPoint next{path.back().x + dx[d], path.back().y + dy[d]};
      if (std::abs(next.x) + std::abs(next.y) > max_len - len - 1)
        continue;
      if (self_avoiding && next != GridPoint{} && on_path.count(next))
        continue;
      if (self_avoiding && next == GridPoint{} && len + 1 < 4)
        continue;
      path.push_back(next);
      if (self_avoiding)
        on_path.insert(next);
      step();
      if (self_avoiding && next != GridPoint{})
        on_path.erase(next);
      path.pop_back();
    }
  };
  step();
}

inline ClaspWord random_word(std::mt19937_64& rng, std::size_t max_len, int indices) {
  std::uniform_int_distribution<std::size_t> len_dist(0, max_len);
  std::uniform_int_distribution<int> index_dist(1, indices);
  std::bernoulli_distribution sign_dist(0.5);
  std::vector<SignedLetter> letters;
  auto len = len_dist(rng);
  for (std::size_t n = 0; n < len; ++n)
    letters.emplace_back(index_dist(rng), sign_dist(rng) ? 1 : -1);
  return ClaspWord(std::move(letters));
}

/// All 4^len words in x_i^{+-1}, x_j^{+-1}.
inline std::vector<ClaspWord> all_two_letter_words(int len, int i, int j) {
  std::vector<ClaspWord> out;
  std::size_t total = std::size_t{1} << (2 * len);
  out.reserve(total);
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<SignedLetter> letters;
    for (int n = 0; n < len; ++n) {
      auto digit = (code >> (2 * n)) & 3;
      letters.emplace_back(digit < 2 ? i : j, digit % 2 == 0 ? 1 : -1);
    }
    out.emplace_back(std::move(letters));
  }
  return out;
}

}  // namespace clasp::testing
