#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace clasp::oracle {

inline constexpr int kDefaultAreaCap = 10;
inline constexpr int kDefaultLengthCap = 12;

struct Cell {
  int x = 0;
  int y = 0;

  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// An edge-connected set of unit cells, translated so min x = min y = 0.
class Polyomino {
public:
  /// Normalizes the cells. Throws std::invalid_argument if empty, repeated or disconnected.
  explicit Polyomino(std::vector<Cell> cells);

  std::span<const Cell> cells() const noexcept { return cells_; }
  std::size_t area() const noexcept { return cells_.size(); }

  friend auto operator<=>(const Polyomino&, const Polyomino&) = default;

private:
  std::vector<Cell> cells_;  // sorted
};

/// Unit edges bordering exactly one cell.
std::uint64_t perimeter(const Polyomino& p);

/// All fixed polyominoes of the given area, sorted. Throws std::out_of_range
/// unless 1 <= area <= cap.
std::vector<Polyomino> enumerate_polyominoes(int area, int cap = kDefaultAreaCap);

/// Count of fixed polyominoes by Redelmeier's untried-set recursion, with no
/// shape storage. Independent of enumerate_polyominoes.
std::uint64_t count_fixed_polyominoes(int area, int cap = kDefaultAreaCap);

struct OracleReport {
  std::int64_t parameter = 0;
  std::uint64_t observed = 0;
  std::uint64_t predicted = 0;
  bool agree = false;
};

struct PolyominoSweep {
  std::vector<OracleReport> reports;        // one per area
  std::vector<std::uint64_t> counts;        // enumeration sizes per area
  std::vector<std::uint64_t> counts_check;  // Redelmeier counts per area
  bool all_agree() const;
};

/// For 1 <= A <= max_area: minimum enumerated perimeter vs min_polyomino_perimeter(A).
PolyominoSweep verify_min_perimeter(int max_area, int cap = kDefaultAreaCap);

struct WordSweep {
  /// parameter = |e_12|; observed = shortest balanced word reaching it;
  /// predicted = 2*ceil(2*sqrt(|e_12|)).
  std::vector<OracleReport> reports;
  std::uint64_t words_checked = 0;
  /// Words shorter than 2*ceil(2*sqrt(|e_12(w)|)).
  std::uint64_t length_bound_violations = 0;
  /// Closed curves with ||c|| < 2*ceil(2*sqrt(|integral x dy|)).
  std::uint64_t curve_bound_violations = 0;
  /// Words where e_12 and the curve integral differ.
  std::uint64_t integral_mismatches = 0;
  bool all_agree() const;
};

/// Exhaustive over words in x1^{+-1}, x2^{+-1} of length <= max_len with both
/// signed counts zero. Throws std::out_of_range unless 1 <= max_len <= cap.
WordSweep verify_word_length_bound(int max_len, int cap = kDefaultLengthCap);

/// Fixed-width table with columns parameter, observed, predicted, agree.
std::string format_reports(const std::string& parameter_name, std::span<const OracleReport> reports);

}  // namespace clasp::oracle
