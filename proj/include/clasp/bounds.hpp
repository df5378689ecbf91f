#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "clasp/complex.hpp"
#include "clasp/invariants.hpp"

namespace clasp {

/// floor(sqrt(n)), integer-only.
std::uint64_t floor_sqrt(std::uint64_t n);

/// Smallest m with m*m >= n.
std::uint64_t ceil_sqrt(std::uint64_t n);

/// ceil(2*sqrt(a)) as min{m >= 0 : m^2 >= 4a}. Throws std::overflow_error when 4a overflows.
std::uint64_t ceil_two_sqrt(std::uint64_t a);

/// Least perimeter of a polyomino with the given area: 2*ceil(2*sqrt(area)).
/// Throws std::invalid_argument for area 0.
std::uint64_t min_polyomino_perimeter(std::uint64_t area);

/// A single known value, or a finite set the value is known to lie in.
struct ClaspNumberSet {
  std::vector<std::uint64_t> values;  // sorted, nonempty

  bool exact() const noexcept { return values.size() == 1; }
  friend bool operator==(const ClaspNumberSet&, const ClaspNumberSet&) = default;
};

/// Clasp number of a 2-component link from its linking number:
/// |lk| when lk != 0, otherwise one of {0, 2}.
ClaspNumberSet two_component_clasp_number(std::int64_t lk);

/// 2*ceil(2*sqrt(|mu|/3)) as 2*min{m : 3m^2 >= 4|mu|}. Only a bound when the
/// pairwise linking numbers vanish; the caller is responsible for that.
std::uint64_t three_component_lower_bound(std::int64_t mu);

struct PairLinking {
  int i = 0;
  int j = 0;
  std::int64_t lk = 0;
};

struct BoundReport {
  int components = 0;
  std::uint64_t complex_clasps = 0;
  std::vector<PairLinking> linking;
  std::optional<TripleLinkingResult> mu;  // three components only

  std::uint64_t lower_C = 0;
  std::optional<std::uint64_t> upper_C;
  std::optional<ClaspNumberSet> exact_C;
  std::uint64_t lower_B = 0;
  std::optional<std::uint64_t> upper_B;

  std::string lower_C_source;
  std::string upper_C_source;
  std::string exact_C_source;
  std::string lower_B_source;
  std::string upper_B_source;
};

/// Bounds on C(L) and B(L) for the link bounded by f. f must be valid with 2
/// or 3 components; anything else throws std::invalid_argument.
BoundReport bound_report(const CComplex& f);

/// "key = value" lines, one provenance line per bound, and a summary line.
std::string format_bound_report(const BoundReport& r);

}  // namespace clasp
