#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "clasp/word.hpp"

namespace clasp {

/// A signed clasp arc joining components a and b. Endpoints are stored with a <= b.
struct Clasp {
  std::string id;
  int a = 1;
  int b = 2;
  int sign = 1;

  Clasp() = default;
  Clasp(std::string id, int a, int b, int sign);

  friend bool operator==(const Clasp&, const Clasp&) = default;
};

struct Violation {
  std::string kind;    // "self-clasp", "order incomplete", ...
  std::string detail;  // human-readable, names the clasp/component

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Combinatorial C-complex: clasp incidence plus, for each component, the
/// clasps met along it starting from its basepoint. Construction does not
/// check consistency; call validate().
class CComplex {
public:
  CComplex() = default;
  CComplex(int components, std::vector<Clasp> clasps, std::vector<std::vector<std::string>> orders);

  int components() const noexcept { return components_; }
  const std::vector<Clasp>& clasps() const noexcept { return clasps_; }
  /// Traversal order of component k (1-based). Empty if k has no order line.
  const std::vector<std::string>& order(int k) const;

  /// Moves the basepoint of component k forward by shift clasps.
  CComplex with_rotated_order(int k, std::int64_t shift) const;

  /// Every clasp sign flipped.
  CComplex with_negated_signs() const;

  /// Every traversal order reversed.
  CComplex with_reversed_orders() const;

private:
  int components_ = 0;
  std::vector<Clasp> clasps_;
  std::vector<std::vector<std::string>> orders_;
};

std::vector<Violation> validate(const CComplex& f);

/// Throws std::invalid_argument listing the violations if f is not valid.
void require_valid(const CComplex& f);

/// The word read along component k: one letter per clasp, indexed by the
/// other component, carrying the clasp sign.
ClaspWord clasp_word(const CComplex& f, int k);

std::size_t total_clasps(const CComplex& f);

/// The 4n-clasp complex bounded by the generalized Borromean rings.
CComplex generate_brn(int n);

/// Reads the line-oriented complex format. ParseError::position() is the 1-based line.
CComplex parse_complex(std::string_view text);

/// Canonical text: clasps stably sorted by (a, b), one order line per component.
std::string to_file_format(const CComplex& f);

}  // namespace clasp
