#pragma once

#include <array>
#include <cstdint>

#include "clasp/complex.hpp"
#include "clasp/word.hpp"

namespace clasp {

/// Signed count of occurrences of x_i before x_j in w, in one pass.
/// Throws std::invalid_argument if i == j.
std::int64_t e_ij(const ClaspWord& w, int i, int j);

/// Signed count of clasps joining components i and j.
std::int64_t pairwise_linking(const CComplex& f, int i, int j);

struct TripleLinkingResult {
  std::int64_t value = 0;
  /// e_ij(w_k), e_jk(w_i), e_ki(w_j) in that order.
  std::array<std::int64_t, 3> contributions{};
  /// lk(i,j) = lk(j,k) = lk(k,i) = 0, so the value does not depend on basepoints.
  bool well_defined = true;
};

/// mu_ijk = e_ij(w_k) + e_jk(w_i) + e_ki(w_j). Computed even when pairwise
/// linking numbers are nonzero; well_defined reports that case.
TripleLinkingResult triple_linking(const CComplex& f, int i, int j, int k);

}  // namespace clasp
