#include "clasp/invariants.hpp"

#include <stdexcept>
#include <string>

namespace clasp {

std::int64_t e_ij(const ClaspWord& w, int i, int j) {
  if (i == j)
    throw std::invalid_argument("e_ij needs two distinct indices");
  std::int64_t running_i = 0;
  std::int64_t total = 0;
  for (const auto& letter : w) {
    if (letter.index == i)
      running_i += letter.sign;
    else if (letter.index == j)
      total += running_i * letter.sign;
  }
  return total;
}

namespace {

void require_component(const CComplex& f, int k) {
  if (k < 1 || k > f.components())
    throw std::invalid_argument("no component " + std::to_string(k) + " in a " +
                                std::to_string(f.components()) + "-component complex");
}

}  // namespace

std::int64_t pairwise_linking(const CComplex& f, int i, int j) {
  require_component(f, i);
  require_component(f, j);
  if (i == j)
    throw std::invalid_argument("pairwise_linking needs two distinct components");
  std::int64_t total = 0;
  for (const auto& c : f.clasps())
    if ((c.a == i && c.b == j) || (c.a == j && c.b == i))
      total += c.sign;
  return total;
}

TripleLinkingResult triple_linking(const CComplex& f, int i, int j, int k) {
  require_valid(f);
  for (int c : {i, j, k})
    require_component(f, c);
  if (i == j || j == k || k == i)
    throw std::invalid_argument("triple_linking needs three distinct components");

  TripleLinkingResult r;
  r.contributions = {e_ij(clasp_word(f, k), i, j), e_ij(clasp_word(f, i), j, k),
                     e_ij(clasp_word(f, j), k, i)};
  r.value = r.contributions[0] + r.contributions[1] + r.contributions[2];
  r.well_defined =
      pairwise_linking(f, i, j) == 0 && pairwise_linking(f, j, k) == 0 && pairwise_linking(f, k, i) == 0;
  return r;
}

}  // namespace clasp
