#include "clasp/bounds.hpp"

#include <cstdlib>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace clasp {

std::uint64_t floor_sqrt(std::uint64_t n) {
  if (n < 2)
    return n;
  // Newton from above; the first non-decreasing iterate is the floor.
  std::uint64_t x = n;
  std::uint64_t y = (x >> 1) + (x & 1);
  while (y < x) {
    x = y;
    y = (x + n / x) / 2;
  }
  return x;
}

std::uint64_t ceil_sqrt(std::uint64_t n) {
  std::uint64_t r = floor_sqrt(n);
  return r * r == n ? r : r + 1;
}

std::uint64_t ceil_two_sqrt(std::uint64_t a) {
  if (a > std::numeric_limits<std::uint64_t>::max() / 4)
    throw std::overflow_error("ceil_two_sqrt argument too large");
  return ceil_sqrt(4 * a);
}

std::uint64_t min_polyomino_perimeter(std::uint64_t area) {
  if (area == 0)
    throw std::invalid_argument("a polyomino has area at least 1");
  return 2 * ceil_two_sqrt(area);
}

ClaspNumberSet two_component_clasp_number(std::int64_t lk) {
  if (lk == 0)
    return {{0, 2}};
  return {{static_cast<std::uint64_t>(lk < 0 ? -lk : lk)}};
}

std::uint64_t three_component_lower_bound(std::int64_t mu) {
  std::uint64_t m = mu < 0 ? 0 - static_cast<std::uint64_t>(mu) : static_cast<std::uint64_t>(mu);
  if (m > std::numeric_limits<std::uint64_t>::max() / 4)
    throw std::overflow_error("three_component_lower_bound argument too large");
  // 3k^2 >= 4m  <=>  k^2 >= ceil(4m/3)
  return 2 * ceil_sqrt((4 * m + 2) / 3);
}

namespace {

std::uint64_t abs_u(std::int64_t v) {
  return v < 0 ? 0 - static_cast<std::uint64_t>(v) : static_cast<std::uint64_t>(v);
}

const char* const kFromComplex = "clasps in the supplied C-complex";
const char* const kFromLinking = "sum of |lk| over pairs";
const char* const kFromMu = "triple linking bound 2*ceil(2*sqrt(|mu|/3))";
const char* const kFromTwoComponent = "two-component clasp number is |lk|, or 0 or 2 when lk = 0";
const char* const kBelowC = "B(L) <= C(L)";

}  // namespace

BoundReport bound_report(const CComplex& f) {
  require_valid(f);
  const int n = f.components();
  if (n != 2 && n != 3)
    throw std::invalid_argument("bounds are only available for 2- or 3-component complexes, got " +
                                std::to_string(n));
  BoundReport r;
  r.components = n;
  r.complex_clasps = total_clasps(f);

  std::uint64_t lk_sum = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      auto lk = pairwise_linking(f, i, j);
      r.linking.push_back({i, j, lk});
      lk_sum += abs_u(lk);
    }

  r.upper_C = r.complex_clasps;
  r.upper_C_source = kFromComplex;
  r.lower_B = lk_sum;
  r.lower_B_source = kFromLinking;

  if (n == 2) {
    r.exact_C = two_component_clasp_number(r.linking[0].lk);
    r.exact_C_source = kFromTwoComponent;
    r.lower_C = r.exact_C->values.front();
    r.lower_C_source = kFromTwoComponent;
  } else {
    r.mu = triple_linking(f, 1, 2, 3);
    if (r.mu->well_defined) {
      r.lower_C = std::max(three_component_lower_bound(r.mu->value), lk_sum);
      r.lower_C_source = kFromMu;
    } else {
      r.lower_C = lk_sum;
      r.lower_C_source = kFromLinking;
    }
    if (r.lower_C == *r.upper_C) {
      r.exact_C = ClaspNumberSet{{r.lower_C}};
      r.exact_C_source = "lower and upper bounds on C(L) coincide";
    }
  }

  r.upper_B = r.upper_C;
  r.upper_B_source = kBelowC;
  return r;
}

namespace {

std::string set_text(const ClaspNumberSet& s) {
  if (s.exact())
    return std::to_string(s.values.front());
  std::string out = "{";
  for (std::size_t n = 0; n < s.values.size(); ++n)
    out += (n ? ", " : "") + std::to_string(s.values[n]);
  return out + "}";
}

std::string optional_text(const std::optional<std::uint64_t>& v) {
  return v ? std::to_string(*v) : "unknown";
}

}  // namespace

std::string format_bound_report(const BoundReport& r) {
  std::ostringstream out;
  out << "components = " << r.components << '\n';
  out << "clasps = " << r.complex_clasps << '\n';
  for (const auto& p : r.linking)
    out << "lk_" << p.i << p.j << " = " << p.lk << '\n';
  if (r.mu) {
    out << "mu_123 = " << r.mu->value << '\n';
    out << "mu_well_defined = " << (r.mu->well_defined ? "true" : "false") << '\n';
  }
  out << "lower_C = " << r.lower_C << '\n';
  out << "upper_C = " << optional_text(r.upper_C) << '\n';
  if (r.exact_C)
    out << "exact_C = " << set_text(*r.exact_C) << '\n';
  out << "lower_B = " << r.lower_B << '\n';
  out << "upper_B = " << optional_text(r.upper_B) << '\n';

  out << "provenance lower_C " << r.lower_C << " # " << r.lower_C_source << '\n';
  out << "provenance upper_C " << optional_text(r.upper_C) << " # " << r.upper_C_source << '\n';
  if (r.exact_C)
    out << "provenance exact_C " << set_text(*r.exact_C) << " # " << r.exact_C_source << '\n';
  out << "provenance lower_B " << r.lower_B << " # " << r.lower_B_source << '\n';
  out << "provenance upper_B " << optional_text(r.upper_B) << " # " << r.upper_B_source << '\n';

  if (r.exact_C && r.exact_C->exact()) {
    out << "C = " << r.exact_C->values.front() << " (exact)";
    if (r.upper_C && *r.upper_C != r.exact_C->values.front())
      out << "; this complex has " << *r.upper_C;
    out << '\n';
  } else if (r.exact_C) {
    out << "C in " << set_text(*r.exact_C) << "; this complex has " << optional_text(r.upper_C) << '\n';
  } else {
    out << r.lower_C << " <= C <= " << optional_text(r.upper_C) << '\n';
  }
  out << r.lower_B << " <= B <= " << optional_text(r.upper_B) << '\n';
  return out.str();
}

}  // namespace clasp
