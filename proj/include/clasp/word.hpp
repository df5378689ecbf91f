#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace clasp {

/// A letter x_i^{+1} or x_i^{-1}.
struct SignedLetter {
  int index = 1;
  int sign = 1;

  SignedLetter() = default;
  SignedLetter(int index, int sign);

  friend bool operator==(const SignedLetter&, const SignedLetter&) = default;
};

/// A finite, unreduced sequence of signed letters. x1 x1^-1 is kept as two letters.
class ClaspWord {
public:
  ClaspWord() = default;
  explicit ClaspWord(std::vector<SignedLetter> letters) : letters_(std::move(letters)) {}

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  std::span<const SignedLetter> letters() const noexcept { return letters_; }
  const SignedLetter& operator[](std::size_t n) const { return letters_[n]; }

  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  friend bool operator==(const ClaspWord&, const ClaspWord&) = default;

private:
  std::vector<SignedLetter> letters_;
};

/// Syntax error in word or complex text. position is a 0-based byte offset
/// into the parsed text (for complex files it is the 1-based line number).
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

// Guards exponent expansion against absurd inputs like x1^999999999.
inline constexpr std::size_t kMaxExpandedWordLength = 10'000'000;

/// Parses "x1 x2^-1 x3^2" (whitespace or "." separated). Exponents are
/// expanded, so x3^-2 becomes two x3^-1 letters. Lines whose first
/// non-blank character is '#' are ignored.
ClaspWord parse_word(std::string_view text);

/// Canonical form: single spaces, no exponents other than "^-1".
std::string to_string(const ClaspWord& w);

std::int64_t signed_count(const ClaspWord& w, int index);

/// Keeps only the letters with index i or j. Throws std::invalid_argument if i == j.
ClaspWord restrict_to(const ClaspWord& w, int i, int j);

/// Cyclic left rotation by k (negative k rotates right).
ClaspWord rotate(const ClaspWord& w, std::int64_t k);

}  // namespace clasp
