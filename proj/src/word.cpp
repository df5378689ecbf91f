#include "clasp/word.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

namespace clasp {

SignedLetter::SignedLetter(int index, int sign) : index(index), sign(sign) {
  if (index < 1)
    throw std::invalid_argument("letter index must be >= 1, got " + std::to_string(index));
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("letter sign must be +1 or -1, got " + std::to_string(sign));
}

namespace {

class WordParser {
public:
  explicit WordParser(std::string_view text) : text_(text) {}

  ClaspWord parse() {
    std::vector<SignedLetter> letters;
    bool need_separator = false;
    while (true) {
      bool saw_space = skip_blank();
      if (at_end())
        break;
      bool saw_dot = false;
      if (peek() == '.') {
        if (!need_separator)
          fail("'.' must separate two letters");
        ++pos_;
        saw_dot = true;
        skip_blank();
        if (at_end())
          fail("word ends with '.'");
      }
      if (need_separator && !saw_space && !saw_dot)
        fail("expected whitespace or '.' between letters");
      if (!need_separator && saw_dot)
        fail("unexpected '.'");
      term(letters);
      need_separator = true;
    }
    return ClaspWord(std::move(letters));
  }

private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at offset " + std::to_string(pos_), pos_);
  }

  // Whitespace, plus '#' comment lines. Returns true if anything was skipped.
  bool skip_blank() {
    std::size_t start = pos_;
    while (!at_end()) {
      char c = peek();
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == '#' && at_line_start()) {
        while (!at_end() && peek() != '\n')
          ++pos_;
      } else {
        break;
      }
    }
    return pos_ != start;
  }

  bool at_line_start() const {
    for (std::size_t p = pos_; p > 0; --p) {
      char c = text_[p - 1];
      if (c == '\n')
        return true;
      if (c != ' ' && c != '\t' && c != '\r')
        return false;
    }
    return true;
  }

  // [1-9][0-9]*, checked against int range.
  long long positive_int(const char* what) {
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
      fail(std::string("expected ") + what);
    if (peek() == '0')
      fail(std::string(what) + " must not be zero or have leading zeros");
    long long value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (peek() - '0');
      if (value > std::numeric_limits<int>::max())
        fail(std::string(what) + " is too large");
      ++pos_;
    }
    return value;
  }

  void term(std::vector<SignedLetter>& out) {
    if (peek() != 'x')
      fail("expected letter 'x<index>'");
    ++pos_;
    if (!at_end() && peek() == '-')
      fail("letter index must be >= 1");
    int index = static_cast<int>(positive_int("letter index"));
    long long exponent = 1;
    if (!at_end() && peek() == '^') {
      ++pos_;
      int sign = 1;
      if (!at_end() && peek() == '-') {
        sign = -1;
        ++pos_;
      }
      exponent = sign * positive_int("exponent");
    }
    if (!at_end() && !std::isspace(static_cast<unsigned char>(peek())) && peek() != '.')
      fail(std::string("unexpected character '") + peek() + "'");
    auto count = static_cast<std::size_t>(exponent < 0 ? -exponent : exponent);
    if (out.size() + count > kMaxExpandedWordLength)
      fail("expanded word is too long");
    out.insert(out.end(), count, SignedLetter(index, exponent < 0 ? -1 : 1));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ClaspWord parse_word(std::string_view text) { return WordParser(text).parse(); }

std::string to_string(const ClaspWord& w) {
  std::string out;
  for (const auto& letter : w) {
    if (!out.empty())
      out += ' ';
    out += 'x';
    out += std::to_string(letter.index);
    if (letter.sign < 0)
      out += "^-1";
  }
  return out;
}

std::int64_t signed_count(const ClaspWord& w, int index) {
  std::int64_t total = 0;
  for (const auto& letter : w)
    if (letter.index == index)
      total += letter.sign;
  return total;
}

ClaspWord restrict_to(const ClaspWord& w, int i, int j) {
  if (i == j)
    throw std::invalid_argument("restrict_to needs two distinct indices");
  std::vector<SignedLetter> kept;
  std::copy_if(w.begin(), w.end(), std::back_inserter(kept),
               [&](const SignedLetter& l) { return l.index == i || l.index == j; });
  return ClaspWord(std::move(kept));
}

ClaspWord rotate(const ClaspWord& w, std::int64_t k) {
  if (w.empty())
    return w;
  auto m = static_cast<std::int64_t>(w.size());
  auto shift = ((k % m) + m) % m;
  std::vector<SignedLetter> letters(w.begin(), w.end());
  std::rotate(letters.begin(), letters.begin() + shift, letters.end());
  return ClaspWord(std::move(letters));
}

}  // namespace clasp
