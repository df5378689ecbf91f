#include "clasp/complex.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

namespace clasp {

Clasp::Clasp(std::string id, int a, int b, int sign) : id(std::move(id)), a(a), b(b), sign(sign) {
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("clasp sign must be +1 or -1");
  if (this->a > this->b)
    std::swap(this->a, this->b);
}

CComplex::CComplex(int components, std::vector<Clasp> clasps,
                   std::vector<std::vector<std::string>> orders)
    : components_(components), clasps_(std::move(clasps)), orders_(std::move(orders)) {
  if (components_ > 0 && orders_.size() < static_cast<std::size_t>(components_))
    orders_.resize(static_cast<std::size_t>(components_));
}

const std::vector<std::string>& CComplex::order(int k) const {
  static const std::vector<std::string> none;
  if (k < 1 || static_cast<std::size_t>(k) > orders_.size())
    return none;
  return orders_[static_cast<std::size_t>(k - 1)];
}

CComplex CComplex::with_rotated_order(int k, std::int64_t shift) const {
  if (k < 1 || k > components_)
    throw std::invalid_argument("no component " + std::to_string(k));
  CComplex out = *this;
  auto& seq = out.orders_[static_cast<std::size_t>(k - 1)];
  if (!seq.empty()) {
    auto m = static_cast<std::int64_t>(seq.size());
    std::rotate(seq.begin(), seq.begin() + ((shift % m) + m) % m, seq.end());
  }
  return out;
}

CComplex CComplex::with_negated_signs() const {
  CComplex out = *this;
  for (auto& c : out.clasps_)
    c.sign = -c.sign;
  return out;
}

CComplex CComplex::with_reversed_orders() const {
  CComplex out = *this;
  for (auto& seq : out.orders_)
    std::reverse(seq.begin(), seq.end());
  return out;
}

std::vector<Violation> validate(const CComplex& f) {
  std::vector<Violation> out;
  const int n = f.components();
  if (n < 1) {
    out.push_back({"component count", "a complex needs at least one component, got " + std::to_string(n)});
    return out;
  }

  std::unordered_map<std::string, const Clasp*> by_id;
  for (const auto& c : f.clasps()) {
    const std::string name = "clasp '" + c.id + "'";
    if (c.id.empty() || std::any_of(c.id.begin(), c.id.end(), [](unsigned char ch) { return std::isspace(ch); }))
      out.push_back({"bad id", name + " has an empty or whitespace-containing id"});
    if (!by_id.emplace(c.id, &c).second)
      out.push_back({"duplicate id", name + " is declared more than once"});
    if (c.a == c.b)
      out.push_back({"self-clasp", name + " joins component " + std::to_string(c.a) + " to itself"});
    for (int end : {c.a, c.b})
      if (end < 1 || end > n)
        out.push_back({"component range", name + " references component " + std::to_string(end) +
                                              " outside 1.." + std::to_string(n)});
  }

  for (int k = 1; k <= n; ++k) {
    const std::string comp = "component " + std::to_string(k);
    std::set<std::string> met;
    for (const auto& id : f.order(k)) {
      auto it = by_id.find(id);
      if (it == by_id.end()) {
        out.push_back({"unknown clasp", comp + " order lists undeclared clasp '" + id + "'"});
        continue;
      }
      if (it->second->a != k && it->second->b != k)
        out.push_back({"foreign clasp", comp + " order lists clasp '" + id + "' which does not touch it"});
      if (!met.insert(id).second)
        out.push_back({"order duplicate", comp + " order lists clasp '" + id + "' twice"});
    }
    for (const auto& c : f.clasps())
      if ((c.a == k || c.b == k) && c.a != c.b && !met.count(c.id))
        out.push_back({"order incomplete", comp + " order is missing clasp '" + c.id + "'"});
  }
  return out;
}

void require_valid(const CComplex& f) {
  auto violations = validate(f);
  if (violations.empty())
    return;
  std::string msg = "invalid C-complex:";
  for (const auto& v : violations)
    msg += "\n  " + v.kind + ": " + v.detail;
  throw std::invalid_argument(msg);
}

ClaspWord clasp_word(const CComplex& f, int k) {
  require_valid(f);
  if (k < 1 || k > f.components())
    throw std::invalid_argument("no component " + std::to_string(k));
  std::unordered_map<std::string_view, const Clasp*> by_id;
  for (const auto& c : f.clasps())
    by_id.emplace(c.id, &c);
  std::vector<SignedLetter> letters;
  for (const auto& id : f.order(k)) {
    const Clasp& c = *by_id.at(id);
    letters.emplace_back(c.a == k ? c.b : c.a, c.sign);
  }
  return ClaspWord(std::move(letters));
}

std::size_t total_clasps(const CComplex& f) { return f.clasps().size(); }

CComplex generate_brn(int n) {
  if (n < 1)
    throw std::invalid_argument("generate_brn needs n >= 1");
  // p: 1-2 positive, q: 1-2 negative, r: 1-3 positive, s: 1-3 negative.
  auto id = [](char family, int t) { return std::string(1, family) + std::to_string(t); };
  std::vector<Clasp> clasps;
  for (char family : {'p', 'q', 'r', 's'})
    for (int t = 1; t <= n; ++t) {
      int other = (family == 'p' || family == 'q') ? 2 : 3;
      int sign = (family == 'p' || family == 'r') ? 1 : -1;
      clasps.emplace_back(id(family, t), 1, other, sign);
    }

  std::vector<std::vector<std::string>> orders(3);
  // L1 reads x3^-n x2^n x3^n x2^-n.
  for (char family : {'s', 'p', 'r', 'q'})
    for (int t = 1; t <= n; ++t)
      orders[0].push_back(id(family, t));
  // L2 reads x1^n x1^-n.
  for (char family : {'p', 'q'})
    for (int t = 1; t <= n; ++t)
      orders[1].push_back(id(family, t));
  // L3 reads (x1 x1^-1)^n.
  for (int t = 1; t <= n; ++t) {
    orders[2].push_back(id('r', t));
    orders[2].push_back(id('s', t));
  }
  return CComplex(3, std::move(clasps), std::move(orders));
}

namespace {

constexpr int kMaxComponents = 1'000'000;

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) {
    if (tok.front() == '#')
      break;
    tokens.push_back(tok);
  }
  return tokens;
}

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw ParseError("line " + std::to_string(line) + ": " + msg, line);
}

int to_int(const std::string& tok, std::size_t line, const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    fail(line, std::string("expected integer ") + what + ", got '" + tok + "'");
  return value;
}

}  // namespace

CComplex parse_complex(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line = 0;
  int n = -1;
  std::vector<Clasp> clasps;
  std::map<int, std::vector<std::string>> orders;

  while (std::getline(in, raw)) {
    ++line;
    auto tokens = tokenize(raw);
    if (tokens.empty())
      continue;
    const auto& kw = tokens[0];
    if (kw == "components") {
      if (n >= 0)
        fail(line, "duplicate 'components' line");
      if (tokens.size() != 2)
        fail(line, "expected 'components <n>'");
      n = to_int(tokens[1], line, "component count");
      if (n > kMaxComponents)
        fail(line, "component count " + std::to_string(n) + " exceeds " + std::to_string(kMaxComponents));
      continue;
    }
    if (n < 0)
      fail(line, "'components <n>' must come before '" + kw + "'");
    if (kw == "clasp") {
      if (tokens.size() != 5)
        fail(line, "expected 'clasp <id> <a> <b> <+|->'");
      int a = to_int(tokens[2], line, "component");
      int b = to_int(tokens[3], line, "component");
      int sign = 0;
      if (tokens[4] == "+")
        sign = 1;
      else if (tokens[4] == "-")
        sign = -1;
      else
        fail(line, "clasp sign must be '+' or '-', got '" + tokens[4] + "'");
      clasps.emplace_back(tokens[1], a, b, sign);
    } else if (kw == "order") {
      if (tokens.size() < 2)
        fail(line, "expected 'order <k> <id> ...'");
      int k = to_int(tokens[1], line, "component");
      if (k < 1 || k > n)
        fail(line, "order for component " + std::to_string(k) + " outside 1.." + std::to_string(n));
      if (orders.count(k))
        fail(line, "duplicate order line for component " + std::to_string(k));
      orders[k] = std::vector<std::string>(tokens.begin() + 2, tokens.end());
    } else {
      fail(line, "unknown keyword '" + kw + "'");
    }
  }
  if (n < 0)
    throw ParseError("missing 'components <n>' line", line);

  std::vector<std::vector<std::string>> seq(static_cast<std::size_t>(std::max(n, 0)));
  for (auto& [k, ids] : orders)
    seq[static_cast<std::size_t>(k - 1)] = std::move(ids);
  return CComplex(n, std::move(clasps), std::move(seq));
}

std::string to_file_format(const CComplex& f) {
  std::ostringstream out;
  out << "components " << f.components() << '\n';
  auto sorted = f.clasps();
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const Clasp& l, const Clasp& r) { return std::tie(l.a, l.b) < std::tie(r.a, r.b); });
  for (const auto& c : sorted)
    out << "clasp " << c.id << ' ' << c.a << ' ' << c.b << ' ' << (c.sign > 0 ? '+' : '-') << '\n';
  for (int k = 1; k <= f.components(); ++k) {
    out << "order " << k;
    for (const auto& id : f.order(k))
      out << ' ' << id;
    out << '\n';
  }
  return out.str();
}

}  // namespace clasp
