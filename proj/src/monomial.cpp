#include "vnumlab/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "vnumlab/errors.hpp"

namespace vnumlab {

namespace {

void check_same_size(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) {
    throw Error("dimension-mismatch", "monomials with " + std::to_string(a.size()) + " and " +
                                          std::to_string(b.size()) + " variables");
  }
}

Exponent checked_add(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t s = a + b;
  if (s > kMaxExponent) throw Error("exponent-overflow", "exponent " + std::to_string(s));
  return static_cast<Exponent>(s);
}

}  // namespace

Monomial::Monomial(std::vector<Exponent> exponents) : exps_(std::move(exponents)) {
  for (Exponent e : exps_) {
    if (e > kMaxExponent) throw Error("exponent-overflow", "exponent " + std::to_string(e));
  }
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, Exponent power) {
  std::vector<Exponent> e(nvars, 0);
  e.at(index) = power;
  return Monomial(std::move(e));
}

bool Monomial::is_unit() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

std::vector<std::size_t> Monomial::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > 0) s.push_back(i);
  }
  return s;
}

std::int64_t ExtInt::value() const {
  if (!is_finite()) throw std::logic_error("ExtInt::value() on an infinite value");
  return value_;
}

std::string ExtInt::to_string() const {
  if (is_pos_inf()) return "inf";
  if (is_neg_inf()) return "-inf";
  return std::to_string(value_);
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  check_same_size(a, b);
  std::vector<Exponent> e(a.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = checked_add(a[i], b[i]);
  return Monomial(std::move(e));
}

Monomial pow(const Monomial& m, std::uint64_t n) {
  std::vector<Exponent> e(m.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (m[i] == 0) continue;
    if (n > kMaxExponent / m[i]) {
      throw Error("exponent-overflow", "power " + std::to_string(n) + " of exponent " +
                                           std::to_string(m[i]));
    }
    e[i] = static_cast<Exponent>(m[i] * n);
  }
  return Monomial(std::move(e));
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  check_same_size(a, b);
  std::vector<Exponent> e(a.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a[i], b[i]);
  return Monomial(std::move(e));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  check_same_size(a, b);
  std::vector<Exponent> e(a.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(a[i], b[i]);
  return Monomial(std::move(e));
}

Monomial colon(const Monomial& a, const Monomial& b) {
  check_same_size(a, b);
  std::vector<Exponent> e(a.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = a[i] > b[i] ? a[i] - b[i] : 0;
  return Monomial(std::move(e));
}

bool divides(const Monomial& a, const Monomial& b) {
  check_same_size(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

std::int64_t weighted_degree(const GradedRing& ring, const Monomial& m) {
  if (m.size() != ring.size()) {
    throw Error("dimension-mismatch", "monomial has " + std::to_string(m.size()) +
                                          " exponents, ring has " + std::to_string(ring.size()) +
                                          " variables");
  }
  std::int64_t d = 0;
  for (std::size_t i = 0; i < m.size(); ++i) d += static_cast<std::int64_t>(m[i]) * ring.weight(i);
  return d;
}

bool canonical_less(const GradedRing& ring, const Monomial& a, const Monomial& b) {
  const auto da = weighted_degree(ring, a);
  const auto db = weighted_degree(ring, b);
  if (da != db) return da < db;
  return b < a;
}

namespace {

class MonomialParser {
 public:
  MonomialParser(const GradedRing& ring, std::string_view text) : ring_(ring), text_(text) {}

  Monomial parse() {
    skip_ws();
    if (at_end()) fail("empty monomial");
    if (peek() == '1') {
      ++pos_;
      skip_ws();
      if (!at_end()) fail("unexpected '" + std::string(1, peek()) + "' after '1'");
      return Monomial::unit(ring_.size());
    }
    std::vector<Exponent> e(ring_.size(), 0);
    while (true) {
      skip_ws();
      const std::size_t var_start = pos_;
      const std::string name = identifier();
      auto idx = ring_.index_of(name);
      if (!idx) throw ParseError("unknown-variable", "'" + name + "'", 1, var_start + 1);
      std::uint64_t power = 1;
      skip_ws();
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_ws();
        power = positive_integer();
      }
      e[*idx] = checked_add(e[*idx], power);
      skip_ws();
      if (at_end()) break;
      if (peek() != '*') fail("expected '*' or end of monomial");
      ++pos_;
    }
    return Monomial(std::move(e));
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("syntax-error", what + " in monomial '" + std::string(text_) + "'", 1,
                     pos_ + 1);
  }

  std::string identifier() {
    const std::size_t start = pos_;
    if (at_end() || !(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_')) {
      fail("expected a variable name");
    }
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::uint64_t positive_integer() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected an exponent");
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, v);
    if (ec != std::errc{} || v > kMaxExponent) {
      throw Error("exponent-overflow", std::string(text_.substr(start, pos_ - start)));
    }
    if (v == 0) {
      pos_ = start;
      fail("exponent must be positive");
    }
    return v;
  }

  const GradedRing& ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Monomial parse_monomial(const GradedRing& ring, std::string_view text) {
  return MonomialParser(ring, text).parse();
}

std::string format_monomial(const GradedRing& ring, const Monomial& m) {
  if (m.size() != ring.size()) throw Error("dimension-mismatch", "monomial does not fit ring");
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.name(i);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

}  // namespace vnumlab
