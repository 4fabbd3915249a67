#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vnumlab/ring.hpp"

namespace vnumlab {

using Exponent = std::uint32_t;

// Largest exponent any operation may produce; exceeding it raises
// Error("exponent-overflow") instead of wrapping.
inline constexpr Exponent kMaxExponent = (Exponent{1} << 30);

/// Exponent vector x^e = x_1^{e_1} ... x_d^{e_d}. The unit monomial is the
/// all-zero vector. A Monomial does not know its ring; operations that mix
/// monomials check that the lengths agree.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<Exponent> exponents);

  static Monomial unit(std::size_t nvars) { return Monomial(std::vector<Exponent>(nvars, 0)); }
  static Monomial variable(std::size_t nvars, std::size_t index, Exponent power = 1);

  std::size_t size() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::span<const Exponent> exponents() const noexcept { return exps_; }

  bool is_unit() const noexcept;
  // Indices of variables with a positive exponent.
  std::vector<std::size_t> support() const;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Exponent> exps_;
};

/// Extended integer used for indeg (+inf for the zero module), end (-inf for
/// the zero module) and v (+inf for the zero module).
class ExtInt {
 public:
  constexpr ExtInt(std::int64_t v = 0) : kind_(Kind::finite), value_(v) {}  // NOLINT(implicit)
  static constexpr ExtInt infinity() { return ExtInt(Kind::pos_inf); }
  static constexpr ExtInt neg_infinity() { return ExtInt(Kind::neg_inf); }

  constexpr bool is_finite() const noexcept { return kind_ == Kind::finite; }
  constexpr bool is_pos_inf() const noexcept { return kind_ == Kind::pos_inf; }
  constexpr bool is_neg_inf() const noexcept { return kind_ == Kind::neg_inf; }
  // Precondition: is_finite().
  std::int64_t value() const;

  // "inf" / "-inf" / decimal.
  std::string to_string() const;

  friend constexpr bool operator==(const ExtInt&, const ExtInt&) = default;
  friend constexpr std::strong_ordering operator<=>(const ExtInt& a, const ExtInt& b) {
    if (a.kind_ != b.kind_) return rank(a.kind_) <=> rank(b.kind_);
    return a.value_ <=> b.value_;
  }

 private:
  enum class Kind : std::uint8_t { neg_inf, finite, pos_inf };
  explicit constexpr ExtInt(Kind k) : kind_(k), value_(0) {}
  static constexpr int rank(Kind k) { return static_cast<int>(k); }

  Kind kind_;
  std::int64_t value_;
};

// Product; throws Error("exponent-overflow") past kMaxExponent.
Monomial operator*(const Monomial& a, const Monomial& b);
Monomial pow(const Monomial& m, std::uint64_t n);
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
// a / gcd(a, b): the generator of the monomial colon ((a) : b).
Monomial colon(const Monomial& a, const Monomial& b);
// Componentwise a <= b.
bool divides(const Monomial& a, const Monomial& b);

std::int64_t weighted_degree(const GradedRing& ring, const Monomial& m);

// Canonical generator order: weighted degree ascending, then exponent vectors
// in descending lexicographic order (so X sorts before Y).
bool canonical_less(const GradedRing& ring, const Monomial& a, const Monomial& b);

/// Monomial text grammar:
///   term   := "1" | factor ("*" factor)*
///   factor := varname ("^" positive-integer)?
/// Whitespace is ignored. Throws ParseError with code "syntax-error" or
/// "unknown-variable".
Monomial parse_monomial(const GradedRing& ring, std::string_view text);
std::string format_monomial(const GradedRing& ring, const Monomial& m);

}  // namespace vnumlab
