#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "vnumlab/monomial.hpp"
#include "vnumlab/ring.hpp"

namespace vnumlab {

/// Monomial ideal held by its minimal generators in canonical order, so two
/// ideals are equal exactly when their generator lists are equal.
/// The zero ideal has no generators; the unit ideal is generated by 1.
class MonomialIdeal {
 public:
  // Minimalizes and sorts `gens`.
  MonomialIdeal(RingPtr ring, std::vector<Monomial> gens);

  static MonomialIdeal zero(RingPtr ring);
  static MonomialIdeal unit(RingPtr ring);
  // (x_i : i in indices); the zero ideal for an empty list.
  static MonomialIdeal generated_by_variables(RingPtr ring, std::span<const std::size_t> indices);

  const RingPtr& ring_ptr() const noexcept { return ring_; }
  const GradedRing& ring() const noexcept { return *ring_; }
  const std::vector<Monomial>& generators() const noexcept { return gens_; }

  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const noexcept;
  bool contains(const Monomial& m) const;
  // Every generator of `other` lies in *this.
  bool contains(const MonomialIdeal& other) const;

  // Generators in the shared text grammar, canonical order.
  std::vector<std::string> to_strings() const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b);

 private:
  RingPtr ring_;
  std::vector<Monomial> gens_;
};

// Throws Error("ring-mismatch") unless a and b live over equal rings.
void check_same_ring(const MonomialIdeal& a, const MonomialIdeal& b);

MonomialIdeal minimalize(RingPtr ring, std::vector<Monomial> gens);
bool member(const Monomial& m, const MonomialIdeal& ideal);
MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
// Iterated product, re-minimalized at each step. power(B, 0) is the unit ideal.
MonomialIdeal power(const MonomialIdeal& b, std::uint32_t n);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
// (B : m)
MonomialIdeal colon_monomial(const MonomialIdeal& b, const Monomial& m);
// (B : a) = intersection of (B : g) over the generators g of a.
// Throws Error("colon-by-zero") when a is the zero ideal.
MonomialIdeal colon_ideal(const MonomialIdeal& b, const MonomialIdeal& a);
// (B : a^inf). Throws Error("colon-by-zero") when a is the zero ideal.
MonomialIdeal saturate(const MonomialIdeal& b, const MonomialIdeal& a);
// m in sqrt(B): some generator's support lies inside supp(m).
bool radical_member(const Monomial& m, const MonomialIdeal& b);
bool equals(const MonomialIdeal& a, const MonomialIdeal& b);

// Ideal from generator strings in the monomial grammar.
MonomialIdeal parse_ideal(RingPtr ring, std::span<const std::string> gens);

}  // namespace vnumlab
