#pragma once

#include <cstdint>
#include <vector>

#include "vnumlab/ideal.hpp"
#include "vnumlab/monomial.hpp"

namespace vnumlab {

/// Graded module A/B for monomial ideals B ⊆ A, twisted by `shift`: the
/// degree-u component is spanned by the monomials of A∖B of weighted degree
/// u - shift. Quotients of subquotients (C/B)/(D/B) are represented by (C, D).
///
/// A is kept as given (not reduced modulo B), so its minimal generators are
/// available for the generator rules used by indeg and the v-number.
class Subquotient {
 public:
  // Throws Error("denominator-not-contained") unless B ⊆ A.
  Subquotient(MonomialIdeal numerator, MonomialIdeal denominator, std::int64_t shift = 0);

  // R/B
  static Subquotient quotient_ring(MonomialIdeal denominator, std::int64_t shift = 0);

  const MonomialIdeal& numerator() const noexcept { return num_; }
  const MonomialIdeal& denominator() const noexcept { return den_; }
  std::int64_t shift() const noexcept { return shift_; }
  const GradedRing& ring() const noexcept { return num_.ring(); }
  const RingPtr& ring_ptr() const noexcept { return num_.ring_ptr(); }

  friend bool operator==(const Subquotient&, const Subquotient&) = default;

 private:
  MonomialIdeal num_;
  MonomialIdeal den_;
  std::int64_t shift_;
};

Subquotient make_subquotient(MonomialIdeal numerator, MonomialIdeal denominator,
                             std::int64_t shift = 0);

bool is_zero(const Subquotient& q);

// shift + least degree of a generator of A outside B; +inf for the zero module.
// Any monomial of A∖B is a multiple of such a generator, hence the rule.
ExtInt indeg(const Subquotient& q);

// Monomials of A∖B sitting in module degree u.
std::vector<Monomial> monomials_in_degree(const Subquotient& q, std::int64_t u);

// Q(-h) in the usual notation: same A, B, shift + h.
Subquotient twist(const Subquotient& q, std::int64_t h);

// ann_Q(a) = ((B : a) ∩ A)/B. Throws Error("colon-by-zero") for a = 0.
Subquotient ann_submodule(const Subquotient& q, const MonomialIdeal& a);

// Γ_a(Q) = ((B : a^inf) ∩ A)/B. Throws Error("colon-by-zero") for a = 0.
Subquotient gamma_submodule(const Subquotient& q, const MonomialIdeal& a);

// Finite length: every cyclic piece R/(B : g), g a generator of A, contains a
// pure power of each variable.
bool is_artinian(const Subquotient& q);

// Largest degree with a nonzero component; -inf for the zero module.
// Throws Error("not-artinian") when q has infinite length.
ExtInt end_artinian(const Subquotient& q);

}  // namespace vnumlab
