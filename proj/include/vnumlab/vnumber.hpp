#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "vnumlab/primes.hpp"
#include "vnumlab/subquotient.hpp"

namespace vnumlab {

// v_p together with a monomial attaining it: (B : witness) = p.
struct PrimeVNumber {
  std::int64_t degree = 0;
  Monomial witness;
};

/// v-numbers of a subquotient: v_p for each associated prime and their
/// minimum (+inf for the zero module).
struct VReport {
  std::map<MonomialPrime, std::int64_t> per_prime;
  ExtInt overall = ExtInt::infinity();
  std::map<MonomialPrime, Monomial> witnesses;
};

/// v_p(Q) as the initial degree of ann_Q(p)/(ann_Q(p) ∩ Γ_V(Q)), where V is
/// the product of the associated primes strictly containing p (V = R when
/// there are none, making Γ_V(Q) = 0).
///
/// With C = (B : p) ∩ A (C = A for the zero prime) and G = (B : V^inf), the
/// answer is the least degree of a generator of C outside G: every monomial of
/// C∖G is a multiple of such a generator. Any monomial of ann_Q(p) outside
/// Γ_V(Q) has annihilator exactly p, so that generator is also a witness.
///
/// Throws Error("prime-not-associated") if p is not in `associated`.
PrimeVNumber v_at_prime_with_witness(const Subquotient& q, const MonomialPrime& p,
                                     const AssSet& associated);
std::int64_t v_at_prime(const Subquotient& q, const MonomialPrime& p, const AssSet& associated);

VReport v_number(const Subquotient& q);
VReport v_number(const Subquotient& q, const AssSet& associated);

struct OracleHit {
  std::int64_t degree = 0;  // shift-adjusted
  Monomial witness;
  MonomialPrime prime;
};

/// Definitional search: scan the monomials of A∖B by increasing weighted
/// degree (up to degree_bound, unshifted) for the first m whose colon (B : m)
/// equals `p`, or is any prime generated by variables when p is nullopt.
/// Returns nullopt when nothing is found below the bound.
///
/// Scanning monomials suffices. Let x be homogeneous with (B : x) = p and drop
/// its terms lying in B. For a monomial r, r·x ∈ B iff r·m ∈ B for every term
/// m (the products r·m are distinct monomials), so (B : x) = ∩_m (B : m).
/// A prime containing a finite intersection contains one of the factors, so
/// (B : m) ⊆ p ⊆ (B : m) for some term m, of the same degree as x.
std::optional<OracleHit> v_oracle(const Subquotient& q, const std::optional<MonomialPrime>& p,
                                  std::int64_t degree_bound);

struct GammaEndReport {
  std::int64_t v_maximal = 0;  // v at the homogeneous maximal ideal
  ExtInt gamma_end;            // end(Γ_m(Q))
  bool holds = false;          // v_maximal <= gamma_end
};

// Checks v_m(Q) <= end(Γ_m(Q)) for m = (x_1, ..., x_d). Throws
// Error("inapplicable") when m is not associated to Q.
GammaEndReport gamma_end_check(const Subquotient& q);

}  // namespace vnumlab
