#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "vnumlab/ideal.hpp"
#include "vnumlab/subquotient.hpp"

namespace vnumlab {

/// Prime (x_i : i in support). The empty support is the zero ideal.
class MonomialPrime {
 public:
  MonomialPrime() = default;
  explicit MonomialPrime(std::vector<std::size_t> support);
  MonomialPrime(std::initializer_list<std::size_t> support)
      : MonomialPrime(std::vector<std::size_t>(support)) {}

  // Full support of the ring, the homogeneous maximal ideal.
  static MonomialPrime maximal(const GradedRing& ring);

  const std::vector<std::size_t>& support() const noexcept { return support_; }
  std::size_t size() const noexcept { return support_.size(); }
  bool is_zero() const noexcept { return support_.empty(); }

  // Ideal containment, i.e. support inclusion.
  bool subset_of(const MonomialPrime& other) const;
  bool proper_subset_of(const MonomialPrime& other) const;
  // I ⊆ p for a monomial ideal I.
  bool contains(const MonomialIdeal& ideal) const;

  MonomialIdeal to_ideal(RingPtr ring) const;
  // Comma-joined variable names, "" for the zero prime.
  std::string key(const GradedRing& ring) const;
  std::vector<std::string> names(const GradedRing& ring) const;

  // Canonical: by support size, then lexicographic on indices.
  friend std::strong_ordering operator<=>(const MonomialPrime& a, const MonomialPrime& b);
  friend bool operator==(const MonomialPrime&, const MonomialPrime&) = default;

 private:
  std::vector<std::size_t> support_;
};

/// Canonically sorted, duplicate-free set of monomial primes.
class AssSet {
 public:
  AssSet() = default;
  explicit AssSet(std::vector<MonomialPrime> primes);

  const std::vector<MonomialPrime>& primes() const noexcept { return primes_; }
  auto begin() const noexcept { return primes_.begin(); }
  auto end() const noexcept { return primes_.end(); }
  std::size_t size() const noexcept { return primes_.size(); }
  bool empty() const noexcept { return primes_.empty(); }
  bool contains(const MonomialPrime& p) const;
  bool subset_of(const AssSet& other) const;

  friend bool operator==(const AssSet&, const AssSet&) = default;

 private:
  std::vector<MonomialPrime> primes_;
};

// Localize at the monomial prime on `support`: exponents of the other
// variables are set to zero (those variables become units). The ring is kept;
// the result simply no longer involves the inverted variables.
MonomialIdeal restrict_to_support(const MonomialIdeal& b, const MonomialPrime& support);

// Socle test after localization: p is associated to A/B iff
// ((B' : m_S) ∩ A') ⊄ B' with primes denoting localized ideals.
bool is_associated(const Subquotient& q, const MonomialPrime& p);

// Enumerates the supports inside supp(B) plus the zero prime. Primes involving
// a variable absent from B cannot occur: such a variable is a nonzerodivisor.
AssSet ass(const Subquotient& q);

// Brute force: every colon (B : m) over monomials m of A∖B with weighted
// degree <= degree_bound that is generated by variables (or is zero).
AssSet ass_oracle(const Subquotient& q, std::int64_t degree_bound);

// deg_w(lcm of all generators of A and B) + max weight.
std::int64_t default_oracle_bound(const Subquotient& q);

// Prime generated by variables, if the monomial ideal is one.
std::optional<MonomialPrime> as_prime(const MonomialIdeal& ideal);

}  // namespace vnumlab
