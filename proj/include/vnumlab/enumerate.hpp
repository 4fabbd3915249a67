#pragma once

#include <cstdint>
#include <vector>

#include "vnumlab/monomial.hpp"
#include "vnumlab/ring.hpp"

namespace vnumlab {

// Calls fn(m) for every monomial of weighted degree exactly `degree`, in
// descending lexicographic order. Finite because every weight is >= 1.
template <typename Fn>
void for_each_monomial_of_degree(const GradedRing& ring, std::int64_t degree, Fn&& fn) {
  if (degree < 0) return;
  const std::size_t n = ring.size();
  std::vector<Exponent> e(n, 0);
  auto rec = [&](auto& self, std::size_t i, std::int64_t remaining) -> void {
    if (i + 1 == n || n == 0) {
      if (n == 0) {
        if (remaining == 0) fn(Monomial(e));
        return;
      }
      if (remaining % ring.weight(i) != 0) return;
      e[i] = static_cast<Exponent>(remaining / ring.weight(i));
      fn(Monomial(e));
      e[i] = 0;
      return;
    }
    for (std::int64_t k = remaining / ring.weight(i); k >= 0; --k) {
      e[i] = static_cast<Exponent>(k);
      self(self, i + 1, remaining - k * ring.weight(i));
    }
    e[i] = 0;
  };
  rec(rec, 0, degree);
}

// All monomials of weighted degree <= bound, by increasing degree.
template <typename Fn>
void for_each_monomial_up_to_degree(const GradedRing& ring, std::int64_t bound, Fn&& fn) {
  for (std::int64_t d = 0; d <= bound; ++d) for_each_monomial_of_degree(ring, d, fn);
}

std::vector<Monomial> monomials_of_degree(const GradedRing& ring, std::int64_t degree);

}  // namespace vnumlab
