#pragma once

// Random instance generators and definitional brute-force oracles shared by
// the unit tests and the acceptance binary. The oracles only use exponent
// arithmetic and divisibility, never the library's ideal operations.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "vnumlab/enumerate.hpp"
#include "vnumlab/ideal.hpp"
#include "vnumlab/monomial.hpp"
#include "vnumlab/ring.hpp"

namespace vnumlab::testing {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline RingPtr random_ring(Rng& rng, int max_vars, bool weighted) {
  static const char* names[] = {"X", "Y", "Z", "W"};
  const int n = uniform(rng, 1, max_vars);
  std::vector<std::string> vars;
  std::vector<std::int64_t> weights;
  for (int i = 0; i < n; ++i) {
    vars.emplace_back(names[i]);
    weights.push_back(weighted ? uniform(rng, 1, 2) : 1);
  }
  return make_ring(vars, weights);
}

inline Monomial random_monomial(Rng& rng, std::size_t nvars, int max_exp) {
  std::vector<Exponent> e(nvars);
  for (auto& x : e) x = static_cast<Exponent>(uniform(rng, 0, max_exp));
  return Monomial(std::move(e));
}

// Nonzero ideal with 1..max_gens random generators (possibly the unit ideal).
inline MonomialIdeal random_ideal(Rng& rng, const RingPtr& ring, int max_gens, int max_exp) {
  std::vector<Monomial> gens;
  const int k = uniform(rng, 1, max_gens);
  for (int i = 0; i < k; ++i) gens.push_back(random_monomial(rng, ring->size(), max_exp));
  return MonomialIdeal(ring, std::move(gens));
}

// Random B ⊆ A: each generator of B is lcm(generator of A, random monomial).
inline MonomialIdeal random_subideal(Rng& rng, const MonomialIdeal& a, int max_gens, int max_exp) {
  std::vector<Monomial> gens;
  const int k = uniform(rng, 0, max_gens);
  const auto& ag = a.generators();
  for (int i = 0; i < k; ++i) {
    const auto& g = ag[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(ag.size()) - 1))];
    gens.push_back(lcm(g, random_monomial(rng, a.ring().size(), max_exp)));
  }
  return MonomialIdeal(a.ring_ptr(), std::move(gens));
}

// m lies in the ideal generated by `gens`.
inline bool brute_member(const Monomial& m, const std::vector<Monomial>& gens) {
  for (const auto& g : gens) {
    bool divides_m = true;
    for (std::size_t i = 0; i < m.size(); ++i) divides_m = divides_m && g[i] <= m[i];
    if (divides_m) return true;
  }
  return false;
}

inline Monomial brute_times(const Monomial& a, const Monomial& b) {
  std::vector<Exponent> e(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) e[i] = a[i] + b[i];
  return Monomial(std::move(e));
}

// m ∈ (B : a) iff m·g ∈ B for every generator g of a.
inline bool brute_colon_member(const Monomial& m, const std::vector<Monomial>& b,
                               const std::vector<Monomial>& a) {
  return std::all_of(a.begin(), a.end(), [&](const Monomial& g) { return brute_member(brute_times(m, g), b); });
}

// m ∈ (B : a^inf) iff m·g^K ∈ B for every generator g of a, where K bounds
// every exponent of B's generators (a larger power changes nothing).
inline bool brute_saturation_member(const Monomial& m, const std::vector<Monomial>& b,
                                    const std::vector<Monomial>& a) {
  Exponent k = 1;
  for (const auto& g : b) {
    for (std::size_t i = 0; i < g.size(); ++i) k = std::max(k, g[i]);
  }
  return std::all_of(a.begin(), a.end(), [&](const Monomial& g) {
    Monomial p = m;
    for (Exponent i = 0; i < k; ++i) p = brute_times(p, g);
    return brute_member(p, b);
  });
}

inline std::vector<Monomial> monomials_up_to(const GradedRing& ring, std::int64_t bound) {
  std::vector<Monomial> out;
  for_each_monomial_up_to_degree(ring, bound, [&](const Monomial& m) { out.push_back(m); });
  return out;
}

}  // namespace vnumlab::testing
