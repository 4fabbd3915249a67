#include "vnumlab/subquotient.hpp"

#include <algorithm>
#include <limits>
#include <optional>

#include "vnumlab/enumerate.hpp"
#include "vnumlab/errors.hpp"

namespace vnumlab {

std::vector<Monomial> monomials_of_degree(const GradedRing& ring, std::int64_t degree) {
  std::vector<Monomial> out;
  for_each_monomial_of_degree(ring, degree, [&out](Monomial m) { out.push_back(std::move(m)); });
  return out;
}

Subquotient::Subquotient(MonomialIdeal numerator, MonomialIdeal denominator, std::int64_t shift)
    : num_(std::move(numerator)), den_(std::move(denominator)), shift_(shift) {
  check_same_ring(num_, den_);
  for (const auto& g : den_.generators()) {
    if (!num_.contains(g)) {
      throw Error("denominator-not-contained",
                  "generator " + format_monomial(ring(), g) + " of the denominator is not in the numerator");
    }
  }
}

Subquotient Subquotient::quotient_ring(MonomialIdeal denominator, std::int64_t shift) {
  auto unit = MonomialIdeal::unit(denominator.ring_ptr());
  return Subquotient(std::move(unit), std::move(denominator), shift);
}

Subquotient make_subquotient(MonomialIdeal numerator, MonomialIdeal denominator,
                             std::int64_t shift) {
  return Subquotient(std::move(numerator), std::move(denominator), shift);
}

bool is_zero(const Subquotient& q) { return q.denominator().contains(q.numerator()); }

ExtInt indeg(const Subquotient& q) {
  std::optional<std::int64_t> best;
  for (const auto& g : q.numerator().generators()) {
    if (q.denominator().contains(g)) continue;
    const auto d = weighted_degree(q.ring(), g);
    if (!best || d < *best) best = d;
  }
  if (!best) return ExtInt::infinity();
  return ExtInt(q.shift() + *best);
}

std::vector<Monomial> monomials_in_degree(const Subquotient& q, std::int64_t u) {
  std::vector<Monomial> out;
  for_each_monomial_of_degree(q.ring(), u - q.shift(), [&](Monomial m) {
    if (q.numerator().contains(m) && !q.denominator().contains(m)) out.push_back(std::move(m));
  });
  return out;
}

Subquotient twist(const Subquotient& q, std::int64_t h) {
  return Subquotient(q.numerator(), q.denominator(), q.shift() + h);
}

Subquotient ann_submodule(const Subquotient& q, const MonomialIdeal& a) {
  auto num = intersect(colon_ideal(q.denominator(), a), q.numerator());
  return Subquotient(std::move(num), q.denominator(), q.shift());
}

Subquotient gamma_submodule(const Subquotient& q, const MonomialIdeal& a) {
  auto num = intersect(saturate(q.denominator(), a), q.numerator());
  return Subquotient(std::move(num), q.denominator(), q.shift());
}

namespace {

// Least k with x_i^k in `ideal`, if any generator is a pure power of x_i (or 1).
std::optional<Exponent> pure_power_bound(const MonomialIdeal& ideal, std::size_t i) {
  std::optional<Exponent> best;
  for (const auto& g : ideal.generators()) {
    bool pure = true;
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (j != i && g[j] != 0) {
        pure = false;
        break;
      }
    }
    if (pure && (!best || g[i] < *best)) best = g[i];
  }
  return best;
}

}  // namespace

bool is_artinian(const Subquotient& q) {
  if (is_zero(q)) return true;
  for (const auto& g : q.numerator().generators()) {
    const auto cyclic = colon_monomial(q.denominator(), g);
    for (std::size_t i = 0; i < q.ring().size(); ++i) {
      if (!pure_power_bound(cyclic, i)) return false;
    }
  }
  return true;
}

ExtInt end_artinian(const Subquotient& q) {
  if (!is_artinian(q)) throw Error("not-artinian", "module has infinite length");
  const auto& ring = q.ring();
  const std::size_t n = ring.size();
  std::optional<std::int64_t> best;
  // The monomials g*m with g*m outside B are the standard monomials m of
  // (B : g) times g; they all lie in the box m_i < k_i.
  for (const auto& g : q.numerator().generators()) {
    if (q.denominator().contains(g)) continue;
    const auto cyclic = colon_monomial(q.denominator(), g);
    std::vector<Exponent> box(n);
    for (std::size_t i = 0; i < n; ++i) box[i] = *pure_power_bound(cyclic, i);
    const auto base = weighted_degree(ring, g);
    std::vector<Exponent> e(n, 0);
    auto rec = [&](auto& self, std::size_t i) -> void {
      if (i == n) {
        Monomial m(e);
        if (cyclic.contains(m)) return;
        const auto d = base + weighted_degree(ring, m);
        if (!best || d > *best) best = d;
        return;
      }
      for (Exponent k = 0; k < box[i]; ++k) {
        e[i] = k;
        self(self, i + 1);
      }
      e[i] = 0;
    };
    rec(rec, 0);
  }
  if (!best) return ExtInt::neg_infinity();
  return ExtInt(q.shift() + *best);
}

}  // namespace vnumlab
