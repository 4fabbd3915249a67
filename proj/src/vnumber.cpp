#include "vnumlab/vnumber.hpp"

#include "vnumlab/enumerate.hpp"
#include "vnumlab/errors.hpp"

namespace vnumlab {

PrimeVNumber v_at_prime_with_witness(const Subquotient& q, const MonomialPrime& p,
                                     const AssSet& associated) {
  if (!associated.contains(p)) {
    throw Error("prime-not-associated", "(" + p.key(q.ring()) + ") is not an associated prime");
  }
  const auto& ring_ptr = q.ring_ptr();
  const MonomialIdeal c = p.is_zero()
                              ? q.numerator()
                              : intersect(colon_ideal(q.denominator(), p.to_ideal(ring_ptr)),
                                          q.numerator());

  MonomialIdeal torsion = q.denominator();
  std::optional<MonomialIdeal> v;
  for (const auto& other : associated) {
    if (!p.proper_subset_of(other)) continue;
    auto prime_ideal = other.to_ideal(ring_ptr);
    v = v ? product(*v, prime_ideal) : std::move(prime_ideal);
  }
  if (v) torsion = saturate(q.denominator(), *v);

  std::optional<PrimeVNumber> best;
  for (const auto& g : c.generators()) {
    if (torsion.contains(g)) continue;
    const auto d = weighted_degree(q.ring(), g);
    if (!best || d < best->degree) best = PrimeVNumber{d, g};
  }
  if (!best) {
    // Unreachable for a genuinely associated prime.
    throw Error("internal", "no surviving generator for (" + p.key(q.ring()) + ")");
  }
  best->degree += q.shift();
  return *best;
}

std::int64_t v_at_prime(const Subquotient& q, const MonomialPrime& p, const AssSet& associated) {
  return v_at_prime_with_witness(q, p, associated).degree;
}

VReport v_number(const Subquotient& q, const AssSet& associated) {
  VReport report;
  for (const auto& p : associated) {
    auto r = v_at_prime_with_witness(q, p, associated);
    if (report.overall.is_pos_inf() || ExtInt(r.degree) < report.overall) {
      report.overall = ExtInt(r.degree);
    }
    report.per_prime.emplace(p, r.degree);
    report.witnesses.emplace(p, std::move(r.witness));
  }
  return report;
}

VReport v_number(const Subquotient& q) { return v_number(q, ass(q)); }

std::optional<OracleHit> v_oracle(const Subquotient& q, const std::optional<MonomialPrime>& p,
                                  std::int64_t degree_bound) {
  const auto& ring = q.ring();
  for (std::int64_t d = 0; d <= degree_bound; ++d) {
    std::optional<OracleHit> hit;
    for_each_monomial_of_degree(ring, d, [&](const Monomial& m) {
      if (hit) return;
      if (!q.numerator().contains(m) || q.denominator().contains(m)) return;
      auto prime = as_prime(colon_monomial(q.denominator(), m));
      if (!prime) return;
      if (p && *prime != *p) return;
      hit = OracleHit{d + q.shift(), m, std::move(*prime)};
    });
    if (hit) return hit;
  }
  return std::nullopt;
}

GammaEndReport gamma_end_check(const Subquotient& q) {
  const auto maximal = MonomialPrime::maximal(q.ring());
  const auto associated = ass(q);
  if (!associated.contains(maximal)) {
    throw Error("inapplicable", "the maximal ideal is not associated");
  }
  GammaEndReport report;
  report.v_maximal = v_at_prime(q, maximal, associated);
  const auto gamma = gamma_submodule(q, maximal.to_ideal(q.ring_ptr()));
  report.gamma_end = end_artinian(gamma);
  report.holds = ExtInt(report.v_maximal) <= report.gamma_end;
  return report;
}

}  // namespace vnumlab
