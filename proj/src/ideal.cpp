#include "vnumlab/ideal.hpp"

#include <algorithm>

#include "vnumlab/errors.hpp"

namespace vnumlab {

namespace {

// Sort canonically, drop duplicates and non-minimal elements. A proper divisor
// has strictly smaller weighted degree (all weights >= 1), so it is always
// kept before any of its multiples is examined.
std::vector<Monomial> minimal_generators(const GradedRing& ring, std::vector<Monomial> gens) {
  for (const auto& g : gens) {
    if (g.size() != ring.size()) {
      throw Error("dimension-mismatch", "generator has " + std::to_string(g.size()) +
                                            " exponents, ring has " + std::to_string(ring.size()));
    }
  }
  std::sort(gens.begin(), gens.end(),
            [&ring](const Monomial& a, const Monomial& b) { return canonical_less(ring, a, b); });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> kept;
  kept.reserve(gens.size());
  for (auto& g : gens) {
    const bool redundant =
        std::any_of(kept.begin(), kept.end(), [&g](const Monomial& k) { return divides(k, g); });
    if (!redundant) kept.push_back(std::move(g));
  }
  return kept;
}

// (B : m^inf): drop the variables of supp(m) from every generator.
MonomialIdeal saturate_by_monomial(const MonomialIdeal& b, const Monomial& m) {
  const auto supp = m.support();
  std::vector<Monomial> out;
  out.reserve(b.generators().size());
  for (const auto& g : b.generators()) {
    std::vector<Exponent> e(g.exponents().begin(), g.exponents().end());
    for (auto i : supp) e[i] = 0;
    out.emplace_back(std::move(e));
  }
  return MonomialIdeal(b.ring_ptr(), std::move(out));
}

}  // namespace

MonomialIdeal::MonomialIdeal(RingPtr ring, std::vector<Monomial> gens) : ring_(std::move(ring)) {
  if (!ring_) throw Error("invalid-ring", "null ring");
  gens_ = minimal_generators(*ring_, std::move(gens));
}

MonomialIdeal MonomialIdeal::zero(RingPtr ring) { return MonomialIdeal(std::move(ring), {}); }

MonomialIdeal MonomialIdeal::unit(RingPtr ring) {
  const auto n = ring->size();
  return MonomialIdeal(std::move(ring), {Monomial::unit(n)});
}

MonomialIdeal MonomialIdeal::generated_by_variables(RingPtr ring,
                                                    std::span<const std::size_t> indices) {
  std::vector<Monomial> gens;
  for (auto i : indices) gens.push_back(Monomial::variable(ring->size(), i));
  return MonomialIdeal(std::move(ring), std::move(gens));
}

bool MonomialIdeal::is_unit() const noexcept {
  return gens_.size() == 1 && gens_.front().is_unit();
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&m](const Monomial& g) { return divides(g, m); });
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  check_same_ring(*this, other);
  return std::all_of(other.gens_.begin(), other.gens_.end(),
                     [this](const Monomial& g) { return contains(g); });
}

std::vector<std::string> MonomialIdeal::to_strings() const {
  std::vector<std::string> out;
  out.reserve(gens_.size());
  for (const auto& g : gens_) out.push_back(format_monomial(*ring_, g));
  return out;
}

bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
  return (a.ring_ == b.ring_ || *a.ring_ == *b.ring_) && a.gens_ == b.gens_;
}

void check_same_ring(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.ring_ptr() != b.ring_ptr() && !(a.ring() == b.ring())) {
    throw Error("ring-mismatch", "ideals live over different rings");
  }
}

MonomialIdeal minimalize(RingPtr ring, std::vector<Monomial> gens) {
  return MonomialIdeal(std::move(ring), std::move(gens));
}

bool member(const Monomial& m, const MonomialIdeal& ideal) { return ideal.contains(m); }

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  check_same_ring(a, b);
  std::vector<Monomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal(a.ring_ptr(), std::move(gens));
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  check_same_ring(a, b);
  std::vector<Monomial> gens;
  gens.reserve(a.generators().size() * b.generators().size());
  for (const auto& g : a.generators()) {
    for (const auto& h : b.generators()) gens.push_back(g * h);
  }
  return MonomialIdeal(a.ring_ptr(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& b, std::uint32_t n) {
  MonomialIdeal result = MonomialIdeal::unit(b.ring_ptr());
  for (std::uint32_t i = 0; i < n; ++i) result = product(result, b);
  return result;
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  check_same_ring(a, b);
  std::vector<Monomial> gens;
  gens.reserve(a.generators().size() * b.generators().size());
  for (const auto& g : a.generators()) {
    for (const auto& h : b.generators()) gens.push_back(lcm(g, h));
  }
  return MonomialIdeal(a.ring_ptr(), std::move(gens));
}

MonomialIdeal colon_monomial(const MonomialIdeal& b, const Monomial& m) {
  if (m.size() != b.ring().size()) throw Error("dimension-mismatch", "monomial does not fit ring");
  std::vector<Monomial> gens;
  gens.reserve(b.generators().size());
  for (const auto& g : b.generators()) gens.push_back(colon(g, m));
  return MonomialIdeal(b.ring_ptr(), std::move(gens));
}

MonomialIdeal colon_ideal(const MonomialIdeal& b, const MonomialIdeal& a) {
  check_same_ring(a, b);
  if (a.is_zero()) throw Error("colon-by-zero", "colon by the zero ideal");
  auto it = a.generators().begin();
  MonomialIdeal result = colon_monomial(b, *it);
  for (++it; it != a.generators().end(); ++it) {
    result = intersect(result, colon_monomial(b, *it));
  }
  return result;
}

// (B : a^inf) is the intersection of (B : g^inf) over the generators g of a;
// each of those is a single pass over B's generators. This is the fixed point
// of repeated colon_ideal(., a).
MonomialIdeal saturate(const MonomialIdeal& b, const MonomialIdeal& a) {
  check_same_ring(a, b);
  if (a.is_zero()) throw Error("colon-by-zero", "saturation by the zero ideal");
  auto it = a.generators().begin();
  MonomialIdeal result = saturate_by_monomial(b, *it);
  for (++it; it != a.generators().end(); ++it) {
    result = intersect(result, saturate_by_monomial(b, *it));
  }
  return result;
}

bool radical_member(const Monomial& m, const MonomialIdeal& b) {
  if (m.size() != b.ring().size()) throw Error("dimension-mismatch", "monomial does not fit ring");
  return std::any_of(b.generators().begin(), b.generators().end(), [&m](const Monomial& g) {
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (g[i] > 0 && m[i] == 0) return false;
    }
    return true;
  });
}

bool equals(const MonomialIdeal& a, const MonomialIdeal& b) {
  check_same_ring(a, b);
  return a == b;
}

MonomialIdeal parse_ideal(RingPtr ring, std::span<const std::string> gens) {
  std::vector<Monomial> ms;
  ms.reserve(gens.size());
  for (const auto& g : gens) ms.push_back(parse_monomial(*ring, g));
  return MonomialIdeal(std::move(ring), std::move(ms));
}

}  // namespace vnumlab
