#include "vnumlab/primes.hpp"

#include <algorithm>
#include <optional>

#include "vnumlab/enumerate.hpp"
#include "vnumlab/errors.hpp"

namespace vnumlab {

MonomialPrime::MonomialPrime(std::vector<std::size_t> support) : support_(std::move(support)) {
  std::sort(support_.begin(), support_.end());
  support_.erase(std::unique(support_.begin(), support_.end()), support_.end());
}

MonomialPrime MonomialPrime::maximal(const GradedRing& ring) {
  std::vector<std::size_t> s(ring.size());
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = i;
  return MonomialPrime(std::move(s));
}

bool MonomialPrime::subset_of(const MonomialPrime& other) const {
  return std::includes(other.support_.begin(), other.support_.end(), support_.begin(),
                       support_.end());
}

bool MonomialPrime::proper_subset_of(const MonomialPrime& other) const {
  return size() < other.size() && subset_of(other);
}

bool MonomialPrime::contains(const MonomialIdeal& ideal) const {
  // Every generator must be divisible by some variable of the support.
  return std::all_of(ideal.generators().begin(), ideal.generators().end(), [this](const Monomial& g) {
    return std::any_of(support_.begin(), support_.end(), [&g](std::size_t i) { return g[i] > 0; });
  });
}

MonomialIdeal MonomialPrime::to_ideal(RingPtr ring) const {
  for (auto i : support_) {
    if (i >= ring->size()) throw Error("dimension-mismatch", "prime support outside ring");
  }
  return MonomialIdeal::generated_by_variables(std::move(ring), support_);
}

std::string MonomialPrime::key(const GradedRing& ring) const {
  std::string out;
  for (auto i : support_) {
    if (!out.empty()) out += ',';
    out += ring.name(i);
  }
  return out;
}

std::vector<std::string> MonomialPrime::names(const GradedRing& ring) const {
  std::vector<std::string> out;
  for (auto i : support_) out.push_back(ring.name(i));
  return out;
}

std::strong_ordering operator<=>(const MonomialPrime& a, const MonomialPrime& b) {
  if (auto c = a.support_.size() <=> b.support_.size(); c != 0) return c;
  return a.support_ <=> b.support_;
}

AssSet::AssSet(std::vector<MonomialPrime> primes) : primes_(std::move(primes)) {
  std::sort(primes_.begin(), primes_.end());
  primes_.erase(std::unique(primes_.begin(), primes_.end()), primes_.end());
}

bool AssSet::contains(const MonomialPrime& p) const {
  return std::binary_search(primes_.begin(), primes_.end(), p);
}

bool AssSet::subset_of(const AssSet& other) const {
  return std::all_of(primes_.begin(), primes_.end(),
                     [&other](const MonomialPrime& p) { return other.contains(p); });
}

MonomialIdeal restrict_to_support(const MonomialIdeal& b, const MonomialPrime& support) {
  const auto n = b.ring().size();
  std::vector<bool> keep(n, false);
  for (auto i : support.support()) keep.at(i) = true;
  std::vector<Monomial> gens;
  gens.reserve(b.generators().size());
  for (const auto& g : b.generators()) {
    std::vector<Exponent> e(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (keep[i]) e[i] = g[i];
    }
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(b.ring_ptr(), std::move(gens));
}

bool is_associated(const Subquotient& q, const MonomialPrime& p) {
  if (is_zero(q)) return false;
  if (p.is_zero()) return q.denominator().is_zero();
  const auto a = restrict_to_support(q.numerator(), p);
  const auto b = restrict_to_support(q.denominator(), p);
  const auto socle = intersect(colon_ideal(b, p.to_ideal(q.ring_ptr())), a);
  return !b.contains(socle);
}

namespace {

std::vector<std::size_t> ideal_support(const MonomialIdeal& ideal) {
  std::vector<bool> seen(ideal.ring().size(), false);
  for (const auto& g : ideal.generators()) {
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (g[i] > 0) seen[i] = true;
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (seen[i]) out.push_back(i);
  }
  return out;
}

}  // namespace

AssSet ass(const Subquotient& q) {
  if (is_zero(q)) return {};
  if (q.denominator().is_zero()) return AssSet({MonomialPrime{}});
  const auto supp = ideal_support(q.denominator());
  if (supp.size() >= 63) throw Error("unsupported", "denominator involves too many variables");
  std::vector<MonomialPrime> found;
  const std::uint64_t subsets = std::uint64_t{1} << supp.size();
  for (std::uint64_t mask = 1; mask < subsets; ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t k = 0; k < supp.size(); ++k) {
      if (mask & (std::uint64_t{1} << k)) s.push_back(supp[k]);
    }
    MonomialPrime p(std::move(s));
    if (is_associated(q, p)) found.push_back(std::move(p));
  }
  return AssSet(std::move(found));
}

std::optional<MonomialPrime> as_prime(const MonomialIdeal& ideal) {
  std::vector<std::size_t> s;
  for (const auto& g : ideal.generators()) {
    const auto supp = g.support();
    if (supp.size() != 1 || g[supp.front()] != 1) return std::nullopt;
    s.push_back(supp.front());
  }
  return MonomialPrime(std::move(s));
}

AssSet ass_oracle(const Subquotient& q, std::int64_t degree_bound) {
  std::vector<MonomialPrime> found;
  for_each_monomial_up_to_degree(q.ring(), degree_bound, [&](const Monomial& m) {
    if (!q.numerator().contains(m) || q.denominator().contains(m)) return;
    if (auto p = as_prime(colon_monomial(q.denominator(), m))) found.push_back(std::move(*p));
  });
  return AssSet(std::move(found));
}

std::int64_t default_oracle_bound(const Subquotient& q) {
  Monomial l = Monomial::unit(q.ring().size());
  for (const auto& g : q.numerator().generators()) l = lcm(l, g);
  for (const auto& g : q.denominator().generators()) l = lcm(l, g);
  return weighted_degree(q.ring(), l) + q.ring().max_weight();
}

}  // namespace vnumlab
