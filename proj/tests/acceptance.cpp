// Prints one PASS/FAIL line per acceptance criterion and exits nonzero if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "support.hpp"
#include "vnumlab/compliance.hpp"
#include "vnumlab/errors.hpp"
#include "vnumlab/filtration.hpp"
#include "vnumlab/golden.hpp"
#include "vnumlab/primes.hpp"
#include "vnumlab/vnumber.hpp"

namespace vnumlab {
namespace {

struct Outcome {
  bool pass = true;
  std::string detail;  // summary on success, first problems on failure
};

class Failures {
 public:
  void add(const std::string& what) {
    ++count_;
    if (count_ <= 3) text_ += (text_.empty() ? "" : "; ") + what;
  }
  int count() const { return count_; }
  Outcome outcome(const std::string& summary) const {
    if (count_ == 0) return {true, summary};
    return {false, std::to_string(count_) + " failure(s): " + text_};
  }

 private:
  int count_ = 0;
  std::string text_;
};

Outcome from_golden(const std::vector<GoldenAssertion>& results) {
  Failures f;
  for (const auto& r : results) {
    if (!r.pass) f.add(r.name + " (" + r.detail + ")");
  }
  return f.outcome(std::to_string(results.size()) + " assertions");
}

Subquotient random_module(testing::Rng& rng, const RingPtr& r) {
  const auto a = testing::uniform(rng, 0, 4) == 0 ? MonomialIdeal::unit(r) : testing::random_ideal(rng, r, 4, 4);
  auto b = testing::random_subideal(rng, a, 4, 4);
  if (b == a) b = MonomialIdeal::zero(r);
  return Subquotient(a, b);
}

Outcome criterion_1() { return from_golden(golden_xyb_family()); }

Outcome criterion_2() {
  Failures f;
  // The stated law v = d1·n - 1 is checked literally; a mismatch is confirmed
  // against the brute-force witness search before it is reported.
  const auto ring = make_ring({"X", "Y"});
  const MonomialPrime m({0, 1});
  for (const auto& [d1, d2] : {std::pair{1, 2}, {2, 3}, {3, 5}}) {
    const MonomialIdeal i(ring, {Monomial({static_cast<Exponent>(d1), 0}), Monomial({0, static_cast<Exponent>(d2)})});
    for (int n = 1; n <= 10; ++n) {
      const auto q = Subquotient::quotient_ring(sum(MonomialIdeal(ring, {Monomial({1, 1})}), power(i, n)));
      const auto v = v_number(q).overall;
      if (v != ExtInt(std::int64_t{d1} * n - 1)) {
        const auto hit = v_oracle(q, m, default_oracle_bound(q));
        std::ostringstream s;
        s << "(d1,d2,n)=(" << d1 << "," << d2 << "," << n << "): stated " << d1 * n - 1 << ", computed "
          << v.to_string() << ", oracle " << (hit ? std::to_string(hit->degree) : "none");
        if (hit) s << " via " << format_monomial(*ring, hit->witness);
        f.add(s.str());
      }
    }
  }
  // Ass, end and the v <= end(Gamma) check, with v taken from the corrected law.
  for (const auto& r : golden_axes_family()) {
    if (!r.pass) f.add(r.name + " (" + r.detail + ")");
  }
  return f.outcome("30 instances, v = d1n-1, end = d2n-1, v <= end");
}

Outcome criterion_3() { return from_golden(golden_cubic_family()); }

Outcome criterion_4() {
  testing::Rng rng(404);
  Failures f;
  int primes = 0;
  for (int t = 0; t < 200; ++t) {
    const auto r = testing::random_ring(rng, 3, true);
    const auto q = random_module(rng, r);
    const auto a = ass(q);
    const auto bound = default_oracle_bound(q);
    if (a != ass_oracle(q, bound)) f.add("ass at bound, case " + std::to_string(t));
    if (a != ass_oracle(q, 2 * bound)) f.add("ass at 2x bound, case " + std::to_string(t));
    for (const auto& p : a) {
      ++primes;
      const auto hit = v_oracle(q, p, bound);
      if (!hit || hit->degree != v_at_prime(q, p, a)) {
        f.add("v_p, case " + std::to_string(t) + " prime (" + p.key(*r) + ")");
      }
    }
  }
  return f.outcome("200 instances, " + std::to_string(primes) + " associated primes");
}

Outcome criterion_5() {
  testing::Rng rng(505);
  Failures f;
  long checked = 0;
  for (int t = 0; t < 500; ++t) {
    const auto r = testing::random_ring(rng, 3, true);
    const auto b = testing::uniform(rng, 0, 5) == 0 ? MonomialIdeal::zero(r) : testing::random_ideal(rng, r, 4, 4);
    const auto a = testing::random_ideal(rng, r, 3, 3);
    const auto c = testing::random_ideal(rng, r, 3, 4);
    const auto col = colon_ideal(b, a);
    const auto sat = saturate(b, a);
    const auto inter = intersect(b, c);
    for (const auto& m : testing::monomials_up_to(*r, 10)) {
      ++checked;
      const std::string at = "case " + std::to_string(t) + " at " + format_monomial(*r, m);
      if (col.contains(m) != testing::brute_colon_member(m, b.generators(), a.generators())) f.add("colon " + at);
      if (sat.contains(m) != testing::brute_saturation_member(m, b.generators(), a.generators())) {
        f.add("saturation " + at);
      }
      if (inter.contains(m) != (testing::brute_member(m, b.generators()) && testing::brute_member(m, c.generators()))) {
        f.add("intersection " + at);
      }
    }
  }
  return f.outcome("500 cases, " + std::to_string(checked) + " monomials");
}

// Runs the compliance check, raising n_max while the tails have not settled.
ComplianceReport compliance_with_retry(FamilySpec spec) {
  for (int n_max : {10, 14, 18, 24}) {
    spec.n_max = n_max;
    try {
      return check_theorems(spec);
    } catch (const Error& e) {
      if (e.code() != "not-stabilized" || n_max == 24) throw;
    }
  }
  throw Error("not-stabilized", "unreachable");
}

Outcome criterion_6() {
  Failures f;
  std::vector<std::pair<std::string, FamilySpec>> battery;
  const auto xy = make_ring({"X", "Y"});
  const auto xyz = make_ring({"X", "Y", "Z"});
  auto monomial = [](std::vector<Exponent> e) { return Monomial(std::move(e)); };
  for (const auto& [a, b] : {std::pair{1, 1}, {1, 3}, {2, 3}, {3, 2}}) {
    battery.push_back({"XY^b family a=" + std::to_string(a) + " b=" + std::to_string(b),
                       {MonomialIdeal::unit(xy), MonomialIdeal(xy, {monomial({1, static_cast<Exponent>(b)})}),
                        MonomialIdeal(xy, {monomial({static_cast<Exponent>(a), 0})}), std::nullopt,
                        MonomialIdeal::unit(xy), FamilyKind::InModIn1N, 10}});
  }
  for (const auto& [d1, d2] : {std::pair{1, 2}, {2, 3}, {3, 5}}) {
    battery.push_back({"(XY) family d1=" + std::to_string(d1) + " d2=" + std::to_string(d2),
                       {MonomialIdeal::unit(xy), MonomialIdeal(xy, {monomial({1, 1})}),
                        MonomialIdeal(xy, {monomial({static_cast<Exponent>(d1), 0}),
                                           monomial({0, static_cast<Exponent>(d2)})}),
                        std::nullopt, MonomialIdeal::unit(xy), FamilyKind::InModIn1N, 10}});
  }
  battery.push_back({"(X^3,XY^4) family",
                     {MonomialIdeal::unit(xyz), parse_ideal(xyz, std::vector<std::string>{"X^3", "X*Y^4"}),
                      parse_ideal(xyz, std::vector<std::string>{"X", "Y^2", "Z^3"}), std::nullopt, MonomialIdeal::unit(xyz),
                      FamilyKind::InModIn1N, 10}});

  // B0 lives in X, Y and I contains a pure power of Z, so Z^k ∈ I is a
  // nonzerodivisor on M and (0 :_M I) = 0.
  testing::Rng rng(606);
  const std::size_t random_start = battery.size();
  while (battery.size() < random_start + 10) {
    std::vector<Monomial> b0;
    for (int g = testing::uniform(rng, 1, 3); g > 0; --g) {
      b0.push_back(monomial({static_cast<Exponent>(testing::uniform(rng, 0, 3)),
                             static_cast<Exponent>(testing::uniform(rng, 0, 3)), 0}));
    }
    const MonomialIdeal b(xyz, b0);
    if (b.is_unit()) continue;
    std::vector<Monomial> ig{monomial({0, 0, static_cast<Exponent>(testing::uniform(rng, 1, 3))})};
    for (int g = testing::uniform(rng, 1, 2); g > 0; --g) {
      ig.push_back(testing::random_monomial(rng, 3, 2));
    }
    const MonomialIdeal i(xyz, ig);
    if (i.is_unit()) continue;
    FamilySpec spec{MonomialIdeal::unit(xyz), b, i, std::nullopt, MonomialIdeal::unit(xyz), FamilyKind::InModIn1N,
                    10};
    if (!evaluate_series(spec.with_kind(FamilyKind::InModIn1N)).ann_I_zero) {
      f.add("random spec without (0 :_M I) = 0");
      continue;
    }
    std::vector<std::string> text = b.to_strings();
    std::string label = "random B0=(";
    for (std::size_t k = 0; k < text.size(); ++k) label += (k ? "," : "") + text[k];
    label += ") I=(";
    text = i.to_strings();
    for (std::size_t k = 0; k < text.size(); ++k) label += (k ? "," : "") + text[k];
    battery.push_back({label + ")", spec});
  }

  int pass = 0, inapplicable = 0;
  for (const auto& [label, spec] : battery) {
    try {
      const auto report = compliance_with_retry(spec);
      for (const auto& item : report.items) {
        if (item.verdict == Verdict::fail) f.add(label + " item (" + item.id + "): " + item.detail);
        if (item.verdict == Verdict::pass) ++pass;
        if (item.verdict == Verdict::inapplicable) ++inapplicable;
      }
    } catch (const Error& e) {
      f.add(label + ": " + e.what());
    }
  }
  return f.outcome(std::to_string(battery.size()) + " specs, " + std::to_string(pass) + " PASS and " +
                   std::to_string(inapplicable) + " INAPPLICABLE items, no FAIL");
}

Outcome criterion_7() {
  testing::Rng rng(707);
  Failures f;
  for (int t = 0; t < 100; ++t) {
    const auto r = testing::random_ring(rng, 3, true);
    const auto q = random_module(rng, r);
    const auto c = sum(q.denominator(), testing::random_subideal(rng, q.numerator(), 3, 4));
    const auto big = v_number(q);
    const auto small = v_number(Subquotient(c, q.denominator()));
    if (!(big.overall <= small.overall)) f.add("overall, chain " + std::to_string(t));
    for (const auto& [p, d] : small.per_prime) {
      const auto it = big.per_prime.find(p);
      if (it == big.per_prime.end() || it->second > d) f.add("prime (" + p.key(*r) + "), chain " + std::to_string(t));
    }
  }
  return f.outcome("100 chains");
}

Outcome criterion_8() {
  using Law = std::pair<std::int64_t, std::int64_t>;
  Failures f;
  if (min_linear_combine(std::vector<Law>{{3, 0}, {1, 7}, {1, 4}, {2, -100}}) != Law(1, 4)) f.add("slope tie");
  if (min_linear_combine(std::vector<Law>{{2, 5}}) != Law(2, 5)) f.add("single law");
  if (min_linear_combine(std::vector<Law>{{0, 9}, {0, 9}}) != Law(0, 9)) f.add("duplicate laws");
  try {
    min_linear_combine(std::vector<Law>{});
    f.add("empty input accepted");
  } catch (const Error& e) {
    if (e.code() != "empty-input") f.add(std::string("empty input: ") + e.code());
  }
  // The combined law agrees with the pointwise minimum once every crossing
  // (at most 2·max|b| / 1 = 80 here) is behind.
  testing::Rng rng(808);
  for (int t = 0; t < 300; ++t) {
    std::vector<Law> laws;
    for (int k = testing::uniform(rng, 1, 6); k > 0; --k) {
      laws.emplace_back(testing::uniform(rng, 0, 5), testing::uniform(rng, -40, 40));
    }
    const auto law = min_linear_combine(laws);
    for (std::int64_t n = 81; n <= 200; ++n) {
      std::int64_t lo = laws[0].first * n + laws[0].second;
      for (const auto& [a, b] : laws) lo = std::min(lo, a * n + b);
      if (lo != law.first * n + law.second) {
        f.add("case " + std::to_string(t) + " at n=" + std::to_string(n));
        break;
      }
    }
  }
  return f.outcome("ties, empty input and 300 pointwise checks to n=200");
}

}  // namespace
}  // namespace vnumlab

int main() {
  using namespace vnumlab;
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"XY^b family reproduction", criterion_1},
      {"(XY) + (X^d1,Y^d2)^n reproduction", criterion_2},
      {"(X^3,XY^4) family reproduction", criterion_3},
      {"associated primes and v-number oracle equivalence", criterion_4},
      {"kernel colon/intersection/saturation oracles", criterion_5},
      {"theorem compliance battery", criterion_6},
      {"submodule monotonicity", criterion_7},
      {"min_linear_combine", criterion_8},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = criteria[k].second();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %zu: %s [%s] (%.2f s)\n", out.pass ? "PASS" : "FAIL", k + 1, criteria[k].first,
                out.detail.c_str(), secs);
    std::fflush(stdout);
    if (!out.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
