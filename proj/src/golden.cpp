#include "vnumlab/golden.hpp"

#include <sstream>

#include "vnumlab/errors.hpp"
#include "vnumlab/filtration.hpp"
#include "vnumlab/vnumber.hpp"

namespace vnumlab {

namespace {

class Suite {
 public:
  explicit Suite(std::string name) : name_(std::move(name)) {}

  template <typename T, typename U>
  void equal(const std::string& what, const T& actual, const U& expected) {
    const bool ok = actual == expected;
    std::string detail;
    if (!ok) detail = "expected " + show(expected) + ", got " + show(actual);
    out_.push_back({name_, what, ok, detail});
  }
  void check(const std::string& what, bool ok, const std::string& detail = {}) {
    out_.push_back({name_, what, ok, ok ? std::string() : detail});
  }
  // Runs `body`, turning a domain error into a failed assertion.
  template <typename Fn>
  void guard(const std::string& what, Fn&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      out_.push_back({name_, what, false, e.what()});
    }
  }
  std::vector<GoldenAssertion> take() { return std::move(out_); }

 private:
  static std::string show(const ExtInt& v) { return v.to_string(); }
  static std::string show(std::int64_t v) { return std::to_string(v); }
  static std::string show(int v) { return std::to_string(v); }
  static std::string show(bool v) { return v ? "true" : "false"; }
  static std::string show(const std::string& v) { return v; }

  std::string name_;
  std::vector<GoldenAssertion> out_;
};

std::string ass_string(const GradedRing& ring, const AssSet& a) {
  std::string out = "{";
  for (const auto& p : a) out += (out.size() > 1 ? ";" : "") + std::string("(") + p.key(ring) + ")";
  return out + "}";
}

MonomialIdeal gens(const RingPtr& ring, std::initializer_list<const char*> texts) {
  std::vector<Monomial> ms;
  for (const auto* t : texts) ms.push_back(parse_monomial(*ring, t));
  return MonomialIdeal(ring, std::move(ms));
}

Monomial mono(const RingPtr& ring, std::int64_t x, std::int64_t y, std::int64_t z = -1) {
  std::vector<Exponent> e{static_cast<Exponent>(x), static_cast<Exponent>(y)};
  if (z >= 0) e.push_back(static_cast<Exponent>(z));
  (void)ring;
  return Monomial(std::move(e));
}

}  // namespace

std::vector<GoldenAssertion> golden_xyb_family() {
  Suite s("xy^b");
  const auto ring = make_ring({"X", "Y"});
  const auto& R = *ring;
  const MonomialPrime p({0});
  const MonomialPrime q({1});
  const MonomialPrime m({0, 1});
  const std::pair<int, int> params[] = {{1, 1}, {1, 3}, {2, 3}, {3, 2}};
  for (const auto& [a, b] : params) {
    const auto b0 = MonomialIdeal(ring, {mono(ring, 1, b)});
    FamilySpec spec{MonomialIdeal::unit(ring), b0, MonomialIdeal(ring, {mono(ring, a, 0)}), std::nullopt,
                    MonomialIdeal::unit(ring), FamilyKind::InModIn1N, 10};
    PowerTower tower(spec);
    for (int n = 1; n <= 10; ++n) {
      std::ostringstream tag;
      tag << "a=" << a << " b=" << b << " n=" << n << ": ";
      const std::string t = tag.str();
      const std::int64_t an = static_cast<std::int64_t>(a) * n;
      s.guard(t + "evaluation", [&] {
        const Subquotient in_m(tower.module_power(n), b0);
        const auto ass_in = ass(in_m);
        s.equal(t + "Ass(I^nM)", ass_string(R, ass_in), ass_string(R, AssSet({q})));
        s.equal(t + "v(I^nM)", v_number(in_m, ass_in).overall, ExtInt(an + b - 1));
        s.equal(t + "indeg(I^nM)", indeg(in_m), ExtInt(an));

        const Subquotient gr(tower.module_power(n), tower.module_power(n + 1));
        const auto ass_gr = ass(gr);
        s.equal(t + "indeg(I^nM/I^{n+1}M)", indeg(gr), ExtInt(an));
        s.equal(t + "Ass(I^nM/I^{n+1}M)", ass_string(R, ass_gr), ass_string(R, AssSet({m})));
        s.equal(t + "v(I^nM/I^{n+1}M)", v_number(gr, ass_gr).overall, ExtInt(an + a + b - 2));

        const Subquotient quot(MonomialIdeal::unit(ring), tower.module_power(n));
        const auto ass_q = ass(quot);
        const auto vq = v_number(quot, ass_q);
        if (an == 1) {
          s.equal(t + "Ass(M/I^nM)", ass_string(R, ass_q), ass_string(R, AssSet({p})));
          s.equal(t + "v_(X)(M/I^nM)", ExtInt(vq.per_prime.at(p)), ExtInt(0));
          s.equal(t + "v(M/I^nM)", vq.overall, ExtInt(0));
        } else {
          s.equal(t + "Ass(M/I^nM)", ass_string(R, ass_q), ass_string(R, AssSet({p, m})));
          s.equal(t + "v_(X)(M/I^nM)", ExtInt(vq.per_prime.at(p)), ExtInt(b));
          s.equal(t + "v_(X,Y)(M/I^nM)", ExtInt(vq.per_prime.at(m)), ExtInt(an + b - 2));
          s.equal(t + "v(M/I^nM)", vq.overall, ExtInt(b));
        }
      });
    }
  }
  return s.take();
}

std::vector<GoldenAssertion> golden_axes_family() {
  Suite s("xy+powers");
  const auto ring = make_ring({"X", "Y"});
  const auto& R = *ring;
  const MonomialPrime m({0, 1});
  const std::pair<int, int> params[] = {{1, 2}, {2, 3}, {3, 5}};
  for (const auto& [d1, d2] : params) {
    const auto xy = MonomialIdeal(ring, {mono(ring, 1, 1)});
    const auto I = MonomialIdeal(ring, {mono(ring, d1, 0), mono(ring, 0, d2)});
    for (int n = 1; n <= 10; ++n) {
      std::ostringstream tag;
      tag << "d1=" << d1 << " d2=" << d2 << " n=" << n << ": ";
      const std::string t = tag.str();
      s.guard(t + "evaluation", [&] {
        const auto q = Subquotient::quotient_ring(sum(xy, power(I, static_cast<std::uint32_t>(n))));
        const auto a = ass(q);
        s.equal(t + "Ass", ass_string(R, a), ass_string(R, AssSet({m})));
        const auto v = v_number(q, a);
        // For d1·n = 1 the class of 1 is killed by I^n = (X, Y^{d2·n}) + (XY),
        // which is not prime when d2·n > 1; the least socle element is then
        // Y^{d2·n-1} instead of X^{d1·n-1}.
        const std::int64_t expected = d1 * n >= 2 ? std::int64_t{d1} * n - 1 : std::int64_t{d2} * n - 1;
        s.equal(t + "v", v.overall, ExtInt(expected));
        s.equal(t + "v_m", ExtInt(v.per_prime.at(m)), ExtInt(expected));
        s.equal(t + "end", end_artinian(q), ExtInt(static_cast<std::int64_t>(d2) * n - 1));
        const auto g = gamma_end_check(q);
        s.check(t + "v <= end(Gamma_m)", g.holds,
                "v_m=" + std::to_string(g.v_maximal) + " end=" + g.gamma_end.to_string());
      });
    }
  }
  return s.take();
}

std::vector<GoldenAssertion> golden_cubic_family(const GoldenOptions& options) {
  std::ostringstream name;
  name << "x^3,xy^4[window=" << options.window << ",n_max=" << 8 + options.extra_n << "]";
  Suite s(name.str());
  const auto ring = make_ring({"X", "Y", "Z"});
  const auto& R = *ring;
  const MonomialPrime m({0, 1, 2});
  const int n_max = 8 + options.extra_n;
  FamilySpec spec{MonomialIdeal::unit(ring), gens(ring, {"X^3", "X*Y^4"}), gens(ring, {"X", "Y^2", "Z^3"}),
                  std::nullopt, MonomialIdeal::unit(ring), FamilyKind::InModIn1N, n_max};

  const std::int64_t indeg_expected[] = {0, 1, 2, 4, 7, 10, 12, 14, 16};
  const std::int64_t v_expected[] = {3, 4, 5, 7, 10, 13, 15, 17, 19};
  auto indeg_at = [&](int n) { return n < 9 ? indeg_expected[n] : 2 * n; };
  auto v_at = [&](int n) { return n < 9 ? v_expected[n] : 2 * n + 3; };

  s.guard("evaluation", [&] {
    const auto g = evaluate_series(spec);
    const auto mq = evaluate_series(spec.with_kind(FamilyKind::MModIn1N));
    const auto mn = evaluate_series(spec.with_kind(FamilyKind::MModInN));
    s.equal("(0 :_M I) = 0", g.ann_I_zero, true);
    for (int n = 0; n <= n_max; ++n) {
      const auto t = "n=" + std::to_string(n) + ": ";
      s.equal(t + "indeg(I^nM/I^{n+1}M)", g.points[n].indeg, ExtInt(indeg_at(n)));
      s.equal(t + "v(I^nM/I^{n+1}M)", g.points[n].v.overall, ExtInt(v_at(n)));
      s.equal(t + "v(M/I^{n+1}M)", mq.points[n].v.overall, ExtInt(v_at(n)));
      s.equal(t + "colon stable", g.points[n].colon_stable, true);
      if (n >= 1) {
        s.equal(t + "Ass(I^nM/I^{n+1}M)", ass_string(R, g.points[n].ass), ass_string(R, AssSet({m})));
        s.equal(t + "Ass(M/I^nM)", ass_string(R, mn.points[n].ass), ass_string(R, AssSet({m})));
      }
    }

    // Least-degree socle elements of M/I^{n+1}M listed for n = 0..4.
    const char* socle[] = {"Y*Z^2", "X*Y*Z^2", "X^2*Y*Z^2", "X^2*Y^3*Z^2", "X^2*Y^3*Z^5"};
    PowerTower tower(spec);
    for (int n = 0; n <= 4; ++n) {
      const auto w = parse_monomial(R, socle[n]);
      const auto& den = tower.submodule_power(n + 1);
      const auto t = "n=" + std::to_string(n) + ": ";
      s.check(t + socle[n] + " is a socle witness",
              !den.contains(w) && colon_monomial(den, w) == m.to_ideal(ring) &&
                  weighted_degree(R, w) == v_at(n),
              "colon is not (X,Y,Z) or degree differs");
    }

    const auto in_law = fit_eventual_linear(g.indeg_values(), options.window);
    const auto v_law = fit_eventual_linear(g.v_values(), options.window);
    s.equal("indeg law stabilized", in_law.stabilized, true);
    s.equal("indeg slope", in_law.slope, std::int64_t{2});
    s.equal("indeg intercept", in_law.intercept, std::int64_t{0});
    s.equal("indeg start_n", in_law.start_n, 5);
    s.equal("v law stabilized", v_law.stabilized, true);
    s.equal("v slope", v_law.slope, std::int64_t{2});
    s.equal("v intercept", v_law.intercept, std::int64_t{3});
    s.equal("v start_n", v_law.start_n, 5);

    const auto probe = delta_probe(spec);
    s.equal("probe: X in radical", probe.verdicts.at(0).in_radical, true);
    s.check("probe: X exponent <= 3", probe.verdicts.at(0).exponent <= 3,
            "exponent " + std::to_string(probe.verdicts.at(0).exponent));
    s.equal("probe: Y^2 not found", probe.verdicts.at(1).in_radical, false);
    s.equal("probe: delta_degree", probe.delta_degree.value_or(-1), std::int64_t{2});
  });
  return s.take();
}

std::vector<GoldenAssertion> verify_golden() {
  auto out = golden_xyb_family();
  for (auto&& suite : {golden_axes_family(), golden_cubic_family(), golden_cubic_family({4, 4})}) {
    out.insert(out.end(), suite.begin(), suite.end());
  }
  return out;
}

}  // namespace vnumlab
