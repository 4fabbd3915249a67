#include "vnumlab/compliance.hpp"

#include <algorithm>
#include <sstream>

#include "vnumlab/errors.hpp"

namespace vnumlab {

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "PASS";
    case Verdict::fail:
      return "FAIL";
    case Verdict::inapplicable:
      return "INAPPLICABLE";
  }
  return "?";
}

bool ComplianceReport::ok() const {
  return std::none_of(items.begin(), items.end(),
                      [](const ComplianceItem& i) { return i.verdict == Verdict::fail; });
}

const FamilyAnalysis& ComplianceReport::family(FamilyKind kind) const {
  for (const auto& f : families) {
    if (f.kind == kind) return f;
  }
  throw Error("internal", "family not analysed");
}

const ComplianceItem& ComplianceReport::item(char id) const {
  for (const auto& i : items) {
    if (i.id == id) return i;
  }
  throw Error("internal", std::string("no compliance item ") + id);
}

namespace {

constexpr FamilyKind kInModInN = FamilyKind::InModInN;
constexpr FamilyKind kMModInN = FamilyKind::MModInN;
constexpr FamilyKind kInModIn1N = FamilyKind::InModIn1N;
constexpr FamilyKind kMModIn1N = FamilyKind::MModIn1N;

bool is_module_kind(FamilyKind k) { return k == kInModInN || k == kInModIn1N; }

// The quotient family M/I^nN paired with I^nM/I^nN, and M/I^{n+1}N with
// I^nM/I^{n+1}N.
FamilyKind companion(FamilyKind k) { return k == kInModInN ? kMModInN : kMModIn1N; }

std::string label(FamilyKind k) {
  switch (k) {
    case FamilyKind::InModInN:
      return "I^nM/I^nN";
    case FamilyKind::MModInN:
      return "M/I^nN";
    case FamilyKind::InModIn1N:
      return "I^nM/I^{n+1}N";
    case FamilyKind::MModIn1N:
      return "M/I^{n+1}N";
  }
  return "?";
}

void require_stable(const LinearLaw& law, FamilyKind kind, const std::string& what) {
  if (!law.stabilized) {
    throw Error("not-stabilized",
                what + " of " + label(kind) + " has no exact linear tail; increase n_max");
  }
}

int ass_tail_start(const InvariantSeries& s) {
  int start = s.n_max();
  while (start > 0 && s.points[start - 1].ass == s.points.back().ass) --start;
  return start;
}

FamilyAnalysis analyse(const FamilySpec& spec, const ComplianceOptions& options) {
  FamilyAnalysis a;
  a.kind = spec.kind;
  a.series = evaluate_series(spec);
  const auto v = a.series.v_values();
  const auto in = a.series.indeg_values();
  a.eventually_zero = eventually_infinite(v, options.window);
  a.ass_tail_start = ass_tail_start(a.series);
  if (!a.eventually_zero) {
    a.v_law = fit_eventual_linear(v, options.window);
    a.indeg_law = fit_eventual_linear(in, options.window);
    require_stable(a.v_law, spec.kind, "v");
    if (is_module_kind(spec.kind)) require_stable(a.indeg_law, spec.kind, "indeg");
  }
  if (is_module_kind(spec.kind) && (!spec.J || *spec.J == spec.I)) {
    a.probe = delta_probe(spec, options.s_max);
  }
  return a;
}

class Outcome {
 public:
  void applicable() { applicable_ = true; }
  void fail(const std::string& why) {
    applicable_ = true;
    failures_.push_back(why);
  }
  void note(const std::string& what) { notes_.push_back(what); }

  ComplianceItem finish(char id, std::string title) const {
    ComplianceItem item{id, std::move(title), Verdict::inapplicable, {}};
    const auto& lines = failures_.empty() ? notes_ : failures_;
    for (const auto& l : lines) {
      if (!item.detail.empty()) item.detail += "; ";
      item.detail += l;
    }
    if (!failures_.empty()) {
      item.verdict = Verdict::fail;
    } else if (applicable_) {
      item.verdict = Verdict::pass;
    }
    return item;
  }

 private:
  bool applicable_ = false;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

std::string str(std::int64_t v) { return std::to_string(v); }

bool contains_degree(const std::vector<std::int64_t>& degrees, std::int64_t d, std::size_t from) {
  return std::find(degrees.begin() + static_cast<std::ptrdiff_t>(std::min(from, degrees.size())),
                   degrees.end(), d) != degrees.end();
}

// Least n0 <= n_max with I^{n0}M ⊆ N.
std::optional<int> power_inside_submodule(const FamilySpec& spec) {
  PowerTower tower(spec);
  for (int n = 0; n <= spec.n_max; ++n) {
    if (tower.submodule_power(0).contains(tower.module_power(n))) return n;
  }
  return std::nullopt;
}

}  // namespace

ComplianceReport check_theorems(const FamilySpec& base, const ComplianceOptions& options) {
  base.validate();
  if (options.window < 2) throw Error("invalid-argument", "window must be at least 2");
  ComplianceReport report;
  for (auto k : {kInModInN, kMModInN, kInModIn1N, kMModIn1N}) {
    report.families.push_back(analyse(base.with_kind(k), options));
  }
  report.power_inside_submodule = power_inside_submodule(base);

  const auto degrees = generator_degrees(base.reduction());
  const auto& first = report.families.front().series;
  const bool ann_i_zero = first.ann_I_zero;
  const bool ann_y1_zero = first.ann_y1_zero;
  const int n_max = base.n_max;
  const int tail_from = std::max(0, n_max - options.window + 1);
  const auto& ring = base.I.ring();

  // (a)
  {
    Outcome out;
    for (auto k : {kInModInN, kInModIn1N}) {
      const auto& f = report.family(k);
      if (f.eventually_zero) {
        out.note(label(k) + " is eventually zero");
        if (f.probe && f.probe->delta_index) {
          int zero_from = n_max;
          while (zero_from > 0 && f.series.points[zero_from - 1].v.overall.is_pos_inf()) --zero_from;
          if (zero_from <= options.window + n_max && zero_from >= 1 &&
              zero_from <= static_cast<int>(f.probe->verdicts.front().exponent)) {
            out.fail(label(k) + " vanishes from n = " + str(zero_from) +
                     " but the probe finds a generator outside the radical");
          }
        }
        continue;
      }
      out.applicable();
      const auto s_in = f.indeg_law.slope;
      const auto s_v = f.v_law.slope;
      if (s_in != s_v) {
        out.fail(label(k) + ": indeg slope " + str(s_in) + " != v slope " + str(s_v));
      }
      if (!contains_degree(degrees, s_v, 0)) {
        out.fail(label(k) + ": slope " + str(s_v) + " is not a generator degree");
      }
      if (f.probe) {
        if (!f.probe->delta_degree) {
          out.fail(label(k) + ": nonzero family but every generator is in the radical");
        } else if (*f.probe->delta_degree != s_v) {
          out.fail(label(k) + ": probed d_delta " + str(*f.probe->delta_degree) +
                   " != fitted slope " + str(s_v));
        } else {
          out.note(label(k) + ": slope " + str(s_v) + " = d_delta");
        }
      } else {
        out.note(label(k) + ": slope " + str(s_v) + " (probe unavailable for J != I)");
      }
    }
    report.items.push_back(out.finish('a', "indeg and v share the leading coefficient d_delta"));
  }

  // (b)
  {
    Outcome out;
    auto check_primes = [&](const FamilyAnalysis& f, std::size_t min_index, bool only_containing_i) {
      const int start = f.ass_tail_start;
      if (n_max - start + 1 < options.window) {
        throw Error("not-stabilized", "Ass of " + label(f.kind) + " is not constant on a tail of " +
                                          str(options.window) + " points; increase n_max");
      }
      for (const auto& p : f.series.points.back().ass) {
        if (only_containing_i && !p.contains(base.I)) continue;
        const auto values = f.series.v_prime_values(p);
        std::span<const ExtInt> tail(values.begin() + start, values.end());
        const auto law = fit_eventual_linear(tail, options.window, start);
        require_stable(law, f.kind, "v_(" + p.key(ring) + ")");
        out.applicable();
        if (!contains_degree(degrees, law.slope, min_index)) {
          out.fail(label(f.kind) + ": v_(" + p.key(ring) + ") slope " + str(law.slope) +
                   " outside the admissible generator degrees");
        } else {
          out.note(label(f.kind) + ": v_(" + p.key(ring) + ") = " + str(law.slope) + "n + " +
                   str(law.intercept));
        }
      }
    };
    for (auto k : {kInModInN, kInModIn1N}) {
      const auto& f = report.family(k);
      if (f.eventually_zero) continue;
      std::size_t min_index = 0;
      if (f.probe && f.probe->delta_index) min_index = *f.probe->delta_index - 1;
      check_primes(f, min_index, false);
    }
    if (ann_i_zero) {
      for (auto k : {kMModInN, kMModIn1N}) {
        const auto& f = report.family(k);
        if (!f.eventually_zero) check_primes(f, 0, true);
      }
    }
    report.items.push_back(out.finish('b', "per-prime slopes lie in {d_delta, ..., d_c}"));
  }

  // (c)
  {
    Outcome out;
    for (auto k : {kInModInN, kInModIn1N}) {
      const auto& sub = report.family(k);
      const auto& quot = report.family(companion(k));
      for (int n = 0; n <= n_max; ++n) {
        const auto& vs = sub.series.points[n].v.overall;
        const auto& vq = quot.series.points[n].v.overall;
        if (vq > vs) {
          out.fail("v(" + label(quot.kind) + ") = " + vq.to_string() + " > v(" + label(k) +
                   ") = " + vs.to_string() + " at n = " + str(n));
        }
      }
      if (sub.eventually_zero) continue;
      out.applicable();
      const auto& law = sub.v_law;
      std::int64_t e = law.intercept;
      for (int n = 1; n <= n_max; ++n) {
        const auto& vq = quot.series.points[n].v.overall;
        if (!vq.is_finite()) continue;
        if (n < law.start_n) {
          e = std::max(e, vq.value() - law.slope * n);
        } else if (vq.value() > law.at(n)) {
          out.fail("v(" + label(quot.kind) + ") exceeds " + str(law.slope) + "n + " +
                   str(law.intercept) + " at n = " + str(n));
        }
      }
      if (!quot.eventually_zero && quot.v_law.slope > law.slope) {
        out.fail(label(quot.kind) + " slope " + str(quot.v_law.slope) + " > " + str(law.slope));
      }
      out.note("v(" + label(quot.kind) + ") <= " + str(law.slope) + "n + " + str(e));
    }
    report.items.push_back(out.finish('c', "linear upper bound for v(M/I^nN)"));
  }

  // (d)
  {
    Outcome out;
    if (!ann_i_zero) {
      out.note("(0 :_M I) != 0");
    } else {
      out.applicable();
      const auto spec = base.with_kind(kMModIn1N);
      PowerTower tower(spec);
      const auto& quot = report.family(kMModIn1N);
      for (int n = tail_from; n <= n_max; ++n) {
        const auto& den = tower.submodule_power(n + 1);
        std::vector<std::pair<std::string, MonomialIdeal>> us{{"I", base.I}};
        for (const auto& p : quot.series.points[n].ass) {
          if (p.contains(base.I)) us.emplace_back("(" + p.key(ring) + ")", p.to_ideal(base.I.ring_ptr()));
        }
        for (const auto& [name, u] : us) {
          const auto c = colon_ideal(den, u);
          if (!(intersect(c, base.m_num) == intersect(c, tower.module_power(n)))) {
            out.fail("annihilators of " + name + " differ at n = " + str(n));
          }
        }
        if (base.a.is_unit() && !quot.series.points[n].colon_stable) {
          out.fail("(I^{n+1}M :_M I) != I^nM at n = " + str(n));
        }
      }
      out.note("checked n = " + str(tail_from) + ".." + str(n_max));
    }
    report.items.push_back(out.finish('d', "colon comparison on the tail"));
  }

  // (e)
  {
    Outcome out;
    const auto& sub = report.family(kInModIn1N);
    const auto& quot = report.family(kMModIn1N);
    if (!ann_i_zero) {
      out.note("(0 :_M I) != 0");
    } else {
      if (sub.series.points.back().ass == quot.series.points.back().ass &&
          !quot.series.points.back().ass.empty()) {
        out.applicable();
        for (int n = tail_from; n <= n_max; ++n) {
          const auto& ps = sub.series.points[n];
          const auto& pq = quot.series.points[n];
          bool all_contain_i = true;
          for (const auto& p : pq.ass) {
            if (!p.contains(base.I)) {
              all_contain_i = false;
              continue;
            }
            auto a = ps.v.per_prime.find(p);
            auto b = pq.v.per_prime.find(p);
            if (a == ps.v.per_prime.end() || b == pq.v.per_prime.end() || a->second != b->second) {
              out.fail("v_(" + p.key(ring) + ") differs at n = " + str(n));
            }
          }
          if (all_contain_i && ps.v.overall != pq.v.overall) {
            out.fail("v differs at n = " + str(n) + ": " + ps.v.overall.to_string() + " vs " +
                     pq.v.overall.to_string());
          }
        }
      } else {
        out.note("Ass tails differ");
      }
      if (report.power_inside_submodule && !sub.eventually_zero) {
        out.applicable();
        if (quot.eventually_zero || quot.v_law.slope != sub.v_law.slope) {
          out.fail("slope of v(" + label(kMModIn1N) + ") differs from d_gamma = " +
                   str(sub.v_law.slope));
        } else {
          out.note("common slope " + str(sub.v_law.slope));
        }
      }
    }
    report.items.push_back(out.finish('e', "v(I^nM/I^{n+1}N) = v(M/I^{n+1}N) asymptotically"));
  }

  // (f)
  {
    Outcome out;
    const auto& sub = report.family(kInModIn1N);
    const auto& quot = report.family(kMModIn1N);
    int checked = 0;
    for (int n = 0; n <= n_max; ++n) {
      const auto& ps = sub.series.points[n];
      const auto& pq = quot.series.points[n];
      if (!ps.colon_stable || ps.ass != pq.ass || ps.ass.empty()) continue;
      ++checked;
      out.applicable();
      bool all_contain_i = true;
      for (const auto& p : ps.ass) {
        if (!p.contains(base.I)) {
          all_contain_i = false;
          continue;
        }
        if (ps.v.per_prime.at(p) != pq.v.per_prime.at(p)) {
          out.fail("v_(" + p.key(ring) + ") differs at colon-stable n = " + str(n));
        }
      }
      if (all_contain_i && ps.v.overall != pq.v.overall) {
        out.fail("v differs at colon-stable n = " + str(n));
      }
    }
    out.note(str(checked) + " colon-stable n checked");
    report.items.push_back(out.finish('f', "colon stability forces equal v-numbers"));
  }

  // (g)
  {
    Outcome out;
    const auto& sub = report.family(kInModIn1N);
    const auto& quot = report.family(kMModIn1N);
    if (!ann_i_zero || !ann_y1_zero || degrees.front() < 1 || !report.power_inside_submodule) {
      out.note("hypotheses do not hold");
    } else if (sub.eventually_zero) {
      out.note(label(kInModIn1N) + " is eventually zero");
    } else {
      out.applicable();
      const auto d1 = degrees.front();
      if (sub.indeg_law.slope != d1) out.fail("indeg slope " + str(sub.indeg_law.slope) + " != d1");
      if (sub.v_law.slope != d1) out.fail("v slope " + str(sub.v_law.slope) + " != d1");
      if (quot.eventually_zero || quot.v_law.slope != d1) {
        out.fail("v(" + label(kMModIn1N) + ") slope != d1");
      }
      out.note("slope d1 = " + str(d1));
    }
    report.items.push_back(out.finish('g', "leading coefficient d1 when (0 :_M y1) = 0"));
  }

  // (h)
  {
    Outcome out;
    out.applicable();
    for (auto k : {kInModInN, kInModIn1N}) {
      const auto& sub = report.family(k);
      const auto& quot = report.family(companion(k));
      for (int n = 0; n <= n_max; ++n) {
        if (!sub.series.points[n].ass.subset_of(quot.series.points[n].ass)) {
          out.fail("Ass(" + label(k) + ") not inside Ass(" + label(quot.kind) + ") at n = " + str(n));
        }
      }
    }
    report.items.push_back(out.finish('h', "Ass of the submodule family lies in Ass of the quotient"));
  }

  return report;
}

}  // namespace vnumlab
