#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vnumlab/filtration.hpp"

namespace vnumlab {

enum class Verdict { pass, fail, inapplicable };

std::string_view verdict_name(Verdict v);

struct ComplianceItem {
  char id = '?';  // 'a' .. 'h'
  std::string title;
  Verdict verdict = Verdict::inapplicable;
  std::string detail;
};

struct ComplianceOptions {
  int window = 3;
  int s_max = 8;
};

/// One family of the base module with its fitted laws.
struct FamilyAnalysis {
  FamilyKind kind = FamilyKind::InModIn1N;
  InvariantSeries series;
  bool eventually_zero = false;
  LinearLaw indeg_law;
  LinearLaw v_law;
  int ass_tail_start = 0;               // Ass(member(n)) constant for n >= this
  std::optional<DeltaProbe> probe;      // In... kinds with J = I only
};

struct ComplianceReport {
  std::vector<FamilyAnalysis> families;  // InModInN, MModInN, InModIn1N, MModIn1N
  std::vector<ComplianceItem> items;     // a .. h
  std::optional<int> power_inside_submodule;  // least n0 <= n_max with I^{n0}M ⊆ N

  bool ok() const;  // no item failed
  const FamilyAnalysis& family(FamilyKind kind) const;
  const ComplianceItem& item(char id) const;
};

/// Evaluates the four families built from spec's (A0, B0, I, J, a) up to
/// spec.n_max (spec.kind is ignored) and checks, each as PASS / FAIL /
/// INAPPLICABLE:
///  (a) indeg and v of I^nM/I^nN and I^nM/I^{n+1}N share their slope, which
///      is the probed d_delta;
///  (b) per-prime v_p laws on the stable Ass tail have slopes in
///      {d_delta, ..., d_c};
///  (c) v(M/I^nN) <= d_delta·n + e (and the same with N replaced by IN);
///  (d) if (0 :_M I) = 0, ann_{M/I^{n+1}N}(u) = ann_{I^nM/I^{n+1}N}(u) on the
///      tail for u = I and each tail prime containing I;
///  (e) if (0 :_M I) = 0: v(I^nM/I^{n+1}N) = v(M/I^{n+1}N) on the tail when the
///      Ass tails agree, and equal slopes when I^{n0}M ⊆ N;
///  (f) at each n with (I^{n+1}N :_M I) = I^nM and equal Ass, equal v_p for
///      every prime containing I;
///  (g) if (0 :_M I) = 0, (0 :_M y1) = 0, d1 >= 1 and I^{n0}M ⊆ N, the common
///      slope is d1;
///  (h) Ass(I^nM/I^nN) ⊆ Ass(M/I^nN) and Ass(I^nM/I^{n+1}N) ⊆ Ass(M/I^{n+1}N).
/// Throws Error("not-stabilized") when a nonzero family has no exact linear
/// tail of `window` points; raise n_max.
ComplianceReport check_theorems(const FamilySpec& spec, const ComplianceOptions& options = {});

}  // namespace vnumlab
