#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vnumlab/ideal.hpp"
#include "vnumlab/primes.hpp"
#include "vnumlab/subquotient.hpp"
#include "vnumlab/vnumber.hpp"

namespace vnumlab {

/// Which n-indexed module a family produces, for M = A0/B0 and N = aM:
///   InModInN   I^n M / I^n N
///   MModInN    M / I^n N
///   InModIn1N  I^n M / I^{n+1} N
///   MModIn1N   M / I^{n+1} N   (companion of InModIn1N)
enum class FamilyKind { InModInN, MModInN, InModIn1N, MModIn1N };

std::string_view kind_name(FamilyKind kind);
// Accepts "In_mod_InN", "M_mod_InN", "In_mod_In1N", "M_mod_In1N".
std::optional<FamilyKind> parse_kind(std::string_view text);

struct FamilySpec {
  MonomialIdeal m_num;  // A0
  MonomialIdeal m_den;  // B0
  MonomialIdeal I;
  std::optional<MonomialIdeal> J;  // reduction of I; defaults to I
  MonomialIdeal a;                 // N = aM; the unit ideal gives N = M
  FamilyKind kind = FamilyKind::InModIn1N;
  int n_max = 8;

  const MonomialIdeal& reduction() const { return J ? *J : I; }
  FamilySpec with_kind(FamilyKind k) const;
  // Throws Error("invalid-spec") on B0 ⊄ A0, I = 0, J ⊄ I, J = 0 or n_max < 4.
  void validate() const;
};

/// I^n A0 and I^n a A0 for increasing n, computed once and reused.
class PowerTower {
 public:
  explicit PowerTower(const FamilySpec& spec);
  const MonomialIdeal& module_power(int n);     // I^n A0 + B0  (I^n M)
  const MonomialIdeal& submodule_power(int n);  // I^n a A0 + B0  (I^n N)

 private:
  const FamilySpec& spec_;
  std::vector<MonomialIdeal> m_powers_;
  std::vector<MonomialIdeal> n_powers_;
};

Subquotient family_member(const FamilySpec& spec, int n);
Subquotient family_member(const FamilySpec& spec, int n, PowerTower& tower);

// Weighted degrees of the minimal generators, ascending. Throws
// Error("zero-ideal") for the zero ideal.
std::vector<std::int64_t> generator_degrees(const MonomialIdeal& j);

struct SeriesPoint {
  int n = 0;
  ExtInt indeg;
  VReport v;
  AssSet ass;
  bool colon_stable = false;  // (I^{n+1}N :_M I) = I^n M
};

struct InvariantSeries {
  FamilyKind kind = FamilyKind::InModIn1N;
  std::vector<SeriesPoint> points;  // n = 0, 1, ..., n_max
  bool ann_I_zero = false;          // (0 :_M I) = 0
  bool ann_y1_zero = false;         // (0 :_M y1) = 0, y1 least-degree generator of J

  int n_max() const { return static_cast<int>(points.size()) - 1; }
  std::vector<ExtInt> indeg_values() const;
  std::vector<ExtInt> v_values() const;
  // v_p(n), +inf where p is not associated.
  std::vector<ExtInt> v_prime_values(const MonomialPrime& p) const;
};

// (I^{n+1}N :_M I) = I^n M for the base module of `spec`.
bool colon_stable(const FamilySpec& spec, int n, PowerTower& tower);

InvariantSeries evaluate_series(const FamilySpec& spec);
// Reuses the points of `prefix` (a series of the same spec with a smaller
// n_max) and computes only the missing n.
InvariantSeries extend_series(const FamilySpec& spec, InvariantSeries prefix);

/// Exact eventual law v(n) = slope·n + intercept holding from start_n through
/// the last point.
struct LinearLaw {
  std::int64_t slope = 0;
  std::int64_t intercept = 0;
  int start_n = 0;
  bool stabilized = false;

  std::int64_t at(std::int64_t n) const { return slope * n + intercept; }
};

// values[k] belongs to n = first_n + k. Stabilized only when the exact line
// through the last two points also matches at least `window` trailing points.
LinearLaw fit_eventual_linear(std::span<const ExtInt> values, int window, int first_n = 0);

// Trailing `window` entries are all +inf.
bool eventually_infinite(std::span<const ExtInt> values, int window);

// Eventual law of n -> min_i (a_i n + b_i): least slope, then least intercept
// among the laws with that slope. Throws Error("empty-input") for no laws.
std::pair<std::int64_t, std::int64_t> min_linear_combine(
    std::span<const std::pair<std::int64_t, std::int64_t>> laws);

struct GeneratorVerdict {
  Monomial generator;
  std::int64_t degree = 0;
  bool in_radical = false;
  int exponent = 0;  // least s that works, or s_max when none was found
};

/// Which generators y_j of J have a power killing the Rees module
/// H = ⊕ I^nM/I^nN (kind InModInN) or G = ⊕ I^nM/I^{n+1}N (kind InModIn1N).
/// Both are generated in Rees degree 0, so y^s kills the module iff
/// y^s·A0 ⊆ I^s a A0 + B0 (resp. I^{s+1} a A0 + B0).
struct DeltaProbe {
  std::vector<GeneratorVerdict> verdicts;    // ascending degree
  std::optional<std::size_t> delta_index;    // 1-based; none if every y_j is in the radical
  std::optional<std::int64_t> delta_degree;  // d_delta
};

// Error("unsupported-kind") for the M/... kinds (probe their InModIn1N
// companion), Error("unsupported") when J differs from I.
DeltaProbe delta_probe(const FamilySpec& spec, int s_max = 8);

// Least n <= n_probe with J·I^n = I^{n+1}. Throws Error("not-a-subideal")
// unless J ⊆ I.
std::optional<int> reduction_check(const MonomialIdeal& j, const MonomialIdeal& i, int n_probe);

}  // namespace vnumlab
