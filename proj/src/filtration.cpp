#include "vnumlab/filtration.hpp"

#include <algorithm>
#include <future>
#include <thread>

#include "vnumlab/errors.hpp"

namespace vnumlab {

std::string_view kind_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::InModInN:
      return "In_mod_InN";
    case FamilyKind::MModInN:
      return "M_mod_InN";
    case FamilyKind::InModIn1N:
      return "In_mod_In1N";
    case FamilyKind::MModIn1N:
      return "M_mod_In1N";
  }
  return "?";
}

std::optional<FamilyKind> parse_kind(std::string_view text) {
  for (auto k : {FamilyKind::InModInN, FamilyKind::MModInN, FamilyKind::InModIn1N,
                 FamilyKind::MModIn1N}) {
    if (kind_name(k) == text) return k;
  }
  return std::nullopt;
}

FamilySpec FamilySpec::with_kind(FamilyKind k) const {
  FamilySpec copy = *this;
  copy.kind = k;
  return copy;
}

void FamilySpec::validate() const {
  check_same_ring(m_num, m_den);
  check_same_ring(m_num, I);
  check_same_ring(m_num, a);
  if (!m_num.contains(m_den)) throw Error("invalid-spec", "B0 is not contained in A0");
  if (I.is_zero()) throw Error("invalid-spec", "I is the zero ideal");
  if (J) {
    check_same_ring(m_num, *J);
    if (J->is_zero()) throw Error("invalid-spec", "J is the zero ideal");
    if (!I.contains(*J)) throw Error("invalid-spec", "J is not contained in I");
  }
  if (n_max < 4) throw Error("invalid-spec", "n_max must be at least 4");
}

PowerTower::PowerTower(const FamilySpec& spec) : spec_(spec) {
  m_powers_.push_back(sum(spec.m_num, spec.m_den));
  n_powers_.push_back(sum(product(spec.a, spec.m_num), spec.m_den));
}

const MonomialIdeal& PowerTower::module_power(int n) {
  if (n < 0) throw Error("invalid-argument", "negative power");
  while (static_cast<int>(m_powers_.size()) <= n) {
    m_powers_.push_back(sum(product(spec_.I, m_powers_.back()), spec_.m_den));
  }
  return m_powers_[static_cast<std::size_t>(n)];
}

const MonomialIdeal& PowerTower::submodule_power(int n) {
  if (n < 0) throw Error("invalid-argument", "negative power");
  while (static_cast<int>(n_powers_.size()) <= n) {
    n_powers_.push_back(sum(product(spec_.I, n_powers_.back()), spec_.m_den));
  }
  return n_powers_[static_cast<std::size_t>(n)];
}

Subquotient family_member(const FamilySpec& spec, int n, PowerTower& tower) {
  switch (spec.kind) {
    case FamilyKind::InModInN:
      return Subquotient(tower.module_power(n), tower.submodule_power(n));
    case FamilyKind::MModInN:
      return Subquotient(spec.m_num, tower.submodule_power(n));
    case FamilyKind::InModIn1N:
      return Subquotient(tower.module_power(n), tower.submodule_power(n + 1));
    case FamilyKind::MModIn1N:
      return Subquotient(spec.m_num, tower.submodule_power(n + 1));
  }
  throw Error("unsupported-kind", "unknown family kind");
}

Subquotient family_member(const FamilySpec& spec, int n) {
  PowerTower tower(spec);
  return family_member(spec, n, tower);
}

std::vector<std::int64_t> generator_degrees(const MonomialIdeal& j) {
  if (j.is_zero()) throw Error("zero-ideal", "the zero ideal has no generators");
  std::vector<std::int64_t> out;
  for (const auto& g : j.generators()) out.push_back(weighted_degree(j.ring(), g));
  // Generators are already in canonical (degree-first) order.
  return out;
}

std::vector<ExtInt> InvariantSeries::indeg_values() const {
  std::vector<ExtInt> out;
  for (const auto& p : points) out.push_back(p.indeg);
  return out;
}

std::vector<ExtInt> InvariantSeries::v_values() const {
  std::vector<ExtInt> out;
  for (const auto& p : points) out.push_back(p.v.overall);
  return out;
}

std::vector<ExtInt> InvariantSeries::v_prime_values(const MonomialPrime& prime) const {
  std::vector<ExtInt> out;
  for (const auto& p : points) {
    auto it = p.v.per_prime.find(prime);
    out.push_back(it == p.v.per_prime.end() ? ExtInt::infinity() : ExtInt(it->second));
  }
  return out;
}

bool colon_stable(const FamilySpec& spec, int n, PowerTower& tower) {
  const auto lhs = intersect(colon_ideal(tower.submodule_power(n + 1), spec.I), spec.m_num);
  return lhs == tower.module_power(n);
}

namespace {

bool annihilator_is_zero(const FamilySpec& spec, const MonomialIdeal& ideal) {
  return is_zero(ann_submodule(Subquotient(spec.m_num, spec.m_den), ideal));
}

SeriesPoint evaluate_point(const Subquotient& member, int n, bool stable) {
  SeriesPoint point;
  point.n = n;
  point.indeg = indeg(member);
  point.ass = ass(member);
  point.v = v_number(member, point.ass);
  point.colon_stable = stable;
  return point;
}

}  // namespace

InvariantSeries extend_series(const FamilySpec& spec, InvariantSeries prefix) {
  spec.validate();
  InvariantSeries series = std::move(prefix);
  series.kind = spec.kind;
  if (series.n_max() > spec.n_max) series.points.resize(static_cast<std::size_t>(spec.n_max) + 1);

  const auto& y1 = spec.reduction().generators().front();
  series.ann_I_zero = annihilator_is_zero(spec, spec.I);
  series.ann_y1_zero = annihilator_is_zero(spec, MonomialIdeal(spec.I.ring_ptr(), {y1}));

  // Powers are built sequentially; the per-n invariants are independent and
  // are evaluated concurrently, then stored in n order.
  PowerTower tower(spec);
  const int first = series.n_max() + 1;
  std::vector<std::pair<Subquotient, bool>> work;
  for (int n = first; n <= spec.n_max; ++n) {
    work.emplace_back(family_member(spec, n, tower), colon_stable(spec, n, tower));
  }
  const std::size_t batch = std::max(1u, std::thread::hardware_concurrency());
  for (std::size_t begin = 0; begin < work.size(); begin += batch) {
    std::vector<std::future<SeriesPoint>> pending;
    for (std::size_t k = begin; k < std::min(work.size(), begin + batch); ++k) {
      const int n = first + static_cast<int>(k);
      pending.push_back(std::async(std::launch::async, [&item = work[k], n] {
        return evaluate_point(item.first, n, item.second);
      }));
    }
    for (auto& f : pending) series.points.push_back(f.get());
  }
  return series;
}

InvariantSeries evaluate_series(const FamilySpec& spec) { return extend_series(spec, {}); }

LinearLaw fit_eventual_linear(std::span<const ExtInt> values, int window, int first_n) {
  LinearLaw law;
  const auto len = static_cast<int>(values.size());
  if (len < 2 || !values[len - 1].is_finite() || !values[len - 2].is_finite()) {
    law.start_n = first_n + std::max(len - 1, 0);
    return law;
  }
  const auto last_n = static_cast<std::int64_t>(first_n + len - 1);
  law.slope = values[len - 1].value() - values[len - 2].value();
  law.intercept = values[len - 1].value() - law.slope * last_n;
  int start = len - 2;
  while (start > 0) {
    const auto& prev = values[start - 1];
    if (!prev.is_finite() || prev.value() != law.at(first_n + start - 1)) break;
    --start;
  }
  law.start_n = first_n + start;
  law.stabilized = (len - start) >= std::max(window, 2);
  return law;
}

bool eventually_infinite(std::span<const ExtInt> values, int window) {
  if (window < 1 || static_cast<int>(values.size()) < window) return false;
  return std::all_of(values.end() - window, values.end(),
                     [](const ExtInt& v) { return v.is_pos_inf(); });
}

std::pair<std::int64_t, std::int64_t> min_linear_combine(
    std::span<const std::pair<std::int64_t, std::int64_t>> laws) {
  if (laws.empty()) throw Error("empty-input", "no linear laws to combine");
  auto best = laws.front();
  for (const auto& law : laws) {
    if (law.first < best.first || (law.first == best.first && law.second < best.second)) {
      best = law;
    }
  }
  return best;
}

DeltaProbe delta_probe(const FamilySpec& spec, int s_max) {
  spec.validate();
  int extra = 0;
  switch (spec.kind) {
    case FamilyKind::InModInN:
      extra = 0;
      break;
    case FamilyKind::InModIn1N:
      extra = 1;
      break;
    case FamilyKind::MModInN:
    case FamilyKind::MModIn1N:
      throw Error("unsupported-kind",
                  "probe the In_mod_In1N companion of " + std::string(kind_name(spec.kind)));
  }
  if (spec.J && !(*spec.J == spec.I)) {
    throw Error("unsupported", "the radical probe is only defined for J = I");
  }
  if (s_max < 1) throw Error("invalid-argument", "s_max must be at least 1");

  PowerTower tower(spec);
  DeltaProbe probe;
  const auto& ring = spec.I.ring();
  for (const auto& y : spec.I.generators()) {
    GeneratorVerdict verdict{y, weighted_degree(ring, y), false, s_max};
    for (int s = 1; s <= s_max; ++s) {
      const MonomialIdeal ys(spec.I.ring_ptr(), {pow(y, static_cast<std::uint64_t>(s))});
      if (tower.submodule_power(s + extra).contains(product(ys, spec.m_num))) {
        verdict.in_radical = true;
        verdict.exponent = s;
        break;
      }
    }
    probe.verdicts.push_back(std::move(verdict));
  }
  for (std::size_t j = 0; j < probe.verdicts.size(); ++j) {
    if (!probe.verdicts[j].in_radical) {
      probe.delta_index = j + 1;
      probe.delta_degree = probe.verdicts[j].degree;
      break;
    }
  }
  return probe;
}

std::optional<int> reduction_check(const MonomialIdeal& j, const MonomialIdeal& i, int n_probe) {
  check_same_ring(j, i);
  if (!i.contains(j)) throw Error("not-a-subideal", "J is not contained in I");
  MonomialIdeal i_power = MonomialIdeal::unit(i.ring_ptr());
  for (int n = 0; n <= n_probe; ++n) {
    MonomialIdeal next = product(i_power, i);
    if (product(j, i_power) == next) return n;
    i_power = std::move(next);
  }
  return std::nullopt;
}

}  // namespace vnumlab
