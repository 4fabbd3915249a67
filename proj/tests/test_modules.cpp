#include <gtest/gtest.h>

#include "support.hpp"
#include "vnumlab/errors.hpp"
#include "vnumlab/primes.hpp"
#include "vnumlab/subquotient.hpp"
#include "vnumlab/vnumber.hpp"

namespace vnumlab {
namespace {

MonomialIdeal ideal(const RingPtr& r, std::vector<std::string> gens) { return parse_ideal(r, gens); }

struct Instance {
  RingPtr ring;
  Subquotient q;
};

Instance random_instance(testing::Rng& rng) {
  const auto r = testing::random_ring(rng, 3, true);
  const auto a = testing::uniform(rng, 0, 4) == 0 ? MonomialIdeal::unit(r) : testing::random_ideal(rng, r, 4, 4);
  auto b = testing::random_subideal(rng, a, 4, 4);
  if (b == a) b = MonomialIdeal::zero(r);
  return {r, Subquotient(a, b)};
}

// Brute-force indeg: least weighted degree of a monomial of A∖B.
ExtInt brute_indeg(const Subquotient& q, std::int64_t bound) {
  for (std::int64_t d = 0; d <= bound; ++d) {
    for (const auto& m : monomials_of_degree(q.ring(), d)) {
      if (testing::brute_member(m, q.numerator().generators()) &&
          !testing::brute_member(m, q.denominator().generators())) {
        return ExtInt(d + q.shift());
      }
    }
  }
  return ExtInt::infinity();
}

TEST(Subquotient, ConstructionAndConventions) {
  const auto r = make_ring({"X", "Y"});
  EXPECT_THROW(Subquotient(ideal(r, {"X"}), ideal(r, {"Y"})), Error);
  const Subquotient zero(ideal(r, {"X"}), ideal(r, {"X"}));
  EXPECT_TRUE(is_zero(zero));
  EXPECT_EQ(indeg(zero), ExtInt::infinity());
  EXPECT_EQ(end_artinian(zero), ExtInt::neg_infinity());
  EXPECT_TRUE(ass(zero).empty());
  EXPECT_EQ(v_number(zero).overall, ExtInt::infinity());
}

TEST(Subquotient, IndegTwistAndComponents) {
  const auto r = make_ring({"X", "Y"}, {1, 2});
  const Subquotient q(ideal(r, {"X^2", "Y"}), ideal(r, {"X^3", "X*Y"}), 1);
  EXPECT_EQ(indeg(q), ExtInt(3));
  EXPECT_EQ(indeg(twist(q, 4)), ExtInt(7));
  // Degree-3 component: X^2 (weight 2) shifted by 1, and Y (weight 2) shifted.
  const auto comp = monomials_in_degree(q, 3);
  EXPECT_EQ(comp.size(), 2u);
}

TEST(Subquotient, IndegMatchesBruteForce) {
  testing::Rng rng(7);
  for (int t = 0; t < 150; ++t) {
    const auto inst = random_instance(rng);
    EXPECT_EQ(indeg(inst.q), brute_indeg(inst.q, 40));
  }
}

TEST(Subquotient, AnnihilatorAndTorsion) {
  const auto r = make_ring({"X", "Y"});
  const auto q = Subquotient::quotient_ring(ideal(r, {"X^3", "X*Y^4"}));
  // (0 :_M X) is generated by X^2 and Y^4.
  const auto ann = ann_submodule(q, ideal(r, {"X"}));
  EXPECT_EQ(ann.numerator(), ideal(r, {"X^2", "Y^4"}));
  // Γ_(X)(M) is all elements killed by a power of X: everything of (B : X^inf) = R.
  EXPECT_TRUE(gamma_submodule(q, ideal(r, {"X"})).numerator().is_unit());
  EXPECT_EQ(gamma_submodule(q, ideal(r, {"Y"})).numerator(), ideal(r, {"X"}));
}

TEST(Subquotient, ArtinianEndMatchesEnumeration) {
  testing::Rng rng(11);
  int artinian = 0;
  for (int t = 0; t < 150; ++t) {
    const auto inst = random_instance(rng);
    // Add pure powers so that about half the instances have finite length.
    auto b = inst.q.denominator();
    if (testing::uniform(rng, 0, 1) == 1) {
      std::vector<Monomial> pure;
      for (std::size_t i = 0; i < inst.ring->size(); ++i) {
        pure.push_back(Monomial::variable(inst.ring->size(), i, static_cast<Exponent>(testing::uniform(rng, 1, 5))));
      }
      b = sum(b, intersect(inst.q.numerator(), MonomialIdeal(inst.ring, pure)));
    }
    const Subquotient q(inst.q.numerator(), b);
    bool brute_artinian = true;
    ExtInt brute_end = ExtInt::neg_infinity();
    // Every generator has degree <= 24, so a finite-length module ends below 60.
    for (std::int64_t d = 0; d <= 80; ++d) {
      for (const auto& m : monomials_of_degree(q.ring(), d)) {
        if (testing::brute_member(m, q.numerator().generators()) &&
            !testing::brute_member(m, q.denominator().generators())) {
          brute_end = ExtInt(d);
          if (d > 60) brute_artinian = false;
        }
      }
    }
    ASSERT_EQ(is_artinian(q), brute_artinian);
    if (brute_artinian) {
      ++artinian;
      EXPECT_EQ(end_artinian(q), brute_end);
    } else {
      EXPECT_THROW(end_artinian(q), Error);
    }
  }
  EXPECT_GT(artinian, 30);
}

TEST(Primes, AsPrimeAndKeys) {
  const auto r = make_ring({"X", "Y", "Z"});
  EXPECT_EQ(as_prime(ideal(r, {"X", "Z"})), MonomialPrime({0, 2}));
  EXPECT_FALSE(as_prime(ideal(r, {"X^2"})));
  EXPECT_FALSE(as_prime(ideal(r, {"X*Y"})));
  EXPECT_EQ(as_prime(MonomialIdeal::zero(r)), MonomialPrime({}));
  EXPECT_EQ(MonomialPrime({0, 2}).key(*r), "X,Z");
  EXPECT_EQ(MonomialPrime({}).key(*r), "");
  EXPECT_EQ(MonomialPrime::maximal(*r), MonomialPrime({0, 1, 2}));
}

TEST(Primes, KnownAssociatedPrimes) {
  const auto r = make_ring({"X", "Y"});
  // R/(X^2, XY): embedded prime.
  const auto q = Subquotient::quotient_ring(ideal(r, {"X^2", "X*Y"}));
  EXPECT_EQ(ass(q), AssSet({MonomialPrime({0}), MonomialPrime({0, 1})}));
  // The ideal (X) as a module over R has Ass = {(0)}.
  EXPECT_EQ(ass(Subquotient(ideal(r, {"X"}), MonomialIdeal::zero(r))), AssSet({MonomialPrime({})}));
  const auto v = v_number(Subquotient(ideal(r, {"X", "Y^3"}), MonomialIdeal::zero(r)));
  EXPECT_EQ(v.overall, ExtInt(1));
}

TEST(Primes, AssMatchesOracle) {
  testing::Rng rng(23);
  for (int t = 0; t < 150; ++t) {
    const auto inst = random_instance(rng);
    const auto bound = default_oracle_bound(inst.q);
    EXPECT_EQ(ass(inst.q), ass_oracle(inst.q, bound));
    EXPECT_EQ(ass(inst.q), ass_oracle(inst.q, 2 * bound));
  }
}

TEST(VNumber, WitnessHasPrimeAnnihilator) {
  testing::Rng rng(31);
  for (int t = 0; t < 150; ++t) {
    const auto inst = random_instance(rng);
    const auto a = ass(inst.q);
    const auto rep = v_number(inst.q, a);
    for (const auto& [p, w] : rep.witnesses) {
      EXPECT_TRUE(inst.q.numerator().contains(w));
      EXPECT_FALSE(inst.q.denominator().contains(w));
      EXPECT_EQ(colon_monomial(inst.q.denominator(), w), p.to_ideal(inst.ring));
      EXPECT_EQ(weighted_degree(*inst.ring, w), rep.per_prime.at(p));
    }
  }
}

TEST(VNumber, MatchesOracleWithShift) {
  testing::Rng rng(37);
  for (int t = 0; t < 150; ++t) {
    const auto inst = random_instance(rng);
    const auto shift = testing::uniform(rng, -2, 3);
    const Subquotient q(inst.q.numerator(), inst.q.denominator(), shift);
    const auto a = ass(q);
    const auto bound = default_oracle_bound(q);
    for (const auto& p : a) {
      const auto hit = v_oracle(q, p, bound);
      ASSERT_TRUE(hit.has_value());
      EXPECT_EQ(hit->degree, v_at_prime(q, p, a));
    }
    const auto any = v_oracle(q, std::nullopt, bound);
    EXPECT_EQ(any ? ExtInt(any->degree) : ExtInt::infinity(), v_number(q, a).overall);
  }
}

TEST(VNumber, Errors) {
  const auto r = make_ring({"X", "Y"});
  const auto q = Subquotient::quotient_ring(ideal(r, {"X"}));
  try {
    v_at_prime(q, MonomialPrime({0, 1}), ass(q));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "prime-not-associated");
  }
  try {
    gamma_end_check(q);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "inapplicable");
  }
}

TEST(VNumber, GammaEndBound) {
  testing::Rng rng(41);
  int applicable = 0;
  for (int t = 0; t < 150; ++t) {
    const auto inst = random_instance(rng);
    if (!ass(inst.q).contains(MonomialPrime::maximal(*inst.ring))) continue;
    ++applicable;
    const auto rep = gamma_end_check(inst.q);
    EXPECT_TRUE(rep.holds) << rep.v_maximal << " vs " << rep.gamma_end.to_string();
  }
  EXPECT_GT(applicable, 20);
}

// v(A/B) <= v(C/B) overall and per prime for B ⊆ C ⊆ A.
TEST(VNumber, SubmoduleMonotonicity) {
  testing::Rng rng(43);
  for (int t = 0; t < 100; ++t) {
    const auto inst = random_instance(rng);
    const auto c = sum(inst.q.denominator(), testing::random_subideal(rng, inst.q.numerator(), 3, 4));
    const Subquotient sub(c, inst.q.denominator());
    const auto big = v_number(inst.q);
    const auto small = v_number(sub);
    EXPECT_LE(big.overall, small.overall);
    for (const auto& [p, d] : small.per_prime) {
      ASSERT_TRUE(big.per_prime.count(p));
      EXPECT_LE(big.per_prime.at(p), d);
    }
  }
}

}  // namespace
}  // namespace vnumlab
