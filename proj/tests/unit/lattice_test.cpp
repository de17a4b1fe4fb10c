#include <gtest/gtest.h>

#include "fe/error.hpp"
#include "fe/lattice.hpp"
#include "helpers.hpp"
#include "oracles.hpp"
#include "random.hpp"

namespace fe {
namespace {

using test::q;

GeneratorSet kronecker_axes_first(const std::vector<SymReal>& theta) {
  const std::size_t d = theta.size();
  std::vector<Point> gens;
  for (std::size_t k = 0; k < d; ++k) {
    Point e(d);
    e[k] = SymReal(1);
    gens.push_back(e);
  }
  gens.push_back(theta);
  return GeneratorSet(gens);
}

TEST(Represent, ByConstruction) {
  const auto t = test::qlinear({"theta1", "theta2"});
  const SymReal a = SymReal::symbol(t, 0);
  const SymReal b = SymReal::symbol(t, 1);
  const GeneratorSet gamma({{SymReal(1), a}, {b, SymReal(2)}});
  const Point x = gamma.generator(0) + SymReal(2) * gamma.generator(1);
  const auto r = represent(x, gamma);
  ASSERT_TRUE(r);
  EXPECT_EQ(*r, (IntTuple{1, 2}));
}

TEST(Represent, HalfIsNotInTheGroup) {
  const auto t = test::qlinear({"theta1", "theta2"});
  const GeneratorSet gamma({{SymReal(1), SymReal()}, {SymReal::symbol(t, 0), SymReal::symbol(t, 1)}});
  EXPECT_FALSE(represent({SymReal(q(1, 2)), SymReal()}, gamma));
}

TEST(Represent, KroneckerCoordinates) {
  testing::Rng rng(41);
  for (std::size_t d = 1; d <= 3; ++d) {
    const auto theta = testing::make_symbols("theta", d, IndependenceMode::QLinear);
    const GeneratorSet gamma = kronecker_axes_first(theta);
    for (int i = 0; i < 20; ++i) {
      std::vector<long> n(d + 1);
      for (auto& v : n) v = rng.integer(-9, 9);
      Point x(d);
      for (std::size_t k = 0; k < d; ++k) x[k] = SymReal(n[k]) + SymReal(n[d]) * theta[k];
      const auto r = represent(x, gamma);
      ASSERT_TRUE(r);
      for (std::size_t k = 0; k <= d; ++k) EXPECT_EQ((*r)[k], BigInt(n[k]));
    }
  }
}

TEST(Represent, RandomRoundTrip) {
  testing::Rng rng(42);
  const auto symbols = testing::make_symbols("theta", 2, IndependenceMode::QLinear);
  for (int i = 0; i < 60; ++i) {
    const GeneratorSet gamma = testing::random_injective_generators(rng, 1 + static_cast<std::size_t>(i % 3), symbols);
    std::vector<long> n(gamma.size());
    for (auto& v : n) v = rng.integer(-20, 20);
    const auto r = represent(gamma.embed(n), gamma);
    ASSERT_TRUE(r);
    for (std::size_t k = 0; k < n.size(); ++k) EXPECT_EQ((*r)[k], BigInt(n[k]));
    // a non-integer multiple of a generator is outside H
    Point off = gamma.embed(n) + SymReal(q(1, 2)) * gamma.generator(0);
    EXPECT_FALSE(represent(off, gamma));
  }
}

TEST(Represent, NonInjectiveIsInputError) {
  const GeneratorSet gamma({{SymReal(1)}, {SymReal(q(1, 2))}});
  EXPECT_THROW(represent({SymReal(1)}, gamma), InputError);
}

TEST(Injectivity, Examples) {
  const auto theta = testing::make_symbols("theta", 1, IndependenceMode::QLinear);
  EXPECT_TRUE(is_injective(GeneratorSet({{SymReal(1)}, {theta[0]}})).injective);

  const auto r = is_injective(GeneratorSet({{SymReal(1)}, {SymReal(q(1, 2))}}));
  EXPECT_FALSE(r.injective);
  const bool expected = r.witness == IntTuple{1, -2} || r.witness == IntTuple{-1, 2};
  EXPECT_TRUE(expected);

  for (std::size_t d = 1; d <= 4; ++d) {
    const auto th = testing::make_symbols("theta", d, IndependenceMode::QLinear);
    EXPECT_TRUE(is_injective(kronecker_generators(th)).injective);
  }
}

TEST(Injectivity, WitnessIsARelation) {
  testing::Rng rng(43);
  for (int i = 0; i < 30; ++i) {
    std::vector<Point> gens;
    for (int k = 0; k < 3; ++k) gens.push_back({SymReal(rng.nonzero_rational(-5, 5, 6))});
    const GeneratorSet gamma(gens);
    const auto r = is_injective(gamma);
    ASSERT_FALSE(r.injective);
    SymReal sum;
    for (std::size_t k = 0; k < 3; ++k) sum += SymReal(Rational(r.witness[k])) * gens[k][0];
    EXPECT_TRUE(sum.is_zero());
  }
}

TEST(Kronecker, SymbolsAreDense) {
  for (std::size_t d = 1; d <= 4; ++d) {
    const auto theta = testing::make_symbols("theta", d, IndependenceMode::QLinear);
    const auto c = kronecker_density_check(theta);
    EXPECT_EQ(c.verdict, DensityVerdict::Dense);
    EXPECT_EQ(c.kind, CertificateKind::Kronecker);
    ASSERT_TRUE(c.closed_form_matches);
    EXPECT_TRUE(*c.closed_form_matches);
  }
}

TEST(Kronecker, RationalThetaWitness) {
  const auto c = kronecker_density_check(std::vector<SymReal>{SymReal(q(3, 7))});
  EXPECT_EQ(c.verdict, DensityVerdict::NotDense);
  ASSERT_EQ(c.witness.size(), 2U);
  // n₁·θ = k with n₁ a multiple of 7
  EXPECT_EQ(c.witness[0] % 7, 0);
  EXPECT_NE(c.witness[0], 0);
  EXPECT_EQ(Rational(c.witness[0]) * q(3, 7), Rational(c.witness[1]));
}

TEST(Kronecker, DependentSymbolsWitness) {
  const auto theta = testing::make_symbols("theta", 1, IndependenceMode::QLinear);
  const std::vector<SymReal> t{theta[0], SymReal(2) * theta[0]};
  const auto c = kronecker_density_check(t);
  EXPECT_EQ(c.verdict, DensityVerdict::NotDense);
  ASSERT_EQ(c.witness.size(), 3U);
  const SymReal sum = SymReal(Rational(c.witness[0])) * t[0] + SymReal(Rational(c.witness[1])) * t[1];
  EXPECT_EQ(sum, SymReal(Rational(c.witness[2])));
  const bool expected = c.witness == IntTuple{2, -1, 0} || c.witness == IntTuple{-2, 1, 0};
  EXPECT_TRUE(expected);
}

TEST(Kronecker, RationalAgreesWithBruteForce) {
  testing::Rng rng(44);
  for (int i = 0; i < 30; ++i) {
    const std::size_t d = 1 + static_cast<std::size_t>(i % 3);
    std::vector<Rational> rat;
    std::vector<SymReal> theta;
    for (std::size_t k = 0; k < d; ++k) {
      rat.push_back(rng.rational(-30, 30, 30));
      theta.emplace_back(rat.back());
    }
    const auto c = kronecker_density_check(theta);
    EXPECT_EQ(c.verdict, DensityVerdict::NotDense);
    EXPECT_TRUE(testing::brute_force_relation(rat, 50).has_value());
  }
}

TEST(Density, TooFewGeneratorsIsNotDense) {
  const auto theta = testing::make_symbols("theta", 1, IndependenceMode::QLinear);
  const GeneratorSet gamma({{SymReal(1), SymReal()}, {SymReal(), theta[0]}});
  const auto c = density_check(gamma);
  EXPECT_EQ(c.verdict, DensityVerdict::NotDense);
  EXPECT_TRUE(c.witness.empty());
}

TEST(Density, MinorsAreLinearFormsInTheUnknowns) {
  const auto theta = testing::make_symbols("theta", 2, IndependenceMode::QLinear);
  const auto c = density_check(kronecker_generators(theta));
  EXPECT_EQ(c.verdict, DensityVerdict::Dense);
  ASSERT_EQ(c.minors.size(), c.linear_forms.size());
  for (const auto& form : c.linear_forms) EXPECT_EQ(form.size(), c.unknowns.size());
}

TEST(Density, AllZeroTupleGivesZeroDeterminant) {
  const auto t = test::algebraic({"pi"});
  const SymReal pi = SymReal::symbol(t, 0);
  for (std::size_t d = 1; d <= 3; ++d) {
    const auto c = pi_power_density_certificate(d, d + 1, pi);
    ASSERT_EQ(c.minors.size(), 1U);
    ASSERT_TRUE(c.closed_form);
    // dropping every unknown from the closed form leaves nothing
    std::vector<BigInt> zeros(c.unknowns.size(), 0);
    EXPECT_TRUE(testing::specialize(*c.closed_form, t->size(), zeros).is_zero());
  }
}

TEST(Density, PiPowerFamily) {
  const auto t = test::algebraic({"pi"});
  const SymReal pi = SymReal::symbol(t, 0);
  for (std::size_t d = 1; d <= 3; ++d) {
    const auto c = pi_power_density_certificate(d, d + 1, pi);
    EXPECT_EQ(c.verdict, DensityVerdict::Dense);
    ASSERT_TRUE(c.closed_form_matches);
    EXPECT_TRUE(*c.closed_form_matches);
  }
  // d = 1: ±(n₀ − πn₁)
  const auto c1 = pi_power_density_certificate(1, 2, pi);
  const SymReal n0 = SymReal::symbol(c1.parameter_table, c1.unknowns[0]);
  const SymReal n1 = SymReal::symbol(c1.parameter_table, c1.unknowns[1]);
  const SymReal piw = pi.embed_into(c1.parameter_table);
  const SymReal ref = n0 - piw * n1;
  const bool match = c1.minors[0] == ref || c1.minors[0] == -ref;
  EXPECT_TRUE(match) << c1.minors[0].str();
}

TEST(Density, WitnessAnnihilatesEveryMinor) {
  const GeneratorSet gamma({{SymReal(1)}, {SymReal(q(1, 2))}});
  const auto c = density_check(gamma);
  EXPECT_EQ(c.verdict, DensityVerdict::NotDense);
  ASSERT_EQ(c.witness.size(), 2U);
  for (const auto& form : c.linear_forms) {
    SymReal sum;
    for (std::size_t k = 0; k < form.size(); ++k) sum += form[k] * SymReal(Rational(c.witness[k]));
    EXPECT_TRUE(sum.is_zero());
  }
}

}  // namespace
}  // namespace fe
