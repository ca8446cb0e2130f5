#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "minda/schwarz.hpp"
#include "oracles.hpp"

using minda::cplx;
using minda::SchurParams;
using minda::TruncatedSeries;

TEST(Mobius, FixesAndSwaps) {
  const cplx a(0.3, -0.4);
  EXPECT_LT(std::abs(minda::mobius(a, a)), 1e-16);
  EXPECT_LT(std::abs(minda::mobius(a, 0.0) + a), 1e-16);
  // Unit circle maps to itself.
  const cplx u = std::polar(1.0, 0.7);
  EXPECT_NEAR(std::abs(minda::mobius(a, u)), 1.0, 1e-15);
  EXPECT_THROW(minda::mobius(1.0, 0.5), std::domain_error);
}

TEST(SchurParams, Validation) {
  EXPECT_THROW(SchurParams({cplx(1.1, 0.0)}), std::invalid_argument);
  EXPECT_THROW(SchurParams({cplx(std::nan(""), 0.0)}), std::invalid_argument);
  EXPECT_NO_THROW(SchurParams({cplx(0.0, 1.0)}));
  EXPECT_EQ(SchurParams({0.1, 0.2, 1.0, 0.5}).effective_depth(), 3u);
  EXPECT_EQ(SchurParams({0.1, 0.2}).effective_depth(), 2u);
  const auto p = SchurParams::from_polar({{2.0, 0.0}, {0.5, std::numbers::pi}});
  EXPECT_EQ(p[0], cplx(1.0, 0.0));
  EXPECT_NEAR(p[1].real(), -0.5, 1e-16);
}

TEST(SchurToSchwarz, Examples) {
  const auto w = minda::schur_to_schwarz({0.0, 0.0, 0.0, 1.0}, 8);
  for (std::size_t k = 0; k <= 8; ++k) EXPECT_EQ(w[k], k == 4 ? cplx(1.0) : cplx(0.0)) << k;

  // A unimodular first parameter truncates: w = zeta1 * z.
  const cplx u = std::polar(1.0, 0.3);
  const auto w1 = minda::schur_to_schwarz({u, 0.5, 0.5}, 5);
  EXPECT_LT(w1.max_abs_diff(TruncatedSeries::monomial(1, 5, u)), 1e-16);

  // Two interior parameters against the pointwise nesting.
  const std::vector<cplx> z{cplx(0.4, 0.1), cplx(-0.2, 0.5)};
  const auto w2 = minda::schur_to_schwarz(SchurParams(z), 40);
  const auto want = oracle::cauchy_coeffs([&](cplx x) { return oracle::schwarz_value(z, x); }, 40, 0.95);
  for (std::size_t k = 0; k <= 40; ++k) EXPECT_LT(std::abs(w2[k] - want[k]), 1e-13) << k;

  EXPECT_EQ(minda::schur_to_schwarz(SchurParams(), 4), TruncatedSeries(4));
}

TEST(SchurToSchwarz, LeadingCoefficientIsFirstParameter) {
  const auto w = minda::schur_to_schwarz({cplx(0.3, 0.2), cplx(-0.1, 0.6)}, 4);
  EXPECT_EQ(w[0], cplx(0.0));
  EXPECT_LT(std::abs(w[1] - cplx(0.3, 0.2)), 1e-16);
}

TEST(Caratheodory, RoundTrip) {
  const auto w = minda::schur_to_schwarz({0.5, cplx(0.0, 0.3)}, 10);
  const auto p = minda::caratheodory_from_schwarz(w);
  EXPECT_EQ(p[0], cplx(1.0));
  EXPECT_LT(minda::schwarz_from_caratheodory(p).max_abs_diff(w), 1e-15);
  EXPECT_THROW(minda::caratheodory_from_schwarz(TruncatedSeries::constant(0.2, 3)), std::domain_error);
  EXPECT_THROW(minda::schwarz_from_caratheodory(TruncatedSeries::constant(2.0, 3)), std::domain_error);

  // w = z gives the half-plane map (1+z)/(1-z) = 1 + 2z + 2z^2 + ...
  const auto l = minda::caratheodory_from_schwarz(TruncatedSeries::identity(5));
  for (std::size_t k = 1; k <= 5; ++k) EXPECT_EQ(l[k], cplx(2.0));
}

TEST(PTriple, KnownValues) {
  const auto t = minda::p_triple_closed_form(0.0, 0.0, 1.0);
  EXPECT_EQ(t.p1, cplx(0.0));
  EXPECT_EQ(t.p2, cplx(0.0));
  EXPECT_EQ(t.p3, cplx(2.0));
  const auto k = minda::p_triple_closed_form(1.0, 0.3, 0.9);
  EXPECT_EQ(k.p1, cplx(2.0));
  EXPECT_EQ(k.p2, cplx(2.0));
  EXPECT_EQ(k.p3, cplx(2.0));
  EXPECT_THROW(minda::p_triple_closed_form(0.0, 1.5, 0.0), std::invalid_argument);
}

TEST(Herglotz, Margins) {
  const auto l = minda::caratheodory_from_schwarz(TruncatedSeries::identity(2000));
  // Re (1+z)/(1-z) on |z| = r is minimised at z = -r: (1-r)/(1+r).
  EXPECT_NEAR(minda::herglotz_margin(l, 0.9, 720), 0.1 / 1.9, 1e-12);
  EXPECT_LT(minda::herglotz_margin(TruncatedSeries({1.0, 3.0}, 1), 0.9, 720), 0.0);
  EXPECT_THROW(minda::herglotz_margin(l, 1.0, 720), std::domain_error);
  EXPECT_THROW(minda::herglotz_margin(l, 0.5, 0), std::invalid_argument);
}

TEST(LemmaML, SeriesAndDomain) {
  const auto f = minda::lemma_ml_series(0.25, 6);
  // (1 + z/2 + z^2) * (1 + z^2 + z^4 + ...)
  const std::vector<double> want{1.0, 0.5, 2.0, 0.5, 2.0, 0.5, 2.0};
  for (std::size_t k = 0; k <= 6; ++k) EXPECT_NEAR(f[k].real(), want[k], 1e-15);
  EXPECT_THROW(minda::lemma_ml_series(1.0, 6), std::domain_error);
}

TEST(HalfHadamard, Coefficients) {
  const TruncatedSeries p({1.0, 2.0, cplx(0.0, 1.0)}, 2), q({1.0, 1.0, 2.0}, 2);
  const auto h = minda::half_hadamard(p, q);
  EXPECT_EQ(h[0], cplx(1.0));
  EXPECT_EQ(h[1], cplx(1.0));
  EXPECT_EQ(h[2], cplx(0.0, 1.0));
  EXPECT_THROW(minda::half_hadamard(p, TruncatedSeries(3)), std::invalid_argument);
}

// Randomised invariants.
class SchwarzProperties : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(SchwarzProperties, SchurRoundTrip) {
  std::mt19937_64 rng(GetParam());
  const auto params = oracle::random_params(rng, 4, 0.95);
  const auto w = minda::schur_to_schwarz(params, 4);
  const auto back = minda::schwarz_to_schur(w, 4);
  ASSERT_EQ(back.size(), 4u);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_LT(std::abs(back[i] - params[i]), 1e-9) << i;
}

TEST_P(SchwarzProperties, ClosedFormTripleAgreesWithSeries) {
  std::mt19937_64 rng(GetParam());
  for (int rep = 0; rep < 25; ++rep) {
    const auto params = oracle::random_params(rng, 3, 1.0);
    const auto p = minda::caratheodory_from_schwarz(minda::schur_to_schwarz(params, 3));
    const auto t = minda::p_triple_closed_form(params[0], params[1], params[2]);
    EXPECT_LT(std::abs(t.p1 - p[1]), 1e-12);
    EXPECT_LT(std::abs(t.p2 - p[2]), 1e-12);
    EXPECT_LT(std::abs(t.p3 - p[3]), 1e-12);
  }
}

TEST_P(SchwarzProperties, MaximumModulus) {
  std::mt19937_64 rng(GetParam());
  const auto params = oracle::random_params(rng, 4, 0.95);
  const auto w = minda::schur_to_schwarz(params, 2000);
  for (std::size_t k = 0; k < 720; ++k) {
    const double t = 2.0 * std::numbers::pi * static_cast<double>(k) / 720.0;
    EXPECT_LT(std::abs(minda::eval(w, std::polar(0.99, t))), 1.0) << k;
  }
}

TEST_P(SchwarzProperties, HalfHadamardStaysCaratheodory) {
  std::mt19937_64 rng(GetParam());
  const std::size_t n = 1000;
  const auto p = minda::caratheodory_from_schwarz(minda::schur_to_schwarz(oracle::random_params(rng, 4, 0.95), n));
  const auto q = minda::caratheodory_from_schwarz(minda::schur_to_schwarz(oracle::random_params(rng, 4, 0.95), n));
  EXPECT_GT(minda::herglotz_margin(minda::half_hadamard(p, q), 0.95, 720), -1e-9);
}

INSTANTIATE_TEST_SUITE_P(Random, SchwarzProperties, ::testing::Range<std::uint64_t>(200, 240));

class LemmaMLMembership : public ::testing::TestWithParam<double> {};

TEST_P(LemmaMLMembership, PositiveMargin) {
  const auto f = minda::lemma_ml_series(GetParam(), 4000);
  EXPECT_GT(minda::herglotz_margin(f, 0.99, 720), 0.0);
  EXPECT_GT(minda::herglotz_margin(f, 0.9, 720), 0.0);
}

INSTANTIATE_TEST_SUITE_P(Sigma, LemmaMLMembership, ::testing::Values(-0.9, -0.5, 0.0, 0.5, 0.9));
