#include "gendiff/operators.h"

#include <cmath>

#include <gtest/gtest.h>

#include "gendiff/decompose.h"
#include "gendiff/error.h"
#include "oracles.h"

namespace gendiff {
namespace {

TEST(Symbol, Examples) {
  EXPECT_EQ(symbol_value({1, -1, 1}, 2), -3);
  EXPECT_EQ(symbol_value({1, -1, 1}, 1), 0);
  EXPECT_EQ(symbol_value({1, -1, 1}, -1), 0);
  EXPECT_EQ(symbol_value({0, 0, 2}, 3), 81);
}

TEST(Symbol, EqualZerosGiveEvenPower) {
  for (int s = 1; s <= 4; ++s) {
    for (std::int64_t n = -9; n <= 9; ++n) {
      std::int64_t expected = 1;
      for (int k = 0; k < 2 * s; ++k) expected *= (n - 3);
      if (s % 2 == 1) expected = -expected;
      EXPECT_EQ(symbol_value({3, 3, s}, n), expected);
    }
  }
}

TEST(Symbol, MagnitudeLimit) {
  try {
    symbol_value({0, 0, 8}, 1 << 20);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMagnitudeLimit);
  }
  EXPECT_EQ(symbol_value({0, 1, 1}, 1 << 30),
            -(std::int64_t{1} << 30) * ((std::int64_t{1} << 30) - 1));
}

TEST(Derivative, Examples) {
  auto d = apply_derivative(Spectrum(2, {{2, 1.0}}), 1);
  EXPECT_EQ(d[2], Complex(0.0, 2.0));
  EXPECT_TRUE(apply_derivative(Spectrum(0, {{0, 5.0}}), 3).empty());
  auto d2 = apply_derivative(Spectrum(1, {{1, 1.0}}), 2);
  EXPECT_EQ(d2[1], Complex(-1.0, 0.0));
}

TEST(Quadratic, Examples) {
  const QuadraticSymbol sym{1, -1, 1};
  auto f = apply_quadratic(sym, Spectrum(2, {{2, 1.0}}));
  EXPECT_EQ(f[2], Complex(-3.0));
  EXPECT_TRUE(apply_quadratic(sym, Spectrum(2, {{1, 7.0}})).empty());
  EXPECT_TRUE(apply_quadratic(sym, Spectrum(2)).empty());
}

TEST(Quadratic, ExpandsAsOperatorPolynomial) {
  // (D^2 - i(a+b)D - ab I) g computed from D alone.
  const std::int64_t a = 2, b = -3;
  auto g = oracle::random_spectrum(10, 8);
  auto d1 = apply_derivative(g, 1);
  auto d2 = apply_derivative(g, 2);
  auto expected = d2 - Complex(0, a + b) * d1 - Complex(static_cast<double>(a * b)) * g;
  EXPECT_LE(oracle::max_abs_diff(apply_quadratic({a, b, 1}, g), expected), 1e-12);

  auto twice = apply_quadratic({a, b, 1}, apply_quadratic({a, b, 1}, g));
  EXPECT_LE(oracle::max_abs_diff(apply_quadratic({a, b, 2}, g), twice), 1e-9);
}

TEST(Solve, Examples) {
  const QuadraticSymbol sym{1, -1, 1};
  auto g = solve_quadratic(sym, Spectrum(2, {{2, 1.0}}));
  EXPECT_NEAR(std::abs(g[2] + 1.0 / 3.0), 0.0, 1e-16);
  try {
    solve_quadratic(sym, Spectrum(2, {{1, 1.0}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotInRange);
    ASSERT_TRUE(e.frequency().has_value());
    EXPECT_EQ(*e.frequency(), 1);
  }
}

TEST(Solve, ApplyAfterSolveIsIdentity) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto f = oracle::random_spectrum(16, seed, {1, -1});
    for (int s = 1; s <= 2; ++s) {
      const QuadraticSymbol sym{1, -1, s};
      auto back = apply_quadratic(sym, solve_quadratic(sym, f));
      EXPECT_LE(l2_norm(back - f), 1e-12 * l2_norm(f));
    }
  }
}

TEST(Solve, SolveAfterApplyIsProjection) {
  const QuadraticSymbol sym{0, 3, 2};
  auto g = oracle::random_spectrum(12, 3);
  auto projected = g;
  projected.erase(0);
  projected.erase(3);
  auto back = solve_quadratic(sym, apply_quadratic(sym, g));
  EXPECT_LE(l2_norm(back - projected), 1e-12 * l2_norm(projected));
  EXPECT_EQ(back[0], Complex(0.0));
  EXPECT_EQ(back[3], Complex(0.0));
}

TEST(Solve, RangeMatchesVanishingCheck) {
  const QuadraticSymbol sym{2, -2, 1};
  for (double leak : {0.0, 1e-13, 1e-6, 0.5}) {
    auto f = oracle::random_spectrum(8, 21, {2, -2});
    f.set(2, leak);
    const bool vanishes = check_vanishing(f, 2, -2, kDefaultRangeTolerance);
    bool solved = true;
    try {
      solve_quadratic(sym, f);
    } catch (const Error&) {
      solved = false;
    }
    EXPECT_EQ(vanishes, solved) << leak;
  }
}

TEST(Solve, ResultHasFiniteSobolevEnergy) {
  auto f = oracle::random_spectrum(16, 2, {1, -1});
  auto g = solve_quadratic({1, -1, 2}, f);
  EXPECT_TRUE(std::isfinite(sobolev_energy(g, 4)));
}

}  // namespace
}  // namespace gendiff
