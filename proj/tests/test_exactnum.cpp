#include <cmath>

#include <gtest/gtest.h>

#include "homlie/exactnum.hpp"
#include "homlie/matgrp.hpp"
#include "support.hpp"

using namespace homlie;
using testing_support::oracle_exp;
using testing_support::oracle_rank;

namespace {

QMatrix q(std::initializer_list<std::initializer_list<Rational>> rows) { return QMatrix(rows); }

}  // namespace

TEST(Rank, Examples) {
  EXPECT_EQ(rank(QMatrix::identity(2)), 2u);
  EXPECT_EQ(rank(QMatrix(2, 2)), 0u);
  const QMatrix m = q({{1, 2}, {2, 4}});
  EXPECT_EQ(rank(m), oracle_rank(m));
  EXPECT_EQ(rank(m), 1u);
  EXPECT_EQ(rank(RMatrix{{1.0, 2.0}, {2.0, 4.0}}), 1u);
}

TEST(Rank, AgreesWithOracleOnRandomMatrices) {
  auto g = testing_support::rng(1);
  std::uniform_int_distribution<int> dim(1, 6);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t r = dim(g), c = dim(g);
    QMatrix m = testing_support::random_rational_matrix(r, c, g);
    // force some dependence
    if (r > 2 && trial % 2 == 0)
      for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) * Rational(3, 2) - m(1, j);
    EXPECT_EQ(rank(m), oracle_rank(m));
    EXPECT_EQ(rank(m) + nullspace(m).cols(), c);
    EXPECT_EQ(rank(m.cast<double>()), rank(m));
  }
}

TEST(Nullspace, Examples) {
  EXPECT_EQ(nullspace(QMatrix::identity(3)).cols(), 0u);
  const QMatrix z = nullspace(QMatrix(3, 3));
  EXPECT_EQ(z.cols(), 3u);
  EXPECT_EQ(rank(z), 3u);

  const QMatrix m = q({{1, 2}, {2, 4}});
  const QMatrix k = nullspace(m);
  ASSERT_EQ(k.cols(), 1u);
  EXPECT_TRUE((m * k).is_zero());
  // proportional to (-2, 1)
  EXPECT_EQ(k(0, 0) * 1, k(1, 0) * -2);
}

TEST(Nullspace, KernelVectorsAreAnnihilated) {
  auto g = testing_support::rng(2);
  for (int trial = 0; trial < 40; ++trial) {
    QMatrix m = testing_support::random_rational_matrix(3, 5, g);
    const QMatrix k = nullspace(m);
    EXPECT_TRUE((m * k).is_zero());
    EXPECT_EQ(rank(k), k.cols());

    const RMatrix mr = m.cast<double>();
    const RMatrix kr = nullspace(mr);
    EXPECT_EQ(kr.cols(), k.cols());
    EXPECT_LE(max_abs(mr * kr), kResidualTolerance);
  }
}

TEST(Inverse, Examples) {
  EXPECT_EQ(inverse(QMatrix::identity(3)), QMatrix::identity(3));
  EXPECT_EQ(inverse(QMatrix::diagonal({Rational(1), Rational(2)})), QMatrix::diagonal({Rational(1), Rational(1, 2)}));
  const QMatrix swap = q({{0, 1}, {1, 0}});
  EXPECT_EQ(inverse(swap), swap);
  try {
    inverse(q({{1, 2}, {2, 4}}));
    FAIL() << "expected singular_matrix";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::singular_matrix);
  }
  EXPECT_THROW(inverse(RMatrix{{1.0, 2.0}, {2.0, 4.0}}), Error);
}

TEST(Inverse, ExactRoundTrip) {
  auto g = testing_support::rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const QMatrix m = testing_support::random_rational_matrix(4, 4, g);
    if (determinant(m) == 0) continue;
    EXPECT_EQ(m * inverse(m), QMatrix::identity(4));
    EXPECT_EQ(inverse(m), testing_support::oracle_inverse(m));
  }
}

TEST(MatExp, Examples) {
  EXPECT_EQ(mat_exp(RMatrix(3, 3)), RMatrix::identity(3));
  const RMatrix n = mat_exp(RMatrix{{0.0, 1.0}, {0.0, 0.0}});
  EXPECT_LE(testing_support::max_diff(n, RMatrix{{1.0, 1.0}, {0.0, 1.0}}), 1e-15);
  const RMatrix d = mat_exp(RMatrix::diagonal({1.0, -1.0}));
  EXPECT_LE(std::abs(d(0, 0) - std::exp(1.0)), 1e-12);
  EXPECT_LE(std::abs(d(1, 1) - std::exp(-1.0)), 1e-12);
  EXPECT_EQ(d(0, 1), 0.0);
  EXPECT_EQ(d(1, 0), 0.0);
}

TEST(MatExp, ModeErrorOnExactInput) {
  try {
    mat_exp(Matrix(QMatrix::identity(2)));
    FAIL() << "expected mode_error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::mode_error);
  }
}

TEST(MatExp, InverseAndGroupLaw) {
  auto g = testing_support::rng(4);
  std::uniform_int_distribution<int> dim(1, 6);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = dim(g);
    RMatrix m = random_matrix(n, g, 1.0);
    const double norm = inf_norm(m);
    if (norm > 2.0) m *= 2.0 / norm;
    EXPECT_LE(testing_support::max_diff(mat_exp(m) * mat_exp(-m), RMatrix::identity(n)), 1e-10);
    const double s = unit(g), t = unit(g);
    EXPECT_LE(testing_support::max_diff(mat_exp(m * (s + t)), mat_exp(m * s) * mat_exp(m * t)), 1e-10);
    EXPECT_LE(testing_support::max_diff(mat_exp(m), oracle_exp(m)), 1e-12);
    EXPECT_LE(testing_support::max_diff(mat_expm1(m) + RMatrix::identity(n), mat_exp(m)), 1e-12);
  }
}

TEST(MatExpm1, KeepsRelativeAccuracyForSmallArguments) {
  const RMatrix m = RMatrix{{0.0, 1e-9}, {2e-9, 0.0}};
  const RMatrix e = mat_expm1(m);
  EXPECT_NEAR(e(0, 1), 1e-9, 1e-24);
  EXPECT_NEAR(e(1, 0), 2e-9, 1e-24);
  EXPECT_NEAR(e(0, 0), 1e-18, 1e-30);
}

TEST(ParseRational, Forms) {
  EXPECT_EQ(parse_rational("3/4"), Rational(3, 4));
  EXPECT_EQ(parse_rational("-6/8"), Rational(-3, 4));
  EXPECT_EQ(parse_rational("5"), Rational(5));
  EXPECT_EQ(parse_rational("0.25"), Rational(1, 4));
  EXPECT_EQ(parse_rational("-1.5"), Rational(-3, 2));
  EXPECT_EQ(format_rational(Rational(-3, 4)), "-3/4");
  EXPECT_EQ(format_rational(Rational(2)), "2");
  for (const char* bad : {"", "1/0", "abc", "1/2/3", "1..2"}) EXPECT_THROW(parse_rational(bad), Error) << bad;
}

TEST(Scalar, LowestTermsAndModes) {
  Rational raw(6, 8);
  const Scalar s(raw);
  EXPECT_EQ(s.exact().get_num(), 3);
  EXPECT_EQ(s.exact().get_den(), 4);
  EXPECT_EQ(s.mode(), Mode::exact);
  EXPECT_THROW(s.approx(), Error);
  const Scalar d(0.5);
  EXPECT_EQ(d.mode(), Mode::approx);
  EXPECT_THROW(d.exact(), Error);
}

TEST(Matrix, ModeAccessors) {
  const Matrix m(QMatrix::identity(2));
  EXPECT_EQ(m.mode(), Mode::exact);
  EXPECT_THROW(m.approx(), Error);
  EXPECT_EQ(m.to_approx(), RMatrix::identity(2));
  const Matrix r(RMatrix::identity(2));
  EXPECT_THROW(r.exact(), Error);
  EXPECT_EQ(rank(r), 2u);
}
