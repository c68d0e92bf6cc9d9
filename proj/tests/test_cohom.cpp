#include <gtest/gtest.h>

#include "homlie/cohom.hpp"
#include "homlie/matgrp.hpp"
#include "support.hpp"

using namespace homlie;

namespace {

std::vector<std::pair<std::string, QAlgebra>> corpus() {
  const TwistedMatrixSpace gl(Matrix(QMatrix::diagonal({Rational(1), Rational(2)})));
  return {{"abelian2", abelian(2)},
          {"sl2", sl2()},
          {"yau2", yau_twisted_sl2(Rational(2))},
          {"yau3", yau_twisted_sl2(Rational(3))},
          {"yau1/2", yau_twisted_sl2(Rational(1, 2))},
          {"affine", affine_line()},
          {"sl2+1", direct_sum(sl2(), abelian(1))},
          {"gl2", gl_to_algebra(gl)}};
}

// Same algebra on the reordered basis e'_i = e_{perm[i]}.
QAlgebra permuted(const QAlgebra& a, const std::vector<std::size_t>& perm) {
  const std::size_t n = a.dim();
  QMatrix phi(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) phi(k, i) = a.phi()(perm[k], perm[i]);
  return QAlgebra::from_basis_brackets(
      n,
      [&](std::size_t i, std::size_t j) {
        QVector out(n);
        for (std::size_t k = 0; k < n; ++k) out[k] = a.constant(perm[i], perm[j], perm[k]);
        return out;
      },
      phi);
}

}  // namespace

TEST(Representation, Checks) {
  EXPECT_TRUE(check_representation(trivial_rep(sl2())).all_pass());
  EXPECT_TRUE(check_representation(adjoint_rep(sl2())).all_pass());
  EXPECT_TRUE(check_representation(adjoint_rep(yau_twisted_sl2(Rational(2)))).all_pass());
  // rho(e_i) = 1 on a line: rho([h,e]) = 2 but the commutator vanishes
  QRepresentation bad{sl2(), 1, {QMatrix{{1}}, QMatrix{{1}}, QMatrix{{1}}}, QMatrix{{1}}};
  const auto r = check_representation(bad);
  EXPECT_TRUE(r.twist_compatible.pass);
  EXPECT_FALSE(r.bracket_compatible.pass);
}

TEST(Representation, AdjointExamples) {
  for (const auto& m : adjoint_rep(abelian(3)).rho) EXPECT_TRUE(m.is_zero());
  const QRepresentation s = adjoint_rep(sl2());
  EXPECT_EQ(s.rho[0], QMatrix::diagonal({Rational(0), Rational(2), Rational(-2)}));
  try {
    adjoint_rep(q_sl2(Rational(2)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::not_multiplicative);
  }
}

TEST(Coboundary, DegreeZeroSl2Pattern) {
  const QMatrix d0 = coboundary_matrix(adjoint_rep(sl2()), 0);
  ASSERT_EQ(d0.rows(), 9u);
  ASSERT_EQ(d0.cols(), 3u);
  // column h: (dh)(e) = [e,h] = -2e, (dh)(f) = [f,h] = 2f
  QVector expected(9, Rational(0));
  expected[1 * 3 + 1] = -2;
  expected[2 * 3 + 2] = 2;
  EXPECT_EQ(d0.column(0), expected);
  EXPECT_TRUE(coboundary_matrix(adjoint_rep(abelian(2)), 0).is_zero());
}

TEST(Coboundary, CochainSpaceIndexing) {
  const CochainSpace c(4, 2, 3);
  EXPECT_EQ(c.dimension(), 6u * 3u);
  EXPECT_EQ(c.tuples().front(), (std::vector<std::size_t>{0, 1}));
  for (std::size_t i = 0; i < c.tuples().size(); ++i) EXPECT_EQ(c.index_of(c.tuples()[i]), i);
  EXPECT_EQ(CochainSpace(3, 4, 1).dimension(), 0u);
}

TEST(Coboundary, DSquaredVanishesOnCorpus) {
  for (const auto& [name, alg] : corpus()) {
    const QRepresentation rep = adjoint_rep(alg);
    for (std::size_t k = 0; k <= 2; ++k) {
      const auto r = d_squared_check(rep, k);
      EXPECT_TRUE(r.pass) << name << " k=" << k;
      EXPECT_EQ(r.nonzero_entries, 0u);
      const QMatrix prod = coboundary_matrix(rep, k + 1) * coboundary_matrix(rep, k);
      EXPECT_TRUE(prod.is_zero()) << name << " k=" << k;
    }
    EXPECT_TRUE(d_squared_check(trivial_rep(alg), 1).pass) << name;
  }
}

TEST(Cohomology, MatchesIndependentOracles) {
  for (const auto& [name, alg] : corpus()) {
    const auto dims = cohomology_dims(adjoint_rep(alg), 1);
    ASSERT_EQ(dims.size(), 2u);
    EXPECT_EQ(dims[0].cohomology, testing_support::oracle_center_dim(alg)) << name;
    EXPECT_EQ(dims[0].coboundaries, 0u);
    EXPECT_EQ(dims[1].cocycles, testing_support::oracle_derivation_dim(alg)) << name;
    EXPECT_EQ(dims[1].coboundaries, testing_support::oracle_inner_dim(alg)) << name;
    EXPECT_EQ(dims[1].cohomology, dims[1].cocycles - dims[1].coboundaries);
  }
}

TEST(Cohomology, Examples) {
  const auto ab = cohomology_dims(trivial_rep(abelian(2)), 2);
  ASSERT_EQ(ab.size(), 3u);
  EXPECT_EQ(ab[0].cohomology, 1u);
  EXPECT_EQ(ab[1].cohomology, 2u);
  EXPECT_EQ(ab[2].cohomology, 1u);

  const auto s = cohomology_dims(adjoint_rep(sl2()), 2);
  EXPECT_EQ(s[0].cohomology, 0u);
  EXPECT_EQ(s[1].cohomology, 0u);
  EXPECT_EQ(s[1].cocycles, 3u);
  EXPECT_EQ(s[1].coboundaries, 3u);

  const auto t = cohomology_dims(trivial_rep(sl2()), 3);
  EXPECT_EQ(t[0].cohomology, 1u);
  EXPECT_EQ(t[1].cohomology, 0u);
  EXPECT_EQ(t[2].cohomology, 0u);
  EXPECT_EQ(t[3].cohomology, 1u);

  const auto y = cohomology_dims(adjoint_rep(yau_twisted_sl2(Rational(2))), 1);
  EXPECT_EQ(y[0].cohomology, center(yau_twisted_sl2(Rational(2))).cols());

  EXPECT_THROW(cohomology_dims(adjoint_rep(sl2()), 4), Error);
}

TEST(Cohomology, InvariantUnderBasisReordering) {
  auto g = testing_support::rng(20);
  for (const auto& [name, alg] : corpus()) {
    std::vector<std::size_t> perm(alg.dim());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), g);
    const QAlgebra p = permuted(alg, perm);
    const std::size_t kmax = std::min<std::size_t>(alg.dim(), 2);
    const auto a = cohomology_dims(adjoint_rep(alg), kmax);
    const auto b = cohomology_dims(adjoint_rep(p), kmax);
    for (std::size_t k = 0; k <= kmax; ++k) {
      EXPECT_EQ(a[k].cocycles, b[k].cocycles) << name << " k=" << k;
      EXPECT_EQ(a[k].coboundaries, b[k].coboundaries) << name << " k=" << k;
    }
  }
}
