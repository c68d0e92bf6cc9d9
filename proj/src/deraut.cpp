#include "homlie/deraut.hpp"

#include "homlie/detail/compare.hpp"
#include "homlie/matgrp.hpp"

namespace homlie {

namespace {

template <class F>
void require_square(const HomLieAlgebra<F>& alg, const DenseMatrix<F>& m) {
  if (m.rows() != alg.dim() || m.cols() != alg.dim())
    fail(ErrorCode::dimension_mismatch, "linear map must be dim x dim");
}

template <class F>
void require_regular(const HomLieAlgebra<F>& alg) {
  if (!alg.is_regular()) fail(ErrorCode::not_regular, "algebra twist is not invertible");
}

// phi^-1 M phi
template <class F>
DenseMatrix<F> untwist(const DenseMatrix<F>& phi, const DenseMatrix<F>& phi_inv, const DenseMatrix<F>& m) {
  return phi_inv * m * phi;
}

}  // namespace

template <class F>
Verdict<F> is_derivation(const HomLieAlgebra<F>& alg, const DenseMatrix<F>& d, double tolerance) {
  require_square(alg, d);
  require_regular(alg);
  const auto& phi = alg.phi();
  const DenseMatrix<F> phi_inv = inverse(phi);
  const DenseMatrix<F> psi = untwist(phi, phi_inv, d);
  Verdict<F> v;
  const std::size_t n = alg.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec<F> lhs = d.apply(basis_bracket(alg, i, j));
      Vec<F> rhs = bracket(alg, phi.column(i), psi.column(j)) + bracket(alg, psi.column(i), phi.column(j));
      detail::record(v, {i, j}, std::move(lhs), std::move(rhs), tolerance);
    }
  return v;
}

template <class F>
Verdict<F> is_automorphism(const HomLieAlgebra<F>& alg, const DenseMatrix<F>& t, double tolerance) {
  require_square(alg, t);
  require_regular(alg);
  if (rank(t) < alg.dim()) fail(ErrorCode::singular_matrix, "automorphism candidate is singular");
  const auto& phi = alg.phi();
  const DenseMatrix<F> psi = untwist(phi, DenseMatrix<F>(inverse(phi)), t);
  Verdict<F> v;
  const std::size_t n = alg.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec<F> lhs = t.apply(basis_bracket(alg, i, j));
      Vec<F> rhs = bracket(alg, psi.column(i), psi.column(j));
      detail::record(v, {i, j}, std::move(lhs), std::move(rhs), tolerance);
    }
  return v;
}

template Verdict<Rational> is_derivation(const QAlgebra&, const QMatrix&, double);
template Verdict<double> is_derivation(const RAlgebra&, const RMatrix&, double);
template Verdict<Rational> is_automorphism(const QAlgebra&, const QMatrix&, double);
template Verdict<double> is_automorphism(const RAlgebra&, const RMatrix&, double);

DerivationSpace derivation_space(const QAlgebra& alg) {
  require_regular(alg);
  if (!is_multiplicative(alg)) fail(ErrorCode::not_multiplicative, "derivations need a multiplicative algebra");
  const std::size_t n = alg.dim();
  const QMatrix& phi = alg.phi();
  const QMatrix phi_inv = inverse(phi);

  // Unknown r * n + c is D(r, c). Each column holds the residual
  // D[e_i,e_j] - [phi e_i, psi e_j] - [psi e_i, phi e_j] for D = E_rc,
  // stacked over pairs i < j and coordinates k.
  const std::size_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
  QMatrix system(pairs * n, n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      QMatrix e(n, n);
      e(r, c) = 1;
      const QMatrix psi = untwist(phi, phi_inv, e);
      std::size_t row = 0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
          const QVector res = e.apply(basis_bracket(alg, i, j)) - bracket(alg, phi.column(i), psi.column(j)) -
                              bracket(alg, psi.column(i), phi.column(j));
          for (std::size_t k = 0; k < n; ++k) system(row * n + k, r * n + c) = res[k];
          ++row;
        }
    }

  DerivationSpace out{alg, {}, {}, 0, 0, 0};
  const QMatrix kernel = nullspace(system);
  for (std::size_t b = 0; b < kernel.cols(); ++b) {
    QMatrix d(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) d(r, c) = kernel(r * n + c, b);
    out.basis.push_back(std::move(d));
  }
  out.dim = out.basis.size();

  // Inner derivations: column span of the flattened ad(e_i).
  std::vector<QVector> ads;
  for (std::size_t i = 0; i < n; ++i) ads.push_back(flatten(ad(alg, unit_vector<Rational>(n, i))));
  const QMatrix ad_span = QMatrix::from_columns(n * n, ads);
  out.inner_dim = rank(ad_span);
  // Keep an independent subset of the ad(e_i) as the inner basis.
  std::vector<QVector> kept;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<QVector> trial = kept;
    trial.push_back(ads[i]);
    if (rank(QMatrix::from_columns(n * n, trial)) > kept.size()) {
      kept = std::move(trial);
      out.inner_basis.push_back(ad(alg, unit_vector<Rational>(n, i)));
    }
  }
  out.outer_dim = out.dim - out.inner_dim;
  return out;
}

DerAlgebraReport der_algebra_check(const QAlgebra& alg, const QMatrix& d1, const QMatrix& d2) {
  if (!is_derivation(alg, d1).pass || !is_derivation(alg, d2).pass)
    fail(ErrorCode::not_derivation, "der_algebra_check inputs must be derivations");
  const QMatrix& phi = alg.phi();
  const QMatrix phi_inv = inverse(phi);
  const QMatrix br = phi * d1 * phi_inv * d2 * phi_inv - phi * d2 * phi_inv * d1 * phi_inv;
  return {is_derivation(alg, br), is_derivation(alg, QMatrix(phi * d1 * phi_inv))};
}

LieCorrespondence derivation_lie_correspondence(const QAlgebra& alg, const QMatrix& d) {
  const QAlgebra lie = induced_lie(alg);
  LieCorrespondence out;
  out.hom_derivation = is_derivation(alg, d).pass;
  // With phi = I the identity reduces to the ordinary Leibniz rule.
  out.lie_derivation = is_derivation(lie, QMatrix(d * inverse(alg.phi()))).pass;
  return out;
}

AutGroupOps aut_group_ops(const QAlgebra& alg, const QMatrix& t1, const QMatrix& t2) {
  if (!is_automorphism(alg, t1).pass || !is_automorphism(alg, t2).pass)
    fail(ErrorCode::not_automorphism, "aut_group_ops inputs must be automorphisms");
  const QMatrix& phi = alg.phi();
  const QMatrix phi_inv = inverse(phi);
  AutGroupOps out;
  out.product = phi * t1 * phi_inv * t2 * phi_inv;
  out.inverse = phi * inverse(t1) * phi;
  out.twist_image = phi * t1 * phi_inv;
  out.product_is_aut = is_automorphism(alg, out.product).pass;
  out.inverse_is_aut = is_automorphism(alg, out.inverse).pass;
  out.twist_is_aut = is_automorphism(alg, out.twist_image).pass;
  out.unit_law = QMatrix(phi * t1 * phi_inv * phi * phi_inv) == out.twist_image;
  return out;
}

RMatrix twisted_flow(const QAlgebra& alg, const QMatrix& d, double t) {
  require_square(alg, d);
  const TwistedMatrixSpace space{Matrix(alg.phi())};
  return hexp(space, d.cast<double>() * t);
}

RMatrix integrate_derivation(const QAlgebra& alg, const QMatrix& d, double t) {
  if (!is_derivation(alg, d).pass) fail(ErrorCode::not_derivation, "integrate_derivation needs a derivation");
  return twisted_flow(alg, d, t);
}

}  // namespace homlie
