#include "homlie/matgrp.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace homlie {

namespace {

void require_square(const TwistedMatrixSpace& s, const RMatrix& a, const char* what) {
  if (a.rows() != s.dim() || a.cols() != s.dim())
    fail(ErrorCode::dimension_mismatch, std::string(what) + " must be " + std::to_string(s.dim()) + "x" +
                                            std::to_string(s.dim()));
}

void require_invertible(const RMatrix& a) {
  if (rank(a) < a.rows()) fail(ErrorCode::singular_matrix, "group element is singular");
}

RMatrix elementary(std::size_t m, std::size_t flat_index) {
  RMatrix e(m, m);
  e(flat_index % m, flat_index / m) = 1.0;
  return e;
}

}  // namespace

TwistedMatrixSpace::TwistedMatrixSpace(Matrix beta) : input_(std::move(beta)) {
  if (input_.rows() != input_.cols()) fail(ErrorCode::dimension_mismatch, "beta must be square");
  if (rank(input_) < input_.rows()) fail(ErrorCode::singular_matrix, "beta must be invertible");
  if (input_.mode() == Mode::exact) {
    beta_ = input_.exact().cast<double>();
    beta_inv_ = inverse(input_.exact()).cast<double>();
  } else {
    beta_ = input_.approx();
    beta_inv_ = inverse(beta_);
  }
}

RMatrix TwistedMatrixSpace::beta_power(int k) const {
  RMatrix out = RMatrix::identity(dim());
  const RMatrix& base = k >= 0 ? beta_ : beta_inv_;
  for (int i = 0; i < std::abs(k); ++i) out = out * base;
  return out;
}

RMatrix gl_bracket(const TwistedMatrixSpace& s, const RMatrix& a, const RMatrix& b) {
  require_square(s, a, "A");
  require_square(s, b, "B");
  const RMatrix& beta = s.beta();
  const RMatrix& bi = s.beta_inv();
  return beta * a * bi * b * bi - beta * b * bi * a * bi;
}

RMatrix gl_ad_beta(const TwistedMatrixSpace& s, const RMatrix& a, int k) {
  require_square(s, a, "A");
  return s.beta_power(k) * a * s.beta_power(-k);
}

RMatrix group_product(const TwistedMatrixSpace& s, const RMatrix& a, const RMatrix& b) {
  require_square(s, a, "A");
  require_square(s, b, "B");
  require_invertible(a);
  require_invertible(b);
  return s.beta() * a * s.beta_inv() * b * s.beta_inv();
}

RMatrix group_inverse(const TwistedMatrixSpace& s, const RMatrix& a) {
  require_square(s, a, "A");
  return s.beta() * inverse(a) * s.beta();
}

HomGroupReport check_homgroup(const TwistedMatrixSpace& s, const std::vector<RMatrix>& samples, double tolerance) {
  if (samples.size() < 3) fail(ErrorCode::bad_parameter, "check_homgroup needs at least three samples");
  for (const auto& a : samples) {
    require_square(s, a, "sample");
    require_invertible(a);
  }
  HomGroupReport report;
  auto note = [tolerance](AxiomResidual& ax, double r) {
    ax.residual = std::max(ax.residual, r);
    ax.pass = ax.residual <= tolerance;
  };
  auto prod = [&](const RMatrix& x, const RMatrix& y) { return s.beta() * x * s.beta_inv() * y * s.beta_inv(); };
  auto twist = [&](const RMatrix& x) { return s.beta() * x * s.beta_inv(); };

  for (const auto& a : samples) {
    note(report.hom_unit, residual(prod(a, s.beta()), twist(a)));
    note(report.hom_unit, residual(prod(s.beta(), a), twist(a)));
    const RMatrix ai = group_inverse(s, a);
    note(report.inverse, residual(prod(a, ai), s.beta()));
    note(report.inverse, residual(prod(ai, a), s.beta()));
    for (const auto& b : samples) {
      note(report.twist_multiplicative, residual(twist(prod(a, b)), prod(twist(a), twist(b))));
      for (const auto& c : samples)
        note(report.hom_associative, residual(prod(twist(a), prod(b, c)), prod(prod(a, b), twist(c))));
    }
  }
  return report;
}

RMatrix hexp(const TwistedMatrixSpace& s, const RMatrix& a) {
  require_square(s, a, "A");
  return s.beta() * mat_exp(a * s.beta_inv());
}

OneParamReport one_param_check(const TwistedMatrixSpace& s, const RMatrix& a,
                               const std::vector<std::pair<double, double>>& ts, double tolerance) {
  OneParamReport report;
  for (const auto& [t, u] : ts) {
    const RMatrix lhs = hexp(s, a * (t + u));
    const RMatrix rhs =
        group_product(s, gl_ad_beta(s, hexp(s, a * t), -1), gl_ad_beta(s, hexp(s, a * u), -1));
    const double r = residual(lhs, rhs);
    if (r > report.residual) {
      report.residual = r;
      report.worst = {t, u};
    }
  }
  report.pass = report.residual <= tolerance;
  return report;
}

RMatrix omega_nested(const TwistedMatrixSpace& s, const RMatrix& a, const RMatrix& b, double t, double s_param) {
  const RMatrix sa = hexp(s, a * s_param);
  const RMatrix tb = hexp(s, b * t);
  const RMatrix msa = hexp(s, a * -s_param);
  const RMatrix mtb = hexp(s, b * -t);
  const RMatrix inner = group_product(s, gl_ad_beta(s, group_product(s, sa, tb), -3), gl_ad_beta(s, msa, -2));
  return group_product(s, inner, gl_ad_beta(s, mtb, -1));
}

RMatrix omega_offset(const TwistedMatrixSpace& s, const RMatrix& a, const RMatrix& b, double t, double s_param) {
  require_square(s, a, "A");
  require_square(s, b, "B");
  const RMatrix k = a * s.beta_inv();
  const RMatrix l = b * s.beta_inv();
  const RMatrix p = mat_expm1(k * s_param), q = mat_expm1(l * t);
  // e^{sK} e^{tL} - e^{tL} e^{sK} = PQ - QP, which is O(st) with no cancellation
  const RMatrix tail = mat_exp(k * -s_param) * mat_exp(l * -t);
  return s.beta() * ((p * q - q * p) * tail);
}

CommutatorCheck commutator_fd_verify(const TwistedMatrixSpace& s, const RMatrix& a, const RMatrix& b, double h) {
  if (!(h > 0.0 && h <= 0.1)) fail(ErrorCode::bad_parameter, "finite-difference step must lie in (0, 0.1]");
  CommutatorCheck out;
  out.step = h;
  out.closed_form = gl_bracket(s, a, b);

  const double stencil[4][3] = {{h, h, 1.0}, {h, -h, -1.0}, {-h, h, -1.0}, {-h, -h, 1.0}};
  RMatrix acc(s.dim(), s.dim());
  for (const auto& [t, u, sign] : stencil) {
    const RMatrix offset = omega_offset(s, a, b, t, u);
    out.form_residual = std::max(out.form_residual, residual(omega_nested(s, a, b, t, u), s.beta() + offset));
    acc += offset * sign;
  }
  out.fd_estimate = acc * (1.0 / (4.0 * h * h));
  out.residual = residual(out.fd_estimate, out.closed_form);
  return out;
}

bool commutator_passes(const CommutatorCheck& check, double fd_tolerance) {
  return check.residual <= fd_tolerance && check.form_residual <= kResidualTolerance;
}

std::vector<double> commutator_convergence(const TwistedMatrixSpace& s, const RMatrix& a, const RMatrix& b, double h,
                                           int halvings) {
  std::vector<double> out;
  for (int i = 0; i <= halvings; ++i) out.push_back(commutator_fd_verify(s, a, b, std::ldexp(h, -i)).residual);
  return out;
}

RMatrix tilde_ad(const TwistedMatrixSpace& s, const RMatrix& a, const RMatrix& b) {
  return group_product(s, gl_ad_beta(s, group_product(s, a, b), -1), group_inverse(s, a));
}

ActionResidual tilde_ad_action_residual(const TwistedMatrixSpace& s, const RMatrix& a, const RMatrix& b,
                                        const RMatrix& x) {
  ActionResidual r;
  r.unit = residual(tilde_ad(s, s.beta(), x), gl_ad_beta(s, x));
  const RMatrix lhs = tilde_ad(s, group_product(s, a, b), x);
  const RMatrix rhs = tilde_ad(s, gl_ad_beta(s, a), gl_ad_beta(s, tilde_ad(s, gl_ad_beta(s, b), x), -1));
  r.composition = residual(lhs, rhs);
  return r;
}

RMatrix ad_hat(const TwistedMatrixSpace& s, const RMatrix& a, double h) {
  require_square(s, a, "a");
  require_invertible(a);
  const std::size_t m = s.dim();
  RMatrix out(m * m, m * m);
  for (std::size_t idx = 0; idx < m * m; ++idx) {
    const RMatrix e = elementary(m, idx);
    const RMatrix plus = tilde_ad(s, a, hexp(s, e * h));
    const RMatrix minus = tilde_ad(s, a, hexp(s, e * -h));
    const RMatrix deriv = (plus - minus) * (1.0 / (2.0 * h));
    out.set_column(idx, flatten(gl_ad_beta(s, deriv, -1)));
  }
  return out;
}

RMatrix ad_hat_derivative(const TwistedMatrixSpace& s, const RMatrix& x, double h) {
  require_square(s, x, "X");
  return (ad_hat(s, hexp(s, x * h)) - ad_hat(s, hexp(s, x * -h))) * (1.0 / (2.0 * h));
}

RMatrix ad_beta_operator(const TwistedMatrixSpace& s) {
  const std::size_t m = s.dim();
  RMatrix p(m * m, m * m);
  for (std::size_t idx = 0; idx < m * m; ++idx) p.set_column(idx, flatten(gl_ad_beta(s, elementary(m, idx))));
  return p;
}

RMatrix ad_hat_lie(const TwistedMatrixSpace& s, const RMatrix& x, double h) {
  const RMatrix p = ad_beta_operator(s);
  return inverse(p) * ad_hat_derivative(s, x, h) * p;
}

AdHatHexpReport adhat_hexp_check(const TwistedMatrixSpace& s, const RMatrix& x, double tolerance) {
  AdHatHexpReport report;
  const TwistedMatrixSpace outer{Matrix(ad_beta_operator(s))};
  report.lhs = ad_hat(s, hexp(s, x));
  report.rhs = hexp(outer, ad_hat_lie(s, x));
  report.residual = residual(report.lhs, report.rhs);
  report.pass = report.residual <= tolerance;
  return report;
}

QAlgebra gl_to_algebra(const TwistedMatrixSpace& s) {
  const QMatrix& beta = s.beta_input().exact();
  const QMatrix beta_inv = inverse(beta);
  const std::size_t m = beta.rows();
  const std::size_t n = m * m;
  auto basis = [m](std::size_t idx) {
    QMatrix e(m, m);
    e(idx % m, idx / m) = 1;
    return e;
  };
  QMatrix phi(n, n);
  for (std::size_t idx = 0; idx < n; ++idx) phi.set_column(idx, flatten(beta * basis(idx) * beta_inv));
  std::vector<std::string> labels;
  for (std::size_t idx = 0; idx < n; ++idx)
    labels.push_back("E" + std::to_string(idx % m + 1) + std::to_string(idx / m + 1));
  return QAlgebra::from_basis_brackets(
      n,
      [&](std::size_t i, std::size_t j) {
        const QMatrix a = basis(i);
        const QMatrix b = basis(j);
        return flatten(QMatrix(beta * a * beta_inv * b * beta_inv - beta * b * beta_inv * a * beta_inv));
      },
      std::move(phi), std::move(labels));
}

RMatrix random_matrix(std::size_t m, std::mt19937_64& rng, double scale) {
  std::uniform_real_distribution<double> dist(-scale, scale);
  RMatrix a(m, m);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < m; ++c) a(r, c) = dist(rng);
  return a;
}

RMatrix random_invertible(std::size_t m, std::mt19937_64& rng) {
  for (;;) {
    RMatrix a = random_matrix(m, rng);
    if (std::abs(determinant(a)) >= 0.1) return a;
  }
}

}  // namespace homlie
