#pragma once

// The matrix Hom-Lie group (GL(V), <>, beta, Ad_beta) and its Hom-Lie
// algebra (gl(V), [.,.]_beta, Ad_beta):
//
//   A <> B      = beta A beta^-1 B beta^-1
//   [A, B]_beta = beta A beta^-1 B beta^-1 - beta B beta^-1 A beta^-1
//   Ad_beta(A)  = beta A beta^-1
//   hexp(A)     = beta e^{A beta^-1}
//
// Differentials of group maps are taken by central differences along
// matrix curves; linear maps on gl(V) are materialised as m^2 x m^2
// matrices in the column-major elementary basis (E11, E21, ..., E12, ...).

#include <cstddef>
#include <random>
#include <utility>
#include <vector>

#include "homlie/algebra.hpp"
#include "homlie/exactnum.hpp"

namespace homlie {

/// Step used for first derivatives of group maps (Âd).
inline constexpr double kAdStep = 1e-5;
/// Step used for the derivative of Âd along hexp(sX).
inline constexpr double kInfinitesimalStep = 1e-4;

class TwistedMatrixSpace {
 public:
  /// Throws singular_matrix when beta is not invertible.
  explicit TwistedMatrixSpace(Matrix beta);

  std::size_t dim() const noexcept { return beta_.rows(); }
  /// beta as given (exact or approx).
  const Matrix& beta_input() const noexcept { return input_; }
  const RMatrix& beta() const noexcept { return beta_; }
  const RMatrix& beta_inv() const noexcept { return beta_inv_; }

  /// beta^k for any integer k.
  RMatrix beta_power(int k) const;

 private:
  Matrix input_;
  RMatrix beta_;
  RMatrix beta_inv_;
};

RMatrix gl_bracket(const TwistedMatrixSpace& s, const RMatrix& a, const RMatrix& b);
/// Ad_{beta^k}(A) = beta^k A beta^-k; k = 1 is the twist.
RMatrix gl_ad_beta(const TwistedMatrixSpace& s, const RMatrix& a, int k = 1);

/// Throws singular_matrix when either factor is singular.
RMatrix group_product(const TwistedMatrixSpace& s, const RMatrix& a, const RMatrix& b);
/// Hom-inverse beta A^-1 beta.
RMatrix group_inverse(const TwistedMatrixSpace& s, const RMatrix& a);

struct AxiomResidual {
  bool pass = true;
  double residual = 0.0;
};

struct HomGroupReport {
  AxiomResidual twist_multiplicative;  // Ad(A <> B) = Ad(A) <> Ad(B)
  AxiomResidual hom_associative;       // Ad(A) <> (B <> C) = (A <> B) <> Ad(C)
  AxiomResidual hom_unit;              // A <> beta = beta <> A = Ad(A)
  AxiomResidual inverse;               // A <> A^-1 = A^-1 <> A = beta

  bool all_pass() const {
    return twist_multiplicative.pass && hom_associative.pass && hom_unit.pass && inverse.pass;
  }
};

/// Checks the Hom-group axioms over all sample pairs and triples. Needs at
/// least three samples (bad_parameter); throws singular_matrix on a
/// singular sample.
HomGroupReport check_homgroup(const TwistedMatrixSpace& s, const std::vector<RMatrix>& samples,
                              double tolerance = kResidualTolerance);

RMatrix hexp(const TwistedMatrixSpace& s, const RMatrix& a);

struct OneParamReport {
  bool pass = true;
  double residual = 0.0;
  std::pair<double, double> worst{0.0, 0.0};
};

/// sigma(t + s) against (Ad_{beta^-1} sigma(t)) <> (Ad_{beta^-1} sigma(s)),
/// with sigma(t) = hexp(tA).
OneParamReport one_param_check(const TwistedMatrixSpace& s, const RMatrix& a,
                               const std::vector<std::pair<double, double>>& ts,
                               double tolerance = kResidualTolerance);

/// Omega(t, s) evaluated literally:
/// ((Ad_{beta^-3}(hexp(sA) <> hexp(tB))) <> Ad_{beta^-2}(hexp(-sA))) <> Ad_{beta^-1}(hexp(-tB)).
RMatrix omega_nested(const TwistedMatrixSpace& s, const RMatrix& a, const RMatrix& b, double t, double s_param);
/// Omega(t, s) - beta from the collapsed form
/// beta (e^{sK} e^{tL} e^{-sK} e^{-tL} - I), K = A beta^-1, L = B beta^-1,
/// computed as beta (PQ - QP) e^{-sK} e^{-tL} with P = e^{sK} - I and
/// Q = e^{tL} - I so the offset keeps relative accuracy.
RMatrix omega_offset(const TwistedMatrixSpace& s, const RMatrix& a, const RMatrix& b, double t, double s_param);

struct CommutatorCheck {
  RMatrix fd_estimate;
  RMatrix closed_form;
  double residual = 0.0;
  double step = 0.0;
  /// Max discrepancy between the nested and collapsed forms of Omega over
  /// the stencil points.
  double form_residual = 0.0;
};

/// Mixed central difference of Omega at (0, 0) against gl_bracket(A, B),
/// using the collapsed form for the stencil values. Throws bad_parameter
/// unless 0 < h <= 0.1.
CommutatorCheck commutator_fd_verify(const TwistedMatrixSpace& s, const RMatrix& a, const RMatrix& b, double h);

/// True when the finite difference and both forms of Omega agree:
/// residual <= fd_tolerance and form_residual <= kResidualTolerance.
bool commutator_passes(const CommutatorCheck& check, double fd_tolerance);

/// Residuals of commutator_fd_verify at h, h/2, h/4, ...
std::vector<double> commutator_convergence(const TwistedMatrixSpace& s, const RMatrix& a, const RMatrix& b, double h,
                                           int halvings);

/// Ãd(a, b) = Ad_beta^-1(a <> b) <> a^-1 with the Hom-inverse.
RMatrix tilde_ad(const TwistedMatrixSpace& s, const RMatrix& a, const RMatrix& b);

struct ActionResidual {
  double unit = 0.0;         // Ãd(beta, x) vs Ad_beta(x)
  double composition = 0.0;  // Ãd(a <> b, x) vs Ãd(Ad a, Ad^-1(Ãd(Ad b, x)))
};
ActionResidual tilde_ad_action_residual(const TwistedMatrixSpace& s, const RMatrix& a, const RMatrix& b,
                                        const RMatrix& x);

/// Âd(a) as an m^2 x m^2 matrix: column E is
/// Ad_{beta^-1}( d/dt|0 Ãd(a, hexp(tE)) ), by central differences.
RMatrix ad_hat(const TwistedMatrixSpace& s, const RMatrix& a, double h = kAdStep);

/// d/ds|0 Âd(hexp(sX)) as an m^2 x m^2 matrix; applied to vec(Y) it
/// reproduces vec([X, Y]_beta).
RMatrix ad_hat_derivative(const TwistedMatrixSpace& s, const RMatrix& x, double h = kInfinitesimalStep);

/// The m^2 x m^2 matrix of Ad_beta acting on gl(V).
RMatrix ad_beta_operator(const TwistedMatrixSpace& s);

/// âd(X) = P^-1 (d/ds|0 Âd(hexp(sX))) P with P = ad_beta_operator(s): the
/// derivative pulled back through the twists of both Hom-Lie groups.
RMatrix ad_hat_lie(const TwistedMatrixSpace& s, const RMatrix& x, double h = kInfinitesimalStep);

struct AdHatHexpReport {
  bool pass = true;
  double residual = 0.0;
  RMatrix lhs;  // Âd(hexp(X))
  RMatrix rhs;  // Hexp(âd(X)) with twist P
};

/// Âd(hexp(X)) against the Hom-exponential of âd(X) on gl(gl(V)).
AdHatHexpReport adhat_hexp_check(const TwistedMatrixSpace& s, const RMatrix& x, double tolerance);

/// The Hom-Lie algebra (gl(V), [.,.]_beta, Ad_beta) in the column-major
/// elementary basis. Needs an exact beta (mode_error otherwise).
QAlgebra gl_to_algebra(const TwistedMatrixSpace& s);

/// Entries uniform in [-1, 1], resampled until |det| >= 0.1.
RMatrix random_invertible(std::size_t m, std::mt19937_64& rng);
/// Entries uniform in [-scale, scale].
RMatrix random_matrix(std::size_t m, std::mt19937_64& rng, double scale = 1.0);

}  // namespace homlie
