#pragma once

// Derivations and automorphisms of a regular Hom-Lie algebra, with the
// twisted conjugation Ad_{phi^-1} D = phi^-1 D phi:
//
//   D is a derivation    iff  D[x,y] = [phi x, phi^-1 D phi y] + [phi^-1 D phi x, phi y]
//   T is an automorphism iff  T[x,y] = [phi^-1 T phi x, phi^-1 T phi y]
//
// Integrating a derivation gives Hexp(tD) = phi e^{t D phi^-1}, which is an
// automorphism for every t exactly when D is a derivation.

#include <cstddef>
#include <vector>

#include "homlie/algebra.hpp"

namespace homlie {

template <class F>
Verdict<F> is_derivation(const HomLieAlgebra<F>& alg, const DenseMatrix<F>& d,
                         double tolerance = default_tolerance<F>());

struct DerivationSpace {
  QAlgebra alg;
  std::vector<QMatrix> basis;        // spans Der(g)
  std::vector<QMatrix> inner_basis;  // spans InnDer(g) = span{ad(e_i)}
  std::size_t dim = 0;
  std::size_t inner_dim = 0;
  std::size_t outer_dim = 0;
};

/// Exact nullspace of the stacked derivation identity (n^2 unknowns, one
/// equation per basis pair i < j and output coordinate). Throws
/// not_regular / not_multiplicative.
DerivationSpace derivation_space(const QAlgebra& alg);

struct DerAlgebraReport {
  Verdict<Rational> bracket_closed;  // [D1, D2]_phi is a derivation
  Verdict<Rational> twist_closed;    // phi D1 phi^-1 is a derivation
  bool all_pass() const { return bracket_closed.pass && twist_closed.pass; }
};

/// Closure of Der(g) under [.,.]_phi and Ad_phi. Throws not_derivation when
/// D1 or D2 is not a derivation.
DerAlgebraReport der_algebra_check(const QAlgebra& alg, const QMatrix& d1, const QMatrix& d2);

struct LieCorrespondence {
  bool hom_derivation = false;  // D in Der(g, [.,.], phi)
  bool lie_derivation = false;  // D phi^-1 in Der(g, [.,.]_Lie)
  bool agree() const { return hom_derivation == lie_derivation; }
};
LieCorrespondence derivation_lie_correspondence(const QAlgebra& alg, const QMatrix& d);

/// Throws singular_matrix when T is not invertible.
template <class F>
Verdict<F> is_automorphism(const HomLieAlgebra<F>& alg, const DenseMatrix<F>& t,
                           double tolerance = default_tolerance<F>());

struct AutGroupOps {
  QMatrix product;      // T1 <> T2 = phi T1 phi^-1 T2 phi^-1
  QMatrix inverse;      // phi T1^-1 phi
  QMatrix twist_image;  // phi T1 phi^-1
  bool product_is_aut = false;
  bool inverse_is_aut = false;
  bool twist_is_aut = false;
  bool unit_law = false;  // T1 <> phi = phi T1 phi^-1
  bool all_pass() const { return product_is_aut && inverse_is_aut && twist_is_aut && unit_law; }
};
/// Throws not_automorphism when T1 or T2 is not an automorphism.
AutGroupOps aut_group_ops(const QAlgebra& alg, const QMatrix& t1, const QMatrix& t2);

/// Automorphism tolerance for float results of integrate_derivation.
inline constexpr double kAutomorphismTolerance = 1e-8;

/// phi e^{t D phi^-1}, without checking that D is a derivation.
RMatrix twisted_flow(const QAlgebra& alg, const QMatrix& d, double t);
/// twisted_flow after verifying D is a derivation (not_derivation otherwise).
RMatrix integrate_derivation(const QAlgebra& alg, const QMatrix& d, double t);

}  // namespace homlie
