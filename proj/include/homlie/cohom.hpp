#pragma once

// Representations of a Hom-Lie algebra and the cochain complex
// C^k(g, V) = Hom(wedge^k g, V) with the twisted coboundary
//
//   (df)(x_1..x_{k+1}) = sum_i (-1)^{i+1} rho(x_i) f(phi^-1 x_1, .., ^i, .., phi^-1 x_{k+1})
//                      + sum_{i<j} (-1)^{i+j} beta f([phi^-2 x_i, phi^-2 x_j],
//                                                    phi^-1 x_1, .., ^i, .., ^j, ..)
//
// Cochains are stored on sorted index tuples; reordering arguments into
// sorted position contributes the permutation sign.

#include <cstddef>
#include <vector>

#include "homlie/algebra.hpp"

namespace homlie {

template <class F>
struct Representation {
  HomLieAlgebra<F> alg;
  std::size_t vdim = 0;
  std::vector<DenseMatrix<F>> rho;  // rho(e_i), one per basis vector
  DenseMatrix<F> beta;

  /// rho(x) = sum_i x_i rho(e_i)
  DenseMatrix<F> action(const Vec<F>& x) const;
};

using QRepresentation = Representation<Rational>;

template <class F>
struct RepresentationReport {
  Verdict<F> twist_compatible;  // rho(phi x) beta = beta rho(x)
  Verdict<F> bracket_compatible;  // rho([x,y]) beta = rho(phi x) rho(y) - rho(phi y) rho(x)
  bool all_pass() const { return twist_compatible.pass && bracket_compatible.pass; }
};

/// Both defining identities on all basis vectors / pairs. Matrix-valued
/// sides are compared through their column-major flattening.
template <class F>
RepresentationReport<F> check_representation(const Representation<F>& rep, double tolerance = default_tolerance<F>());

/// rho = ad, beta = phi. Throws not_regular / not_multiplicative.
QRepresentation adjoint_rep(const QAlgebra& alg);
/// One-dimensional carrier, rho = 0, beta = 1.
QRepresentation trivial_rep(const QAlgebra& alg);

/// Index map between sorted k-tuples (with a carrier component) and flat
/// coordinates: flat = tuple_index * vdim + component.
class CochainSpace {
 public:
  CochainSpace(std::size_t n, std::size_t k, std::size_t vdim);

  std::size_t degree() const noexcept { return k_; }
  std::size_t dimension() const noexcept { return tuples_.size() * vdim_; }
  const std::vector<std::vector<std::size_t>>& tuples() const noexcept { return tuples_; }
  /// Position of a sorted, repetition-free tuple.
  std::size_t index_of(const std::vector<std::size_t>& sorted_tuple) const;

 private:
  std::size_t n_;
  std::size_t k_;
  std::size_t vdim_;
  std::vector<std::vector<std::size_t>> tuples_;
};

/// Matrix of d: C^k -> C^{k+1} (rows: C^{k+1}, columns: C^k).
/// Throws not_regular / not_multiplicative / dimension_mismatch.
QMatrix coboundary_matrix(const QRepresentation& rep, std::size_t k);

struct DSquaredReport {
  bool pass = true;
  std::size_t nonzero_entries = 0;
};
/// d_{k+1} d_k = 0, exactly.
DSquaredReport d_squared_check(const QRepresentation& rep, std::size_t k);

struct CohomologyDims {
  std::size_t k = 0;
  std::size_t cocycles = 0;    // dim Z^k
  std::size_t coboundaries = 0;  // dim B^k
  std::size_t cohomology = 0;  // dim H^k
};

/// (Z^k, B^k, H^k) for k = 0..kmax. kmax must not exceed dim g
/// (bad_parameter). Throws complex_not_closed if some d_k d_{k-1} != 0.
std::vector<CohomologyDims> cohomology_dims(const QRepresentation& rep, std::size_t kmax);

}  // namespace homlie
