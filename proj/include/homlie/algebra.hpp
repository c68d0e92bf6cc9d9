#pragma once

// Regular Hom-Lie algebras on a fixed basis: a skew bracket given by
// structure constants [e_i, e_j] = sum_k c_ij^k e_k and a twist matrix phi.
//
// Multiplicativity (phi[x,y] = [phi x, phi y]) and the Hom-Jacobi identity
// are verdicts of check_axioms, not construction invariants, so
// non-multiplicative examples such as q-deformed sl2 can be represented.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "homlie/exactnum.hpp"

namespace homlie {

template <class F>
struct BracketEntry {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;
  F value{};
};

template <class F>
class HomLieAlgebra {
 public:
  HomLieAlgebra() = default;

  /// `entries` lists [e_i, e_j] with i < j only; the i > j half is implied
  /// by skew-symmetry. Duplicate (i, j, k) triples are rejected.
  HomLieAlgebra(std::size_t dim, const std::vector<BracketEntry<F>>& entries, DenseMatrix<F> phi,
                std::vector<std::string> labels = {});

  /// Builds the algebra from a function giving [e_i, e_j] for i < j.
  static HomLieAlgebra from_basis_brackets(std::size_t dim, const std::function<Vec<F>(std::size_t, std::size_t)>& br,
                                           DenseMatrix<F> phi, std::vector<std::string> labels = {});

  std::size_t dim() const noexcept { return dim_; }
  const DenseMatrix<F>& phi() const noexcept { return phi_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::string label(std::size_t i) const;

  const F& constant(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * dim_ + j) * dim_ + k]; }

  /// Nonzero structure constants with i < j, ordered by (i, j, k).
  std::vector<BracketEntry<F>> brackets() const;

  bool is_regular() const;
  bool same_constants(const HomLieAlgebra& other) const { return dim_ == other.dim_ && c_ == other.c_; }

  /// Same basis and constants with a different twist.
  HomLieAlgebra with_phi(DenseMatrix<F> phi) const;

  template <class G>
  HomLieAlgebra<G> cast() const {
    std::vector<BracketEntry<G>> out;
    for (const auto& e : brackets()) {
      if constexpr (std::is_same_v<F, Rational> && std::is_same_v<G, double>)
        out.push_back({e.i, e.j, e.k, e.value.get_d()});
      else
        out.push_back({e.i, e.j, e.k, G(e.value)});
    }
    return HomLieAlgebra<G>(dim_, out, phi_.template cast<G>(), labels_);
  }

  friend bool operator==(const HomLieAlgebra& a, const HomLieAlgebra& b) {
    return a.dim_ == b.dim_ && a.c_ == b.c_ && a.phi_ == b.phi_;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<F> c_;  // dense n^3 tensor, skew in (i, j)
  DenseMatrix<F> phi_;
  std::vector<std::string> labels_;
};

using QAlgebra = HomLieAlgebra<Rational>;
using RAlgebra = HomLieAlgebra<double>;

/// One failing instance of an identity, with both sides evaluated.
template <class F>
struct Witness {
  std::vector<std::size_t> indices;
  Vec<F> lhs;
  Vec<F> rhs;
};

template <class F>
struct Verdict {
  bool pass = true;
  /// Max-abs discrepancy over everything checked (0 in exact mode on pass).
  double residual = 0.0;
  std::optional<Witness<F>> witness;
};

template <class F>
struct AxiomReport {
  Verdict<F> skew;
  Verdict<F> multiplicative;
  Verdict<F> hom_jacobi;
  Verdict<F> regular;

  bool all_pass() const { return skew.pass && multiplicative.pass && hom_jacobi.pass && regular.pass; }
};

template <class F>
struct MorphismReport {
  Verdict<F> weak_hom;
  /// Weak homomorphism plus f o phi_src = phi_dst o f.
  Verdict<F> hom;
};

/// Default comparison tolerance for a field: exact equality for rationals.
template <class F>
constexpr double default_tolerance() {
  return std::is_same_v<F, Rational> ? 0.0 : kResidualTolerance;
}

template <class F>
Vec<F> bracket(const HomLieAlgebra<F>& alg, const Vec<F>& x, const Vec<F>& y);
template <class F>
Vec<F> basis_bracket(const HomLieAlgebra<F>& alg, std::size_t i, std::size_t j);

template <class F>
AxiomReport<F> check_axioms(const HomLieAlgebra<F>& alg, double tolerance = default_tolerance<F>());
template <class F>
bool is_multiplicative(const HomLieAlgebra<F>& alg, double tolerance = default_tolerance<F>());

/// [x, y]_Lie = [phi^-1 x, phi^-1 y]; the result carries phi = I.
/// Throws not_regular / not_multiplicative.
QAlgebra induced_lie(const QAlgebra& alg);

/// [x, y]_new = phi_new [x, y] on a Lie algebra (phi = I, Jacobi holds).
/// Throws not_automorphism when phi_new does not preserve the bracket or is
/// singular, bad_parameter when `lie` is not a Lie algebra.
QAlgebra yau_twist(const QAlgebra& lie, const QMatrix& phi_new);

/// Matrix of y -> [x, y]; column j is [x, e_j].
template <class F>
DenseMatrix<F> ad(const HomLieAlgebra<F>& alg, const Vec<F>& x);

/// Basis (as columns) of { x : [e_j, x] = 0 for all j }.
QMatrix center(const QAlgebra& alg);

/// Weak homomorphism: phi_dst f[x,y] = [f phi_src x, f phi_src y]. Also
/// reports the homomorphism verdict (adds f phi_src = phi_dst f).
template <class F>
MorphismReport<F> check_weak_hom(const DenseMatrix<F>& f, const HomLieAlgebra<F>& src, const HomLieAlgebra<F>& dst,
                                 double tolerance = default_tolerance<F>());

// --- Named algebras -------------------------------------------------------

QAlgebra abelian(std::size_t dim);
/// sl2 on (h, e, f): [h,e] = 2e, [h,f] = -2f, [e,f] = h, phi = I.
QAlgebra sl2();
/// The 2-dimensional nonabelian Lie algebra [x, y] = y.
QAlgebra affine_line();
/// sl2 twisted by the automorphism diag(1, lambda, 1/lambda) on (h, e, f).
QAlgebra yau_twisted_sl2(const Rational& lambda);
/// Block sum; brackets between the summands vanish.
QAlgebra direct_sum(const QAlgebra& a, const QAlgebra& b);
/// q-deformed sl2 on (e, h, f): [e,f] = (1+q)/2 h, [h,e] = 2e,
/// [h,f] = -2q f, alpha = diag((1/q + 1)/2, 1, (q + 1)/2).
/// Throws bad_parameter for q = 0 or q = -1.
QAlgebra q_sl2(const Rational& q);

}  // namespace homlie
