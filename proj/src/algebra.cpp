#include "homlie/algebra.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>

#include "homlie/detail/compare.hpp"

namespace homlie {

template <class F>
HomLieAlgebra<F>::HomLieAlgebra(std::size_t dim, const std::vector<BracketEntry<F>>& entries, DenseMatrix<F> phi,
                                std::vector<std::string> labels)
    : dim_(dim), c_(dim * dim * dim, F(0)), phi_(std::move(phi)), labels_(std::move(labels)) {
  if (phi_.rows() != dim_ || phi_.cols() != dim_)
    fail(ErrorCode::dimension_mismatch, "twist matrix must be dim x dim");
  if (!labels_.empty() && labels_.size() != dim_) fail(ErrorCode::dimension_mismatch, "label count must equal dim");
  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
  for (const auto& e : entries) {
    if (e.i >= dim_ || e.j >= dim_ || e.k >= dim_) fail(ErrorCode::dimension_mismatch, "bracket index out of range");
    if (e.i >= e.j) fail(ErrorCode::bad_parameter, "bracket entries must have i < j");
    if (!seen.emplace(e.i, e.j, e.k).second) fail(ErrorCode::bad_parameter, "duplicate bracket entry");
    c_[(e.i * dim_ + e.j) * dim_ + e.k] = e.value;
    c_[(e.j * dim_ + e.i) * dim_ + e.k] = -e.value;
  }
}

template <class F>
HomLieAlgebra<F> HomLieAlgebra<F>::from_basis_brackets(std::size_t dim,
                                                       const std::function<Vec<F>(std::size_t, std::size_t)>& br,
                                                       DenseMatrix<F> phi, std::vector<std::string> labels) {
  std::vector<BracketEntry<F>> entries;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j) {
      const Vec<F> v = br(i, j);
      if (v.size() != dim) fail(ErrorCode::dimension_mismatch, "bracket value has wrong length");
      for (std::size_t k = 0; k < dim; ++k)
        if (!FieldTraits<F>::is_zero(v[k])) entries.push_back({i, j, k, v[k]});
    }
  return HomLieAlgebra(dim, entries, std::move(phi), std::move(labels));
}

template <class F>
std::string HomLieAlgebra<F>::label(std::size_t i) const {
  if (i < labels_.size()) return labels_[i];
  return "e" + std::to_string(i);
}

template <class F>
std::vector<BracketEntry<F>> HomLieAlgebra<F>::brackets() const {
  std::vector<BracketEntry<F>> out;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k)
        if (!FieldTraits<F>::is_zero(constant(i, j, k))) out.push_back({i, j, k, constant(i, j, k)});
  return out;
}

template <class F>
bool HomLieAlgebra<F>::is_regular() const {
  return rank(phi_) == dim_;
}

template <class F>
HomLieAlgebra<F> HomLieAlgebra<F>::with_phi(DenseMatrix<F> phi) const {
  return HomLieAlgebra(dim_, brackets(), std::move(phi), labels_);
}

template class HomLieAlgebra<Rational>;
template class HomLieAlgebra<double>;

// --- bracket & axioms -------------------------------------------------------

template <class F>
Vec<F> basis_bracket(const HomLieAlgebra<F>& alg, std::size_t i, std::size_t j) {
  const std::size_t n = alg.dim();
  Vec<F> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = alg.constant(i, j, k);
  return out;
}

template <class F>
Vec<F> bracket(const HomLieAlgebra<F>& alg, const Vec<F>& x, const Vec<F>& y) {
  const std::size_t n = alg.dim();
  if (x.size() != n || y.size() != n) fail(ErrorCode::dimension_mismatch, "bracket arguments must have length dim");
  Vec<F> out(n, F(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (FieldTraits<F>::is_zero(x[i])) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || FieldTraits<F>::is_zero(y[j])) continue;
      const F xy = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k)
        if (!FieldTraits<F>::is_zero(alg.constant(i, j, k))) out[k] += xy * alg.constant(i, j, k);
    }
  }
  return out;
}

template <class F>
AxiomReport<F> check_axioms(const HomLieAlgebra<F>& alg, double tolerance) {
  const std::size_t n = alg.dim();
  const auto& phi = alg.phi();
  AxiomReport<F> report;

  std::vector<Vec<F>> phi_e(n);
  for (std::size_t i = 0; i < n; ++i) phi_e[i] = phi.column(i);

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Vec<F> lhs = basis_bracket(alg, i, j);
      Vec<F> rhs = scaled(F(-1), basis_bracket(alg, j, i));
      detail::record(report.skew, {i, j}, std::move(lhs), std::move(rhs), tolerance);
    }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec<F> lhs = phi.apply(basis_bracket(alg, i, j));
      Vec<F> rhs = bracket(alg, phi_e[i], phi_e[j]);
      detail::record(report.multiplicative, {i, j}, std::move(lhs), std::move(rhs), tolerance);
    }

  // The cyclic sum is alternating in (i, j, k), so i < j < k suffices, but
  // all triples are cheap and also cover a non-skew tensor.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vec<F> sum = bracket(alg, phi_e[i], basis_bracket(alg, j, k));
        sum = sum + bracket(alg, phi_e[j], basis_bracket(alg, k, i));
        sum = sum + bracket(alg, phi_e[k], basis_bracket(alg, i, j));
        detail::record(report.hom_jacobi, {i, j, k}, std::move(sum), Vec<F>(n, F(0)), tolerance);
      }

  report.regular.pass = alg.is_regular();
  return report;
}

template <class F>
bool is_multiplicative(const HomLieAlgebra<F>& alg, double tolerance) {
  const std::size_t n = alg.dim();
  const auto& phi = alg.phi();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!detail::same(phi.apply(basis_bracket(alg, i, j)), bracket(alg, phi.column(i), phi.column(j)), tolerance))
        return false;
  return true;
}

template <class F>
DenseMatrix<F> ad(const HomLieAlgebra<F>& alg, const Vec<F>& x) {
  const std::size_t n = alg.dim();
  if (x.size() != n) fail(ErrorCode::dimension_mismatch, "ad argument must have length dim");
  DenseMatrix<F> m(n, n);
  for (std::size_t j = 0; j < n; ++j) m.set_column(j, bracket(alg, x, unit_vector<F>(n, j)));
  return m;
}

template <class F>
MorphismReport<F> check_weak_hom(const DenseMatrix<F>& f, const HomLieAlgebra<F>& src, const HomLieAlgebra<F>& dst,
                                 double tolerance) {
  const std::size_t n = src.dim();
  if (f.rows() != dst.dim() || f.cols() != n) fail(ErrorCode::dimension_mismatch, "f must be dim(dst) x dim(src)");
  MorphismReport<F> report;
  const DenseMatrix<F> f_phi = f * src.phi();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec<F> lhs = dst.phi().apply(f.apply(basis_bracket(src, i, j)));
      Vec<F> rhs = bracket(dst, f_phi.column(i), f_phi.column(j));
      detail::record(report.weak_hom, {i, j}, std::move(lhs), std::move(rhs), tolerance);
    }
  report.hom = report.weak_hom;
  const DenseMatrix<F> phi_f = dst.phi() * f;
  for (std::size_t i = 0; i < n; ++i) detail::record(report.hom, {i}, f_phi.column(i), phi_f.column(i), tolerance);
  return report;
}

#define HOMLIE_INSTANTIATE(F)                                                                              \
  template Vec<F> bracket(const HomLieAlgebra<F>&, const Vec<F>&, const Vec<F>&);                          \
  template Vec<F> basis_bracket(const HomLieAlgebra<F>&, std::size_t, std::size_t);                        \
  template AxiomReport<F> check_axioms(const HomLieAlgebra<F>&, double);                                   \
  template bool is_multiplicative(const HomLieAlgebra<F>&, double);                                        \
  template DenseMatrix<F> ad(const HomLieAlgebra<F>&, const Vec<F>&);                                      \
  template MorphismReport<F> check_weak_hom(const DenseMatrix<F>&, const HomLieAlgebra<F>&,                \
                                            const HomLieAlgebra<F>&, double);

HOMLIE_INSTANTIATE(Rational)
HOMLIE_INSTANTIATE(double)
#undef HOMLIE_INSTANTIATE

// --- exact constructions --------------------------------------------------------

QAlgebra induced_lie(const QAlgebra& alg) {
  if (!alg.is_regular()) fail(ErrorCode::not_regular, "induced Lie bracket needs an invertible twist");
  if (!is_multiplicative(alg)) fail(ErrorCode::not_multiplicative, "induced Lie bracket needs a multiplicative algebra");
  const QMatrix phi_inv = inverse(alg.phi());
  return QAlgebra::from_basis_brackets(
      alg.dim(), [&](std::size_t i, std::size_t j) { return bracket(alg, phi_inv.column(i), phi_inv.column(j)); },
      QMatrix::identity(alg.dim()), alg.labels());
}

QAlgebra yau_twist(const QAlgebra& lie, const QMatrix& phi_new) {
  const std::size_t n = lie.dim();
  if (lie.phi() != QMatrix::identity(n)) fail(ErrorCode::bad_parameter, "yau_twist expects a Lie algebra (phi = I)");
  if (!check_axioms(lie).hom_jacobi.pass) fail(ErrorCode::bad_parameter, "yau_twist input violates the Jacobi identity");
  if (phi_new.rows() != n || phi_new.cols() != n) fail(ErrorCode::dimension_mismatch, "twist must be dim x dim");
  if (rank(phi_new) != n) fail(ErrorCode::not_automorphism, "twist is singular");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const QVector lhs = phi_new.apply(basis_bracket(lie, i, j));
      const QVector rhs = bracket(lie, phi_new.column(i), phi_new.column(j));
      if (lhs != rhs) {
        std::ostringstream os;
        os << "twist does not preserve the bracket on (" << lie.label(i) << ", " << lie.label(j) << ")";
        fail(ErrorCode::not_automorphism, os.str());
      }
    }
  return QAlgebra::from_basis_brackets(
      n, [&](std::size_t i, std::size_t j) { return phi_new.apply(basis_bracket(lie, i, j)); }, phi_new, lie.labels());
}

QMatrix center(const QAlgebra& alg) {
  const std::size_t n = alg.dim();
  // Row (j, k), column i: coefficient of x_i in ([e_j, x])_k.
  QMatrix system(n * n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i) system(j * n + k, i) = alg.constant(j, i, k);
  return nullspace(system);
}

// --- named algebras ---------------------------------------------------------

QAlgebra abelian(std::size_t dim) { return QAlgebra(dim, {}, QMatrix::identity(dim)); }

QAlgebra sl2() {
  // basis order (h, e, f)
  return QAlgebra(3, {{0, 1, 1, 2}, {0, 2, 2, -2}, {1, 2, 0, 1}}, QMatrix::identity(3), {"h", "e", "f"});
}

QAlgebra affine_line() { return QAlgebra(2, {{0, 1, 1, 1}}, QMatrix::identity(2), {"x", "y"}); }

QAlgebra yau_twisted_sl2(const Rational& lambda) {
  if (sgn(lambda) == 0) fail(ErrorCode::bad_parameter, "lambda must be nonzero");
  return yau_twist(sl2(), QMatrix::diagonal({Rational(1), lambda, Rational(1) / lambda}));
}

QAlgebra direct_sum(const QAlgebra& a, const QAlgebra& b) {
  const std::size_t na = a.dim();
  const std::size_t n = na + b.dim();
  std::vector<BracketEntry<Rational>> entries = a.brackets();
  for (const auto& e : b.brackets()) entries.push_back({e.i + na, e.j + na, e.k + na, e.value});
  QMatrix phi(n, n);
  for (std::size_t r = 0; r < na; ++r)
    for (std::size_t c = 0; c < na; ++c) phi(r, c) = a.phi()(r, c);
  for (std::size_t r = 0; r < b.dim(); ++r)
    for (std::size_t c = 0; c < b.dim(); ++c) phi(na + r, na + c) = b.phi()(r, c);
  std::vector<std::string> labels;
  if (!a.labels().empty() || !b.labels().empty()) {
    for (std::size_t i = 0; i < na; ++i) labels.push_back(a.label(i));
    for (std::size_t i = 0; i < b.dim(); ++i) labels.push_back(b.label(i) + "'");
  }
  return QAlgebra(n, entries, std::move(phi), std::move(labels));
}

QAlgebra q_sl2(const Rational& q) {
  if (sgn(q) == 0 || q == -1) fail(ErrorCode::bad_parameter, "q must differ from 0 and -1");
  // basis order (e, h, f)
  const Rational one(1);
  const Rational half(1, 2);
  std::vector<BracketEntry<Rational>> entries = {
      {0, 1, 0, Rational(-2)},       // [e,h] = -2e
      {0, 2, 1, (one + q) * half},   // [e,f] = (1+q)/2 h
      {1, 2, 2, Rational(-2) * q},   // [h,f] = -2q f
  };
  QMatrix alpha = QMatrix::diagonal({(one / q + one) * half, one, (q + one) * half});
  return QAlgebra(3, entries, std::move(alpha), {"e", "h", "f"});
}

}  // namespace homlie
