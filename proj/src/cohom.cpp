#include "homlie/cohom.hpp"

#include <algorithm>
#include <map>

#include "homlie/detail/compare.hpp"

namespace homlie {

template <class F>
DenseMatrix<F> Representation<F>::action(const Vec<F>& x) const {
  if (x.size() != rho.size()) fail(ErrorCode::dimension_mismatch, "representation argument has wrong length");
  DenseMatrix<F> out(vdim, vdim);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!FieldTraits<F>::is_zero(x[i])) out += rho[i] * x[i];
  return out;
}

template struct Representation<Rational>;
template struct Representation<double>;

namespace {

template <class F>
void validate_shapes(const Representation<F>& rep) {
  if (rep.rho.size() != rep.alg.dim())
    fail(ErrorCode::dimension_mismatch, "representation needs one matrix per basis vector");
  for (const auto& m : rep.rho)
    if (m.rows() != rep.vdim || m.cols() != rep.vdim)
      fail(ErrorCode::dimension_mismatch, "rho matrices must be vdim x vdim");
  if (rep.beta.rows() != rep.vdim || rep.beta.cols() != rep.vdim)
    fail(ErrorCode::dimension_mismatch, "beta must be vdim x vdim");
}

void require_regular_multiplicative(const QAlgebra& alg) {
  if (!alg.is_regular()) fail(ErrorCode::not_regular, "algebra twist is not invertible");
  if (!is_multiplicative(alg)) fail(ErrorCode::not_multiplicative, "algebra is not multiplicative");
}

}  // namespace

template <class F>
RepresentationReport<F> check_representation(const Representation<F>& rep, double tolerance) {
  validate_shapes(rep);
  const std::size_t n = rep.alg.dim();
  const auto& phi = rep.alg.phi();
  RepresentationReport<F> report;
  for (std::size_t i = 0; i < n; ++i) {
    const DenseMatrix<F> lhs = rep.action(phi.column(i)) * rep.beta;
    const DenseMatrix<F> rhs = rep.beta * rep.rho[i];
    detail::record(report.twist_compatible, {i}, flatten(lhs), flatten(rhs), tolerance);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const DenseMatrix<F> lhs = rep.action(basis_bracket(rep.alg, i, j)) * rep.beta;
      const DenseMatrix<F> rhs =
          rep.action(phi.column(i)) * rep.rho[j] - rep.action(phi.column(j)) * rep.rho[i];
      detail::record(report.bracket_compatible, {i, j}, flatten(lhs), flatten(rhs), tolerance);
    }
  return report;
}

template RepresentationReport<Rational> check_representation(const Representation<Rational>&, double);
template RepresentationReport<double> check_representation(const Representation<double>&, double);

QRepresentation adjoint_rep(const QAlgebra& alg) {
  require_regular_multiplicative(alg);
  QRepresentation rep{alg, alg.dim(), {}, alg.phi()};
  for (std::size_t i = 0; i < alg.dim(); ++i) rep.rho.push_back(ad(alg, unit_vector<Rational>(alg.dim(), i)));
  return rep;
}

QRepresentation trivial_rep(const QAlgebra& alg) {
  QRepresentation rep{alg, 1, {}, QMatrix::identity(1)};
  rep.rho.assign(alg.dim(), QMatrix(1, 1));
  return rep;
}

// --- cochains ----------------------------------------------------------------

CochainSpace::CochainSpace(std::size_t n, std::size_t k, std::size_t vdim) : n_(n), k_(k), vdim_(vdim) {
  if (k > n) return;
  std::vector<std::size_t> t(k);
  for (std::size_t i = 0; i < k; ++i) t[i] = i;
  for (;;) {
    tuples_.push_back(t);
    // next combination in lexicographic order
    std::size_t i = k;
    while (i > 0 && t[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++t[i - 1];
    for (std::size_t j = i; j < k; ++j) t[j] = t[j - 1] + 1;
  }
}

std::size_t CochainSpace::index_of(const std::vector<std::size_t>& sorted_tuple) const {
  auto it = std::lower_bound(tuples_.begin(), tuples_.end(), sorted_tuple);
  if (it == tuples_.end() || *it != sorted_tuple) fail(ErrorCode::dimension_mismatch, "tuple not in cochain basis");
  return static_cast<std::size_t>(it - tuples_.begin());
}

namespace {

// Adds coef * op * f(args...) into the row block of one output tuple, as a
// linear function of the cochain f: every combination of basis indices drawn
// from the argument vectors contributes to the column block of its sorted
// tuple, with the sign of the sorting permutation.
class CoboundaryAssembler {
 public:
  CoboundaryAssembler(const CochainSpace& src, std::size_t vdim, QMatrix& out, std::size_t row_block)
      : src_(src), vdim_(vdim), out_(out), row_block_(row_block) {}

  void add(const Rational& coef, const QMatrix& op, const std::vector<QVector>& args) {
    std::vector<std::size_t> picked;
    recurse(coef, op, args, picked);
  }

 private:
  void recurse(const Rational& coef, const QMatrix& op, const std::vector<QVector>& args,
               std::vector<std::size_t>& picked) {
    if (picked.size() == args.size()) {
      std::vector<std::size_t> sorted = picked;
      int sign = 1;
      // insertion sort, counting transpositions
      for (std::size_t i = 1; i < sorted.size(); ++i)
        for (std::size_t j = i; j > 0 && sorted[j - 1] > sorted[j]; --j) {
          std::swap(sorted[j - 1], sorted[j]);
          sign = -sign;
        }
      const std::size_t col_block = src_.index_of(sorted);
      const Rational c = sign > 0 ? coef : Rational(-coef);
      for (std::size_t r = 0; r < vdim_; ++r)
        for (std::size_t s = 0; s < vdim_; ++s)
          if (sgn(op(r, s)) != 0) out_(row_block_ * vdim_ + r, col_block * vdim_ + s) += c * op(r, s);
      return;
    }
    const QVector& v = args[picked.size()];
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (sgn(v[i]) == 0) continue;
      if (std::find(picked.begin(), picked.end(), i) != picked.end()) continue;  // alternating
      picked.push_back(i);
      recurse(coef * v[i], op, args, picked);
      picked.pop_back();
    }
  }

  const CochainSpace& src_;
  std::size_t vdim_;
  QMatrix& out_;
  std::size_t row_block_;
};

}  // namespace

QMatrix coboundary_matrix(const QRepresentation& rep, std::size_t k) {
  validate_shapes(rep);
  require_regular_multiplicative(rep.alg);
  const std::size_t n = rep.alg.dim();
  const std::size_t v = rep.vdim;
  const CochainSpace src(n, k, v);
  const CochainSpace dst(n, k + 1, v);
  QMatrix out(dst.dimension(), src.dimension());
  if (dst.dimension() == 0 || src.dimension() == 0) return out;

  const QMatrix phi_inv = inverse(rep.alg.phi());
  const QMatrix phi_inv2 = phi_inv * phi_inv;
  std::vector<QVector> inv1(n), inv2(n);
  for (std::size_t i = 0; i < n; ++i) {
    inv1[i] = phi_inv.column(i);
    inv2[i] = phi_inv2.column(i);
  }

  for (std::size_t row = 0; row < dst.tuples().size(); ++row) {
    const auto& x = dst.tuples()[row];  // x_1..x_{k+1} as basis indices
    CoboundaryAssembler acc(src, v, out, row);
    for (std::size_t i = 0; i <= k; ++i) {
      std::vector<QVector> args;
      for (std::size_t l = 0; l <= k; ++l)
        if (l != i) args.push_back(inv1[x[l]]);
      // (-1)^{i+1} with 1-based i is + for the first argument
      acc.add(Rational(i % 2 == 0 ? 1 : -1), rep.rho[x[i]], args);
    }
    for (std::size_t i = 0; i <= k; ++i)
      for (std::size_t j = i + 1; j <= k; ++j) {
        std::vector<QVector> args;
        args.push_back(bracket(rep.alg, inv2[x[i]], inv2[x[j]]));
        for (std::size_t l = 0; l <= k; ++l)
          if (l != i && l != j) args.push_back(inv1[x[l]]);
        acc.add(Rational((i + j) % 2 == 0 ? 1 : -1), rep.beta, args);
      }
  }
  return out;
}

DSquaredReport d_squared_check(const QRepresentation& rep, std::size_t k) {
  const QMatrix prod = coboundary_matrix(rep, k + 1) * coboundary_matrix(rep, k);
  DSquaredReport report;
  for (const auto& x : prod.entries())
    if (sgn(x) != 0) ++report.nonzero_entries;
  report.pass = report.nonzero_entries == 0;
  return report;
}

std::vector<CohomologyDims> cohomology_dims(const QRepresentation& rep, std::size_t kmax) {
  const std::size_t n = rep.alg.dim();
  if (kmax > n) fail(ErrorCode::bad_parameter, "max degree exceeds the algebra dimension");
  std::vector<QMatrix> d;
  for (std::size_t k = 0; k <= kmax; ++k) d.push_back(coboundary_matrix(rep, k));
  for (std::size_t k = 1; k <= kmax; ++k)
    if (!(d[k] * d[k - 1]).is_zero())
      fail(ErrorCode::complex_not_closed, "d_" + std::to_string(k) + " d_" + std::to_string(k - 1) + " != 0");

  std::vector<CohomologyDims> out;
  std::size_t prev_rank = 0;
  for (std::size_t k = 0; k <= kmax; ++k) {
    const std::size_t rk = rank(d[k]);
    CohomologyDims row;
    row.k = k;
    row.cocycles = d[k].cols() - rk;
    row.coboundaries = prev_rank;
    row.cohomology = row.cocycles - row.coboundaries;
    out.push_back(row);
    prev_rank = rk;
  }
  return out;
}

}  // namespace homlie
