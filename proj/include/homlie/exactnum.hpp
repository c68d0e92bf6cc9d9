#pragma once

// Field abstraction and the dense linear-algebra kernel used by every other
// module. Two fields are supported: exact rationals (GMP) and double.
//
// Algorithms are written once against DenseMatrix<F>; the mode-tagged
// Matrix/Scalar wrappers exist for the I/O boundary where the field is only
// known at run time.

#include <gmpxx.h>

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "homlie/error.hpp"

namespace homlie {

using Integer = mpz_class;
using Rational = mpq_class;

enum class Mode { exact, approx };

const char* to_string(Mode mode) noexcept;

/// Pivot threshold for approx-mode rank, relative to the largest pivot.
inline constexpr double kRankTolerance = 1e-10;
/// Residual tolerance for approx-mode identities (M*M^-1 = I, M*b = 0, ...).
inline constexpr double kResidualTolerance = 1e-9;

template <class F>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
  static constexpr Mode mode = Mode::exact;
  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
  static double to_double(const Rational& x) { return x.get_d(); }
};

template <>
struct FieldTraits<double> {
  static constexpr Mode mode = Mode::approx;
  static bool is_zero(double x) { return x == 0.0; }
  static double to_double(double x) { return x; }
};

template <class F>
using Vec = std::vector<F>;
using QVector = Vec<Rational>;
using RVector = Vec<double>;

/// Dense row-major matrix over F.
template <class F>
class DenseMatrix {
 public:
  using value_type = F;

  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, F(0)) {}
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<F> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_)
      fail(ErrorCode::dimension_mismatch, "matrix entry count does not match rows*cols");
  }
  DenseMatrix(std::initializer_list<std::initializer_list<F>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) fail(ErrorCode::dimension_mismatch, "ragged matrix literal");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }
  static DenseMatrix diagonal(std::span<const F> diag) {
    DenseMatrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
  }
  static DenseMatrix diagonal(std::initializer_list<F> diag) {
    return diagonal(std::span<const F>(diag.begin(), diag.size()));
  }
  /// Builds a matrix whose columns are the given vectors (all of length `rows`).
  static DenseMatrix from_columns(std::size_t rows, const std::vector<Vec<F>>& columns) {
    DenseMatrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) m.set_column(c, columns[c]);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  F& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const F& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const F> entries() const noexcept { return data_; }

  Vec<F> column(std::size_t c) const {
    Vec<F> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
  }
  void set_column(std::size_t c, std::span<const F> v) {
    if (v.size() != rows_) fail(ErrorCode::dimension_mismatch, "column length mismatch");
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
  }

  DenseMatrix transpose() const {
    DenseMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!FieldTraits<F>::is_zero(x)) return false;
    return true;
  }

  /// Matrix-vector product.
  Vec<F> apply(std::span<const F> v) const {
    if (v.size() != cols_) fail(ErrorCode::dimension_mismatch, "matrix-vector size mismatch");
    Vec<F> out(rows_, F(0));
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        if (!FieldTraits<F>::is_zero(v[c])) out[r] += (*this)(r, c) * v[c];
    return out;
  }

  template <class G>
  DenseMatrix<G> cast() const {
    std::vector<G> out;
    out.reserve(data_.size());
    for (const auto& x : data_) {
      if constexpr (std::is_same_v<F, Rational> && std::is_same_v<G, double>)
        out.push_back(x.get_d());
      else
        out.push_back(G(x));
    }
    return DenseMatrix<G>(rows_, cols_, std::move(out));
  }

  DenseMatrix& operator+=(const DenseMatrix& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  DenseMatrix& operator-=(const DenseMatrix& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  DenseMatrix& operator*=(const F& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b) { return a += b; }
  friend DenseMatrix operator-(DenseMatrix a, const DenseMatrix& b) { return a -= b; }
  friend DenseMatrix operator-(DenseMatrix a) {
    for (auto& x : a.data_) x = -x;
    return a;
  }
  friend DenseMatrix operator*(const F& s, DenseMatrix a) { return a *= s; }
  friend DenseMatrix operator*(DenseMatrix a, const F& s) { return a *= s; }

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols_ != b.rows_) fail(ErrorCode::dimension_mismatch, "matrix product shape mismatch");
    DenseMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const F& aik = a(i, k);
        if (FieldTraits<F>::is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }

  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  void check_same_shape(const DenseMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) fail(ErrorCode::dimension_mismatch, "matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<F> data_;
};

using QMatrix = DenseMatrix<Rational>;
using RMatrix = DenseMatrix<double>;

// Vector helpers shared by the algebra modules.
template <class F>
Vec<F> unit_vector(std::size_t n, std::size_t i) {
  Vec<F> v(n, F(0));
  v.at(i) = F(1);
  return v;
}

template <class F>
Vec<F> operator+(Vec<F> a, const Vec<F>& b) {
  if (a.size() != b.size()) fail(ErrorCode::dimension_mismatch, "vector length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

template <class F>
Vec<F> operator-(Vec<F> a, const Vec<F>& b) {
  if (a.size() != b.size()) fail(ErrorCode::dimension_mismatch, "vector length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

template <class F>
Vec<F> scaled(const F& s, Vec<F> a) {
  for (auto& x : a) x *= s;
  return a;
}

template <class F>
bool is_zero_vector(const Vec<F>& v) {
  for (const auto& x : v)
    if (!FieldTraits<F>::is_zero(x)) return false;
  return true;
}

double max_abs(std::span<const double> xs);
inline double max_abs(const RMatrix& m) { return max_abs(m.entries()); }
/// Max-abs entrywise difference of two same-shape matrices.
double residual(const RMatrix& a, const RMatrix& b);
double residual(const RVector& a, const RVector& b);

/// Column-major flattening (E11, E21, ..., E12, ...), used wherever a
/// matrix is treated as a vector.
template <class F>
Vec<F> flatten(const DenseMatrix<F>& m) {
  Vec<F> out;
  out.reserve(m.rows() * m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(m(r, c));
  return out;
}

template <class F>
DenseMatrix<F> unflatten(std::span<const F> v, std::size_t rows, std::size_t cols) {
  if (v.size() != rows * cols) fail(ErrorCode::dimension_mismatch, "flattened length mismatch");
  DenseMatrix<F> m(rows, cols);
  for (std::size_t c = 0; c < cols; ++c)
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = v[c * rows + r];
  return m;
}

// --- Kernel --------------------------------------------------------------

/// Exact rank by fraction-free (Bareiss) elimination on the row-scaled
/// integer matrix.
std::size_t rank(const QMatrix& m);
/// Rank by complete-pivoting elimination; pivots below
/// kRankTolerance * (largest pivot) count as zero.
std::size_t rank(const RMatrix& m, double tolerance = kRankTolerance);

/// Kernel basis as columns (cols - rank of them), from the reduced row
/// echelon form: one basis vector per free column.
QMatrix nullspace(const QMatrix& m);
RMatrix nullspace(const RMatrix& m, double tolerance = kRankTolerance);

/// Throws ErrorCode::singular_matrix when rank-deficient.
QMatrix inverse(const QMatrix& m);
RMatrix inverse(const RMatrix& m, double tolerance = kRankTolerance);

Rational determinant(const QMatrix& m);
double determinant(const RMatrix& m);

/// e^M by scaling and squaring: scale until ||M/2^s||_inf <= 0.5, Taylor
/// series through the degree-18 term, then square s times.
RMatrix mat_exp(const RMatrix& m);
/// e^M - I, evaluated without forming I + (small) so that small arguments
/// keep full relative accuracy. Same scaling as mat_exp, squaring via
/// E(2X) = E(X) (E(X) + 2I).
RMatrix mat_expm1(const RMatrix& m);

double inf_norm(const RMatrix& m);

// --- Mode-tagged wrappers -------------------------------------------------

/// Parses "p/q", "p", or a plain decimal string ("0.25") into a rational in
/// lowest terms. Throws ErrorCode::parse_error.
Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& q);

class Scalar {
 public:
  Scalar() : value_(Rational(0)) {}
  explicit Scalar(Rational q) : value_(std::move(q)) { std::get<Rational>(value_).canonicalize(); }
  explicit Scalar(double x) : value_(x) {}

  Mode mode() const noexcept { return value_.index() == 0 ? Mode::exact : Mode::approx; }
  const Rational& exact() const;
  double approx() const;
  double to_double() const;
  std::string to_string() const;

  friend bool operator==(const Scalar&, const Scalar&) = default;

 private:
  std::variant<Rational, double> value_;
};

/// A matrix whose field is only known at run time. All entries share one
/// mode by construction.
class Matrix {
 public:
  Matrix() : value_(QMatrix()) {}
  Matrix(QMatrix m) : value_(std::move(m)) {}  // NOLINT(google-explicit-constructor)
  Matrix(RMatrix m) : value_(std::move(m)) {}  // NOLINT(google-explicit-constructor)

  Mode mode() const noexcept { return value_.index() == 0 ? Mode::exact : Mode::approx; }
  std::size_t rows() const;
  std::size_t cols() const;
  Scalar at(std::size_t r, std::size_t c) const;

  /// Throws ErrorCode::mode_error when the matrix is approx.
  const QMatrix& exact() const;
  /// Throws ErrorCode::mode_error when the matrix is exact.
  const RMatrix& approx() const;
  /// Converts exact entries to double; approx matrices are returned as is.
  RMatrix to_approx() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::variant<QMatrix, RMatrix> value_;
};

std::size_t rank(const Matrix& m);
Matrix nullspace(const Matrix& m);
Matrix inverse(const Matrix& m);
/// Throws ErrorCode::mode_error on exact input.
Matrix mat_exp(const Matrix& m);

}  // namespace homlie
