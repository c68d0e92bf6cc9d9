#include "homlie/exactnum.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <sstream>

namespace homlie {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::singular_matrix: return "SingularMatrix";
    case ErrorCode::mode_error: return "ModeError";
    case ErrorCode::dimension_mismatch: return "DimensionMismatch";
    case ErrorCode::not_regular: return "NotRegular";
    case ErrorCode::not_multiplicative: return "NotMultiplicative";
    case ErrorCode::not_automorphism: return "NotAutomorphism";
    case ErrorCode::not_derivation: return "NotDerivation";
    case ErrorCode::bad_parameter: return "BadParameter";
    case ErrorCode::not_a_group: return "NotAGroup";
    case ErrorCode::complex_not_closed: return "ComplexNotClosed";
    case ErrorCode::parse_error: return "ParseError";
  }
  return "Unknown";
}

const char* to_string(Mode mode) noexcept { return mode == Mode::exact ? "exact" : "approx"; }

double max_abs(std::span<const double> xs) {
  double m = 0.0;
  for (double x : xs) m = std::max(m, std::abs(x));
  return m;
}

double residual(const RMatrix& a, const RMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    fail(ErrorCode::dimension_mismatch, "residual of differently shaped matrices");
  double m = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i) m = std::max(m, std::abs(a.entries()[i] - b.entries()[i]));
  return m;
}

double residual(const RVector& a, const RVector& b) {
  if (a.size() != b.size()) fail(ErrorCode::dimension_mismatch, "residual of different-length vectors");
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

double inf_norm(const RMatrix& m) {
  double best = 0.0;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    double row = 0.0;
    for (std::size_t c = 0; c < m.cols(); ++c) row += std::abs(m(r, c));
    best = std::max(best, row);
  }
  return best;
}

// --- rank ------------------------------------------------------------------

std::size_t rank(const QMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  // Clear denominators row by row; this does not change the rank.
  std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < cols; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < cols; ++c) a[r][c] = m(r, c).get_num() * (l / m(r, c).get_den());
  }

  Integer prev = 1;
  std::size_t rk = 0;
  for (std::size_t c = 0; c < cols && rk < rows; ++c) {
    std::size_t p = rk;
    while (p < rows && sgn(a[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rk]);
    for (std::size_t i = rk + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer t = a[rk][c] * a[i][j] - a[i][c] * a[rk][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[rk][c];
    ++rk;
  }
  return rk;
}

std::size_t rank(const RMatrix& m, double tolerance) {
  RMatrix a = m;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::vector<std::size_t> colperm(cols);
  for (std::size_t c = 0; c < cols; ++c) colperm[c] = c;

  double first_pivot = 0.0;
  std::size_t rk = 0;
  for (; rk < std::min(rows, cols); ++rk) {
    // Complete pivoting over the trailing block.
    std::size_t pr = rk, pc = rk;
    double best = -1.0;
    for (std::size_t r = rk; r < rows; ++r)
      for (std::size_t c = rk; c < cols; ++c)
        if (std::abs(a(r, colperm[c])) > best) {
          best = std::abs(a(r, colperm[c]));
          pr = r;
          pc = c;
        }
    if (rk == 0) first_pivot = best;
    if (best == 0.0 || best <= tolerance * first_pivot) break;
    std::swap(colperm[rk], colperm[pc]);
    for (std::size_t c = 0; c < cols; ++c) std::swap(a(rk, c), a(pr, c));
    const double piv = a(rk, colperm[rk]);
    for (std::size_t r = rk + 1; r < rows; ++r) {
      const double f = a(r, colperm[rk]) / piv;
      if (f == 0.0) continue;
      for (std::size_t c = rk; c < cols; ++c) a(r, colperm[c]) -= f * a(rk, colperm[c]);
    }
  }
  return rk;
}

// --- reduced row echelon form --------------------------------------------

namespace {

struct Echelon {
  std::vector<std::size_t> pivot_cols;
};

Echelon rref_in_place(QMatrix& a) {
  Echelon e;
  std::size_t row = 0;
  for (std::size_t c = 0; c < a.cols() && row < a.rows(); ++c) {
    std::size_t p = row;
    while (p < a.rows() && sgn(a(p, c)) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(row, j));
    const Rational piv = a(row, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(row, j) /= piv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || sgn(a(r, c)) == 0) continue;
      const Rational f = a(r, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(r, j) -= f * a(row, j);
    }
    e.pivot_cols.push_back(c);
    ++row;
  }
  return e;
}

Echelon rref_in_place(RMatrix& a, double tolerance) {
  Echelon e;
  const double scale = max_abs(a);
  const double threshold = tolerance * scale;
  std::size_t row = 0;
  for (std::size_t c = 0; c < a.cols() && row < a.rows(); ++c) {
    std::size_t p = row;
    double best = 0.0;
    for (std::size_t r = row; r < a.rows(); ++r)
      if (std::abs(a(r, c)) > best) {
        best = std::abs(a(r, c));
        p = r;
      }
    if (best == 0.0 || best <= threshold) {
      for (std::size_t r = row; r < a.rows(); ++r) a(r, c) = 0.0;
      continue;
    }
    if (p != row)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(row, j));
    const double piv = a(row, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(row, j) /= piv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, c) == 0.0) continue;
      const double f = a(r, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(r, j) -= f * a(row, j);
    }
    e.pivot_cols.push_back(c);
    ++row;
  }
  return e;
}

template <class F>
DenseMatrix<F> kernel_from_rref(const DenseMatrix<F>& r, const Echelon& e) {
  const std::size_t cols = r.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  std::vector<Vec<F>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vec<F> v(cols, F(0));
    v[f] = F(1);
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) v[e.pivot_cols[i]] = -r(i, f);
    basis.push_back(std::move(v));
  }
  return DenseMatrix<F>::from_columns(cols, basis);
}

template <class F, class... Tol>
DenseMatrix<F> gauss_jordan_inverse(const DenseMatrix<F>& m, Tol... tol) {
  if (!m.is_square()) fail(ErrorCode::dimension_mismatch, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  DenseMatrix<F> aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = F(1);
  }
  // Only the left block decides the pivots; scale the threshold by it.
  if constexpr (std::is_same_v<F, double>) {
    DenseMatrix<F> left = m;
    if (rank(left, tol...) < n) fail(ErrorCode::singular_matrix, "matrix is singular");
  }
  Echelon e = rref_in_place(aug, tol...);
  if (e.pivot_cols.size() < n || e.pivot_cols[n - 1] != n - 1) fail(ErrorCode::singular_matrix, "matrix is singular");
  DenseMatrix<F> inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
  return inv;
}

}  // namespace

QMatrix nullspace(const QMatrix& m) {
  QMatrix a = m;
  Echelon e = rref_in_place(a);
  return kernel_from_rref(a, e);
}

RMatrix nullspace(const RMatrix& m, double tolerance) {
  RMatrix a = m;
  Echelon e = rref_in_place(a, tolerance);
  return kernel_from_rref(a, e);
}

QMatrix inverse(const QMatrix& m) { return gauss_jordan_inverse(m); }

RMatrix inverse(const RMatrix& m, double tolerance) { return gauss_jordan_inverse(m, tolerance); }

Rational determinant(const QMatrix& m) {
  if (!m.is_square()) fail(ErrorCode::dimension_mismatch, "determinant of a non-square matrix");
  QMatrix a = m;
  const std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(a(p, c)) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (sgn(a(r, c)) == 0) continue;
      const Rational f = a(r, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(r, j) -= f * a(c, j);
    }
  }
  return det;
}

double determinant(const RMatrix& m) {
  if (!m.is_square()) fail(ErrorCode::dimension_mismatch, "determinant of a non-square matrix");
  RMatrix a = m;
  const std::size_t n = a.rows();
  double det = 1.0;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(a(r, c)) > std::abs(a(p, c))) p = r;
    if (a(p, c) == 0.0) return 0.0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      const double f = a(r, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(r, j) -= f * a(c, j);
    }
  }
  return det;
}

// --- exponential -----------------------------------------------------------

namespace {

constexpr int kTaylorDegree = 18;

int scaling_exponent(const RMatrix& m) {
  const double norm = inf_norm(m);
  int s = 0;
  if (norm > 0.5) s = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  // log2 can land a hair short; make sure the bound really holds.
  while (std::ldexp(norm, -s) > 0.5) ++s;
  return s;
}

// Sum_{k=1..18} X^k / k!, evaluated by Horner's scheme.
RMatrix taylor_expm1(const RMatrix& x) {
  const std::size_t n = x.rows();
  const RMatrix id = RMatrix::identity(n);
  RMatrix acc = id;
  for (int k = kTaylorDegree; k >= 2; --k) acc = id + (x * acc) * (1.0 / k);
  return x * acc;
}

}  // namespace

RMatrix mat_expm1(const RMatrix& m) {
  if (!m.is_square()) fail(ErrorCode::dimension_mismatch, "exponential of a non-square matrix");
  const int s = scaling_exponent(m);
  RMatrix e = taylor_expm1(m * std::ldexp(1.0, -s));
  const RMatrix two = RMatrix::identity(m.rows()) * 2.0;
  for (int i = 0; i < s; ++i) e = e * (e + two);
  return e;
}

RMatrix mat_exp(const RMatrix& m) {
  if (!m.is_square()) fail(ErrorCode::dimension_mismatch, "exponential of a non-square matrix");
  const int s = scaling_exponent(m);
  RMatrix e = taylor_expm1(m * std::ldexp(1.0, -s)) + RMatrix::identity(m.rows());
  for (int i = 0; i < s; ++i) e = e * e;
  return e;
}

// --- Scalar / Matrix ---------------------------------------------------------

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto bad = [&]() -> Rational { fail(ErrorCode::parse_error, "not a rational number: '" + s + "'"); };
  if (s.empty()) return bad();

  const auto dot = s.find('.');
  if (dot != std::string::npos) {
    // Decimal literal: digits[.digits], optional sign.
    std::string digits;
    std::size_t i = 0;
    bool neg = false;
    if (s[0] == '-' || s[0] == '+') {
      neg = s[0] == '-';
      i = 1;
    }
    std::size_t frac_len = 0;
    bool seen_dot = false;
    for (; i < s.size(); ++i) {
      if (s[i] == '.') {
        if (seen_dot) return bad();
        seen_dot = true;
      } else if (s[i] >= '0' && s[i] <= '9') {
        digits.push_back(s[i]);
        if (seen_dot) ++frac_len;
      } else {
        return bad();
      }
    }
    if (digits.empty()) return bad();
    Integer num(digits, 10);
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
    Rational q(neg ? Integer(-num) : num, den);
    q.canonicalize();
    return q;
  }

  auto valid_int = [](std::string_view t) {
    std::size_t i = (t.size() > 0 && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  const auto slash = s.find('/');
  std::string num_s = s.substr(0, slash);
  std::string den_s = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num_s) || !valid_int(den_s) || den_s[0] == '-' || den_s[0] == '+') return bad();
  if (num_s[0] == '+') num_s.erase(0, 1);
  Integer den(den_s, 10);
  if (sgn(den) == 0) fail(ErrorCode::parse_error, "zero denominator in '" + s + "'");
  Rational q(Integer(num_s, 10), den);
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& q) { return q.get_str(10); }

const Rational& Scalar::exact() const {
  if (mode() != Mode::exact) fail(ErrorCode::mode_error, "scalar is approx, exact value requested");
  return std::get<Rational>(value_);
}

double Scalar::approx() const {
  if (mode() != Mode::approx) fail(ErrorCode::mode_error, "scalar is exact, approx value requested");
  return std::get<double>(value_);
}

double Scalar::to_double() const {
  return mode() == Mode::exact ? std::get<Rational>(value_).get_d() : std::get<double>(value_);
}

std::string Scalar::to_string() const {
  if (mode() == Mode::exact) return format_rational(std::get<Rational>(value_));
  std::ostringstream os;
  os.precision(17);
  os << std::get<double>(value_);
  return os.str();
}

std::size_t Matrix::rows() const {
  return std::visit([](const auto& m) { return m.rows(); }, value_);
}

std::size_t Matrix::cols() const {
  return std::visit([](const auto& m) { return m.cols(); }, value_);
}

Scalar Matrix::at(std::size_t r, std::size_t c) const {
  if (mode() == Mode::exact) return Scalar(std::get<QMatrix>(value_)(r, c));
  return Scalar(std::get<RMatrix>(value_)(r, c));
}

const QMatrix& Matrix::exact() const {
  if (mode() != Mode::exact) fail(ErrorCode::mode_error, "matrix is approx, exact entries required");
  return std::get<QMatrix>(value_);
}

const RMatrix& Matrix::approx() const {
  if (mode() != Mode::approx) fail(ErrorCode::mode_error, "matrix is exact, approx entries required");
  return std::get<RMatrix>(value_);
}

RMatrix Matrix::to_approx() const {
  if (mode() == Mode::approx) return std::get<RMatrix>(value_);
  return std::get<QMatrix>(value_).cast<double>();
}

std::size_t rank(const Matrix& m) {
  return m.mode() == Mode::exact ? rank(m.exact()) : rank(m.approx());
}

Matrix nullspace(const Matrix& m) {
  if (m.mode() == Mode::exact) return nullspace(m.exact());
  return nullspace(m.approx());
}

Matrix inverse(const Matrix& m) {
  if (m.mode() == Mode::exact) return inverse(m.exact());
  return inverse(m.approx());
}

Matrix mat_exp(const Matrix& m) {
  if (m.mode() == Mode::exact) fail(ErrorCode::mode_error, "mat_exp requires approx-mode input");
  return mat_exp(m.approx());
}

}  // namespace homlie
