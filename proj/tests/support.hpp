#pragma once

// Shared test scaffolding: the run seed and independent oracles. Oracles
// re-derive values by the most direct route available and deliberately do
// not call the library routine they are checking.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "homlie/algebra.hpp"
#include "homlie/exactnum.hpp"

namespace testing_support {

using homlie::QMatrix;
using homlie::QVector;
using homlie::Rational;
using homlie::RMatrix;

/// Seed for randomized tests; set from --seed by the test main.
std::uint64_t seed();
void set_seed(std::uint64_t s);

inline std::mt19937_64 rng(std::uint64_t salt = 0) { return std::mt19937_64(seed() ^ (salt * 0x9E3779B97F4A7C15ULL)); }

/// Rational in [-range, range] with denominator in 1..max_den.
inline Rational random_rational(std::mt19937_64& g, int range = 5, int max_den = 4) {
  std::uniform_int_distribution<int> num(-range * max_den, range * max_den);
  std::uniform_int_distribution<int> den(1, max_den);
  Rational q(num(g), den(g));
  q.canonicalize();
  return q;
}

inline QMatrix random_rational_matrix(std::size_t r, std::size_t c, std::mt19937_64& g) {
  QMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = random_rational(g);
  return m;
}

/// Textbook Gaussian elimination over Q (first nonzero pivot, row
/// operations with division). Independent of the library's Bareiss rank.
inline std::size_t oracle_rank(QMatrix m) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t p = rank;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(rank, j));
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      if (m(r, c) == 0) continue;
      const Rational f = m(r, c) / m(rank, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(r, j) -= f * m(rank, j);
    }
    ++rank;
  }
  return rank;
}

/// e^M by the unscaled Taylor series in long double; fine for ||M|| <= 3.
inline RMatrix oracle_exp(const RMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<long double> term(n * n, 0.0L), sum(n * n, 0.0L), next(n * n);
  for (std::size_t i = 0; i < n; ++i) term[i * n + i] = sum[i * n + i] = 1.0L;
  for (int k = 1; k <= 60; ++k) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        long double acc = 0.0L;
        for (std::size_t l = 0; l < n; ++l) acc += term[i * n + l] * static_cast<long double>(m(l, j));
        next[i * n + j] = acc / k;
      }
    term = next;
    for (std::size_t i = 0; i < n * n; ++i) sum[i] += term[i];
  }
  RMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = static_cast<double>(sum[i * n + j]);
  return out;
}

/// [x, y] from the raw tensor entries.
inline QVector oracle_bracket(const homlie::QAlgebra& a, const QVector& x, const QVector& y) {
  const std::size_t n = a.dim();
  QVector out(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out[k] += x[i] * y[j] * a.constant(i, j, k);
  return out;
}

/// Naive Gauss-Jordan inverse over Q (augmented matrix).
inline QMatrix oracle_inverse(const QMatrix& m) {
  const std::size_t n = m.rows();
  QMatrix a(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = m(i, j);
    a(i, n + i) = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (a(p, c) == 0) ++p;
    for (std::size_t j = 0; j < 2 * n; ++j) std::swap(a(p, j), a(c, j));
    const Rational piv = a(c, c);
    for (std::size_t j = 0; j < 2 * n; ++j) a(c, j) /= piv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a(r, c) == 0) continue;
      const Rational f = a(r, c);
      for (std::size_t j = 0; j < 2 * n; ++j) a(r, j) -= f * a(c, j);
    }
  }
  QMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = a(i, n + j);
  return out;
}

/// dim Der(g): unknowns D(r, c), equations from the derivation identity on
/// basis pairs written out with the raw constants.
inline std::size_t oracle_derivation_dim(const homlie::QAlgebra& a) {
  const std::size_t n = a.dim();
  const QMatrix& phi = a.phi();
  const QMatrix phi_inv = oracle_inverse(phi);
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        std::vector<Rational> row(n * n, Rational(0));
        for (std::size_t r = 0; r < n; ++r)
          for (std::size_t c = 0; c < n; ++c) {
            // D = E_rc, psi = phi^-1 E_rc phi: psi(l, m) = phi_inv(l, r) phi(c, m)
            Rational v = (r == k) ? a.constant(i, j, c) : Rational(0);
            for (std::size_t p = 0; p < n; ++p)
              for (std::size_t q = 0; q < n; ++q) {
                v -= phi(p, i) * phi_inv(q, r) * phi(c, j) * a.constant(p, q, k);
                v -= phi_inv(p, r) * phi(c, i) * phi(q, j) * a.constant(p, q, k);
              }
            row[r * n + c] = v;
          }
        rows.push_back(row);
      }
  QMatrix sys(rows.size(), n * n);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < n * n; ++c) sys(r, c) = rows[r][c];
  return n * n - oracle_rank(sys);
}

/// dim span{ad(e_i)} from the raw constants.
inline std::size_t oracle_inner_dim(const homlie::QAlgebra& a) {
  const std::size_t n = a.dim();
  QMatrix m(n * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) m(j * n + k, i) = a.constant(i, j, k);
  return oracle_rank(m);
}

/// dim Cen(g) from the raw constants.
inline std::size_t oracle_center_dim(const homlie::QAlgebra& a) {
  const std::size_t n = a.dim();
  QMatrix m(n * n, n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) m(j * n + k, x) = a.constant(j, x, k);
  return n - oracle_rank(m);
}

inline double max_diff(const RMatrix& a, const RMatrix& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

}  // namespace testing_support
