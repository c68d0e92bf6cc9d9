#pragma once

#include <algorithm>
#include <cmath>
#include <type_traits>
#include <utility>
#include <vector>

#include "homlie/algebra.hpp"

namespace homlie::detail {

template <class F>
double discrepancy(const Vec<F>& a, const Vec<F>& b) {
  if (a.size() != b.size()) fail(ErrorCode::dimension_mismatch, "compared vectors differ in length");
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if constexpr (std::is_same_v<F, Rational>) {
      if (a[i] != b[i]) m = std::max(m, std::abs(Rational(a[i] - b[i]).get_d()));
    } else {
      m = std::max(m, std::abs(a[i] - b[i]));
    }
  }
  return m;
}

/// Exact equality for rationals, max-abs within `tolerance` for doubles.
template <class F>
bool same(const Vec<F>& a, const Vec<F>& b, double tolerance) {
  if constexpr (std::is_same_v<F, Rational>)
    return a == b;
  else
    return discrepancy(a, b) <= tolerance;
}

/// Folds one instance of an identity into a verdict. The first failure seen
/// becomes the witness, so callers iterate in lexicographic order.
template <class F>
void record(Verdict<F>& v, std::vector<std::size_t> indices, Vec<F> lhs, Vec<F> rhs, double tolerance) {
  v.residual = std::max(v.residual, discrepancy(lhs, rhs));
  if (same(lhs, rhs, tolerance)) return;
  if (v.pass) {
    v.pass = false;
    v.witness = Witness<F>{std::move(indices), std::move(lhs), std::move(rhs)};
  }
}

}  // namespace homlie::detail
