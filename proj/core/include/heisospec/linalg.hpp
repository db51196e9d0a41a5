#pragma once

#include <Eigen/Core>
#include <Eigen/Dense>

#include "heisospec/rational.hpp"

namespace Eigen {

// Rational plugs into Eigen's generic (non-vectorized) paths; products,
// transposes and block ops all stay exact.
template <>
struct NumTraits<heisospec::Rational> {
  using Real = heisospec::Rational;
  using NonInteger = heisospec::Rational;
  using Literal = heisospec::Rational;
  using Nested = heisospec::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 6,
    MulCost = 8,
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace heisospec {

using MatrixQ = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using VectorQ = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

/// abs() shim so generic code can take |x| for both scalar kinds.
inline Rational abs_value(const Rational& x) { return x.abs(); }
inline double abs_value(double x) { return x < 0 ? -x : x; }

/// Largest |entry|, usable for exact and floating matrices alike.
template <typename Derived>
typename Derived::Scalar max_abs_coeff(const Eigen::MatrixBase<Derived>& m) {
  using S = typename Derived::Scalar;
  S best = S(0);
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      S a = abs_value(m(i, j));
      if (best < a) best = a;
    }
  }
  return best;
}

template <typename S>
Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic> identity_matrix(Eigen::Index n) {
  Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic> m(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) m(i, j) = S(i == j ? 1 : 0);
  }
  return m;
}

template <typename S>
Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic> zero_matrix(Eigen::Index r, Eigen::Index c) {
  Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic> m(r, c);
  for (Eigen::Index j = 0; j < c; ++j) {
    for (Eigen::Index i = 0; i < r; ++i) m(i, j) = S(0);
  }
  return m;
}

}  // namespace heisospec
