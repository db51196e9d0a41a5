#pragma once

#include <cstdint>
#include <vector>

#include "heisospec/compalg.hpp"
#include "heisospec/linalg.hpp"

namespace heisospec::heisalg {

using compalg::AlgebraKind;

/// A signed permutation of basis vectors: e_c -> sgn[c] * e_img[c].
/// Every j-map of a center basis vector acts this way in coordinates, which
/// keeps the bracket, the Heisenberg-type check and the Clifford volume
/// element exact and cheap for any scalar kind.
struct SignedPerm {
  std::vector<int> img;
  std::vector<std::int8_t> sgn;

  int size() const { return static_cast<int>(img.size()); }

  /// (a.after(b))(x) = a(b(x)), the matrix product A*B.
  SignedPerm after(const SignedPerm& b) const;

  /// Inverse map; equals the transpose since entries are +/-1.
  SignedPerm inverse() const;

  /// Trace of the corresponding matrix.
  int trace() const;

  bool is_identity() const;

  template <typename S>
  Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic> to_matrix() const {
    auto m = zero_matrix<S>(size(), size());
    for (int c = 0; c < size(); ++c) m(img[c], c) = S(sgn[c]);
    return m;
  }
};

/// Descriptor of the metric 2-step nilpotent algebra n(p,q) = v + z over a
/// composition algebra A: dim v = (dim A)(p+q), dim z = dim A - 1, with the
/// standard coordinate basis declared orthonormal. Immutable after
/// construction; all per-center-basis j actions are precomputed.
struct HeisenbergAlgebra {
  AlgebraKind kind = AlgebraKind::octonion;
  int p = 0;
  int q = 0;
  int dim_a = 8;
  int dim_v = 0;
  int dim_z = 0;
  std::vector<SignedPerm> j_basis;  // one per center basis vector

  friend bool operator==(const HeisenbergAlgebra& a, const HeisenbergAlgebra& b) {
    return a.kind == b.kind && a.p == b.p && a.q == b.q;
  }
};

/// Builds n(p,q): p blocks acted on by left multiplication Z*X and q blocks
/// by right multiplication X*Z. Throws InvalidParameterError when p + q = 0
/// or either count is negative.
HeisenbergAlgebra build_algebra(AlgebraKind kind, int p, int q);

/// j_Z as a dense dim_v x dim_v matrix; linear in Z and skew-symmetric.
template <typename S>
Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic> j_matrix(const HeisenbergAlgebra& alg,
                                                          const std::vector<S>& z) {
  if (static_cast<int>(z.size()) != alg.dim_z) {
    throw DimensionError("j_matrix: center vector has wrong length");
  }
  auto m = zero_matrix<S>(alg.dim_v, alg.dim_v);
  for (int k = 0; k < alg.dim_z; ++k) {
    if (z[k] == S(0)) continue;
    const SignedPerm& perm = alg.j_basis[k];
    for (int c = 0; c < alg.dim_v; ++c) {
      S term = z[k];
      if (perm.sgn[c] < 0) term = -term;
      m(perm.img[c], c) += term;
    }
  }
  return m;
}

/// The Lie bracket [X, Y] in z-coordinates, defined against the metric by
/// <[X,Y], e_k> = <j_{e_k} X, Y> for each center basis vector.
template <typename S>
std::vector<S> bracket(const HeisenbergAlgebra& alg, const std::vector<S>& x,
                       const std::vector<S>& y) {
  if (static_cast<int>(x.size()) != alg.dim_v || static_cast<int>(y.size()) != alg.dim_v) {
    throw DimensionError("bracket: v vector has wrong length");
  }
  std::vector<S> out(alg.dim_z, S(0));
  for (int k = 0; k < alg.dim_z; ++k) {
    const SignedPerm& perm = alg.j_basis[k];
    S acc(0);
    for (int c = 0; c < alg.dim_v; ++c) {
      S term = x[c] * y[perm.img[c]];
      if (perm.sgn[c] < 0) term = -term;
      acc += term;
    }
    out[k] = acc;
  }
  return out;
}

/// Group element in exponential coordinates exp(X + Z).
template <typename S>
struct GroupElement {
  std::vector<S> x;
  std::vector<S> z;

  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.x == b.x && a.z == b.z;
  }
};

template <typename S>
GroupElement<S> group_identity(const HeisenbergAlgebra& alg) {
  return {std::vector<S>(alg.dim_v, S(0)), std::vector<S>(alg.dim_z, S(0))};
}

/// Group law in exponential coordinates:
///   (X, Z) * (X', Z') = (X + X', Z + Z' + [X, X'] / 2).
/// Exact associativity follows from 2-step nilpotency.
template <typename S>
GroupElement<S> group_mul(const HeisenbergAlgebra& alg, const GroupElement<S>& a,
                          const GroupElement<S>& b) {
  if (static_cast<int>(a.x.size()) != alg.dim_v || static_cast<int>(b.x.size()) != alg.dim_v ||
      static_cast<int>(a.z.size()) != alg.dim_z || static_cast<int>(b.z.size()) != alg.dim_z) {
    throw DimensionError("group_mul: element has wrong dimensions");
  }
  GroupElement<S> out;
  out.x.resize(alg.dim_v);
  for (int i = 0; i < alg.dim_v; ++i) out.x[i] = a.x[i] + b.x[i];
  std::vector<S> half_comm = bracket(alg, a.x, b.x);
  out.z.resize(alg.dim_z);
  const S half = S(1) / S(2);
  for (int k = 0; k < alg.dim_z; ++k) out.z[k] = a.z[k] + b.z[k] + half * half_comm[k];
  return out;
}

template <typename S>
GroupElement<S> group_inv(const HeisenbergAlgebra& alg, const GroupElement<S>& a) {
  (void)alg;
  GroupElement<S> out = a;
  for (auto& v : out.x) v = -v;
  for (auto& v : out.z) v = -v;
  return out;
}

/// Residual report for j_Z^2 = -|Z|^2 Id over the center basis plus random
/// rational directions. Reports, never throws: residual is 0 exactly for
/// every algebra this toolkit constructs.
struct HeisenbergTypeReport {
  int directions_checked = 0;
  bool exact_zero = false;
  double max_residual = 0.0;
};

HeisenbergTypeReport check_heisenberg_type(const HeisenbergAlgebra& alg, int random_trials = 100,
                                           std::uint64_t seed = 0x48545950u);

/// Ordered product of the center-basis j maps,
///   omega = j_{e_1} o j_{e_2} o ... o j_{e_dim_z},
/// as a signed permutation. Squares to the identity when dim z = 3 mod 4.
SignedPerm volume_element_perm(const HeisenbergAlgebra& alg);

/// volume_element as a real matrix (convenience view of the above).
Eigen::MatrixXd volume_element(const HeisenbergAlgebra& alg);

/// trace(omega) / dim A. Distinguishes the two Clifford module types:
/// |signature| = p + q exactly when v is isotypic, and it vanishes iff p = q.
/// The overall sign depends on the center basis ordering convention.
int isotypic_signature(const HeisenbergAlgebra& alg);

inline bool is_isotypic(const HeisenbergAlgebra& alg) {
  int s = isotypic_signature(alg);
  return (s < 0 ? -s : s) == alg.p + alg.q;
}

}  // namespace heisospec::heisalg
