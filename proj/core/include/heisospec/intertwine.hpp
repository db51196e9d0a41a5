#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "heisospec/fourier.hpp"
#include "heisospec/heisalg.hpp"

namespace heisospec::intertwine {

using heisalg::HeisenbergAlgebra;

/// Exact square root of a non-negative rational, when one exists.
std::optional<Rational> sqrt_rational(const Rational& r);

namespace detail {

template <typename S>
S dot(const std::vector<S>& a, const std::vector<S>& b) {
  S acc(0);
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

inline bool normalize_in_place(std::vector<double>& v) {
  double n2 = 0;
  for (double x : v) n2 += x * x;
  if (n2 == 0) return false;
  double inv = 1.0 / std::sqrt(n2);
  for (double& x : v) x *= inv;
  return true;
}

inline bool normalize_in_place(std::vector<Rational>& v) {
  Rational n2(0);
  for (const Rational& x : v) n2 += x * x;
  if (n2.is_zero()) return false;
  auto root = sqrt_rational(n2);
  if (!root) {
    throw InvalidParameterError(
        "choose_nu: normalization is irrational over the rationals; use the floating overload");
  }
  for (Rational& x : v) x /= *root;
  return true;
}

}  // namespace detail

/// Deterministic unit vector orthogonal to z_dir: Gram-Schmidt against the
/// first standard basis vector that is not parallel to z_dir. Throws on a
/// zero direction. The rational overload succeeds only when the normalizer
/// is rational (always the case for signed basis directions).
template <typename S>
std::vector<S> choose_nu(const std::vector<S>& z_dir) {
  const int n = static_cast<int>(z_dir.size());
  if (n < 2) throw DimensionError("choose_nu: center dimension must be at least 2");
  S z2 = detail::dot(z_dir, z_dir);
  if (z2 == S(0)) throw InvalidParameterError("choose_nu: degenerate zero direction");
  int k = -1;
  for (int cand = 0; cand < n; ++cand) {
    bool parallel = true;
    for (int i = 0; i < n; ++i) {
      if (i != cand && z_dir[i] != S(0)) {
        parallel = false;
        break;
      }
    }
    if (!parallel || z_dir[cand] == S(0)) {
      k = cand;
      break;
    }
  }
  std::vector<S> nu(n, S(0));
  nu[k] = S(1);
  S proj = z_dir[k] / z2;
  for (int i = 0; i < n; ++i) nu[i] -= proj * z_dir[i];
  detail::normalize_in_place(nu);
  return nu;
}

/// The slot map sigma between n(p,q) and n(p+q,0) for one mode direction:
/// identity on the p left-action slots, X -> conj(X * iota(nu)) on the q
/// right-action slots. Orthogonal, and it conjugates j^{(p,q)} along the
/// ray through z_dir into j^{(p+q,0)}.
template <typename S>
struct SigmaMap {
  HeisenbergAlgebra source;
  HeisenbergAlgebra target;
  std::vector<S> z_dir;
  std::vector<S> nu;
  Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic> matrix;
  bool trivial = false;  // identity map (zero mode or q = 0)

  /// Signed-permutation view when every matrix column is a single +/-1
  /// entry (always true for signed basis nu); enables exact O(terms)
  /// polynomial pullback.
  std::optional<heisalg::SignedPerm> as_signed_perm() const {
    heisalg::SignedPerm perm;
    const int n = static_cast<int>(matrix.cols());
    perm.img.resize(n);
    perm.sgn.resize(n);
    for (int c = 0; c < n; ++c) {
      int found = -1;
      for (int r = 0; r < n; ++r) {
        const S& v = matrix(r, c);
        if (v == S(0)) continue;
        if (found >= 0 || (v != S(1) && v != S(-1))) return std::nullopt;
        found = r;
        perm.sgn[c] = static_cast<std::int8_t>(v == S(1) ? 1 : -1);
      }
      if (found < 0) return std::nullopt;
      perm.img[c] = found;
    }
    return perm;
  }
};

namespace detail {

template <typename S>
void check_nu(const std::vector<S>& nu, const std::vector<S>& z_dir);

template <>
inline void check_nu<Rational>(const std::vector<Rational>& nu,
                               const std::vector<Rational>& z_dir) {
  if (dot(nu, nu) != Rational(1)) throw InvalidParameterError("sigma_map: nu is not a unit vector");
  if (!dot(nu, z_dir).is_zero()) {
    throw InvalidParameterError("sigma_map: nu is not orthogonal to the mode direction");
  }
}

template <>
inline void check_nu<double>(const std::vector<double>& nu, const std::vector<double>& z_dir) {
  constexpr double tol = 1e-12;
  if (std::abs(dot(nu, nu) - 1.0) > tol) {
    throw InvalidParameterError("sigma_map: nu is not a unit vector");
  }
  double scale = std::sqrt(dot(z_dir, z_dir));
  if (std::abs(dot(nu, z_dir)) > tol * (scale > 1 ? scale : 1.0)) {
    throw InvalidParameterError("sigma_map: nu is not orthogonal to the mode direction");
  }
}

}  // namespace detail

/// Identity sigma for the zero mode, where the j-dependent term of the
/// fiber operator vanishes and the identity intertwines trivially.
template <typename S>
SigmaMap<S> sigma_identity(const HeisenbergAlgebra& src) {
  SigmaMap<S> sig;
  sig.source = src;
  sig.target = heisalg::build_algebra(src.kind, src.p + src.q, 0);
  sig.z_dir.assign(src.dim_z, S(0));
  sig.nu.assign(src.dim_z, S(0));
  sig.matrix = identity_matrix<S>(src.dim_v);
  sig.trivial = true;
  return sig;
}

template <typename S>
SigmaMap<S> sigma_map(const HeisenbergAlgebra& src, const std::vector<S>& z_dir,
                      std::optional<std::vector<S>> nu = std::nullopt) {
  if (static_cast<int>(z_dir.size()) != src.dim_z) {
    throw DimensionError("sigma_map: mode direction has wrong length");
  }
  SigmaMap<S> sig;
  sig.source = src;
  sig.target = heisalg::build_algebra(src.kind, src.p + src.q, 0);
  sig.z_dir = z_dir;
  if (src.q == 0) {
    // no right-action slots: sigma is the identity regardless of nu
    sig.nu = nu ? std::move(*nu) : std::vector<S>(src.dim_z, S(0));
    sig.matrix = identity_matrix<S>(src.dim_v);
    sig.trivial = true;
    return sig;
  }
  sig.nu = nu ? std::move(*nu) : choose_nu(z_dir);
  if (static_cast<int>(sig.nu.size()) != src.dim_z) {
    throw DimensionError("sigma_map: nu has wrong length");
  }
  detail::check_nu(sig.nu, z_dir);

  const int da = src.dim_a;
  sig.matrix = zero_matrix<S>(src.dim_v, src.dim_v);
  for (int i = 0; i < src.p * da; ++i) sig.matrix(i, i) = S(1);
  // right-multiplication by iota(nu) followed by conjugation, per slot
  const compalg::MulTable& table = compalg::mul_table(da);
  for (int slot = src.p; slot < src.p + src.q; ++slot) {
    const int off = slot * da;
    for (int c = 0; c < da; ++c) {
      for (int k = 0; k < src.dim_z; ++k) {
        if (sig.nu[k] == S(0)) continue;
        int row = table.idx[c][k + 1];
        S val = sig.nu[k];
        if (table.sign[c][k + 1] < 0) val = -val;
        if (row != 0) val = -val;  // conjugation flips the pure rows
        sig.matrix(off + row, off + c) += val;
      }
    }
  }
  return sig;
}

/// sigma j^{(p,q)}_{t z_dir} - j^{(p+q,0)}_{t z_dir} sigma; the zero matrix
/// for every scale t, exactly over the rationals.
template <typename S>
Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic> j_intertwine_residual(const SigmaMap<S>& sig,
                                                                       const S& scale) {
  std::vector<S> z = sig.z_dir;
  for (S& v : z) v *= scale;
  auto j_src = heisalg::j_matrix(sig.source, z);
  auto j_dst = heisalg::j_matrix(sig.target, z);
  return sig.matrix * j_src - j_dst * sig.matrix;
}

/// Transport of a mode polynomial along sigma: f -> f o sigma^{-1}
/// (= f o sigma^T, sigma being orthogonal). Degree-preserving algebra
/// homomorphism, exact whenever sigma is.
///
/// Composing with the inverse is what the chain rule demands for the
/// forward intertwining: sigma j^{(p,q)} = j^{(p+q,0)} sigma makes
/// composition with sigma itself carry the (p+q,0) fiber operator to the
/// (p,q) one, so the map from the (p,q) side to the (p+q,0) side is
/// composition with sigma^{-1}.
template <typename C>
spectral::ModePolynomial<C> pullback(const SigmaMap<typename CoeffOps<C>::Scalar>& sig,
                                     const spectral::ModePolynomial<C>& f) {
  if (f.nvars() != sig.source.dim_v) {
    throw DimensionError("pullback: polynomial variable count does not match dim v");
  }
  spectral::ModePolynomial<C> out;
  out.mode = f.mode;
  if (sig.trivial) {
    out.phi = f.phi;
    return out;
  }
  if (auto perm = sig.as_signed_perm()) {
    heisalg::SignedPerm inv = perm->inverse();
    out.phi = f.phi.compose_signed_perm(inv.img, inv.sgn);
  } else {
    out.phi = f.phi.compose_linear(sig.matrix.transpose());
  }
  return out;
}

/// Frobenius norm of a floating residual matrix.
double frobenius_norm(const Eigen::MatrixXd& m);

inline double to_double_scalar(const Rational& r) { return r.to_double(); }
inline double to_double_scalar(double d) { return d; }

/// One residual record for report emission.
struct ResidualRecord {
  int p = 0;
  int q = 0;
  std::vector<double> z_dir;
  std::vector<double> nu;
  double residual_norm = 0.0;
  bool exact = false;
};

template <typename S>
ResidualRecord make_residual_record(const SigmaMap<S>& sig, double residual_norm, bool exact) {
  ResidualRecord rec;
  rec.p = sig.source.p;
  rec.q = sig.source.q;
  for (const S& v : sig.z_dir) rec.z_dir.push_back(to_double_scalar(v));
  for (const S& v : sig.nu) rec.nu.push_back(to_double_scalar(v));
  rec.residual_norm = residual_norm;
  rec.exact = exact;
  return rec;
}

}  // namespace heisospec::intertwine
