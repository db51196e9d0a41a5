#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "heisospec/polynomial.hpp"

namespace heisospec::spectral {

/// Lattice index of a torus Fourier mode. The mode direction in the center
/// is Z_alpha = sum alpha_i e_i; only the integer vector is stored.
struct FourierMode {
  std::vector<int> alpha;

  int dim_z() const { return static_cast<int>(alpha.size()); }

  std::int64_t norm2() const {
    std::int64_t n = 0;
    for (int a : alpha) n += static_cast<std::int64_t>(a) * a;
    return n;
  }

  bool is_zero_mode() const { return norm2() == 0; }

  template <typename S>
  std::vector<S> z_vector() const {
    std::vector<S> z;
    z.reserve(alpha.size());
    for (int a : alpha) z.push_back(S(a));
    return z;
  }

  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(alpha[i]);
    }
    return s;
  }

  friend bool operator==(const FourierMode& a, const FourierMode& b) { return a.alpha == b.alpha; }
  friend bool operator!=(const FourierMode& a, const FourierMode& b) { return !(a == b); }
};

inline FourierMode basis_mode(int dim_z, int k) {
  FourierMode m;
  m.alpha.assign(dim_z, 0);
  m.alpha.at(k) = 1;
  return m;
}

inline FourierMode zero_mode(int dim_z) {
  FourierMode m;
  m.alpha.assign(dim_z, 0);
  return m;
}

/// Polynomial factor of a single Fourier-mode function phi(X) E_alpha(Z).
/// The oscillatory factor is implicit: only alpha is carried, and operators
/// never mix distinct modes.
template <typename C>
struct ModePolynomial {
  Polynomial<C> phi;
  FourierMode mode;

  int nvars() const { return phi.nvars(); }

  static ModePolynomial constant(int nvars, const FourierMode& mode, const C& c) {
    return {Polynomial<C>::constant(nvars, c), mode};
  }
  static ModePolynomial monomial(int nvars, const FourierMode& mode, const Monomial& m,
                                 const C& c) {
    return {Polynomial<C>::monomial(nvars, m, c), mode};
  }
};

using ExactModePolynomial = ModePolynomial<PiComplex>;
using FloatModePolynomial = ModePolynomial<std::complex<double>>;

}  // namespace heisospec::spectral
