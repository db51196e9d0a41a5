#pragma once

#include <algorithm>
#include <complex>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "heisospec/fourier.hpp"
#include "heisospec/intertwine.hpp"

namespace heisospec::spectral {

/// Sparse row view of j_{Z_alpha}: rows[i] lists (l, w) with entry w at
/// (i, l). Entries are integers because the mode is a lattice point.
using JRows = std::vector<std::vector<std::pair<int, std::int64_t>>>;

JRows j_row_structure(const heisalg::HeisenbergAlgebra& alg, const FourierMode& mode);

/// Fiber restriction of the quotient Laplacian to one Fourier mode:
///   Delta_v  +  2 pi i (j_{Z_alpha} X) .  -  4 pi^2 |Z_alpha|^2 (1 + c |X|^2)
/// acting on the polynomial factor phi. The radial coefficient c defaults
/// to dim v / 4 but stays configurable. The whole-torus form of the same
/// operator is the substitution xi = 2 pi Z_alpha here; only this per-mode
/// form is implemented.
struct FiberOperator {
  heisalg::HeisenbergAlgebra algebra;
  FourierMode mode;
  Rational coeff_c;
  JRows j_rows;
};

FiberOperator fiber_operator(const heisalg::HeisenbergAlgebra& alg, const FourierMode& mode,
                             std::optional<Rational> coeff_c = std::nullopt);

/// (j_{Z_alpha} X) . f  =  sum_i (df/dx_i) <j_{Z_alpha} X, u_i>; raises the
/// pi-degree by nothing and keeps the total polynomial degree.
template <typename C>
ModePolynomial<C> derivation_term(const heisalg::HeisenbergAlgebra& alg, const FourierMode& mode,
                                  const ModePolynomial<C>& f) {
  if (f.nvars() != alg.dim_v) throw DimensionError("derivation_term: variable count != dim v");
  if (mode.dim_z() != alg.dim_z) throw DimensionError("derivation_term: mode has wrong length");
  if (f.mode != mode) throw DimensionError("derivation_term: polynomial carries a different mode");
  using Ops = CoeffOps<C>;
  using Scalar = typename Ops::Scalar;
  JRows rows = j_row_structure(alg, mode);
  ModePolynomial<C> out;
  out.mode = mode;
  out.phi = Polynomial<C>(alg.dim_v);
  for (const auto& term : f.phi.terms()) {
    for (int i = 0; i < alg.dim_v; ++i) {
      const int e = term.mono.e[i];
      if (e == 0) continue;
      Monomial lowered = term.mono.lowered(i);
      for (const auto& [l, w] : rows[i]) {
        out.phi.push_term_unnormalized(lowered.raised(l),
                                       Ops::scale(term.coeff, Scalar(e * w)));
      }
    }
  }
  out.phi.normalize();
  return out;
}

/// Exact symbolic image of f under the fiber operator. The 2 pi i and
/// 4 pi^2 factors stay symbolic in the exact instantiation so rational
/// inputs give exactly representable outputs.
template <typename C>
ModePolynomial<C> fiber_apply(const FiberOperator& op, const ModePolynomial<C>& f) {
  const auto& alg = op.algebra;
  if (f.nvars() != alg.dim_v) throw DimensionError("fiber_apply: variable count != dim v");
  if (f.mode != op.mode) throw DimensionError("fiber_apply: polynomial carries a different mode");
  using Ops = CoeffOps<C>;
  using Scalar = typename Ops::Scalar;

  const std::int64_t n2 = op.mode.norm2();
  const C two_pi_i = Ops::two_pi_i();
  const C radial = Ops::scale(Ops::minus_four_pi_sq(), Scalar(n2));
  const C radial_c = Ops::scale(radial, Ops::scalar_from_rational(op.coeff_c));

  ModePolynomial<C> out;
  out.mode = op.mode;
  out.phi = Polynomial<C>(alg.dim_v);
  const std::size_t reserve_hint =
      f.phi.term_count() * (static_cast<std::size_t>(alg.dim_v) * 2 + 2);
  // cap the hint so adversarially large inputs do not preallocate wildly
  out.phi.reserve_terms(std::min<std::size_t>(reserve_hint, 1u << 20));

  for (const auto& term : f.phi.terms()) {
    // Laplacian in v
    for (int i = 0; i < alg.dim_v; ++i) {
      const int e = term.mono.e[i];
      if (e >= 2) {
        out.phi.push_term_unnormalized(term.mono.raised(i, -2),
                                       Ops::scale(term.coeff, Scalar(e * (e - 1))));
      }
    }
    if (n2 != 0) {
      // derivation against j_{Z_alpha} X, times 2 pi i
      for (int i = 0; i < alg.dim_v; ++i) {
        const int e = term.mono.e[i];
        if (e == 0) continue;
        Monomial lowered = term.mono.lowered(i);
        for (const auto& [l, w] : op.j_rows[i]) {
          out.phi.push_term_unnormalized(
              lowered.raised(l), two_pi_i * Ops::scale(term.coeff, Scalar(e * w)));
        }
      }
      // radial part: -4 pi^2 |Z_alpha|^2 (1 + c |X|^2)
      out.phi.push_term_unnormalized(term.mono, term.coeff * radial);
      const C radial_term = term.coeff * radial_c;
      for (int l = 0; l < alg.dim_v; ++l) {
        out.phi.push_term_unnormalized(term.mono.raised(l, 2), radial_term);
      }
    }
  }
  out.phi.normalize();
  return out;
}

/// Residual of (pullback o fiber_src - fiber_dst o pullback) swept over all
/// monomials of total degree <= max_degree.
struct SymResidualReport {
  int max_degree = 0;
  std::size_t monomials_checked = 0;
  std::vector<double> per_degree_max;  // index = input monomial degree
  double max_residual = 0.0;
  bool exact_zero = true;
};

/// Exact sweep; the central verification of the whole toolkit. Parallel
/// over monomials (threads = 0 picks the hardware count).
SymResidualReport intertwine_residual_sym(const FiberOperator& src_op, const FiberOperator& dst_op,
                                          const intertwine::SigmaMap<Rational>& sig,
                                          int max_degree, int threads = 0);

/// Truncation of the fiber operator to the span of tensor Hermite functions
/// of total degree <= max_degree.
struct HermiteTruncation {
  int dim_v = 0;
  int max_degree = 0;
  std::vector<Monomial> basis;  // sorted, degree <= max_degree
  Eigen::MatrixXcd matrix;
};

inline constexpr std::size_t kDefaultBasisCap = 5000;

HermiteTruncation hermite_matrix(const FiberOperator& op, int trunc_degree,
                                 std::size_t basis_cap = kDefaultBasisCap);

/// Assembly control case Delta_v - |X|^2, whose truncation is exactly
/// diag(-(2 |n| + dim_v)) in this basis.
HermiteTruncation hermite_calibration_matrix(int dim_v, int trunc_degree,
                                             std::size_t basis_cap = kDefaultBasisCap);

inline constexpr int kDenseEigenCutoff = 2000;

/// k algebraically largest eigenvalues, descending. Dense Hermitian solve
/// up to dense_cutoff, Lanczos with full reorthogonalization above it
/// (residual tolerance 1e-10).
std::vector<double> extreme_eigenvalues(const Eigen::MatrixXcd& m, int k,
                                        int dense_cutoff = kDenseEigenCutoff);

struct SpectraComparison {
  std::vector<double> eigenvalues_a;  // descending
  std::vector<double> eigenvalues_b;
  double max_abs_diff = 0.0;
};

/// Sorted-eigenvalue comparison over the k extreme (algebraically largest)
/// eigenvalues. Sizes must match.
SpectraComparison compare_spectra(const HermiteTruncation& a, const HermiteTruncation& b, int k,
                                  int dense_cutoff = kDenseEigenCutoff);

/// Cross-validation of the symbolic engine against a second-order central
/// difference evaluation of the fiber operator at sampled points.
struct FiniteDifferenceReport {
  double grid_step = 0.0;
  double deviation_coarse = 0.0;  // at h
  double deviation_fine = 0.0;    // at h/2
  double fitted_order = 0.0;      // log2(coarse/fine); NaN below noise floor
  int points = 0;
};

FiniteDifferenceReport finite_difference_consistency(const FiberOperator& op,
                                                     const ModePolynomial<PiComplex>& f,
                                                     double grid_step, int points = 8,
                                                     std::uint64_t seed = 0x46445356u);

}  // namespace heisospec::spectral
