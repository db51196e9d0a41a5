#include "heisospec/spectral.hpp"

#include <Eigen/Eigenvalues>

#include <atomic>
#include <cmath>
#include <limits>
#include <random>
#include <thread>

namespace heisospec::spectral {

JRows j_row_structure(const heisalg::HeisenbergAlgebra& alg, const FourierMode& mode) {
  if (mode.dim_z() != alg.dim_z) throw DimensionError("j_row_structure: mode has wrong length");
  JRows rows(alg.dim_v);
  for (int k = 0; k < alg.dim_z; ++k) {
    if (mode.alpha[k] == 0) continue;
    const heisalg::SignedPerm& perm = alg.j_basis[k];
    for (int c = 0; c < alg.dim_v; ++c) {
      rows[perm.img[c]].push_back({c, static_cast<std::int64_t>(perm.sgn[c]) * mode.alpha[k]});
    }
  }
  return rows;
}

FiberOperator fiber_operator(const heisalg::HeisenbergAlgebra& alg, const FourierMode& mode,
                             std::optional<Rational> coeff_c) {
  FiberOperator op;
  op.algebra = alg;
  op.mode = mode;
  op.coeff_c = coeff_c ? *coeff_c : Rational(alg.dim_v, 4);
  if (op.coeff_c.sign() <= 0) {
    throw InvalidParameterError("fiber_operator: radial coefficient must be positive");
  }
  op.j_rows = j_row_structure(alg, mode);
  return op;
}

SymResidualReport intertwine_residual_sym(const FiberOperator& src_op, const FiberOperator& dst_op,
                                          const intertwine::SigmaMap<Rational>& sig,
                                          int max_degree, int threads) {
  if (src_op.mode != dst_op.mode) {
    throw DimensionError("intertwine_residual_sym: operators carry different modes");
  }
  if (sig.source != src_op.algebra || sig.target != dst_op.algebra) {
    throw DimensionError("intertwine_residual_sym: sigma joins different algebras");
  }
  if (!sig.trivial) {
    const auto want = src_op.mode.z_vector<Rational>();
    if (sig.z_dir != want) {
      throw DimensionError("intertwine_residual_sym: sigma was built for a different mode");
    }
  } else if (!src_op.mode.is_zero_mode() && sig.source.q != 0) {
    throw DimensionError("intertwine_residual_sym: trivial sigma only intertwines the zero mode");
  }
  if (max_degree < 0) throw InvalidParameterError("intertwine_residual_sym: negative degree");

  const int nvars = src_op.algebra.dim_v;
  std::vector<Monomial> monos;
  monos.reserve(monomial_count(nvars, max_degree));
  for_each_monomial(nvars, max_degree, [&](const Monomial& m) { monos.push_back(m); });

  int nthreads = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
  if (nthreads < 1) nthreads = 1;
  nthreads = std::min<int>(nthreads, 16);

  struct Partial {
    std::vector<double> per_degree;
    bool exact = true;
  };
  std::vector<Partial> partials(nthreads);
  for (auto& p : partials) p.per_degree.assign(max_degree + 1, 0.0);

  std::atomic<std::size_t> cursor{0};
  constexpr std::size_t kChunk = 256;

  auto worker = [&](int tid) {
    Partial& local = partials[tid];
    for (;;) {
      std::size_t begin = cursor.fetch_add(kChunk);
      if (begin >= monos.size()) break;
      std::size_t end = std::min(begin + kChunk, monos.size());
      for (std::size_t idx = begin; idx < end; ++idx) {
        const Monomial& m = monos[idx];
        ModePolynomial<PiComplex> f =
            ModePolynomial<PiComplex>::monomial(nvars, src_op.mode, m, CoeffOps<PiComplex>::one());
        auto lhs = intertwine::pullback(sig, fiber_apply(src_op, f));
        auto rhs = fiber_apply(dst_op, intertwine::pullback(sig, f));
        Polynomial<PiComplex> diff = lhs.phi - rhs.phi;
        if (!diff.is_zero()) {
          local.exact = false;
          double mag = diff.max_coeff_magnitude();
          double& slot = local.per_degree[m.degree()];
          if (mag > slot) slot = mag;
        }
      }
    }
  };

  if (nthreads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }

  SymResidualReport report;
  report.max_degree = max_degree;
  report.monomials_checked = monos.size();
  report.per_degree_max.assign(max_degree + 1, 0.0);
  for (const Partial& p : partials) {
    report.exact_zero = report.exact_zero && p.exact;
    for (int d = 0; d <= max_degree; ++d) {
      report.per_degree_max[d] = std::max(report.per_degree_max[d], p.per_degree[d]);
    }
  }
  for (double v : report.per_degree_max) report.max_residual = std::max(report.max_residual, v);
  return report;
}

namespace {

/// One-dimensional matrix elements in the orthonormal Hermite-function
/// basis, from the ladder recurrences. Each returns the band images of
/// basis index n as (offset, value) pairs; offsets index the target level.
struct Band {
  int offset;
  double value;
};

// x^2: diag n + 1/2, band +/-2 entries sqrt(n(n-1))/2 and sqrt((n+1)(n+2))/2
inline void bands_x2(int n, std::vector<Band>& out) {
  if (n >= 2) out.push_back({-2, 0.5 * std::sqrt(double(n) * (n - 1))});
  out.push_back({0, n + 0.5});
  out.push_back({+2, 0.5 * std::sqrt(double(n + 1) * (n + 2))});
}

// d^2/dx^2: same bands as x^2 but diagonal -(n + 1/2)
inline void bands_dxx(int n, std::vector<Band>& out) {
  if (n >= 2) out.push_back({-2, 0.5 * std::sqrt(double(n) * (n - 1))});
  out.push_back({0, -(n + 0.5)});
  out.push_back({+2, 0.5 * std::sqrt(double(n + 1) * (n + 2))});
}

// x: band +/-1
inline void bands_x(int n, std::vector<Band>& out) {
  if (n >= 1) out.push_back({-1, std::sqrt(0.5 * n)});
  out.push_back({+1, std::sqrt(0.5 * (n + 1))});
}

// d/dx: band +/-1 with a sign flip on the raising side
inline void bands_dx(int n, std::vector<Band>& out) {
  if (n >= 1) out.push_back({-1, std::sqrt(0.5 * n)});
  out.push_back({+1, -std::sqrt(0.5 * (n + 1))});
}

// x d/dx: diag -1/2, band +/-2
inline void bands_xdx(int n, std::vector<Band>& out) {
  if (n >= 2) out.push_back({-2, 0.5 * std::sqrt(double(n) * (n - 1))});
  out.push_back({0, -0.5});
  out.push_back({+2, -0.5 * std::sqrt(double(n + 1) * (n + 2))});
}

int find_basis_index(const std::vector<Monomial>& basis, const Monomial& m) {
  auto it = std::lower_bound(basis.begin(), basis.end(), m);
  if (it == basis.end() || !(*it == m)) return -1;
  return static_cast<int>(it - basis.begin());
}

std::vector<Monomial> hermite_basis(int dim_v, int trunc_degree, std::size_t basis_cap) {
  if (trunc_degree < 0) throw InvalidParameterError("hermite basis: negative degree");
  std::size_t size = monomial_count(dim_v, trunc_degree);
  if (size > basis_cap) {
    throw ResourceLimitError("hermite basis: size " + std::to_string(size) +
                             " exceeds cap " + std::to_string(basis_cap));
  }
  std::vector<Monomial> basis;
  basis.reserve(size);
  for_each_monomial(dim_v, trunc_degree, [&](const Monomial& m) { basis.push_back(m); });
  // for_each_monomial emits in lexicographic key order already; keep the
  // invariant explicit for the binary searches
  std::sort(basis.begin(), basis.end());
  return basis;
}

}  // namespace

HermiteTruncation hermite_matrix(const FiberOperator& op, int trunc_degree,
                                 std::size_t basis_cap) {
  const int dv = op.algebra.dim_v;
  HermiteTruncation tr;
  tr.dim_v = dv;
  tr.max_degree = trunc_degree;
  tr.basis = hermite_basis(dv, trunc_degree, basis_cap);
  const int n = static_cast<int>(tr.basis.size());
  tr.matrix = Eigen::MatrixXcd::Zero(n, n);

  const double n2 = static_cast<double>(op.mode.norm2());
  const double radial = -4.0 * std::numbers::pi * std::numbers::pi * n2;
  const double radial_c = radial * op.coeff_c.to_double();
  const std::complex<double> deriv_factor{0.0, 2.0 * std::numbers::pi};

  std::vector<Band> b1, b2;
  b1.reserve(4);
  b2.reserve(4);
  for (int col = 0; col < n; ++col) {
    const Monomial& mono = tr.basis[col];
    // Laplacian and radial x^2 sum, dimension by dimension
    for (int i = 0; i < dv; ++i) {
      b1.clear();
      bands_dxx(mono.e[i], b1);
      for (const Band& b : b1) {
        int row = find_basis_index(tr.basis, mono.raised(i, b.offset));
        if (row >= 0) tr.matrix(row, col) += b.value;
      }
      if (n2 != 0.0) {
        b1.clear();
        bands_x2(mono.e[i], b1);
        for (const Band& b : b1) {
          int row = find_basis_index(tr.basis, mono.raised(i, b.offset));
          if (row >= 0) tr.matrix(row, col) += radial_c * b.value;
        }
      }
    }
    if (n2 == 0.0) continue;
    // constant radial term
    tr.matrix(col, col) += radial;
    // derivation term 2 pi i sum_{i,l} J_il x_l d_i
    for (int i = 0; i < dv; ++i) {
      for (const auto& [l, w] : op.j_rows[i]) {
        if (l == i) {
          b1.clear();
          bands_xdx(mono.e[i], b1);
          for (const Band& b : b1) {
            int row = find_basis_index(tr.basis, mono.raised(i, b.offset));
            if (row >= 0) tr.matrix(row, col) += deriv_factor * (double(w) * b.value);
          }
          continue;
        }
        b1.clear();
        bands_x(mono.e[l], b1);
        b2.clear();
        bands_dx(mono.e[i], b2);
        for (const Band& bx : b1) {
          for (const Band& bd : b2) {
            Monomial target = mono.raised(l, bx.offset).raised(i, bd.offset);
            int row = find_basis_index(tr.basis, target);
            if (row >= 0) {
              tr.matrix(row, col) += deriv_factor * (double(w) * bx.value * bd.value);
            }
          }
        }
      }
    }
  }
  return tr;
}

HermiteTruncation hermite_calibration_matrix(int dim_v, int trunc_degree, std::size_t basis_cap) {
  HermiteTruncation tr;
  tr.dim_v = dim_v;
  tr.max_degree = trunc_degree;
  tr.basis = hermite_basis(dim_v, trunc_degree, basis_cap);
  const int n = static_cast<int>(tr.basis.size());
  tr.matrix = Eigen::MatrixXcd::Zero(n, n);
  std::vector<Band> bd, bx;
  for (int col = 0; col < n; ++col) {
    const Monomial& mono = tr.basis[col];
    for (int i = 0; i < dim_v; ++i) {
      bd.clear();
      bands_dxx(mono.e[i], bd);
      bx.clear();
      bands_x2(mono.e[i], bx);
      for (const Band& b : bd) {
        int row = find_basis_index(tr.basis, mono.raised(i, b.offset));
        if (row >= 0) tr.matrix(row, col) += b.value;
      }
      for (const Band& b : bx) {
        int row = find_basis_index(tr.basis, mono.raised(i, b.offset));
        if (row >= 0) tr.matrix(row, col) -= b.value;
      }
    }
  }
  return tr;
}

namespace {

std::vector<double> dense_eigenvalues(const Eigen::MatrixXcd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
  if (solver.info() != Eigen::Success) {
    throw ResourceLimitError("dense Hermitian eigensolve failed to converge");
  }
  std::vector<double> vals(solver.eigenvalues().data(),
                           solver.eigenvalues().data() + solver.eigenvalues().size());
  std::sort(vals.begin(), vals.end(), std::greater<double>());
  return vals;
}

/// Lanczos with full reorthogonalization and explicit deflation for the k
/// algebraically largest eigenvalues of a Hermitian matrix. One Ritz pair
/// is locked per restart once its residual drops below 1e-10 * scale, so
/// clustered and repeated eigenvalues are recovered with multiplicity.
std::vector<double> lanczos_extreme(const Eigen::MatrixXcd& m, int k) {
  const int n = static_cast<int>(m.rows());
  const int wanted = std::min(k, n);
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  const double tol = 1e-10 * scale;

  std::mt19937_64 rng(0x4c414e43u);
  std::normal_distribution<double> gauss(0.0, 1.0);

  Eigen::MatrixXcd locked(n, wanted);
  std::vector<double> locked_vals;

  auto deflate = [&](Eigen::VectorXcd& w) {
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t i = 0; i < locked_vals.size(); ++i) {
        w -= locked.col(static_cast<int>(i)).dot(w) * locked.col(static_cast<int>(i));
      }
    }
  };

  while (static_cast<int>(locked_vals.size()) < wanted) {
    const int room = n - static_cast<int>(locked_vals.size());
    const int max_steps = std::min(room, 240);
    if (max_steps < 1) break;

    Eigen::VectorXcd v(n);
    for (int i = 0; i < n; ++i) v(i) = std::complex<double>(gauss(rng), gauss(rng));
    deflate(v);
    if (v.norm() < 1e-12) break;
    v.normalize();

    Eigen::MatrixXcd basis(n, max_steps);
    std::vector<double> alpha, beta;
    basis.col(0) = v;
    bool locked_one = false;

    for (int j = 0; j < max_steps && !locked_one; ++j) {
      Eigen::VectorXcd w = m * basis.col(j);
      double a = std::real(basis.col(j).dot(w));
      alpha.push_back(a);
      w -= a * basis.col(j);
      if (j > 0) w -= beta[j - 1] * basis.col(j - 1);
      deflate(w);
      for (int pass = 0; pass < 2; ++pass) {
        for (int i = 0; i <= j; ++i) w -= basis.col(i).dot(w) * basis.col(i);
      }
      const double b = w.norm();
      const int steps = j + 1;
      const bool exhausted = b < tol || steps == max_steps;

      Eigen::MatrixXd tri = Eigen::MatrixXd::Zero(steps, steps);
      for (int i = 0; i < steps; ++i) {
        tri(i, i) = alpha[i];
        if (i + 1 < steps) {
          tri(i, i + 1) = beta[i];
          tri(i + 1, i) = beta[i];
        }
      }
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(tri);
      const int top = steps - 1;  // eigenvalues ascending: last is largest
      const double resid = std::abs(b * es.eigenvectors()(steps - 1, top));
      if (resid <= tol || exhausted) {
        if (resid > tol && !(b < tol)) {
          throw ResourceLimitError("lanczos_extreme: Ritz residual above 1e-10 at restart limit");
        }
        Eigen::VectorXcd y = Eigen::VectorXcd::Zero(n);
        for (int i = 0; i < steps; ++i) y += es.eigenvectors()(i, top) * basis.col(i);
        deflate(y);
        double ny = y.norm();
        if (ny < 1e-12) break;
        y /= ny;
        locked.col(static_cast<int>(locked_vals.size())) = y;
        locked_vals.push_back(es.eigenvalues()(top));
        locked_one = true;
      }
      if (!locked_one) {
        beta.push_back(b);
        basis.col(j + 1) = w / b;
      }
    }
    if (!locked_one) break;
  }

  if (static_cast<int>(locked_vals.size()) < wanted) {
    throw ResourceLimitError("lanczos_extreme: could not lock the requested eigenvalue count");
  }
  std::sort(locked_vals.begin(), locked_vals.end(), std::greater<double>());
  return locked_vals;
}

}  // namespace

std::vector<double> extreme_eigenvalues(const Eigen::MatrixXcd& m, int k, int dense_cutoff) {
  if (k < 1) throw InvalidParameterError("extreme_eigenvalues: need k >= 1");
  const int n = static_cast<int>(m.rows());
  k = std::min(k, n);
  if (n <= dense_cutoff) {
    std::vector<double> all = dense_eigenvalues(m);
    all.resize(k);
    return all;
  }
  return lanczos_extreme(m, k);
}

SpectraComparison compare_spectra(const HermiteTruncation& a, const HermiteTruncation& b, int k,
                                  int dense_cutoff) {
  if (a.basis.size() != b.basis.size()) {
    throw DimensionError("compare_spectra: truncations have different basis sizes");
  }
  SpectraComparison cmp;
  cmp.eigenvalues_a = extreme_eigenvalues(a.matrix, k, dense_cutoff);
  cmp.eigenvalues_b = extreme_eigenvalues(b.matrix, k, dense_cutoff);
  const std::size_t nk = std::min(cmp.eigenvalues_a.size(), cmp.eigenvalues_b.size());
  for (std::size_t i = 0; i < nk; ++i) {
    cmp.max_abs_diff =
        std::max(cmp.max_abs_diff, std::abs(cmp.eigenvalues_a[i] - cmp.eigenvalues_b[i]));
  }
  return cmp;
}

FiniteDifferenceReport finite_difference_consistency(const FiberOperator& op,
                                                     const ModePolynomial<PiComplex>& f,
                                                     double grid_step, int points,
                                                     std::uint64_t seed) {
  if (f.nvars() != op.algebra.dim_v) {
    throw DimensionError("finite_difference_consistency: variable count != dim v");
  }
  if (grid_step <= 0) throw InvalidParameterError("finite_difference_consistency: bad step");

  const int dv = op.algebra.dim_v;
  const double n2 = static_cast<double>(op.mode.norm2());
  const double c = op.coeff_c.to_double();
  ModePolynomial<PiComplex> sym = fiber_apply(op, f);

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  std::vector<std::vector<double>> sample(points, std::vector<double>(dv));
  for (auto& pt : sample) {
    for (double& x : pt) x = unif(rng);
  }

  auto numeric_at = [&](const std::vector<double>& x, double h) {
    std::vector<double> shifted = x;
    const std::complex<double> f0 = f.phi.eval(x);
    std::complex<double> lap{0.0, 0.0};
    for (int i = 0; i < dv; ++i) {
      shifted[i] = x[i] + h;
      std::complex<double> fp = f.phi.eval(shifted);
      shifted[i] = x[i] - h;
      std::complex<double> fm = f.phi.eval(shifted);
      shifted[i] = x[i];
      lap += (fp - 2.0 * f0 + fm) / (h * h);
    }
    // directional difference along the frozen vector field value j_Z X
    std::vector<double> jx(dv, 0.0);
    for (int i = 0; i < dv; ++i) {
      for (const auto& [l, w] : op.j_rows[i]) jx[i] += static_cast<double>(w) * x[l];
    }
    std::vector<double> plus(dv), minus(dv);
    for (int i = 0; i < dv; ++i) {
      plus[i] = x[i] + h * jx[i];
      minus[i] = x[i] - h * jx[i];
    }
    std::complex<double> deriv = (f.phi.eval(plus) - f.phi.eval(minus)) / (2.0 * h);
    double r2 = 0.0;
    for (double xi : x) r2 += xi * xi;
    const double pi2 = std::numbers::pi * std::numbers::pi;
    return lap + std::complex<double>(0.0, 2.0 * std::numbers::pi) * deriv -
           4.0 * pi2 * n2 * (1.0 + c * r2) * f0;
  };

  FiniteDifferenceReport report;
  report.grid_step = grid_step;
  report.points = points;
  for (const auto& pt : sample) {
    std::complex<double> exact = sym.phi.eval(pt);
    report.deviation_coarse =
        std::max(report.deviation_coarse, std::abs(exact - numeric_at(pt, grid_step)));
    report.deviation_fine =
        std::max(report.deviation_fine, std::abs(exact - numeric_at(pt, grid_step / 2)));
  }
  if (report.deviation_coarse > 1e-12 && report.deviation_fine > 1e-12) {
    report.fitted_order = std::log2(report.deviation_coarse / report.deviation_fine);
  } else {
    report.fitted_order = std::numeric_limits<double>::quiet_NaN();
  }
  return report;
}

}  // namespace heisospec::spectral
