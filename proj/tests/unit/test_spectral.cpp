#include <doctest.h>

#include <cmath>
#include <numbers>

#include "heisospec/spectral.hpp"
#include "test_util.hpp"

using namespace heisospec;
using compalg::AlgebraKind;
using heisalg::build_algebra;
using spectral::basis_mode;
using spectral::fiber_apply;
using spectral::fiber_operator;
using spectral::FourierMode;
using spectral::ModePolynomial;

namespace {

using MP = ModePolynomial<PiComplex>;

/// Orthonormal Hermite functions by the three-term recurrence.
double hermite_fn(int n, double x) {
  double h0 = std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * x * x);
  if (n == 0) return h0;
  double h1 = std::sqrt(2.0) * x * h0;
  for (int k = 1; k < n; ++k) {
    double h2 = std::sqrt(2.0 / (k + 1)) * x * h1 - std::sqrt(double(k) / (k + 1)) * h0;
    h0 = h1;
    h1 = h2;
  }
  return h1;
}

/// Trapezoid quadrature of integrand over [-12, 12]; the integrands decay
/// like exp(-x^2), so this is accurate far beyond the tolerances below.
template <typename F>
double quad(F&& f) {
  const double a = -12.0, b = 12.0;
  const int n = 24000;
  const double dx = (b - a) / n;
  double acc = 0.5 * (f(a) + f(b));
  for (int i = 1; i < n; ++i) acc += f(a + i * dx);
  return acc * dx;
}

MP monomial_poly(int nvars, const FourierMode& mode, std::initializer_list<int> raises) {
  Monomial m{};
  for (int v : raises) m = m.raised(v);
  return MP::monomial(nvars, mode, m, PiComplex::from_int(1));
}

}  // namespace

TEST_CASE("one-dimensional matrix elements against quadrature") {
  // second derivative: <h_m, h_n''> with h_n'' = (x^2 - (2n+1)) h_n
  for (int n = 0; n <= 5; ++n) {
    for (int m = 0; m <= 5; ++m) {
      double val = quad([&](double x) {
        return hermite_fn(m, x) * (x * x - (2 * n + 1)) * hermite_fn(n, x);
      });
      double expected = 0.0;
      if (m == n) expected = -(n + 0.5);
      if (m == n - 2) expected = 0.5 * std::sqrt(double(n) * (n - 1));
      if (m == n + 2) expected = 0.5 * std::sqrt(double(n + 1) * (n + 2));
      CHECK(val == doctest::Approx(expected).epsilon(1e-9).scale(1.0));
    }
  }
  // position operator and x^2
  for (int n = 0; n <= 5; ++n) {
    for (int m = 0; m <= 5; ++m) {
      double xval = quad([&](double x) { return hermite_fn(m, x) * x * hermite_fn(n, x); });
      double expected_x = 0.0;
      if (m == n - 1) expected_x = std::sqrt(0.5 * n);
      if (m == n + 1) expected_x = std::sqrt(0.5 * (n + 1));
      CHECK(xval == doctest::Approx(expected_x).epsilon(1e-9).scale(1.0));

      double x2val = quad([&](double x) { return hermite_fn(m, x) * x * x * hermite_fn(n, x); });
      double expected_x2 = 0.0;
      if (m == n) expected_x2 = n + 0.5;
      if (m == n - 2) expected_x2 = 0.5 * std::sqrt(double(n) * (n - 1));
      if (m == n + 2) expected_x2 = 0.5 * std::sqrt(double(n + 1) * (n + 2));
      CHECK(x2val == doctest::Approx(expected_x2).epsilon(1e-9).scale(1.0));
    }
  }
}

TEST_CASE("derivation term basics") {
  auto alg = build_algebra(AlgebraKind::quaternion, 1, 0);
  FourierMode mode = basis_mode(3, 2);

  auto constant = MP::constant(4, mode, PiComplex::from_int(5));
  CHECK(spectral::derivation_term(alg, mode, constant).phi.is_zero());

  // |X|^2 is annihilated because j is skew
  MP r2{Polynomial<PiComplex>::radius_squared(4), mode};
  CHECK(spectral::derivation_term(alg, mode, r2).phi.is_zero());

  // the image of a coordinate is the matching row of j_{Z_alpha}
  MatrixQ j = heisalg::j_matrix(alg, mode.z_vector<Rational>());
  for (int c = 0; c < 4; ++c) {
    auto xc = monomial_poly(4, mode, {c});
    auto img = spectral::derivation_term(alg, mode, xc);
    Polynomial<PiComplex> expected(4);
    for (int l = 0; l < 4; ++l) {
      if (j(c, l).is_zero()) continue;
      expected.push_term_unnormalized(Monomial{}.raised(l), PiComplex(j(c, l)));
    }
    expected.normalize();
    CHECK((img.phi - expected).is_zero());
  }

  FourierMode other = basis_mode(3, 0);
  auto wrong_mode = MP::constant(4, other, PiComplex::from_int(1));
  CHECK_THROWS_AS(spectral::derivation_term(alg, mode, wrong_mode), DimensionError);
}

TEST_CASE("fiber_apply at the zero mode reduces to the flat Laplacian") {
  auto alg = build_algebra(AlgebraKind::octonion, 1, 1);
  FourierMode zero = spectral::zero_mode(7);
  auto op = fiber_operator(alg, zero);

  auto sq = monomial_poly(16, zero, {1, 1});  // x_1^2
  auto img = fiber_apply(op, sq);
  CHECK(img.phi.term_count() == 1);
  CHECK(img.phi.coefficient(Monomial{}) == PiComplex::from_int(2));

  CHECK(fiber_apply(op, MP::constant(16, zero, PiComplex::from_int(3))).phi.is_zero());
}

TEST_CASE("fiber_apply of the constant matches the closed radial form") {
  auto alg = build_algebra(AlgebraKind::octonion, 1, 1);
  FourierMode mode{{1, 0, -2, 0, 0, 0, 1}};  // |Z_alpha|^2 = 6
  auto op = fiber_operator(alg, mode, Rational(16, 4));
  auto img = fiber_apply(op, MP::constant(16, mode, PiComplex::from_int(1)));

  Polynomial<PiComplex> expected(16);
  PiComplex radial = PiComplex(PiRational::pi_power(2, Rational(-4 * 6)), PiRational());
  expected.push_term_unnormalized(Monomial{}, radial);
  for (int l = 0; l < 16; ++l) {
    expected.push_term_unnormalized(Monomial{}.raised(l, 2), radial.scaled(Rational(4)));
  }
  expected.normalize();
  CHECK((img.phi - expected).is_zero());
}

TEST_CASE("fiber_apply is linear and respects the degree bound") {
  auto alg = build_algebra(AlgebraKind::quaternion, 1, 1);
  FourierMode mode = basis_mode(3, 1);
  auto op = fiber_operator(alg, mode);
  auto g = testutil::rng(401);
  std::uniform_int_distribution<int> var(0, 7);
  for (int t = 0; t < 15; ++t) {
    Polynomial<PiComplex> f(8), h(8);
    for (int term = 0; term < 4; ++term) {
      Monomial m{};
      for (int d = 0; d < 3; ++d) m = m.raised(var(g));
      f.push_term_unnormalized(m, PiComplex(testutil::small_rational(g)));
      Monomial m2{};
      for (int d = 0; d < 2; ++d) m2 = m2.raised(var(g));
      h.push_term_unnormalized(m2, PiComplex(testutil::small_rational(g)));
    }
    f.normalize();
    h.normalize();
    auto sum = fiber_apply(op, MP{f + h, mode}).phi;
    auto parts = fiber_apply(op, MP{f, mode}).phi + fiber_apply(op, MP{h, mode}).phi;
    CHECK((sum - parts).is_zero());
    if (!f.is_zero()) {
      CHECK(fiber_apply(op, MP{f, mode}).phi.degree() == f.degree() + 2);
    }
  }
  // degree raise requires a nonzero mode
  auto op0 = fiber_operator(alg, spectral::zero_mode(3));
  auto cubic = monomial_poly(8, spectral::zero_mode(3), {0, 0, 0});
  CHECK(fiber_apply(op0, cubic).phi.degree() <= 1);
}

TEST_CASE("fiber operator guards") {
  auto alg = build_algebra(AlgebraKind::quaternion, 1, 1);
  CHECK_THROWS_AS(fiber_operator(alg, basis_mode(3, 0), Rational(0)), InvalidParameterError);
  CHECK_THROWS_AS(fiber_operator(alg, basis_mode(7, 0)), DimensionError);
  auto op = fiber_operator(alg, basis_mode(3, 0));
  auto wrong = MP::constant(8, basis_mode(3, 1), PiComplex::from_int(1));
  CHECK_THROWS_AS(fiber_apply(op, wrong), DimensionError);
}

TEST_CASE("symbolic intertwining residual is exactly zero") {
  SUBCASE("octonion pair, several modes and degrees") {
    auto src = build_algebra(AlgebraKind::octonion, 1, 1);
    auto dst = build_algebra(AlgebraKind::octonion, 2, 0);
    for (int k : {0, 4}) {
      auto sig = intertwine::sigma_map(src, basis_mode(7, k).z_vector<Rational>());
      auto src_op = fiber_operator(src, basis_mode(7, k));
      auto dst_op = fiber_operator(dst, basis_mode(7, k));
      auto rep = spectral::intertwine_residual_sym(src_op, dst_op, sig, 2);
      CHECK(rep.exact_zero);
      CHECK(rep.max_residual == 0.0);
      CHECK(rep.monomials_checked == monomial_count(16, 2));
    }
  }
  SUBCASE("quaternion pair at degree 3") {
    auto src = build_algebra(AlgebraKind::quaternion, 1, 1);
    auto dst = build_algebra(AlgebraKind::quaternion, 2, 0);
    auto sig = intertwine::sigma_map(src, basis_mode(3, 1).z_vector<Rational>());
    auto src_op = fiber_operator(src, basis_mode(3, 1));
    auto dst_op = fiber_operator(dst, basis_mode(3, 1));
    auto rep = spectral::intertwine_residual_sym(src_op, dst_op, sig, 3);
    CHECK(rep.exact_zero);
  }
  SUBCASE("radial coefficient does not matter") {
    auto src = build_algebra(AlgebraKind::quaternion, 1, 1);
    auto dst = build_algebra(AlgebraKind::quaternion, 2, 0);
    auto sig = intertwine::sigma_map(src, basis_mode(3, 0).z_vector<Rational>());
    for (int c : {1, 4, 7}) {
      auto src_op = fiber_operator(src, basis_mode(3, 0), Rational(c));
      auto dst_op = fiber_operator(dst, basis_mode(3, 0), Rational(c));
      CHECK(spectral::intertwine_residual_sym(src_op, dst_op, sig, 2).exact_zero);
    }
  }
  SUBCASE("zero mode with the trivial sigma") {
    auto src = build_algebra(AlgebraKind::octonion, 1, 1);
    auto dst = build_algebra(AlgebraKind::octonion, 2, 0);
    auto sig = intertwine::sigma_identity<Rational>(src);
    auto src_op = fiber_operator(src, spectral::zero_mode(7));
    auto dst_op = fiber_operator(dst, spectral::zero_mode(7));
    CHECK(spectral::intertwine_residual_sym(src_op, dst_op, sig, 2).exact_zero);
  }
  SUBCASE("non-basis lattice mode with an explicit rational nu") {
    auto src = build_algebra(AlgebraKind::octonion, 1, 1);
    auto dst = build_algebra(AlgebraKind::octonion, 2, 0);
    FourierMode mode{{1, 2, 0, 0, 0, 0, 0}};  // |Z_alpha|^2 = 5
    std::vector<Rational> nu(7, Rational(0));
    nu[2] = Rational(3, 5);
    nu[3] = Rational(4, 5);
    auto sig = intertwine::sigma_map(src, mode.z_vector<Rational>(), std::optional(nu));
    CHECK(!sig.as_signed_perm().has_value());  // exercises the dense pullback
    auto src_op = fiber_operator(src, mode);
    auto dst_op = fiber_operator(dst, mode);
    auto rep = spectral::intertwine_residual_sym(src_op, dst_op, sig, 2);
    CHECK(rep.exact_zero);
  }
  SUBCASE("mode mismatch is rejected") {
    auto src = build_algebra(AlgebraKind::octonion, 1, 1);
    auto dst = build_algebra(AlgebraKind::octonion, 2, 0);
    auto sig = intertwine::sigma_map(src, basis_mode(7, 0).z_vector<Rational>());
    auto src_op = fiber_operator(src, basis_mode(7, 1));
    auto dst_op = fiber_operator(dst, basis_mode(7, 1));
    CHECK_THROWS_AS(spectral::intertwine_residual_sym(src_op, dst_op, sig, 1), DimensionError);
  }
}

TEST_CASE("intertwining routes agree numerically at random points") {
  // independent oracle: transport the point with the double sigma matrix
  // and evaluate the source operator by central differences of f alone, so
  // neither symbolic composition nor symbolic operator application is on
  // this route
  auto src = build_algebra(AlgebraKind::quaternion, 1, 1);
  auto dst = build_algebra(AlgebraKind::quaternion, 2, 0);
  FourierMode mode = basis_mode(3, 0);
  auto sig = intertwine::sigma_map(src, mode.z_vector<Rational>());
  auto src_op = fiber_operator(src, mode);
  auto dst_op = fiber_operator(dst, mode);

  Eigen::MatrixXd sigma_t(8, 8);
  for (int r = 0; r < 8; ++r) {
    for (int c = 0; c < 8; ++c) sigma_t(r, c) = sig.matrix(c, r).to_double();
  }
  auto j_src = spectral::j_row_structure(src, mode);
  const double n2 = static_cast<double>(mode.norm2());
  const double c_coeff = src_op.coeff_c.to_double();

  auto g = testutil::rng(431);
  std::uniform_int_distribution<int> var(0, 7);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  const double h = 1e-3;

  for (int trial = 0; trial < 3; ++trial) {
    Polynomial<PiComplex> f(8);
    for (int term = 0; term < 3; ++term) {
      Monomial m = Monomial{}.raised(var(g)).raised(var(g)).raised(var(g));
      f.push_term_unnormalized(m, PiComplex(Rational(1, 4)));
    }
    f.normalize();
    MP mf{f, mode};
    auto symbolic = intertwine::pullback(sig, fiber_apply(src_op, mf));
    auto other_route = fiber_apply(dst_op, intertwine::pullback(sig, mf));

    auto numeric_source_at = [&](const Eigen::VectorXd& y) {
      std::vector<double> yv(y.data(), y.data() + y.size());
      std::complex<double> f0 = f.eval(yv);
      std::complex<double> lap{0, 0};
      for (int i = 0; i < 8; ++i) {
        auto shifted = yv;
        shifted[i] = yv[i] + h;
        auto fp = f.eval(shifted);
        shifted[i] = yv[i] - h;
        auto fm = f.eval(shifted);
        lap += (fp - 2.0 * f0 + fm) / (h * h);
      }
      std::vector<double> jy(8, 0.0);
      for (int i = 0; i < 8; ++i) {
        for (const auto& [l, w] : j_src[i]) jy[i] += double(w) * yv[l];
      }
      std::vector<double> plus(8), minus(8);
      for (int i = 0; i < 8; ++i) {
        plus[i] = yv[i] + h * jy[i];
        minus[i] = yv[i] - h * jy[i];
      }
      std::complex<double> deriv = (f.eval(plus) - f.eval(minus)) / (2.0 * h);
      double r2 = 0;
      for (double v : yv) r2 += v * v;
      const double pi2 = std::numbers::pi * std::numbers::pi;
      return lap + std::complex<double>(0, 2 * std::numbers::pi) * deriv -
             4.0 * pi2 * n2 * (1.0 + c_coeff * r2) * f0;
    };

    for (int pt = 0; pt < 50; ++pt) {
      Eigen::VectorXd x(8);
      for (int i = 0; i < 8; ++i) x(i) = unif(g);
      std::vector<double> xv(x.data(), x.data() + 8);
      std::complex<double> route_a = symbolic.phi.eval(xv);
      std::complex<double> route_b = other_route.phi.eval(xv);
      std::complex<double> oracle = numeric_source_at(sigma_t * x);
      CHECK(std::abs(route_a - route_b) < 1e-10);
      CHECK(std::abs(route_a - oracle) < 1e-4);
    }
  }
}

TEST_CASE("calibration truncation is diagonal with oscillator eigenvalues") {
  for (auto [dv, d] : {std::pair{2, 4}, {4, 3}}) {
    auto tr = spectral::hermite_calibration_matrix(dv, d);
    const int n = static_cast<int>(tr.basis.size());
    for (int col = 0; col < n; ++col) {
      for (int row = 0; row < n; ++row) {
        std::complex<double> want{0.0, 0.0};
        if (row == col) want = -(2.0 * tr.basis[col].degree() + dv);
        CHECK(std::abs(tr.matrix(row, col) - want) < 1e-10);
      }
    }
  }
}

TEST_CASE("free Laplacian truncation matches the tensor band structure") {
  auto op = fiber_operator(build_algebra(AlgebraKind::quaternion, 1, 0),
                           spectral::zero_mode(3));
  auto tr = spectral::hermite_matrix(op, 2);
  const int n = static_cast<int>(tr.basis.size());
  for (int col = 0; col < n; ++col) {
    for (int row = 0; row < n; ++row) {
      // tensor product of 1-D <m|d^2|n> over each dimension
      double want = 0.0;
      for (int i = 0; i < 4; ++i) {
        bool others_equal = true;
        for (int jdim = 0; jdim < 4; ++jdim) {
          if (jdim != i && tr.basis[row].e[jdim] != tr.basis[col].e[jdim]) others_equal = false;
        }
        if (!others_equal) continue;
        int m = tr.basis[row].e[i], nn = tr.basis[col].e[i];
        if (m == nn) want += -(nn + 0.5);
        if (m == nn - 2) want += 0.5 * std::sqrt(double(nn) * (nn - 1));
        if (m == nn + 2) want += 0.5 * std::sqrt(double(nn + 1) * (nn + 2));
      }
      CHECK(std::abs(tr.matrix(row, col) - want) < 1e-12);
    }
  }
}

TEST_CASE("hermite truncation is Hermitian and capped") {
  auto alg = build_algebra(AlgebraKind::quaternion, 1, 1);
  auto op = fiber_operator(alg, basis_mode(3, 0));
  auto tr = spectral::hermite_matrix(op, 2);
  CHECK(tr.basis.size() == monomial_count(8, 2));
  Eigen::MatrixXcd gap = tr.matrix - tr.matrix.adjoint();
  CHECK(gap.norm() < 1e-12);
  CHECK_THROWS_AS(spectral::hermite_matrix(op, 8, 100), ResourceLimitError);
}

TEST_CASE("lanczos agrees with the dense solver") {
  auto alg = build_algebra(AlgebraKind::quaternion, 1, 0);
  auto op = fiber_operator(alg, basis_mode(3, 0));
  auto tr = spectral::hermite_matrix(op, 4);  // 70 basis functions
  auto dense = spectral::extreme_eigenvalues(tr.matrix, 8);
  auto lcz = spectral::extreme_eigenvalues(tr.matrix, 8, /*dense_cutoff=*/10);
  REQUIRE(dense.size() == lcz.size());
  for (std::size_t i = 0; i < dense.size(); ++i) {
    CHECK(std::abs(dense[i] - lcz[i]) < 1e-9);
  }
}

TEST_CASE("compare_spectra") {
  auto alg10 = build_algebra(AlgebraKind::quaternion, 1, 0);
  auto alg01 = build_algebra(AlgebraKind::quaternion, 0, 1);
  auto op10 = fiber_operator(alg10, basis_mode(3, 0));
  auto op01 = fiber_operator(alg01, basis_mode(3, 0));
  auto tr10 = spectral::hermite_matrix(op10, 4);
  auto tr01 = spectral::hermite_matrix(op01, 4);

  auto self = spectral::compare_spectra(tr10, tr10, 20);
  CHECK(self.max_abs_diff == 0.0);

  // isomorphic algebras: spectra agree to solver accuracy
  auto cmp = spectral::compare_spectra(tr10, tr01, 20);
  CHECK(cmp.max_abs_diff < 1e-10);

  auto smaller = spectral::hermite_matrix(op10, 3);
  CHECK_THROWS_AS(spectral::compare_spectra(tr10, smaller, 5), DimensionError);
}

TEST_CASE("the dimension-31 pair is isospectral in truncation as well") {
  // N(2,1) vs N(3,0): dim v = 24; this is the pair that separates only the
  // g.o. property, and its fiber truncations must still agree
  auto mode = basis_mode(7, 0);
  auto op_a = fiber_operator(build_algebra(AlgebraKind::octonion, 2, 1), mode);
  auto op_b = fiber_operator(build_algebra(AlgebraKind::octonion, 3, 0), mode);
  auto tr_a = spectral::hermite_matrix(op_a, 2);
  auto tr_b = spectral::hermite_matrix(op_b, 2);
  CHECK(tr_a.basis.size() == monomial_count(24, 2));
  auto cmp = spectral::compare_spectra(tr_a, tr_b, 10);
  CHECK(cmp.max_abs_diff < 1e-8);
}

TEST_CASE("finite differences validate the symbolic engine") {
  auto alg = build_algebra(AlgebraKind::quaternion, 1, 0);

  SUBCASE("linear polynomial at the zero mode vanishes to rounding") {
    auto op = fiber_operator(alg, spectral::zero_mode(3));
    auto f = monomial_poly(4, spectral::zero_mode(3), {1});
    auto rep = spectral::finite_difference_consistency(op, f, 1e-2);
    CHECK(rep.deviation_coarse < 1e-9);
  }

  SUBCASE("mixed cubic shows second-order convergence") {
    auto op = fiber_operator(alg, basis_mode(3, 0));
    auto f = monomial_poly(4, basis_mode(3, 0), {0, 0, 1});  // x_0^2 x_1
    auto rep = spectral::finite_difference_consistency(op, f, 1e-2);
    CHECK(rep.fitted_order == doctest::Approx(2.0).epsilon(0.05));
    CHECK(rep.deviation_fine < rep.deviation_coarse);
  }

  SUBCASE("random unit-size cubics stay within the h^2 envelope at h = 1e-3") {
    // one cubic monomial with coefficient 1/8 keeps the third directional
    // derivative below 6/8, so the envelope 2 pi h^2/6 |D^3 f| < 1e-6 holds
    auto g = testutil::rng(419);
    std::uniform_int_distribution<int> var(0, 3);
    std::uniform_int_distribution<int> flip(0, 1);
    auto op = fiber_operator(alg, basis_mode(3, 1));
    for (int t = 0; t < 5; ++t) {
      Polynomial<PiComplex> f(4);
      Monomial m = Monomial{}.raised(var(g)).raised(var(g)).raised(var(g));
      f.push_term_unnormalized(m, PiComplex(Rational(flip(g) ? 1 : -1, 8)));
      f.push_term_unnormalized(Monomial{}.raised(var(g)), PiComplex(Rational(1, 4)));
      f.normalize();
      auto rep = spectral::finite_difference_consistency(op, MP{f, basis_mode(3, 1)}, 1e-3);
      CHECK(rep.deviation_coarse < 1e-6);
    }
  }
}
