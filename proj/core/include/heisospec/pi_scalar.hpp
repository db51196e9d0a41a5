#pragma once

#include <array>
#include <complex>
#include <numbers>

#include "heisospec/rational.hpp"

namespace heisospec {

/// Element of Q[pi] truncated at pi^4: a_0 + a_1 pi + ... + a_4 pi^4 with
/// rational a_k. pi is transcendental, so such a value is zero exactly when
/// every component is. The fiber operator contributes pi and pi^2 factors;
/// one extra doubling of the degree covers products of two operator images,
/// anything deeper throws rather than silently truncating.
class PiRational {
public:
  static constexpr int kMaxPiPower = 4;

  PiRational() = default;
  explicit PiRational(const Rational& constant) { a_[0] = constant; }

  static PiRational pi_power(int k, const Rational& coeff) {
    PiRational r;
    r.a_.at(k) = coeff;
    return r;
  }

  const Rational& operator[](int k) const { return a_[k]; }

  bool is_zero() const {
    for (const auto& c : a_) {
      if (!c.is_zero()) return false;
    }
    return true;
  }

  friend PiRational operator+(const PiRational& x, const PiRational& y) {
    PiRational r;
    for (int k = 0; k <= kMaxPiPower; ++k) r.a_[k] = x.a_[k] + y.a_[k];
    return r;
  }
  friend PiRational operator-(const PiRational& x, const PiRational& y) {
    PiRational r;
    for (int k = 0; k <= kMaxPiPower; ++k) r.a_[k] = x.a_[k] - y.a_[k];
    return r;
  }
  PiRational operator-() const {
    PiRational r;
    for (int k = 0; k <= kMaxPiPower; ++k) r.a_[k] = -a_[k];
    return r;
  }
  friend PiRational operator*(const PiRational& x, const PiRational& y) {
    PiRational r;
    for (int i = 0; i <= kMaxPiPower; ++i) {
      if (x.a_[i].is_zero()) continue;
      for (int j = 0; j <= kMaxPiPower; ++j) {
        if (y.a_[j].is_zero()) continue;
        if (i + j > kMaxPiPower) {
          throw OverflowError("PiRational: product exceeds representable pi degree");
        }
        r.a_[i + j] += x.a_[i] * y.a_[j];
      }
    }
    return r;
  }
  PiRational& operator+=(const PiRational& o) { return *this = *this + o; }
  PiRational& operator-=(const PiRational& o) { return *this = *this - o; }

  friend bool operator==(const PiRational& x, const PiRational& y) { return x.a_ == y.a_; }
  friend bool operator!=(const PiRational& x, const PiRational& y) { return !(x == y); }

  PiRational scaled(const Rational& s) const {
    PiRational r;
    if (s.is_zero()) return r;
    for (int k = 0; k <= kMaxPiPower; ++k) r.a_[k] = a_[k] * s;
    return r;
  }

  double to_double() const {
    double pi_pow = 1.0;
    double acc = 0.0;
    for (int k = 0; k <= kMaxPiPower; ++k) {
      acc += a_[k].to_double() * pi_pow;
      pi_pow *= std::numbers::pi;
    }
    return acc;
  }

  /// Largest |component| as a double; zero iff the value is exactly zero.
  double max_abs_component() const {
    double best = 0.0;
    for (const auto& c : a_) {
      double v = c.abs().to_double();
      if (v > best) best = v;
    }
    return best;
  }

private:
  std::array<Rational, kMaxPiPower + 1> a_{};
};

/// Complex coefficient over Q[pi]: exact carrier for the 2*pi*i and 4*pi^2
/// factors of the fiber operator.
struct PiComplex {
  PiRational re;
  PiRational im;

  PiComplex() = default;
  explicit PiComplex(const Rational& real) : re(real) {}
  PiComplex(PiRational r, PiRational i) : re(std::move(r)), im(std::move(i)) {}

  static PiComplex from_int(std::int64_t v) { return PiComplex(Rational(v)); }
  static PiComplex two_pi_i() { return PiComplex(PiRational(), PiRational::pi_power(1, Rational(2))); }
  static PiComplex minus_four_pi_sq() {
    return PiComplex(PiRational::pi_power(2, Rational(-4)), PiRational());
  }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }

  friend PiComplex operator+(const PiComplex& x, const PiComplex& y) {
    return {x.re + y.re, x.im + y.im};
  }
  friend PiComplex operator-(const PiComplex& x, const PiComplex& y) {
    return {x.re - y.re, x.im - y.im};
  }
  PiComplex operator-() const { return {-re, -im}; }
  friend PiComplex operator*(const PiComplex& x, const PiComplex& y) {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
  }
  PiComplex& operator+=(const PiComplex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }

  friend bool operator==(const PiComplex& x, const PiComplex& y) {
    return x.re == y.re && x.im == y.im;
  }
  friend bool operator!=(const PiComplex& x, const PiComplex& y) { return !(x == y); }

  PiComplex scaled(const Rational& s) const { return {re.scaled(s), im.scaled(s)}; }

  std::complex<double> to_complex() const { return {re.to_double(), im.to_double()}; }
};

/// Glue between polynomial coefficients and the matching matrix scalar.
/// PiComplex pairs with exact Rational linear algebra, std::complex<double>
/// with floating linear algebra.
template <typename C>
struct CoeffOps;

template <>
struct CoeffOps<PiComplex> {
  using Scalar = Rational;
  static PiComplex zero() { return {}; }
  static PiComplex one() { return PiComplex(Rational(1)); }
  static PiComplex from_scalar(const Rational& r) { return PiComplex(r); }
  static bool is_zero(const PiComplex& c) { return c.is_zero(); }
  static PiComplex scale(const PiComplex& c, const Rational& s) { return c.scaled(s); }
  static PiComplex two_pi_i() { return PiComplex::two_pi_i(); }
  static PiComplex minus_four_pi_sq() { return PiComplex::minus_four_pi_sq(); }
  static std::complex<double> to_complex(const PiComplex& c) { return c.to_complex(); }
  static double magnitude(const PiComplex& c) { return std::abs(c.to_complex()); }
  static double scalar_to_double(const Rational& s) { return s.to_double(); }
  static Rational scalar_from_rational(const Rational& r) { return r; }
};

template <>
struct CoeffOps<std::complex<double>> {
  using Scalar = double;
  static std::complex<double> zero() { return {0.0, 0.0}; }
  static std::complex<double> one() { return {1.0, 0.0}; }
  static std::complex<double> from_scalar(double s) { return {s, 0.0}; }
  static bool is_zero(const std::complex<double>& c) { return c.real() == 0.0 && c.imag() == 0.0; }
  static std::complex<double> scale(const std::complex<double>& c, double s) { return c * s; }
  static std::complex<double> two_pi_i() { return {0.0, 2.0 * std::numbers::pi}; }
  static std::complex<double> minus_four_pi_sq() {
    return {-4.0 * std::numbers::pi * std::numbers::pi, 0.0};
  }
  static std::complex<double> to_complex(const std::complex<double>& c) { return c; }
  static double magnitude(const std::complex<double>& c) { return std::abs(c); }
  static double scalar_to_double(double s) { return s; }
  static double scalar_from_rational(const Rational& r) { return r.to_double(); }
};

}  // namespace heisospec
