#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

#include "heisospec/errors.hpp"

namespace heisospec {

// 128-bit intermediates; a GCC/Clang extension, flagged as such so strict
// -Wpedantic builds stay quiet.
__extension__ typedef __int128 Int128;

/// Exact rational number on 64-bit numerator/denominator.
///
/// Always stored reduced with den > 0. Intermediates are computed in 128-bit
/// and the reduced result must fit back into int64, otherwise OverflowError
/// is thrown; nothing is silently truncated. The exact verification suites
/// keep magnitudes tiny, so the 64-bit range is ample headroom there while
/// staying cheap enough for the full monomial sweeps.
class Rational {
public:
  constexpr Rational() : num_(0), den_(1) {}
  constexpr Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t n, std::int64_t d) { assign_reduced(n, d); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return num_ == 1 && den_ == 1; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (a.num_ == 0) return b;
    if (b.num_ == 0) return a;
    Int128 n = i128(a.num_) * b.den_ + i128(b.num_) * a.den_;
    Int128 d = i128(a.den_) * b.den_;
    return from_i128(n, d);
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    if (a.num_ == 0 || b.num_ == 0) return Rational();
    return from_i128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw InvalidParameterError("Rational: division by zero");
    if (a.num_ == 0) return Rational();
    return from_i128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }
  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  Rational abs() const { return num_ < 0 ? -*this : *this; }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  std::string str() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) s += "/" + std::to_string(den_);
    return s;
  }

  /// Parses "n" or "n/d". Throws InvalidParameterError on malformed input.
  static Rational parse(const std::string& text);

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
  static Int128 i128(std::int64_t v) { return static_cast<Int128>(v); }

  static Rational from_i128(Int128 n, Int128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    Int128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    constexpr Int128 lo = static_cast<Int128>(INT64_MIN);
    constexpr Int128 hi = static_cast<Int128>(INT64_MAX);
    if (n < lo || n > hi || d > hi) {
      throw OverflowError("Rational: reduced value exceeds 64-bit range");
    }
    Rational r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
  }

  static Int128 gcd128(Int128 a, Int128 b) {
    while (b != 0) {
      Int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  void assign_reduced(std::int64_t n, std::int64_t d) {
    if (d == 0) throw InvalidParameterError("Rational: zero denominator");
    *this = from_i128(i128(n), i128(d));
  }

  std::int64_t num_;
  std::int64_t den_;
};

inline Rational Rational::parse(const std::string& text) {
  std::size_t slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      std::size_t pos = 0;
      std::int64_t n = std::stoll(text, &pos);
      if (pos != text.size()) throw InvalidParameterError("Rational: trailing characters in '" + text + "'");
      return Rational(n);
    }
    std::size_t pos = 0;
    std::int64_t n = std::stoll(text.substr(0, slash), &pos);
    if (pos != slash) throw InvalidParameterError("Rational: malformed numerator in '" + text + "'");
    std::int64_t d = std::stoll(text.substr(slash + 1), &pos);
    if (pos != text.size() - slash - 1) {
      throw InvalidParameterError("Rational: malformed denominator in '" + text + "'");
    }
    return Rational(n, d);
  } catch (const std::invalid_argument&) {
    throw InvalidParameterError("Rational: cannot parse '" + text + "'");
  } catch (const std::out_of_range&) {
    throw OverflowError("Rational: literal out of range '" + text + "'");
  }
}

}  // namespace heisospec
