#include "heisospec/intertwine.hpp"

#include <cmath>

namespace heisospec::intertwine {

namespace {

std::optional<std::int64_t> isqrt_exact(std::int64_t v) {
  if (v < 0) return std::nullopt;
  auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(v))));
  for (std::int64_t c = r > 1 ? r - 1 : 0; c <= r + 1; ++c) {
    if (c * c == v) return c;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Rational> sqrt_rational(const Rational& r) {
  if (r.sign() < 0) return std::nullopt;
  auto n = isqrt_exact(r.num());
  auto d = isqrt_exact(r.den());
  if (!n || !d) return std::nullopt;
  return Rational(*n, *d);
}

double frobenius_norm(const Eigen::MatrixXd& m) { return m.norm(); }

}  // namespace heisospec::intertwine
