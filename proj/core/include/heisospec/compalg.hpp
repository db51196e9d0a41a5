#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "heisospec/errors.hpp"
#include "heisospec/rational.hpp"

namespace heisospec::compalg {

/// The two composition algebras this toolkit builds on.
enum class AlgebraKind { quaternion, octonion };

inline int algebra_dim(AlgebraKind kind) { return kind == AlgebraKind::quaternion ? 4 : 8; }

inline const char* algebra_name(AlgebraKind kind) {
  return kind == AlgebraKind::quaternion ? "quaternion" : "octonion";
}

namespace detail {

/// Conjugation in coordinates: negate everything past the real slot.
template <typename S>
void cd_conj(const S* x, S* out, int dim) {
  out[0] = x[0];
  for (int i = 1; i < dim; ++i) out[i] = -x[i];
}

/// Cayley–Dickson product, doubling from the reals:
///   (a, b)(c, d) = (a c - conj(d) b,  d a + b conj(c)).
template <typename S>
void cd_mul(const S* x, const S* y, S* out, int dim) {
  if (dim == 1) {
    out[0] = x[0] * y[0];
    return;
  }
  const int h = dim / 2;
  const S* a = x;
  const S* b = x + h;
  const S* c = y;
  const S* d = y + h;
  std::array<S, 4> t1{}, t2{}, u1{}, u2{};
  // first half: a c - conj(d) b
  cd_mul(a, c, t1.data(), h);
  cd_conj(d, u1.data(), h);
  cd_mul(u1.data(), b, t2.data(), h);
  for (int i = 0; i < h; ++i) out[i] = t1[i] - t2[i];
  // second half: d a + b conj(c)
  cd_mul(d, a, t1.data(), h);
  cd_conj(c, u2.data(), h);
  cd_mul(b, u2.data(), t2.data(), h);
  for (int i = 0; i < h; ++i) out[h + i] = t1[i] + t2[i];
}

}  // namespace detail

/// Basis multiplication table e_a * e_b = sign[a][b] * e_idx[a][b].
/// Products of basis elements are always +/- a basis element, so the whole
/// algebra is determined by this signed index table.
struct MulTable {
  int dim = 0;
  std::array<std::array<std::int8_t, 8>, 8> sign{};
  std::array<std::array<std::uint8_t, 8>, 8> idx{};
};

inline MulTable build_mul_table(int dim) {
  MulTable t;
  t.dim = dim;
  std::array<std::int64_t, 8> ea{}, eb{}, prod{};
  for (int a = 0; a < dim; ++a) {
    for (int b = 0; b < dim; ++b) {
      ea.fill(0);
      eb.fill(0);
      prod.fill(0);
      ea[a] = 1;
      eb[b] = 1;
      detail::cd_mul(ea.data(), eb.data(), prod.data(), dim);
      int where = -1;
      for (int i = 0; i < dim; ++i) {
        if (prod[i] != 0) {
          if (where != -1 || (prod[i] != 1 && prod[i] != -1)) {
            throw InvalidParameterError("composition basis product is not a signed basis element");
          }
          where = i;
        }
      }
      t.idx[a][b] = static_cast<std::uint8_t>(where);
      t.sign[a][b] = static_cast<std::int8_t>(prod[where]);
    }
  }
  return t;
}

inline const MulTable& mul_table(int dim) {
  if (dim == 4) {
    static const MulTable t4 = build_mul_table(4);
    return t4;
  }
  if (dim == 8) {
    static const MulTable t8 = build_mul_table(8);
    return t8;
  }
  if (dim == 2) {
    static const MulTable t2 = build_mul_table(2);
    return t2;
  }
  throw DimensionError("composition algebra dimension must be 2, 4 or 8");
}

/// Element of a composition algebra in coordinates; coords[0] is the real
/// part. Scalar is Rational for exact work or double for floating work.
/// Immutable in spirit: every operation returns a fresh value.
template <typename S>
class CompositionElement {
public:
  CompositionElement() = default;
  explicit CompositionElement(std::vector<S> coords) : coords_(std::move(coords)) {
    int d = static_cast<int>(coords_.size());
    if (d != 2 && d != 4 && d != 8) {
      throw DimensionError("CompositionElement: dimension must be 2, 4 or 8");
    }
  }

  static CompositionElement zero(int dim) { return CompositionElement(std::vector<S>(dim, S(0))); }
  static CompositionElement one(int dim) {
    std::vector<S> c(dim, S(0));
    c[0] = S(1);
    return CompositionElement(std::move(c));
  }
  static CompositionElement basis(int dim, int k) {
    std::vector<S> c(dim, S(0));
    c.at(k) = S(1);
    return CompositionElement(std::move(c));
  }

  int dim() const { return static_cast<int>(coords_.size()); }
  const std::vector<S>& coords() const { return coords_; }
  const S& operator[](int i) const { return coords_[i]; }

  friend CompositionElement operator*(const CompositionElement& a, const CompositionElement& b) {
    if (a.dim() != b.dim()) throw DimensionError("CompositionElement: mixed algebra dimensions");
    const MulTable& t = mul_table(a.dim());
    std::vector<S> out(a.dim(), S(0));
    for (int i = 0; i < a.dim(); ++i) {
      if (is_zero_scalar(a.coords_[i])) continue;
      for (int j = 0; j < b.dim(); ++j) {
        if (is_zero_scalar(b.coords_[j])) continue;
        S term = a.coords_[i] * b.coords_[j];
        if (t.sign[i][j] < 0) term = -term;
        out[t.idx[i][j]] += term;
      }
    }
    return CompositionElement(std::move(out));
  }

  friend CompositionElement operator+(const CompositionElement& a, const CompositionElement& b) {
    if (a.dim() != b.dim()) throw DimensionError("CompositionElement: mixed algebra dimensions");
    std::vector<S> out(a.coords_);
    for (int i = 0; i < b.dim(); ++i) out[i] += b.coords_[i];
    return CompositionElement(std::move(out));
  }

  friend CompositionElement operator-(const CompositionElement& a, const CompositionElement& b) {
    if (a.dim() != b.dim()) throw DimensionError("CompositionElement: mixed algebra dimensions");
    std::vector<S> out(a.coords_);
    for (int i = 0; i < b.dim(); ++i) out[i] -= b.coords_[i];
    return CompositionElement(std::move(out));
  }

  CompositionElement operator-() const {
    std::vector<S> out(coords_);
    for (auto& v : out) v = -v;
    return CompositionElement(std::move(out));
  }

  friend bool operator==(const CompositionElement& a, const CompositionElement& b) {
    return a.coords_ == b.coords_;
  }
  friend bool operator!=(const CompositionElement& a, const CompositionElement& b) {
    return !(a == b);
  }

  CompositionElement conjugate() const {
    std::vector<S> out(coords_);
    for (std::size_t i = 1; i < out.size(); ++i) out[i] = -out[i];
    return CompositionElement(std::move(out));
  }

private:
  static bool is_zero_scalar(const Rational& v) { return v.is_zero(); }
  static bool is_zero_scalar(double v) { return v == 0.0; }

  std::vector<S> coords_;
};

template <typename S>
CompositionElement<S> conj(const CompositionElement<S>& a) {
  return a.conjugate();
}

template <typename S>
S re(const CompositionElement<S>& a) {
  return a[0];
}

template <typename S>
S norm2(const CompositionElement<S>& a) {
  S acc(0);
  for (const S& c : a.coords()) acc += c * c;
  return acc;
}

template <typename S>
bool is_pure(const CompositionElement<S>& a) {
  return a[0] == S(0);
}

/// Natural embedding of R^(dim-1) as the pure part: z -> (0, z_1, ..., z_{dim-1}).
template <typename S>
CompositionElement<S> embed_pure(const std::vector<S>& z) {
  int dim = static_cast<int>(z.size()) + 1;
  if (dim != 2 && dim != 4 && dim != 8) {
    throw DimensionError("embed_pure: pure part must have length 1, 3 or 7");
  }
  std::vector<S> c(dim, S(0));
  for (std::size_t i = 0; i < z.size(); ++i) c[i + 1] = z[i];
  return CompositionElement<S>(std::move(c));
}

}  // namespace heisospec::compalg
