#pragma once

#include <algorithm>
#include <array>
#include <complex>
#include <cstdint>
#include <cstring>
#include <functional>
#include <vector>

#include "heisospec/errors.hpp"
#include "heisospec/linalg.hpp"
#include "heisospec/pi_scalar.hpp"

namespace heisospec {

/// Hard cap on polynomial variables; dim v never exceeds 32 in this family
/// for the p + q range the toolkit handles.
inline constexpr int kMaxPolyVars = 32;

/// Exponent multi-index with a fixed-width key so comparisons are a single
/// memcmp. Unused slots stay zero.
struct Monomial {
  std::array<std::uint8_t, kMaxPolyVars> e{};

  int degree() const {
    int d = 0;
    for (auto v : e) d += v;
    return d;
  }

  Monomial raised(int var, int by = 1) const {
    Monomial m = *this;
    int nv = m.e[var] + by;
    if (nv > 255 || nv < 0) throw OverflowError("Monomial: exponent out of range");
    m.e[var] = static_cast<std::uint8_t>(nv);
    return m;
  }
  Monomial lowered(int var) const {
    Monomial m = *this;
    m.e[var] -= 1;
    return m;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
  friend bool operator<(const Monomial& a, const Monomial& b) {
    return std::memcmp(a.e.data(), b.e.data(), kMaxPolyVars) < 0;
  }
};

/// Sparse multivariate polynomial over a coefficient ring C (PiComplex for
/// exact work, std::complex<double> for floating work). Terms are kept
/// sorted by monomial with no stored zeros.
template <typename C>
class Polynomial {
public:
  using Ops = CoeffOps<C>;
  using Scalar = typename Ops::Scalar;
  struct Term {
    Monomial mono;
    C coeff;
  };

  Polynomial() : nvars_(0) {}
  explicit Polynomial(int nvars) : nvars_(check_nvars(nvars)) {}

  static Polynomial zero(int nvars) { return Polynomial(nvars); }
  static Polynomial constant(int nvars, const C& c) {
    Polynomial p(nvars);
    if (!Ops::is_zero(c)) p.terms_.push_back({Monomial{}, c});
    return p;
  }
  static Polynomial variable(int nvars, int var) {
    Polynomial p(nvars);
    p.terms_.push_back({Monomial{}.raised(var), Ops::one()});
    return p;
  }
  static Polynomial monomial(int nvars, const Monomial& m, const C& c) {
    Polynomial p(nvars);
    if (!Ops::is_zero(c)) p.terms_.push_back({m, c});
    return p;
  }
  /// Sum of squares of all variables.
  static Polynomial radius_squared(int nvars) {
    Polynomial p(nvars);
    p.terms_.reserve(nvars);
    for (int i = 0; i < nvars; ++i) p.terms_.push_back({Monomial{}.raised(i, 2), Ops::one()});
    p.normalize();
    return p;
  }

  int nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  int degree() const {
    int d = -1;
    for (const Term& t : terms_) d = std::max(d, t.mono.degree());
    return d;  // -1 for the zero polynomial
  }

  C coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& key) { return t.mono < key; });
    if (it != terms_.end() && it->mono == m) return it->coeff;
    return Ops::zero();
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    a.check_same_vars(b);
    Polynomial out(a.nvars_);
    out.terms_ = merge_terms(a.terms_, b.terms_, false);
    return out;
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    a.check_same_vars(b);
    Polynomial out(a.nvars_);
    out.terms_ = merge_terms(a.terms_, b.terms_, true);
    return out;
  }
  Polynomial operator-() const {
    Polynomial out(nvars_);
    out.terms_.reserve(terms_.size());
    for (const Term& t : terms_) out.terms_.push_back({t.mono, -t.coeff});
    return out;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_same_vars(b);
    Polynomial out(a.nvars_);
    out.terms_.reserve(a.terms_.size() * b.terms_.size());
    for (const Term& ta : a.terms_) {
      for (const Term& tb : b.terms_) {
        Monomial m = ta.mono;
        for (int i = 0; i < a.nvars_; ++i) {
          if (tb.mono.e[i]) m = m.raised(i, tb.mono.e[i]);
        }
        out.terms_.push_back({m, ta.coeff * tb.coeff});
      }
    }
    out.normalize();
    return out;
  }

  Polynomial scaled(const C& c) const {
    Polynomial out(nvars_);
    if (Ops::is_zero(c)) return out;
    out.terms_.reserve(terms_.size());
    for (const Term& t : terms_) {
      C nc = t.coeff * c;
      if (!Ops::is_zero(nc)) out.terms_.push_back({t.mono, nc});
    }
    return out;
  }

  /// Partial derivative with respect to variable var.
  Polynomial derivative(int var) const {
    Polynomial out(nvars_);
    out.terms_.reserve(terms_.size());
    for (const Term& t : terms_) {
      int e = t.mono.e[var];
      if (e == 0) continue;
      out.terms_.push_back({t.mono.lowered(var), Ops::scale(t.coeff, Scalar(e))});
    }
    // lowering one exponent keeps the sort order within the same variable,
    // but not across terms; restore the invariant
    out.normalize();
    return out;
  }

  /// Substitution x_i -> sum_j M(i, j) x_j for a dense linear map.
  Polynomial compose_linear(const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& m) const {
    if (m.rows() != nvars_ || m.cols() != nvars_) {
      throw DimensionError("compose_linear: matrix size does not match variable count");
    }
    std::vector<Polynomial> rows;
    rows.reserve(nvars_);
    for (int i = 0; i < nvars_; ++i) {
      Polynomial row(nvars_);
      for (int j = 0; j < nvars_; ++j) {
        if (m(i, j) == Scalar(0)) continue;
        row.terms_.push_back({Monomial{}.raised(j), Ops::from_scalar(m(i, j))});
      }
      row.normalize();
      rows.push_back(std::move(row));
    }
    Polynomial acc(nvars_);
    for (const Term& t : terms_) {
      Polynomial factor = constant(nvars_, t.coeff);
      for (int i = 0; i < nvars_; ++i) {
        for (int rep = 0; rep < t.mono.e[i]; ++rep) factor = factor * rows[i];
      }
      acc = acc + factor;
    }
    return acc;
  }

  /// Substitution along a signed permutation matrix P (column c holds
  /// sgn[c] at row img[c]): x_i -> sgn[c] x_c where img[c] = i. Exact and
  /// O(terms), used for the basis-mode intertwining sweeps.
  Polynomial compose_signed_perm(const std::vector<int>& img,
                                 const std::vector<std::int8_t>& sgn) const {
    if (static_cast<int>(img.size()) != nvars_) {
      throw DimensionError("compose_signed_perm: permutation size mismatch");
    }
    std::vector<int> inv(nvars_);
    for (int c = 0; c < nvars_; ++c) inv[img[c]] = c;
    Polynomial out(nvars_);
    out.terms_.reserve(terms_.size());
    for (const Term& t : terms_) {
      Monomial m{};
      bool negate = false;
      for (int i = 0; i < nvars_; ++i) {
        int e = t.mono.e[i];
        if (e == 0) continue;
        int c = inv[i];
        m.e[c] = static_cast<std::uint8_t>(e);
        if (sgn[c] < 0 && (e & 1)) negate = !negate;
      }
      out.terms_.push_back({m, negate ? -t.coeff : t.coeff});
    }
    out.normalize();
    return out;
  }

  /// Numeric evaluation at a real point.
  std::complex<double> eval(const std::vector<double>& x) const {
    if (static_cast<int>(x.size()) != nvars_) {
      throw DimensionError("eval: point has wrong dimension");
    }
    std::complex<double> acc{0.0, 0.0};
    for (const Term& t : terms_) {
      double mono = 1.0;
      for (int i = 0; i < nvars_; ++i) {
        for (int rep = 0; rep < t.mono.e[i]; ++rep) mono *= x[i];
      }
      acc += Ops::to_complex(t.coeff) * mono;
    }
    return acc;
  }

  /// Largest coefficient magnitude (0 for the zero polynomial).
  double max_coeff_magnitude() const {
    double best = 0.0;
    for (const Term& t : terms_) best = std::max(best, Ops::magnitude(t.coeff));
    return best;
  }

  /// Restores sortedness, merges duplicate monomials, drops zeros.
  void normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return a.mono < b.mono; });
    std::size_t w = 0;
    for (std::size_t r = 0; r < terms_.size();) {
      Monomial key = terms_[r].mono;
      C acc = std::move(terms_[r].coeff);
      ++r;
      while (r < terms_.size() && terms_[r].mono == key) {
        acc += terms_[r].coeff;
        ++r;
      }
      if (!Ops::is_zero(acc)) {
        terms_[w].mono = key;
        terms_[w].coeff = std::move(acc);
        ++w;
      }
    }
    terms_.resize(w);
  }

  /// Appends a term without restoring invariants; callers batch these and
  /// finish with normalize().
  void push_term_unnormalized(const Monomial& m, C c) {
    terms_.push_back({m, std::move(c)});
  }

  void reserve_terms(std::size_t n) { terms_.reserve(n); }

private:
  static int check_nvars(int nvars) {
    if (nvars < 0 || nvars > kMaxPolyVars) {
      throw DimensionError("Polynomial: variable count out of range");
    }
    return nvars;
  }
  void check_same_vars(const Polynomial& o) const {
    if (nvars_ != o.nvars_) throw DimensionError("Polynomial: mixed variable counts");
  }

  static std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b,
                                       bool subtract) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      bool take_a;
      if (i == a.size()) {
        take_a = false;
      } else if (j == b.size()) {
        take_a = true;
      } else if (a[i].mono == b[j].mono) {
        C c = subtract ? a[i].coeff - b[j].coeff : a[i].coeff + b[j].coeff;
        if (!Ops::is_zero(c)) out.push_back({a[i].mono, std::move(c)});
        ++i;
        ++j;
        continue;
      } else {
        take_a = a[i].mono < b[j].mono;
      }
      if (take_a) {
        out.push_back(a[i]);
        ++i;
      } else {
        out.push_back(subtract ? Term{b[j].mono, -b[j].coeff} : b[j]);
        ++j;
      }
    }
    return out;
  }

  int nvars_;
  std::vector<Term> terms_;
};

/// Calls fn for every exponent multi-index with nvars variables and total
/// degree <= max_degree, in a fixed deterministic order.
inline void for_each_monomial(int nvars, int max_degree,
                              const std::function<void(const Monomial&)>& fn) {
  Monomial m{};
  std::function<void(int, int)> rec = [&](int var, int remaining) {
    if (var == nvars) {
      fn(m);
      return;
    }
    for (int e = 0; e <= remaining; ++e) {
      m.e[var] = static_cast<std::uint8_t>(e);
      rec(var + 1, remaining - e);
    }
    m.e[var] = 0;
  };
  rec(0, max_degree);
}

inline std::size_t monomial_count(int nvars, int max_degree) {
  // C(nvars + max_degree, max_degree)
  std::size_t n = 1;
  for (int i = 1; i <= max_degree; ++i) {
    n = n * static_cast<std::size_t>(nvars + i) / static_cast<std::size_t>(i);
    // far beyond any configurable cap; bail before unsigned wrap
    if (n > (std::size_t{1} << 53)) {
      throw ResourceLimitError("monomial_count: basis size exceeds 2^53");
    }
  }
  return n;
}

}  // namespace heisospec
