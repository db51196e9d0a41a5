#include "heisospec/heisalg.hpp"

#include <random>

namespace heisospec::heisalg {

SignedPerm SignedPerm::after(const SignedPerm& b) const {
  SignedPerm out;
  const int n = size();
  out.img.resize(n);
  out.sgn.resize(n);
  for (int c = 0; c < n; ++c) {
    out.img[c] = img[b.img[c]];
    out.sgn[c] = static_cast<std::int8_t>(sgn[b.img[c]] * b.sgn[c]);
  }
  return out;
}

SignedPerm SignedPerm::inverse() const {
  SignedPerm out;
  const int n = size();
  out.img.resize(n);
  out.sgn.resize(n);
  for (int c = 0; c < n; ++c) {
    out.img[img[c]] = c;
    out.sgn[img[c]] = sgn[c];
  }
  return out;
}

int SignedPerm::trace() const {
  int t = 0;
  for (int c = 0; c < size(); ++c) {
    if (img[c] == c) t += sgn[c];
  }
  return t;
}

bool SignedPerm::is_identity() const {
  for (int c = 0; c < size(); ++c) {
    if (img[c] != c || sgn[c] != 1) return false;
  }
  return true;
}

HeisenbergAlgebra build_algebra(AlgebraKind kind, int p, int q) {
  if (p < 0 || q < 0 || p + q < 1) {
    throw InvalidParameterError("build_algebra: need p >= 0, q >= 0, p + q >= 1");
  }
  HeisenbergAlgebra alg;
  alg.kind = kind;
  alg.p = p;
  alg.q = q;
  alg.dim_a = compalg::algebra_dim(kind);
  alg.dim_v = alg.dim_a * (p + q);
  alg.dim_z = alg.dim_a - 1;

  const compalg::MulTable& table = compalg::mul_table(alg.dim_a);
  alg.j_basis.resize(alg.dim_z);
  for (int k = 0; k < alg.dim_z; ++k) {
    SignedPerm& perm = alg.j_basis[k];
    perm.img.resize(alg.dim_v);
    perm.sgn.resize(alg.dim_v);
    const int u = k + 1;  // pure basis element of A
    for (int slot = 0; slot < p + q; ++slot) {
      const int off = slot * alg.dim_a;
      for (int c = 0; c < alg.dim_a; ++c) {
        // left multiplication Z * X on the first p slots, right X * Z after
        const bool left = slot < p;
        const int a = left ? u : c;
        const int b = left ? c : u;
        perm.img[off + c] = off + table.idx[a][b];
        perm.sgn[off + c] = table.sign[a][b];
      }
    }
  }
  return alg;
}

namespace {

Rational random_small_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 5);
  return Rational(num(rng), den(rng));
}

/// Exact residual max |(j_Z^2 + |Z|^2 I)_{rc}| for one direction.
Rational heisenberg_residual(const HeisenbergAlgebra& alg, const std::vector<Rational>& z) {
  MatrixQ j = j_matrix(alg, z);
  MatrixQ sq = j * j;
  Rational n2(0);
  for (const Rational& v : z) n2 += v * v;
  for (int i = 0; i < alg.dim_v; ++i) sq(i, i) += n2;
  return max_abs_coeff(sq);
}

}  // namespace

HeisenbergTypeReport check_heisenberg_type(const HeisenbergAlgebra& alg, int random_trials,
                                           std::uint64_t seed) {
  HeisenbergTypeReport report;
  Rational worst(0);
  for (int k = 0; k < alg.dim_z; ++k) {
    std::vector<Rational> z(alg.dim_z, Rational(0));
    z[k] = Rational(1);
    Rational r = heisenberg_residual(alg, z);
    if (worst < r) worst = r;
    ++report.directions_checked;
  }
  std::mt19937_64 rng(seed);
  for (int t = 0; t < random_trials; ++t) {
    std::vector<Rational> z(alg.dim_z);
    for (auto& v : z) v = random_small_rational(rng);
    Rational r = heisenberg_residual(alg, z);
    if (worst < r) worst = r;
    ++report.directions_checked;
  }
  report.exact_zero = worst.is_zero();
  report.max_residual = worst.to_double();
  return report;
}

SignedPerm volume_element_perm(const HeisenbergAlgebra& alg) {
  SignedPerm acc = alg.j_basis[0];
  for (int k = 1; k < alg.dim_z; ++k) acc = acc.after(alg.j_basis[k]);
  return acc;
}

Eigen::MatrixXd volume_element(const HeisenbergAlgebra& alg) {
  return volume_element_perm(alg).to_matrix<double>();
}

int isotypic_signature(const HeisenbergAlgebra& alg) {
  int t = volume_element_perm(alg).trace();
  return t / alg.dim_a;
}

}  // namespace heisospec::heisalg
