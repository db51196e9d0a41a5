#include <benchmark/benchmark.h>

#include <random>

#include "heisospec/spectral.hpp"

using namespace heisospec;
using compalg::AlgebraKind;

namespace {

std::vector<Rational> random_rational_vector(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 5);
  std::vector<Rational> v(n);
  for (auto& x : v) x = Rational(num(rng), den(rng));
  return v;
}

void BM_JMatrix(benchmark::State& state) {
  auto alg = heisalg::build_algebra(AlgebraKind::octonion, 1, 1);
  std::mt19937_64 rng(7);
  auto z = random_rational_vector(rng, alg.dim_z);
  for (auto _ : state) {
    auto m = heisalg::j_matrix(alg, z);
    benchmark::DoNotOptimize(m);
  }
}
BENCHMARK(BM_JMatrix);

void BM_Bracket(benchmark::State& state) {
  auto alg = heisalg::build_algebra(AlgebraKind::octonion, 1, 1);
  std::mt19937_64 rng(11);
  auto x = random_rational_vector(rng, alg.dim_v);
  auto y = random_rational_vector(rng, alg.dim_v);
  for (auto _ : state) {
    auto z = heisalg::bracket(alg, x, y);
    benchmark::DoNotOptimize(z);
  }
}
BENCHMARK(BM_Bracket);

void BM_FiberApplyMonomial(benchmark::State& state) {
  auto alg = heisalg::build_algebra(AlgebraKind::octonion, 1, 1);
  auto mode = spectral::basis_mode(7, 0);
  auto op = spectral::fiber_operator(alg, mode);
  Monomial m{};
  for (int i = 0; i < static_cast<int>(state.range(0)); ++i) m = m.raised(i % 16);
  auto f = spectral::ModePolynomial<PiComplex>::monomial(16, mode, m,
                                                         CoeffOps<PiComplex>::one());
  for (auto _ : state) {
    auto img = spectral::fiber_apply(op, f);
    benchmark::DoNotOptimize(img);
  }
}
BENCHMARK(BM_FiberApplyMonomial)->Arg(2)->Arg(4)->Arg(6);

void BM_IntertwineResidualSweep(benchmark::State& state) {
  auto src = heisalg::build_algebra(AlgebraKind::octonion, 1, 1);
  auto dst = heisalg::build_algebra(AlgebraKind::octonion, 2, 0);
  auto mode = spectral::basis_mode(7, 0);
  auto sig = intertwine::sigma_map(src, mode.z_vector<Rational>());
  auto src_op = spectral::fiber_operator(src, mode);
  auto dst_op = spectral::fiber_operator(dst, mode);
  const int degree = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto rep = spectral::intertwine_residual_sym(src_op, dst_op, sig, degree, 1);
    benchmark::DoNotOptimize(rep);
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(monomial_count(16, degree)));
}
BENCHMARK(BM_IntertwineResidualSweep)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_HermiteAssembly(benchmark::State& state) {
  auto alg = heisalg::build_algebra(AlgebraKind::quaternion, 1, 1);
  auto op = spectral::fiber_operator(alg, spectral::basis_mode(3, 0));
  const int degree = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto tr = spectral::hermite_matrix(op, degree);
    benchmark::DoNotOptimize(tr);
  }
}
BENCHMARK(BM_HermiteAssembly)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_DenseEigensolve(benchmark::State& state) {
  auto alg = heisalg::build_algebra(AlgebraKind::quaternion, 1, 1);
  auto op = spectral::fiber_operator(alg, spectral::basis_mode(3, 0));
  auto tr = spectral::hermite_matrix(op, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto eigs = spectral::extreme_eigenvalues(tr.matrix, 10);
    benchmark::DoNotOptimize(eigs);
  }
  state.SetLabel("n=" + std::to_string(tr.basis.size()));
}
BENCHMARK(BM_DenseEigensolve)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
