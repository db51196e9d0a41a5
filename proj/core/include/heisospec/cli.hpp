#pragma once

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "heisospec/compalg.hpp"
#include "heisospec/rational.hpp"
#include "heisospec/spectral.hpp"

namespace heisospec::cli {

enum class OutputFormat { json, csv, text };

/// One resolved invocation. A fixed config and seed reproduce every report
/// byte for byte.
struct RunConfig {
  compalg::AlgebraKind kind = compalg::AlgebraKind::octonion;
  int p = 1;
  int q = 1;
  std::vector<int> alpha;                     // empty: first center basis mode
  int degree = 3;                             // truncation / sweep degree
  std::optional<Rational> coeff_c;            // radial coefficient override
  std::optional<std::vector<Rational>> nu;    // explicit sigma direction
  int eig_count = 20;
  std::uint64_t seed = 1;
  int trials = 100;                           // random draws in verify suites
  std::string output_path;                    // empty: stdout
  OutputFormat format = OutputFormat::json;
  std::optional<std::pair<int, int>> pair_pq; // second algebra of a pair
  bool pair = false;                          // compare against (p+q, 0)
  double tol_float = 1e-12;
  double tol_spectrum = 1e-8;
  std::size_t basis_cap = spectral::kDefaultBasisCap;
  std::size_t sweep_cap = 1000000;  // monomial budget for symbolic sweeps
  int threads = 0;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitResource = 3;

/// Exact + floating invariant suites: composition-algebra laws, the
/// Heisenberg-type identity, bracket duality, sigma orthogonality and the
/// matrix-level intertwining residuals.
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Symbolic operator-level intertwining residual per polynomial degree.
int cmd_intertwine(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Truncated fiber spectra (optionally a pair comparison) as CSV or JSON.
int cmd_spectrum(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Property profile of one algebra.
int cmd_classify(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Audibility report for a pair of algebras.
int cmd_report(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full argv front end; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out = std::cout,
            std::ostream& err = std::cerr);

}  // namespace heisospec::cli
