#include "heisospec/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "heisospec/classify.hpp"
#include "heisospec/report.hpp"
#include "json_support.hpp"

namespace heisospec::cli {

namespace {

using compalg::AlgebraKind;
using compalg::CompositionElement;
using heisalg::HeisenbergAlgebra;
using nlohmann::json;

std::string format_name(OutputFormat f) {
  switch (f) {
    case OutputFormat::json: return "json";
    case OutputFormat::csv: return "csv";
    case OutputFormat::text: return "text";
  }
  return "json";
}

std::vector<int> default_alpha(int dim_z) {
  std::vector<int> a(dim_z, 0);
  a[0] = 1;
  return a;
}

std::vector<int> resolve_alpha(const RunConfig& config, int dim_z) {
  if (config.alpha.empty()) return default_alpha(dim_z);
  if (static_cast<int>(config.alpha.size()) != dim_z) {
    throw InvalidParameterError("alpha must have exactly " + std::to_string(dim_z) +
                                " integer entries for this algebra");
  }
  return config.alpha;
}

json config_json(const RunConfig& config) {
  json j{{"kind", compalg::algebra_name(config.kind)},
         {"p", config.p},
         {"q", config.q},
         {"degree", config.degree},
         {"eig_count", config.eig_count},
         {"seed", config.seed},
         {"trials", config.trials},
         {"format", format_name(config.format)},
         {"tol_float", config.tol_float},
         {"tol_spectrum", config.tol_spectrum},
         {"basis_cap", config.basis_cap}};
  if (!config.alpha.empty()) j["alpha"] = config.alpha;
  if (config.coeff_c) j["coeff_c"] = config.coeff_c->str();
  if (config.nu) {
    std::vector<std::string> nu;
    for (const Rational& v : *config.nu) nu.push_back(v.str());
    j["nu"] = nu;
  }
  if (config.pair_pq) j["pair_with"] = {config.pair_pq->first, config.pair_pq->second};
  if (config.pair) j["pair"] = true;
  return j;
}

/// Routes report text to the configured output file or to `out`.
int emit(const RunConfig& config, std::ostream& out, std::ostream& err,
         const std::string& payload) {
  if (config.output_path.empty()) {
    out << payload;
    return kExitOk;
  }
  std::string path = config.output_path;
  if (const char* dir = std::getenv("HEISOSPEC_OUTPUT_DIR");
      dir && *dir && path.front() != '/') {
    path = std::string(dir) + "/" + path;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) {
    err << "error: cannot open output file '" << path << "'\n";
    return kExitUsage;
  }
  file << payload;
  return kExitOk;
}

Rational random_small_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 5);
  return Rational(num(rng), den(rng));
}

std::vector<Rational> random_rational_vector(std::mt19937_64& rng, int n) {
  std::vector<Rational> v(n);
  for (auto& x : v) x = random_small_rational(rng);
  return v;
}

CompositionElement<Rational> random_integer_element(std::mt19937_64& rng, int dim) {
  std::uniform_int_distribution<int> coord(-9, 9);
  std::vector<Rational> c(dim);
  for (auto& x : c) x = Rational(coord(rng));
  return CompositionElement<Rational>(std::move(c));
}

std::vector<double> random_unit_vector(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<double> v(n);
  double norm2 = 0.0;
  do {
    norm2 = 0.0;
    for (auto& x : v) {
      x = gauss(rng);
      norm2 += x * x;
    }
  } while (norm2 < 1e-8);
  double inv = 1.0 / std::sqrt(norm2);
  for (auto& x : v) x *= inv;
  return v;
}

double max_abs_coord(const CompositionElement<Rational>& e) {
  double best = 0.0;
  for (const Rational& c : e.coords()) best = std::max(best, c.abs().to_double());
  return best;
}

struct Check {
  std::string name;
  double residual = 0.0;
  bool exact = false;
  double tolerance = 0.0;  // 0 means: must be exactly zero
  bool pass = false;
};

void finish(Check& c) { c.pass = c.tolerance == 0.0 ? c.exact : (c.residual < c.tolerance); }

json check_json(const Check& c) {
  return json{{"name", c.name},
              {"residual", c.residual},
              {"exact", c.exact},
              {"tolerance", c.tolerance},
              {"pass", c.pass}};
}

/// Exact nu for the sigma map: the explicit override when given, otherwise
/// the canonical choice (which is rational exactly when the mode direction
/// allows it).
std::vector<Rational> resolve_exact_nu(const RunConfig& config, const std::vector<int>& alpha) {
  std::vector<Rational> z;
  z.reserve(alpha.size());
  for (int a : alpha) z.emplace_back(a);
  if (config.nu) {
    if (config.nu->size() != alpha.size()) {
      throw InvalidParameterError("nu must have the same length as alpha");
    }
    return *config.nu;
  }
  try {
    return intertwine::choose_nu(z);
  } catch (const InvalidParameterError&) {
    throw InvalidParameterError(
        "the canonical nu for this mode is irrational; pass --nu with a rational unit vector "
        "orthogonal to alpha (signed basis modes never need this)");
  }
}

}  // namespace

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.format == OutputFormat::csv) {
    err << "error: verify emits json or text, not csv\n";
    return kExitUsage;
  }
  HeisenbergAlgebra alg = heisalg::build_algebra(config.kind, config.p, config.q);
  const int da = alg.dim_a;
  std::mt19937_64 rng(config.seed);
  std::vector<Check> checks;

  {
    Check c{.name = "compalg_norm_composition", .exact = true};
    for (int t = 0; t < config.trials; ++t) {
      auto x = random_integer_element(rng, da);
      auto y = random_integer_element(rng, da);
      Rational gap = compalg::norm2(x * y) - compalg::norm2(x) * compalg::norm2(y);
      c.exact = c.exact && gap.is_zero();
      c.residual = std::max(c.residual, gap.abs().to_double());
    }
    finish(c);
    checks.push_back(c);
  }
  {
    Check c{.name = "compalg_alternativity", .exact = true};
    for (int t = 0; t < config.trials; ++t) {
      auto x = random_integer_element(rng, da);
      auto y = random_integer_element(rng, da);
      auto left = x * (x * y) - (x * x) * y;
      auto right = (y * x) * x - y * (x * x);
      c.exact = c.exact && left == CompositionElement<Rational>::zero(da) &&
                right == CompositionElement<Rational>::zero(da);
      c.residual = std::max({c.residual, max_abs_coord(left), max_abs_coord(right)});
    }
    finish(c);
    checks.push_back(c);
  }
  {
    // orthogonal pure elements anticommute
    Check c{.name = "compalg_pure_anticommutation", .exact = true};
    for (int t = 0; t < config.trials; ++t) {
      auto zx = random_rational_vector(rng, da - 1);
      auto zy = random_rational_vector(rng, da - 1);
      Rational xx(0), xy(0);
      for (int i = 0; i < da - 1; ++i) {
        xx += zx[i] * zx[i];
        xy += zx[i] * zy[i];
      }
      if (xx.is_zero()) continue;
      for (int i = 0; i < da - 1; ++i) zy[i] -= xy / xx * zx[i];
      auto x = compalg::embed_pure(zx);
      auto y = compalg::embed_pure(zy);
      auto sum = x * y + y * x;
      c.exact = c.exact && sum == CompositionElement<Rational>::zero(da);
      c.residual = std::max(c.residual, max_abs_coord(sum));
    }
    finish(c);
    checks.push_back(c);
  }
  {
    Check c{.name = "heisenberg_type", .exact = true};
    auto rep = heisalg::check_heisenberg_type(alg, config.trials, config.seed);
    c.exact = rep.exact_zero;
    c.residual = rep.max_residual;
    finish(c);
    checks.push_back(c);
  }
  {
    Check c{.name = "bracket_duality", .exact = true};
    for (int t = 0; t < config.trials; ++t) {
      auto x = random_rational_vector(rng, alg.dim_v);
      auto y = random_rational_vector(rng, alg.dim_v);
      auto z = random_rational_vector(rng, alg.dim_z);
      auto br = heisalg::bracket(alg, x, y);
      Rational lhs(0);
      for (int k = 0; k < alg.dim_z; ++k) lhs += br[k] * z[k];
      MatrixQ jz = heisalg::j_matrix(alg, z);
      Rational rhs(0);
      for (int r = 0; r < alg.dim_v; ++r) {
        Rational row(0);
        for (int col = 0; col < alg.dim_v; ++col) row += jz(r, col) * x[col];
        rhs += row * y[r];
      }
      Rational gap = lhs - rhs;
      c.exact = c.exact && gap.is_zero();
      c.residual = std::max(c.residual, gap.abs().to_double());
    }
    finish(c);
    checks.push_back(c);
  }
  {
    Check c{.name = "sigma_orthogonality_exact", .exact = true};
    for (int k = 0; k < alg.dim_z; ++k) {
      std::vector<Rational> z(alg.dim_z, Rational(0));
      z[k] = Rational(1);
      auto sig = intertwine::sigma_map(alg, z);
      MatrixQ gram = sig.matrix.transpose() * sig.matrix;
      for (int i = 0; i < alg.dim_v; ++i) gram(i, i) -= Rational(1);
      Rational worst = max_abs_coeff(gram);
      c.exact = c.exact && worst.is_zero();
      c.residual = std::max(c.residual, worst.to_double());
    }
    finish(c);
    checks.push_back(c);
  }
  {
    Check c{.name = "sigma_orthogonality_float", .tolerance = config.tol_float};
    for (int t = 0; t < config.trials; ++t) {
      auto z = random_unit_vector(rng, alg.dim_z);
      auto sig = intertwine::sigma_map(alg, z);
      Eigen::MatrixXd gram = sig.matrix.transpose() * sig.matrix;
      gram -= Eigen::MatrixXd::Identity(alg.dim_v, alg.dim_v);
      c.residual = std::max(c.residual, gram.norm());
    }
    finish(c);
    checks.push_back(c);
  }
  std::vector<intertwine::ResidualRecord> records;
  {
    Check c{.name = "j_intertwine_exact", .exact = true};
    const Rational scales[] = {Rational(1), Rational(-2), Rational(1, 3)};
    for (int k = 0; k < alg.dim_z; ++k) {
      std::vector<Rational> z(alg.dim_z, Rational(0));
      z[k] = Rational(1);
      auto sig = intertwine::sigma_map(alg, z);
      Rational worst(0);
      for (const Rational& s : scales) {
        MatrixQ res = intertwine::j_intertwine_residual(sig, s);
        Rational w = max_abs_coeff(res);
        if (worst < w) worst = w;
      }
      c.exact = c.exact && worst.is_zero();
      c.residual = std::max(c.residual, worst.to_double());
      records.push_back(
          intertwine::make_residual_record(sig, worst.to_double(), worst.is_zero()));
    }
    finish(c);
    checks.push_back(c);
  }
  {
    Check c{.name = "j_intertwine_float", .tolerance = config.tol_float};
    for (int t = 0; t < config.trials; ++t) {
      auto z = random_unit_vector(rng, alg.dim_z);
      auto sig = intertwine::sigma_map(alg, z);
      Eigen::MatrixXd res = intertwine::j_intertwine_residual(sig, 1.0);
      double norm = intertwine::frobenius_norm(res);
      if (norm > c.residual) {
        c.residual = norm;
        if (!records.empty() && !records.back().exact) records.pop_back();
        records.push_back(intertwine::make_residual_record(sig, norm, false));
      }
    }
    finish(c);
    checks.push_back(c);
  }

  bool all_pass = true;
  for (const Check& c : checks) all_pass = all_pass && c.pass;

  std::string payload;
  if (config.format == OutputFormat::json) {
    json j{{"schema_version", report::kSchemaVersion},
           {"command", "verify"},
           {"config", config_json(config)},
           {"pass", all_pass}};
    for (const Check& c : checks) j["checks"].push_back(check_json(c));
    for (const auto& rec : records) j["intertwine_residuals"].push_back(rec);
    payload = j.dump(2) + "\n";
  } else {
    std::ostringstream os;
    for (const Check& c : checks) {
      os << (c.pass ? "PASS" : "FAIL") << "  " << c.name << "  residual=" << c.residual
         << (c.exact ? " (exact)" : "") << "\n";
    }
    os << (all_pass ? "all checks passed" : "CHECK FAILURES PRESENT") << "\n";
    payload = os.str();
  }
  int rc = emit(config, out, err, payload);
  if (rc != kExitOk) return rc;
  return all_pass ? kExitOk : kExitCheckFailure;
}

int cmd_intertwine(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.format == OutputFormat::csv) {
    err << "error: intertwine emits json or text, not csv\n";
    return kExitUsage;
  }
  HeisenbergAlgebra src = heisalg::build_algebra(config.kind, config.p, config.q);
  HeisenbergAlgebra dst = heisalg::build_algebra(config.kind, config.p + config.q, 0);
  std::vector<int> alpha = resolve_alpha(config, src.dim_z);
  spectral::FourierMode mode{alpha};

  intertwine::SigmaMap<Rational> sig;
  if (mode.is_zero_mode()) {
    sig = intertwine::sigma_identity<Rational>(src);
  } else if (src.q == 0) {
    sig = intertwine::sigma_map(src, mode.z_vector<Rational>());
  } else {
    sig = intertwine::sigma_map(src, mode.z_vector<Rational>(),
                                std::optional(resolve_exact_nu(config, alpha)));
  }

  const std::size_t sweep_size = monomial_count(src.dim_v, config.degree);
  if (sweep_size > config.sweep_cap) {
    throw ResourceLimitError("intertwine: sweep of " + std::to_string(sweep_size) +
                             " monomials exceeds cap " + std::to_string(config.sweep_cap));
  }
  auto src_op = spectral::fiber_operator(src, mode, config.coeff_c);
  auto dst_op = spectral::fiber_operator(dst, mode, config.coeff_c);
  auto rep = spectral::intertwine_residual_sym(src_op, dst_op, sig, config.degree, config.threads);

  std::string payload;
  if (config.format == OutputFormat::json) {
    json j{{"schema_version", report::kSchemaVersion},
           {"command", "intertwine"},
           {"config", config_json(config)},
           {"monomials_checked", rep.monomials_checked},
           {"exact_zero", rep.exact_zero},
           {"max_residual", rep.max_residual},
           {"pass", rep.exact_zero}};
    for (int d = 0; d <= rep.max_degree; ++d) {
      j["per_degree"].push_back(json{{"degree", d}, {"max_residual", rep.per_degree_max[d]}});
    }
    payload = j.dump(2) + "\n";
  } else {
    std::ostringstream os;
    os << "operator intertwining residuals, (" << config.p << "," << config.q << ") vs ("
       << config.p + config.q << ",0), mode " << mode.str() << "\n";
    for (int d = 0; d <= rep.max_degree; ++d) {
      os << "  degree " << d << ": max residual " << rep.per_degree_max[d] << "\n";
    }
    os << (rep.exact_zero ? "exactly zero at every degree" : "NONZERO RESIDUAL FOUND") << "\n";
    payload = os.str();
  }
  int rc = emit(config, out, err, payload);
  if (rc != kExitOk) return rc;
  return rep.exact_zero ? kExitOk : kExitCheckFailure;
}

int cmd_spectrum(const RunConfig& config, std::ostream& out, std::ostream& err) {
  HeisenbergAlgebra first = heisalg::build_algebra(config.kind, config.p, config.q);
  std::vector<int> alpha = resolve_alpha(config, first.dim_z);
  spectral::FourierMode mode{alpha};

  std::vector<HeisenbergAlgebra> algebras{first};
  if (config.pair_pq) {
    algebras.push_back(
        heisalg::build_algebra(config.kind, config.pair_pq->first, config.pair_pq->second));
  } else if (config.pair) {
    algebras.push_back(heisalg::build_algebra(config.kind, config.p + config.q, 0));
  }

  std::vector<std::vector<double>> spectra;
  std::vector<report::SpectrumRow> rows;
  for (const auto& alg : algebras) {
    auto op = spectral::fiber_operator(alg, mode, config.coeff_c);
    auto trunc = spectral::hermite_matrix(op, config.degree, config.basis_cap);
    auto eigs = spectral::extreme_eigenvalues(trunc.matrix, config.eig_count);
    for (std::size_t i = 0; i < eigs.size(); ++i) {
      rows.push_back({compalg::algebra_name(alg.kind), alg.p, alg.q, mode.str(), config.degree,
                      static_cast<int>(i), eigs[i]});
    }
    spectra.push_back(std::move(eigs));
  }

  double max_diff = 0.0;
  const bool paired = spectra.size() == 2;
  if (paired) {
    for (std::size_t i = 0; i < std::min(spectra[0].size(), spectra[1].size()); ++i) {
      max_diff = std::max(max_diff, std::abs(spectra[0][i] - spectra[1][i]));
    }
  }
  const bool pass = !paired || max_diff < config.tol_spectrum;

  std::string payload;
  if (config.format == OutputFormat::csv) {
    std::ostringstream os;
    report::write_spectrum_csv(os, rows);
    payload = os.str();
  } else if (config.format == OutputFormat::json) {
    json j{{"schema_version", report::kSchemaVersion},
           {"command", "spectrum"},
           {"config", config_json(config)}};
    for (std::size_t a = 0; a < algebras.size(); ++a) {
      j["spectra"].push_back(json{{"algebra", algebras[a]}, {"eigenvalues", spectra[a]}});
    }
    if (paired) {
      j["max_abs_diff"] = max_diff;
      j["pass"] = pass;
    }
    payload = j.dump(2) + "\n";
  } else {
    std::ostringstream os;
    for (std::size_t a = 0; a < algebras.size(); ++a) {
      os << "N(" << algebras[a].p << "," << algebras[a].q << ") truncated spectrum:";
      for (double v : spectra[a]) os << " " << report::format_double(v);
      os << "\n";
    }
    if (paired) os << "max |diff| = " << report::format_double(max_diff) << "\n";
    payload = os.str();
  }
  int rc = emit(config, out, err, payload);
  if (rc != kExitOk) return rc;
  return pass ? kExitOk : kExitCheckFailure;
}

int cmd_classify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.format == OutputFormat::csv) {
    err << "error: classify emits json or text, not csv\n";
    return kExitUsage;
  }
  HeisenbergAlgebra alg = heisalg::build_algebra(config.kind, config.p, config.q);
  auto prof = classify::classify_algebra(alg);

  std::string payload;
  if (config.format == OutputFormat::json) {
    json j{{"schema_version", report::kSchemaVersion},
           {"command", "classify"},
           {"config", config_json(config)},
           {"algebra", alg},
           {"isotypic_signature", heisalg::isotypic_signature(alg)},
           {"isotypic", heisalg::is_isotypic(alg)},
           {"profile", prof}};
    payload = j.dump(2) + "\n";
  } else {
    std::ostringstream os;
    os << "N(" << alg.p << "," << alg.q << ") over " << compalg::algebra_name(alg.kind)
       << "s: signature " << heisalg::isotypic_signature(alg) << ", "
       << (heisalg::is_isotypic(alg) ? "isotypic" : "non-isotypic") << "\n"
       << "  commutative:               " << (prof.commutative ? "yes" : "no") << "\n"
       << "  weakly symmetric (broad):  " << (prof.weakly_symmetric_broad ? "yes" : "no") << "\n"
       << "  weakly symmetric (narrow): " << (prof.weakly_symmetric_narrow ? "yes" : "no") << "\n"
       << "  g.o. space:                " << (prof.go_space ? "yes" : "no") << "\n";
    payload = os.str();
  }
  return emit(config, out, err, payload);
}

int cmd_report(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.format == OutputFormat::csv) {
    err << "error: report emits json or text, not csv\n";
    return kExitUsage;
  }
  HeisenbergAlgebra a = heisalg::build_algebra(config.kind, config.p, config.q);
  std::pair<int, int> other =
      config.pair_pq ? *config.pair_pq : std::make_pair(config.p + config.q, 0);
  HeisenbergAlgebra b = heisalg::build_algebra(config.kind, other.first, other.second);
  auto rep = classify::audibility_report(a, b);

  std::string payload;
  if (config.format == OutputFormat::json) {
    json j(rep);
    j["schema_version"] = report::kSchemaVersion;
    j["command"] = "report";
    j["config"] = config_json(config);
    payload = j.dump(2) + "\n";
  } else {
    payload = report::audibility_text(rep);
  }
  return emit(config, out, err, payload);
}

namespace {

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string tok = text.substr(start, comma == std::string::npos ? comma : comma - start);
    if (tok.empty()) throw InvalidParameterError("empty entry in integer list '" + text + "'");
    std::size_t pos = 0;
    int value = 0;
    try {
      value = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      throw InvalidParameterError("not an integer: '" + tok + "'");
    }
    if (pos != tok.size()) {
      throw InvalidParameterError("mode entries must be integers (lattice points), got '" + tok +
                                  "'");
    }
    out.push_back(value);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string tok = text.substr(start, comma == std::string::npos ? comma : comma - start);
    out.push_back(Rational::parse(tok));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

struct ParsedArgs {
  RunConfig config;
  std::function<int(const RunConfig&, std::ostream&, std::ostream&)> command;
};

void add_common_options(CLI::App* cmd, RunConfig& config, std::string& alpha_text,
                        std::string& coeff_text, std::string& nu_text, std::string& pair_text,
                        std::string& format_text) {
  std::map<std::string, AlgebraKind> kinds{{"quaternion", AlgebraKind::quaternion},
                                           {"octonion", AlgebraKind::octonion}};
  cmd->add_option("--kind", config.kind, "composition algebra")
      ->transform(CLI::CheckedTransformer(kinds, CLI::ignore_case));
  cmd->add_option("-p", config.p, "left-action slot count");
  cmd->add_option("-q", config.q, "right-action slot count");
  cmd->add_option("--alpha", alpha_text, "mode as comma-separated integers (length dim z)");
  cmd->add_option("-d,--degree", config.degree, "truncation / sweep degree")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--coeff-c", coeff_text, "radial coefficient (rational, default dim_v/4)");
  cmd->add_option("--nu", nu_text, "explicit sigma direction (comma-separated rationals)");
  cmd->add_option("-k,--eigs", config.eig_count, "extreme eigenvalue count")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", config.seed, "random seed");
  cmd->add_option("--trials", config.trials, "random trials per randomized check")
      ->check(CLI::PositiveNumber);
  cmd->add_option("-o,--output", config.output_path,
                  "output file (relative paths resolve under HEISOSPEC_OUTPUT_DIR)");
  cmd->add_option("--format", format_text, "json | csv | text");
  cmd->add_option("--pair-with", pair_text, "second algebra P,Q for pair commands");
  cmd->add_option("--tol-float", config.tol_float, "floating residual tolerance");
  cmd->add_option("--tol-spectrum", config.tol_spectrum, "paired spectrum tolerance");
  cmd->add_option("--basis-cap", config.basis_cap, "hard cap on Hermite basis size");
  cmd->add_option("--sweep-cap", config.sweep_cap, "hard cap on symbolic sweep size");
  cmd->add_option("--threads", config.threads, "worker threads (0 = hardware)");
}

void finalize_config(RunConfig& config, const std::string& alpha_text,
                     const std::string& coeff_text, const std::string& nu_text,
                     const std::string& pair_text, const std::string& format_text) {
  if (!alpha_text.empty()) config.alpha = parse_int_list(alpha_text);
  if (!coeff_text.empty()) config.coeff_c = Rational::parse(coeff_text);
  if (!nu_text.empty()) config.nu = parse_rational_list(nu_text);
  if (!pair_text.empty()) {
    auto pq = parse_int_list(pair_text);
    if (pq.size() != 2) throw InvalidParameterError("--pair-with expects P,Q");
    config.pair_pq = std::make_pair(pq[0], pq[1]);
  }
  if (!format_text.empty()) {
    if (format_text == "json") {
      config.format = OutputFormat::json;
    } else if (format_text == "csv") {
      config.format = OutputFormat::csv;
    } else if (format_text == "text") {
      config.format = OutputFormat::text;
    } else {
      throw InvalidParameterError("unknown format '" + format_text + "'");
    }
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"generalized Heisenberg group isospectrality toolkit"};
  app.require_subcommand(1);

  struct SubcommandState {
    RunConfig config;
    std::string alpha_text, coeff_text, nu_text, pair_text, pair_spec_text, format_text;
    CLI::App* cmd = nullptr;
  };
  std::map<std::string, SubcommandState> subs;
  const std::pair<const char*, const char*> names[] = {
      {"verify", "run the exact and floating invariant suites"},
      {"intertwine", "sweep the symbolic operator intertwining residual"},
      {"spectrum", "emit truncated fiber spectra (optionally a pair comparison)"},
      {"classify", "property profile of one algebra"},
      {"report", "audibility report for a pair of algebras"},
  };
  for (const auto& [name, help] : names) {
    SubcommandState& st = subs[name];
    st.cmd = app.add_subcommand(name, help);
    add_common_options(st.cmd, st.config, st.alpha_text, st.coeff_text, st.nu_text, st.pair_text,
                       st.format_text);
    if (std::string(name) == "spectrum") {
      st.cmd->add_flag("--pair", st.config.pair, "compare against the isotypic partner (p+q, 0)");
    }
    if (std::string(name) == "report") {
      st.cmd->add_option("--pair", st.pair_spec_text, "both algebras as P1,Q1:P2,Q2");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    for (auto& [name, st] : subs) {
      if (!st.cmd->parsed()) continue;
      finalize_config(st.config, st.alpha_text, st.coeff_text, st.nu_text, st.pair_text,
                      st.format_text);
      if (!st.pair_spec_text.empty()) {
        std::size_t colon = st.pair_spec_text.find(':');
        if (colon == std::string::npos) {
          throw InvalidParameterError("--pair expects P1,Q1:P2,Q2");
        }
        auto first = parse_int_list(st.pair_spec_text.substr(0, colon));
        auto second = parse_int_list(st.pair_spec_text.substr(colon + 1));
        if (first.size() != 2 || second.size() != 2) {
          throw InvalidParameterError("--pair expects P1,Q1:P2,Q2");
        }
        st.config.p = first[0];
        st.config.q = first[1];
        st.config.pair_pq = std::make_pair(second[0], second[1]);
      }
      if (name == "verify") return cmd_verify(st.config, out, err);
      if (name == "intertwine") return cmd_intertwine(st.config, out, err);
      if (name == "spectrum") return cmd_spectrum(st.config, out, err);
      if (name == "classify") return cmd_classify(st.config, out, err);
      if (name == "report") return cmd_report(st.config, out, err);
    }
  } catch (const ResourceLimitError& e) {
    err << "resource error: " << e.what() << "\n";
    return kExitResource;
  } catch (const OverflowError& e) {
    err << "resource error: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  err << "error: no subcommand selected\n";
  return kExitUsage;
}

}  // namespace heisospec::cli
