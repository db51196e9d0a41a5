#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "heisospec/classify.hpp"
#include "heisospec/intertwine.hpp"

namespace heisospec::report {

/// Version stamped into every JSON document this toolkit emits.
inline constexpr int kSchemaVersion = 1;

/// {"kind": ..., "p": ..., "q": ...}
std::string algebra_json(const heisalg::HeisenbergAlgebra& alg);
heisalg::HeisenbergAlgebra algebra_from_json(const std::string& text);

/// {"p", "q", "z_dir", "nu", "residual_norm", "exact"}
std::string residual_record_json(const intertwine::ResidualRecord& rec);

std::string profile_json(const classify::PropertyProfile& prof);

std::string audibility_json(const classify::AudibilityReport& rep);
std::string audibility_text(const classify::AudibilityReport& rep);

/// One spectrum table row; CSV columns are exactly
/// algebra,p,q,alpha,degree,index,eigenvalue.
struct SpectrumRow {
  std::string algebra;
  int p = 0;
  int q = 0;
  std::string alpha;
  int degree = 0;
  int index = 0;
  double eigenvalue = 0.0;
};

void write_spectrum_csv(std::ostream& os, const std::vector<SpectrumRow>& rows);

/// Fixed shortest-roundtrip rendering so identical runs emit identical bytes.
std::string format_double(double v);

}  // namespace heisospec::report
