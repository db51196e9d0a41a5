#include "heisospec/report.hpp"

#include <array>
#include <charconv>
#include <sstream>

#include "json_support.hpp"

namespace heisospec::report {

std::string format_double(double v) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

std::string algebra_json(const heisalg::HeisenbergAlgebra& alg) {
  return nlohmann::json(alg).dump();
}

heisalg::HeisenbergAlgebra algebra_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  return j.get<heisalg::HeisenbergAlgebra>();
}

std::string residual_record_json(const intertwine::ResidualRecord& rec) {
  return nlohmann::json(rec).dump();
}

std::string profile_json(const classify::PropertyProfile& prof) {
  return nlohmann::json(prof).dump();
}

std::string audibility_json(const classify::AudibilityReport& rep) {
  nlohmann::json j(rep);
  j["schema_version"] = kSchemaVersion;
  return j.dump(2) + "\n";
}

namespace {

const char* mark(bool b) { return b ? "yes" : "no"; }

void render_profile(std::ostream& os, const heisalg::HeisenbergAlgebra& alg,
                    const classify::PropertyProfile& prof) {
  os << "  N(" << alg.p << "," << alg.q << ") over " << compalg::algebra_name(alg.kind)
     << "s (dim v = " << alg.dim_v << ", dim z = " << alg.dim_z << ")\n"
     << "    commutative:              " << mark(prof.commutative) << "\n"
     << "    weakly symmetric (broad): " << mark(prof.weakly_symmetric_broad) << "\n"
     << "    weakly symmetric (narrow):" << mark(prof.weakly_symmetric_narrow) << "\n"
     << "    g.o. space:               " << mark(prof.go_space) << "\n";
}

}  // namespace

std::string audibility_text(const classify::AudibilityReport& rep) {
  std::ostringstream os;
  os << "audibility report (" << rep.scope << ")\n";
  render_profile(os, rep.first, rep.profile_first);
  render_profile(os, rep.second, rep.profile_second);
  os << "  isospectral:       " << mark(rep.isospectral) << "\n";
  os << "  locally isometric: " << mark(rep.locally_isometric) << "\n";
  os << "  inaudible properties:";
  if (rep.inaudible_properties.empty()) {
    os << " (none)";
  } else {
    for (const auto& name : rep.inaudible_properties) os << " " << name;
  }
  os << "\n";
  return os.str();
}

void write_spectrum_csv(std::ostream& os, const std::vector<SpectrumRow>& rows) {
  os << "algebra,p,q,alpha,degree,index,eigenvalue\n";
  for (const SpectrumRow& r : rows) {
    os << r.algebra << ',' << r.p << ',' << r.q << ',' << '"' << r.alpha << '"' << ',' << r.degree
       << ',' << r.index << ',' << format_double(r.eigenvalue) << '\n';
  }
}

}  // namespace heisospec::report
