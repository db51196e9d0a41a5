// Internal nlohmann adapters shared by report.cpp and cli.cpp; not installed.
#pragma once

#include <json.hpp>

#include "heisospec/classify.hpp"
#include "heisospec/intertwine.hpp"

namespace heisospec::heisalg {

inline void to_json(nlohmann::json& j, const HeisenbergAlgebra& alg) {
  j = nlohmann::json{{"kind", compalg::algebra_name(alg.kind)}, {"p", alg.p}, {"q", alg.q}};
}

inline void from_json(const nlohmann::json& j, HeisenbergAlgebra& alg) {
  std::string kind = j.at("kind").get<std::string>();
  compalg::AlgebraKind k;
  if (kind == "quaternion") {
    k = compalg::AlgebraKind::quaternion;
  } else if (kind == "octonion") {
    k = compalg::AlgebraKind::octonion;
  } else {
    throw InvalidParameterError("algebra kind must be quaternion or octonion, got '" + kind + "'");
  }
  alg = build_algebra(k, j.at("p").get<int>(), j.at("q").get<int>());
}

}  // namespace heisospec::heisalg

namespace heisospec::intertwine {

inline void to_json(nlohmann::json& j, const ResidualRecord& rec) {
  j = nlohmann::json{{"p", rec.p},
                     {"q", rec.q},
                     {"z_dir", rec.z_dir},
                     {"nu", rec.nu},
                     {"residual_norm", rec.residual_norm},
                     {"exact", rec.exact}};
}

}  // namespace heisospec::intertwine

namespace heisospec::classify {

inline void to_json(nlohmann::json& j, const PropertyProfile& prof) {
  j = nlohmann::json{{"commutative", prof.commutative},
                     {"weakly_symmetric_broad", prof.weakly_symmetric_broad},
                     {"weakly_symmetric_narrow", prof.weakly_symmetric_narrow},
                     {"go_space", prof.go_space}};
}

inline void to_json(nlohmann::json& j, const AudibilityReport& rep) {
  j = nlohmann::json{{"pair", nlohmann::json::array({rep.first, rep.second})},
                     {"isospectral", rep.isospectral},
                     {"locally_isometric", rep.locally_isometric},
                     {"profiles", nlohmann::json::array({rep.profile_first, rep.profile_second})},
                     {"inaudible_properties", rep.inaudible_properties},
                     {"scope", rep.scope}};
}

}  // namespace heisospec::classify
