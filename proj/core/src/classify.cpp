#include "heisospec/classify.hpp"

namespace heisospec::classify {

int irreducible_module_dim(int dim_z) {
  if (dim_z < 1) throw InvalidParameterError("irreducible_module_dim: need dim z >= 1");
  // dims for m = 1..8, extended by periodicity d(m + 8) = 16 d(m)
  static constexpr int kTable[8] = {2, 4, 4, 8, 8, 8, 8, 16};
  int factor = 1;
  int m = dim_z;
  while (m > 8) {
    factor *= 16;
    m -= 8;
  }
  return kTable[m - 1] * factor;
}

bool realizable(int dim_z, int dim_v) {
  if (dim_z < 1 || dim_v < 1) return false;
  return dim_v % irreducible_module_dim(dim_z) == 0;
}

PropertyProfile classify(int dim_z, int dim_v, bool isotypic) {
  if (!realizable(dim_z, dim_v)) {
    throw InvalidParameterError("classify: (dim z, dim v) = (" + std::to_string(dim_z) + ", " +
                                std::to_string(dim_v) + ") is not realizable");
  }
  const bool two_module_types = dim_z % 4 == 3;
  if (!two_module_types) {
    isotypic = true;  // a unique irreducible module: trivially isotypic
  } else if (!isotypic && dim_v == irreducible_module_dim(dim_z)) {
    throw InvalidParameterError("classify: a single irreducible summand is always isotypic");
  }

  PropertyProfile prof;
  prof.commutative = (dim_z <= 3) || (dim_z == 5 && dim_v == 8) || (dim_z == 6 && dim_v == 8) ||
                     (dim_z == 7 && dim_v == 8) || (dim_z == 7 && dim_v == 16 && isotypic);
  prof.weakly_symmetric_broad = prof.commutative;
  prof.weakly_symmetric_narrow = prof.weakly_symmetric_broad && dim_z != 1;
  prof.go_space = prof.commutative || (dim_z == 7 && dim_v == 24 && isotypic);
  return prof;
}

PropertyProfile classify_algebra(const HeisenbergAlgebra& alg) {
  return classify(alg.dim_z, alg.dim_v, heisalg::is_isotypic(alg));
}

AudibilityReport audibility_report(const HeisenbergAlgebra& a, const HeisenbergAlgebra& b) {
  if (a.kind != b.kind) {
    throw InvalidParameterError("audibility_report: algebras must share the composition algebra");
  }
  AudibilityReport rep;
  rep.first = a;
  rep.second = b;
  rep.isospectral = (a.p + a.q == b.p + b.q);
  rep.locally_isometric = (a.p == b.p && a.q == b.q) || (a.p == b.q && a.q == b.p);
  rep.profile_first = classify_algebra(a);
  rep.profile_second = classify_algebra(b);
  if (rep.isospectral && !rep.locally_isometric) {
    const PropertyProfile& pa = rep.profile_first;
    const PropertyProfile& pb = rep.profile_second;
    if (pa.commutative != pb.commutative) rep.inaudible_properties.push_back("commutative");
    if (pa.weakly_symmetric_broad != pb.weakly_symmetric_broad) {
      rep.inaudible_properties.push_back("weakly_symmetric_broad");
    }
    if (pa.weakly_symmetric_narrow != pb.weakly_symmetric_narrow) {
      rep.inaudible_properties.push_back("weakly_symmetric_narrow");
    }
    if (pa.go_space != pb.go_space) rep.inaudible_properties.push_back("go_space");
  }
  return rep;
}

}  // namespace heisospec::classify
