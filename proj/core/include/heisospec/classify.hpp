#pragma once

#include <string>
#include <vector>

#include "heisospec/heisalg.hpp"

namespace heisospec::classify {

using heisalg::HeisenbergAlgebra;

/// Symmetric-like property flags for one generalized Heisenberg group.
/// For this family weak symmetry in the broad sense coincides with
/// commutativity, and the narrow sense drops out only at dim z = 1.
struct PropertyProfile {
  bool commutative = false;
  bool weakly_symmetric_broad = false;
  bool weakly_symmetric_narrow = false;
  bool go_space = false;

  friend bool operator==(const PropertyProfile& a, const PropertyProfile& b) {
    return a.commutative == b.commutative &&
           a.weakly_symmetric_broad == b.weakly_symmetric_broad &&
           a.weakly_symmetric_narrow == b.weakly_symmetric_narrow && a.go_space == b.go_space;
  }
  friend bool operator!=(const PropertyProfile& a, const PropertyProfile& b) { return !(a == b); }
};

/// Dimension of the irreducible Clifford module for an m-dimensional center
/// with negative definite form.
int irreducible_module_dim(int dim_z);

/// True when (dim_z, dim_v) is attained by some generalized Heisenberg
/// algebra, i.e. dim_v is a positive multiple of the irreducible module
/// dimension.
bool realizable(int dim_z, int dim_v);

/// Table lookup over the classification of commutative, weakly symmetric
/// and g.o. generalized Heisenberg groups. Cases outside the lists are
/// negative by the classifications, not unknown. For dim z = 3 mod 4 the
/// isotypic flag distinguishes the two module types; otherwise every module
/// is isotypic and the flag is ignored.
PropertyProfile classify(int dim_z, int dim_v, bool isotypic);

/// classify() composed with the volume-element signature of the algebra.
PropertyProfile classify_algebra(const HeisenbergAlgebra& alg);

/// Pairwise audibility report. isospectral reflects equality of p + q;
/// locally_isometric reflects equality of {p, q} as multisets. The
/// inaudible list names the profile fields the pair separates, which is
/// nonempty only for isospectral, non-isometric pairs. Conclusions apply to
/// the non-compact groups; the compact quotients are out of scope.
struct AudibilityReport {
  HeisenbergAlgebra first;
  HeisenbergAlgebra second;
  bool isospectral = false;
  bool locally_isometric = false;
  PropertyProfile profile_first;
  PropertyProfile profile_second;
  std::vector<std::string> inaudible_properties;
  std::string scope = "non_compact";
};

AudibilityReport audibility_report(const HeisenbergAlgebra& a, const HeisenbergAlgebra& b);

}  // namespace heisospec::classify
