#include <doctest.h>

#include <set>

#include "heisospec/classify.hpp"

using namespace heisospec;
using classify::AudibilityReport;
using classify::PropertyProfile;
using compalg::AlgebraKind;
using heisalg::build_algebra;

TEST_CASE("irreducible module dimensions") {
  CHECK(classify::irreducible_module_dim(1) == 2);
  CHECK(classify::irreducible_module_dim(2) == 4);
  CHECK(classify::irreducible_module_dim(3) == 4);
  CHECK(classify::irreducible_module_dim(4) == 8);
  CHECK(classify::irreducible_module_dim(5) == 8);
  CHECK(classify::irreducible_module_dim(6) == 8);
  CHECK(classify::irreducible_module_dim(7) == 8);
  CHECK(classify::irreducible_module_dim(8) == 16);
  CHECK(classify::irreducible_module_dim(9) == 32);  // Bott shift
  CHECK(classify::realizable(7, 16));
  CHECK_FALSE(classify::realizable(7, 12));
  CHECK_FALSE(classify::realizable(5, 4));
}

TEST_CASE("profile landmarks") {
  auto full = classify::classify(7, 16, true);
  CHECK(full.commutative);
  CHECK(full.weakly_symmetric_broad);
  CHECK(full.weakly_symmetric_narrow);
  CHECK(full.go_space);

  auto none = classify::classify(7, 16, false);
  CHECK_FALSE(none.commutative);
  CHECK_FALSE(none.weakly_symmetric_broad);
  CHECK_FALSE(none.weakly_symmetric_narrow);
  CHECK_FALSE(none.go_space);

  auto go_only = classify::classify(7, 24, true);
  CHECK_FALSE(go_only.commutative);
  CHECK_FALSE(go_only.weakly_symmetric_broad);
  CHECK(go_only.go_space);

  // the classic Heisenberg groups: commutative but narrow weak symmetry
  // drops out at a one-dimensional center
  auto classic = classify::classify(1, 6, true);
  CHECK(classic.commutative);
  CHECK(classic.weakly_symmetric_broad);
  CHECK_FALSE(classic.weakly_symmetric_narrow);
}

TEST_CASE("classify guards") {
  CHECK_THROWS_AS(classify::classify(7, 12, true), InvalidParameterError);
  CHECK_THROWS_AS(classify::classify(5, 4, true), InvalidParameterError);
  CHECK_THROWS_AS(classify::classify(0, 8, true), InvalidParameterError);
  // one irreducible summand cannot be non-isotypic
  CHECK_THROWS_AS(classify::classify(7, 8, false), InvalidParameterError);
  // dim z not 3 mod 4: the flag is ignored, never contradictory
  CHECK(classify::classify(5, 8, false).commutative);
}

TEST_CASE("classify_algebra composes the signature with the table") {
  CHECK(classify::classify_algebra(build_algebra(AlgebraKind::octonion, 2, 0)).commutative);
  CHECK_FALSE(classify::classify_algebra(build_algebra(AlgebraKind::octonion, 1, 1)).commutative);
  for (auto [p, q] : {std::pair{1, 0}, {1, 1}, {2, 0}, {2, 1}}) {
    CHECK(classify::classify_algebra(build_algebra(AlgebraKind::quaternion, p, q)).commutative);
  }
}

TEST_CASE("swap symmetry of classify_algebra") {
  for (auto kind : {AlgebraKind::quaternion, AlgebraKind::octonion}) {
    for (int p = 0; p <= 3; ++p) {
      for (int q = 0; p + q <= 3; ++q) {
        if (p + q < 1) continue;
        CHECK(classify::classify_algebra(build_algebra(kind, p, q)) ==
              classify::classify_algebra(build_algebra(kind, q, p)));
      }
    }
  }
}

TEST_CASE("exhaustive scan reproduces the classification tables") {
  // rows of the commutative classification (seven) and the g.o. one (eight),
  // as predicates on (dim z, dim v, isotypic)
  auto commutative_row = [](int dz, int dv, bool iso) {
    return dz <= 3 || (dz == 5 && dv == 8) || (dz == 6 && dv == 8) || (dz == 7 && dv == 8) ||
           (dz == 7 && dv == 16 && iso);
  };
  auto go_row = [&](int dz, int dv, bool iso) {
    return commutative_row(dz, dv, iso) || (dz == 7 && dv == 24 && iso);
  };

  std::set<std::tuple<int, int, bool>> go_not_commutative;
  for (int dz = 1; dz <= 7; ++dz) {
    const int d0 = classify::irreducible_module_dim(dz);
    for (int dv = d0; dv <= 48; dv += d0) {
      const bool two_types = dz % 4 == 3;
      std::vector<bool> isotypic_choices;
      isotypic_choices.push_back(true);
      if (two_types && dv > d0) isotypic_choices.push_back(false);
      for (bool iso : isotypic_choices) {
        auto prof = classify::classify(dz, dv, iso);
        CHECK(prof.commutative == commutative_row(dz, dv, iso));
        CHECK(prof.go_space == go_row(dz, dv, iso));
        // the broad weak-symmetry equivalence and the narrow exception
        CHECK(prof.weakly_symmetric_broad == prof.commutative);
        CHECK(prof.weakly_symmetric_narrow == (prof.weakly_symmetric_broad && dz != 1));
        // commutative cases sit inside the g.o. cases
        if (prof.commutative) CHECK(prof.go_space);
        if (prof.go_space && !prof.commutative) go_not_commutative.insert({dz, dv, iso});
      }
    }
  }
  // the difference is exactly the 24-dimensional isotypic case
  CHECK(go_not_commutative == std::set<std::tuple<int, int, bool>>{{7, 24, true}});
}

TEST_CASE("audibility of the 23-dimensional pair") {
  auto rep = classify::audibility_report(build_algebra(AlgebraKind::octonion, 1, 1),
                                         build_algebra(AlgebraKind::octonion, 2, 0));
  CHECK(rep.isospectral);
  CHECK_FALSE(rep.locally_isometric);
  CHECK(rep.inaudible_properties ==
        std::vector<std::string>{"commutative", "weakly_symmetric_broad",
                                 "weakly_symmetric_narrow", "go_space"});
  CHECK(rep.scope == "non_compact");
}

TEST_CASE("audibility of the 31-dimensional pair isolates the g.o. property") {
  auto rep = classify::audibility_report(build_algebra(AlgebraKind::octonion, 2, 1),
                                         build_algebra(AlgebraKind::octonion, 3, 0));
  CHECK(rep.isospectral);
  CHECK_FALSE(rep.locally_isometric);
  CHECK(rep.inaudible_properties == std::vector<std::string>{"go_space"});
}

TEST_CASE("audibility edge cases") {
  auto a = build_algebra(AlgebraKind::octonion, 1, 1);
  auto same = classify::audibility_report(a, a);
  CHECK(same.isospectral);
  CHECK(same.locally_isometric);
  CHECK(same.inaudible_properties.empty());

  // swapped parameters are locally isometric: nothing is separated
  auto swapped = classify::audibility_report(build_algebra(AlgebraKind::octonion, 2, 1),
                                             build_algebra(AlgebraKind::octonion, 1, 2));
  CHECK(swapped.locally_isometric);
  CHECK(swapped.inaudible_properties.empty());

  // different totals are not claimed isospectral
  auto apart = classify::audibility_report(build_algebra(AlgebraKind::octonion, 1, 0),
                                           build_algebra(AlgebraKind::octonion, 2, 0));
  CHECK_FALSE(apart.isospectral);
  CHECK(apart.inaudible_properties.empty());

  CHECK_THROWS_AS(classify::audibility_report(build_algebra(AlgebraKind::octonion, 1, 1),
                                              build_algebra(AlgebraKind::quaternion, 1, 1)),
                  InvalidParameterError);

  // symmetric profiles under argument swap
  auto ab = classify::audibility_report(build_algebra(AlgebraKind::octonion, 1, 1),
                                        build_algebra(AlgebraKind::octonion, 2, 0));
  auto ba = classify::audibility_report(build_algebra(AlgebraKind::octonion, 2, 0),
                                        build_algebra(AlgebraKind::octonion, 1, 1));
  CHECK(ab.inaudible_properties == ba.inaudible_properties);
  CHECK(ab.profile_first == ba.profile_second);
}
