#include <doctest.h>

#include "curvetorsion/torsion_formulas.hpp"

using namespace curvetorsion;

namespace {
NumericalSemigroup sg(std::initializer_list<int> g) { return NumericalSemigroup::from_generators(g); }
}  // namespace

TEST_CASE("gap-count closed forms") {
  CHECK(sds_over_rdr(sg({2, 3})) == 1);
  CHECK(r1dr1_over_rdr(sg({2, 3})) == 1);
  CHECK(sds_over_rdr(sg({4, 6, 7})) == 5);
  CHECK(r1dr1_over_rdr(sg({4, 6, 7})) == 4);
  CHECK(sds_over_rdr(NumericalSemigroup::natural()) == 0);
  CHECK(r1dr1_over_rdr(NumericalSemigroup::natural()) == 0);
}

TEST_CASE("ci_torsion") {
  CHECK(ci_torsion(sg({2, 3})) == 2);
  CHECK(ci_torsion(sg({4, 5})) == 12);
  CHECK(ci_torsion(sg({4, 6, 7})) == 10);
  CHECK(ci_torsion(NumericalSemigroup::natural()) == 0);
  CHECK_THROWS_AS(ci_torsion(sg({3, 4, 5})), FormulaNotApplicable);
}

TEST_CASE("aci_torsion") {
  CHECK(aci_torsion(sg({3, 4, 5})) == 5);
  CHECK_THROWS_AS(aci_torsion(sg({2, 3})), FormulaNotApplicable);
}

TEST_CASE("class-specific drops") {
  CHECK(drop_stable_ci(sg({2, 3})) == 2);
  CHECK(drop_stable_ci(sg({4, 5})) == 12);
  CHECK(drop_stable_ci(sg({4, 6, 7})) == 8);
  CHECK(drop_nice_aci(sg({3, 4, 5})) == 5);
  CHECK_THROWS_AS(drop_stable_ci(sg({3, 4, 5})), FormulaNotApplicable);
  CHECK_THROWS_WITH_AS(drop_nice_aci(sg({2, 3})), doctest::Contains("not applicable"), FormulaNotApplicable);

  const auto s = sg({3, 5, 7});
  REQUIRE(classify_transform(s) == TransformClass::NiceACI);
  CHECK(drop_nice_aci(s) == torsion_length(s).length - torsion_length(blowup(s).transformed).length);
}

TEST_CASE("drop_general_semigroup") {
  CHECK(drop_general_semigroup(sg({4, 5}), n_module_lengths(sg({4, 5}))) == 12);
  CHECK(drop_general_semigroup(sg({4, 6, 7}), n_module_lengths(sg({4, 6, 7}))) == 8);
  CHECK(drop_general_semigroup(sg({3, 4, 5}), n_module_lengths(sg({3, 4, 5}))) == 5);
  CHECK(drop_general_semigroup(NumericalSemigroup::natural(), {}) == 0);
}

TEST_CASE("complete intersection drop bound and exact drop") {
  CHECK(ci_drop_bound(sg({4, 6, 7})) == 8);
  CHECK(ci_drop_exact(sg({4, 6, 7}), n_module_lengths(sg({4, 6, 7}))) == 8);
  CHECK(ci_drop_bound(sg({4, 5})) == 4);
  CHECK(ci_drop_exact(sg({4, 5}), n_module_lengths(sg({4, 5}))) == 12);
  CHECK(ci_drop_bound(sg({2, 3})) == 2);
  CHECK(ci_drop_exact(sg({2, 3}), n_module_lengths(sg({2, 3}))) == 2);
  CHECK_THROWS_AS(ci_drop_bound(sg({3, 4, 5})), FormulaNotApplicable);
}

TEST_CASE("full_report on <3,4,5>") {
  const auto r = full_report(sg({3, 4, 5}));
  CHECK(r.transform == TransformClass::NiceACI);
  CHECK(r.torsion == 5);
  CHECK(r.drop == 5);
  CHECK(r.aci_correction == 1);
  CHECK(r.lengths.n1_over_ntilde == 3);
  CHECK(r.all_pass());
  REQUIRE(r.check("nice_aci_drop") != nullptr);
  CHECK(r.check("nice_aci_drop")->applicable);
  CHECK_FALSE(r.check("ci_torsion")->applicable);
}

TEST_CASE("full_report on N") {
  const auto r = full_report(NumericalSemigroup::natural());
  CHECK(r.transform == TransformClass::Regular);
  CHECK(r.torsion == 0);
  CHECK(r.torsion_blowup == 0);
  CHECK(r.drop == 0);
  CHECK(r.all_pass());
  CHECK_FALSE(r.check("torsion_positive")->applicable);
}

TEST_CASE("full_report on <4,6,7>") {
  const auto r = full_report(sg({4, 6, 7}));
  CHECK(r.transform == TransformClass::StableCI);
  CHECK(r.torsion == 10);
  CHECK(r.torsion_blowup == 2);
  CHECK(r.drop == 8);
  CHECK(r.all_pass());
  CHECK(r.check("ci_drop_bound")->formula == 8);
}

TEST_CASE("full_report on <4,5> ties three drop routes together") {
  const auto r = full_report(sg({4, 5}));
  CHECK(r.omega_rel_s == 15);
  CHECK(r.drop == 12);
  CHECK(r.check("stable_ci_drop")->formula == 12);
  CHECK(r.check("general_drop")->formula == 12);
  CHECK(r.all_pass());
}

TEST_CASE("AtLeast checks pass on inequality") {
  const auto r = full_report(sg({2, 3}));
  const auto* c = r.check("ci_drop_bound");
  REQUIRE(c != nullptr);
  CHECK(c->relation == Relation::AtLeast);
  CHECK(c->formula == 2);
  CHECK(c->oracle == 2);
  CHECK(c->passed);
}
