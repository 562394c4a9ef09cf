#ifndef CURVETORSION_TORSION_FORMULAS_HPP
#define CURVETORSION_TORSION_FORMULAS_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "curvetorsion/graded_oracle.hpp"
#include "curvetorsion/monomial_ideals.hpp"
#include "curvetorsion/presentation.hpp"
#include "curvetorsion/semigroup.hpp"

namespace curvetorsion {

// A closed formula was asked for outside the class it holds for.
class FormulaNotApplicable : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// dim(S DS / R DR) = genus, by the exactness of semigroup rings.
int sds_over_rdr(const NumericalSemigroup& s);
// dim(R1 DR1 / R DR) = dim(R1 / R) = g - g1.
int r1dr1_over_rdr(const NumericalSemigroup& s);

// l(T) = 2 g for a complete intersection.
long ci_torsion(const NumericalSemigroup& s, TieBreak tie = TieBreak::Forward);
// l(T) = 2 g + dim(D_K^{-1} / R*) for an almost complete intersection.
long aci_torsion(const NumericalSemigroup& s, TieBreak tie = TieBreak::Forward);

// l(T) - l(T1) = 2 dim(R1/R), stable complete intersections only.
long drop_stable_ci(const NumericalSemigroup& s, TieBreak tie = TieBreak::Forward);
// l(T) - l(T1) = 2 dim(R1/R) + dim(D_K^{-1} / R*), nice ACI only.
long drop_nice_aci(const NumericalSemigroup& s, TieBreak tie = TieBreak::Forward);
// l(T) - l(T1) = l(N1/Ñ) - (n-1)(dim(R1/R) - q), any semigroup ring.
long drop_general_semigroup(const NumericalSemigroup& s, const NModuleLengths& lengths);
// (n-1) q, the lower bound for the drop of a complete intersection.
long ci_drop_bound(const NumericalSemigroup& s, TieBreak tie = TieBreak::Forward);
// l(N1/Ñ1) + (n-1) q, the exact drop of a complete intersection.
long ci_drop_exact(const NumericalSemigroup& s, const NModuleLengths& lengths, TieBreak tie = TieBreak::Forward);

enum class Relation { Equal, AtLeast };

// One formula-vs-oracle comparison. For AtLeast the check passes when
// oracle >= formula.
struct IdentityCheck {
  std::string name;
  bool applicable = false;
  Relation relation = Relation::Equal;
  long formula = 0;
  long oracle = 0;
  bool passed = true;
};

struct CurveReport {
  NumericalSemigroup semigroup = NumericalSemigroup::natural();
  NumericalSemigroup blowup = NumericalSemigroup::natural();
  std::vector<int> blowup_tuple;
  int genus = 0;
  int genus_blowup = 0;
  int multiplicity = 1;
  int embedding_dimension = 1;
  int colength = 0;
  int mu = 0;
  int deviation = 0;
  int deviation_blowup = 0;
  IntersectionClass intersection = IntersectionClass::CompleteIntersection;
  TransformClass transform = TransformClass::Regular;

  long torsion = 0;
  long torsion_blowup = 0;
  long drop = 0;
  long omega_rel_s = 0;
  long omega_blowup_rel_s = 0;
  long exactness_defect = 0;
  long exactness_defect_blowup = 0;
  long sds_over_rdr = 0;
  long r1dr1_over_rdr = 0;
  long aci_correction = 0;
  ValueSet kaehler_different = ValueSet::of_ring(NumericalSemigroup::natural());
  ValueSet dedekind_different = ValueSet::of_ring(NumericalSemigroup::natural());
  NModuleLengths lengths;

  std::vector<IdentityCheck> checks;

  bool all_pass() const;
  const IdentityCheck* check(const std::string& name) const;
};

// Every applicable formula evaluated and compared with the graded oracle.
// Oracle hard errors (OracleError) propagate.
CurveReport full_report(const NumericalSemigroup& s, TieBreak tie = TieBreak::Forward);

}  // namespace curvetorsion

#endif
