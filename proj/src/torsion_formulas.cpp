#include "curvetorsion/torsion_formulas.hpp"

#include <algorithm>

namespace curvetorsion {

namespace {

void require(bool ok, const char* formula, const NumericalSemigroup& s, std::string_view cls) {
  if (!ok)
    throw FormulaNotApplicable(std::string(formula) + " is not applicable to " + s.to_string() + " (class " +
                               std::string(cls) + ")");
}

long n_minus_one(const NumericalSemigroup& s) { return s.embedding_dimension() - 1; }

int symmetric_difference(const ValueSet& a, const ValueSet& b) {
  const int lo = std::min(a.min_value(), b.min_value());
  const int hi = std::max(a.tail_start(), b.tail_start());
  int count = 0;
  for (int m = lo; m < hi; ++m) count += a.contains(m) != b.contains(m);
  return count;
}

}  // namespace

int sds_over_rdr(const NumericalSemigroup& s) { return s.genus(); }

int r1dr1_over_rdr(const NumericalSemigroup& s) { return colength(s, blowup(s).transformed); }

long ci_torsion(const NumericalSemigroup& s, TieBreak tie) {
  const int dev = deviation(s, tie);
  require(dev == 0, "ci_torsion", s, to_string(intersection_class(dev)));
  return 2L * s.genus();
}

long aci_torsion(const NumericalSemigroup& s, TieBreak tie) {
  const int dev = deviation(s, tie);
  require(dev == 1, "aci_torsion", s, to_string(intersection_class(dev)));
  return 2L * s.genus() + aci_correction(s);
}

long drop_stable_ci(const NumericalSemigroup& s, TieBreak tie) {
  const auto cls = classify_transform(s, tie);
  require(cls == TransformClass::StableCI, "drop_stable_ci", s, to_string(cls));
  return 2L * r1dr1_over_rdr(s);
}

long drop_nice_aci(const NumericalSemigroup& s, TieBreak tie) {
  const auto cls = classify_transform(s, tie);
  require(cls == TransformClass::NiceACI, "drop_nice_aci", s, to_string(cls));
  return 2L * r1dr1_over_rdr(s) + aci_correction(s);
}

long drop_general_semigroup(const NumericalSemigroup& s, const NModuleLengths& lengths) {
  if (s.is_regular()) return 0;
  return lengths.n1_over_ntilde - n_minus_one(s) * (r1dr1_over_rdr(s) - s.multiplicity());
}

long ci_drop_bound(const NumericalSemigroup& s, TieBreak tie) {
  const int dev = deviation(s, tie);
  require(dev == 0, "ci_drop_bound", s, to_string(intersection_class(dev)));
  return n_minus_one(s) * s.multiplicity();
}

long ci_drop_exact(const NumericalSemigroup& s, const NModuleLengths& lengths, TieBreak tie) {
  return lengths.n1_over_ntilde1 + ci_drop_bound(s, tie);
}

bool CurveReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return !c.applicable || c.passed; });
}

const IdentityCheck* CurveReport::check(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

CurveReport full_report(const NumericalSemigroup& s, TieBreak tie) {
  CurveReport r;
  const auto b = blowup(s);
  const auto pres = minimal_presentation(s, tie);

  r.semigroup = s;
  r.blowup = b.transformed;
  r.blowup_tuple = b.generator_tuple;
  r.genus = s.genus();
  r.genus_blowup = b.transformed.genus();
  r.multiplicity = s.multiplicity();
  r.embedding_dimension = s.embedding_dimension();
  r.colength = colength(s, b.transformed);
  r.mu = pres.mu;
  r.deviation = pres.mu - (s.embedding_dimension() - 1);
  r.deviation_blowup = deviation(b.transformed, tie);
  r.intersection = intersection_class(r.deviation);
  r.transform = classify_transform(s, tie);

  const auto t = torsion_length(s, tie);
  const auto t1 = torsion_length(b.transformed, tie);
  r.torsion = t.length;
  r.torsion_blowup = t1.length;
  r.drop = r.torsion - r.torsion_blowup;
  r.omega_rel_s = t.omega_rel_s.total;
  r.exactness_defect = t.exactness_defect;
  r.exactness_defect_blowup = exactness_defect(b.transformed, b.generator_tuple);
  r.lengths = n_module_lengths(s, tie);
  r.omega_blowup_rel_s = r.lengths.omega_r1_rel_s.total;

  const auto sds = sds_over_rdr_oracle(s);
  const auto r1dr1 = r1dr1_over_rdr_oracle(s);
  r.sds_over_rdr = sds.total;
  r.r1dr1_over_rdr = r1dr1.total;
  int per_degree_mismatch = 0;
  for (int m = 1; m < s.conductor() + s.max_generator(); ++m) {
    const long expected = b.transformed.contains(m) && !s.contains(m) ? 1 : 0;
    const auto it = r1dr1.per_degree.find(m);
    per_degree_mismatch += (it == r1dr1.per_degree.end() ? 0 : it->second) != expected;
  }

  r.kaehler_different = kaehler_different(s, pres);
  r.dedekind_different = dedekind_different(s);
  r.aci_correction = quotient_length(inverse(r.kaehler_different), r_star(s));

  const bool singular = !s.is_regular();
  const bool ci = r.deviation == 0;
  const long nm1 = n_minus_one(s);
  const long q = s.multiplicity();

  auto add = [&](std::string name, bool applicable, long formula, long oracle, Relation rel = Relation::Equal) {
    const bool passed = rel == Relation::Equal ? formula == oracle : oracle >= formula;
    r.checks.push_back({std::move(name), applicable, rel, formula, oracle, !applicable || passed});
  };

  add("torsion_route_equality", true, t.route_a, t.route_b);
  add("blowup_torsion_route_equality", true, t1.route_a, t1.route_b);
  add("exactness_defect_zero", true, 0, r.exactness_defect);
  add("blowup_exactness_defect_zero", true, 0, r.exactness_defect_blowup);
  add("sds_over_rdr", true, sds_over_rdr(s), r.sds_over_rdr);
  add("r1dr1_over_rdr", true, r1dr1_over_rdr(s), r.r1dr1_over_rdr);
  add("r1dr1_per_degree", true, 0, per_degree_mismatch);
  add("dk_equals_dd", true, 0, symmetric_difference(r.kaehler_different, r.dedekind_different));
  add("ci_aci_correction_zero", ci, 0, r.aci_correction);

  add("ntilde_over_n", singular, 2 * nm1 * q, r.lengths.ntilde_over_n);
  add("omega_difference", singular, r.lengths.n1_over_ntilde + nm1 * q - nm1 * r.colength,
      r.omega_rel_s - r.omega_blowup_rel_s);
  add("blowup_torsion_via_omega", singular, r.omega_blowup_rel_s - (q - 1) - r.exactness_defect_blowup,
      r.torsion_blowup);
  add("first_difference", singular,
      r.omega_rel_s - r.omega_blowup_rel_s - (r.exactness_defect - r.exactness_defect_blowup), r.drop);
  add("general_drop", singular, drop_general_semigroup(s, r.lengths), r.drop);

  add("ci_torsion", ci, ci ? ci_torsion(s, tie) : 0, r.torsion);
  add("ci_ntilde1_over_ntilde", ci && singular, nm1 * r.colength, r.lengths.ntilde1_over_ntilde);
  add("ci_drop_exact", ci && singular, ci ? ci_drop_exact(s, r.lengths, tie) : 0, r.drop);
  add("ci_drop_bound", ci && singular, ci ? ci_drop_bound(s, tie) : 0, r.drop, Relation::AtLeast);
  const bool aci = r.deviation == 1;
  add("aci_torsion", aci, aci ? aci_torsion(s, tie) : 0, r.torsion);
  const bool stable = r.transform == TransformClass::StableCI;
  add("stable_ci_drop", stable, stable ? drop_stable_ci(s, tie) : 0, r.drop);
  const bool nice = r.transform == TransformClass::NiceACI;
  add("nice_aci_drop", nice, nice ? drop_nice_aci(s, tie) : 0, r.drop);
  add("torsion_positive", singular, 1, r.torsion, Relation::AtLeast);
  return r;
}

}  // namespace curvetorsion
