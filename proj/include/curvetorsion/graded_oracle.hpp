#ifndef CURVETORSION_GRADED_ORACLE_HPP
#define CURVETORSION_GRADED_ORACLE_HPP

#include <map>
#include <stdexcept>

#include "curvetorsion/presentation.hpp"
#include "curvetorsion/semigroup.hpp"

namespace curvetorsion {

// Raised when the oracle detects a bug in its own bounds or an internal
// inconsistency (cutoff violation, route disagreement, containment
// failure). Never a statement about the mathematics being checked.
class OracleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exact per-degree dimensions of a graded k-space of finite length.
struct GradedDimensionLedger {
  std::map<int, long> per_degree;  // nonzero entries, all below `cutoff`
  long total = 0;
  int cutoff = 0;
  // Degrees [cutoff, cutoff + stability_window) were computed and are zero.
  int stability_window = 0;
};

struct TorsionResult {
  long length = 0;
  long route_a = 0;  // dim Omega(R/s) - dim Omega(S/s) - exactness defect
  long route_b = 0;  // kernel of Omega(R/k) -> Omega(S/k)
  std::map<int, long> per_degree;  // route (b), nonzero entries
  GradedDimensionLedger omega_rel_s;
  long exactness_defect = 0;
};

// Lengths (as s-modules) of the quotients in N ⊆ Ñ ⊆ Ñ1 ⊆ N1 ⊆ F1.
struct NModuleLengths {
  long n1_over_ntilde = 0;
  long n1_over_ntilde1 = 0;
  long ntilde1_over_ntilde = 0;
  long ntilde_over_n = 0;
  GradedDimensionLedger omega_r1_rel_s;  // F1 / N1 = Omega(R1/s), s = k[[t^q]]
};

// Degree bound past which Omega(R/s) vanishes: max n_i + min val(D_K) + conductor.
int omega_cutoff(const NumericalSemigroup& s);

// dim_k Omega(R/s) degree by degree, with F = ⊕_{i>=2} R dX_i and N
// spanned by t^b Δh_j. Throws OracleError if the window past the cutoff is
// not zero.
GradedDimensionLedger omega_rel_s_dim(const NumericalSemigroup& s, const Presentation& pres);
GradedDimensionLedger omega_rel_s_dim(const NumericalSemigroup& s);

// dim_k Omega(R1/s) for the first quadratic transform, over the same
// s = k[[t^q]], using the presentation over (q; n2-q, ..., nn-q).
GradedDimensionLedger omega_blowup_rel_s_dim(const NumericalSemigroup& s, TieBreak tie = TieBreak::Forward);

// dim_k(R' DR' / DR') inside Omega(k[[t]]/k) for R' = k[[t^g : g in generators]].
long exactness_defect(const NumericalSemigroup& ring, const std::vector<int>& generators);
long exactness_defect(const NumericalSemigroup& s);

// Torsion of Omega(R/k) by two routes; throws OracleError if they differ.
TorsionResult torsion_length(const NumericalSemigroup& s, TieBreak tie = TieBreak::Forward);

NModuleLengths n_module_lengths(const NumericalSemigroup& s, TieBreak tie = TieBreak::Forward);

// dim(S DS / R DR) and dim(R1 DR1 / R DR), degree by degree. Index m stands
// for the differential t^(m-1) dt.
GradedDimensionLedger sds_over_rdr_oracle(const NumericalSemigroup& s);
GradedDimensionLedger r1dr1_over_rdr_oracle(const NumericalSemigroup& s);

}  // namespace curvetorsion

#endif
