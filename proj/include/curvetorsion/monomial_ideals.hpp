#ifndef CURVETORSION_MONOMIAL_IDEALS_HPP
#define CURVETORSION_MONOMIAL_IDEALS_HPP

#include <functional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "curvetorsion/presentation.hpp"
#include "curvetorsion/semigroup.hpp"

namespace curvetorsion {

// Set of t-valuations of a graded fractional ideal of R = k[[t^S]]. Each
// graded piece of the quotient field is one-dimensional, so a monomial
// ideal is determined by its value set.
//
// Stored as a window [min_value, tail_start) plus an all-member tail. The
// representation is normalized: min_value is a member and tail_start - 1 is
// not (unless the window is empty).
class ValueSet {
 public:
  // {v in [lo, hi) : pred(v)} together with every integer >= hi.
  static ValueSet from_predicate(const NumericalSemigroup& ambient, int lo, int hi,
                                 const std::function<bool(int)>& pred);
  // Union of (g + S) over g in `generators`.
  static ValueSet generated_by(const NumericalSemigroup& ambient, const std::vector<int>& generators);
  // val(R) = S.
  static ValueSet of_ring(const NumericalSemigroup& ambient);

  const NumericalSemigroup& ambient() const { return ambient_; }
  int min_value() const { return min_value_; }
  int tail_start() const { return tail_start_; }

  bool contains(long v) const {
    if (v >= tail_start_) return true;
    if (v < min_value_) return false;
    return window_[static_cast<std::size_t>(v - min_value_)];
  }

  // Members in [min_value, tail_start).
  std::vector<int> window_members() const;
  bool closed_under_ambient() const;
  bool is_subset_of(const ValueSet& other) const;

  // "{-3,-1} ∪ Z>=0"
  std::string to_string() const;

  friend bool operator==(const ValueSet& a, const ValueSet& b) {
    return a.min_value_ == b.min_value_ && a.tail_start_ == b.tail_start_ && a.window_ == b.window_ &&
           a.ambient_ == b.ambient_;
  }

 private:
  explicit ValueSet(NumericalSemigroup ambient) : ambient_(std::move(ambient)) {}

  NumericalSemigroup ambient_;
  int min_value_ = 0;
  int tail_start_ = 0;
  std::vector<bool> window_;
};

// Complementary module R* over s = k[[t^q]]: v is a value iff v >= -w, w the
// Apéry element (mod q) congruent to -v. Re-verified against the trace
// condition; throws std::logic_error on disagreement.
ValueSet r_star(const NumericalSemigroup& s);

// R* directly from the trace: v such that v + a >= 0 for all a in S with
// q | v + a.
ValueSet r_star_by_trace(const NumericalSemigroup& s);

// {m : m + V ⊆ S}.
ValueSet inverse(const ValueSet& v);

// Dedekind different R*^{-1}.
ValueSet dedekind_different(const NumericalSemigroup& s);

struct JacobianMinor {
  std::vector<std::size_t> rows;
  mpz_class coefficient;
  int degree = 0;
};

// Every (n-1)x(n-1) minor of the Jacobian (dh_j/dX_i), i >= 2, by explicit
// enumeration. Exponential in mu; meant for small presentations.
std::vector<JacobianMinor> jacobian_minors(const NumericalSemigroup& s, const Presentation& pres);

// Degrees of the nonvanishing (n-1)-minors. Uses the Cauchy-Binet expansion
// det(C^T diag(z^d_j) C) = sum_J det(C_J)^2 z^(sum_J d_j), whose coefficients
// are sums of squares and so cannot cancel.
std::vector<int> nonvanishing_minor_degrees(const NumericalSemigroup& s, const Presentation& pres);

// Kähler different: Fitting ideal of Omega(R/s). `pres` must be a
// presentation over the minimal generators of S. Regular S gives val(R).
ValueSet kaehler_different(const NumericalSemigroup& s, const Presentation& pres);
ValueSet kaehler_different(const NumericalSemigroup& s);

// |outer \ inner|. Throws std::invalid_argument on mismatched ambients or
// non-containment.
int quotient_length(const ValueSet& outer, const ValueSet& inner);

// dim_k(D_K^{-1} / R*).
int aci_correction(const NumericalSemigroup& s);

}  // namespace curvetorsion

#endif
