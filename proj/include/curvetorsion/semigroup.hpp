#ifndef CURVETORSION_SEMIGROUP_HPP
#define CURVETORSION_SEMIGROUP_HPP

#include <span>
#include <string>
#include <vector>

namespace curvetorsion {

// A numerical semigroup S, i.e. the value semigroup of the monomial curve
// R = k[[t^n1, ..., t^nr]]. Immutable after construction.
//
// Membership is stored as a bitmap over [0, conductor + largest generator);
// every integer beyond it is a member.
class NumericalSemigroup {
 public:
  // The semigroup generated by `values`. Throws std::invalid_argument for
  // empty input, nonpositive values or gcd != 1.
  static NumericalSemigroup from_generators(std::span<const int> values);
  static NumericalSemigroup from_generators(std::initializer_list<int> values);

  // The semigroup N \ gaps. Throws std::invalid_argument if the complement
  // is not closed under addition.
  static NumericalSemigroup from_gaps(std::span<const int> gaps);

  // S = N.
  static NumericalSemigroup natural();

  const std::vector<int>& min_generators() const { return min_generators_; }
  const std::vector<int>& gaps() const { return gaps_; }
  int multiplicity() const { return min_generators_.front(); }
  int embedding_dimension() const { return static_cast<int>(min_generators_.size()); }
  int frobenius() const { return conductor_ - 1; }
  int conductor() const { return conductor_; }
  int genus() const { return static_cast<int>(gaps_.size()); }
  int max_generator() const { return min_generators_.back(); }
  bool is_regular() const { return gaps_.empty(); }

  bool contains(long m) const {
    if (m < 0) return false;
    if (m >= static_cast<long>(member_.size())) return true;
    return member_[static_cast<std::size_t>(m)];
  }

  // Elements of S in [0, bound), ascending.
  std::vector<int> elements_below(int bound) const;

  // "<4,6,7>"
  std::string to_string() const;

  friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) {
    return a.min_generators_ == b.min_generators_;
  }
  friend auto operator<=>(const NumericalSemigroup& a, const NumericalSemigroup& b) {
    return a.min_generators_ <=> b.min_generators_;
  }

 private:
  NumericalSemigroup() = default;
  static NumericalSemigroup from_membership(std::vector<bool> member);

  std::vector<int> min_generators_;
  std::vector<int> gaps_;
  int conductor_ = 0;
  std::vector<bool> member_;
};

struct BlowupResult {
  NumericalSemigroup transformed;
  // (q, n2 - q, ..., nn - q) in this order; possibly non-minimal, may repeat.
  std::vector<int> generator_tuple;
  int colength = 0;
};

bool contains(const NumericalSemigroup& s, long m);

// For each residue r mod m the least element of S congruent to r, indexed by r.
// Throws std::invalid_argument unless m >= 1 and m is in S.
std::vector<int> apery_set(const NumericalSemigroup& s, int m);

// First quadratic transform: the semigroup generated by q and ni - q, with
// x = t^q for the multiplicity q.
BlowupResult blowup(const NumericalSemigroup& s);

// dim_k(R_outer / R_inner) = |outer \ inner|. Throws std::invalid_argument
// unless inner is contained in outer.
int colength(const NumericalSemigroup& inner, const NumericalSemigroup& outer);

// All numerical semigroups of genus <= max_genus, ordered by
// (genus, minimal generators).
std::vector<NumericalSemigroup> enumerate_by_genus(int max_genus);

}  // namespace curvetorsion

#endif
