#ifndef CURVETORSION_PRESENTATION_HPP
#define CURVETORSION_PRESENTATION_HPP

#include <stdexcept>
#include <string_view>
#include <vector>

#include "curvetorsion/semigroup.hpp"

namespace curvetorsion {

using Exponents = std::vector<int>;

// Ordered weights of the polynomial variables. When `has_x_slot` is set,
// position 0 is the parameter x = t^q of s = k[[x]] and the remaining
// positions are the X_i (or Z_i for the blowup).
struct GeneratorTuple {
  std::vector<int> weights;
  bool has_x_slot = true;

  int degree(const Exponents& e) const;
  std::size_t size() const { return weights.size(); }
  friend bool operator==(const GeneratorTuple&, const GeneratorTuple&) = default;
};

// Toric binomial lhs - rhs, both sides of t-degree `degree`.
struct BinomialRelation {
  Exponents lhs;
  Exponents rhs;
  int degree = 0;

  // d(lhs - rhs)/dX_i evaluated on the curve is (lhs_i - rhs_i) t^(degree - w_i).
  long jacobian_coefficient(std::size_t i) const { return static_cast<long>(lhs[i]) - rhs[i]; }
  friend bool operator==(const BinomialRelation&, const BinomialRelation&) = default;
};

struct Presentation {
  GeneratorTuple tuple;
  std::vector<BinomialRelation> relations;
  int mu = 0;
  std::vector<int> betti_degrees;  // one entry per relation, ascending
};

// Order in which the spanning relations of a factorization graph are picked.
// Either choice yields a minimal presentation; the reversed order exists to
// check that nothing downstream depends on the choice.
enum class TieBreak { Forward, Reversed };

enum class IntersectionClass { CompleteIntersection, AlmostCompleteIntersection, Other };

enum class TransformClass { Regular, StableCI, NiceACI, CIUnstable, ACINotNice, Other };

std::string_view to_string(IntersectionClass c);
std::string_view to_string(TransformClass c);

// All a >= 0 with sum a_i w_i = d, in descending lexicographic order.
std::vector<Exponents> factorizations(const GeneratorTuple& tuple, int d);

// Degrees above which every factorization graph of the tuple is connected:
// conductor of the generated semigroup + 2 * max weight.
int betti_bound(const GeneratorTuple& tuple);

// Minimal presentation of the congruence of `tuple` by factorization
// graphs (two factorizations adjacent iff their supports meet). Works for
// non-minimal tuples.
Presentation minimal_presentation(const GeneratorTuple& tuple, TieBreak tie = TieBreak::Forward);

// Presentation of S over its minimal generators (x = t^q in slot 0).
Presentation minimal_presentation(const NumericalSemigroup& s, TieBreak tie = TieBreak::Forward);

// True iff for every d <= bound the relation moves connect all
// factorizations of d, i.e. the relations generate the toric ideal.
bool generates_congruence(const Presentation& pres, int bound);

// mu - (n - 1) of the minimal presentation of S.
int deviation(const NumericalSemigroup& s, TieBreak tie = TieBreak::Forward);
IntersectionClass intersection_class(int deviation);
TransformClass classify_transform(const NumericalSemigroup& s, TieBreak tie = TieBreak::Forward);

// Relations of n1 = ker(s[Z2..Zn] -> R1) over the tuple (q; n2-q, ..., nn-q).
// Throws std::logic_error if the generation check fails.
Presentation blowup_presentation(const NumericalSemigroup& s, TieBreak tie = TieBreak::Forward);

class NonMinimalPresentationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// f_j = h_j / x^2 as relations over the blowup tuple (q; n2-q, ..., nn-q):
// x^a1 X^a  ->  x^(a1 + |a| - 2) Z^a. Throws NonMinimalPresentationError
// when a side has a1 + |a| < 2.
std::vector<BinomialRelation> tilde_generators(const NumericalSemigroup& s, const Presentation& pres);

}  // namespace curvetorsion

#endif
