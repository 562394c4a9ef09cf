#include "curvetorsion/monomial_ideals.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "curvetorsion/linalg.hpp"

namespace curvetorsion {

ValueSet ValueSet::from_predicate(const NumericalSemigroup& ambient, int lo, int hi,
                                  const std::function<bool(int)>& pred) {
  if (hi < lo) throw std::invalid_argument("ValueSet: empty window bounds");
  ValueSet v(ambient);
  int first = lo;
  while (first < hi && !pred(first)) ++first;
  int tail = hi;
  while (tail > first && pred(tail - 1)) --tail;
  v.min_value_ = first;
  v.tail_start_ = tail;
  v.window_.reserve(static_cast<std::size_t>(tail - first));
  for (int m = first; m < tail; ++m) v.window_.push_back(pred(m));
  return v;
}

ValueSet ValueSet::generated_by(const NumericalSemigroup& ambient, const std::vector<int>& generators) {
  if (generators.empty()) throw std::invalid_argument("ValueSet: no generators");
  const int lo = *std::min_element(generators.begin(), generators.end());
  return from_predicate(ambient, lo, lo + ambient.conductor(), [&](int m) {
    return std::any_of(generators.begin(), generators.end(), [&](int g) { return ambient.contains(m - g); });
  });
}

ValueSet ValueSet::of_ring(const NumericalSemigroup& ambient) { return generated_by(ambient, {0}); }

std::vector<int> ValueSet::window_members() const {
  std::vector<int> out;
  for (int m = min_value_; m < tail_start_; ++m)
    if (contains(m)) out.push_back(m);
  return out;
}

bool ValueSet::closed_under_ambient() const {
  for (int m : window_members())
    for (int a : ambient_.min_generators())
      if (!contains(static_cast<long>(m) + a)) return false;
  return true;
}

bool ValueSet::is_subset_of(const ValueSet& other) const {
  const int top = std::max(tail_start_, other.tail_start_);
  for (int m = min_value_; m < top; ++m)
    if (contains(m) && !other.contains(m)) return false;
  return true;
}

std::string ValueSet::to_string() const {
  std::ostringstream os;
  const auto members = window_members();
  if (!members.empty()) {
    os << '{';
    for (std::size_t i = 0; i < members.size(); ++i) os << (i ? "," : "") << members[i];
    os << "} ∪ ";
  }
  os << "ℤ≥" << tail_start_;
  return os.str();
}

ValueSet r_star(const NumericalSemigroup& s) {
  const int q = s.multiplicity();
  const auto apery = apery_set(s, q);
  const int top = *std::max_element(apery.begin(), apery.end());
  auto closed = ValueSet::from_predicate(s, -top, 0, [&](int v) {
    const int residue = ((-v) % q + q) % q;
    return v >= -apery[static_cast<std::size_t>(residue)];
  });
  if (!(closed == r_star_by_trace(s)))
    throw std::logic_error("r_star: Apéry closed form disagrees with the trace condition");
  return closed;
}

ValueSet r_star_by_trace(const NumericalSemigroup& s) {
  const int q = s.multiplicity();
  const int reach = q + s.conductor();
  // Tr(t^j) = q t^j if q | j, else 0; t^(v+a) must then lie in s = k[[t^q]].
  return ValueSet::from_predicate(s, -reach, reach + 1, [&](int v) {
    for (int a = 0; a < -v; ++a)
      if (s.contains(a) && (v + a) % q == 0) return false;
    return true;
  });
}

ValueSet inverse(const ValueSet& v) {
  const auto& s = v.ambient();
  const int c = s.conductor();
  const auto members = v.window_members();
  // m + tail_start >= c is forced by the tail; m >= c - min_value puts every
  // sum past the conductor.
  return ValueSet::from_predicate(s, c - v.tail_start(), c - v.min_value(), [&](int m) {
    return std::all_of(members.begin(), members.end(), [&](int w) { return s.contains(static_cast<long>(m) + w); });
  });
}

ValueSet dedekind_different(const NumericalSemigroup& s) { return inverse(r_star(s)); }

namespace {

void require_minimal_frame(const NumericalSemigroup& s, const Presentation& pres) {
  if (!pres.tuple.has_x_slot || pres.tuple.weights != s.min_generators())
    throw std::invalid_argument("Kähler different needs a presentation over the minimal generators of S");
}

// C[j][i] = d h_j / d X_(i+2) coefficient; x is a constant of s.
linalg::IntMatrix jacobian(const Presentation& pres) {
  const std::size_t vars = pres.tuple.size() - 1;
  linalg::IntMatrix c(pres.relations.size(), vars);
  for (std::size_t j = 0; j < pres.relations.size(); ++j)
    for (std::size_t i = 0; i < vars; ++i) c(j, i) = pres.relations[j].jacobian_coefficient(i + 1);
  return c;
}

int weight_sum(const NumericalSemigroup& s) {
  const auto& g = s.min_generators();
  return std::accumulate(g.begin() + 1, g.end(), 0);
}

}  // namespace

std::vector<JacobianMinor> jacobian_minors(const NumericalSemigroup& s, const Presentation& pres) {
  require_minimal_frame(s, pres);
  const std::size_t k = pres.tuple.size() - 1;
  const std::size_t mu = pres.relations.size();
  std::vector<JacobianMinor> out;
  if (k == 0 || mu < k) return out;
  const auto c = jacobian(pres);
  std::vector<std::size_t> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    linalg::IntMatrix sub(k, k);
    int degree = -weight_sum(s);
    for (std::size_t r = 0; r < k; ++r) {
      degree += pres.relations[pick[r]].degree;
      for (std::size_t col = 0; col < k; ++col) sub(r, col) = c(pick[r], col);
    }
    out.push_back({pick, linalg::determinant(std::move(sub)), degree});
    // Next k-subset in lexicographic order.
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == mu - k + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

std::vector<int> nonvanishing_minor_degrees(const NumericalSemigroup& s, const Presentation& pres) {
  require_minimal_frame(s, pres);
  const std::size_t k = pres.tuple.size() - 1;
  if (k == 0) return {};
  const auto c = jacobian(pres);
  const auto ct = c.transpose();

  const mpz_class total = linalg::determinant(ct * c);
  if (total == 0) throw std::logic_error("Jacobian has rank < n - 1; Omega(R/s) would not have finite length");

  // Every coefficient is at most the coefficient sum det(C^T C), so the base
  // 2^bits separates them (Kronecker substitution z = 2^bits).
  const auto bits = static_cast<unsigned long>(mpz_sizeinbase(total.get_mpz_t(), 2) + 1);
  int dmin = pres.relations.front().degree;
  for (const auto& r : pres.relations) dmin = std::min(dmin, r.degree);

  linalg::IntMatrix scaled = c;
  for (std::size_t j = 0; j < pres.relations.size(); ++j) {
    mpz_class z;
    mpz_ui_pow_ui(z.get_mpz_t(), 2, bits * static_cast<unsigned long>(pres.relations[j].degree - dmin));
    for (std::size_t i = 0; i < k; ++i) scaled(j, i) *= z;
  }
  mpz_class packed = linalg::determinant(ct * scaled);

  std::vector<int> degrees;
  const int base = static_cast<int>(k) * dmin - weight_sum(s);
  mpz_class digit;
  for (int e = 0; packed != 0; ++e) {
    mpz_fdiv_r_2exp(digit.get_mpz_t(), packed.get_mpz_t(), bits);
    mpz_fdiv_q_2exp(packed.get_mpz_t(), packed.get_mpz_t(), bits);
    if (digit != 0) degrees.push_back(base + e);
  }
  return degrees;
}

ValueSet kaehler_different(const NumericalSemigroup& s, const Presentation& pres) {
  if (s.embedding_dimension() < 2) return ValueSet::of_ring(s);
  return ValueSet::generated_by(s, nonvanishing_minor_degrees(s, pres));
}

ValueSet kaehler_different(const NumericalSemigroup& s) { return kaehler_different(s, minimal_presentation(s)); }

int quotient_length(const ValueSet& outer, const ValueSet& inner) {
  if (!(outer.ambient() == inner.ambient())) throw std::invalid_argument("quotient_length: different ambient rings");
  if (!inner.is_subset_of(outer)) throw std::invalid_argument("quotient_length: inner is not contained in outer");
  int count = 0;
  for (int m = outer.min_value(); m < inner.tail_start(); ++m)
    if (outer.contains(m) && !inner.contains(m)) ++count;
  return count;
}

int aci_correction(const NumericalSemigroup& s) { return quotient_length(inverse(kaehler_different(s)), r_star(s)); }

}  // namespace curvetorsion
