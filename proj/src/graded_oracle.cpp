#include "curvetorsion/graded_oracle.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "curvetorsion/linalg.hpp"
#include "curvetorsion/monomial_ideals.hpp"

namespace curvetorsion {

namespace {

// A homogeneous element sum_i c_i t^(degree - w_i) e_i of a graded free module.
struct Row {
  int degree = 0;
  std::vector<long> coeffs;
};

// The R'-span of `rows`, R' = k[[t^coeff_ring]].
struct Family {
  const NumericalSemigroup* coeff_ring = nullptr;
  std::vector<Row> rows;
};

// ⊕ R' e_i with deg e_i = basis_degrees[i].
struct FreeModule {
  const NumericalSemigroup* ring = nullptr;
  std::vector<int> basis_degrees;

  long dim(int e) const {
    return std::count_if(basis_degrees.begin(), basis_degrees.end(),
                         [&](int w) { return ring->contains(static_cast<long>(e) - w); });
  }

  // Dimension of the degree-e piece of the span of the given families.
  long span_dim(int e, std::initializer_list<const Family*> families) const {
    std::vector<const std::vector<long>*> active;
    for (const Family* f : families) {
      for (const Row& r : f->rows) {
        if (!f->coeff_ring->contains(static_cast<long>(e) - r.degree)) continue;
        for (std::size_t i = 0; i < r.coeffs.size(); ++i)
          if (r.coeffs[i] != 0 && !ring->contains(static_cast<long>(e) - basis_degrees[i]))
            throw OracleError("generator has a component outside the ambient free module");
        active.push_back(&r.coeffs);
      }
    }
    return static_cast<long>(linalg::rank_of_rows(active, basis_degrees.size()));
  }
};

std::vector<Row> jacobian_rows(const std::vector<BinomialRelation>& relations, std::size_t first_var) {
  std::vector<Row> rows;
  rows.reserve(relations.size());
  for (const auto& rel : relations) {
    Row r{rel.degree, {}};
    for (std::size_t i = first_var; i < rel.lhs.size(); ++i) r.coeffs.push_back(rel.jacobian_coefficient(i));
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<int> tail_weights(const std::vector<int>& weights) { return {weights.begin() + 1, weights.end()}; }

// Sums dim_at(e) for e < cutoff and requires zeros on [cutoff, cutoff + window).
GradedDimensionLedger fill_ledger(int cutoff, int window, const std::function<long(int)>& dim_at,
                                  const std::string& what) {
  GradedDimensionLedger ledger;
  ledger.cutoff = cutoff;
  ledger.stability_window = window;
  for (int e = 0; e < cutoff + window; ++e) {
    const long d = dim_at(e);
    if (d < 0) throw OracleError(what + ": negative dimension in degree " + std::to_string(e));
    if (d == 0) continue;
    if (e >= cutoff) throw OracleError(what + ": cutoff violation in degree " + std::to_string(e));
    ledger.per_degree[e] = d;
    ledger.total += d;
  }
  return ledger;
}

int max_weight(const std::vector<int>& w) { return *std::max_element(w.begin(), w.end()); }

}  // namespace

int omega_cutoff(const NumericalSemigroup& s) {
  return s.max_generator() + kaehler_different(s).min_value() + s.conductor();
}

GradedDimensionLedger omega_rel_s_dim(const NumericalSemigroup& s, const Presentation& pres) {
  if (s.embedding_dimension() < 2) return {};
  if (pres.tuple.weights != s.min_generators()) throw std::invalid_argument("omega_rel_s_dim: presentation frame mismatch");
  const FreeModule f{&s, tail_weights(s.min_generators())};
  const Family n{&s, jacobian_rows(pres.relations, 1)};
  const int cutoff = s.max_generator() + kaehler_different(s, pres).min_value() + s.conductor();
  return fill_ledger(cutoff, s.max_generator(), [&](int e) { return f.dim(e) - f.span_dim(e, {&n}); },
                     "Omega(R/s) of " + s.to_string());
}

GradedDimensionLedger omega_rel_s_dim(const NumericalSemigroup& s) {
  return omega_rel_s_dim(s, minimal_presentation(s));
}

GradedDimensionLedger omega_blowup_rel_s_dim(const NumericalSemigroup& s, TieBreak tie) {
  if (s.embedding_dimension() < 2) return {};
  const auto s1 = blowup(s).transformed;
  const auto bpres = blowup_presentation(s, tie);
  const FreeModule f1{&s1, tail_weights(bpres.tuple.weights)};
  const Family n1{&s1, jacobian_rows(bpres.relations, 1)};
  return fill_ledger(omega_cutoff(s), s.max_generator(), [&](int e) { return f1.dim(e) - f1.span_dim(e, {&n1}); },
                     "Omega(R1/s) of " + s.to_string());
}

long exactness_defect(const NumericalSemigroup& ring, const std::vector<int>& generators) {
  // R'DR' in degree m is spanned by t^a D(t^g) = g t^(a+g-1) dt with a + g = m;
  // DR' by D(t^m) = m t^(m-1) dt for m in R', m > 0.
  const int top = ring.conductor() + max_weight(generators);
  long defect = 0;
  for (int m = 1; m < top; ++m) {
    std::vector<std::vector<long>> rdr;
    for (int g : generators)
      if (ring.contains(m - g)) rdr.push_back({g});
    std::vector<std::vector<long>> dr;
    if (ring.contains(m)) dr.push_back({m});

    auto rank = [](const std::vector<std::vector<long>>& rows) {
      std::vector<const std::vector<long>*> ptrs;
      for (const auto& r : rows) ptrs.push_back(&r);
      return static_cast<long>(linalg::rank_of_rows(ptrs, 1));
    };
    std::vector<std::vector<long>> both = rdr;
    both.insert(both.end(), dr.begin(), dr.end());
    if (rank(both) != rank(rdr)) throw OracleError("exactness_defect: DR is not contained in R DR");
    defect += rank(rdr) - rank(dr);
  }
  return defect;
}

long exactness_defect(const NumericalSemigroup& s) { return exactness_defect(s, s.min_generators()); }

TorsionResult torsion_length(const NumericalSemigroup& s, TieBreak tie) {
  TorsionResult result;
  if (s.embedding_dimension() < 2) return result;
  const auto pres = minimal_presentation(s, tie);
  const int q = s.multiplicity();

  result.omega_rel_s = omega_rel_s_dim(s, pres);
  result.exactness_defect = exactness_defect(s);
  // Omega(S/s) = S dt / S q t^(q-1) dt has dimension q - 1.
  result.route_a = result.omega_rel_s.total - (q - 1) - result.exactness_defect;

  // Route (b): T = ker(Omega(R/k) -> Omega(S/k)), t^a dX_i -> n_i t^(a+n_i-1) dt.
  // T embeds in Omega(R/s), so the same cutoff applies.
  const FreeModule fk{&s, s.min_generators()};
  const Family nk{&s, jacobian_rows(pres.relations, 0)};
  for (const Row& r : nk.rows) {
    long image = 0;
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) image += r.coeffs[i] * s.min_generators()[i];
    if (image != 0) throw OracleError("torsion_length: dh does not map to zero in Omega(S/k)");
  }
  const auto kernel = fill_ledger(
      result.omega_rel_s.cutoff, s.max_generator(),
      [&](int e) {
        const long dim = fk.dim(e);
        const long ker = dim > 0 ? dim - 1 : 0;
        return ker - fk.span_dim(e, {&nk});
      },
      "torsion kernel of " + s.to_string());
  result.route_b = kernel.total;
  result.per_degree = kernel.per_degree;

  if (result.route_a != result.route_b)
    throw OracleError("oracle inconsistency: torsion routes disagree for " + s.to_string() + " (" +
                      std::to_string(result.route_a) + " vs " + std::to_string(result.route_b) + ")");
  result.length = result.route_a;
  return result;
}

NModuleLengths n_module_lengths(const NumericalSemigroup& s, TieBreak tie) {
  NModuleLengths out;
  if (s.embedding_dimension() < 2) return out;
  const int q = s.multiplicity();
  const auto s1 = blowup(s).transformed;
  const auto pres = minimal_presentation(s, tie);
  const auto bpres = blowup_presentation(s, tie);
  const auto tilde = tilde_generators(s, pres);

  const FreeModule f1{&s1, tail_weights(bpres.tuple.weights)};
  const Family n{&s, jacobian_rows(pres.relations, 1)};
  const Family nt{&s, jacobian_rows(tilde, 1)};
  const Family nt1{&s1, nt.rows};
  const Family n1{&s1, jacobian_rows(bpres.relations, 1)};

  const int window = std::max(q, max_weight(tail_weights(bpres.tuple.weights)));
  const int cutoff = 2 * q + kaehler_different(s, pres).min_value() + s.conductor() + s.max_generator();

  std::map<int, long> d_n, d_nt, d_nt1, d_n1;
  for (int e = 0; e < cutoff + window; ++e) {
    d_n[e] = f1.span_dim(e, {&n});
    d_nt[e] = f1.span_dim(e, {&nt});
    d_nt1[e] = f1.span_dim(e, {&nt1});
    d_n1[e] = f1.span_dim(e, {&n1});
    const std::string where = " for " + s.to_string() + " in degree " + std::to_string(e);
    if (f1.span_dim(e, {&n, &nt}) != d_nt[e]) throw OracleError("containment violation N ⊄ Ñ" + where);
    if (f1.span_dim(e, {&nt1, &n1}) != d_n1[e]) throw OracleError("containment violation Ñ1 ⊄ N1" + where);
  }
  auto length = [&](const std::map<int, long>& big, const std::map<int, long>& small, const char* name) {
    return fill_ledger(cutoff, window, [&](int e) { return big.at(e) - small.at(e); },
                       std::string(name) + " of " + s.to_string())
        .total;
  };
  out.n1_over_ntilde = length(d_n1, d_nt, "N1/Ñ");
  out.n1_over_ntilde1 = length(d_n1, d_nt1, "N1/Ñ1");
  out.ntilde1_over_ntilde = length(d_nt1, d_nt, "Ñ1/Ñ");
  out.ntilde_over_n = length(d_nt, d_n, "Ñ/N");
  out.omega_r1_rel_s = fill_ledger(cutoff, window, [&](int e) { return f1.dim(e) - d_n1.at(e); },
                                   "F1/N1 of " + s.to_string());
  return out;
}

GradedDimensionLedger sds_over_rdr_oracle(const NumericalSemigroup& s) {
  // S DS is spanned by every t^(m-1) dt, m >= 1.
  return fill_ledger(s.conductor(), s.max_generator(), [&](int m) -> long {
    if (m < 1) return 0;
    std::vector<std::vector<long>> rdr;
    for (int g : s.min_generators())
      if (s.contains(m - g)) rdr.push_back({g});
    std::vector<const std::vector<long>*> ptrs;
    for (const auto& r : rdr) ptrs.push_back(&r);
    return 1 - static_cast<long>(linalg::rank_of_rows(ptrs, 1));
  }, "SDS/RDR of " + s.to_string());
}

GradedDimensionLedger r1dr1_over_rdr_oracle(const NumericalSemigroup& s) {
  const auto b = blowup(s);
  auto rank_in = [](const NumericalSemigroup& ring, const std::vector<int>& gens, int m) {
    std::vector<std::vector<long>> rows;
    for (int g : gens)
      if (ring.contains(m - g)) rows.push_back({g});
    std::vector<const std::vector<long>*> ptrs;
    for (const auto& r : rows) ptrs.push_back(&r);
    return static_cast<long>(linalg::rank_of_rows(ptrs, 1));
  };
  return fill_ledger(s.conductor(), s.max_generator(), [&](int m) -> long {
    if (m < 1) return 0;
    return rank_in(b.transformed, b.generator_tuple, m) - rank_in(s, s.min_generators(), m);
  }, "R1DR1/RDR of " + s.to_string());
}

}  // namespace curvetorsion
