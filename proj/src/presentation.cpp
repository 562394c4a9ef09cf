#include "curvetorsion/presentation.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace curvetorsion {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

void enumerate(const std::vector<int>& w, std::size_t i, int remaining, Exponents& cur,
               std::vector<Exponents>& out) {
  if (i + 1 == w.size()) {
    if (remaining % w[i] == 0) {
      cur[i] = remaining / w[i];
      out.push_back(cur);
      cur[i] = 0;
    }
    return;
  }
  for (int k = remaining / w[i]; k >= 0; --k) {
    cur[i] = k;
    enumerate(w, i + 1, remaining - k * w[i], cur, out);
  }
  cur[i] = 0;
}

int total_degree(const Exponents& e, std::size_t from) {
  int t = 0;
  for (std::size_t i = from; i < e.size(); ++i) t += e[i];
  return t;
}

}  // namespace

int GeneratorTuple::degree(const Exponents& e) const {
  int d = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) d += e[i] * weights[i];
  return d;
}

std::string_view to_string(IntersectionClass c) {
  switch (c) {
    case IntersectionClass::CompleteIntersection: return "CI";
    case IntersectionClass::AlmostCompleteIntersection: return "ACI";
    case IntersectionClass::Other: return "other";
  }
  return "?";
}

std::string_view to_string(TransformClass c) {
  switch (c) {
    case TransformClass::Regular: return "regular";
    case TransformClass::StableCI: return "stable CI";
    case TransformClass::NiceACI: return "nice ACI";
    case TransformClass::CIUnstable: return "CI-unstable";
    case TransformClass::ACINotNice: return "ACI-not-nice";
    case TransformClass::Other: return "other";
  }
  return "?";
}

std::vector<Exponents> factorizations(const GeneratorTuple& tuple, int d) {
  std::vector<Exponents> out;
  if (d < 0 || tuple.weights.empty()) return out;
  for (int w : tuple.weights)
    if (w < 1) throw std::invalid_argument("factorizations: weights must be positive");
  Exponents cur(tuple.size(), 0);
  enumerate(tuple.weights, 0, d, cur, out);
  return out;
}

int betti_bound(const GeneratorTuple& tuple) {
  const auto s = NumericalSemigroup::from_generators(tuple.weights);
  return s.conductor() + 2 * *std::max_element(tuple.weights.begin(), tuple.weights.end());
}

Presentation minimal_presentation(const GeneratorTuple& tuple, TieBreak tie) {
  if (tuple.weights.empty()) throw std::invalid_argument("minimal_presentation: empty tuple");
  Presentation pres{tuple, {}, 0, {}};
  const int bound = betti_bound(tuple);
  for (int d = 1; d <= bound; ++d) {
    auto facts = factorizations(tuple, d);
    if (facts.size() < 2) continue;
    if (tie == TieBreak::Reversed) std::reverse(facts.begin(), facts.end());

    DisjointSets sets(facts.size());
    for (std::size_t i = 0; i < tuple.size(); ++i) {
      std::size_t first = facts.size();
      for (std::size_t f = 0; f < facts.size(); ++f) {
        if (facts[f][i] == 0) continue;
        if (first == facts.size()) first = f;
        else sets.unite(first, f);
      }
    }
    // Component representatives in order of first appearance.
    std::vector<std::size_t> reps;
    for (std::size_t f = 0; f < facts.size(); ++f)
      if (sets.find(f) == f) reps.push_back(f);

    for (std::size_t k = 1; k < reps.size(); ++k) {
      // Forward: star around the first component. Reversed: a path.
      const std::size_t anchor = tie == TieBreak::Forward ? reps.front() : reps[k - 1];
      pres.relations.push_back({facts[anchor], facts[reps[k]], d});
      pres.betti_degrees.push_back(d);
    }
  }
  pres.mu = static_cast<int>(pres.relations.size());
  return pres;
}

Presentation minimal_presentation(const NumericalSemigroup& s, TieBreak tie) {
  return minimal_presentation(GeneratorTuple{s.min_generators(), true}, tie);
}

bool generates_congruence(const Presentation& pres, int bound) {
  for (int d = 1; d <= bound; ++d) {
    const auto facts = factorizations(pres.tuple, d);
    if (facts.size() < 2) continue;
    std::map<Exponents, std::size_t> index;
    for (std::size_t f = 0; f < facts.size(); ++f) index.emplace(facts[f], f);
    DisjointSets sets(facts.size());
    for (std::size_t f = 0; f < facts.size(); ++f) {
      for (const auto& rel : pres.relations) {
        for (int dir = 0; dir < 2; ++dir) {
          const Exponents& from = dir == 0 ? rel.lhs : rel.rhs;
          const Exponents& to = dir == 0 ? rel.rhs : rel.lhs;
          Exponents moved = facts[f];
          bool fits = true;
          for (std::size_t i = 0; i < moved.size() && fits; ++i) {
            moved[i] += to[i] - from[i];
            fits = moved[i] >= 0;
          }
          if (fits) sets.unite(f, index.at(moved));
        }
      }
    }
    for (std::size_t f = 0; f < facts.size(); ++f)
      if (sets.find(f) != 0) return false;
  }
  return true;
}

int deviation(const NumericalSemigroup& s, TieBreak tie) {
  return minimal_presentation(s, tie).mu - (s.embedding_dimension() - 1);
}

IntersectionClass intersection_class(int dev) {
  if (dev == 0) return IntersectionClass::CompleteIntersection;
  if (dev == 1) return IntersectionClass::AlmostCompleteIntersection;
  return IntersectionClass::Other;
}

TransformClass classify_transform(const NumericalSemigroup& s, TieBreak tie) {
  if (s.is_regular()) return TransformClass::Regular;
  const int dev = deviation(s, tie);
  const int dev1 = deviation(blowup(s).transformed, tie);
  if (dev == 0) return dev1 == 0 ? TransformClass::StableCI : TransformClass::CIUnstable;
  if (dev == 1) return dev1 == 0 ? TransformClass::NiceACI : TransformClass::ACINotNice;
  return TransformClass::Other;
}

Presentation blowup_presentation(const NumericalSemigroup& s, TieBreak tie) {
  const auto b = blowup(s);
  if (s.embedding_dimension() < 2) return Presentation{GeneratorTuple{b.generator_tuple, true}, {}, 0, {}};
  GeneratorTuple tuple{b.generator_tuple, true};
  auto pres = minimal_presentation(tuple, tie);
  if (!generates_congruence(pres, betti_bound(tuple)))
    throw std::logic_error("blowup_presentation: relations do not generate the congruence");
  return pres;
}

std::vector<BinomialRelation> tilde_generators(const NumericalSemigroup& s, const Presentation& pres) {
  if (pres.tuple.weights != s.min_generators() || !pres.tuple.has_x_slot)
    throw std::invalid_argument("tilde_generators: presentation is not over the minimal generators of S");
  const int q = s.multiplicity();
  std::vector<BinomialRelation> out;
  out.reserve(pres.relations.size());
  auto shift = [](const Exponents& side) {
    Exponents e = side;
    const int order = side[0] + total_degree(side, 1);
    if (order < 2) throw NonMinimalPresentationError("presentation side of total degree < 2");
    e[0] = order - 2;
    return e;
  };
  for (const auto& h : pres.relations) out.push_back({shift(h.lhs), shift(h.rhs), h.degree - 2 * q});
  return out;
}

}  // namespace curvetorsion
