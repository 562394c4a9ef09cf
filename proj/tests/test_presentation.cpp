#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "curvetorsion/presentation.hpp"
#include "oracles.hpp"

using namespace curvetorsion;

namespace {

GeneratorTuple tuple_of(std::vector<int> w) { return GeneratorTuple{std::move(w), true}; }

}  // namespace

TEST_CASE("factorizations") {
  CHECK(factorizations(tuple_of({3, 4, 5}), 9) == std::vector<Exponents>{{3, 0, 0}, {0, 1, 1}});
  CHECK(factorizations(tuple_of({2, 3}), 6) == std::vector<Exponents>{{3, 0}, {0, 2}});
  CHECK(factorizations(tuple_of({4, 6, 7}), 0) == std::vector<Exponents>{{0, 0, 0}});
  CHECK(factorizations(tuple_of({4, 6, 7}), 5).empty());
  CHECK_THROWS_AS(factorizations(tuple_of({0, 3}), 3), std::invalid_argument);
}

TEST_CASE("factorizations match nested loops") {
  for (const auto& w : std::vector<std::vector<int>>{{3, 4, 5}, {4, 2, 3}, {5, 7, 9, 11, 13}, {3, 1, 2}, {4, 4, 1}}) {
    for (int d = 0; d < 30; ++d) {
      auto expected = oracle::factorizations(w, d);
      auto got = factorizations(tuple_of(w), d);
      std::sort(expected.begin(), expected.end());
      std::sort(got.begin(), got.end());
      CHECK(got == expected);
    }
  }
}

TEST_CASE("minimal presentations of the worked examples") {
  const auto p23 = minimal_presentation(NumericalSemigroup::from_generators({2, 3}));
  CHECK(p23.mu == 1);
  REQUIRE(p23.relations.size() == 1);
  CHECK(p23.relations[0].degree == 6);
  const auto& r = p23.relations[0];
  CHECK(((r.lhs == Exponents{0, 2} && r.rhs == Exponents{3, 0}) || (r.lhs == Exponents{3, 0} && r.rhs == Exponents{0, 2})));

  const auto p345 = minimal_presentation(NumericalSemigroup::from_generators({3, 4, 5}));
  CHECK(p345.mu == 3);
  CHECK(p345.betti_degrees == std::vector<int>{8, 9, 10});

  const auto p467 = minimal_presentation(NumericalSemigroup::from_generators({4, 6, 7}));
  CHECK(p467.mu == 2);
  CHECK(p467.betti_degrees == std::vector<int>{12, 14});

  CHECK(minimal_presentation(NumericalSemigroup::natural()).mu == 0);
}

TEST_CASE("every relation is homogeneous and the set generates") {
  for (const auto& s : enumerate_by_genus(6)) {
    CAPTURE(s.to_string());
    for (auto tie : {TieBreak::Forward, TieBreak::Reversed}) {
      const auto p = minimal_presentation(s, tie);
      CHECK(p.relations.size() == static_cast<std::size_t>(p.mu));
      for (const auto& rel : p.relations) {
        CHECK(p.tuple.degree(rel.lhs) == rel.degree);
        CHECK(p.tuple.degree(rel.rhs) == rel.degree);
        CHECK(rel.lhs != rel.rhs);
      }
      CHECK(generates_congruence(p, betti_bound(p.tuple)));
    }
  }
}

TEST_CASE("deviation and intersection class") {
  CHECK(deviation(NumericalSemigroup::from_generators({2, 3})) == 0);
  CHECK(deviation(NumericalSemigroup::from_generators({3, 4, 5})) == 1);
  CHECK(deviation(NumericalSemigroup::from_generators({4, 6, 7})) == 0);
  CHECK(deviation(NumericalSemigroup::natural()) == 0);
  CHECK(intersection_class(0) == IntersectionClass::CompleteIntersection);
  CHECK(intersection_class(1) == IntersectionClass::AlmostCompleteIntersection);
  CHECK(intersection_class(2) == IntersectionClass::Other);
  CHECK(to_string(IntersectionClass::CompleteIntersection) == "CI");
  CHECK(to_string(IntersectionClass::AlmostCompleteIntersection) == "ACI");
}

TEST_CASE("classify_transform") {
  CHECK(classify_transform(NumericalSemigroup::from_generators({4, 5})) == TransformClass::StableCI);
  CHECK(classify_transform(NumericalSemigroup::from_generators({3, 4, 5})) == TransformClass::NiceACI);
  CHECK(classify_transform(NumericalSemigroup::from_generators({4, 6, 7})) == TransformClass::StableCI);
  CHECK(classify_transform(NumericalSemigroup::natural()) == TransformClass::Regular);
  CHECK(to_string(TransformClass::StableCI) == "stable CI");
  CHECK(to_string(TransformClass::NiceACI) == "nice ACI");
  CHECK(to_string(TransformClass::CIUnstable) == "CI-unstable");
  CHECK(to_string(TransformClass::ACINotNice) == "ACI-not-nice");
}

TEST_CASE("blowup_presentation") {
  const auto p23 = blowup_presentation(NumericalSemigroup::from_generators({2, 3}));
  CHECK(p23.tuple.weights == std::vector<int>{2, 1});
  CHECK(std::any_of(p23.relations.begin(), p23.relations.end(), [](const BinomialRelation& r) {
    return r.degree == 2 && ((r.lhs == Exponents{0, 2} && r.rhs == Exponents{1, 0}) ||
                             (r.lhs == Exponents{1, 0} && r.rhs == Exponents{0, 2}));
  }));

  const auto p345 = blowup_presentation(NumericalSemigroup::from_generators({3, 4, 5}));
  CHECK(p345.tuple.weights == std::vector<int>{3, 1, 2});
  auto has = [&](Exponents a, Exponents b) {
    return std::any_of(p345.relations.begin(), p345.relations.end(), [&](const BinomialRelation& r) {
      return (r.lhs == a && r.rhs == b) || (r.lhs == b && r.rhs == a);
    });
  };
  CHECK(has({0, 2, 0}, {0, 0, 1}));
  // Degree 3 has factorizations x, Z2 Z3, Z2^3; the last two share Z2, so one
  // relation joins x to that component.
  CHECK((has({1, 0, 0}, {0, 1, 1}) || has({1, 0, 0}, {0, 3, 0})));
  CHECK(generates_congruence(p345, betti_bound(p345.tuple)));

  CHECK(blowup_presentation(NumericalSemigroup::natural()).relations.empty());
}

TEST_CASE("tilde_generators") {
  auto single = [](const NumericalSemigroup& s) {
    const auto pres = minimal_presentation(s);
    return std::pair(pres, tilde_generators(s, pres));
  };
  {
    const auto [pres, tilde] = single(NumericalSemigroup::from_generators({2, 3}));
    REQUIRE(tilde.size() == 1);
    CHECK(tilde[0].degree == 2);
    // Z^2 - x over (x = 2; Z = 1)
    const auto& f = tilde[0];
    CHECK(((f.lhs == Exponents{0, 2} && f.rhs == Exponents{1, 0}) || (f.lhs == Exponents{1, 0} && f.rhs == Exponents{0, 2})));
  }
  {
    const auto s = NumericalSemigroup::from_generators({3, 4, 5});
    const auto [pres, tilde] = single(s);
    for (std::size_t j = 0; j < pres.relations.size(); ++j) {
      CHECK(tilde[j].degree == pres.relations[j].degree - 6);
      if (pres.relations[j].degree == 9) {
        const auto& f = tilde[j];
        CHECK(((f.lhs == Exponents{0, 1, 1} && f.rhs == Exponents{1, 0, 0}) ||
               (f.lhs == Exponents{1, 0, 0} && f.rhs == Exponents{0, 1, 1})));
      }
    }
  }
  {
    const auto [pres, tilde] = single(NumericalSemigroup::from_generators({4, 5}));
    REQUIRE(tilde.size() == 1);
    CHECK(tilde[0].degree == 12);
    const auto& f = tilde[0];
    CHECK(((f.lhs == Exponents{2, 4} && f.rhs == Exponents{3, 0}) || (f.lhs == Exponents{3, 0} && f.rhs == Exponents{2, 4})));
  }
}

TEST_CASE("tilde_generators rejects non-minimal presentations") {
  const auto s = NumericalSemigroup::from_generators({3, 4, 5});
  auto pres = minimal_presentation(s);
  // A side of total degree 1 can only occur when some generator is redundant.
  pres.relations.push_back({{0, 0, 1}, {0, 0, 2}, 5});
  CHECK_THROWS_WITH_AS(tilde_generators(s, pres), "presentation side of total degree < 2", NonMinimalPresentationError);
}

TEST_CASE("plane semigroups are complete intersections") {
  for (int a = 2; a <= 12; ++a)
    for (int b = a + 1; b <= 12; ++b)
      if (std::gcd(a, b) == 1) CHECK(deviation(NumericalSemigroup::from_generators({a, b})) == 0);
}
