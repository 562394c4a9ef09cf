#include "curvetorsion/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace curvetorsion {

namespace {

constexpr long kMaxSieve = 1L << 26;

}  // namespace

NumericalSemigroup NumericalSemigroup::from_generators(std::initializer_list<int> values) {
  return from_generators(std::span<const int>(values.begin(), values.size()));
}

NumericalSemigroup NumericalSemigroup::from_generators(std::span<const int> values) {
  if (values.empty()) throw std::invalid_argument("empty generator list");
  int g = 0;
  for (int v : values) {
    if (v < 1) throw std::invalid_argument("generators must be positive integers");
    g = std::gcd(g, v);
  }
  if (g != 1) throw std::invalid_argument("not a numerical semigroup: gcd ≠ 1");

  const long lo = *std::min_element(values.begin(), values.end());
  const long hi = *std::max_element(values.begin(), values.end());
  // Frobenius number < (lo - 1)(hi - 1), so the sieve covers the conductor.
  const long bound = lo * hi + hi;
  if (bound > kMaxSieve) throw std::invalid_argument("generators too large");

  std::vector<bool> member(static_cast<std::size_t>(bound), false);
  member[0] = true;
  for (long m = 1; m < bound; ++m) {
    for (int v : values) {
      if (v <= m && member[static_cast<std::size_t>(m - v)]) {
        member[static_cast<std::size_t>(m)] = true;
        break;
      }
    }
  }
  return from_membership(std::move(member));
}

NumericalSemigroup NumericalSemigroup::from_gaps(std::span<const int> gaps) {
  int top = 0;
  for (int g : gaps) {
    if (g < 1) throw std::invalid_argument("gaps must be positive integers");
    top = std::max(top, g);
  }
  std::vector<bool> member(static_cast<std::size_t>(2 * top + 2), true);
  for (int g : gaps) member[static_cast<std::size_t>(g)] = false;
  for (std::size_t a = 1; a < member.size(); ++a) {
    if (!member[a]) continue;
    for (std::size_t b = a; a + b < member.size(); ++b) {
      if (member[b] && !member[a + b])
        throw std::invalid_argument("gap set complement is not closed under addition");
    }
  }
  return from_membership(std::move(member));
}

NumericalSemigroup NumericalSemigroup::natural() { return from_membership({true}); }

// `member` must be a valid semigroup bitmap whose complement inside the
// bitmap is the full gap set (everything past the end is a member).
NumericalSemigroup NumericalSemigroup::from_membership(std::vector<bool> member) {
  NumericalSemigroup s;
  int conductor = static_cast<int>(member.size());
  while (conductor > 0 && member[static_cast<std::size_t>(conductor - 1)]) --conductor;
  s.conductor_ = conductor;
  for (int m = 1; m < conductor; ++m)
    if (!member[static_cast<std::size_t>(m)]) s.gaps_.push_back(m);

  auto in = [&](int m) {
    return m >= 0 && (m >= conductor || member[static_cast<std::size_t>(m)]);
  };
  int q = 1;
  while (!in(q)) ++q;
  // Minimal generators lie in [q, conductor + q].
  for (int g = q; g <= conductor + q; ++g) {
    if (!in(g)) continue;
    bool decomposable = false;
    for (int a = q; a <= g / 2 && !decomposable; ++a) decomposable = in(a) && in(g - a);
    if (!decomposable) s.min_generators_.push_back(g);
  }

  const int width = conductor + s.min_generators_.back();
  s.member_.assign(static_cast<std::size_t>(width), true);
  for (int gap : s.gaps_) s.member_[static_cast<std::size_t>(gap)] = false;
  return s;
}

std::vector<int> NumericalSemigroup::elements_below(int bound) const {
  std::vector<int> out;
  for (int m = 0; m < bound; ++m)
    if (contains(m)) out.push_back(m);
  return out;
}

std::string NumericalSemigroup::to_string() const {
  std::ostringstream os;
  os << '<';
  for (std::size_t i = 0; i < min_generators_.size(); ++i) os << (i ? "," : "") << min_generators_[i];
  os << '>';
  return os.str();
}

bool contains(const NumericalSemigroup& s, long m) { return s.contains(m); }

std::vector<int> apery_set(const NumericalSemigroup& s, int m) {
  if (m < 1 || !s.contains(m)) throw std::invalid_argument("apery_set: modulus must be a positive element");
  std::vector<int> out(static_cast<std::size_t>(m), -1);
  int found = 0;
  for (int w = 0; found < m; ++w) {
    if (!s.contains(w)) continue;
    int& slot = out[static_cast<std::size_t>(w % m)];
    if (slot < 0) {
      slot = w;
      ++found;
    }
  }
  return out;
}

BlowupResult blowup(const NumericalSemigroup& s) {
  const auto& gens = s.min_generators();
  const int q = s.multiplicity();
  std::vector<int> tuple{q};
  for (std::size_t i = 1; i < gens.size(); ++i) tuple.push_back(gens[i] - q);
  auto transformed = NumericalSemigroup::from_generators(tuple);
  const int drop = s.genus() - transformed.genus();
  return {std::move(transformed), std::move(tuple), drop};
}

int colength(const NumericalSemigroup& inner, const NumericalSemigroup& outer) {
  for (int g : inner.min_generators())
    if (!outer.contains(g)) throw std::invalid_argument("colength: inner semigroup is not contained in outer");
  return inner.genus() - outer.genus();
}

std::vector<NumericalSemigroup> enumerate_by_genus(int max_genus) {
  if (max_genus < 0) throw std::invalid_argument("max_genus must be nonnegative");
  std::vector<NumericalSemigroup> out;
  std::vector<NumericalSemigroup> level{NumericalSemigroup::natural()};
  for (int g = 0;; ++g) {
    std::sort(level.begin(), level.end());
    out.insert(out.end(), level.begin(), level.end());
    if (g == max_genus) break;
    // Children: remove a minimal generator larger than the Frobenius number.
    std::vector<NumericalSemigroup> next;
    for (const auto& s : level) {
      for (int gen : s.min_generators()) {
        if (gen <= s.frobenius()) continue;
        std::vector<int> gaps = s.gaps();
        gaps.push_back(gen);
        next.push_back(NumericalSemigroup::from_gaps(gaps));
      }
    }
    level = std::move(next);
  }
  return out;
}

}  // namespace curvetorsion
