#ifndef CURVETORSION_HARNESS_HPP
#define CURVETORSION_HARNESS_HPP

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "curvetorsion/torsion_formulas.hpp"

namespace curvetorsion {

enum class OutputFormat { Human, Jsonl, Csv };

OutputFormat parse_format(const std::string& name);

struct CampaignConfig {
  int max_genus = 0;
  std::optional<int> max_multiplicity;
  int parallelism = 1;
  OutputFormat format = OutputFormat::Human;
  bool fail_fast = false;
  TieBreak tie = TieBreak::Forward;
};

struct ChainStep {
  NumericalSemigroup semigroup = NumericalSemigroup::natural();
  TransformClass transform = TransformClass::Regular;
  long torsion = 0;
  long drop = 0;          // oracle l(T) - l(T1)
  long formula_drop = 0;  // general semigroup formula
  // Class-specific closed form (stable CI / nice ACI), when it applies.
  std::optional<long> class_drop;
};

// Iterated quadratic transforms down to N.
struct ChainResult {
  std::vector<ChainStep> chain;
  NumericalSemigroup terminal = NumericalSemigroup::natural();
  long initial_torsion = 0;
  long telescoped_total = 0;  // sum of formula drops

  bool telescopes() const;
};

ChainResult compute_chain(const NumericalSemigroup& s, TieBreak tie = TieBreak::Forward);

nlohmann::ordered_json report_to_json(const CurveReport& r);
nlohmann::ordered_json chain_to_json(const ChainResult& c);

void render_report(std::ostream& out, const CurveReport& r, OutputFormat format);
void render_chain(std::ostream& out, const ChainResult& c, OutputFormat format);

struct IdentityTally {
  int applicable = 0;
  int passed = 0;
};

struct Violation {
  std::string semigroup;
  IdentityCheck check;
};

struct CampaignSummary {
  int curves = 0;
  std::map<std::string, IdentityTally> per_identity;  // sorted by name
  std::vector<Violation> violations;
  std::vector<std::string> oracle_errors;
  // Smallest oracle drop over singular curves, overall and over complete intersections.
  std::optional<long> min_drop;
  std::optional<long> min_drop_ci;
  int singular_curves = 0;
  int positive_torsion = 0;

  // 0 all-pass, 1 oracle/tool error, 2 identity violation.
  int exit_code() const;
};

// Runs full_report on every curve of the corpus and the chain telescoping
// check. Records go to `out` in corpus order (deterministic for a given
// config); progress and diagnostics go to `err`.
CampaignSummary run_campaign(const CampaignConfig& config, std::ostream& out, std::ostream& err);

void render_summary(std::ostream& out, const CampaignSummary& summary);

}  // namespace curvetorsion

#endif
