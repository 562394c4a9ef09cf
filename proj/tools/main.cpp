// curvetorsion: torsion of differentials on monomial curves.
#include <iostream>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "curvetorsion/harness.hpp"

using namespace curvetorsion;

namespace {

struct Common {
  std::string format = "human";
  bool reversed = false;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--format", c.format, "output format")
      ->check(CLI::IsMember({"human", "jsonl", "csv"}))
      ->capture_default_str();
  cmd->add_flag("--reversed-tie-break", c.reversed, "reverse tie-breaking in minimal presentations");
}

TieBreak tie_of(const Common& c) { return c.reversed ? TieBreak::Reversed : TieBreak::Forward; }

NumericalSemigroup parse_semigroup(const std::vector<long>& gens) {
  std::vector<int> g;
  for (long v : gens) {
    if (v <= 0 || v > 1'000'000) throw std::invalid_argument("generators must be positive integers, got " + std::to_string(v));
    g.push_back(static_cast<int>(v));
  }
  return NumericalSemigroup::from_generators(g);
}

int cmd_analyze(const std::vector<long>& gens, const Common& c) {
  const auto s = parse_semigroup(gens);
  const auto r = full_report(s, tie_of(c));
  render_report(std::cout, r, parse_format(c.format));
  if (!r.all_pass()) {
    for (const auto& chk : r.checks)
      if (chk.applicable && !chk.passed)
        std::cerr << "identity violation: " << s.to_string() << " " << chk.name << " formula " << chk.formula
                  << " oracle " << chk.oracle << '\n';
    return 2;
  }
  return 0;
}

int cmd_chain(const std::vector<long>& gens, const Common& c) {
  const auto s = parse_semigroup(gens);
  const auto result = compute_chain(s, tie_of(c));
  render_chain(std::cout, result, parse_format(c.format));
  if (!result.telescopes()) {
    std::cerr << "identity violation: chain of " << s.to_string() << " telescopes to " << result.telescoped_total
              << " but l(T) = " << result.initial_torsion << '\n';
    return 2;
  }
  return 0;
}

int cmd_enumerate(int max_genus, std::optional<int> max_mult, const Common& c) {
  if (max_genus < 0) throw std::invalid_argument("--max-genus must be nonnegative");
  const auto format = parse_format(c.format);
  if (format == OutputFormat::Csv) std::cout << "semigroup,genus,multiplicity,embedding_dimension,frobenius\n";
  std::map<int, int> counts;
  for (const auto& s : enumerate_by_genus(max_genus)) {
    if (max_mult && s.multiplicity() > *max_mult) continue;
    ++counts[s.genus()];
    switch (format) {
      case OutputFormat::Jsonl: {
        nlohmann::ordered_json j;
        j["semigroup"] = s.min_generators();
        j["genus"] = s.genus();
        j["multiplicity"] = s.multiplicity();
        j["embedding_dimension"] = s.embedding_dimension();
        j["frobenius"] = s.frobenius();
        std::cout << j.dump() << '\n';
        break;
      }
      case OutputFormat::Csv: {
        std::string gs;
        for (int g : s.min_generators()) gs += (gs.empty() ? "" : " ") + std::to_string(g);
        std::cout << gs << ',' << s.genus() << ',' << s.multiplicity() << ',' << s.embedding_dimension() << ','
                  << s.frobenius() << '\n';
        break;
      }
      case OutputFormat::Human:
        std::cout << s.to_string() << "  genus " << s.genus() << "  q " << s.multiplicity() << "  n "
                  << s.embedding_dimension() << "  F " << s.frobenius() << '\n';
        break;
    }
  }
  std::ostream& summary = format == OutputFormat::Human ? std::cout : std::cerr;
  summary << "counts by genus:";
  for (int g = 0; g <= max_genus; ++g) summary << ' ' << counts[g];
  summary << '\n';
  return 0;
}

int cmd_verify(CampaignConfig config, const Common& c) {
  config.format = parse_format(c.format);
  config.tie = tie_of(c);
  const auto summary = run_campaign(config, std::cout, std::cerr);
  render_summary(config.format == OutputFormat::Human ? std::cout : std::cerr, summary);
  return summary.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Torsion of differentials on monomial curves and their quadratic transforms"};
  app.require_subcommand(1);

  Common common;
  std::vector<long> gens;
  CampaignConfig config;
  int max_multiplicity = 0;
  int enum_max_genus = 0;

  auto* analyze = app.add_subcommand("analyze", "full report for one semigroup");
  analyze->add_option("generators", gens, "semigroup generators")->required();
  add_common(analyze, common);

  auto* chain = app.add_subcommand("chain", "blowup chain down to N with telescoping check");
  chain->add_option("generators", gens, "semigroup generators")->required();
  add_common(chain, common);

  auto* verify = app.add_subcommand("verify", "check every identity over all semigroups up to a genus");
  verify->add_option("--max-genus", config.max_genus, "largest genus in the corpus")->required();
  auto* vmm = verify->add_option("--max-multiplicity", max_multiplicity, "skip curves of larger multiplicity");
  verify->add_option("--jobs", config.parallelism, "worker threads")->capture_default_str();
  verify->add_flag("--fail-fast", config.fail_fast, "stop at the first violation or oracle error");
  add_common(verify, common);

  auto* enumerate = app.add_subcommand("enumerate", "list numerical semigroups by genus");
  enumerate->add_option("--max-genus", enum_max_genus, "largest genus")->required();
  auto* emm = enumerate->add_option("--max-multiplicity", max_multiplicity, "skip larger multiplicity");
  add_common(enumerate, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (*analyze) return cmd_analyze(gens, common);
    if (*chain) return cmd_chain(gens, common);
    if (*verify) {
      if (*vmm) config.max_multiplicity = max_multiplicity;
      return cmd_verify(config, common);
    }
    if (*enumerate)
      return cmd_enumerate(enum_max_genus, *emm ? std::optional<int>(max_multiplicity) : std::nullopt, common);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
