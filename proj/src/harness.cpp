#include "curvetorsion/harness.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace curvetorsion {

namespace {

std::string generators_text(const NumericalSemigroup& s) {
  std::string out;
  for (int g : s.min_generators()) out += (out.empty() ? "" : " ") + std::to_string(g);
  return out;
}

nlohmann::ordered_json value_set_json(const ValueSet& v) {
  nlohmann::ordered_json j;
  j["min_value"] = v.min_value();
  j["members"] = v.window_members();
  j["tail_start"] = v.tail_start();
  return j;
}

const char* relation_name(Relation r) { return r == Relation::Equal ? "eq" : "ge"; }

std::optional<long> class_specific_drop(const NumericalSemigroup& s, TransformClass cls, TieBreak tie) {
  if (cls == TransformClass::StableCI) return drop_stable_ci(s, tie);
  if (cls == TransformClass::NiceACI) return drop_nice_aci(s, tie);
  return std::nullopt;
}

void write_csv_header(std::ostream& out) {
  out << "semigroup,genus,multiplicity,embedding_dimension,deviation,class,identity,applicable,relation,formula,"
         "oracle,passed\n";
}

void write_csv_rows(std::ostream& out, const CurveReport& r) {
  for (const auto& c : r.checks) {
    out << generators_text(r.semigroup) << ',' << r.genus << ',' << r.multiplicity << ',' << r.embedding_dimension
        << ',' << r.deviation << ',' << to_string(r.transform) << ',' << c.name << ',' << (c.applicable ? 1 : 0)
        << ',' << relation_name(c.relation) << ',' << c.formula << ',' << c.oracle << ',' << (c.passed ? 1 : 0)
        << '\n';
  }
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
  if (name == "human") return OutputFormat::Human;
  if (name == "jsonl") return OutputFormat::Jsonl;
  if (name == "csv") return OutputFormat::Csv;
  throw std::invalid_argument("unknown format '" + name + "' (expected human, jsonl or csv)");
}

bool ChainResult::telescopes() const {
  long oracle_total = 0;
  for (const auto& step : chain) oracle_total += step.drop;
  return terminal.is_regular() && telescoped_total == initial_torsion && oracle_total == initial_torsion;
}

ChainResult compute_chain(const NumericalSemigroup& s, TieBreak tie) {
  ChainResult result;
  result.initial_torsion = torsion_length(s, tie).length;
  NumericalSemigroup cur = s;
  // The genus strictly drops at each singular step.
  for (int guard = s.genus(); !cur.is_regular(); --guard) {
    if (guard < 0) throw std::logic_error("compute_chain: blowup sequence did not reach N");
    const auto r = full_report(cur, tie);
    ChainStep step;
    step.semigroup = cur;
    step.transform = r.transform;
    step.torsion = r.torsion;
    step.drop = r.drop;
    step.formula_drop = drop_general_semigroup(cur, r.lengths);
    step.class_drop = class_specific_drop(cur, r.transform, tie);
    result.telescoped_total += step.formula_drop;
    result.chain.push_back(std::move(step));
    cur = r.blowup;
  }
  result.terminal = cur;
  return result;
}

nlohmann::ordered_json report_to_json(const CurveReport& r) {
  nlohmann::ordered_json j;
  j["semigroup"] = r.semigroup.min_generators();
  j["genus"] = r.genus;
  j["multiplicity"] = r.multiplicity;
  j["embedding_dimension"] = r.embedding_dimension;
  j["conductor"] = r.semigroup.conductor();
  j["mu"] = r.mu;
  j["deviation"] = r.deviation;
  j["intersection_class"] = std::string(to_string(r.intersection));
  j["class"] = std::string(to_string(r.transform));
  j["blowup"] = r.blowup.min_generators();
  j["blowup_tuple"] = r.blowup_tuple;
  j["genus_blowup"] = r.genus_blowup;
  j["deviation_blowup"] = r.deviation_blowup;
  j["colength"] = r.colength;
  j["torsion"] = r.torsion;
  j["torsion_blowup"] = r.torsion_blowup;
  j["drop"] = r.drop;
  j["omega_rel_s"] = r.omega_rel_s;
  j["omega_blowup_rel_s"] = r.omega_blowup_rel_s;
  j["exactness_defect"] = r.exactness_defect;
  j["exactness_defect_blowup"] = r.exactness_defect_blowup;
  j["sds_over_rdr"] = r.sds_over_rdr;
  j["r1dr1_over_rdr"] = r.r1dr1_over_rdr;
  j["aci_correction"] = r.aci_correction;
  j["kaehler_different"] = value_set_json(r.kaehler_different);
  j["dedekind_different"] = value_set_json(r.dedekind_different);
  j["n_modules"] = {{"n1_over_ntilde", r.lengths.n1_over_ntilde},
                    {"n1_over_ntilde1", r.lengths.n1_over_ntilde1},
                    {"ntilde1_over_ntilde", r.lengths.ntilde1_over_ntilde},
                    {"ntilde_over_n", r.lengths.ntilde_over_n}};
  auto checks = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    nlohmann::ordered_json cj;
    cj["name"] = c.name;
    cj["applicable"] = c.applicable;
    cj["relation"] = relation_name(c.relation);
    cj["formula"] = c.formula;
    cj["oracle"] = c.oracle;
    cj["passed"] = c.passed;
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  j["all_pass"] = r.all_pass();
  return j;
}

nlohmann::ordered_json chain_to_json(const ChainResult& c) {
  nlohmann::ordered_json j;
  auto steps = nlohmann::ordered_json::array();
  for (const auto& s : c.chain) {
    nlohmann::ordered_json sj;
    sj["semigroup"] = s.semigroup.min_generators();
    sj["class"] = std::string(to_string(s.transform));
    sj["torsion"] = s.torsion;
    sj["drop"] = s.drop;
    sj["formula_drop"] = s.formula_drop;
    if (s.class_drop) sj["class_drop"] = *s.class_drop;
    steps.push_back(std::move(sj));
  }
  j["chain"] = std::move(steps);
  j["terminal"] = c.terminal.min_generators();
  j["initial_torsion"] = c.initial_torsion;
  j["telescoped_total"] = c.telescoped_total;
  j["telescopes"] = c.telescopes();
  return j;
}

void render_report(std::ostream& out, const CurveReport& r, OutputFormat format) {
  switch (format) {
    case OutputFormat::Jsonl:
      out << report_to_json(r).dump() << '\n';
      return;
    case OutputFormat::Csv:
      write_csv_header(out);
      write_csv_rows(out, r);
      return;
    case OutputFormat::Human:
      break;
  }
  out << "curve " << r.semigroup.to_string() << "  genus " << r.genus << "  q " << r.multiplicity << "  n "
      << r.embedding_dimension << "  conductor " << r.semigroup.conductor() << '\n'
      << "  presentation: mu " << r.mu << ", deviation " << r.deviation << " (" << to_string(r.intersection) << ")\n"
      << "  blowup " << r.blowup.to_string() << "  genus " << r.genus_blowup << "  dim R1/R " << r.colength
      << "  deviation " << r.deviation_blowup << '\n'
      << "  class: " << to_string(r.transform) << '\n'
      << "  torsion l(T) " << r.torsion << ", l(T1) " << r.torsion_blowup << ", drop " << r.drop << '\n'
      << "  dim Omega(R/s) " << r.omega_rel_s << ", dim Omega(R1/s) " << r.omega_blowup_rel_s
      << ", exactness defects " << r.exactness_defect << '/' << r.exactness_defect_blowup << '\n'
      << "  SDS/RDR " << r.sds_over_rdr << ", R1DR1/RDR " << r.r1dr1_over_rdr << ", D_K^-1/R* " << r.aci_correction
      << '\n'
      << "  D_K " << r.kaehler_different.to_string() << "\n  D_D " << r.dedekind_different.to_string() << '\n'
      << "  l(N1/Ñ) " << r.lengths.n1_over_ntilde << ", l(N1/Ñ1) " << r.lengths.n1_over_ntilde1 << ", l(Ñ1/Ñ) "
      << r.lengths.ntilde1_over_ntilde << ", l(Ñ/N) " << r.lengths.ntilde_over_n << '\n'
      << "  checks:\n";
  for (const auto& c : r.checks) {
    out << "    " << (c.applicable ? (c.passed ? "pass" : "FAIL") : "n/a ") << "  " << c.name;
    if (c.applicable)
      out << "  formula " << c.formula << (c.relation == Relation::Equal ? " = " : " <= ") << "oracle " << c.oracle;
    out << '\n';
  }
}

void render_chain(std::ostream& out, const ChainResult& c, OutputFormat format) {
  switch (format) {
    case OutputFormat::Jsonl:
      out << chain_to_json(c).dump() << '\n';
      return;
    case OutputFormat::Csv:
      out << "step,semigroup,class,torsion,drop,formula_drop,class_drop\n";
      for (std::size_t i = 0; i < c.chain.size(); ++i) {
        const auto& s = c.chain[i];
        out << i << ',' << generators_text(s.semigroup) << ',' << to_string(s.transform) << ',' << s.torsion << ','
            << s.drop << ',' << s.formula_drop << ',' << (s.class_drop ? std::to_string(*s.class_drop) : "") << '\n';
      }
      return;
    case OutputFormat::Human:
      break;
  }
  for (const auto& s : c.chain) {
    out << s.semigroup.to_string() << "  l(T) " << s.torsion << "  [" << to_string(s.transform) << "]  --drop "
        << s.drop << " (formula " << s.formula_drop;
    if (s.class_drop) out << ", class formula " << *s.class_drop;
    out << ")-->\n";
  }
  out << c.terminal.to_string() << "  l(T) 0\n"
      << "telescoped total " << c.telescoped_total << " vs l(T) " << c.initial_torsion << ": "
      << (c.telescopes() ? "ok" : "MISMATCH") << '\n';
}

int CampaignSummary::exit_code() const {
  if (!oracle_errors.empty()) return 1;
  if (!violations.empty()) return 2;
  return 0;
}

CampaignSummary run_campaign(const CampaignConfig& config, std::ostream& out, std::ostream& err) {
  if (config.max_genus < 0) throw std::invalid_argument("max_genus must be nonnegative");
  if (config.parallelism < 1) throw std::invalid_argument("parallelism must be at least 1");

  std::vector<NumericalSemigroup> corpus;
  for (auto& s : enumerate_by_genus(config.max_genus))
    if (!config.max_multiplicity || s.multiplicity() <= *config.max_multiplicity) corpus.push_back(std::move(s));

  struct Slot {
    std::optional<CurveReport> report;
    std::string error;
  };
  std::vector<Slot> slots(corpus.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> stop_at{std::numeric_limits<std::size_t>::max()};

  auto worker = [&] {
    for (std::size_t i = next++; i < corpus.size(); i = next++) {
      if (i > stop_at.load()) continue;
      try {
        slots[i].report = full_report(corpus[i], config.tie);
        if (config.fail_fast && !slots[i].report->all_pass()) {
          std::size_t cur = stop_at.load();
          while (i < cur && !stop_at.compare_exchange_weak(cur, i)) {
          }
        }
      } catch (const std::exception& e) {
        slots[i].error = e.what();
        std::size_t cur = stop_at.load();
        while (config.fail_fast && i < cur && !stop_at.compare_exchange_weak(cur, i)) {
        }
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (int t = 0; t < config.parallelism; ++t) pool.emplace_back(worker);
  }

  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t i = 0; i < corpus.size(); ++i)
    if (slots[i].report) index.emplace(corpus[i].min_generators(), i);

  CampaignSummary summary;
  if (config.format == OutputFormat::Csv) write_csv_header(out);
  for (std::size_t i = 0; i < corpus.size() && i <= stop_at.load(); ++i) {
    ++summary.curves;
    if (!slots[i].report) {
      summary.oracle_errors.push_back(corpus[i].to_string() + ": " + slots[i].error);
      err << "oracle error: " << summary.oracle_errors.back() << '\n';
      if (config.fail_fast) break;
      continue;
    }
    CurveReport& r = *slots[i].report;

    // Telescoping: the general drop formula summed along the blowup chain
    // must give l(T); each step's l(T1) must match the next curve's l(T).
    if (!r.semigroup.is_regular()) {
      long total = 0;
      bool consistent = true;
      const CurveReport* step = &r;
      std::optional<CurveReport> scratch;
      while (!step->semigroup.is_regular()) {
        total += step->check("general_drop")->formula;
        const auto it = index.find(step->blowup.min_generators());
        const CurveReport* next_step = nullptr;
        if (it != index.end()) {
          next_step = &*slots[it->second].report;
        } else {
          scratch = full_report(step->blowup, config.tie);
          next_step = &*scratch;
        }
        consistent = consistent && next_step->torsion == step->torsion_blowup;
        step = next_step;
      }
      r.checks.push_back({"telescoping", true, Relation::Equal, total, r.torsion, consistent && total == r.torsion});
    }

    switch (config.format) {
      case OutputFormat::Jsonl: out << report_to_json(r).dump() << '\n'; break;
      case OutputFormat::Csv: write_csv_rows(out, r); break;
      case OutputFormat::Human:
        out << r.semigroup.to_string() << "  g=" << r.genus << "  " << to_string(r.transform) << "  l(T)=" << r.torsion
            << "  drop=" << r.drop << "  " << (r.all_pass() ? "ok" : "VIOLATION") << '\n';
        break;
    }

    for (const auto& c : r.checks) {
      if (!c.applicable) continue;
      auto& tally = summary.per_identity[c.name];
      ++tally.applicable;
      if (c.passed) ++tally.passed;
      else summary.violations.push_back({r.semigroup.to_string(), c});
    }
    if (!r.semigroup.is_regular()) {
      ++summary.singular_curves;
      if (r.torsion > 0) ++summary.positive_torsion;
      summary.min_drop = std::min(summary.min_drop.value_or(r.drop), r.drop);
      if (r.deviation == 0) summary.min_drop_ci = std::min(summary.min_drop_ci.value_or(r.drop), r.drop);
    }
    if (config.fail_fast && !r.all_pass()) break;
  }
  return summary;
}

void render_summary(std::ostream& out, const CampaignSummary& s) {
  out << "curves: " << s.curves << "\n";
  out << "singular curves: " << s.singular_curves << ", with l(T) > 0: " << s.positive_torsion << '\n';
  if (s.min_drop) out << "minimum drop l(T) - l(T1): " << *s.min_drop << '\n';
  if (s.min_drop_ci) out << "minimum drop over complete intersections: " << *s.min_drop_ci << '\n';
  out << "identities (passed/applicable):\n";
  for (const auto& [name, tally] : s.per_identity)
    out << "  " << name << ": " << tally.passed << '/' << tally.applicable << '\n';
  out << "violations: " << s.violations.size() << '\n';
  if (!s.violations.empty()) {
    const auto& v = s.violations.front();
    out << "first violation: " << v.semigroup << " " << v.check.name << " formula " << v.check.formula << " oracle "
        << v.check.oracle << '\n';
  }
  out << "oracle errors: " << s.oracle_errors.size() << '\n';
  if (!s.oracle_errors.empty()) out << "first oracle error: " << s.oracle_errors.front() << '\n';
}

}  // namespace curvetorsion
