#include "pcc/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "pcc/oracle.hpp"

namespace pcc {

std::optional<OracleLevel> parse_oracle_level(const std::string& s) {
  if (s == "off") return OracleLevel::Off;
  if (s == "partial") return OracleLevel::Partial;
  if (s == "full") return OracleLevel::Full;
  return std::nullopt;
}

std::string oracle_level_name(OracleLevel level) {
  switch (level) {
    case OracleLevel::Off: return "off";
    case OracleLevel::Partial: return "partial";
    case OracleLevel::Full: return "full";
  }
  return "off";
}

bool InstanceOutcome::failed() const { return !first_failure().empty(); }

std::string InstanceOutcome::first_failure() const {
  if (!internal_error.empty()) return "internal error: " + internal_error;
  if (!certificate_ok) return "certificate does not validate";
  if (!side_conditions_ok) return "side condition violated";
  if (!double_pentagon_ok) return "double-pentagon detection disagrees with tag";
  if (!hamilton_path_ok) return "PC Hamilton path failed";
  if (!exclusivity_ok) return "not exactly one case holds";
  if (!pancyclic_oracle_ok) return "tag disagrees with PC-cycle oracle";
  if (!degeneracy_oracle_ok) return "degeneracy status disagrees with brute force";
  if (!closure_minimality_ok) return "closure is not minimal";
  return {};
}

namespace {

bool closure_is_minimal(const ColoredCompleteGraph& g, const oracle::DegeneracyFacts& facts) {
  const int n = g.order();
  for (Vertex u = 0; u < n; ++u) {
    for (Color c = 0; c < g.palette_size(); ++c) {
      const auto closure = closure_from_seed(g, u, c);
      if (closure && !is_valid_certificate(g, *closure)) return false;
      for (const auto& cert : facts.all) {
        auto it = cert.assign.find(u);
        if (it == cert.assign.end() || it->second != c) continue;
        if (!closure) return false;
        for (auto [v, fv] : closure->assign) {
          auto jt = cert.assign.find(v);
          if (jt == cert.assign.end() || jt->second != fv) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

InstanceOutcome check_instance(const ColoredCompleteGraph& g, OracleLevel level) {
  InstanceOutcome out;
  const int n = g.order();
  const bool full = level == OracleLevel::Full;
  std::optional<oracle::DegeneracyFacts> facts;
  if (full && n >= 2) {
    facts = oracle::degeneracy(g, n <= 6);
    const auto status = degeneracy_status(g);
    out.degeneracy_oracle_ok = status.tag == oracle::degeneracy_tag(*facts) &&
                               (!status.certificate || is_valid_certificate(g, *status.certificate));
    if (n <= 6) out.closure_minimality_ok = closure_is_minimal(g, *facts);
  }
  if (n < 4) {
    out.skipped_too_small = true;
    return out;
  }
  if (find_monochromatic_triangle(g)) {
    out.skipped_mono_triangle = true;
    return out;
  }

  TrichotomyResult r;
  try {
    r = classify(g);
  } catch (const Error& e) {
    out.internal_error = e.what();
    return out;
  }
  out.tag = r.tag;
  out.certificate_ok = validate_result(g, r);
  if (out.certificate_ok) {
    const auto sc = side_conditions(g, r);
    out.side_conditions_ok = sc.exception_cases_ok && sc.corollary_ok;
    out.corollary_instance = sc.corollary_instance;
  }
  const bool double_pentagon = is_double_pentagon_k5(g).has_value();
  out.double_pentagon_ok = (r.tag == TrichotomyTag::ExceptionK5) == double_pentagon;

  if (level == OracleLevel::Off) return out;

  try {
    const auto path = pc_hamilton_path(g);
    out.hamilton_path_ok = static_cast<int>(path.size()) == n && is_pc_path(g, path);
  } catch (const Error&) {
    out.hamilton_path_ok = false;
  }

  const bool case_a = full ? oracle::pc_pancyclic_from_four(g) : (r.tag == TrichotomyTag::Pancyclic && out.certificate_ok);
  const bool case_b = full ? facts->proper_exists : degeneracy_status(g).tag == DegeneracyTag::ProperDegenerateSet;
  const bool case_c = double_pentagon;
  out.exclusivity_ok = static_cast<int>(case_a) + static_cast<int>(case_b) + static_cast<int>(case_c) == 1;
  if (full) out.pancyclic_oracle_ok = (r.tag == TrichotomyTag::Pancyclic) == case_a;
  return out;
}

bool SweepReport::clean() const {
  return generation_failures == 0 && internal_errors == 0 && certificate_failures == 0 && condition_failures == 0 &&
         double_pentagon_failures == 0 && hamilton_path_failures == 0 && exclusivity_violations == 0 &&
         oracle_mismatches == 0 && degeneracy_mismatches == 0 && closure_minimality_failures == 0;
}

namespace {

struct Slot {
  std::uint64_t seed = 0;
  std::string generation_error;
  InstanceOutcome outcome;
  std::optional<Json> instance;  // kept only when flagged
  std::string key;
};

ColoredCompleteGraph generate(const SweepConfig& c, std::uint64_t seed) {
  switch (c.family) {
    case Family::DoublePentagon: return example_k5_double_pentagon();
    case Family::DirectedExample: return example_directed(c.n);
    case Family::RandomNoMono: return random_no_mono_triangle(c.n, c.k > 0 ? c.k : 3 + static_cast<int>(seed % 3), seed);
    case Family::RandomDegenerate: return random_degenerate(c.n, random_fibers(c.n, c.k, seed), derive_seed(seed, 0)).graph;
    case Family::Gallai: return gallai_coloring(c.n, seed).graph;
    case Family::Exhaustive: return sample_coloring(c.n, seed);
  }
  throw Error(ErrorKind::BadFormat, "unknown family");
}

}  // namespace

SweepReport run_sweep(const SweepConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  SweepReport report;
  report.config = config;

  std::vector<ColoredCompleteGraph> materialized;
  std::uint64_t total = config.count;
  const bool enumerate = config.family == Family::Exhaustive && config.n <= 5;
  if (enumerate) {
    ColoringStream stream(config.n);
    while (auto g = stream.next()) materialized.push_back(std::move(*g));
    total = materialized.size();
  } else if (config.family == Family::DoublePentagon || config.family == Family::DirectedExample) {
    total = 1;
  }

  std::vector<Slot> slots(total);
  std::atomic<std::uint64_t> next{0};
  auto work = [&]() {
    for (std::uint64_t i = next++; i < total; i = next++) {
      Slot& s = slots[i];
      s.seed = enumerate ? 0 : derive_seed(config.seed, i);
      std::optional<ColoredCompleteGraph> g;
      try {
        g = enumerate ? materialized[i] : generate(config, s.seed);
      } catch (const Error& e) {
        s.generation_error = e.what();
        continue;
      }
      s.outcome = check_instance(*g, config.oracle);
      if (s.outcome.failed()) {
        s.instance = instance_to_json(*g);
        s.key = canonical_key_hex(*g);
      }
    }
  };
  const int workers = std::max(1, config.workers);
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  for (std::uint64_t i = 0; i < total; ++i) {
    const Slot& s = slots[i];
    ++report.instances;
    if (!s.generation_error.empty()) {
      ++report.generation_failures;
      report.flagged.push_back({i, s.seed, "", "generation failed: " + s.generation_error, Json()});
      continue;
    }
    const auto& o = s.outcome;
    report.skipped_mono_triangle += o.skipped_mono_triangle;
    report.skipped_too_small += o.skipped_too_small;
    if (o.tag) {
      switch (*o.tag) {
        case TrichotomyTag::Pancyclic: ++report.tag_a; break;
        case TrichotomyTag::ProperDegenerate: ++report.tag_b; break;
        case TrichotomyTag::ExceptionK5: ++report.tag_c; break;
      }
    }
    report.corollary_instances += o.corollary_instance;
    report.internal_errors += !o.internal_error.empty();
    report.certificate_failures += !o.certificate_ok;
    report.condition_failures += !o.side_conditions_ok;
    report.double_pentagon_failures += !o.double_pentagon_ok;
    report.hamilton_path_failures += !o.hamilton_path_ok;
    report.exclusivity_violations += !o.exclusivity_ok;
    report.oracle_mismatches += !o.pancyclic_oracle_ok;
    report.degeneracy_mismatches += !o.degeneracy_oracle_ok;
    report.closure_minimality_failures += !o.closure_minimality_ok;
    if (o.failed()) report.flagged.push_back({i, s.seed, s.key, o.first_failure(), *s.instance});
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

Json report_to_json(const SweepReport& r) {
  Json flagged = Json::array();
  for (const auto& f : r.flagged) {
    Json item{{"index", f.index}, {"seed", f.seed}, {"reason", f.reason}};
    if (!f.key.empty()) item["key"] = f.key;
    flagged.push_back(item);
  }
  const auto& c = r.config;
  return Json{
      {"config",
       {{"family", family_name(c.family)}, {"n", c.n}, {"k", c.k}, {"seed", c.seed}, {"count", c.count},
        {"oracle", oracle_level_name(c.oracle)}}},
      {"instances", r.instances},
      {"skipped", {{"mono_triangle", r.skipped_mono_triangle}, {"too_small", r.skipped_too_small}}},
      {"tags", {{"a", r.tag_a}, {"b", r.tag_b}, {"c", r.tag_c}}},
      {"corollary_instances", r.corollary_instances},
      {"failures",
       {{"generation", r.generation_failures},
        {"internal_error", r.internal_errors},
        {"certificate", r.certificate_failures},
        {"side_condition", r.condition_failures},
        {"double_pentagon", r.double_pentagon_failures},
        {"hamilton_path", r.hamilton_path_failures},
        {"exclusivity", r.exclusivity_violations},
        {"oracle_mismatch", r.oracle_mismatches},
        {"degeneracy_mismatch", r.degeneracy_mismatches},
        {"closure_minimality", r.closure_minimality_failures}}},
      {"flagged", flagged},
  };
}

}  // namespace pcc
