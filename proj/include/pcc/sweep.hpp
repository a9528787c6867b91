#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pcc/classifier.hpp"
#include "pcc/generators.hpp"
#include "pcc/json_io.hpp"

namespace pcc {

enum class OracleLevel { Off, Partial, Full };

std::optional<OracleLevel> parse_oracle_level(const std::string& s);
std::string oracle_level_name(OracleLevel level);

// Everything checked about one instance. A field named *_ok is true when the
// check passed or was not run at the requested oracle level.
struct InstanceOutcome {
  bool skipped_mono_triangle = false;
  bool skipped_too_small = false;
  std::optional<TrichotomyTag> tag;
  std::string internal_error;  // nonempty if classify or a constructor failed
  bool certificate_ok = true;
  bool side_conditions_ok = true;
  bool corollary_instance = false;
  bool double_pentagon_ok = true;  // tag c exactly on double pentagons
  bool hamilton_path_ok = true;
  bool exclusivity_ok = true;
  bool pancyclic_oracle_ok = true;
  bool degeneracy_oracle_ok = true;
  bool closure_minimality_ok = true;

  bool failed() const;
  std::string first_failure() const;
};

// Off: classify, certificate validation, side conditions, double-pentagon
// consistency. Partial: adds the PC Hamilton path and exclusivity of the three
// cases. Full: adds brute-force PC-cycle and degeneracy oracles (and closure
// minimality for n <= 6).
InstanceOutcome check_instance(const ColoredCompleteGraph& g, OracleLevel level);

struct SweepConfig {
  Family family = Family::Exhaustive;
  int n = 4;
  int k = 0;
  std::uint64_t seed = 0;
  std::uint64_t count = 1;  // ignored by the exhaustive family for n <= 5
  OracleLevel oracle = OracleLevel::Off;
  int workers = 1;
};

struct FlaggedInstance {
  std::uint64_t index = 0;
  std::uint64_t seed = 0;
  std::string key;  // canonical key, hex
  std::string reason;
  Json instance;
};

struct SweepReport {
  SweepConfig config;
  std::uint64_t instances = 0;
  std::uint64_t skipped_mono_triangle = 0;
  std::uint64_t skipped_too_small = 0;
  std::uint64_t tag_a = 0, tag_b = 0, tag_c = 0;
  std::uint64_t corollary_instances = 0;
  std::uint64_t generation_failures = 0;
  std::uint64_t internal_errors = 0;
  std::uint64_t certificate_failures = 0;
  std::uint64_t condition_failures = 0;
  std::uint64_t double_pentagon_failures = 0;
  std::uint64_t hamilton_path_failures = 0;
  std::uint64_t exclusivity_violations = 0;
  std::uint64_t oracle_mismatches = 0;
  std::uint64_t degeneracy_mismatches = 0;
  std::uint64_t closure_minimality_failures = 0;
  std::vector<FlaggedInstance> flagged;
  double seconds = 0.0;  // not part of the JSON report

  bool clean() const;
};

SweepReport run_sweep(const SweepConfig& config);

// Deterministic for a fixed config: excludes timing.
Json report_to_json(const SweepReport& report);

}  // namespace pcc
