#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "pcc/graph.hpp"
#include "pcc/pc_cycles.hpp"
#include "pcc/structure.hpp"

namespace pcc {

// The 2-colored K5 whose color classes are the pentagons 0-1-2-3-4 (label 1)
// and 0-2-4-1-3 (label 2).
ColoredCompleteGraph double_pentagon_k5();

// Map phi with phi[v] = vertex of double_pentagon_k5() playing v's role, so
// that color classes of g go onto the two canonical pentagons.
std::optional<std::vector<Vertex>> is_double_pentagon_k5(const ColoredCompleteGraph& g);

enum class TrichotomyTag { Pancyclic, ProperDegenerate, ExceptionK5 };

char tag_letter(TrichotomyTag tag) noexcept;

struct TrichotomyResult {
  TrichotomyTag tag = TrichotomyTag::Pancyclic;
  // Pancyclic: a PC cycle for every (vertex, length) with length in [4, n].
  std::map<std::pair<Vertex, int>, PcCycle> cycles;
  std::optional<DegeneracyCertificate> degenerate_set;
  std::optional<std::vector<Vertex>> bijection;
  // Which construction produced the case (a) certificates.
  enum class Route { None, DegenerateReduction, NonDegenerateGrowth } route = Route::None;
  int oracle_extensions = 0;  // growth steps that needed a full search
  std::uint64_t instance_digest = 0;
};

// Decides which of the three outcomes holds for an edge-colored K_n (n >= 4)
// without monochromatic triangles and attaches a certificate for it.
TrichotomyResult classify(const ColoredCompleteGraph& g);

// Re-checks the attached certificate against g without trusting classify().
bool validate_result(const ColoredCompleteGraph& g, const TrichotomyResult& r);

struct SideConditionReport {
  int n = 0;
  int min_color_degree = 0;
  int max_mono_degree = 0;
  bool fujita_holds = false;         // 2 * min color degree >= n + 1
  bool bollobas_erdos_holds = false; // max mono degree < floor(n / 2)
  bool exception_cases_ok = true;    // tag in {b, c} implies neither holds
  bool corollary_instance = false;   // tag a and max mono degree < floor(n / 2)
  bool corollary_ok = true;          // max mono degree < floor(n / 2) implies tag a
};

SideConditionReport side_conditions(const ColoredCompleteGraph& g, const TrichotomyResult& r);

}  // namespace pcc
