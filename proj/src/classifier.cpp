#include "pcc/classifier.hpp"

#include <algorithm>

#include "pcc/digraph.hpp"

namespace pcc {

ColoredCompleteGraph double_pentagon_k5() {
  std::vector<EdgeSpec> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5, 1});
    edges.push_back({i, (i + 2) % 5, 2});
  }
  return ColoredCompleteGraph::build(5, edges);
}

std::optional<std::vector<Vertex>> is_double_pentagon_k5(const ColoredCompleteGraph& g) {
  if (g.order() != 5 || g.palette_size() != 2) return std::nullopt;
  // Walk the class of color 0 from vertex 0; it must be a single 5-cycle.
  std::vector<Vertex> walk{0};
  Vertex prev = -1, cur = 0;
  while (true) {
    std::vector<Vertex> nbrs;
    for (Vertex w = 0; w < 5; ++w) {
      if (w != cur && g.color(cur, w) == 0) nbrs.push_back(w);
    }
    if (nbrs.size() != 2) return std::nullopt;
    const Vertex next = nbrs[0] != prev ? nbrs[0] : nbrs[1];
    if (next == 0) break;
    if (std::find(walk.begin(), walk.end(), next) != walk.end()) return std::nullopt;
    walk.push_back(next);
    prev = cur;
    cur = next;
  }
  if (walk.size() != 5) return std::nullopt;
  std::vector<Vertex> phi(5);
  for (std::size_t i = 0; i < 5; ++i) phi[static_cast<std::size_t>(walk[i])] = static_cast<Vertex>(i);
  return phi;
}

char tag_letter(TrichotomyTag tag) noexcept {
  switch (tag) {
    case TrichotomyTag::Pancyclic: return 'a';
    case TrichotomyTag::ProperDegenerate: return 'b';
    case TrichotomyTag::ExceptionK5: return 'c';
  }
  return '?';
}

namespace {

void pancyclic_from_reduction(const ColoredCompleteGraph& g, const DegeneracyCertificate& f, TrichotomyResult& r) {
  const auto d = reduce_degenerate(g, f);
  if (!is_strongly_connected(d)) {
    throw Error(ErrorKind::InternalError, "reduction of a graph without proper degenerate sets is not strongly connected");
  }
  if (!d.out_neighborhoods_disjoint()) {
    throw Error(ErrorKind::InternalError, "reduction has a 2-part with a common out-neighbor");
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    for (auto& [len, cycle] : mpt_cycles_through(d, v)) {
      r.cycles.emplace(std::pair{v, len}, PcCycle(cycle.vertices));
    }
  }
  r.route = TrichotomyResult::Route::DegenerateReduction;
}

void pancyclic_by_growth(const ColoredCompleteGraph& g, TrichotomyResult& r) {
  const int n = g.order();
  for (Vertex v = 0; v < n; ++v) {
    PcCycle cycle = find_pc_quadrangle(g, v);
    r.cycles.emplace(std::pair{v, 4}, cycle);
    for (int len = 4; len < n; ++len) {
      std::optional<PcCycle> next;
      for (Vertex w = 0; w < n && !next; ++w) {
        if (cycle.contains(w)) continue;
        auto attachment = classify_attachment(g, cycle, w);
        if (auto* ext = std::get_if<Extendable>(&attachment)) next = ext->cycle;
      }
      if (!next) {
        next = find_pc_cycle(g, v, len + 1);
        ++r.oracle_extensions;
      }
      if (!next) {
        throw Error(ErrorKind::InternalError, "no PC cycle of length " + std::to_string(len + 1) + " through vertex " +
                                                  std::to_string(v) + " in a non-exceptional graph");
      }
      cycle = *next;
      r.cycles.emplace(std::pair{v, len + 1}, cycle);
    }
  }
  r.route = TrichotomyResult::Route::NonDegenerateGrowth;
}

}  // namespace

TrichotomyResult classify(const ColoredCompleteGraph& g) {
  if (g.order() < 4) throw Error(ErrorKind::TooSmall, "classification needs n >= 4");
  if (auto t = find_monochromatic_triangle(g)) {
    throw Error(ErrorKind::MonochromaticTrianglePresent,
                "triangle " + std::to_string((*t)[0]) + "," + std::to_string((*t)[1]) + "," + std::to_string((*t)[2]));
  }
  TrichotomyResult r;
  r.instance_digest = g.digest();
  auto status = degeneracy_status(g);
  switch (status.tag) {
    case DegeneracyTag::ProperDegenerateSet:
      r.tag = TrichotomyTag::ProperDegenerate;
      r.degenerate_set = std::move(status.certificate);
      return r;
    case DegeneracyTag::DegenerateFullOnly:
      r.tag = TrichotomyTag::Pancyclic;
      pancyclic_from_reduction(g, *status.certificate, r);
      return r;
    case DegeneracyTag::NonDegenerate:
      if (auto phi = is_double_pentagon_k5(g)) {
        r.tag = TrichotomyTag::ExceptionK5;
        r.bijection = std::move(phi);
        return r;
      }
      r.tag = TrichotomyTag::Pancyclic;
      pancyclic_by_growth(g, r);
      return r;
  }
  return r;
}

bool validate_result(const ColoredCompleteGraph& g, const TrichotomyResult& r) {
  if (r.instance_digest != g.digest()) return false;
  const int n = g.order();
  switch (r.tag) {
    case TrichotomyTag::Pancyclic: {
      if (static_cast<int>(r.cycles.size()) != n * (n - 3)) return false;
      for (Vertex v = 0; v < n; ++v) {
        for (int len = 4; len <= n; ++len) {
          auto it = r.cycles.find({v, len});
          if (it == r.cycles.end()) return false;
          const auto& c = it->second;
          if (static_cast<int>(c.length()) != len || !c.contains(v) || !is_pc_cycle(g, c.vertices())) return false;
        }
      }
      return true;
    }
    case TrichotomyTag::ProperDegenerate:
      return r.degenerate_set && static_cast<int>(r.degenerate_set->set.size()) < n &&
             is_valid_certificate(g, *r.degenerate_set);
    case TrichotomyTag::ExceptionK5: {
      if (!r.bijection || n != 5 || g.palette_size() != 2) return false;
      auto phi = *r.bijection;
      auto sorted = phi;
      std::sort(sorted.begin(), sorted.end());
      for (int i = 0; i < 5; ++i) {
        if (sorted[static_cast<std::size_t>(i)] != i) return false;
      }
      const auto canon = double_pentagon_k5();
      std::vector<Color> to_canon(2, -1);
      for (Vertex u = 0; u < 5; ++u) {
        for (Vertex v = u + 1; v < 5; ++v) {
          const Color c = g.color(u, v);
          const Color d = canon.color(phi[static_cast<std::size_t>(u)], phi[static_cast<std::size_t>(v)]);
          if (to_canon[static_cast<std::size_t>(c)] < 0) to_canon[static_cast<std::size_t>(c)] = d;
          if (to_canon[static_cast<std::size_t>(c)] != d) return false;
        }
      }
      return to_canon[0] != to_canon[1];
    }
  }
  return false;
}

SideConditionReport side_conditions(const ColoredCompleteGraph& g, const TrichotomyResult& r) {
  if (!validate_result(g, r)) throw Error(ErrorKind::ResultMismatch, "result does not belong to this instance");
  const auto s = stats(g);
  SideConditionReport rep;
  rep.n = g.order();
  rep.min_color_degree = s.min_color_degree;
  rep.max_mono_degree = s.max_mono_degree;
  rep.fujita_holds = 2 * s.min_color_degree >= rep.n + 1;
  rep.bollobas_erdos_holds = s.max_mono_degree < rep.n / 2;
  const bool exceptional = r.tag != TrichotomyTag::Pancyclic;
  rep.exception_cases_ok = !exceptional || (!rep.fujita_holds && !rep.bollobas_erdos_holds);
  rep.corollary_instance = !exceptional && rep.bollobas_erdos_holds;
  rep.corollary_ok = !rep.bollobas_erdos_holds || !exceptional;
  return rep;
}

}  // namespace pcc
