#pragma once

#include <map>
#include <span>
#include <vector>

#include "pcc/graph.hpp"
#include "pcc/pc_cycles.hpp"
#include "pcc/structure.hpp"

namespace pcc {

// Orientation of a complete multipartite graph whose parts have size 1 or 2.
// A tournament is the case where every part is a singleton.
class MultipartiteTournament {
public:
  // Checks that parts partition [0, n) into sets of size 1 or 2 and that every
  // cross-part pair carries exactly one arc and no arc joins a part.
  MultipartiteTournament(std::vector<std::vector<Vertex>> parts, std::span<const std::pair<Vertex, Vertex>> arcs);

  static MultipartiteTournament tournament(int n, std::span<const std::pair<Vertex, Vertex>> arcs);

  int order() const noexcept { return n_; }
  const std::vector<std::vector<Vertex>>& parts() const noexcept { return parts_; }
  int part_of(Vertex v) const { return part_of_.at(static_cast<std::size_t>(v)); }
  bool is_tournament() const noexcept { return static_cast<int>(parts_.size()) == n_; }

  bool arc(Vertex u, Vertex v) const noexcept { return adj_[static_cast<std::size_t>(u) * n_ + v] != 0; }
  bool adjacent(Vertex u, Vertex v) const noexcept { return arc(u, v) || arc(v, u); }
  std::vector<Vertex> out_neighbors(Vertex v) const;
  std::vector<Vertex> in_neighbors(Vertex v) const;
  std::vector<std::pair<Vertex, Vertex>> arcs() const;

  // N+(x) and N+(y) are disjoint for every 2-part {x, y}.
  bool out_neighborhoods_disjoint() const;

  // Sub-digraph induced on `keep`; vertex i of the result is keep[i].
  MultipartiteTournament induced(std::span<const Vertex> keep) const;

private:
  int n_ = 0;
  std::vector<std::vector<Vertex>> parts_;
  std::vector<int> part_of_;
  std::vector<char> adj_;
};

struct DirectedCycle {
  std::vector<Vertex> vertices;

  std::size_t length() const noexcept { return vertices.size(); }
  bool contains(Vertex v) const;
};

bool is_directed_cycle(const MultipartiteTournament& t, const DirectedCycle& c);

bool is_strongly_connected(const MultipartiteTournament& t);

// How each cycle in a cycles_through / mpt_cycles_through result was obtained.
struct CycleStats {
  int quadrangle_rule = 0;      // constructive quadrangle case analysis
  int quadrangle_fallback = 0;  // direct search for a quadrangle
  int insertions = 0;           // u_i -> w -> u_{i+1}
  int replacements = 0;         // u_{i-1} -> x -> z -> u_{i+1} in place of u_i
  int fallbacks = 0;            // exhaustive search for the next length
};

// For a strongly connected tournament of order n >= 3: a directed cycle of
// every length in [3, n] through v.
std::map<int, DirectedCycle> cycles_through(const MultipartiteTournament& t, Vertex v, CycleStats* stats = nullptr);

// For a strongly connected multipartite tournament with parts of size <= 2,
// disjoint out-neighborhoods within each 2-part and order >= 4: a directed
// cycle of every length in [4, order] through v.
std::map<int, DirectedCycle> mpt_cycles_through(const MultipartiteTournament& t, Vertex v, CycleStats* stats = nullptr);

// Orients every edge uv with color(u,v) = f(u) != f(v) from u to v. Parts are
// the nonempty fibers of f in increasing color order.
MultipartiteTournament reduce_degenerate(const ColoredCompleteGraph& g, const DegeneracyCertificate& f);

// Reads a directed cycle of the reduction as a PC cycle of g.
PcCycle lift_cycle(const ColoredCompleteGraph& g, const DegeneracyCertificate& f, const DirectedCycle& c);

}  // namespace pcc
