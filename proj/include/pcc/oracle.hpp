#pragma once

// Brute-force reference implementations. Nothing here calls into the
// structure, pc_cycles, digraph or classifier modules, so they can be used
// to check them.

#include <set>
#include <vector>

#include "pcc/digraph.hpp"
#include "pcc/graph.hpp"
#include "pcc/structure.hpp"

namespace pcc::oracle {

struct DegeneracyFacts {
  bool proper_exists = false;  // some degenerate S != V
  bool full_exists = false;    // S = V admits a compatible f
  std::vector<DegeneracyCertificate> all;  // every (S, f), when collected
};

// Every nonempty S with every f: S -> incident colors.
DegeneracyFacts degeneracy(const ColoredCompleteGraph& g, bool collect_all = false);

DegeneracyTag degeneracy_tag(const DegeneracyFacts& facts);

// All PC cycles of `length` through v, generated as vertex sequences without
// pruning and deduplicated under rotation and reflection.
std::set<std::vector<Vertex>> pc_cycles(const ColoredCompleteGraph& g, Vertex v, int length);

// True iff every vertex lies on a PC cycle of every length in [4, n].
bool pc_pancyclic_from_four(const ColoredCompleteGraph& g);

// Lengths of all directed cycles through v.
std::set<int> directed_cycle_lengths(const MultipartiteTournament& t, Vertex v);

}  // namespace pcc::oracle
