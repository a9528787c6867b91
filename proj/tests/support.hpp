#pragma once

// Test-only fixtures and independent reference computations.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "pcc/digraph.hpp"
#include "pcc/graph.hpp"

namespace pcc::test {

inline ColoredCompleteGraph from_matrix(int n, const std::vector<std::vector<int>>& labels) {
  std::vector<EdgeSpec> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v, labels[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]});
  }
  return ColoredCompleteGraph::build(n, edges);
}

// Double pentagon written out edge by edge: pentagon v1..v5 in color 1 and the
// pentagram in color 2 (vertex v_i is i - 1).
inline ColoredCompleteGraph double_pentagon() {
  const std::vector<EdgeSpec> edges{
      {0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {4, 0, 1},
      {0, 2, 2}, {2, 4, 2}, {4, 1, 2}, {1, 3, 2}, {3, 0, 2},
  };
  return ColoredCompleteGraph::build(5, edges);
}

inline ColoredCompleteGraph rainbow(int n) {
  std::vector<EdgeSpec> edges;
  int c = 1;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v, c++});
  }
  return ColoredCompleteGraph::build(n, edges);
}

inline ColoredCompleteGraph monochromatic(int n, int label = 1) {
  std::vector<EdgeSpec> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v, label});
  }
  return ColoredCompleteGraph::build(n, edges);
}

// Bell numbers through the Bell triangle.
inline std::uint64_t bell(int m) {
  std::vector<std::uint64_t> row{1};
  for (int i = 0; i < m; ++i) {
    std::vector<std::uint64_t> next{row.back()};
    for (std::uint64_t x : row) next.push_back(next.back() + x);
    row = std::move(next);
  }
  return row.front();
}

inline std::vector<Vertex> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<Vertex> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

inline std::vector<std::pair<Vertex, Vertex>> random_orientation(const std::vector<int>& part_of, std::mt19937_64& rng) {
  std::vector<std::pair<Vertex, Vertex>> arcs;
  const int n = static_cast<int>(part_of.size());
  std::bernoulli_distribution coin(0.5);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (part_of[static_cast<std::size_t>(u)] == part_of[static_cast<std::size_t>(v)]) continue;
      if (coin(rng)) arcs.push_back({u, v});
      else arcs.push_back({v, u});
    }
  }
  return arcs;
}

// Strongly connected tournament on n vertices by rejection sampling.
inline MultipartiteTournament random_strong_tournament(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<int> part_of(static_cast<std::size_t>(n));
  std::iota(part_of.begin(), part_of.end(), 0);
  while (true) {
    auto t = MultipartiteTournament::tournament(n, random_orientation(part_of, rng));
    if (is_strongly_connected(t)) return t;
  }
}

// Strongly connected multipartite tournament with parts of size <= 2 and
// disjoint out-neighborhoods inside each 2-part, by rejection sampling.
inline MultipartiteTournament random_valid_mpt(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  while (true) {
    const int pairs = std::uniform_int_distribution<int>(0, n / 2)(rng);
    auto order = random_permutation(n, rng);
    std::vector<std::vector<Vertex>> parts;
    std::vector<int> part_of(static_cast<std::size_t>(n));
    std::size_t i = 0;
    for (int p = 0; p < pairs; ++p, i += 2) parts.push_back({order[i], order[i + 1]});
    for (; i < order.size(); ++i) parts.push_back({order[i]});
    for (std::size_t p = 0; p < parts.size(); ++p) {
      for (Vertex v : parts[p]) part_of[static_cast<std::size_t>(v)] = static_cast<int>(p);
    }
    for (int attempt = 0; attempt < 200; ++attempt) {
      MultipartiteTournament t(parts, random_orientation(part_of, rng));
      if (t.out_neighborhoods_disjoint() && is_strongly_connected(t)) return t;
    }
  }
}

}  // namespace pcc::test
