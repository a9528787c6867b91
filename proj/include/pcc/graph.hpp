#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pcc/error.hpp"

namespace pcc {

using Vertex = int;
// Dense color id in [0, palette_size()). The user-facing label of a color is
// available through ColoredCompleteGraph::label().
using Color = int;

struct EdgeSpec {
  Vertex u;
  Vertex v;
  int color;  // arbitrary user label
};

// Complete graph K_n with one color on every edge. Immutable after build().
class ColoredCompleteGraph {
public:
  // Validates that every unordered pair appears exactly once. Labels are
  // remapped to dense ids in increasing label order.
  static ColoredCompleteGraph build(int n, std::span<const EdgeSpec> edges);

  int order() const noexcept { return n_; }
  int palette_size() const noexcept { return static_cast<int>(labels_.size()); }

  Color color(Vertex u, Vertex v) const noexcept { return matrix_[static_cast<std::size_t>(u) * n_ + v]; }
  int label(Color c) const { return labels_.at(static_cast<std::size_t>(c)); }
  const std::vector<int>& labels() const noexcept { return labels_; }

  // Edges in lexicographic pair order with user labels.
  std::vector<EdgeSpec> edges() const;

  // 64-bit FNV-1a over order and label matrix. Not an isomorphism invariant.
  std::uint64_t digest() const noexcept;

  friend bool operator==(const ColoredCompleteGraph&, const ColoredCompleteGraph&) = default;

private:
  ColoredCompleteGraph() = default;

  int n_ = 0;
  std::vector<Color> matrix_;   // n*n, diagonal -1
  std::vector<int> labels_;     // dense id -> label
};

struct ColorStats {
  std::vector<int> color_degree;
  int min_color_degree = 0;
  int max_mono_degree = 0;
};

ColorStats stats(const ColoredCompleteGraph& g);

// Sorted dense color ids on edges between disjoint vertex sets a and b.
std::vector<Color> colors_between(const ColoredCompleteGraph& g, std::span<const Vertex> a,
                                  std::span<const Vertex> b);

// Equal keys iff the graphs agree up to vertex permutation and color renaming.
std::string canonical_key(const ColoredCompleteGraph& g);

// Lowercase hex of a canonical key, suitable for file names.
std::string canonical_key_hex(const ColoredCompleteGraph& g);

// Permutes vertices (new vertex perm[v] takes the role of v) and relabels
// colors through `relabel` (indexed by dense id). Used by tests and generators.
ColoredCompleteGraph transform(const ColoredCompleteGraph& g, std::span<const Vertex> perm,
                               std::span<const int> relabel);

}  // namespace pcc
