#pragma once

#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "pcc/graph.hpp"

namespace pcc {

// Closed walk over distinct vertices read in the stored orientation.
class PcCycle {
public:
  PcCycle() = default;
  explicit PcCycle(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {}

  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  std::size_t length() const noexcept { return vertices_.size(); }
  bool contains(Vertex v) const;
  std::size_t position(Vertex v) const;

  Vertex successor(Vertex u) const;
  Vertex predecessor(Vertex u) const;

  // Vertices from u to w along the orientation (inclusive).
  std::vector<Vertex> segment(Vertex u, Vertex w) const;
  // Vertices from u to w against the orientation (inclusive).
  std::vector<Vertex> reverse_segment(Vertex u, Vertex w) const;

  // Smallest vertex first, then toward its smaller neighbor.
  PcCycle canonical() const;

  friend bool operator==(const PcCycle&, const PcCycle&) = default;
  friend auto operator<=>(const PcCycle& a, const PcCycle& b) { return a.vertices_ <=> b.vertices_; }

private:
  std::vector<Vertex> vertices_;
};

using PcPath = std::vector<Vertex>;

// Throw UnknownVertex / RepeatedVertex on malformed sequences.
bool is_pc_cycle(const ColoredCompleteGraph& g, std::span<const Vertex> seq);
bool is_pc_path(const ColoredCompleteGraph& g, std::span<const Vertex> seq);

// All PC cycles of the given length through v, canonical and sorted.
std::vector<PcCycle> enumerate_pc_cycles(const ColoredCompleteGraph& g, Vertex v, int length);

// First PC cycle of the given length through v that uses only vertices with
// allowed[x] != 0 (all vertices when `allowed` is empty).
std::optional<PcCycle> find_pc_cycle(const ColoredCompleteGraph& g, Vertex v, int length,
                                     std::span<const char> allowed = {});

PcPath pc_hamilton_path(const ColoredCompleteGraph& g);

struct Extendable { PcCycle cycle; };
struct SingleColor { Color color; };
struct AllPredecessor {};
struct AllSuccessor {};

using AttachmentClass = std::variant<Extendable, SingleColor, AllPredecessor, AllSuccessor>;

// Whether v can join the vertex set of cycle, and if not, which of the three
// blocking patterns holds for v against the cycle's orientation.
AttachmentClass classify_attachment(const ColoredCompleteGraph& g, const PcCycle& cycle, Vertex v);

// PC quadrangle through v in a non-degenerate graph without monochromatic
// triangles.
PcCycle find_pc_quadrangle(const ColoredCompleteGraph& g, Vertex v);

}  // namespace pcc
