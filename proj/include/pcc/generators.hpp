#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pcc/graph.hpp"
#include "pcc/structure.hpp"

namespace pcc {

enum class Family { DoublePentagon, DirectedExample, RandomNoMono, RandomDegenerate, Gallai, Exhaustive };

std::optional<Family> parse_family(const std::string& name);
std::string family_name(Family f);

struct GenSpec {
  Family family = Family::DoublePentagon;
  int n = 5;
  int k = 0;  // color budget (randomNoMono) or fiber count (randomDegenerate); 0 = choose
  std::uint64_t seed = 0;
};

// Fresh 64-bit seed for the i-th instance of a seeded stream.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept;

ColoredCompleteGraph example_k5_double_pentagon();

// Vertices 0, 1, 2 form the triangle colored 1, 2, 3; every edge from vertex
// i < 3 to the rest has color i + 1; the remaining edges get distinct fresh
// colors starting at 4.
ColoredCompleteGraph example_directed(int n);

// Random k-coloring repaired edge by edge until no monochromatic triangle is
// left. Throws BudgetExhausted after `budget` recolorings.
ColoredCompleteGraph random_no_mono_triangle(int n, int k, std::uint64_t seed, int budget = 20000);

struct DegenerateInstance {
  ColoredCompleteGraph graph;
  DegeneracyCertificate f;  // dense ids of g; f(v) = fiber of v
};

// Colors each edge by the fiber of its tail under a random orientation in
// which no two vertices of a fiber share an out-neighbor. With
// `strongly_connected`, orientations are redrawn until the reduction is
// strongly connected (BudgetExhausted after `budget` draws).
DegenerateInstance random_degenerate(int n, const std::vector<std::vector<Vertex>>& fibers, std::uint64_t seed,
                                     bool strongly_connected = false, int budget = 1000);

// Fibers of sizes <= 2 for n vertices drawn from the seed; `count` fibers when
// positive, else a random count in [ceil(n/2), n].
std::vector<std::vector<Vertex>> random_fibers(int n, int count, std::uint64_t seed);

struct GallaiInstance {
  ColoredCompleteGraph graph;
  std::vector<std::vector<Vertex>> partition;  // top-level parts
};

GallaiInstance gallai_coloring(int n, std::uint64_t seed);

// Streams every edge-coloring of K_n up to color renaming (restricted growth
// strings over the edges in lexicographic pair order), n in [2, 5].
class ColoringStream {
public:
  explicit ColoringStream(int n);

  std::optional<ColoredCompleteGraph> next();
  std::uint64_t produced() const noexcept { return produced_; }

private:
  int n_;
  std::vector<int> rgs_;
  std::vector<int> prefix_max_;
  bool started_ = false;
  bool done_ = false;
  std::uint64_t produced_ = 0;
  std::vector<std::pair<Vertex, Vertex>> pairs_;
};

// A random restricted growth string over the edges of K_n: each edge takes an
// existing color or opens a new one with equal probability. Sampling mode for
// orders beyond full enumeration.
ColoredCompleteGraph sample_coloring(int n, std::uint64_t seed);

}  // namespace pcc
