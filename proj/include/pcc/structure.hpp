#pragma once

#include <array>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "pcc/graph.hpp"

namespace pcc {

using Triangle = std::array<Vertex, 3>;

// A nonempty vertex set S with an assignment f: S -> color such that edges
// inside S carry the color of one endpoint and every edge leaving S carries
// the color of its endpoint in S.
struct DegeneracyCertificate {
  std::vector<Vertex> set;        // sorted
  std::map<Vertex, Color> assign; // keys equal `set`

  friend bool operator==(const DegeneracyCertificate&, const DegeneracyCertificate&) = default;
};

bool is_valid_certificate(const ColoredCompleteGraph& g, const DegeneracyCertificate& cert);

enum class DegeneracyTag { NonDegenerate, ProperDegenerateSet, DegenerateFullOnly };

struct DegeneracyStatus {
  DegeneracyTag tag = DegeneracyTag::NonDegenerate;
  std::optional<DegeneracyCertificate> certificate;
};

// Lexicographically first triple u<v<w with a single color on its three edges.
std::optional<Triangle> find_monochromatic_triangle(const ColoredCompleteGraph& g);

// Lexicographically first triple u<v<w with three distinct edge colors.
std::optional<Triangle> find_pc_triangle(const ColoredCompleteGraph& g);

// Smallest degenerate set containing u with f(u) = c, obtained by forcing:
// if w is in S and color(w,x) != f(w) then x joins S with f(x) = color(w,x).
// Empty when the forcing runs into a conflicting assignment.
std::optional<DegeneracyCertificate> closure_from_seed(const ColoredCompleteGraph& g, Vertex u, Color c);

// Compatible f on all of V via 2-SAT, or nothing. Does not look for proper sets.
std::optional<DegeneracyCertificate> full_compatible_function(const ColoredCompleteGraph& g);

DegeneracyStatus degeneracy_status(const ColoredCompleteGraph& g);

bool verify_gallai_partition(const ColoredCompleteGraph& g, std::span<const std::vector<Vertex>> parts);

}  // namespace pcc
