#pragma once

#include <vector>

namespace pcc::detail {

// Tarjan's algorithm on an adjacency list. Returns the component id of each
// vertex; ids are assigned in reverse topological order of the condensation
// (a sink component gets id 0).
std::vector<int> strongly_connected_components(const std::vector<std::vector<int>>& adj, int* count = nullptr);

}  // namespace pcc::detail
