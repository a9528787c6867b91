#include "pcc/structure.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "pcc/scc.hpp"

namespace pcc {

namespace detail {

std::vector<int> strongly_connected_components(const std::vector<std::vector<int>>& adj, int* count) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> index(adj.size(), -1), low(adj.size(), 0), comp(adj.size(), -1);
  std::vector<char> on_stack(adj.size(), 0);
  std::vector<int> stack;
  std::vector<std::pair<int, std::size_t>> call;  // (vertex, next edge)
  int next_index = 0;
  int next_comp = 0;
  for (int root = 0; root < n; ++root) {
    if (index[root] >= 0) continue;
    call.push_back({root, 0});
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      auto& [v, e] = call.back();
      if (e < adj[v].size()) {
        int w = adj[v][e++];
        if (index[w] < 0) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp[w] = next_comp;
        } while (w != v);
        ++next_comp;
      }
      int finished = v;
      call.pop_back();
      if (!call.empty()) {
        int parent = call.back().first;
        low[parent] = std::min(low[parent], low[finished]);
      }
    }
  }
  if (count) *count = next_comp;
  return comp;
}

}  // namespace detail

bool is_valid_certificate(const ColoredCompleteGraph& g, const DegeneracyCertificate& cert) {
  const int n = g.order();
  if (cert.set.empty() || cert.set.size() != cert.assign.size()) return false;
  std::vector<int> f(static_cast<std::size_t>(n), -1);
  for (auto [v, c] : cert.assign) {
    if (v < 0 || v >= n || c < 0 || c >= g.palette_size()) return false;
    f[static_cast<std::size_t>(v)] = c;
  }
  for (Vertex v : cert.set) {
    if (v < 0 || v >= n || f[static_cast<std::size_t>(v)] < 0) return false;
  }
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const int fu = f[static_cast<std::size_t>(u)], fv = f[static_cast<std::size_t>(v)];
      const Color c = g.color(u, v);
      if (fu >= 0 && fv >= 0) {
        if (c != fu && c != fv) return false;
      } else if (fu >= 0) {
        if (c != fu) return false;
      } else if (fv >= 0) {
        if (c != fv) return false;
      }
    }
  }
  return true;
}

std::optional<Triangle> find_monochromatic_triangle(const ColoredCompleteGraph& g) {
  const int n = g.order();
  if (n < 3) throw Error(ErrorKind::TooSmall, "triangle search needs n >= 3");
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const Color c = g.color(u, v);
      for (Vertex w = v + 1; w < n; ++w) {
        if (g.color(u, w) == c && g.color(v, w) == c) return Triangle{u, v, w};
      }
    }
  }
  return std::nullopt;
}

std::optional<Triangle> find_pc_triangle(const ColoredCompleteGraph& g) {
  const int n = g.order();
  if (n < 3) throw Error(ErrorKind::TooSmall, "triangle search needs n >= 3");
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const Color a = g.color(u, v);
      for (Vertex w = v + 1; w < n; ++w) {
        const Color b = g.color(u, w), c = g.color(v, w);
        if (a != b && b != c && a != c) return Triangle{u, v, w};
      }
    }
  }
  return std::nullopt;
}

std::optional<DegeneracyCertificate> closure_from_seed(const ColoredCompleteGraph& g, Vertex u, Color c) {
  const int n = g.order();
  if (n < 2) throw Error(ErrorKind::TooSmall, "closure needs n >= 2");
  if (u < 0 || u >= n) throw Error(ErrorKind::UnknownVertex, "vertex " + std::to_string(u));
  std::vector<int> f(static_cast<std::size_t>(n), -1);
  std::deque<Vertex> queue{u};
  f[static_cast<std::size_t>(u)] = c;
  while (!queue.empty()) {
    const Vertex w = queue.front();
    queue.pop_front();
    const int fw = f[static_cast<std::size_t>(w)];
    for (Vertex x = 0; x < n; ++x) {
      if (x == w) continue;
      const Color cx = g.color(w, x);
      if (cx == fw) continue;
      int& fx = f[static_cast<std::size_t>(x)];
      if (fx < 0) {
        fx = cx;
        queue.push_back(x);
      } else if (fx != cx) {
        return std::nullopt;
      }
    }
  }
  DegeneracyCertificate cert;
  for (Vertex v = 0; v < n; ++v) {
    if (f[static_cast<std::size_t>(v)] >= 0) {
      cert.set.push_back(v);
      cert.assign.emplace(v, f[static_cast<std::size_t>(v)]);
    }
  }
  return cert;
}

std::optional<DegeneracyCertificate> full_compatible_function(const ColoredCompleteGraph& g) {
  const int n = g.order();
  // Variable x[v,c] for each color c incident to v: "f(v) = c".
  std::vector<std::vector<int>> var_of(static_cast<std::size_t>(n),
                                       std::vector<int>(static_cast<std::size_t>(g.palette_size()), -1));
  std::vector<std::pair<Vertex, Color>> meaning;
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w = 0; w < n; ++w) {
      if (w == v) continue;
      int& x = var_of[static_cast<std::size_t>(v)][static_cast<std::size_t>(g.color(v, w))];
      if (x < 0) {
        x = static_cast<int>(meaning.size());
        meaning.push_back({v, g.color(v, w)});
      }
    }
  }
  const int vars = static_cast<int>(meaning.size());
  // Literal 2x is x, 2x+1 is not x.
  std::vector<std::vector<int>> implies(static_cast<std::size_t>(2 * vars));
  auto clause = [&implies](int a, int b) {  // a or b
    implies[static_cast<std::size_t>(a ^ 1)].push_back(b);
    implies[static_cast<std::size_t>(b ^ 1)].push_back(a);
  };
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const auto c = static_cast<std::size_t>(g.color(u, v));
      clause(2 * var_of[static_cast<std::size_t>(u)][c], 2 * var_of[static_cast<std::size_t>(v)][c]);
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    std::vector<int> own;
    for (int x : var_of[static_cast<std::size_t>(v)]) {
      if (x >= 0) own.push_back(x);
    }
    for (std::size_t i = 0; i < own.size(); ++i) {
      for (std::size_t j = i + 1; j < own.size(); ++j) clause(2 * own[i] + 1, 2 * own[j] + 1);
    }
  }
  const auto comp = detail::strongly_connected_components(implies);
  std::vector<int> f(static_cast<std::size_t>(n), -1);
  for (int x = 0; x < vars; ++x) {
    const int pos = comp[static_cast<std::size_t>(2 * x)], neg = comp[static_cast<std::size_t>(2 * x + 1)];
    if (pos == neg) return std::nullopt;
    if (pos < neg) f[static_cast<std::size_t>(meaning[static_cast<std::size_t>(x)].first)] = meaning[static_cast<std::size_t>(x)].second;
  }
  DegeneracyCertificate cert;
  for (Vertex v = 0; v < n; ++v) {
    int fv = f[static_cast<std::size_t>(v)];
    if (fv < 0) {
      // Every edge at v is already covered by its other endpoint.
      fv = g.color(v, v == 0 ? 1 : 0);
    }
    cert.set.push_back(v);
    cert.assign.emplace(v, fv);
  }
  return cert;
}

DegeneracyStatus degeneracy_status(const ColoredCompleteGraph& g) {
  const int n = g.order();
  if (n < 2) throw Error(ErrorKind::TooSmall, "degeneracy needs n >= 2");
  for (Vertex u = 0; u < n; ++u) {
    std::vector<char> incident(static_cast<std::size_t>(g.palette_size()), 0);
    for (Vertex w = 0; w < n; ++w) {
      if (w != u) incident[static_cast<std::size_t>(g.color(u, w))] = 1;
    }
    for (Color c = 0; c < g.palette_size(); ++c) {
      if (!incident[static_cast<std::size_t>(c)]) continue;
      auto cert = closure_from_seed(g, u, c);
      if (cert && static_cast<int>(cert->set.size()) < n) {
        return {DegeneracyTag::ProperDegenerateSet, std::move(cert)};
      }
    }
  }
  if (auto full = full_compatible_function(g)) return {DegeneracyTag::DegenerateFullOnly, std::move(full)};
  return {DegeneracyTag::NonDegenerate, std::nullopt};
}

bool verify_gallai_partition(const ColoredCompleteGraph& g, std::span<const std::vector<Vertex>> parts) {
  const int n = g.order();
  if (parts.size() < 2) throw Error(ErrorKind::NotAPartition, "need at least two parts");
  std::vector<int> part_of(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].empty()) throw Error(ErrorKind::NotAPartition, "empty part " + std::to_string(i));
    for (Vertex v : parts[i]) {
      if (v < 0 || v >= n) throw Error(ErrorKind::NotAPartition, "vertex " + std::to_string(v) + " out of range");
      if (part_of[static_cast<std::size_t>(v)] >= 0) throw Error(ErrorKind::NotAPartition, "vertex " + std::to_string(v) + " repeated");
      part_of[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (part_of[static_cast<std::size_t>(v)] < 0) throw Error(ErrorKind::NotAPartition, "vertex " + std::to_string(v) + " uncovered");
  }
  std::set<Color> all;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      auto between = colors_between(g, parts[i], parts[j]);
      if (between.size() != 1) return false;
      all.insert(between.front());
    }
  }
  return all.size() <= 2;
}

}  // namespace pcc
