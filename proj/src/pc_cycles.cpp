#include "pcc/pc_cycles.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "pcc/structure.hpp"

namespace pcc {

bool PcCycle::contains(Vertex v) const {
  return std::find(vertices_.begin(), vertices_.end(), v) != vertices_.end();
}

std::size_t PcCycle::position(Vertex v) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end()) throw Error(ErrorKind::UnknownVertex, "vertex " + std::to_string(v) + " not on cycle");
  return static_cast<std::size_t>(it - vertices_.begin());
}

Vertex PcCycle::successor(Vertex u) const { return vertices_[(position(u) + 1) % vertices_.size()]; }

Vertex PcCycle::predecessor(Vertex u) const {
  return vertices_[(position(u) + vertices_.size() - 1) % vertices_.size()];
}

std::vector<Vertex> PcCycle::segment(Vertex u, Vertex w) const {
  std::vector<Vertex> out;
  std::size_t i = position(u);
  const std::size_t end = position(w);
  while (true) {
    out.push_back(vertices_[i]);
    if (i == end) break;
    i = (i + 1) % vertices_.size();
  }
  return out;
}

std::vector<Vertex> PcCycle::reverse_segment(Vertex u, Vertex w) const {
  std::vector<Vertex> out;
  std::size_t i = position(u);
  const std::size_t end = position(w);
  while (true) {
    out.push_back(vertices_[i]);
    if (i == end) break;
    i = (i + vertices_.size() - 1) % vertices_.size();
  }
  return out;
}

PcCycle PcCycle::canonical() const {
  if (vertices_.empty()) return *this;
  const Vertex first = *std::min_element(vertices_.begin(), vertices_.end());
  if (successor(first) <= predecessor(first)) return PcCycle(segment(first, predecessor(first)));
  return PcCycle(reverse_segment(first, successor(first)));
}

namespace {

void check_sequence(const ColoredCompleteGraph& g, std::span<const Vertex> seq) {
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : seq) {
    if (v < 0 || v >= g.order()) throw Error(ErrorKind::UnknownVertex, "vertex " + std::to_string(v));
    if (seen[static_cast<std::size_t>(v)]) throw Error(ErrorKind::RepeatedVertex, "vertex " + std::to_string(v));
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

// Depth-first PC path growth from v; `visit` is called on every closed PC
// cycle of the requested length and stops the search by returning true.
void search_pc_cycles(const ColoredCompleteGraph& g, Vertex v, int length, std::span<const char> allowed,
                      const std::function<bool(const std::vector<Vertex>&)>& visit) {
  const int n = g.order();
  std::vector<Vertex> path{v};
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  used[static_cast<std::size_t>(v)] = 1;
  std::function<bool()> dfs = [&]() -> bool {
    const Vertex last = path.back();
    const Color in = path.size() >= 2 ? g.color(path[path.size() - 2], last) : -1;
    if (static_cast<int>(path.size()) == length) {
      const Color close = g.color(last, v);
      if (close != in && close != g.color(v, path[1])) return visit(path);
      return false;
    }
    for (Vertex w = 0; w < n; ++w) {
      if (used[static_cast<std::size_t>(w)]) continue;
      if (!allowed.empty() && !allowed[static_cast<std::size_t>(w)]) continue;
      if (g.color(last, w) == in) continue;
      used[static_cast<std::size_t>(w)] = 1;
      path.push_back(w);
      const bool stop = dfs();
      path.pop_back();
      used[static_cast<std::size_t>(w)] = 0;
      if (stop) return true;
    }
    return false;
  };
  dfs();
}

}  // namespace

bool is_pc_cycle(const ColoredCompleteGraph& g, std::span<const Vertex> seq) {
  check_sequence(g, seq);
  if (seq.size() < 3) return false;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const Vertex a = seq[i], b = seq[(i + 1) % seq.size()], c = seq[(i + 2) % seq.size()];
    if (g.color(a, b) == g.color(b, c)) return false;
  }
  return true;
}

bool is_pc_path(const ColoredCompleteGraph& g, std::span<const Vertex> seq) {
  check_sequence(g, seq);
  for (std::size_t i = 0; i + 2 < seq.size(); ++i) {
    if (g.color(seq[i], seq[i + 1]) == g.color(seq[i + 1], seq[i + 2])) return false;
  }
  return true;
}

std::vector<PcCycle> enumerate_pc_cycles(const ColoredCompleteGraph& g, Vertex v, int length) {
  if (length < 3 || length > g.order()) throw Error(ErrorKind::BadLength, "length " + std::to_string(length));
  if (v < 0 || v >= g.order()) throw Error(ErrorKind::UnknownVertex, "vertex " + std::to_string(v));
  std::set<PcCycle> found;
  search_pc_cycles(g, v, length, {}, [&found](const std::vector<Vertex>& path) {
    found.insert(PcCycle(path).canonical());
    return false;
  });
  return {found.begin(), found.end()};
}

std::optional<PcCycle> find_pc_cycle(const ColoredCompleteGraph& g, Vertex v, int length, std::span<const char> allowed) {
  if (length < 3 || length > g.order()) throw Error(ErrorKind::BadLength, "length " + std::to_string(length));
  if (v < 0 || v >= g.order()) throw Error(ErrorKind::UnknownVertex, "vertex " + std::to_string(v));
  std::optional<PcCycle> out;
  search_pc_cycles(g, v, length, allowed, [&out](const std::vector<Vertex>& path) {
    out = PcCycle(path);
    return true;
  });
  return out;
}

PcPath pc_hamilton_path(const ColoredCompleteGraph& g) {
  const int n = g.order();
  if (n < 2) throw Error(ErrorKind::TooSmall, "Hamilton path needs n >= 2");
  if (n >= 3) {
    if (auto t = find_monochromatic_triangle(g)) {
      throw Error(ErrorKind::MonochromaticTrianglePresent,
                  "triangle " + std::to_string((*t)[0]) + "," + std::to_string((*t)[1]) + "," + std::to_string((*t)[2]));
    }
  }
  PcPath path{0};
  std::vector<char> on(static_cast<std::size_t>(n), 0);
  on[0] = 1;
  auto fits = [&g](Vertex a, Vertex b, Vertex c) { return g.color(a, b) != g.color(b, c); };

  while (static_cast<int>(path.size()) < n) {
    bool grown = false;
    for (Vertex w = 0; w < n && !grown; ++w) {
      if (on[static_cast<std::size_t>(w)]) continue;
      const std::size_t m = path.size();
      if (m == 1 || fits(path[m - 2], path[m - 1], w)) {
        path.push_back(w);
        grown = true;
      } else if (fits(w, path[0], path[1])) {
        path.insert(path.begin(), w);
        grown = true;
      } else {
        // With both ends blocked, the absence of monochromatic triangles
        // guarantees some gap p_i p_{i+1} accepts w.
        for (std::size_t i = 0; i + 1 < m; ++i) {
          const bool left = i == 0 || fits(path[i - 1], path[i], w);
          const bool mid = g.color(path[i], w) != g.color(w, path[i + 1]);
          const bool right = i + 2 >= m || fits(w, path[i + 1], path[i + 2]);
          if (left && mid && right) {
            path.insert(path.begin() + static_cast<std::ptrdiff_t>(i) + 1, w);
            grown = true;
            break;
          }
        }
      }
      if (grown) on[static_cast<std::size_t>(w)] = 1;
    }
    if (!grown) break;
  }
  if (static_cast<int>(path.size()) == n) return path;

  // Exhaustive fallback.
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  PcPath cur;
  std::function<bool()> dfs = [&]() -> bool {
    if (static_cast<int>(cur.size()) == n) return true;
    for (Vertex w = 0; w < n; ++w) {
      if (used[static_cast<std::size_t>(w)]) continue;
      if (cur.size() >= 2 && !fits(cur[cur.size() - 2], cur.back(), w)) continue;
      used[static_cast<std::size_t>(w)] = 1;
      cur.push_back(w);
      if (dfs()) return true;
      cur.pop_back();
      used[static_cast<std::size_t>(w)] = 0;
    }
    return false;
  };
  if (dfs()) return cur;
  throw Error(ErrorKind::InternalError, "no PC Hamilton path found");
}

AttachmentClass classify_attachment(const ColoredCompleteGraph& g, const PcCycle& cycle, Vertex v) {
  const int n = g.order();
  if (v < 0 || v >= n) throw Error(ErrorKind::UnknownVertex, "vertex " + std::to_string(v));
  if (cycle.contains(v)) throw Error(ErrorKind::VertexOnCycle, "vertex " + std::to_string(v));
  if (!is_pc_cycle(g, cycle.vertices())) throw Error(ErrorKind::PreconditionViolated, "cycle is not properly colored");
  if (auto t = find_monochromatic_triangle(g)) {
    throw Error(ErrorKind::MonochromaticTrianglePresent, "attachment classes need a graph without monochromatic triangles");
  }
  const auto& cv = cycle.vertices();
  const std::size_t len = cv.size();

  for (std::size_t i = 0; i < len; ++i) {
    std::vector<Vertex> seq(cv.begin(), cv.begin() + static_cast<std::ptrdiff_t>(i) + 1);
    seq.push_back(v);
    seq.insert(seq.end(), cv.begin() + static_cast<std::ptrdiff_t>(i) + 1, cv.end());
    if (is_pc_cycle(g, seq)) return Extendable{PcCycle(std::move(seq))};
  }
  std::vector<char> allowed(static_cast<std::size_t>(n), 0);
  for (Vertex u : cv) allowed[static_cast<std::size_t>(u)] = 1;
  allowed[static_cast<std::size_t>(v)] = 1;
  if (auto c = find_pc_cycle(g, v, static_cast<int>(len) + 1, allowed)) return Extendable{*c};

  std::set<Color> seen;
  bool all_pred = true, all_succ = true;
  for (Vertex u : cv) {
    const Color c = g.color(v, u);
    seen.insert(c);
    all_pred = all_pred && c == g.color(u, cycle.predecessor(u));
    all_succ = all_succ && c == g.color(u, cycle.successor(u));
  }
  if (seen.size() == 1) return SingleColor{*seen.begin()};
  if (all_pred) return AllPredecessor{};
  if (all_succ) return AllSuccessor{};
  throw Error(ErrorKind::InternalError, "vertex " + std::to_string(v) + " fits no attachment class");
}

PcCycle find_pc_quadrangle(const ColoredCompleteGraph& g, Vertex v) {
  const int n = g.order();
  if (n < 4) throw Error(ErrorKind::PreconditionViolated, "quadrangle needs n >= 4");
  if (v < 0 || v >= n) throw Error(ErrorKind::UnknownVertex, "vertex " + std::to_string(v));
  if (find_monochromatic_triangle(g)) throw Error(ErrorKind::PreconditionViolated, "graph has a monochromatic triangle");
  if (degeneracy_status(g).tag != DegeneracyTag::NonDegenerate) {
    throw Error(ErrorKind::PreconditionViolated, "graph is degenerate or has a degenerate set");
  }
  for (Vertex a = 0; a < n; ++a) {
    if (a == v) continue;
    for (Vertex b = 0; b < n; ++b) {
      if (b == v || b == a || g.color(v, a) == g.color(a, b)) continue;
      for (Vertex c = 0; c < n; ++c) {
        if (c == v || c == a || c == b) continue;
        const std::vector<Vertex> seq{v, a, b, c};
        if (is_pc_cycle(g, seq)) return PcCycle(seq);
      }
    }
  }
  throw Error(ErrorKind::InternalError, "no PC quadrangle through vertex " + std::to_string(v));
}

}  // namespace pcc
