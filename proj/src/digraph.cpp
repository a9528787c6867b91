#include "pcc/digraph.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "pcc/scc.hpp"

namespace pcc {

MultipartiteTournament::MultipartiteTournament(std::vector<std::vector<Vertex>> parts,
                                               std::span<const std::pair<Vertex, Vertex>> arcs)
    : parts_(std::move(parts)) {
  for (const auto& p : parts_) n_ += static_cast<int>(p.size());
  part_of_.assign(static_cast<std::size_t>(n_), -1);
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    auto& p = parts_[i];
    if (p.empty() || p.size() > 2) throw Error(ErrorKind::BadPartition, "part " + std::to_string(i) + " has size " + std::to_string(p.size()));
    std::sort(p.begin(), p.end());
    for (Vertex v : p) {
      if (v < 0 || v >= n_) throw Error(ErrorKind::BadPartition, "vertex " + std::to_string(v) + " out of range");
      if (part_of_[static_cast<std::size_t>(v)] >= 0) throw Error(ErrorKind::BadPartition, "vertex " + std::to_string(v) + " repeated");
      part_of_[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
  }
  adj_.assign(static_cast<std::size_t>(n_) * n_, 0);
  for (auto [u, v] : arcs) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw Error(ErrorKind::UnknownVertex, "arc endpoint out of range");
    if (part_of_[static_cast<std::size_t>(u)] == part_of_[static_cast<std::size_t>(v)]) {
      throw Error(ErrorKind::NotATournament, "arc " + std::to_string(u) + "->" + std::to_string(v) + " inside a part");
    }
    if (arc(u, v) || arc(v, u)) {
      throw Error(ErrorKind::NotATournament, "pair {" + std::to_string(u) + "," + std::to_string(v) + "} has two arcs");
    }
    adj_[static_cast<std::size_t>(u) * n_ + v] = 1;
  }
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v = u + 1; v < n_; ++v) {
      if (part_of_[static_cast<std::size_t>(u)] != part_of_[static_cast<std::size_t>(v)] && !adjacent(u, v)) {
        throw Error(ErrorKind::NotATournament, "pair {" + std::to_string(u) + "," + std::to_string(v) + "} has no arc");
      }
    }
  }
}

MultipartiteTournament MultipartiteTournament::tournament(int n, std::span<const std::pair<Vertex, Vertex>> arcs) {
  std::vector<std::vector<Vertex>> parts;
  for (Vertex v = 0; v < n; ++v) parts.push_back({v});
  return MultipartiteTournament(std::move(parts), arcs);
}

std::vector<Vertex> MultipartiteTournament::out_neighbors(Vertex v) const {
  std::vector<Vertex> out;
  for (Vertex w = 0; w < n_; ++w) {
    if (arc(v, w)) out.push_back(w);
  }
  return out;
}

std::vector<Vertex> MultipartiteTournament::in_neighbors(Vertex v) const {
  std::vector<Vertex> out;
  for (Vertex w = 0; w < n_; ++w) {
    if (arc(w, v)) out.push_back(w);
  }
  return out;
}

std::vector<std::pair<Vertex, Vertex>> MultipartiteTournament::arcs() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v = 0; v < n_; ++v) {
      if (arc(u, v)) out.push_back({u, v});
    }
  }
  return out;
}

bool MultipartiteTournament::out_neighborhoods_disjoint() const {
  for (const auto& p : parts_) {
    if (p.size() != 2) continue;
    for (Vertex z = 0; z < n_; ++z) {
      if (arc(p[0], z) && arc(p[1], z)) return false;
    }
  }
  return true;
}

MultipartiteTournament MultipartiteTournament::induced(std::span<const Vertex> keep) const {
  std::vector<int> index(static_cast<std::size_t>(n_), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) index[static_cast<std::size_t>(keep[i])] = static_cast<int>(i);
  std::vector<std::vector<Vertex>> parts;
  for (const auto& p : parts_) {
    std::vector<Vertex> q;
    for (Vertex v : p) {
      if (index[static_cast<std::size_t>(v)] >= 0) q.push_back(index[static_cast<std::size_t>(v)]);
    }
    if (!q.empty()) parts.push_back(std::move(q));
  }
  std::vector<std::pair<Vertex, Vertex>> sub;
  for (Vertex u : keep) {
    for (Vertex v : keep) {
      if (arc(u, v)) sub.push_back({index[static_cast<std::size_t>(u)], index[static_cast<std::size_t>(v)]});
    }
  }
  return MultipartiteTournament(std::move(parts), sub);
}

bool DirectedCycle::contains(Vertex v) const {
  return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

bool is_directed_cycle(const MultipartiteTournament& t, const DirectedCycle& c) {
  const auto& vs = c.vertices;
  if (vs.size() < 2) return false;
  std::vector<char> seen(static_cast<std::size_t>(t.order()), 0);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    Vertex u = vs[i], w = vs[(i + 1) % vs.size()];
    if (u < 0 || u >= t.order() || seen[static_cast<std::size_t>(u)]) return false;
    seen[static_cast<std::size_t>(u)] = 1;
    if (w < 0 || w >= t.order() || !t.arc(u, w)) return false;
  }
  return true;
}

bool is_strongly_connected(const MultipartiteTournament& t) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(t.order()));
  for (Vertex v = 0; v < t.order(); ++v) adj[static_cast<std::size_t>(v)] = t.out_neighbors(v);
  int count = 0;
  detail::strongly_connected_components(adj, &count);
  return count == 1;
}

namespace {

// Exhaustive search for a directed cycle of `length` through v.
std::optional<DirectedCycle> search_cycle(const MultipartiteTournament& t, Vertex v, int length) {
  std::vector<Vertex> path{v};
  std::vector<char> used(static_cast<std::size_t>(t.order()), 0);
  used[static_cast<std::size_t>(v)] = 1;
  std::function<bool()> dfs = [&]() -> bool {
    const Vertex last = path.back();
    if (static_cast<int>(path.size()) == length) return t.arc(last, v);
    for (Vertex w = 0; w < t.order(); ++w) {
      if (used[static_cast<std::size_t>(w)] || !t.arc(last, w)) continue;
      used[static_cast<std::size_t>(w)] = 1;
      path.push_back(w);
      if (dfs()) return true;
      path.pop_back();
      used[static_cast<std::size_t>(w)] = 0;
    }
    return false;
  };
  if (dfs()) return DirectedCycle{path};
  return std::nullopt;
}

// One step from an l-cycle through v to an (l+1)-cycle through v: insert an
// outside vertex between consecutive cycle vertices, else replace a cycle
// vertex other than v by an outside 2-path, else search exhaustively.
DirectedCycle extend_cycle(const MultipartiteTournament& t, const DirectedCycle& c, Vertex v, CycleStats& stats) {
  const auto& cv = c.vertices;
  const std::size_t len = cv.size();
  std::vector<char> on(static_cast<std::size_t>(t.order()), 0);
  for (Vertex u : cv) on[static_cast<std::size_t>(u)] = 1;
  std::vector<Vertex> outside;
  for (Vertex w = 0; w < t.order(); ++w) {
    if (!on[static_cast<std::size_t>(w)]) outside.push_back(w);
  }

  for (Vertex w : outside) {
    for (std::size_t i = 0; i < len; ++i) {
      if (t.arc(cv[i], w) && t.arc(w, cv[(i + 1) % len])) {
        DirectedCycle next;
        next.vertices.assign(cv.begin(), cv.begin() + static_cast<std::ptrdiff_t>(i) + 1);
        next.vertices.push_back(w);
        next.vertices.insert(next.vertices.end(), cv.begin() + static_cast<std::ptrdiff_t>(i) + 1, cv.end());
        ++stats.insertions;
        return next;
      }
    }
  }

  for (std::size_t i = 0; i < len; ++i) {
    if (cv[i] == v) continue;
    const Vertex prev = cv[(i + len - 1) % len], after = cv[(i + 1) % len];
    for (Vertex x : outside) {
      if (!t.arc(prev, x)) continue;
      for (Vertex z : outside) {
        if (z == x || !t.arc(x, z) || !t.arc(z, after)) continue;
        DirectedCycle next;
        for (std::size_t k = 0; k < len; ++k) {
          if (k == i) {
            next.vertices.push_back(x);
            next.vertices.push_back(z);
          } else {
            next.vertices.push_back(cv[k]);
          }
        }
        ++stats.replacements;
        return next;
      }
    }
  }

  ++stats.fallbacks;
  auto found = search_cycle(t, v, static_cast<int>(len) + 1);
  if (!found) {
    throw Error(ErrorKind::InternalError, "no directed cycle of length " + std::to_string(len + 1) + " through vertex " + std::to_string(v));
  }
  return *found;
}

std::optional<DirectedCycle> search_quadrangle(const MultipartiteTournament& t, Vertex v) {
  for (Vertex a : t.out_neighbors(v)) {
    for (Vertex b : t.out_neighbors(a)) {
      if (b == v) continue;
      for (Vertex c : t.out_neighbors(b)) {
        if (c != v && c != a && t.arc(c, v)) return DirectedCycle{{v, a, b, c}};
      }
    }
  }
  return std::nullopt;
}

// Quadrangle x -> a -> y -> b -> x through the 2-part {x, y}. Prefers a and b
// from another 2-part when one exists.
std::optional<DirectedCycle> part_quadrangle(const MultipartiteTournament& t, Vertex x, Vertex y) {
  const int own = t.part_of(x);
  for (std::size_t p = 0; p < t.parts().size(); ++p) {
    const auto& part = t.parts()[p];
    if (static_cast<int>(p) == own || part.size() != 2) continue;
    Vertex a = part[0], b = part[1];
    if (!t.arc(x, a)) std::swap(a, b);
    if (t.arc(x, a) && t.arc(a, y) && t.arc(y, b) && t.arc(b, x)) return DirectedCycle{{x, a, y, b}};
  }
  for (Vertex a : t.out_neighbors(x)) {
    for (Vertex b : t.out_neighbors(y)) {
      if (a != b && t.arc(a, y) && t.arc(b, x)) return DirectedCycle{{x, a, y, b}};
    }
  }
  return std::nullopt;
}

DirectedCycle rotate_to(const DirectedCycle& c, Vertex v) {
  auto it = std::find(c.vertices.begin(), c.vertices.end(), v);
  DirectedCycle out;
  out.vertices.assign(it, c.vertices.end());
  out.vertices.insert(out.vertices.end(), c.vertices.begin(), it);
  return out;
}

// Quadrangle through a singleton part {v} of a multipartite tournament with
// at least one 2-part.
std::optional<DirectedCycle> singleton_quadrangle(const MultipartiteTournament& t, Vertex v) {
  std::vector<Vertex> dominated;  // U: every vertex v was found to dominate
  bool first = true;
  for (const auto& part : t.parts()) {
    if (part.size() != 2) continue;
    const Vertex x = part[0], y = part[1];
    auto q = part_quadrangle(t, x, y);
    if (!q) return std::nullopt;
    const Vertex a = q->vertices[1], b = q->vertices[3];
    if (first) {
      dominated.push_back(a);
      dominated.push_back(b);
      first = false;
    }
    dominated.push_back(x);
    dominated.push_back(y);
    if (v == a || v == b) return rotate_to(*q, v);
    const bool to_x = t.arc(v, x), to_y = t.arc(v, y);
    if (to_x && t.arc(y, v)) return DirectedCycle{{v, x, a, y}};
    if (to_y && t.arc(x, v)) return DirectedCycle{{v, y, b, x}};
    if (!(to_x && to_y)) continue;
    if (t.arc(v, b) && t.arc(a, v)) return DirectedCycle{{v, b, x, a}};
    if (t.arc(v, a) && t.arc(b, v)) return DirectedCycle{{v, a, y, b}};
    if (t.arc(a, v) && t.arc(b, v)) {
      if (t.arc(a, b)) return DirectedCycle{{v, x, a, b}};
      if (t.arc(b, a)) return DirectedCycle{{v, y, b, a}};
    }
  }

  // v dominates all of U: splice a shortest path from U to v and apply the
  // tournament argument to the tournament it spans.
  std::sort(dominated.begin(), dominated.end());
  dominated.erase(std::unique(dominated.begin(), dominated.end()), dominated.end());
  std::vector<Vertex> parent(static_cast<std::size_t>(t.order()), -2);
  std::deque<Vertex> queue;
  for (Vertex u : dominated) {
    parent[static_cast<std::size_t>(u)] = -1;
    queue.push_back(u);
  }
  while (!queue.empty() && parent[static_cast<std::size_t>(v)] == -2) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : t.out_neighbors(u)) {
      if (parent[static_cast<std::size_t>(w)] != -2) continue;
      parent[static_cast<std::size_t>(w)] = u;
      queue.push_back(w);
    }
  }
  if (parent[static_cast<std::size_t>(v)] < 0) return std::nullopt;
  std::vector<Vertex> path{v};
  while (parent[static_cast<std::size_t>(path.back())] >= 0) path.push_back(parent[static_cast<std::size_t>(path.back())]);
  std::reverse(path.begin(), path.end());  // z0 ... zs v
  const Vertex z0 = path.front();
  for (Vertex x : dominated) {
    if (!t.arc(x, z0)) continue;
    std::vector<Vertex> keep{x};
    keep.insert(keep.end(), path.begin(), path.end());
    if (keep.size() < 4) continue;
    MultipartiteTournament sub = t.induced(keep);
    if (!sub.is_tournament() || !is_strongly_connected(sub)) continue;
    const Vertex local_v = static_cast<Vertex>(keep.size()) - 1;
    auto cycles = cycles_through(sub, local_v);
    DirectedCycle out;
    for (Vertex u : cycles.at(4).vertices) out.vertices.push_back(keep[static_cast<std::size_t>(u)]);
    return rotate_to(out, v);
  }
  return std::nullopt;
}

}  // namespace

std::map<int, DirectedCycle> cycles_through(const MultipartiteTournament& t, Vertex v, CycleStats* stats) {
  const int n = t.order();
  if (!t.is_tournament()) throw Error(ErrorKind::NotATournament, "cycles_through needs singleton parts");
  if (n < 3) throw Error(ErrorKind::TooSmall, "cycles_through needs order >= 3");
  if (v < 0 || v >= n) throw Error(ErrorKind::UnknownVertex, "vertex " + std::to_string(v));
  if (!is_strongly_connected(t)) throw Error(ErrorKind::NotStronglyConnected, "tournament is not strongly connected");
  CycleStats local;
  CycleStats& s = stats ? *stats : local;

  std::optional<DirectedCycle> triangle;
  for (Vertex x : t.out_neighbors(v)) {
    for (Vertex y : t.out_neighbors(x)) {
      if (t.arc(y, v)) {
        triangle = DirectedCycle{{v, x, y}};
        break;
      }
    }
    if (triangle) break;
  }
  if (!triangle) throw Error(ErrorKind::InternalError, "no directed triangle through vertex " + std::to_string(v));

  std::map<int, DirectedCycle> out;
  out.emplace(3, *triangle);
  for (int len = 3; len < n; ++len) out.emplace(len + 1, rotate_to(extend_cycle(t, out.at(len), v, s), v));
  return out;
}

std::map<int, DirectedCycle> mpt_cycles_through(const MultipartiteTournament& t, Vertex v, CycleStats* stats) {
  const int n = t.order();
  if (n < 4) throw Error(ErrorKind::PreconditionViolated, "size: order " + std::to_string(n) + " < 4");
  if (v < 0 || v >= n) throw Error(ErrorKind::UnknownVertex, "vertex " + std::to_string(v));
  if (!is_strongly_connected(t)) throw Error(ErrorKind::PreconditionViolated, "connectivity: not strongly connected");
  if (!t.out_neighborhoods_disjoint()) throw Error(ErrorKind::PreconditionViolated, "disjointness: a 2-part has a common out-neighbor");
  CycleStats local;
  CycleStats& s = stats ? *stats : local;

  std::optional<DirectedCycle> quad;
  const auto& own = t.parts()[static_cast<std::size_t>(t.part_of(v))];
  if (t.is_tournament()) {
    quad = cycles_through(t, v).at(4);
  } else if (own.size() == 2) {
    quad = part_quadrangle(t, v, own[0] == v ? own[1] : own[0]);
  } else {
    quad = singleton_quadrangle(t, v);
  }
  if (quad && is_directed_cycle(t, *quad) && quad->length() == 4 && quad->contains(v)) {
    ++s.quadrangle_rule;
  } else {
    quad = search_quadrangle(t, v);
    ++s.quadrangle_fallback;
    if (!quad) throw Error(ErrorKind::InternalError, "no directed quadrangle through vertex " + std::to_string(v));
  }

  std::map<int, DirectedCycle> out;
  out.emplace(4, rotate_to(*quad, v));
  for (int len = 4; len < n; ++len) out.emplace(len + 1, rotate_to(extend_cycle(t, out.at(len), v, s), v));
  return out;
}

MultipartiteTournament reduce_degenerate(const ColoredCompleteGraph& g, const DegeneracyCertificate& f) {
  const int n = g.order();
  std::vector<Color> fv(static_cast<std::size_t>(n), -1);
  for (auto [v, c] : f.assign) {
    if (v < 0 || v >= n) throw Error(ErrorKind::UnknownVertex, "vertex " + std::to_string(v));
    fv[static_cast<std::size_t>(v)] = c;
  }
  for (Vertex v = 0; v < n; ++v) {
    if (fv[static_cast<std::size_t>(v)] < 0) throw Error(ErrorKind::IncompatibleFunction, "vertex " + std::to_string(v) + " has no value");
  }
  std::vector<std::pair<Vertex, Vertex>> arcs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex w = u + 1; w < n; ++w) {
      const Color c = g.color(u, w), a = fv[static_cast<std::size_t>(u)], b = fv[static_cast<std::size_t>(w)];
      if (c != a && c != b) {
        throw Error(ErrorKind::IncompatibleFunction, "edge {" + std::to_string(u) + "," + std::to_string(w) + "}");
      }
      if (a == b) continue;
      if (c == a) arcs.push_back({u, w});
      else arcs.push_back({w, u});
    }
  }
  std::map<Color, std::vector<Vertex>> fibers;
  for (Vertex v = 0; v < n; ++v) fibers[fv[static_cast<std::size_t>(v)]].push_back(v);
  std::vector<std::vector<Vertex>> parts;
  for (auto& [c, members] : fibers) {
    if (members.size() > 2) {
      throw Error(ErrorKind::FiberTooLarge, "color " + std::to_string(g.label(c)) + " has " + std::to_string(members.size()) + " vertices");
    }
    parts.push_back(members);
  }
  return MultipartiteTournament(std::move(parts), arcs);
}

PcCycle lift_cycle(const ColoredCompleteGraph& g, const DegeneracyCertificate& f, const DirectedCycle& c) {
  const auto d = reduce_degenerate(g, f);
  if (!is_directed_cycle(d, c)) throw Error(ErrorKind::NotACycleOfD, "sequence is not a directed cycle of the reduction");
  return PcCycle(c.vertices);
}

}  // namespace pcc
