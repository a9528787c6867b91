#include "pcc/oracle.hpp"

#include <algorithm>
#include <functional>

namespace pcc::oracle {

DegeneracyFacts degeneracy(const ColoredCompleteGraph& g, bool collect_all) {
  const int n = g.order();
  DegeneracyFacts facts;
  std::vector<std::vector<Color>> choices(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    std::vector<Color> inc;
    for (Vertex w = 0; w < n; ++w) {
      if (w != v) inc.push_back(g.color(v, w));
    }
    std::sort(inc.begin(), inc.end());
    inc.erase(std::unique(inc.begin(), inc.end()), inc.end());
    choices[static_cast<std::size_t>(v)] = inc;
  }
  std::vector<int> f(static_cast<std::size_t>(n), -1);  // -1: outside S
  // Constraint between two decided vertices.
  auto ok = [&g, &f](Vertex a, Vertex b) {
    const int fa = f[static_cast<std::size_t>(a)], fb = f[static_cast<std::size_t>(b)];
    const Color c = g.color(a, b);
    if (fa >= 0 && fb >= 0) return c == fa || c == fb;
    if (fa >= 0) return c == fa;
    if (fb >= 0) return c == fb;
    return true;
  };
  std::function<void(Vertex)> assign = [&](Vertex v) {
    if (v == n) {
      const auto in_s = std::count_if(f.begin(), f.end(), [](int x) { return x >= 0; });
      if (in_s == 0) return;
      if (in_s == n) facts.full_exists = true;
      else facts.proper_exists = true;
      if (collect_all) {
        DegeneracyCertificate cert;
        for (Vertex u = 0; u < n; ++u) {
          if (f[static_cast<std::size_t>(u)] >= 0) {
            cert.set.push_back(u);
            cert.assign.emplace(u, f[static_cast<std::size_t>(u)]);
          }
        }
        facts.all.push_back(std::move(cert));
      }
      return;
    }
    std::vector<int> options{-1};
    options.insert(options.end(), choices[static_cast<std::size_t>(v)].begin(), choices[static_cast<std::size_t>(v)].end());
    for (int option : options) {
      f[static_cast<std::size_t>(v)] = option;
      bool consistent = true;
      for (Vertex u = 0; u < v && consistent; ++u) consistent = ok(u, v);
      if (consistent) assign(v + 1);
    }
    f[static_cast<std::size_t>(v)] = -1;
  };
  assign(0);
  return facts;
}

DegeneracyTag degeneracy_tag(const DegeneracyFacts& facts) {
  if (facts.proper_exists) return DegeneracyTag::ProperDegenerateSet;
  if (facts.full_exists) return DegeneracyTag::DegenerateFullOnly;
  return DegeneracyTag::NonDegenerate;
}

namespace {

std::vector<Vertex> canonical_rotation(std::vector<Vertex> seq) {
  auto it = std::min_element(seq.begin(), seq.end());
  std::rotate(seq.begin(), it, seq.end());
  if (seq.size() > 2 && seq.back() < seq[1]) std::reverse(seq.begin() + 1, seq.end());
  return seq;
}

bool proper_closed(const ColoredCompleteGraph& g, const std::vector<Vertex>& seq) {
  const std::size_t m = seq.size();
  for (std::size_t i = 0; i < m; ++i) {
    if (g.color(seq[i], seq[(i + 1) % m]) == g.color(seq[(i + 1) % m], seq[(i + 2) % m])) return false;
  }
  return true;
}

}  // namespace

std::set<std::vector<Vertex>> pc_cycles(const ColoredCompleteGraph& g, Vertex v, int length) {
  std::set<std::vector<Vertex>> out;
  const int n = g.order();
  if (length < 3 || length > n) return out;
  std::vector<Vertex> seq{v};
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  used[static_cast<std::size_t>(v)] = 1;
  std::function<void()> grow = [&]() {
    if (static_cast<int>(seq.size()) == length) {
      if (proper_closed(g, seq)) out.insert(canonical_rotation(seq));
      return;
    }
    for (Vertex w = 0; w < n; ++w) {
      if (used[static_cast<std::size_t>(w)]) continue;
      used[static_cast<std::size_t>(w)] = 1;
      seq.push_back(w);
      grow();
      seq.pop_back();
      used[static_cast<std::size_t>(w)] = 0;
    }
  };
  grow();
  return out;
}

bool pc_pancyclic_from_four(const ColoredCompleteGraph& g) {
  for (Vertex v = 0; v < g.order(); ++v) {
    for (int len = 4; len <= g.order(); ++len) {
      if (pc_cycles(g, v, len).empty()) return false;
    }
  }
  return true;
}

std::set<int> directed_cycle_lengths(const MultipartiteTournament& t, Vertex v) {
  std::set<int> lengths;
  const int n = t.order();
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  used[static_cast<std::size_t>(v)] = 1;
  std::function<void(Vertex, int)> walk = [&](Vertex last, int size) {
    if (size >= 2 && t.arc(last, v)) lengths.insert(size);
    for (Vertex w = 0; w < n; ++w) {
      if (used[static_cast<std::size_t>(w)] || !t.arc(last, w)) continue;
      used[static_cast<std::size_t>(w)] = 1;
      walk(w, size + 1);
      used[static_cast<std::size_t>(w)] = 0;
    }
  };
  walk(v, 1);
  return lengths;
}

}  // namespace pcc::oracle
