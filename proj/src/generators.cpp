#include "pcc/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "pcc/classifier.hpp"
#include "pcc/digraph.hpp"

namespace pcc {

std::optional<Family> parse_family(const std::string& name) {
  if (name == "doublePentagon") return Family::DoublePentagon;
  if (name == "directedExample") return Family::DirectedExample;
  if (name == "randomNoMono") return Family::RandomNoMono;
  if (name == "randomDegenerate") return Family::RandomDegenerate;
  if (name == "gallai") return Family::Gallai;
  if (name == "exhaustive") return Family::Exhaustive;
  return std::nullopt;
}

std::string family_name(Family f) {
  switch (f) {
    case Family::DoublePentagon: return "doublePentagon";
    case Family::DirectedExample: return "directedExample";
    case Family::RandomNoMono: return "randomNoMono";
    case Family::RandomDegenerate: return "randomDegenerate";
    case Family::Gallai: return "gallai";
    case Family::Exhaustive: return "exhaustive";
  }
  return "unknown";
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  // splitmix64
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

// Symmetric label matrix under construction.
class LabelMatrix {
public:
  explicit LabelMatrix(int n) : n_(n), m_(static_cast<std::size_t>(n) * n, 0) {}
  int& at(Vertex u, Vertex v) { return m_[static_cast<std::size_t>(std::min(u, v)) * n_ + std::max(u, v)]; }
  int at(Vertex u, Vertex v) const { return m_[static_cast<std::size_t>(std::min(u, v)) * n_ + std::max(u, v)]; }

  ColoredCompleteGraph build() const {
    std::vector<EdgeSpec> edges;
    for (Vertex u = 0; u < n_; ++u) {
      for (Vertex v = u + 1; v < n_; ++v) edges.push_back({u, v, at(u, v)});
    }
    return ColoredCompleteGraph::build(n_, edges);
  }

private:
  int n_;
  std::vector<int> m_;
};

std::optional<std::array<Vertex, 3>> mono_triangle(const LabelMatrix& m, int n) {
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      for (Vertex w = v + 1; w < n; ++w) {
        if (m.at(u, v) == m.at(u, w) && m.at(u, v) == m.at(v, w)) return std::array<Vertex, 3>{u, v, w};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

ColoredCompleteGraph example_k5_double_pentagon() { return double_pentagon_k5(); }

ColoredCompleteGraph example_directed(int n) {
  if (n < 6) throw Error(ErrorKind::TooSmall, "directed example needs n >= 6");
  LabelMatrix m(n);
  m.at(0, 1) = 1;
  m.at(1, 2) = 2;
  m.at(2, 0) = 3;
  for (Vertex i = 0; i < 3; ++i) {
    for (Vertex x = 3; x < n; ++x) m.at(i, x) = i + 1;
  }
  int fresh = 4;
  for (Vertex x = 3; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) m.at(x, y) = fresh++;
  }
  return m.build();
}

ColoredCompleteGraph random_no_mono_triangle(int n, int k, std::uint64_t seed, int budget) {
  if (n < 3) throw Error(ErrorKind::TooSmall, "randomNoMono needs n >= 3");
  if (k < 2) throw Error(ErrorKind::BadFormat, "randomNoMono needs k >= 2");
  Rng rng(seed);
  LabelMatrix m(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) m.at(u, v) = uniform(rng, 1, k);
  }
  for (int step = 0;; ++step) {
    auto t = mono_triangle(m, n);
    if (!t) break;
    if (step >= budget) {
      throw Error(ErrorKind::BudgetExhausted, "randomNoMono n=" + std::to_string(n) + " k=" + std::to_string(k) +
                                                  " seed=" + std::to_string(seed) + " after " + std::to_string(budget) + " repairs");
    }
    const int side = uniform(rng, 0, 2);
    const Vertex a = (*t)[static_cast<std::size_t>(side)], b = (*t)[static_cast<std::size_t>((side + 1) % 3)];
    int c = uniform(rng, 1, k - 1);
    if (c >= m.at(a, b)) ++c;
    m.at(a, b) = c;
  }
  auto g = m.build();
  if (find_monochromatic_triangle(g)) throw Error(ErrorKind::InternalError, "randomNoMono emitted a monochromatic triangle");
  return g;
}

std::vector<std::vector<Vertex>> random_fibers(int n, int count, std::uint64_t seed) {
  if (n < 1) throw Error(ErrorKind::TooSmall, "fibers need n >= 1");
  Rng rng(seed);
  const int lo = (n + 1) / 2;
  if (count <= 0) count = uniform(rng, lo, n);
  if (count < lo || count > n) throw Error(ErrorKind::BadPartition, std::to_string(count) + " fibers cannot cover " + std::to_string(n) + " vertices with sizes <= 2");
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::vector<Vertex>> fibers;
  const int pairs = n - count;
  std::size_t i = 0;
  for (int p = 0; p < pairs; ++p, i += 2) fibers.push_back({order[i], order[i + 1]});
  for (; i < order.size(); ++i) fibers.push_back({order[i]});
  for (auto& f : fibers) std::sort(f.begin(), f.end());
  std::sort(fibers.begin(), fibers.end());
  return fibers;
}

DegenerateInstance random_degenerate(int n, const std::vector<std::vector<Vertex>>& fibers, std::uint64_t seed,
                                     bool strongly_connected, int budget) {
  std::vector<int> fiber_of(static_cast<std::size_t>(std::max(n, 0)), -1);
  for (std::size_t i = 0; i < fibers.size(); ++i) {
    if (fibers[i].empty() || fibers[i].size() > 2) throw Error(ErrorKind::BadPartition, "fiber " + std::to_string(i) + " has size " + std::to_string(fibers[i].size()));
    for (Vertex v : fibers[i]) {
      if (v < 0 || v >= n || fiber_of[static_cast<std::size_t>(v)] >= 0) throw Error(ErrorKind::BadPartition, "vertex " + std::to_string(v));
      fiber_of[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (fiber_of[static_cast<std::size_t>(v)] < 0) throw Error(ErrorKind::BadPartition, "vertex " + std::to_string(v) + " uncovered");
  }
  if (n < 2) throw Error(ErrorKind::TooSmall, "randomDegenerate needs n >= 2");

  Rng rng(seed);
  for (int attempt = 0; attempt < budget; ++attempt) {
    LabelMatrix m(n);
    std::vector<std::pair<Vertex, Vertex>> arcs;
    for (std::size_t i = 0; i < fibers.size(); ++i) {
      const auto& a = fibers[i];
      if (a.size() == 2) m.at(a[0], a[1]) = static_cast<int>(i) + 1;
      for (std::size_t j = i + 1; j < fibers.size(); ++j) {
        const auto& b = fibers[j];
        std::vector<std::pair<Vertex, Vertex>> pairs;
        for (Vertex x : a) {
          for (Vertex y : b) pairs.push_back({x, y});
        }
        // Orientation masks: bit set means x -> y.
        std::vector<unsigned> valid;
        for (unsigned mask = 0; mask < (1U << pairs.size()); ++mask) {
          auto dom = [&](Vertex s, Vertex t) {
            for (std::size_t p = 0; p < pairs.size(); ++p) {
              if (pairs[p].first == s && pairs[p].second == t) return ((mask >> p) & 1U) != 0;
              if (pairs[p].first == t && pairs[p].second == s) return ((mask >> p) & 1U) == 0;
            }
            return false;
          };
          bool ok = true;
          if (a.size() == 2) {
            for (Vertex z : b) ok = ok && !(dom(a[0], z) && dom(a[1], z));
          }
          if (b.size() == 2) {
            for (Vertex z : a) ok = ok && !(dom(b[0], z) && dom(b[1], z));
          }
          if (ok) valid.push_back(mask);
        }
        const unsigned mask = valid[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(valid.size()) - 1))];
        for (std::size_t p = 0; p < pairs.size(); ++p) {
          auto [x, y] = pairs[p];
          if (!((mask >> p) & 1U)) std::swap(x, y);
          arcs.push_back({x, y});
          m.at(x, y) = fiber_of[static_cast<std::size_t>(x)] + 1;
        }
      }
    }
    if (strongly_connected && !is_strongly_connected(MultipartiteTournament(fibers, arcs))) continue;

    DegenerateInstance out{m.build(), {}};
    const auto& g = out.graph;
    for (Vertex v = 0; v < n; ++v) {
      const int label = fiber_of[static_cast<std::size_t>(v)] + 1;
      const auto& labels = g.labels();
      auto it = std::lower_bound(labels.begin(), labels.end(), label);
      // A singleton fiber that only receives arcs has its color on no edge;
      // any incident color is then compatible.
      Color c = (it != labels.end() && *it == label) ? static_cast<Color>(it - labels.begin()) : g.color(v, v == 0 ? 1 : 0);
      out.f.set.push_back(v);
      out.f.assign.emplace(v, c);
    }
    if (!is_valid_certificate(g, out.f)) throw Error(ErrorKind::InternalError, "randomDegenerate produced an incompatible f");
    if (n >= 3 && find_monochromatic_triangle(g)) throw Error(ErrorKind::InternalError, "randomDegenerate emitted a monochromatic triangle");
    return out;
  }
  throw Error(ErrorKind::BudgetExhausted, "randomDegenerate n=" + std::to_string(n) + " seed=" + std::to_string(seed) +
                                              ": no strongly connected orientation in " + std::to_string(budget) + " draws");
}

namespace {

// Fills the edges among `vs` with a Gallai coloring using fresh labels.
void gallai_fill(std::vector<Vertex> vs, Rng& rng, int& next_label, LabelMatrix& m,
                 std::vector<std::vector<Vertex>>* top) {
  const int size = static_cast<int>(vs.size());
  if (size <= 1) {
    if (top) top->push_back(vs);
    return;
  }
  std::shuffle(vs.begin(), vs.end(), rng);
  const int p = uniform(rng, 2, std::min(5, size));
  // Random composition of size into p positive parts.
  std::vector<int> cuts(static_cast<std::size_t>(size - 1));
  std::iota(cuts.begin(), cuts.end(), 1);
  std::shuffle(cuts.begin(), cuts.end(), rng);
  cuts.resize(static_cast<std::size_t>(p - 1));
  std::sort(cuts.begin(), cuts.end());
  cuts.insert(cuts.begin(), 0);
  cuts.push_back(size);
  std::vector<std::vector<Vertex>> parts;
  for (int i = 0; i < p; ++i) {
    parts.emplace_back(vs.begin() + cuts[static_cast<std::size_t>(i)], vs.begin() + cuts[static_cast<std::size_t>(i) + 1]);
  }

  // Two-colored base on p <= 5 parts without a monochromatic triangle.
  const int red = next_label++, blue = next_label++;
  std::vector<int> base(static_cast<std::size_t>(p * p), 0);
  if (p == 5) {
    std::vector<int> perm{0, 1, 2, 3, 4};
    std::shuffle(perm.begin(), perm.end(), rng);
    for (int i = 0; i < 5; ++i) {
      const int a = perm[static_cast<std::size_t>(i)];
      const int b = perm[static_cast<std::size_t>((i + 1) % 5)], c = perm[static_cast<std::size_t>((i + 2) % 5)];
      base[static_cast<std::size_t>(a * p + b)] = base[static_cast<std::size_t>(b * p + a)] = red;
      base[static_cast<std::size_t>(a * p + c)] = base[static_cast<std::size_t>(c * p + a)] = blue;
    }
  } else {
    while (true) {
      for (int i = 0; i < p; ++i) {
        for (int j = i + 1; j < p; ++j) {
          base[static_cast<std::size_t>(i * p + j)] = base[static_cast<std::size_t>(j * p + i)] = uniform(rng, 0, 1) ? red : blue;
        }
      }
      bool mono = false;
      for (int i = 0; i < p; ++i) {
        for (int j = i + 1; j < p; ++j) {
          for (int l = j + 1; l < p; ++l) {
            const int c = base[static_cast<std::size_t>(i * p + j)];
            mono = mono || (c == base[static_cast<std::size_t>(i * p + l)] && c == base[static_cast<std::size_t>(j * p + l)]);
          }
        }
      }
      if (!mono) break;
    }
  }
  for (int i = 0; i < p; ++i) {
    for (int j = i + 1; j < p; ++j) {
      for (Vertex x : parts[static_cast<std::size_t>(i)]) {
        for (Vertex y : parts[static_cast<std::size_t>(j)]) m.at(x, y) = base[static_cast<std::size_t>(i * p + j)];
      }
    }
  }
  if (top) {
    for (auto& part : parts) {
      auto sorted = part;
      std::sort(sorted.begin(), sorted.end());
      top->push_back(sorted);
    }
  }
  for (auto& part : parts) gallai_fill(part, rng, next_label, m, nullptr);
}

}  // namespace

GallaiInstance gallai_coloring(int n, std::uint64_t seed) {
  if (n < 3) throw Error(ErrorKind::TooSmall, "gallai needs n >= 3");
  Rng rng(seed);
  LabelMatrix m(n);
  std::vector<Vertex> vs(static_cast<std::size_t>(n));
  std::iota(vs.begin(), vs.end(), 0);
  int next_label = 1;
  std::vector<std::vector<Vertex>> top;
  gallai_fill(vs, rng, next_label, m, &top);
  std::sort(top.begin(), top.end());
  GallaiInstance out{m.build(), std::move(top)};
  if (find_monochromatic_triangle(out.graph)) throw Error(ErrorKind::InternalError, "gallai emitted a monochromatic triangle");
  if (find_pc_triangle(out.graph)) throw Error(ErrorKind::InternalError, "gallai emitted a PC triangle");
  if (!verify_gallai_partition(out.graph, out.partition)) throw Error(ErrorKind::InternalError, "gallai partition does not verify");
  return out;
}

ColoringStream::ColoringStream(int n) : n_(n) {
  if (n < 2) throw Error(ErrorKind::TooSmall, "exhaustive colorings need n >= 2");
  if (n > 5) throw Error(ErrorKind::TooLarge, "full enumeration stops at n = 5; use sampling for larger n");
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) pairs_.push_back({u, v});
  }
  rgs_.assign(pairs_.size(), 0);
  prefix_max_.assign(pairs_.size(), 0);
}

std::optional<ColoredCompleteGraph> ColoringStream::next() {
  if (done_) return std::nullopt;
  if (started_) {
    // Rightmost position that can still grow.
    std::size_t i = rgs_.size();
    while (i-- > 1) {
      if (rgs_[i] <= prefix_max_[i - 1]) break;
    }
    if (i == 0 || i >= rgs_.size()) {
      done_ = true;
      return std::nullopt;
    }
    ++rgs_[i];
    prefix_max_[i] = std::max(prefix_max_[i - 1], rgs_[i]);
    for (std::size_t j = i + 1; j < rgs_.size(); ++j) {
      rgs_[j] = 0;
      prefix_max_[j] = prefix_max_[j - 1];
    }
  }
  started_ = true;
  std::vector<EdgeSpec> edges;
  edges.reserve(pairs_.size());
  for (std::size_t i = 0; i < pairs_.size(); ++i) edges.push_back({pairs_[i].first, pairs_[i].second, rgs_[i] + 1});
  ++produced_;
  return ColoredCompleteGraph::build(n_, edges);
}

ColoredCompleteGraph sample_coloring(int n, std::uint64_t seed) {
  if (n < 2) throw Error(ErrorKind::TooSmall, "sampling needs n >= 2");
  Rng rng(seed);
  std::vector<EdgeSpec> edges;
  int used = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const int c = uniform(rng, 0, used);
      if (c == used) ++used;
      edges.push_back({u, v, c + 1});
    }
  }
  return ColoredCompleteGraph::build(n, edges);
}

}  // namespace pcc
