#include "pcc/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace pcc {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::MissingEdge: return "MissingEdge";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::RepeatedVertex: return "RepeatedVertex";
    case ErrorKind::TooSmall: return "TooSmall";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::OverlappingSets: return "OverlappingSets";
    case ErrorKind::NotAPartition: return "NotAPartition";
    case ErrorKind::BadPartition: return "BadPartition";
    case ErrorKind::BadLength: return "BadLength";
    case ErrorKind::BadFormat: return "BadFormat";
    case ErrorKind::NotStronglyConnected: return "NotStronglyConnected";
    case ErrorKind::NotATournament: return "NotATournament";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::IncompatibleFunction: return "IncompatibleFunction";
    case ErrorKind::FiberTooLarge: return "FiberTooLarge";
    case ErrorKind::NotACycleOfD: return "NotACycleOfD";
    case ErrorKind::VertexOnCycle: return "VertexOnCycle";
    case ErrorKind::MonochromaticTrianglePresent: return "MonochromaticTrianglePresent";
    case ErrorKind::BudgetExhausted: return "BudgetExhausted";
    case ErrorKind::ResultMismatch: return "ResultMismatch";
    case ErrorKind::InternalError: return "InternalError";
  }
  return "Unknown";
}

namespace {

std::string pair_name(Vertex u, Vertex v) {
  std::ostringstream os;
  os << '{' << std::min(u, v) << ',' << std::max(u, v) << '}';
  return os.str();
}

}  // namespace

ColoredCompleteGraph ColoredCompleteGraph::build(int n, std::span<const EdgeSpec> edges) {
  if (n < 1) throw Error(ErrorKind::TooSmall, "graph needs at least one vertex");
  const auto un = static_cast<std::size_t>(n);
  std::vector<int> raw(un * un, 0);
  std::vector<char> seen(un * un, 0);
  for (const auto& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
      throw Error(ErrorKind::UnknownVertex, "edge " + pair_name(e.u, e.v) + " outside [0," + std::to_string(n) + ")");
    }
    if (e.u == e.v) throw Error(ErrorKind::SelfLoop, "edge " + pair_name(e.u, e.v));
    auto idx = static_cast<std::size_t>(std::min(e.u, e.v)) * un + static_cast<std::size_t>(std::max(e.u, e.v));
    if (seen[idx]) throw Error(ErrorKind::DuplicateEdge, "edge " + pair_name(e.u, e.v));
    seen[idx] = 1;
    raw[idx] = e.color;
  }
  std::vector<int> labels;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      auto idx = static_cast<std::size_t>(u) * un + static_cast<std::size_t>(v);
      if (!seen[idx]) throw Error(ErrorKind::MissingEdge, "edge " + pair_name(u, v));
      labels.push_back(raw[idx]);
    }
  }
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

  ColoredCompleteGraph g;
  g.n_ = n;
  g.labels_ = labels;
  g.matrix_.assign(un * un, -1);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      int label = raw[static_cast<std::size_t>(u) * un + static_cast<std::size_t>(v)];
      auto c = static_cast<Color>(std::lower_bound(labels.begin(), labels.end(), label) - labels.begin());
      g.matrix_[static_cast<std::size_t>(u) * un + v] = c;
      g.matrix_[static_cast<std::size_t>(v) * un + u] = c;
    }
  }
  return g;
}

std::vector<EdgeSpec> ColoredCompleteGraph::edges() const {
  std::vector<EdgeSpec> out;
  out.reserve(static_cast<std::size_t>(n_) * (n_ - 1) / 2);
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) out.push_back({u, v, label(color(u, v))});
  }
  return out;
}

std::uint64_t ColoredCompleteGraph::digest() const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xffU;
      h *= 1099511628211ULL;
    }
  };
  mix(static_cast<std::uint64_t>(n_));
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) mix(static_cast<std::uint64_t>(static_cast<std::int64_t>(labels_[color(u, v)])));
  }
  return h;
}

ColorStats stats(const ColoredCompleteGraph& g) {
  const int n = g.order();
  if (n < 2) throw Error(ErrorKind::TooSmall, "color statistics need n >= 2");
  ColorStats s;
  s.color_degree.assign(static_cast<std::size_t>(n), 0);
  std::vector<int> count(static_cast<std::size_t>(g.palette_size()), 0);
  for (Vertex v = 0; v < n; ++v) {
    std::fill(count.begin(), count.end(), 0);
    for (Vertex w = 0; w < n; ++w) {
      if (w != v) ++count[static_cast<std::size_t>(g.color(v, w))];
    }
    for (int c : count) {
      if (c > 0) ++s.color_degree[static_cast<std::size_t>(v)];
      s.max_mono_degree = std::max(s.max_mono_degree, c);
    }
  }
  s.min_color_degree = *std::min_element(s.color_degree.begin(), s.color_degree.end());
  return s;
}

std::vector<Color> colors_between(const ColoredCompleteGraph& g, std::span<const Vertex> a,
                                  std::span<const Vertex> b) {
  std::vector<char> in_a(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : a) {
    if (v < 0 || v >= g.order()) throw Error(ErrorKind::UnknownVertex, "vertex " + std::to_string(v));
    in_a[static_cast<std::size_t>(v)] = 1;
  }
  for (Vertex v : b) {
    if (v < 0 || v >= g.order()) throw Error(ErrorKind::UnknownVertex, "vertex " + std::to_string(v));
    if (in_a[static_cast<std::size_t>(v)]) throw Error(ErrorKind::OverlappingSets, "vertex " + std::to_string(v) + " in both sets");
  }
  std::vector<char> present(static_cast<std::size_t>(g.palette_size()), 0);
  for (Vertex u : a) {
    for (Vertex v : b) present[static_cast<std::size_t>(g.color(u, v))] = 1;
  }
  std::vector<Color> out;
  for (Color c = 0; c < g.palette_size(); ++c) {
    if (present[static_cast<std::size_t>(c)]) out.push_back(c);
  }
  return out;
}

namespace {

// Branch-and-bound search for the lexicographically smallest color sequence
// over vertex orderings that respect the invariant blocks. The sequence is
// laid out column by column (entries (0,i),(1,i),...,(i-1,i) for i = 1..n-1)
// so each placed position fixes a prefix, and colors are renamed by first
// appearance, which is also prefix-stable.
class CanonicalSearch {
public:
  CanonicalSearch(const ColoredCompleteGraph& g, std::vector<int> block_of_position,
                  std::vector<std::vector<Vertex>> block_members)
      : g_(g),
        n_(g.order()),
        block_of_position_(std::move(block_of_position)),
        members_(std::move(block_members)),
        used_(static_cast<std::size_t>(n_), 0),
        order_(static_cast<std::size_t>(n_), -1),
        rename_(static_cast<std::size_t>(g.palette_size()), -1) {}

  std::vector<int> run() {
    current_.reserve(static_cast<std::size_t>(n_) * (n_ - 1) / 2);
    place(0, false);
    return best_;
  }

private:
  void place(int pos, bool strictly_less) {
    if (pos == n_) {
      if (!have_best_ || strictly_less) {
        best_ = current_;
        have_best_ = true;
        ++version_;
      }
      return;
    }
    const int entry_version = version_;
    for (Vertex v : members_[static_cast<std::size_t>(block_of_position_[static_cast<std::size_t>(pos)])]) {
      if (used_[static_cast<std::size_t>(v)]) continue;
      // A best found below this prefix shares the prefix, so it is now a tie.
      if (version_ != entry_version) strictly_less = false;
      const std::size_t mark = current_.size();
      std::vector<Color> fresh;
      bool less = strictly_less;
      bool prune = false;
      for (int p = 0; p < pos; ++p) {
        Color c = g_.color(order_[static_cast<std::size_t>(p)], v);
        int& r = rename_[static_cast<std::size_t>(c)];
        if (r < 0) {
          r = next_name_++;
          fresh.push_back(c);
        }
        current_.push_back(r);
        if (have_best_ && !less) {
          int b = best_[current_.size() - 1];
          if (r < b) less = true;
          else if (r > b) { prune = true; break; }
        }
      }
      if (!prune) {
        used_[static_cast<std::size_t>(v)] = 1;
        order_[static_cast<std::size_t>(pos)] = v;
        place(pos + 1, less);
        used_[static_cast<std::size_t>(v)] = 0;
      }
      current_.resize(mark);
      for (Color c : fresh) rename_[static_cast<std::size_t>(c)] = -1;
      next_name_ -= static_cast<int>(fresh.size());
    }
  }

  const ColoredCompleteGraph& g_;
  int n_;
  std::vector<int> block_of_position_;
  std::vector<std::vector<Vertex>> members_;
  std::vector<char> used_;
  std::vector<Vertex> order_;
  std::vector<int> rename_;
  int next_name_ = 0;
  std::vector<int> current_;
  std::vector<int> best_;
  bool have_best_ = false;
  int version_ = 0;
};

}  // namespace

std::string canonical_key(const ColoredCompleteGraph& g) {
  const int n = g.order();
  // Degree profile: sorted multiset of color-class sizes at each vertex.
  std::vector<std::vector<int>> profile(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    std::vector<int> count(static_cast<std::size_t>(g.palette_size()), 0);
    for (Vertex w = 0; w < n; ++w) {
      if (w != v) ++count[static_cast<std::size_t>(g.color(v, w))];
    }
    auto& p = profile[static_cast<std::size_t>(v)];
    for (int c : count) {
      if (c > 0) p.push_back(c);
    }
    std::sort(p.rbegin(), p.rend());
  }
  std::vector<std::vector<int>> distinct = profile;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

  std::vector<std::vector<Vertex>> members(distinct.size());
  for (Vertex v = 0; v < n; ++v) {
    auto b = std::lower_bound(distinct.begin(), distinct.end(), profile[static_cast<std::size_t>(v)]) - distinct.begin();
    members[static_cast<std::size_t>(b)].push_back(v);
  }
  std::vector<int> block_of_position;
  for (std::size_t b = 0; b < members.size(); ++b) {
    block_of_position.insert(block_of_position.end(), members[b].size(), static_cast<int>(b));
  }

  std::string key;
  auto put = [&key](int x) {
    key.push_back(static_cast<char>(x & 0xff));
    key.push_back(static_cast<char>((x >> 8) & 0xff));
  };
  put(n);
  put(g.palette_size());
  for (Vertex v = 0; v < n; ++v) {
    // Profiles in block order; equal profiles within a block.
    const auto& p = distinct[static_cast<std::size_t>(block_of_position[static_cast<std::size_t>(v)])];
    put(static_cast<int>(p.size()));
    for (int x : p) put(x);
  }
  CanonicalSearch search(g, block_of_position, members);
  for (int x : search.run()) put(x);
  return key;
}

std::string canonical_key_hex(const ColoredCompleteGraph& g) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  for (unsigned char ch : canonical_key(g)) {
    out.push_back(digits[ch >> 4]);
    out.push_back(digits[ch & 0xf]);
  }
  return out;
}

ColoredCompleteGraph transform(const ColoredCompleteGraph& g, std::span<const Vertex> perm,
                               std::span<const int> relabel) {
  const int n = g.order();
  if (static_cast<int>(perm.size()) != n) throw Error(ErrorKind::BadFormat, "permutation size mismatch");
  if (static_cast<int>(relabel.size()) != g.palette_size()) throw Error(ErrorKind::BadFormat, "relabel size mismatch");
  std::vector<EdgeSpec> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      edges.push_back({perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)],
                       relabel[static_cast<std::size_t>(g.color(u, v))]});
    }
  }
  return ColoredCompleteGraph::build(n, edges);
}

}  // namespace pcc
