#include <gtest/gtest.h>

#include "pcc/digraph.hpp"
#include "pcc/error.hpp"
#include "pcc/generators.hpp"
#include "pcc/oracle.hpp"
#include "pcc/pc_cycles.hpp"
#include "pcc/structure.hpp"
#include "support.hpp"

using namespace pcc;

namespace {

using Arcs = std::vector<std::pair<Vertex, Vertex>>;

MultipartiteTournament transitive(int n) {
  Arcs arcs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) arcs.push_back({u, v});
  return MultipartiteTournament::tournament(n, arcs);
}

std::set<int> keys(const std::map<int, DirectedCycle>& m) {
  std::set<int> out;
  for (const auto& [k, _] : m) out.insert(k);
  return out;
}

std::string precondition_message(const MultipartiteTournament& t, Vertex v) {
  try {
    mpt_cycles_through(t, v);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::PreconditionViolated) return e.what();
    return "wrong kind";
  }
  return "no error";
}

}  // namespace

TEST(Tournament, Construction) {
  const Arcs a{{0, 1}, {1, 2}, {2, 0}};
  auto t = MultipartiteTournament::tournament(3, a);
  EXPECT_TRUE(t.is_tournament());
  EXPECT_TRUE(t.arc(0, 1));
  EXPECT_FALSE(t.arc(1, 0));
  EXPECT_EQ(t.out_neighbors(0), std::vector<Vertex>{1});
  EXPECT_EQ(t.in_neighbors(0), std::vector<Vertex>{2});

  const Arcs missing{{0, 1}, {1, 2}};
  EXPECT_THROW(MultipartiteTournament::tournament(3, missing), Error);
  const Arcs both{{0, 1}, {1, 0}, {1, 2}, {2, 0}};
  EXPECT_THROW(MultipartiteTournament::tournament(3, both), Error);
  const Arcs inside{{0, 1}, {0, 2}, {1, 2}};
  EXPECT_THROW(MultipartiteTournament({{0, 1}, {2}}, inside), Error);
  EXPECT_THROW(MultipartiteTournament({{0, 1, 2}}, Arcs{}), Error);
}

TEST(Tournament, StrongConnectivity) {
  const Arcs a{{0, 1}, {1, 2}, {2, 0}};
  EXPECT_TRUE(is_strongly_connected(MultipartiteTournament::tournament(3, a)));
  EXPECT_FALSE(is_strongly_connected(transitive(4)));
}

TEST(Moon, ThreeCycle) {
  const Arcs a{{0, 1}, {1, 2}, {2, 0}};
  auto t = MultipartiteTournament::tournament(3, a);
  auto m = cycles_through(t, 0);
  ASSERT_EQ(keys(m), std::set<int>{3});
  EXPECT_TRUE(is_directed_cycle(t, m.at(3)));
  EXPECT_TRUE(m.at(3).contains(0));
}

TEST(Moon, TransitiveRejected) {
  try {
    cycles_through(transitive(4), 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotStronglyConnected);
  }
}

TEST(Moon, RandomAgainstOracle) {
  for (std::uint64_t s = 0; s < 60; ++s) {
    const int n = 3 + static_cast<int>(s % 6);
    auto t = test::random_strong_tournament(n, s);
    for (Vertex v = 0; v < n; ++v) {
      auto m = cycles_through(t, v);
      for (const auto& [len, c] : m) {
        EXPECT_EQ(static_cast<int>(c.length()), len);
        EXPECT_TRUE(is_directed_cycle(t, c));
        EXPECT_TRUE(c.contains(v));
      }
      EXPECT_EQ(keys(m), oracle::directed_cycle_lengths(t, v)) << "seed " << s << " v " << v;
    }
  }
}

TEST(Mpt, PairQuadrangle) {
  // x1 = 0, y1 = 1, a = 2, b = 3
  const Arcs arcs{{0, 2}, {2, 1}, {1, 3}, {3, 0}, {2, 3}};
  MultipartiteTournament t({{0, 1}, {2}, {3}}, arcs);
  ASSERT_TRUE(t.out_neighborhoods_disjoint());
  auto m = mpt_cycles_through(t, 0);
  ASSERT_EQ(keys(m), std::set<int>{4});
  EXPECT_EQ(m.at(4).vertices.size(), 4u);
  EXPECT_TRUE(is_directed_cycle(t, m.at(4)));
}

TEST(Mpt, SingletonFiveTournamentMatchesMoon) {
  for (std::uint64_t s = 0; s < 10; ++s) {
    auto t = test::random_strong_tournament(5, 100 + s);
    for (Vertex v = 0; v < 5; ++v) {
      auto m = mpt_cycles_through(t, v);
      auto moon = keys(cycles_through(t, v));
      moon.erase(3);
      EXPECT_EQ(keys(m), moon);
      EXPECT_EQ(keys(m), (std::set<int>{4, 5}));
    }
  }
}

TEST(Mpt, Preconditions) {
  // 0 and 1 both dominate 2.
  const Arcs shared{{0, 2}, {1, 2}, {2, 3}, {3, 0}, {3, 1}};
  MultipartiteTournament t({{0, 1}, {2}, {3}}, shared);
  EXPECT_NE(precondition_message(t, 0).find("disjointness"), std::string::npos);

  EXPECT_NE(precondition_message(transitive(4), 0).find("connectivity"), std::string::npos);
  const Arcs a{{0, 1}, {1, 2}, {2, 0}};
  EXPECT_NE(precondition_message(MultipartiteTournament::tournament(3, a), 0).find("size:"), std::string::npos);
}

TEST(Mpt, RandomAgainstOracleAndConstructive) {
  for (std::uint64_t s = 0; s < 60; ++s) {
    const int n = 4 + static_cast<int>(s % 5);
    auto t = test::random_valid_mpt(n, s);
    for (Vertex v = 0; v < n; ++v) {
      CycleStats st;
      auto m = mpt_cycles_through(t, v, &st);
      for (const auto& [len, c] : m) {
        EXPECT_TRUE(is_directed_cycle(t, c));
        EXPECT_TRUE(c.contains(v));
      }
      auto expected = oracle::directed_cycle_lengths(t, v);
      expected.erase(3);
      EXPECT_EQ(keys(m), expected);
      if (n <= 6) {
        EXPECT_EQ(st.fallbacks, 0) << "seed " << s << " v " << v;
        EXPECT_EQ(st.quadrangle_fallback, 0) << "seed " << s << " v " << v;
      }
    }
  }
}

TEST(Reduction, DirectedExampleTriangle) {
  auto g = example_directed(6);
  auto st = degeneracy_status(g);
  ASSERT_TRUE(st.certificate);
  // Restrict to {v1, v2, v3}: the sub-instance is a rainbow triangle and f is full on it.
  const std::vector<EdgeSpec> tri{{0, 1, 1}, {1, 2, 2}, {0, 2, 3}};
  auto h = ColoredCompleteGraph::build(3, tri);
  DegeneracyCertificate f{{0, 1, 2}, {{0, 0}, {1, 1}, {2, 2}}};
  auto d = reduce_degenerate(h, f);
  EXPECT_TRUE(d.arc(0, 1));
  EXPECT_TRUE(d.arc(1, 2));
  EXPECT_TRUE(d.arc(2, 0));
  EXPECT_TRUE(is_strongly_connected(d));

  auto pc = lift_cycle(h, f, DirectedCycle{{0, 1, 2}});
  EXPECT_TRUE(is_pc_cycle(h, pc.vertices()));
  EXPECT_EQ(h.label(h.color(0, 1)), 1);
  EXPECT_EQ(h.label(h.color(1, 2)), 2);
  EXPECT_EQ(h.label(h.color(2, 0)), 3);
  EXPECT_THROW(lift_cycle(h, f, DirectedCycle{{0, 2, 1}}), Error);
}

TEST(Reduction, ArcCountAndLifting) {
  for (std::uint64_t s = 0; s < 40; ++s) {
    const int n = 4 + static_cast<int>(s % 6);
    auto inst = random_degenerate(n, random_fibers(n, 0, s), s, true);
    auto d = reduce_degenerate(inst.graph, inst.f);
    std::size_t cross = 0;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (inst.f.assign.at(u) != inst.f.assign.at(v)) ++cross;
    EXPECT_EQ(d.arcs().size(), cross);
    for (const auto& p : d.parts()) EXPECT_LE(p.size(), 2u);
    EXPECT_TRUE(d.out_neighborhoods_disjoint());
    auto m = mpt_cycles_through(d, 0);
    for (const auto& [len, c] : m) {
      auto pc = lift_cycle(inst.graph, inst.f, c);
      EXPECT_TRUE(is_pc_cycle(inst.graph, pc.vertices()));
      EXPECT_EQ(static_cast<int>(pc.length()), len);
    }
  }
}

TEST(Reduction, Errors) {
  auto g = test::rainbow(4);
  DegeneracyCertificate f{{0, 1, 2, 3}, {{0, 0}, {1, 1}, {2, 2}, {3, 3}}};
  try {
    reduce_degenerate(g, f);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::IncompatibleFunction);
  }

  auto mono = test::monochromatic(3);
  DegeneracyCertificate all{{0, 1, 2}, {{0, 0}, {1, 0}, {2, 0}}};
  try {
    reduce_degenerate(mono, all);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::FiberTooLarge);
  }
}
