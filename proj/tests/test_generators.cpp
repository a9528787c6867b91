#include <gtest/gtest.h>

#include "pcc/classifier.hpp"
#include "pcc/error.hpp"
#include "pcc/generators.hpp"
#include "pcc/json_io.hpp"
#include "pcc/oracle.hpp"
#include "pcc/structure.hpp"
#include "support.hpp"

using namespace pcc;

TEST(Generators, DoublePentagon) {
  auto g = example_k5_double_pentagon();
  EXPECT_FALSE(find_monochromatic_triangle(g));
  EXPECT_EQ(g.palette_size(), 2);
  for (Color c = 0; c < 2; ++c) {
    for (Vertex v = 0; v < 5; ++v) {
      int deg = 0;
      for (Vertex u = 0; u < 5; ++u) deg += (u != v && g.color(u, v) == c);
      EXPECT_EQ(deg, 2);
    }
  }
  EXPECT_EQ(classify(g).tag, TrichotomyTag::ExceptionK5);
}

TEST(Generators, DirectedExample) {
  auto g = example_directed(6);
  EXPECT_FALSE(find_monochromatic_triangle(g));
  auto st = degeneracy_status(g);
  EXPECT_EQ(st.tag, DegeneracyTag::ProperDegenerateSet);
  EXPECT_EQ(st.certificate->set, (std::vector<Vertex>{0, 1, 2}));
  for (Vertex v = 0; v < 6; ++v) {
    for (int len = 3; len <= 6; ++len) {
      for (const auto& c : oracle::pc_cycles(g, v, len)) {
        for (std::size_t i = 0; i < c.size(); ++i) {
          const bool a = c[i] < 3, b = c[(i + 1) % c.size()] < 3;
          EXPECT_EQ(a, b);
        }
      }
    }
  }
  EXPECT_THROW(example_directed(5), Error);
}

TEST(Generators, RandomNoMono) {
  auto g = random_no_mono_triangle(7, 4, 1);
  EXPECT_FALSE(find_monochromatic_triangle(g));
  EXPECT_LE(g.palette_size(), 4);
  try {
    random_no_mono_triangle(6, 2, 77);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BudgetExhausted);
  }
  auto t = random_no_mono_triangle(3, 2, 5);
  EXPECT_EQ(t.order(), 3);
  EXPECT_FALSE(find_monochromatic_triangle(t));
  EXPECT_EQ(random_no_mono_triangle(8, 3, 12), random_no_mono_triangle(8, 3, 12));
}

TEST(Generators, RandomDegenerate) {
  for (std::uint64_t s = 0; s < 50; ++s) {
    const int n = 3 + static_cast<int>(s % 8);
    auto fibers = random_fibers(n, 0, s);
    auto inst = random_degenerate(n, fibers, s);
    EXPECT_TRUE(is_valid_certificate(inst.graph, inst.f));
    EXPECT_EQ(inst.f.set.size(), static_cast<std::size_t>(n));
    EXPECT_FALSE(find_monochromatic_triangle(inst.graph));
  }
  const std::vector<std::vector<Vertex>> bad{{0, 1, 2}, {3}};
  try {
    random_degenerate(4, bad, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BadPartition);
  }
}

TEST(Generators, Gallai) {
  auto five = gallai_coloring(5, 3);
  EXPECT_TRUE(verify_gallai_partition(five.graph, five.partition));
  EXPECT_FALSE(find_pc_triangle(five.graph));
  for (std::uint64_t s = 0; s < 20; ++s) {
    auto gi = gallai_coloring(9, s);
    const auto& g = gi.graph;
    EXPECT_FALSE(find_monochromatic_triangle(g));
    for (Vertex a = 0; a < 9; ++a)
      for (Vertex b = a + 1; b < 9; ++b)
        for (Vertex c = b + 1; c < 9; ++c) {
          std::set<Color> cs{g.color(a, b), g.color(b, c), g.color(a, c)};
          ASSERT_EQ(cs.size(), 2u);
        }
  }
  EXPECT_THROW(gallai_coloring(2, 0), Error);
}

TEST(Generators, ExhaustiveCountsMatchBell) {
  for (int n = 2; n <= 5; ++n) {
    ColoringStream s(n);
    std::uint64_t count = 0;
    while (s.next()) ++count;
    EXPECT_EQ(count, test::bell(n * (n - 1) / 2)) << "n = " << n;
    EXPECT_EQ(s.produced(), count);
  }
  EXPECT_EQ(test::bell(3), 5u);
  EXPECT_THROW(ColoringStream(6), Error);
}

TEST(Generators, ExhaustiveDistinctUpToRelabeling) {
  ColoringStream s(4);
  std::set<std::vector<int>> seen;
  while (auto g = s.next()) {
    std::vector<int> m;
    std::map<Color, int> first;
    for (Vertex u = 0; u < 4; ++u)
      for (Vertex v = u + 1; v < 4; ++v)
        m.push_back(first.try_emplace(g->color(u, v), static_cast<int>(first.size())).first->second);
    EXPECT_TRUE(seen.insert(m).second);
  }
}

TEST(Generators, Determinism) {
  EXPECT_EQ(instance_to_json(gallai_coloring(8, 4).graph).dump(), instance_to_json(gallai_coloring(8, 4).graph).dump());
  auto a = random_degenerate(7, random_fibers(7, 0, 9), 9, true);
  auto b = random_degenerate(7, random_fibers(7, 0, 9), 9, true);
  EXPECT_EQ(a.graph, b.graph);
  EXPECT_EQ(sample_coloring(6, 3), sample_coloring(6, 3));
  EXPECT_NE(derive_seed(1, 0), derive_seed(1, 1));
}

TEST(Generators, FamilyNames) {
  for (const char* name : {"doublePentagon", "directedExample", "randomNoMono", "randomDegenerate", "gallai", "exhaustive"}) {
    auto f = parse_family(name);
    ASSERT_TRUE(f);
    EXPECT_EQ(family_name(*f), name);
  }
  EXPECT_FALSE(parse_family("pentagon"));
}
