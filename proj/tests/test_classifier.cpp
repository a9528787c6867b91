#include <gtest/gtest.h>

#include <random>

#include "pcc/classifier.hpp"
#include "pcc/error.hpp"
#include "pcc/generators.hpp"
#include "pcc/oracle.hpp"
#include "pcc/pc_cycles.hpp"
#include "pcc/structure.hpp"
#include "support.hpp"

using namespace pcc;

TEST(DoublePentagon, Canonical) {
  auto g = double_pentagon_k5();
  EXPECT_EQ(g, test::double_pentagon());
  auto phi = is_double_pentagon_k5(g);
  ASSERT_TRUE(phi);
  EXPECT_EQ(*phi, (std::vector<Vertex>{0, 1, 2, 3, 4}));
}

TEST(DoublePentagon, RelabeledInstances) {
  std::mt19937_64 rng(5);
  auto base = test::double_pentagon();
  auto canon = double_pentagon_k5();
  const std::vector<int> relabel{9, 4};
  for (int i = 0; i < 30; ++i) {
    auto p = test::random_permutation(5, rng);
    auto g = transform(base, p, relabel);
    auto phi = is_double_pentagon_k5(g);
    ASSERT_TRUE(phi);
    // phi must carry each color class of g onto a single color class.
    std::map<Color, Color> m;
    for (Vertex u = 0; u < 5; ++u) {
      for (Vertex v = u + 1; v < 5; ++v) {
        auto [it, fresh] = m.try_emplace(g.color(u, v), canon.color((*phi)[u], (*phi)[v]));
        EXPECT_EQ(it->second, canon.color((*phi)[u], (*phi)[v]));
      }
    }
    EXPECT_EQ(m.size(), 2u);
  }
}

TEST(DoublePentagon, Negatives) {
  EXPECT_FALSE(is_double_pentagon_k5(test::rainbow(4)));
  EXPECT_FALSE(is_double_pentagon_k5(test::rainbow(5)));
  // Two colors but one class is not a pentagon.
  std::vector<EdgeSpec> e;
  for (Vertex u = 0; u < 5; ++u)
    for (Vertex v = u + 1; v < 5; ++v) e.push_back({u, v, (u == 0) ? 1 : 2});
  EXPECT_FALSE(is_double_pentagon_k5(ColoredCompleteGraph::build(5, e)));
}

TEST(Classify, DoublePentagon) {
  auto g = test::double_pentagon();
  auto r = classify(g);
  EXPECT_EQ(r.tag, TrichotomyTag::ExceptionK5);
  EXPECT_EQ(tag_letter(r.tag), 'c');
  ASSERT_TRUE(r.bijection);
  EXPECT_TRUE(validate_result(g, r));
}

TEST(Classify, DirectedExample) {
  auto g = example_directed(6);
  auto r = classify(g);
  EXPECT_EQ(r.tag, TrichotomyTag::ProperDegenerate);
  ASSERT_TRUE(r.degenerate_set);
  EXPECT_EQ(r.degenerate_set->set, (std::vector<Vertex>{0, 1, 2}));
  EXPECT_TRUE(validate_result(g, r));
}

TEST(Classify, RainbowK4) {
  auto g = test::rainbow(4);
  auto r = classify(g);
  EXPECT_EQ(r.tag, TrichotomyTag::Pancyclic);
  EXPECT_EQ(r.cycles.size(), 4u);
  for (Vertex v = 0; v < 4; ++v) {
    const auto& c = r.cycles.at({v, 4});
    EXPECT_TRUE(c.contains(v));
    EXPECT_TRUE(is_pc_cycle(g, c.vertices()));
  }
  EXPECT_TRUE(oracle::pc_pancyclic_from_four(g));
  EXPECT_EQ(oracle::degeneracy_tag(oracle::degeneracy(g)), DegeneracyTag::NonDegenerate);
}

TEST(Classify, RejectsInvalidInputs) {
  try {
    classify(test::monochromatic(4));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::MonochromaticTrianglePresent);
  }
  try {
    classify(test::rainbow(3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::TooSmall);
  }
}

TEST(Classify, ValidateCatchesTampering) {
  auto g = test::rainbow(5);
  auto r = classify(g);
  ASSERT_TRUE(validate_result(g, r));
  auto bad = r;
  bad.cycles.erase(bad.cycles.begin());
  EXPECT_FALSE(validate_result(g, bad));
  bad = r;
  bad.tag = TrichotomyTag::ExceptionK5;
  EXPECT_FALSE(validate_result(g, bad));
  EXPECT_FALSE(validate_result(test::double_pentagon(), r));
}

TEST(Classify, DegenerateReductionRoute) {
  for (std::uint64_t s = 0; s < 40; ++s) {
    const int n = 4 + static_cast<int>(s % 6);
    auto inst = random_degenerate(n, random_fibers(n, 0, s), s, true);
    auto r = classify(inst.graph);
    ASSERT_EQ(r.tag, TrichotomyTag::Pancyclic) << "seed " << s;
    EXPECT_EQ(r.route, TrichotomyResult::Route::DegenerateReduction);
    EXPECT_TRUE(validate_result(inst.graph, r));
  }
}

TEST(Classify, AgreesWithOracleSmall) {
  std::mt19937_64 rng(23);
  int done = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int n = std::uniform_int_distribution<int>(4, 6)(rng);
    auto g = sample_coloring(n, rng());
    if (find_monochromatic_triangle(g)) continue;
    ++done;
    auto r = classify(g);
    ASSERT_TRUE(validate_result(g, r));
    EXPECT_EQ(r.tag == TrichotomyTag::Pancyclic, oracle::pc_pancyclic_from_four(g)) << "trial " << trial;
  }
  EXPECT_GT(done, 50);
}

TEST(SideConditions, Examples) {
  auto g = test::double_pentagon();
  auto s = side_conditions(g, classify(g));
  EXPECT_EQ(s.min_color_degree, 2);
  EXPECT_EQ(s.max_mono_degree, 2);
  EXPECT_FALSE(s.fujita_holds);
  EXPECT_FALSE(s.bollobas_erdos_holds);
  EXPECT_TRUE(s.exception_cases_ok);
  EXPECT_TRUE(s.corollary_ok);

  auto d = example_directed(6);
  auto sd = side_conditions(d, classify(d));
  EXPECT_LT(2 * sd.min_color_degree, 7);
  EXPECT_GE(sd.max_mono_degree, 3);
  EXPECT_TRUE(sd.exception_cases_ok);

  auto r = test::rainbow(4);
  auto sr = side_conditions(r, classify(r));
  EXPECT_TRUE(sr.fujita_holds);
  EXPECT_TRUE(sr.bollobas_erdos_holds);
  EXPECT_TRUE(sr.corollary_instance);
  EXPECT_TRUE(sr.corollary_ok);
}

TEST(SideConditions, MismatchedResult) {
  auto r = classify(test::rainbow(4));
  EXPECT_THROW(side_conditions(test::rainbow(5), r), Error);
}
