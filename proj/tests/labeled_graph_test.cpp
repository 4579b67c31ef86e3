#include <gtest/gtest.h>

#include "gog/errors.hpp"
#include "gog/labeled_graph.hpp"

using gog::GraphMorphism;
using gog::LabeledGraph;

namespace {

LabeledGraph rose(int loops) {
  LabeledGraph g(1, 0);
  for (int l = 0; l < loops; ++l) g.add_edge(0, 0, l);
  return g;
}

LabeledGraph path(int edges) {
  LabeledGraph g(edges + 1);
  for (int e = 0; e < edges; ++e) g.add_edge(e, e + 1, e % 2);
  return g;
}

}  // namespace

TEST(LabeledGraph, EulerCharacteristic) {
  for (int r = 0; r < 5; ++r) EXPECT_EQ(rose(r).euler_characteristic(), 1 - r);
  for (int n = 0; n < 6; ++n) EXPECT_EQ(path(n).euler_characteristic(), 1);
  LabeledGraph u = gog::disjoint_union(rose(3), path(4));
  EXPECT_EQ(u.euler_characteristic(), rose(3).euler_characteristic() + path(4).euler_characteristic());
}

TEST(LabeledGraph, LoopsCountTwice) {
  auto val = rose(2).valences();
  EXPECT_EQ(val[0], 4);
}

TEST(LabeledGraph, FoldedAndCorePredicates) {
  LabeledGraph g(2, 0);
  g.add_edge(0, 1, 0);
  g.add_edge(0, 0, 0);
  EXPECT_FALSE(g.is_folded());
  EXPECT_FALSE(g.is_core());
  EXPECT_TRUE(rose(2).is_folded());
  EXPECT_TRUE(rose(2).is_core());
  LabeledGraph hair(2, 0);
  hair.add_edge(0, 1, 1);
  EXPECT_TRUE(hair.is_folded());
  EXPECT_FALSE(hair.is_core());
}

TEST(LabeledGraph, RangeChecks) {
  LabeledGraph g(2);
  EXPECT_THROW(g.add_edge(0, 2, 0), gog::PreconditionError);
  EXPECT_THROW(g.set_basepoint(5), gog::PreconditionError);
}

TEST(Morphism, IdentityIsImmersion) {
  LabeledGraph g = rose(2);
  EXPECT_TRUE(gog::is_immersion(g, g, GraphMorphism::identity(g)));
  EXPECT_TRUE(gog::is_embedding(g, g, GraphMorphism::identity(g)));
}

TEST(Morphism, TwoLoopsOntoOneIsNotImmersion) {
  LabeledGraph two(1);
  two.add_edge(0, 0, 0);
  two.add_edge(0, 0, 0);
  LabeledGraph one = rose(1);
  GraphMorphism m{{0}, {0, 0}};
  EXPECT_TRUE(gog::is_morphism(two, one, m));
  EXPECT_FALSE(gog::is_immersion(two, one, m));
}

TEST(Morphism, DoubleCoverIsImmersion) {
  LabeledGraph cycle(2);
  cycle.add_edge(0, 1, 0);
  cycle.add_edge(1, 0, 0);
  GraphMorphism m{{0, 0}, {0, 0}};
  EXPECT_TRUE(gog::is_immersion(cycle, rose(1), m));
  EXPECT_FALSE(gog::is_embedding(cycle, rose(1), m));
}

TEST(Morphism, LabelMismatchIsNotMorphism) {
  GraphMorphism m{{0}, {0}};
  LabeledGraph a = rose(1);
  LabeledGraph b(1);
  b.add_edge(0, 0, 1);
  EXPECT_FALSE(gog::is_morphism(a, b, m));
}

TEST(Components, ProfileAndCount) {
  LabeledGraph u = gog::disjoint_union(gog::disjoint_union(rose(2), path(3)), rose(1));
  EXPECT_EQ(gog::component_count(u), 3);
  EXPECT_EQ(gog::betti_profile(u), (std::vector<int>{0, 1, 2}));
  auto ids = gog::component_ids(u);
  EXPECT_EQ(ids[0], 0);
  EXPECT_EQ(ids[1], 1);
}

TEST(Restrict, DropsDanglingEdges) {
  LabeledGraph g = path(3);
  auto r = gog::restrict_graph(g, {1, 1, 0, 1}, {1, 1, 1});
  EXPECT_EQ(r.graph.vertex_count(), 3);
  EXPECT_EQ(r.graph.edge_count(), 1);
  EXPECT_EQ(r.vertex_index[2], -1);
  EXPECT_EQ(r.inclusion.vertex_map[2], 3);
  EXPECT_TRUE(gog::is_embedding(r.graph, g, r.inclusion));
}

TEST(Isomorphism, RelabelingIsFound) {
  LabeledGraph a(3, 0);
  a.add_edge(0, 1, 0);
  a.add_edge(1, 2, 1);
  a.add_edge(2, 0, 0);
  LabeledGraph b(3, 2);
  b.add_edge(2, 0, 0);
  b.add_edge(0, 1, 1);
  b.add_edge(1, 2, 0);
  auto iso = gog::find_isomorphism(a, b, true);
  ASSERT_TRUE(iso);
  EXPECT_TRUE(gog::is_morphism(a, b, *iso));
  EXPECT_TRUE(gog::is_embedding(a, b, *iso));
  LabeledGraph c = b;
  c.set_basepoint(0);
  EXPECT_FALSE(gog::are_isomorphic(a, c, true));
  EXPECT_TRUE(gog::are_isomorphic(a, c, false));
}

TEST(Isomorphism, OrientationMatters) {
  LabeledGraph a(2);
  a.add_edge(0, 1, 0);
  a.add_edge(0, 1, 1);
  LabeledGraph b(2);
  b.add_edge(0, 1, 0);
  b.add_edge(1, 0, 1);
  EXPECT_FALSE(gog::are_isomorphic(a, b));
}

TEST(TextFormat, RoundTrip) {
  LabeledGraph g(3, 1);
  g.add_edge(0, 1, 0);
  g.add_edge(1, 2, 27);
  g.add_edge(2, 2, 2);
  LabeledGraph back = gog::graph_from_text(gog::to_text(g));
  EXPECT_EQ(back, g);
}

TEST(TextFormat, ErrorsCarryLine) {
  try {
    gog::graph_from_text("graph 2\nedge 0 1 a\nedge 0 7 a\n");
    FAIL() << "expected a parse error";
  } catch (const gog::ParseError& e) {
    EXPECT_EQ(e.line(), 3);
  }
}

TEST(Dot, SingleLoopAndDeterminism) {
  std::string dot = gog::to_dot(rose(1));
  EXPECT_NE(dot.find("v0 -> v0 [label=\"a\"]"), std::string::npos);
  EXPECT_EQ(dot, gog::to_dot(rose(1)));
}
