#include <gtest/gtest.h>

#include "gog/errors.hpp"
#include "gog/oracle.hpp"
#include "gog/stallings.hpp"

using gog::LabeledGraph;
using gog::Word;

namespace {

LabeledGraph from(const char* words, int rank) { return gog::graph_from_words(gog::parse_word_list(words), rank); }

// Bouquet of the given words before any folding, based at 0.
LabeledGraph unfolded(const char* words) {
  LabeledGraph g(1, 0);
  for (const Word& w : gog::parse_word_list(words)) {
    int at = 0;
    for (std::size_t i = 0; i < w.length(); ++i) {
      int next = i + 1 == w.length() ? 0 : g.add_vertex();
      if (w[i].sign > 0) {
        g.add_edge(at, next, w[i].generator);
      } else {
        g.add_edge(next, at, w[i].generator);
      }
      at = next;
    }
  }
  return g;
}

}  // namespace

TEST(Fold, ProducesFoldedGraphAndMorphism) {
  LabeledGraph g = unfolded("ab,aB,ba");
  auto r = gog::fold(g);
  EXPECT_TRUE(r.graph.is_folded());
  EXPECT_TRUE(gog::is_morphism(g, r.graph, r.quotient));
  EXPECT_EQ(r.graph.basepoint(), std::optional<int>(r.quotient.vertex_map[0]));
}

TEST(Fold, FoldedInputIsUnchanged) {
  LabeledGraph g = from("ab,ba", 2);
  auto r = gog::fold(g);
  EXPECT_EQ(r.graph, g);
  EXPECT_EQ(r.quotient, gog::GraphMorphism::identity(g));
}

TEST(Fold, CancellingPairCollapses) {
  LabeledGraph g = from("aA", 1);
  EXPECT_EQ(g.vertex_count(), 1);
  EXPECT_EQ(g.edge_count(), 0);
  EXPECT_EQ(gog::subgroup_rank(g), 0);
}

TEST(Fold, SquaresGiveRankThree) {
  LabeledGraph g = from("aa,ab,bb", 2);
  EXPECT_EQ(gog::subgroup_rank(g), 3);
  EXPECT_EQ(g.euler_characteristic(), -2);
  EXPECT_TRUE(g.is_core());
}

TEST(Fold, FullGroupIsRose) {
  LabeledGraph g = from("a,b,ab", 2);
  EXPECT_EQ(g.vertex_count(), 1);
  EXPECT_EQ(g.edge_count(), 2);
}

TEST(Fold, AlphabetChecked) { EXPECT_THROW(from("c", 2), gog::AlphabetError); }

TEST(Core, TrimsHairButKeepsBase) {
  LabeledGraph g(3, 0);
  g.add_edge(0, 1, 0);
  g.add_edge(1, 1, 1);
  g.add_edge(1, 2, 0);
  LabeledGraph c = gog::core(g, 0);
  EXPECT_EQ(c.vertex_count(), 2);
  EXPECT_EQ(c.edge_count(), 2);
  LabeledGraph free_core = gog::core(g, std::nullopt);
  EXPECT_EQ(free_core.vertex_count(), 1);
  LabeledGraph tree(2);
  tree.add_edge(0, 1, 0);
  EXPECT_EQ(gog::core(tree, std::nullopt).vertex_count(), 0);
}

TEST(Membership, ConjugateExample) {
  LabeledGraph g = from("a,baB", 2);
  EXPECT_TRUE(gog::contains(g, Word::parse("baaB")));
  EXPECT_TRUE(gog::contains(g, Word::parse("abaBA")));
  EXPECT_FALSE(gog::contains(g, Word::parse("b")));
  EXPECT_FALSE(gog::contains(g, Word::parse("aba")));
  EXPECT_TRUE(gog::contains(g, Word()));
}

TEST(Membership, AgreesWithOracleOnBall) {
  for (const char* gens : {"aa,b", "ab,ba", "aba,bB", "aab,bab"}) {
    auto ws = gog::parse_word_list(gens);
    auto elements = gog::oracle::enumerate_elements(ws, 10);
    LabeledGraph g = gog::graph_from_words(ws, 2);
    gog::TransitionTable table(g);
    for (const Word& w : gog::ball(2, 6)) {
      EXPECT_EQ(table.accepts(w), elements.count(w) > 0) << gens << " " << w.to_string();
    }
  }
}

TEST(Membership, TraceStepsThroughPaths) {
  LabeledGraph g = from("ab", 2);
  auto end = gog::trace(g, 0, Word::parse("a"));
  ASSERT_TRUE(end);
  EXPECT_NE(*end, 0);
  EXPECT_FALSE(gog::trace(g, 0, Word::parse("b")));
}

TEST(Lift, SubgroupLiftsAndOthersDoNot) {
  LabeledGraph h = from("a,bab", 2);
  LabeledGraph sub = from("aa,babbab", 2);
  auto f = gog::lift(sub, h);
  ASSERT_TRUE(f);
  EXPECT_TRUE(gog::is_immersion(sub, h, *f));
  EXPECT_EQ(f->vertex_map[0], 0);
  EXPECT_FALSE(gog::lift(from("b", 2), h));
}

TEST(Lift, DisconnectedSourceRejected) {
  LabeledGraph g(2, 0);
  g.add_edge(0, 0, 0);
  g.add_edge(1, 1, 0);
  EXPECT_THROW(gog::lift(g, from("a", 1)), gog::PreconditionError);
}

TEST(Join, GeneratedSubgroup) {
  LabeledGraph j = gog::join(from("a", 3), from("b", 3));
  EXPECT_EQ(gog::subgroup_rank(j), 2);
  EXPECT_TRUE(gog::contains(j, Word::parse("abAB")));
  LabeledGraph whole = gog::join(from("ab,c", 3), from("b", 3));
  EXPECT_EQ(gog::subgroup_rank(whole), 3);
  EXPECT_EQ(whole.vertex_count(), 1);
}

TEST(Basis, GeneratesSameSubgroup) {
  for (const char* gens : {"aa,ab,bb", "a,baB", "abA,bab", "aBAb,bb"}) {
    LabeledGraph g = from(gens, 2);
    auto basis = gog::fundamental_group_basis(g);
    EXPECT_EQ(static_cast<int>(basis.size()), gog::subgroup_rank(g));
    EXPECT_TRUE(gog::are_isomorphic(gog::graph_from_words(basis, 2), g, true)) << gens;
  }
}
