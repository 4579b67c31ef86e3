#include <gtest/gtest.h>

#include "gog/errors.hpp"
#include "gog/oracle.hpp"
#include "gog/stallings.hpp"

using gog::Word;
using gog::oracle::WordSet;

namespace {

std::vector<Word> words(const char* text) { return gog::parse_word_list(text); }

}  // namespace

TEST(Oracle, PowersOfA) {
  WordSet s = gog::oracle::enumerate_elements(words("a"), 3);
  WordSet expected;
  for (const char* w : {"1", "a", "A", "aa", "AA", "aaa", "AAA"}) expected.insert(Word::parse(w));
  EXPECT_EQ(s, expected);
}

TEST(Oracle, TrivialGroup) {
  WordSet s = gog::oracle::enumerate_elements({}, 5);
  EXPECT_EQ(s.size(), 1u);
  EXPECT_TRUE(s.count(Word()));
}

TEST(Oracle, CapGuard) {
  EXPECT_THROW(gog::oracle::enumerate_elements(words("a"), 13), gog::OracleLimitError);
}

TEST(Oracle, WholeGroupIsBall) {
  EXPECT_EQ(gog::oracle::enumerate_elements(words("a,b"), 5).size(), gog::ball(2, 5).size());
}

TEST(Oracle, AgreesWithGraphOnBall) {
  auto g = words("aa,b");
  WordSet s = gog::oracle::enumerate_elements(g, 4);
  auto graph = gog::graph_from_words(g, 2);
  for (const Word& w : gog::ball(2, 4)) EXPECT_EQ(s.count(w) > 0, gog::contains(graph, w)) << w.to_string();
}

TEST(Oracle, Monotone) {
  auto g = words("ab,bab");
  WordSet small = gog::oracle::enumerate_elements(g, 5);
  WordSet big = gog::oracle::enumerate_elements(g, 8);
  for (const Word& w : small) EXPECT_TRUE(big.count(w));
}

TEST(Oracle, ElementsAreSound) {
  for (const char* gens : {"ab,ba", "aab,bB", "aBA,bb"}) {
    auto g = words(gens);
    auto graph = gog::graph_from_words(g, 2);
    for (const Word& w : gog::oracle::enumerate_elements(g, 8)) EXPECT_TRUE(gog::contains(graph, w));
  }
}

TEST(Oracle, NielsenReduction) {
  auto r = gog::oracle::nielsen_reduce(words("ab,abb,1"));
  EXPECT_TRUE(gog::oracle::is_nielsen_reduced(r));
  EXPECT_EQ(r.size(), 2u);
  EXPECT_FALSE(gog::oracle::is_nielsen_reduced(words("ab,abb")));
  EXPECT_TRUE(gog::oracle::is_nielsen_reduced(words("a,b")));
}

TEST(Oracle, IntersectionExamples) {
  EXPECT_EQ(gog::oracle::brute_intersection(words("a"), words("b"), 6).size(), 1u);
  auto g = words("ab,ba");
  EXPECT_EQ(gog::oracle::brute_intersection(g, g, 6), gog::oracle::enumerate_elements(g, 6));
  WordSet s = gog::oracle::brute_intersection(words("a,baB"), words("a,Bab"), 8);
  WordSet powers;
  Word p;
  powers.insert(p);
  for (int k = 1; k <= 8; ++k) {
    p = p * Word::parse("a");
    powers.insert(p);
    powers.insert(p.inverse());
  }
  EXPECT_EQ(s, powers);
}
