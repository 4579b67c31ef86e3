#include <gtest/gtest.h>

#include <set>

#include "gog/errors.hpp"
#include "gog/word.hpp"

using gog::Letter;
using gog::Word;

TEST(Word, ParseLowerUpperAndExponent) {
  Word w = Word::parse("abA");
  ASSERT_EQ(w.length(), 3u);
  EXPECT_EQ(w[0], (Letter{0, 1}));
  EXPECT_EQ(w[1], (Letter{1, 1}));
  EXPECT_EQ(w[2], (Letter{0, -1}));
  EXPECT_EQ(Word::parse("ab^-1"), Word::parse("aB"));
  EXPECT_EQ(Word::parse("{27}"), Word::generator(27));
}

TEST(Word, IdentitySpellings) {
  EXPECT_TRUE(Word::parse("1").is_identity());
  EXPECT_TRUE(Word::parse("e").is_identity());
  EXPECT_TRUE(Word::parse("aA").is_identity());
  EXPECT_EQ(Word().to_string(), "1");
}

TEST(Word, FreeReduction) {
  EXPECT_EQ(Word::parse("abBa"), Word::parse("aa"));
  EXPECT_EQ(Word::parse("abBA").length(), 0u);
  Word x = Word::parse("abc");
  EXPECT_TRUE((x * x.inverse()).is_identity());
  EXPECT_EQ(x.cancellation_with(Word::parse("CBa")), 2u);
}

TEST(Word, InverseIsInvolution) {
  for (const Word& w : gog::ball(2, 4)) {
    EXPECT_EQ(w.inverse().inverse(), w);
    EXPECT_EQ(Word::parse(w.to_string()), w);
  }
}

TEST(Word, CyclicallyReduced) {
  EXPECT_TRUE(Word::parse("ab").is_cyclically_reduced());
  EXPECT_FALSE(Word::parse("abA").is_cyclically_reduced());
  EXPECT_TRUE(Word().is_cyclically_reduced());
}

TEST(Word, MaxGenerator) {
  EXPECT_EQ(Word().max_generator(), -1);
  EXPECT_EQ(Word::parse("aCb").max_generator(), 2);
}

TEST(Word, ParseErrors) {
  EXPECT_THROW(Word::parse("a+b"), gog::ParseError);
  EXPECT_THROW(Word::parse("{12"), gog::ParseError);
  EXPECT_THROW(Word::parse("{x}"), gog::ParseError);
}

TEST(Word, ParseWordList) {
  auto ws = gog::parse_word_list("aa, ab ,  B");
  ASSERT_EQ(ws.size(), 3u);
  EXPECT_EQ(ws[2], Word::parse("B"));
  EXPECT_TRUE(gog::parse_word_list("  ").empty());
}

TEST(Word, BallSizes) {
  // 1 + sum_k 2r(2r-1)^(k-1)
  for (int rank : {1, 2, 3}) {
    long expected = 1, layer = 2 * rank;
    for (int k = 1; k <= 5; ++k) {
      expected += layer;
      layer *= 2 * rank - 1;
    }
    auto b = gog::ball(rank, 5);
    EXPECT_EQ(static_cast<long>(b.size()), expected) << "rank " << rank;
    std::set<Word> distinct(b.begin(), b.end());
    EXPECT_EQ(distinct.size(), b.size());
  }
}

TEST(Word, GeneratorNames) {
  EXPECT_EQ(gog::generator_name(0), "a");
  EXPECT_EQ(gog::generator_name(25), "z");
  EXPECT_EQ(gog::generator_name(26), "{26}");
}
