#include <gtest/gtest.h>

#include "gog/errors.hpp"
#include "gog/io.hpp"
#include "gog/reduction.hpp"

namespace {

const char* kInstance =
    "# two roses meeting in b\n"
    "rank 3\n"
    "subgroup H1: a, b\n"
    "subgroup H2: b c\n"
    "edge H1 H2: b   # the intersection\n";

int line_of(const std::string& text) {
  try {
    gog::parse_instance(text);
  } catch (const gog::ParseError& e) {
    return e.line();
  }
  return -1;
}

int count(const std::string& text, const std::string& needle) {
  int n = 0;
  for (auto at = text.find(needle); at != std::string::npos; at = text.find(needle, at + 1)) ++n;
  return n;
}

}  // namespace

TEST(InstanceFile, Parses) {
  gog::Instance inst = gog::parse_instance(kInstance);
  EXPECT_EQ(inst.rank, 3);
  ASSERT_EQ(inst.vertex_groups.size(), 2u);
  EXPECT_EQ(inst.vertex_groups[1].name, "H2");
  EXPECT_EQ(inst.vertex_groups[1].generators.size(), 2u);
  ASSERT_EQ(inst.edge_groups.size(), 1u);
  EXPECT_EQ(inst.edge_groups[0].name, "M1");
  EXPECT_EQ(inst.edge_groups[0].first, 0);
  EXPECT_EQ(inst.edge_groups[0].second, 1);
}

TEST(InstanceFile, RoundTrip) {
  gog::Instance inst = gog::parse_instance(kInstance);
  gog::Instance back = gog::parse_instance(gog::instance_to_text(inst));
  EXPECT_EQ(gog::instance_to_text(back), gog::instance_to_text(inst));
}

TEST(InstanceFile, ErrorsCarryLineNumbers) {
  EXPECT_EQ(line_of("rank 2\nsubgroup H1: a\nedge H1 H9: a\n"), 3);
  EXPECT_EQ(line_of("rank 2\n\nsubgroup H1: c\n"), 3);
  EXPECT_EQ(line_of("subgroup H1: a\n"), 1);
  EXPECT_EQ(line_of("rank 2\nfrobnicate\n"), 2);
  EXPECT_EQ(line_of("rank 2\nsubgroup H1: a\nsubgroup H1: b\n"), 3);
  EXPECT_THROW(gog::parse_instance("# nothing\n"), gog::ParseError);
}

TEST(GogFile, RoundTrip) {
  gog::GraphOfGraphs x = gog::build_representing(gog::parse_instance(kInstance));
  std::string text = gog::gog_to_text(x);
  gog::GraphOfGraphs back = gog::gog_from_text(text);
  EXPECT_EQ(back, x);
  EXPECT_EQ(gog::gog_to_text(back), text);

  gog::GraphOfGraphs r = gog::reduce_to_valence_three(x, {}).space;
  EXPECT_EQ(gog::gog_from_text(gog::gog_to_text(r)), r);
}

TEST(GogFile, RejectsInvalidAttachments) {
  std::string bad =
      "gog\n"
      "vspace 0 vertices 2\n"
      "side 0 1\n"
      "espace 0 from 0 to 0 label 0 vertices 2\n"
      "iota-v 0 0\n"
      "tau-v 0 1\n"
      "end\n";
  EXPECT_THROW(gog::gog_from_text(bad), gog::ParseError);
  try {
    gog::gog_from_text("gog\nvspace 0 vertices 1\nvedge 0 4 group 0\nend\n");
    FAIL();
  } catch (const gog::ParseError& e) {
    EXPECT_EQ(e.line(), 3);
  }
  EXPECT_THROW(gog::gog_from_text("gog\nvspace 0 vertices 1\n"), gog::ParseError);
}

TEST(Dot, ClusterPerUnderlyingVertex) {
  gog::GraphOfGraphs x = gog::build_representing(gog::parse_instance(kInstance));
  gog::GraphOfGraphs r = gog::reduce_to_valence_three(x, {}).space;
  for (const gog::GraphOfGraphs& g : {x, r}) {
    std::string dot = gog::gog_to_dot(g);
    EXPECT_EQ(count(dot, "subgraph cluster_"), g.vertex_count());
    EXPECT_EQ(dot, gog::gog_to_dot(g));
  }
  EXPECT_NE(gog::gog_to_dot(x).find("label=\"b\""), std::string::npos);
}
