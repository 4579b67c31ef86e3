#pragma once

#include <string>

#include "gog/graph_of_graphs.hpp"

namespace gog {

// Instance files:
//   rank 3
//   subgroup H1: ab, c
//   subgroup H2: b c
//   edge H1 H2: b
// '#' starts a comment. Throws ParseError carrying the line number.
Instance parse_instance(const std::string& text);
std::string instance_to_text(const Instance& instance);

// Graph-of-graphs text format:
//   gog
//   vspace <id> vertices <n>
//   side <tag per vertex>
//   vedge <s> <t> group <tag>
//   espace <id> from <u> to <v> label <l> vertices <n>
//   iota-v <image per vertex>
//   tau-v <image per vertex>
//   eedge <s> <t> iota <edge> <+|-> tau <edge> <+|->
//   end
std::string gog_to_text(const GraphOfGraphs& x);
GraphOfGraphs gog_from_text(const std::string& text);

// Vertex spaces as clusters; each edge-space vertex as a dashed arc between
// its two images.
std::string gog_to_dot(const GraphOfGraphs& x, const std::string& name = "X");

}  // namespace gog
