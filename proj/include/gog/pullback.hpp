#pragma once

#include <utility>
#include <vector>

#include "gog/labeled_graph.hpp"

namespace gog {

// Fiber product of two immersions into the rose. Vertex (v1, v2) has id
// v1 * n2 + v2; one x-labeled edge per pair of x-labeled edges.
struct Pullback {
  LabeledGraph graph;
  GraphMorphism to_first;
  GraphMorphism to_second;
  std::vector<std::pair<int, int>> pairs;  // vertex id -> (v1, v2)
};

// Both inputs must be folded (immersions into the rose). The product is
// based at (b1, b2) when both inputs are based.
Pullback pullback_product(const LabeledGraph& g1, const LabeledGraph& g2);

// Folded core graph of H1 ∩ H2: the core of the component of (b1, b2),
// based there. Other components (conjugate intersections) are dropped.
LabeledGraph intersection_subgroup(const LabeledGraph& h1, const LabeledGraph& h2);

struct CoreComponent {
  LabeledGraph graph;              // based at the anchor
  std::pair<int, int> anchor;      // lexicographically least vertex pair in the core
  GraphMorphism inclusion;         // into the pullback graph
};

// Cores of all components of the product with nontrivial fundamental group,
// ordered by anchor.
std::vector<CoreComponent> all_core_components(const Pullback& product);

}  // namespace gog
