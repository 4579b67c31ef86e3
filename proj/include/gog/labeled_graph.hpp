#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gog/word.hpp"

namespace gog {

// An oriented edge carrying a generator label. Traversing it against its
// orientation reads the inverse letter.
struct Edge {
  int source = 0;
  int target = 0;
  int label = 0;

  bool operator==(const Edge&) const = default;
};

// Finite graph with labeled oriented edges and an optional basepoint. Vertex
// and edge ids are dense: 0..vertex_count()-1 and 0..edge_count()-1.
class LabeledGraph {
 public:
  LabeledGraph() = default;
  explicit LabeledGraph(int vertex_count, std::optional<int> basepoint = std::nullopt);

  int add_vertex();
  int add_edge(int source, int target, int label);
  void set_basepoint(std::optional<int> basepoint);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(int e) const { return edges_.at(e); }
  std::optional<int> basepoint() const { return basepoint_; }

  // Loops count twice.
  std::vector<int> valences() const;
  int euler_characteristic() const { return vertex_count_ - edge_count(); }
  // 1 - chi, meaningful for connected graphs.
  int rank() const { return 1 - euler_characteristic(); }
  // One more than the largest label, 0 when edgeless.
  int label_bound() const;

  // No vertex has two distinct edges with equal label that are both outgoing
  // or both incoming.
  bool is_folded() const;
  // No valence-1 vertex other than the basepoint.
  bool is_core() const;

  bool operator==(const LabeledGraph&) const = default;

 private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::optional<int> basepoint_;
};

// Label- and orientation-preserving map between two labeled graphs. The graphs
// themselves are passed alongside wherever a check needs them.
struct GraphMorphism {
  std::vector<int> vertex_map;
  std::vector<int> edge_map;

  static GraphMorphism identity(const LabeledGraph& g);
  bool operator==(const GraphMorphism&) const = default;
};

// Incidence, label and orientation are preserved and every id is in range.
bool is_morphism(const LabeledGraph& domain, const LabeledGraph& codomain, const GraphMorphism& m);
// Locally injective: no two edges at one vertex with the same (label,
// direction) land on the same edge.
bool is_immersion(const LabeledGraph& domain, const LabeledGraph& codomain, const GraphMorphism& m);
// Injective on vertices and on edges.
bool is_embedding(const LabeledGraph& domain, const LabeledGraph& codomain, const GraphMorphism& m);
// second ∘ first
GraphMorphism compose(const GraphMorphism& first, const GraphMorphism& second);

// Component id per vertex, numbered in order of smallest vertex.
std::vector<int> component_ids(const LabeledGraph& g);
int component_count(const LabeledGraph& g);
// Sorted first Betti numbers, one per component.
std::vector<int> betti_profile(const LabeledGraph& g);

// Subgraph given by masks; edges whose endpoints are dropped are dropped too.
// `inclusion` maps the new graph into the old one; `vertex_index` and
// `edge_index` map old ids to new ids or -1.
struct Restriction {
  LabeledGraph graph;
  GraphMorphism inclusion;
  std::vector<int> vertex_index;
  std::vector<int> edge_index;
};
Restriction restrict_graph(const LabeledGraph& g, const std::vector<char>& keep_vertex,
                           const std::vector<char>& keep_edge);

// Disjoint union; vertices and edges of `second` are shifted past `first`.
// The basepoint of `first` is kept.
LabeledGraph disjoint_union(const LabeledGraph& first, const LabeledGraph& second);

// Label- and orientation-preserving isomorphism, if one exists. With
// `match_basepoints`, basepoints must correspond.
std::optional<GraphMorphism> find_isomorphism(const LabeledGraph& a, const LabeledGraph& b,
                                              bool match_basepoints = false);
bool are_isomorphic(const LabeledGraph& a, const LabeledGraph& b, bool match_basepoints = false);

// Line-based text format:
//   graph <vertex_count>
//   base <v>                (optional)
//   edge <source> <target> <label>
// Labels are written as generator letters below 26, as integers otherwise.
std::string to_text(const LabeledGraph& g);
LabeledGraph graph_from_text(const std::string& text);
std::string to_dot(const LabeledGraph& g, const std::string& name = "G");

}  // namespace gog
