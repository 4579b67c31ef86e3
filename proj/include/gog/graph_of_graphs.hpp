#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gog/labeled_graph.hpp"
#include "gog/word.hpp"

namespace gog {

// Attaching map of an edge space into a vertex space. Spaces are plain
// graphs (edge labels unused), so an edge may be carried onto its image with
// either orientation; `edge_reversed` records which.
struct SpaceMap {
  std::vector<int> vertex_image;
  std::vector<int> edge_image;
  std::vector<char> edge_reversed;

  bool operator==(const SpaceMap&) const = default;
};

// Incidence-respecting, and injective on vertices and on edges.
bool is_space_embedding(const LabeledGraph& domain, const LabeledGraph& codomain, const SpaceMap& m);
// second ∘ first
SpaceMap compose(const SpaceMap& first, const SpaceMap& second);

// Which end of an underlying edge: the iota end sits at `from`, the tau end at `to`.
enum class End { Iota, Tau };
inline End opposite(End e) { return e == End::Iota ? End::Tau : End::Iota; }

// A vertex space together with provenance tags: `side[v]` is the vertex group
// the horizontal vertex v descends from, `group[e]` the edge group the mid
// vertex e descends from (-1 when unknown).
struct VertexSpace {
  LabeledGraph graph;
  std::vector<int> side;
  std::vector<int> group;

  bool operator==(const VertexSpace&) const = default;
};

struct EdgeSpace {
  int from = 0;
  int to = 0;
  LabeledGraph graph;
  SpaceMap iota;  // into vertex_spaces[from]
  SpaceMap tau;   // into vertex_spaces[to]
  int label = -1;  // generator index when built over the rose

  const SpaceMap& attachment(End end) const { return end == End::Iota ? iota : tau; }
  SpaceMap& attachment(End end) { return end == End::Iota ? iota : tau; }
  int endpoint(End end) const { return end == End::Iota ? from : to; }

  bool operator==(const EdgeSpace&) const = default;
};

// One end of an underlying edge, seen from the vertex it is attached to.
struct Slot {
  int edge;
  End end;

  bool operator==(const Slot&) const = default;
};

// Finite graph of graphs: the underlying graph has one vertex per vertex
// space and one edge per edge space. Every attaching map is an embedding; a
// loop edge carries two independent attachments into the same vertex space.
struct GraphOfGraphs {
  std::vector<VertexSpace> vertex_spaces;
  std::vector<EdgeSpace> edge_spaces;

  int vertex_count() const { return static_cast<int>(vertex_spaces.size()); }
  int edge_count() const { return static_cast<int>(edge_spaces.size()); }

  bool operator==(const GraphOfGraphs&) const = default;
};

// Throws InternalError naming the first broken invariant.
void validate(const GraphOfGraphs& x);

// Slots at `vertex` in edge-id order, iota before tau for loops.
std::vector<Slot> slots_at(const GraphOfGraphs& x, int vertex);
int valence(const GraphOfGraphs& x, int vertex);

// Vertex and edge masks of a subgraph of some vertex space.
struct Subgraph {
  std::vector<char> vertices;
  std::vector<char> edges;

  bool empty() const;
  int vertex_count() const;
  int edge_count() const;
};
Subgraph image_of(const GraphOfGraphs& x, Slot slot);
Subgraph intersect(const Subgraph& a, const Subgraph& b);
Subgraph unite(const Subgraph& a, const Subgraph& b);

// Γ_U: one vertex per vertex space, edge j labeled j from `from` to `to`.
LabeledGraph underlying_graph(const GraphOfGraphs& x);

struct SpaceElement {
  int space;
  int local;

  bool operator==(const SpaceElement&) const = default;
};

// A graph assembled from pieces of the spaces, with provenance of each id.
struct DerivedGraph {
  LabeledGraph graph;
  std::vector<SpaceElement> vertex_origin;  // vertex space and vertex/edge in it
  std::vector<SpaceElement> edge_origin;    // edge space and vertex/edge in it
  std::vector<int> vertex_offset;           // first derived id of each vertex space
};

// Γ_H: a vertex per vertex-space vertex, an edge per edge-space vertex w of
// E_j joining iota_j(w) to tau_j(w), labeled j.
DerivedGraph horizontal_graph(const GraphOfGraphs& x);
// Γ_M: a vertex per vertex-space edge, an edge per edge-space edge f of E_j
// joining iota_j(f) to tau_j(f), labeled j.
DerivedGraph mid_graph(const GraphOfGraphs& x);

// Γ_H -> Γ_U sending a vertex to its vertex space and a Γ_H edge to the
// underlying edge of its edge space.
GraphMorphism horizontal_projection(const GraphOfGraphs& x, const DerivedGraph& horizontal);

// Σ χ(V_i) - Σ χ(E_j).
int total_space_euler(const GraphOfGraphs& x);

// The two side maps Γ_M -> Γ_H induced by a co-orientation of the
// vertex-space edges. `flip[e]` (indexed by Γ_M vertex) says whether edge e's
// left side is its target.
struct CoOrientation {
  std::vector<char> flip;
  GraphMorphism left;
  GraphMorphism right;
};

// Looks for a co-orientation making the strips over Γ_M a product. Returns it
// when one exists; the side maps are then immersions. An empty Γ_M is
// vacuously representing.
std::optional<CoOrientation> find_co_orientation(const GraphOfGraphs& x);
bool is_representing(const GraphOfGraphs& x);

// No vertex space has two distinct edges with the same unordered endpoints.
// With `reject_monogons`, loop edges are rejected too.
bool is_simple_edged(const GraphOfGraphs& x, bool reject_monogons = false);

struct Bigon {
  int space;
  int first;
  int second;
};
std::vector<Bigon> find_bigons(const GraphOfGraphs& x);

// An edge group M_j with endpoints given as indices into the vertex groups.
struct EdgeGroupSpec {
  int first;
  int second;
  std::vector<Word> generators;
  std::string name;
};

struct VertexGroupSpec {
  std::vector<Word> generators;
  std::string name;
};

// Subgroup data for a graph of free groups mapping to the free group of the
// given rank.
struct Instance {
  int rank = 0;
  std::vector<VertexGroupSpec> vertex_groups;
  std::vector<EdgeGroupSpec> edge_groups;
};

// Graph of graphs over the rose representing the instance. The vertex space
// is the fiber over the rose's vertex: vertices are the vertices of the
// Γ_{H_i}, edges are the vertices of the Γ_{M_j}. Edge space l is the fiber
// over the midpoint of generator l. Throws ContainmentError when some M_j does
// not lift into an endpoint group.
GraphOfGraphs build_representing(const Instance& instance);

// The folded graphs of the groups in the same order; used by tests and
// by the bigon analysis.
std::vector<LabeledGraph> vertex_group_graphs(const Instance& instance);
std::vector<LabeledGraph> edge_group_graphs(const Instance& instance);

}  // namespace gog
