#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "gog/graph_of_graphs.hpp"

namespace gog {

// (chi(Γ_U), max valence, number of vertices of max valence), compared
// lexicographically. An empty underlying graph gives (0, 0, 0).
struct Complexity {
  int chi = 0;
  int max_valence = 0;
  int count = 0;

  auto operator<=>(const Complexity&) const = default;
  std::string to_string() const;
};
Complexity complexity(const GraphOfGraphs& x);

struct MoveResult {
  GraphOfGraphs space;
  int applications = 0;

  bool changed() const { return applications > 0; }
};

// Each space is replaced by its components. The component holding local
// vertex 0 keeps the old id, further components are appended, and empty
// spaces disappear.
MoveResult m1_split_components(const GraphOfGraphs& x);
// Fuses valence-2 vertices whose two (distinct, non-loop) inclusions are
// isomorphisms and deletes valence-1 vertices whose inclusion is one, until
// none is left.
MoveResult m2_remove_unnecessary(const GraphOfGraphs& x);
// Deletes vertex-space edges covered by no incident edge space.
MoveResult m3_remove_isolated(const GraphOfGraphs& x);
// Removes free edges with their unique preimage, and point vertex spaces
// with a single incident edge, until none is left.
MoveResult m4_collapse_free(const GraphOfGraphs& x);

// Two classes of the slots at a vertex, indexed like slots_at(); true means
// the second class.
using Partition = std::vector<bool>;

// Partition of the slots at `vertex` in which each class holds two images
// that meet. Scans triples with a common vertex in lexicographic order and
// takes the first fourth image meeting one of them. nullopt at valence <= 3
// or when no certificate exists.
std::optional<Partition> find_partition(const GraphOfGraphs& x, int vertex);

// Splits `vertex` into the union of the first class's images (keeping the
// id) and that of the second (appended), joined by a new last edge carrying
// their intersection. Throws PreconditionError when the intersection is empty
// or a class is empty.
GraphOfGraphs m5_split_vertex(const GraphOfGraphs& x, int vertex, const Partition& partition);

// Balance data for the blown-up subgraph B, read before the final M2.
struct BlowupBalance {
  bool b_is_tree = false;
  int lhs2 = 0;  // 2 - valence(v)
  int rhs2 = 0;  // sum of 2 - valence(v_i)
};

struct BlowupResult {
  GraphOfGraphs space;
  BlowupBalance balance;
  // Intermediate states after M5 and after M1; the final one is `space`.
  GraphOfGraphs after_split;
  GraphOfGraphs after_components;
};
BlowupResult m6_blowup(const GraphOfGraphs& x, int vertex, const Partition& partition);

// Removes edge `edge` and glues its end spaces along it. Throws
// PreconditionError when the two images meet, or when gluing would break
// another attachment.
GraphOfGraphs m7_blowdown(const GraphOfGraphs& x, int edge);

// None of M1-M4 changes x.
bool is_reduced(const GraphOfGraphs& x);

struct MoveRecord {
  int step = 0;
  std::string move;  // "M1" .. "M7"
  int target = -1;   // underlying vertex for M6, -1 for whole-space moves
  Complexity before;
  Complexity after;
  int count = 0;     // applications folded into this record
  std::optional<BlowupBalance> balance;

  std::string to_string() const;
};

struct ReductionOptions {
  // Drop tree components of Γ_M instead of rejecting the input.
  bool strip_tree_mids = false;
  // Check homotopy invariants after every primitive move.
  bool audit = false;
  // Names used in diagnostics, indexed by group tag.
  std::vector<std::string> group_names;
  int max_blowups = 10000;
};

struct ReductionResult {
  GraphOfGraphs space;
  std::vector<MoveRecord> trace;
  int audited_moves = 0;
  std::vector<std::string> audit_failures;
  // Mid-graph components dropped by strip_tree_mids.
  int stripped_components = 0;
};

// Normalizes (M4, M3, M1, M2 to a fixpoint) and then blows up the lowest-id
// vertex of maximal valence while that valence exceeds 3. Throws
// HypothesisError when a component of Γ_M is a tree (unless stripping), and
// InternalError if the complexity fails to drop or no partition is found.
ReductionResult reduce_to_valence_three(const GraphOfGraphs& x, const ReductionOptions& options = {});

std::string trace_to_string(const std::vector<MoveRecord>& trace);

}  // namespace gog
