#pragma once

#include <optional>
#include <span>
#include <vector>

#include "gog/labeled_graph.hpp"
#include "gog/word.hpp"

namespace gog {

struct FoldResult {
  LabeledGraph graph;
  GraphMorphism quotient;  // input graph -> folded graph
};

// Stallings folding. Vertices are identified with a union-find and a worklist
// scanned in edge-id order, so the quotient is reproducible. Folded inputs come
// back unchanged with the identity quotient.
FoldResult fold(const LabeledGraph& g);

// Repeatedly deletes vertices of valence <= 1 other than `keep`. A graph
// without cycles and without `keep` collapses to the empty graph.
Restriction core_with_inclusion(const LabeledGraph& g, std::optional<int> keep);
LabeledGraph core(const LabeledGraph& g, std::optional<int> keep);

// Folded core graph based at vertex 0 whose based loops generate <words>.
// Throws AlphabetError if a word uses a generator >= ambient_rank.
LabeledGraph graph_from_words(std::span<const Word> words, int ambient_rank);

// Transition table of a folded graph for repeated path tracing.
class TransitionTable {
 public:
  explicit TransitionTable(const LabeledGraph& g);

  // Vertex reached from `v` along letter `l`, -1 if there is no such edge.
  int step(int v, const Letter& l) const {
    if (l.generator >= labels_) return -1;
    return table_[(static_cast<std::size_t>(v) * labels_ + l.generator) * 2 + (l.sign > 0 ? 0 : 1)];
  }
  std::optional<int> trace(int start, const Word& w) const;
  bool accepts(const Word& w, int start) const;
  bool accepts(const Word& w) const;

 private:
  int labels_ = 0;
  std::optional<int> basepoint_;
  std::vector<int> table_;
};

// Endpoint of the path reading `w` from `start`, if the path exists. The
// graph must be folded.
std::optional<int> trace(const LabeledGraph& g, int start, const Word& w);
// True iff `w` reads a closed path at `start` (the basepoint by default).
bool contains(const LabeledGraph& g, const Word& w);
bool contains(const LabeledGraph& g, const Word& w, int start);

// Based morphism f: from -> onto with matching labels, obtained by tracing
// `from` inside `onto` starting at the two given vertices (the basepoints by
// default). Both graphs must be folded and `from` connected. Returns nullopt
// when no lift exists, i.e. when <from> is not a subgroup of <onto>.
std::optional<GraphMorphism> lift(const LabeledGraph& from, const LabeledGraph& onto);
std::optional<GraphMorphism> lift(const LabeledGraph& from, int from_start, const LabeledGraph& onto,
                                  int onto_start);

// Folded core graph of <H1 ∪ H2>: wedge at the basepoints, fold, trim.
LabeledGraph join(const LabeledGraph& g1, const LabeledGraph& g2);

// Free basis of pi_1(g, base) read off a BFS spanning tree, one word per
// non-tree edge of the component of `base`, in edge-id order.
std::vector<Word> fundamental_group_basis(const LabeledGraph& g, int base);
std::vector<Word> fundamental_group_basis(const LabeledGraph& g);

// Rank of the component containing the basepoint.
int subgroup_rank(const LabeledGraph& g);

}  // namespace gog
