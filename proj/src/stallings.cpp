#include "gog/stallings.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <tuple>

#include "gog/errors.hpp"

namespace gog {

namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // The smaller id becomes the representative.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

FoldResult fold(const LabeledGraph& g) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  UnionFind verts(n);
  UnionFind edges(m);

  bool changed = true;
  while (changed) {
    changed = false;
    // (vertex rep, label, direction) -> edge rep
    std::map<std::tuple<int, int, int>, int> seen;
    for (int e = 0; e < m; ++e) {
      if (edges.find(e) != e) continue;
      const Edge& ed = g.edge(e);
      for (int dir = 0; dir < 2; ++dir) {
        if (edges.find(e) != e) break;
        int here = verts.find(dir == 0 ? ed.source : ed.target);
        auto key = std::make_tuple(here, ed.label, dir);
        auto it = seen.find(key);
        if (it != seen.end()) {
          int other = edges.find(it->second);
          const Edge& od = g.edge(other);
          // The stored entry may be stale after earlier merges in this pass.
          int other_here = verts.find(dir == 0 ? od.source : od.target);
          if (other != e && other_here == here) {
            int far = dir == 0 ? ed.target : ed.source;
            int other_far = dir == 0 ? od.target : od.source;
            verts.unite(far, other_far);
            edges.unite(e, other);
            changed = true;
            continue;
          }
        }
        seen[key] = e;
      }
    }
  }

  FoldResult r;
  std::vector<int> vertex_id(n, -1);
  for (int v = 0; v < n; ++v) {
    int root = verts.find(v);
    if (vertex_id[root] < 0) vertex_id[root] = r.graph.add_vertex();
  }
  r.quotient.vertex_map.resize(n);
  for (int v = 0; v < n; ++v) r.quotient.vertex_map[v] = vertex_id[verts.find(v)];

  std::vector<int> edge_id(m, -1);
  for (int e = 0; e < m; ++e) {
    int root = edges.find(e);
    if (edge_id[root] < 0) {
      const Edge& ed = g.edge(root);
      edge_id[root] = r.graph.add_edge(r.quotient.vertex_map[ed.source],
                                       r.quotient.vertex_map[ed.target], ed.label);
    }
  }
  r.quotient.edge_map.resize(m);
  for (int e = 0; e < m; ++e) r.quotient.edge_map[e] = edge_id[edges.find(e)];
  if (g.basepoint()) r.graph.set_basepoint(r.quotient.vertex_map[*g.basepoint()]);
  return r;
}

Restriction core_with_inclusion(const LabeledGraph& g, std::optional<int> keep) {
  const int n = g.vertex_count();
  std::vector<char> alive_v(n, 1), alive_e(g.edge_count(), 1);
  std::vector<int> val = g.valences();
  std::vector<std::vector<int>> incident(n);
  for (int e = 0; e < g.edge_count(); ++e) {
    incident[g.edge(e).source].push_back(e);
    if (g.edge(e).target != g.edge(e).source) incident[g.edge(e).target].push_back(e);
  }
  std::queue<int> q;
  for (int v = 0; v < n; ++v) {
    if (val[v] <= 1 && keep != v) q.push(v);
  }
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    if (!alive_v[v]) continue;
    alive_v[v] = 0;
    for (int e : incident[v]) {
      if (!alive_e[e]) continue;
      alive_e[e] = 0;
      const Edge& ed = g.edge(e);
      int w = ed.source == v ? ed.target : ed.source;
      if (--val[w] <= 1 && alive_v[w] && keep != w) q.push(w);
    }
  }
  return restrict_graph(g, alive_v, alive_e);
}

LabeledGraph core(const LabeledGraph& g, std::optional<int> keep) {
  return core_with_inclusion(g, keep).graph;
}

LabeledGraph graph_from_words(std::span<const Word> words, int ambient_rank) {
  LabeledGraph g(1, 0);
  for (const Word& w : words) {
    if (w.max_generator() >= ambient_rank) {
      throw AlphabetError("word " + w.to_string() + " uses a generator outside rank " +
                          std::to_string(ambient_rank));
    }
    if (w.is_identity()) continue;
    int at = 0;
    for (std::size_t i = 0; i < w.length(); ++i) {
      int next = i + 1 == w.length() ? 0 : g.add_vertex();
      const Letter& l = w[i];
      if (l.sign > 0) {
        g.add_edge(at, next, l.generator);
      } else {
        g.add_edge(next, at, l.generator);
      }
      at = next;
    }
  }
  FoldResult folded = fold(g);
  return core(folded.graph, folded.graph.basepoint());
}

TransitionTable::TransitionTable(const LabeledGraph& g)
    : labels_(g.label_bound()), basepoint_(g.basepoint()) {
  if (!g.is_folded()) throw PreconditionError("path tracing needs a folded graph");
  table_.assign(static_cast<std::size_t>(g.vertex_count()) * labels_ * 2, -1);
  for (const Edge& e : g.edges()) {
    table_[(static_cast<std::size_t>(e.source) * labels_ + e.label) * 2] = e.target;
    table_[(static_cast<std::size_t>(e.target) * labels_ + e.label) * 2 + 1] = e.source;
  }
}

std::optional<int> TransitionTable::trace(int start, const Word& w) const {
  int at = start;
  for (const Letter& l : w.letters()) {
    at = step(at, l);
    if (at < 0) return std::nullopt;
  }
  return at;
}

bool TransitionTable::accepts(const Word& w, int start) const {
  std::optional<int> end = trace(start, w);
  return end && *end == start;
}

bool TransitionTable::accepts(const Word& w) const {
  if (!basepoint_) throw PreconditionError("contains() needs a based graph");
  return accepts(w, *basepoint_);
}

std::optional<int> trace(const LabeledGraph& g, int start, const Word& w) {
  return TransitionTable(g).trace(start, w);
}

bool contains(const LabeledGraph& g, const Word& w) {
  if (!g.basepoint()) throw PreconditionError("contains() needs a based graph");
  return contains(g, w, *g.basepoint());
}

bool contains(const LabeledGraph& g, const Word& w, int start) {
  std::optional<int> end = trace(g, start, w);
  return end && *end == start;
}

std::optional<GraphMorphism> lift(const LabeledGraph& from, const LabeledGraph& onto) {
  if (!from.basepoint() || !onto.basepoint()) throw PreconditionError("lift() needs based graphs");
  return lift(from, *from.basepoint(), onto, *onto.basepoint());
}

std::optional<GraphMorphism> lift(const LabeledGraph& from, int from_start, const LabeledGraph& onto,
                                  int onto_start) {
  // (vertex, label, direction) -> edge of `onto`
  std::map<std::tuple<int, int, int>, int> step;
  for (int e = 0; e < onto.edge_count(); ++e) {
    const Edge& ed = onto.edge(e);
    step[{ed.source, ed.label, 0}] = e;
    step[{ed.target, ed.label, 1}] = e;
  }
  std::vector<std::vector<int>> incident(from.vertex_count());
  for (int e = 0; e < from.edge_count(); ++e) {
    incident[from.edge(e).source].push_back(e);
    incident[from.edge(e).target].push_back(e);
  }
  GraphMorphism f;
  f.vertex_map.assign(from.vertex_count(), -1);
  f.edge_map.assign(from.edge_count(), -1);
  f.vertex_map[from_start] = onto_start;
  std::queue<int> q;
  q.push(from_start);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int e : incident[v]) {
      const Edge& ed = from.edge(e);
      int dir = ed.source == v ? 0 : 1;
      auto it = step.find({f.vertex_map[v], ed.label, dir});
      if (it == step.end()) return std::nullopt;
      const Edge& image = onto.edge(it->second);
      int far = dir == 0 ? ed.target : ed.source;
      int far_image = dir == 0 ? image.target : image.source;
      if (f.edge_map[e] >= 0 && f.edge_map[e] != it->second) return std::nullopt;
      f.edge_map[e] = it->second;
      if (f.vertex_map[far] < 0) {
        f.vertex_map[far] = far_image;
        q.push(far);
      } else if (f.vertex_map[far] != far_image) {
        return std::nullopt;
      }
    }
  }
  if (std::find(f.vertex_map.begin(), f.vertex_map.end(), -1) != f.vertex_map.end()) {
    throw PreconditionError("lift() source graph is not connected");
  }
  return f;
}

LabeledGraph join(const LabeledGraph& g1, const LabeledGraph& g2) {
  if (!g1.basepoint() || !g2.basepoint()) throw PreconditionError("join() needs based graphs");
  LabeledGraph wedge = disjoint_union(g1, g2);
  // Identify the two basepoints by gluing through a fold on a shared vertex.
  int b1 = *g1.basepoint();
  int b2 = *g2.basepoint() + g1.vertex_count();
  LabeledGraph glued(wedge.vertex_count() - 1, 0);
  std::vector<int> id(wedge.vertex_count());
  int next = 1;
  for (int v = 0; v < wedge.vertex_count(); ++v) id[v] = (v == b1 || v == b2) ? 0 : next++;
  for (const Edge& e : wedge.edges()) glued.add_edge(id[e.source], id[e.target], e.label);
  FoldResult folded = fold(glued);
  return core(folded.graph, folded.graph.basepoint());
}

std::vector<Word> fundamental_group_basis(const LabeledGraph& g, int base) {
  std::vector<std::vector<int>> incident(g.vertex_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    incident[g.edge(e).source].push_back(e);
    incident[g.edge(e).target].push_back(e);
  }
  // path[v] reads the tree path from base to v.
  std::vector<std::optional<Word>> path(g.vertex_count());
  std::vector<char> tree_edge(g.edge_count(), 0);
  path[base] = Word();
  std::queue<int> q;
  q.push(base);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int e : incident[v]) {
      const Edge& ed = g.edge(e);
      int far = ed.source == v ? ed.target : ed.source;
      if (path[far]) continue;
      int sign = ed.source == v ? 1 : -1;
      path[far] = *path[v] * Word::generator(ed.label, sign);
      tree_edge[e] = 1;
      q.push(far);
    }
  }
  std::vector<Word> basis;
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (tree_edge[e] || !path[ed.source]) continue;
    basis.push_back(*path[ed.source] * Word::generator(ed.label) * path[ed.target]->inverse());
  }
  return basis;
}

std::vector<Word> fundamental_group_basis(const LabeledGraph& g) {
  if (!g.basepoint()) throw PreconditionError("fundamental_group_basis() needs a based graph");
  return fundamental_group_basis(g, *g.basepoint());
}

int subgroup_rank(const LabeledGraph& g) { return static_cast<int>(fundamental_group_basis(g).size()); }

}  // namespace gog
