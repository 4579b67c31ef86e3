#include "gog/reduction.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "gog/errors.hpp"

namespace gog {

namespace {

VertexSpace restrict_space(const VertexSpace& vs, const Restriction& r) {
  VertexSpace out;
  out.graph = r.graph;
  for (int v : r.inclusion.vertex_map) out.side.push_back(vs.side.at(v));
  for (int e : r.inclusion.edge_map) out.group.push_back(vs.group.at(e));
  return out;
}

SpaceMap as_space_map(const GraphMorphism& m) {
  return {m.vertex_map, m.edge_map, std::vector<char>(m.edge_map.size(), 0)};
}

// m followed by old -> new ids of a restricted codomain.
SpaceMap into_restriction(const SpaceMap& m, const Restriction& r) {
  SpaceMap out = m;
  for (int& v : out.vertex_image) {
    v = r.vertex_index.at(v);
    if (v < 0) throw InternalError("attachment lands outside a restricted space");
  }
  for (int& e : out.edge_image) {
    e = r.edge_index.at(e);
    if (e < 0) throw InternalError("attachment lands on a removed edge");
  }
  return out;
}

// m precomposed with the inclusion of a restricted domain.
SpaceMap restrict_domain(const SpaceMap& m, const Restriction& r) {
  SpaceMap out;
  for (int v : r.inclusion.vertex_map) out.vertex_image.push_back(m.vertex_image.at(v));
  for (int e : r.inclusion.edge_map) {
    out.edge_image.push_back(m.edge_image.at(e));
    out.edge_reversed.push_back(m.edge_reversed.at(e));
  }
  return out;
}

SpaceMap invert(const SpaceMap& m) {
  SpaceMap out;
  out.vertex_image.assign(m.vertex_image.size(), -1);
  out.edge_image.assign(m.edge_image.size(), -1);
  out.edge_reversed.assign(m.edge_image.size(), 0);
  for (std::size_t v = 0; v < m.vertex_image.size(); ++v) out.vertex_image.at(m.vertex_image[v]) = static_cast<int>(v);
  for (std::size_t e = 0; e < m.edge_image.size(); ++e) {
    out.edge_image.at(m.edge_image[e]) = static_cast<int>(e);
    out.edge_reversed.at(m.edge_image[e]) = m.edge_reversed[e];
  }
  return out;
}

bool is_isomorphism_onto(const EdgeSpace& es, End end, const GraphOfGraphs& x) {
  const LabeledGraph& v = x.vertex_spaces[es.endpoint(end)].graph;
  return es.graph.vertex_count() == v.vertex_count() && es.graph.edge_count() == v.edge_count();
}

std::vector<char> all(int n) { return std::vector<char>(n, 1); }

// Drops underlying vertices and edges, renumbering the rest in order.
GraphOfGraphs remove_parts(const GraphOfGraphs& x, const std::vector<char>& drop_vertex,
                           const std::vector<char>& drop_edge) {
  std::vector<int> index(x.vertex_count(), -1);
  GraphOfGraphs out;
  for (int i = 0; i < x.vertex_count(); ++i) {
    if (drop_vertex[i]) continue;
    index[i] = out.vertex_count();
    out.vertex_spaces.push_back(x.vertex_spaces[i]);
  }
  for (int j = 0; j < x.edge_count(); ++j) {
    if (drop_edge[j]) continue;
    EdgeSpace es = x.edge_spaces[j];
    es.from = index[es.from];
    es.to = index[es.to];
    if (es.from < 0 || es.to < 0) throw InternalError("kept edge at a removed vertex");
    out.edge_spaces.push_back(std::move(es));
  }
  return out;
}

// Deletes the marked edges inside vertex and edge spaces; every vertex stays.
GraphOfGraphs drop_space_edges(const GraphOfGraphs& x, const std::vector<std::vector<char>>& drop_v,
                               const std::vector<std::vector<char>>& drop_e) {
  GraphOfGraphs out;
  std::vector<Restriction> rv;
  for (int i = 0; i < x.vertex_count(); ++i) {
    const VertexSpace& vs = x.vertex_spaces[i];
    std::vector<char> keep(vs.graph.edge_count());
    for (int e = 0; e < vs.graph.edge_count(); ++e) keep[e] = !drop_v[i][e];
    rv.push_back(restrict_graph(vs.graph, all(vs.graph.vertex_count()), keep));
    out.vertex_spaces.push_back(restrict_space(vs, rv.back()));
  }
  for (int j = 0; j < x.edge_count(); ++j) {
    const EdgeSpace& es = x.edge_spaces[j];
    std::vector<char> keep(es.graph.edge_count());
    for (int f = 0; f < es.graph.edge_count(); ++f) keep[f] = !drop_e[j][f];
    Restriction re = restrict_graph(es.graph, all(es.graph.vertex_count()), keep);
    EdgeSpace ne = es;
    ne.graph = re.graph;
    ne.iota = into_restriction(restrict_domain(es.iota, re), rv[es.from]);
    ne.tau = into_restriction(restrict_domain(es.tau, re), rv[es.to]);
    out.edge_spaces.push_back(std::move(ne));
  }
  return out;
}

std::vector<std::vector<char>> no_edges_of_vertex_spaces(const GraphOfGraphs& x) {
  std::vector<std::vector<char>> out;
  for (const VertexSpace& vs : x.vertex_spaces) out.emplace_back(vs.graph.edge_count(), 0);
  return out;
}

std::vector<std::vector<char>> no_edges_of_edge_spaces(const GraphOfGraphs& x) {
  std::vector<std::vector<char>> out;
  for (const EdgeSpace& es : x.edge_spaces) out.emplace_back(es.graph.edge_count(), 0);
  return out;
}

// Number of slot images containing each edge of vertex space i.
std::vector<int> coverage(const GraphOfGraphs& x, int i) {
  std::vector<int> cov(x.vertex_spaces[i].graph.edge_count(), 0);
  for (Slot s : slots_at(x, i)) {
    for (int e : x.edge_spaces[s.edge].attachment(s.end).edge_image) ++cov[e];
  }
  return cov;
}

MoveResult split_components(const GraphOfGraphs& x, std::vector<int>* vertex_origin,
                            std::vector<int>* edge_origin) {
  struct Piece {
    int space;
    int component;
    Restriction r;
  };
  auto pieces_of = [](const LabeledGraph& g, int space) {
    std::vector<Piece> out;
    std::vector<int> comp = component_ids(g);
    int n = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
    for (int c = 0; c < n; ++c) {
      std::vector<char> kv(g.vertex_count()), ke(g.edge_count());
      for (int v = 0; v < g.vertex_count(); ++v) kv[v] = comp[v] == c;
      for (int e = 0; e < g.edge_count(); ++e) ke[e] = comp[g.edge(e).source] == c;
      out.push_back({space, c, restrict_graph(g, kv, ke)});
    }
    return out;
  };

  int applications = 0;
  std::vector<std::vector<Piece>> vpieces, epieces;
  for (int i = 0; i < x.vertex_count(); ++i) {
    vpieces.push_back(pieces_of(x.vertex_spaces[i].graph, i));
    applications += vpieces.back().size() == 1 ? 0 : std::max<int>(1, static_cast<int>(vpieces.back().size()) - 1);
  }
  for (int j = 0; j < x.edge_count(); ++j) {
    epieces.push_back(pieces_of(x.edge_spaces[j].graph, j));
    applications += epieces.back().size() == 1 ? 0 : std::max<int>(1, static_cast<int>(epieces.back().size()) - 1);
  }
  if (applications == 0) {
    if (vertex_origin) {
      vertex_origin->resize(x.vertex_count());
      std::iota(vertex_origin->begin(), vertex_origin->end(), 0);
    }
    if (edge_origin) {
      edge_origin->resize(x.edge_count());
      std::iota(edge_origin->begin(), edge_origin->end(), 0);
    }
    return {x, 0};
  }

  // New ids: first components in order, then the remaining ones.
  std::vector<std::vector<int>> vid(x.vertex_count());
  std::vector<const Piece*> vorder;
  for (int pass = 0; pass < 2; ++pass) {
    for (int i = 0; i < x.vertex_count(); ++i) {
      vid[i].resize(vpieces[i].size());
      for (std::size_t c = 0; c < vpieces[i].size(); ++c) {
        if ((c == 0) != (pass == 0)) continue;
        vid[i][c] = static_cast<int>(vorder.size());
        vorder.push_back(&vpieces[i][c]);
      }
    }
  }
  std::vector<const Piece*> eorder;
  for (int pass = 0; pass < 2; ++pass) {
    for (int j = 0; j < x.edge_count(); ++j) {
      for (std::size_t c = 0; c < epieces[j].size(); ++c) {
        if ((c == 0) != (pass == 0)) continue;
        eorder.push_back(&epieces[j][c]);
      }
    }
  }
  // Which piece of its space each vertex-space vertex lies in.
  std::vector<std::vector<int>> piece_of(x.vertex_count());
  for (int i = 0; i < x.vertex_count(); ++i) {
    piece_of[i].assign(x.vertex_spaces[i].graph.vertex_count(), -1);
    for (std::size_t c = 0; c < vpieces[i].size(); ++c) {
      for (int v : vpieces[i][c].r.inclusion.vertex_map) piece_of[i][v] = static_cast<int>(c);
    }
  }

  GraphOfGraphs out;
  for (const Piece* p : vorder) {
    out.vertex_spaces.push_back(restrict_space(x.vertex_spaces[p->space], p->r));
    if (vertex_origin) vertex_origin->push_back(p->space);
  }
  for (const Piece* p : eorder) {
    const EdgeSpace& es = x.edge_spaces[p->space];
    EdgeSpace ne;
    ne.graph = p->r.graph;
    ne.label = es.label;
    for (End end : {End::Iota, End::Tau}) {
      int i = es.endpoint(end);
      SpaceMap m = restrict_domain(es.attachment(end), p->r);
      int c = piece_of[i][m.vertex_image.at(0)];
      m = into_restriction(m, vpieces[i][c].r);
      (end == End::Iota ? ne.from : ne.to) = vid[i][c];
      ne.attachment(end) = std::move(m);
    }
    out.edge_spaces.push_back(std::move(ne));
    if (edge_origin) edge_origin->push_back(p->space);
  }
  return {out, applications};
}

struct Snapshot {
  std::vector<int> horizontal;
  std::vector<std::pair<int, int>> mid;  // (betti, is point) per component, sorted
  int euler;
};

std::vector<std::pair<int, int>> component_profile(const LabeledGraph& g) {
  std::vector<int> comp = component_ids(g);
  int n = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<int> verts(n, 0), edges(n, 0);
  for (int c : comp) ++verts[c];
  for (const Edge& e : g.edges()) ++edges[comp[e.source]];
  std::vector<std::pair<int, int>> out;
  for (int c = 0; c < n; ++c) out.emplace_back(edges[c] - verts[c] + 1, verts[c] == 1 && edges[c] == 0);
  std::sort(out.begin(), out.end());
  return out;
}

Snapshot snapshot(const GraphOfGraphs& x) {
  return {betti_profile(horizontal_graph(x).graph), component_profile(mid_graph(x).graph),
          total_space_euler(x)};
}

class Session {
 public:
  Session(GraphOfGraphs start, const ReductionOptions& options) : options_(options) {
    result_.space = std::move(start);
  }

  void normalize() {
    for (;;) {
      bool changed = false;
      changed |= apply("M4", m4_collapse_free(result_.space));
      changed |= apply("M3", m3_remove_isolated(result_.space));
      changed |= apply("M1", m1_split_components(result_.space));
      changed |= apply("M2", m2_remove_unnecessary(result_.space));
      if (!changed) return;
    }
  }

  void blow_up(int vertex, const Partition& partition) {
    Complexity before = complexity(result_.space);
    BlowupResult b = m6_blowup(result_.space, vertex, partition);
    audit("M5", result_.space, b.after_split, 0);
    audit("M1", b.after_split, b.after_components, 0);
    audit("M2", b.after_components, b.space, 0);
    result_.space = std::move(b.space);
    MoveRecord r;
    r.step = static_cast<int>(result_.trace.size()) + 1;
    r.move = "M6";
    r.target = vertex;
    r.before = before;
    r.after = complexity(result_.space);
    r.count = 1;
    r.balance = b.balance;
    result_.trace.push_back(r);
  }

  ReductionResult& result() { return result_; }

 private:
  bool apply(const char* move, MoveResult m) {
    if (!m.changed()) return false;
    audit(move, result_.space, m.space, m.applications);
    MoveRecord r;
    r.step = static_cast<int>(result_.trace.size()) + 1;
    r.move = move;
    r.before = complexity(result_.space);
    r.after = complexity(m.space);
    r.count = m.applications;
    result_.trace.push_back(r);
    result_.space = std::move(m.space);
    return true;
  }

  void audit(const std::string& move, const GraphOfGraphs& before, const GraphOfGraphs& after, int applications) {
    if (!options_.audit) return;
    ++result_.audited_moves;
    std::string where = "step " + std::to_string(result_.trace.size() + 1) + " " + move;
    try {
      validate(after);
    } catch (const InternalError& e) {
      result_.audit_failures.push_back(where + ": " + e.what());
      return;
    }
    Snapshot a = snapshot(before), b = snapshot(after);
    if (a.horizontal != b.horizontal) result_.audit_failures.push_back(where + ": horizontal graph betti data changed");
    if (move == "M3") {
      std::vector<std::pair<int, int>> expected = a.mid;
      for (int k = 0; k < applications; ++k) {
        auto it = std::find(expected.begin(), expected.end(), std::pair<int, int>{0, 1});
        if (it == expected.end()) break;
        expected.erase(it);
      }
      if (expected != b.mid) result_.audit_failures.push_back(where + ": removed more than point components of the mid-graph");
    } else {
      if (a.mid != b.mid) result_.audit_failures.push_back(where + ": mid-graph betti data changed");
      if (a.euler != b.euler) result_.audit_failures.push_back(where + ": total space Euler characteristic changed");
    }
  }

  const ReductionOptions& options_;
  ReductionResult result_;
};

std::string group_name(const ReductionOptions& options, int group) {
  if (group >= 0 && group < static_cast<int>(options.group_names.size())) return options.group_names[group];
  if (group < 0) return "(untagged)";
  return "M" + std::to_string(group + 1);
}

}  // namespace

std::string Complexity::to_string() const {
  return "(" + std::to_string(chi) + "," + std::to_string(max_valence) + "," + std::to_string(count) + ")";
}

Complexity complexity(const GraphOfGraphs& x) {
  Complexity c;
  if (x.vertex_count() == 0) return c;
  c.chi = x.vertex_count() - x.edge_count();
  for (int i = 0; i < x.vertex_count(); ++i) {
    int v = valence(x, i);
    if (v > c.max_valence) {
      c.max_valence = v;
      c.count = 1;
    } else if (v == c.max_valence) {
      ++c.count;
    }
  }
  return c;
}

MoveResult m1_split_components(const GraphOfGraphs& x) { return split_components(x, nullptr, nullptr); }

MoveResult m2_remove_unnecessary(const GraphOfGraphs& x) {
  GraphOfGraphs cur = x;
  int applications = 0;
  for (;;) {
    bool done = false;
    for (int u = 0; u < cur.vertex_count() && !done; ++u) {
      std::vector<Slot> slots = slots_at(cur, u);
      std::vector<char> drop_v(cur.vertex_count(), 0), drop_e(cur.edge_count(), 0);
      if (slots.size() == 1) {
        const EdgeSpace& es = cur.edge_spaces[slots[0].edge];
        if (!is_isomorphism_onto(es, slots[0].end, cur)) continue;
        drop_v[u] = 1;
        drop_e[slots[0].edge] = 1;
        cur = remove_parts(cur, drop_v, drop_e);
        done = true;
      } else if (slots.size() == 2 && slots[0].edge != slots[1].edge) {
        const EdgeSpace& e1 = cur.edge_spaces[slots[0].edge];
        const EdgeSpace& e2 = cur.edge_spaces[slots[1].edge];
        if (e1.from == e1.to || e2.from == e2.to) continue;
        if (!is_isomorphism_onto(e1, slots[0].end, cur) || !is_isomorphism_onto(e2, slots[1].end, cur)) continue;
        EdgeSpace fused;
        fused.graph = e1.graph;
        fused.from = e1.endpoint(opposite(slots[0].end));
        fused.to = e2.endpoint(opposite(slots[1].end));
        fused.iota = e1.attachment(opposite(slots[0].end));
        SpaceMap across = compose(e1.attachment(slots[0].end), invert(e2.attachment(slots[1].end)));
        fused.tau = compose(across, e2.attachment(opposite(slots[1].end)));
        int keep = std::min(slots[0].edge, slots[1].edge);
        int other = std::max(slots[0].edge, slots[1].edge);
        cur.edge_spaces[keep] = std::move(fused);
        drop_v[u] = 1;
        drop_e[other] = 1;
        cur = remove_parts(cur, drop_v, drop_e);
        done = true;
      }
    }
    if (!done) break;
    ++applications;
  }
  return {cur, applications};
}

MoveResult m3_remove_isolated(const GraphOfGraphs& x) {
  auto drop_v = no_edges_of_vertex_spaces(x);
  int removed = 0;
  for (int i = 0; i < x.vertex_count(); ++i) {
    std::vector<int> cov = coverage(x, i);
    for (std::size_t e = 0; e < cov.size(); ++e) {
      if (cov[e] == 0) {
        drop_v[i][e] = 1;
        ++removed;
      }
    }
  }
  if (removed == 0) return {x, 0};
  return {drop_space_edges(x, drop_v, no_edges_of_edge_spaces(x)), removed};
}

MoveResult m4_collapse_free(const GraphOfGraphs& x) {
  GraphOfGraphs cur = x;
  int applications = 0;
  for (;;) {
    bool done = false;
    for (int i = 0; i < cur.vertex_count() && !done; ++i) {
      std::vector<int> cov = coverage(cur, i);
      auto free_edge = std::find(cov.begin(), cov.end(), 1);
      if (free_edge == cov.end()) continue;
      int e = static_cast<int>(free_edge - cov.begin());
      for (Slot s : slots_at(cur, i)) {
        const auto& img = cur.edge_spaces[s.edge].attachment(s.end).edge_image;
        auto hit = std::find(img.begin(), img.end(), e);
        if (hit == img.end()) continue;
        auto drop_v = no_edges_of_vertex_spaces(cur);
        auto drop_e = no_edges_of_edge_spaces(cur);
        drop_v[i][e] = 1;
        drop_e[s.edge][hit - img.begin()] = 1;
        cur = drop_space_edges(cur, drop_v, drop_e);
        done = true;
        break;
      }
      if (!done) throw InternalError("free edge without a preimage");
    }
    for (int i = 0; i < cur.vertex_count() && !done; ++i) {
      const LabeledGraph& g = cur.vertex_spaces[i].graph;
      if (g.vertex_count() != 1 || g.edge_count() != 0) continue;
      std::vector<Slot> slots = slots_at(cur, i);
      if (slots.size() != 1) continue;
      std::vector<char> drop_v(cur.vertex_count(), 0), drop_e(cur.edge_count(), 0);
      drop_v[i] = 1;
      drop_e[slots[0].edge] = 1;
      cur = remove_parts(cur, drop_v, drop_e);
      done = true;
    }
    if (!done) break;
    ++applications;
  }
  return {cur, applications};
}

std::optional<Partition> find_partition(const GraphOfGraphs& x, int vertex) {
  std::vector<Slot> slots = slots_at(x, vertex);
  const int k = static_cast<int>(slots.size());
  if (k <= 3) return std::nullopt;
  std::vector<Subgraph> images;
  for (Slot s : slots) images.push_back(image_of(x, s));
  auto meets = [](const Subgraph& a, const Subgraph& b) { return !intersect(a, b).empty(); };
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      Subgraph ab = intersect(images[a], images[b]);
      if (ab.empty()) continue;
      for (int c = b + 1; c < k; ++c) {
        if (intersect(ab, images[c]).empty()) continue;
        for (int d = 0; d < k; ++d) {
          if (d == a || d == b || d == c) continue;
          for (int t : {c, b, a}) {
            if (!meets(images[d], images[t])) continue;
            // The two triple members other than t form the first class.
            Partition p(k, true);
            for (int m : {a, b, c}) p[m] = m != t ? false : true;
            return p;
          }
        }
      }
    }
  }
  return std::nullopt;
}

GraphOfGraphs m5_split_vertex(const GraphOfGraphs& x, int vertex, const Partition& partition) {
  std::vector<Slot> slots = slots_at(x, vertex);
  if (partition.size() != slots.size()) throw PreconditionError("partition size does not match the valence");
  const VertexSpace& vs = x.vertex_spaces.at(vertex);
  const LabeledGraph& g = vs.graph;
  Subgraph side[2] = {{std::vector<char>(g.vertex_count(), 0), std::vector<char>(g.edge_count(), 0)},
                      {std::vector<char>(g.vertex_count(), 0), std::vector<char>(g.edge_count(), 0)}};
  int sizes[2] = {0, 0};
  for (std::size_t s = 0; s < slots.size(); ++s) {
    int c = partition[s] ? 1 : 0;
    side[c] = unite(side[c], image_of(x, slots[s]));
    ++sizes[c];
  }
  if (sizes[0] == 0 || sizes[1] == 0) throw PreconditionError("both classes of a split must be nonempty");
  Subgraph common = intersect(side[0], side[1]);
  if (common.empty()) throw PreconditionError("the two classes have disjoint images");

  Restriction r[2] = {restrict_graph(g, side[0].vertices, side[0].edges),
                      restrict_graph(g, side[1].vertices, side[1].edges)};
  Restriction rc = restrict_graph(g, common.vertices, common.edges);

  GraphOfGraphs out = x;
  const int second = out.vertex_count();
  out.vertex_spaces[vertex] = restrict_space(vs, r[0]);
  out.vertex_spaces.push_back(restrict_space(vs, r[1]));
  for (std::size_t s = 0; s < slots.size(); ++s) {
    int c = partition[s] ? 1 : 0;
    EdgeSpace& es = out.edge_spaces[slots[s].edge];
    es.attachment(slots[s].end) = into_restriction(es.attachment(slots[s].end), r[c]);
    (slots[s].end == End::Iota ? es.from : es.to) = c == 0 ? vertex : second;
  }
  EdgeSpace bridge;
  bridge.from = vertex;
  bridge.to = second;
  bridge.graph = rc.graph;
  bridge.iota = into_restriction(as_space_map(rc.inclusion), r[0]);
  bridge.tau = into_restriction(as_space_map(rc.inclusion), r[1]);
  out.edge_spaces.push_back(std::move(bridge));
  return out;
}

BlowupResult m6_blowup(const GraphOfGraphs& x, int vertex, const Partition& partition) {
  BlowupResult b;
  b.after_split = m5_split_vertex(x, vertex, partition);
  const int second = b.after_split.vertex_count() - 1;
  const int bridge = b.after_split.edge_count() - 1;
  std::vector<int> vorigin, eorigin;
  b.after_components = split_components(b.after_split, &vorigin, &eorigin).space;

  const GraphOfGraphs& c = b.after_components;
  std::vector<int> local(c.vertex_count(), -1);
  LabeledGraph tree;
  b.balance.lhs2 = 2 - valence(x, vertex);
  for (int v = 0; v < c.vertex_count(); ++v) {
    if (vorigin[v] != vertex && vorigin[v] != second) continue;
    local[v] = tree.add_vertex();
    b.balance.rhs2 += 2 - valence(c, v);
  }
  bool closed = true;
  for (int j = 0; j < c.edge_count(); ++j) {
    if (eorigin[j] != bridge) continue;
    int s = local[c.edge_spaces[j].from], t = local[c.edge_spaces[j].to];
    if (s < 0 || t < 0) {
      closed = false;
      continue;
    }
    tree.add_edge(s, t, 0);
  }
  b.balance.b_is_tree = closed && component_count(tree) == 1 && tree.edge_count() == tree.vertex_count() - 1;
  b.space = m2_remove_unnecessary(c).space;
  return b;
}

GraphOfGraphs m7_blowdown(const GraphOfGraphs& x, int edge) {
  const EdgeSpace& es = x.edge_spaces.at(edge);
  const int a = es.from, b = es.to;
  const LabeledGraph& va = x.vertex_spaces[a].graph;
  const bool loop = a == b;
  LabeledGraph joined = loop ? va : disjoint_union(va, x.vertex_spaces[b].graph);
  const int voff = loop ? 0 : va.vertex_count();
  const int eoff = loop ? 0 : va.edge_count();
  std::vector<int> side = x.vertex_spaces[a].side, group = x.vertex_spaces[a].group;
  if (!loop) {
    side.insert(side.end(), x.vertex_spaces[b].side.begin(), x.vertex_spaces[b].side.end());
    group.insert(group.end(), x.vertex_spaces[b].group.begin(), x.vertex_spaces[b].group.end());
  }

  if (loop) {
    Subgraph first = image_of(x, {edge, End::Iota});
    Subgraph second = image_of(x, {edge, End::Tau});
    if (!intersect(first, second).empty()) throw PreconditionError("blowdown needs disjoint attachment images");
  }

  // Union-find, smallest id wins.
  auto find = [](std::vector<int>& p, int v) {
    while (p[v] != v) v = p[v] = p[p[v]];
    return v;
  };
  std::vector<int> vp(joined.vertex_count()), ep(joined.edge_count());
  std::iota(vp.begin(), vp.end(), 0);
  std::iota(ep.begin(), ep.end(), 0);
  auto unite = [&](std::vector<int>& p, int s, int t) {
    s = find(p, s);
    t = find(p, t);
    if (s != t) p[std::max(s, t)] = std::min(s, t);
  };
  for (int y = 0; y < es.graph.vertex_count(); ++y) unite(vp, es.iota.vertex_image[y], es.tau.vertex_image[y] + voff);
  for (int f = 0; f < es.graph.edge_count(); ++f) unite(ep, es.iota.edge_image[f], es.tau.edge_image[f] + eoff);

  VertexSpace glued;
  std::vector<int> vclass(joined.vertex_count(), -1), eclass(joined.edge_count(), -1);
  for (int v = 0; v < joined.vertex_count(); ++v) {
    int r = find(vp, v);
    if (r == v) {
      vclass[v] = glued.graph.add_vertex();
      glued.side.push_back(side[v]);
    }
  }
  for (int v = 0; v < joined.vertex_count(); ++v) vclass[v] = vclass[find(vp, v)];
  for (int e = 0; e < joined.edge_count(); ++e) {
    if (find(ep, e) != e) continue;
    const Edge& ed = joined.edge(e);
    eclass[e] = glued.graph.add_edge(vclass[ed.source], vclass[ed.target], 0);
    glued.group.push_back(group[e]);
  }
  std::vector<char> flipped(joined.edge_count(), 0);
  for (int e = 0; e < joined.edge_count(); ++e) {
    eclass[e] = eclass[find(ep, e)];
    const Edge& ed = joined.edge(e);
    const Edge& ge = glued.graph.edge(eclass[e]);
    int s = vclass[ed.source], t = vclass[ed.target];
    if (s == ge.source && t == ge.target) continue;
    if (s == ge.target && t == ge.source) {
      flipped[e] = 1;
      continue;
    }
    throw InternalError("blowdown glued edges with different endpoints");
  }

  GraphOfGraphs out = x;
  const int keep = std::min(a, b);
  out.vertex_spaces[keep] = glued;
  for (int j = 0; j < x.edge_count(); ++j) {
    if (j == edge) continue;
    EdgeSpace& other = out.edge_spaces[j];
    for (End end : {End::Iota, End::Tau}) {
      int at = other.endpoint(end);
      if (at != a && at != b) continue;
      int vo = at == a ? 0 : voff, eo = at == a ? 0 : eoff;
      SpaceMap& m = other.attachment(end);
      for (int& v : m.vertex_image) v = vclass[v + vo];
      for (std::size_t f = 0; f < m.edge_image.size(); ++f) {
        int old = m.edge_image[f] + eo;
        m.edge_image[f] = eclass[old];
        m.edge_reversed[f] = static_cast<char>(m.edge_reversed[f] != flipped[old]);
      }
      (end == End::Iota ? other.from : other.to) = keep;
    }
  }
  for (int j = 0; j < out.edge_count(); ++j) {
    if (j == edge) continue;
    const EdgeSpace& other = out.edge_spaces[j];
    for (End end : {End::Iota, End::Tau}) {
      if (other.endpoint(end) != keep) continue;
      if (!is_space_embedding(other.graph, glued.graph, other.attachment(end))) {
        throw PreconditionError("blowdown would fold the attachment of edge space " + std::to_string(j));
      }
    }
  }
  std::vector<char> drop_v(out.vertex_count(), 0), drop_e(out.edge_count(), 0);
  if (!loop) drop_v[std::max(a, b)] = 1;
  drop_e[edge] = 1;
  return remove_parts(out, drop_v, drop_e);
}

bool is_reduced(const GraphOfGraphs& x) {
  return !m1_split_components(x).changed() && !m2_remove_unnecessary(x).changed() &&
         !m3_remove_isolated(x).changed() && !m4_collapse_free(x).changed();
}

std::string MoveRecord::to_string() const {
  std::ostringstream out;
  out << "step=" << step << " move=" << move << " target=";
  if (target >= 0) {
    out << "v" << target;
  } else {
    out << "-";
  }
  out << " before=" << before.to_string() << " after=" << after.to_string() << " count=" << count;
  if (balance) {
    out << " btree=" << (balance->b_is_tree ? 1 : 0) << " eq1=" << balance->lhs2 << "/" << balance->rhs2;
  }
  return out.str();
}

std::string trace_to_string(const std::vector<MoveRecord>& trace) {
  std::string out;
  for (const MoveRecord& r : trace) out += r.to_string() + "\n";
  return out;
}

ReductionResult reduce_to_valence_three(const GraphOfGraphs& x, const ReductionOptions& options) {
  validate(x);
  GraphOfGraphs start = x;
  int stripped = 0;
  {
    DerivedGraph mid = mid_graph(x);
    std::vector<int> comp = component_ids(mid.graph);
    int n = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
    std::vector<int> verts(n, 0), edges(n, 0), first(n, -1);
    for (int v = 0; v < mid.graph.vertex_count(); ++v) {
      ++verts[comp[v]];
      if (first[comp[v]] < 0) first[comp[v]] = v;
    }
    for (const Edge& e : mid.graph.edges()) ++edges[comp[e.source]];
    std::vector<char> tree(n, 0);
    for (int c = 0; c < n; ++c) {
      if (edges[c] != verts[c] - 1) continue;
      tree[c] = 1;
      if (!options.strip_tree_mids) {
        const SpaceElement& o = mid.vertex_origin[first[c]];
        int group = x.vertex_spaces[o.space].group[o.local];
        throw HypothesisError("mid-graph component of edge group " + group_name(options, group) +
                              " is a tree (vertex space " + std::to_string(o.space) + ", edge " +
                              std::to_string(o.local) + ")");
      }
      ++stripped;
    }
    if (stripped > 0) {
      auto drop_v = no_edges_of_vertex_spaces(x);
      auto drop_e = no_edges_of_edge_spaces(x);
      for (int v = 0; v < mid.graph.vertex_count(); ++v) {
        if (tree[comp[v]]) drop_v[mid.vertex_origin[v].space][mid.vertex_origin[v].local] = 1;
      }
      for (int k = 0; k < mid.graph.edge_count(); ++k) {
        if (tree[comp[mid.graph.edge(k).source]]) drop_e[mid.edge_origin[k].space][mid.edge_origin[k].local] = 1;
      }
      start = drop_space_edges(x, drop_v, drop_e);
    }
  }

  Session session(std::move(start), options);
  session.result().stripped_components = stripped;
  session.normalize();
  int blowups = 0;
  for (;;) {
    const GraphOfGraphs& cur = session.result().space;
    Complexity c = complexity(cur);
    if (c.max_valence <= 3) break;
    int target = 0;
    while (valence(cur, target) != c.max_valence) ++target;
    std::optional<Partition> p = find_partition(cur, target);
    if (!p) throw InternalError("no partition certificate at vertex " + std::to_string(target));
    if (++blowups > options.max_blowups) throw InternalError("blowup budget exhausted");
    session.blow_up(target, *p);
    const MoveRecord& r = session.result().trace.back();
    if (!(r.after < r.before)) {
      throw InternalError("complexity did not drop at " + r.to_string());
    }
    session.normalize();
  }
  return std::move(session.result());
}

}  // namespace gog
