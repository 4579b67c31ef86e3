#include "gog/graph_of_graphs.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "gog/errors.hpp"
#include "gog/stallings.hpp"

namespace gog {

bool is_space_embedding(const LabeledGraph& domain, const LabeledGraph& codomain, const SpaceMap& m) {
  if (static_cast<int>(m.vertex_image.size()) != domain.vertex_count() ||
      static_cast<int>(m.edge_image.size()) != domain.edge_count() ||
      m.edge_reversed.size() != m.edge_image.size()) {
    return false;
  }
  std::vector<char> hit_v(codomain.vertex_count(), 0), hit_e(codomain.edge_count(), 0);
  for (int v : m.vertex_image) {
    if (v < 0 || v >= codomain.vertex_count() || hit_v[v]) return false;
    hit_v[v] = 1;
  }
  for (int e = 0; e < domain.edge_count(); ++e) {
    int f = m.edge_image[e];
    if (f < 0 || f >= codomain.edge_count() || hit_e[f]) return false;
    hit_e[f] = 1;
    const Edge& de = domain.edge(e);
    const Edge& ce = codomain.edge(f);
    int s = m.vertex_image[de.source], t = m.vertex_image[de.target];
    bool ok = m.edge_reversed[e] ? (s == ce.target && t == ce.source) : (s == ce.source && t == ce.target);
    if (!ok) return false;
  }
  return true;
}

SpaceMap compose(const SpaceMap& first, const SpaceMap& second) {
  SpaceMap m;
  for (int v : first.vertex_image) m.vertex_image.push_back(second.vertex_image.at(v));
  for (std::size_t e = 0; e < first.edge_image.size(); ++e) {
    int mid = first.edge_image[e];
    m.edge_image.push_back(second.edge_image.at(mid));
    m.edge_reversed.push_back(static_cast<char>(first.edge_reversed[e] != second.edge_reversed.at(mid)));
  }
  return m;
}

void validate(const GraphOfGraphs& x) {
  for (int i = 0; i < x.vertex_count(); ++i) {
    const VertexSpace& vs = x.vertex_spaces[i];
    if (static_cast<int>(vs.side.size()) != vs.graph.vertex_count() ||
        static_cast<int>(vs.group.size()) != vs.graph.edge_count()) {
      throw InternalError("vertex space " + std::to_string(i) + " has mis-sized tags");
    }
  }
  for (int j = 0; j < x.edge_count(); ++j) {
    const EdgeSpace& es = x.edge_spaces[j];
    if (es.from < 0 || es.from >= x.vertex_count() || es.to < 0 || es.to >= x.vertex_count()) {
      throw InternalError("edge space " + std::to_string(j) + " has an endpoint out of range");
    }
    if (!is_space_embedding(es.graph, x.vertex_spaces[es.from].graph, es.iota)) {
      throw InternalError("iota attachment of edge space " + std::to_string(j) + " is not an embedding");
    }
    if (!is_space_embedding(es.graph, x.vertex_spaces[es.to].graph, es.tau)) {
      throw InternalError("tau attachment of edge space " + std::to_string(j) + " is not an embedding");
    }
  }
}

std::vector<Slot> slots_at(const GraphOfGraphs& x, int vertex) {
  std::vector<Slot> out;
  for (int j = 0; j < x.edge_count(); ++j) {
    if (x.edge_spaces[j].from == vertex) out.push_back({j, End::Iota});
    if (x.edge_spaces[j].to == vertex) out.push_back({j, End::Tau});
  }
  return out;
}

int valence(const GraphOfGraphs& x, int vertex) { return static_cast<int>(slots_at(x, vertex).size()); }

bool Subgraph::empty() const { return vertex_count() == 0; }
int Subgraph::vertex_count() const { return static_cast<int>(std::count(vertices.begin(), vertices.end(), 1)); }
int Subgraph::edge_count() const { return static_cast<int>(std::count(edges.begin(), edges.end(), 1)); }

Subgraph image_of(const GraphOfGraphs& x, Slot slot) {
  const EdgeSpace& es = x.edge_spaces[slot.edge];
  const LabeledGraph& target = x.vertex_spaces[es.endpoint(slot.end)].graph;
  const SpaceMap& m = es.attachment(slot.end);
  Subgraph s{std::vector<char>(target.vertex_count(), 0), std::vector<char>(target.edge_count(), 0)};
  for (int v : m.vertex_image) s.vertices[v] = 1;
  for (int e : m.edge_image) s.edges[e] = 1;
  return s;
}

Subgraph intersect(const Subgraph& a, const Subgraph& b) {
  Subgraph s = a;
  for (std::size_t i = 0; i < s.vertices.size(); ++i) s.vertices[i] = a.vertices[i] && b.vertices[i];
  for (std::size_t i = 0; i < s.edges.size(); ++i) s.edges[i] = a.edges[i] && b.edges[i];
  return s;
}

Subgraph unite(const Subgraph& a, const Subgraph& b) {
  Subgraph s = a;
  for (std::size_t i = 0; i < s.vertices.size(); ++i) s.vertices[i] = a.vertices[i] || b.vertices[i];
  for (std::size_t i = 0; i < s.edges.size(); ++i) s.edges[i] = a.edges[i] || b.edges[i];
  return s;
}

LabeledGraph underlying_graph(const GraphOfGraphs& x) {
  LabeledGraph g(x.vertex_count());
  for (int j = 0; j < x.edge_count(); ++j) g.add_edge(x.edge_spaces[j].from, x.edge_spaces[j].to, j);
  return g;
}

DerivedGraph horizontal_graph(const GraphOfGraphs& x) {
  DerivedGraph d;
  for (int i = 0; i < x.vertex_count(); ++i) {
    d.vertex_offset.push_back(d.graph.vertex_count());
    for (int v = 0; v < x.vertex_spaces[i].graph.vertex_count(); ++v) {
      d.graph.add_vertex();
      d.vertex_origin.push_back({i, v});
    }
  }
  for (int j = 0; j < x.edge_count(); ++j) {
    const EdgeSpace& es = x.edge_spaces[j];
    for (int w = 0; w < es.graph.vertex_count(); ++w) {
      d.graph.add_edge(d.vertex_offset[es.from] + es.iota.vertex_image[w],
                       d.vertex_offset[es.to] + es.tau.vertex_image[w], j);
      d.edge_origin.push_back({j, w});
    }
  }
  return d;
}

DerivedGraph mid_graph(const GraphOfGraphs& x) {
  DerivedGraph d;
  for (int i = 0; i < x.vertex_count(); ++i) {
    d.vertex_offset.push_back(d.graph.vertex_count());
    for (int e = 0; e < x.vertex_spaces[i].graph.edge_count(); ++e) {
      d.graph.add_vertex();
      d.vertex_origin.push_back({i, e});
    }
  }
  for (int j = 0; j < x.edge_count(); ++j) {
    const EdgeSpace& es = x.edge_spaces[j];
    for (int f = 0; f < es.graph.edge_count(); ++f) {
      d.graph.add_edge(d.vertex_offset[es.from] + es.iota.edge_image[f],
                       d.vertex_offset[es.to] + es.tau.edge_image[f], j);
      d.edge_origin.push_back({j, f});
    }
  }
  return d;
}

GraphMorphism horizontal_projection(const GraphOfGraphs& x, const DerivedGraph& horizontal) {
  (void)x;
  GraphMorphism m;
  for (const SpaceElement& o : horizontal.vertex_origin) m.vertex_map.push_back(o.space);
  for (const SpaceElement& o : horizontal.edge_origin) m.edge_map.push_back(o.space);
  return m;
}

int total_space_euler(const GraphOfGraphs& x) {
  int chi = 0;
  for (const VertexSpace& vs : x.vertex_spaces) chi += vs.graph.euler_characteristic();
  for (const EdgeSpace& es : x.edge_spaces) chi -= es.graph.euler_characteristic();
  return chi;
}

std::optional<CoOrientation> find_co_orientation(const GraphOfGraphs& x) {
  DerivedGraph mid = mid_graph(x);
  DerivedGraph horizontal = horizontal_graph(x);
  const LabeledGraph& gm = mid.graph;

  // parity[k] for Γ_M edge k: flip(iota end) xor flip(tau end) must equal it.
  std::vector<std::vector<std::pair<int, int>>> adj(gm.vertex_count());
  for (int k = 0; k < gm.edge_count(); ++k) {
    const SpaceElement& o = mid.edge_origin[k];
    const EdgeSpace& es = x.edge_spaces[o.space];
    int parity = (es.iota.edge_reversed[o.local] != 0) != (es.tau.edge_reversed[o.local] != 0);
    adj[gm.edge(k).source].emplace_back(gm.edge(k).target, parity);
    adj[gm.edge(k).target].emplace_back(gm.edge(k).source, parity);
  }
  std::vector<int> flip(gm.vertex_count(), -1);
  for (int s = 0; s < gm.vertex_count(); ++s) {
    if (flip[s] >= 0) continue;
    flip[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (auto [w, parity] : adj[v]) {
        int want = flip[v] ^ parity;
        if (flip[w] < 0) {
          flip[w] = want;
          q.push(w);
        } else if (flip[w] != want) {
          return std::nullopt;
        }
      }
    }
  }

  CoOrientation co;
  co.flip.assign(flip.begin(), flip.end());
  for (int k = 0; k < gm.vertex_count(); ++k) {
    const SpaceElement& o = mid.vertex_origin[k];
    const Edge& e = x.vertex_spaces[o.space].graph.edge(o.local);
    int base = horizontal.vertex_offset[o.space];
    co.left.vertex_map.push_back(base + (flip[k] ? e.target : e.source));
    co.right.vertex_map.push_back(base + (flip[k] ? e.source : e.target));
  }
  // Γ_H edge ids run edge space by edge space.
  std::vector<int> h_edge_offset;
  int running = 0;
  for (const EdgeSpace& es : x.edge_spaces) {
    h_edge_offset.push_back(running);
    running += es.graph.vertex_count();
  }
  for (int k = 0; k < gm.edge_count(); ++k) {
    const SpaceElement& o = mid.edge_origin[k];
    const EdgeSpace& es = x.edge_spaces[o.space];
    const Edge& f = es.graph.edge(o.local);
    int iota_mid = gm.edge(k).source;
    bool source_is_left = (es.iota.edge_reversed[o.local] != 0) == (flip[iota_mid] != 0);
    int left_end = source_is_left ? f.source : f.target;
    int right_end = source_is_left ? f.target : f.source;
    co.left.edge_map.push_back(h_edge_offset[o.space] + left_end);
    co.right.edge_map.push_back(h_edge_offset[o.space] + right_end);
  }
  if (!is_immersion(gm, horizontal.graph, co.left) || !is_immersion(gm, horizontal.graph, co.right)) {
    throw InternalError("co-orientation side maps are not immersions");
  }
  return co;
}

bool is_representing(const GraphOfGraphs& x) { return find_co_orientation(x).has_value(); }

std::vector<Bigon> find_bigons(const GraphOfGraphs& x) {
  std::vector<Bigon> out;
  for (int i = 0; i < x.vertex_count(); ++i) {
    const LabeledGraph& g = x.vertex_spaces[i].graph;
    std::map<std::pair<int, int>, std::vector<int>> by_ends;
    for (int e = 0; e < g.edge_count(); ++e) {
      auto [s, t] = std::minmax(g.edge(e).source, g.edge(e).target);
      by_ends[{s, t}].push_back(e);
    }
    for (const auto& [ends, es] : by_ends) {
      for (std::size_t a = 0; a < es.size(); ++a) {
        for (std::size_t b = a + 1; b < es.size(); ++b) out.push_back({i, es[a], es[b]});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Bigon& a, const Bigon& b) {
    return std::tie(a.space, a.first, a.second) < std::tie(b.space, b.first, b.second);
  });
  return out;
}

bool is_simple_edged(const GraphOfGraphs& x, bool reject_monogons) {
  if (!find_bigons(x).empty()) return false;
  if (reject_monogons) {
    for (const VertexSpace& vs : x.vertex_spaces) {
      for (const Edge& e : vs.graph.edges()) {
        if (e.source == e.target) return false;
      }
    }
  }
  return true;
}

std::vector<LabeledGraph> vertex_group_graphs(const Instance& instance) {
  std::vector<LabeledGraph> out;
  for (const VertexGroupSpec& h : instance.vertex_groups) {
    out.push_back(graph_from_words(h.generators, instance.rank));
  }
  return out;
}

std::vector<LabeledGraph> edge_group_graphs(const Instance& instance) {
  std::vector<LabeledGraph> out;
  for (const EdgeGroupSpec& m : instance.edge_groups) {
    out.push_back(graph_from_words(m.generators, instance.rank));
  }
  return out;
}

GraphOfGraphs build_representing(const Instance& instance) {
  const int rank = instance.rank;
  std::vector<LabeledGraph> hs = vertex_group_graphs(instance);
  std::vector<LabeledGraph> ms = edge_group_graphs(instance);
  const int nh = static_cast<int>(hs.size());

  auto group_name = [&](int i) {
    const std::string& n = instance.vertex_groups[i].name;
    return n.empty() ? "H" + std::to_string(i + 1) : n;
  };
  std::vector<GraphMorphism> lift_first, lift_second;
  for (std::size_t j = 0; j < ms.size(); ++j) {
    const EdgeGroupSpec& spec = instance.edge_groups[j];
    std::string mname = spec.name.empty() ? "M" + std::to_string(j + 1) : spec.name;
    for (int end : {spec.first, spec.second}) {
      if (end < 0 || end >= nh) {
        throw PreconditionError("edge group " + mname + " names a missing vertex group");
      }
    }
    auto a = lift(ms[j], hs[spec.first]);
    if (!a) throw ContainmentError(mname + " not contained in " + group_name(spec.first));
    auto b = lift(ms[j], hs[spec.second]);
    if (!b) throw ContainmentError(mname + " not contained in " + group_name(spec.second));
    lift_first.push_back(*a);
    lift_second.push_back(*b);
  }

  GraphOfGraphs x;
  VertexSpace vs;
  std::vector<int> h_offset, m_offset;
  for (int i = 0; i < nh; ++i) {
    h_offset.push_back(vs.graph.vertex_count());
    for (int v = 0; v < hs[i].vertex_count(); ++v) {
      vs.graph.add_vertex();
      vs.side.push_back(i);
    }
  }
  for (std::size_t j = 0; j < ms.size(); ++j) {
    const EdgeGroupSpec& spec = instance.edge_groups[j];
    m_offset.push_back(vs.graph.edge_count());
    for (int y = 0; y < ms[j].vertex_count(); ++y) {
      vs.graph.add_edge(h_offset[spec.first] + lift_first[j].vertex_map[y],
                        h_offset[spec.second] + lift_second[j].vertex_map[y], 0);
      vs.group.push_back(static_cast<int>(j));
    }
  }
  x.vertex_spaces.push_back(std::move(vs));

  for (int l = 0; l < rank; ++l) {
    EdgeSpace es;
    es.from = 0;
    es.to = 0;
    es.label = l;
    // Vertices: l-labeled edges of the Γ_{H_i}.
    std::vector<std::vector<int>> local(nh);
    for (int i = 0; i < nh; ++i) {
      local[i].assign(hs[i].edge_count(), -1);
      for (int h = 0; h < hs[i].edge_count(); ++h) {
        const Edge& ed = hs[i].edge(h);
        if (ed.label != l) continue;
        local[i][h] = es.graph.add_vertex();
        es.iota.vertex_image.push_back(h_offset[i] + ed.source);
        es.tau.vertex_image.push_back(h_offset[i] + ed.target);
      }
    }
    // Edges: l-labeled edges of the Γ_{M_j}.
    for (std::size_t j = 0; j < ms.size(); ++j) {
      const EdgeGroupSpec& spec = instance.edge_groups[j];
      for (int f = 0; f < ms[j].edge_count(); ++f) {
        const Edge& ed = ms[j].edge(f);
        if (ed.label != l) continue;
        es.graph.add_edge(local[spec.first][lift_first[j].edge_map[f]],
                          local[spec.second][lift_second[j].edge_map[f]], 0);
        es.iota.edge_image.push_back(m_offset[j] + ed.source);
        es.tau.edge_image.push_back(m_offset[j] + ed.target);
        es.iota.edge_reversed.push_back(0);
        es.tau.edge_reversed.push_back(0);
      }
    }
    x.edge_spaces.push_back(std::move(es));
  }

  for (int j = 0; j < x.edge_count(); ++j) {
    const EdgeSpace& es = x.edge_spaces[j];
    if (!is_space_embedding(es.graph, x.vertex_spaces[0].graph, es.iota) ||
        !is_space_embedding(es.graph, x.vertex_spaces[0].graph, es.tau)) {
      throw InternalError("attachment of edge space " + std::to_string(j) +
                          " is not injective: an input graph is not immersed");
    }
  }
  validate(x);
  return x;
}

}  // namespace gog
