#include "gog/pullback.hpp"

#include <algorithm>

#include "gog/errors.hpp"
#include "gog/stallings.hpp"

namespace gog {

Pullback pullback_product(const LabeledGraph& g1, const LabeledGraph& g2) {
  if (!g1.is_folded() || !g2.is_folded()) {
    throw PreconditionError("pullback_product() needs immersions, i.e. folded graphs");
  }
  const int n2 = g2.vertex_count();
  Pullback p;
  p.graph = LabeledGraph(g1.vertex_count() * n2);
  for (int v1 = 0; v1 < g1.vertex_count(); ++v1) {
    for (int v2 = 0; v2 < n2; ++v2) {
      p.pairs.emplace_back(v1, v2);
      p.to_first.vertex_map.push_back(v1);
      p.to_second.vertex_map.push_back(v2);
    }
  }
  for (int e1 = 0; e1 < g1.edge_count(); ++e1) {
    const Edge& a = g1.edge(e1);
    for (int e2 = 0; e2 < g2.edge_count(); ++e2) {
      const Edge& b = g2.edge(e2);
      if (a.label != b.label) continue;
      p.graph.add_edge(a.source * n2 + b.source, a.target * n2 + b.target, a.label);
      p.to_first.edge_map.push_back(e1);
      p.to_second.edge_map.push_back(e2);
    }
  }
  if (g1.basepoint() && g2.basepoint()) p.graph.set_basepoint(*g1.basepoint() * n2 + *g2.basepoint());
  return p;
}

LabeledGraph intersection_subgroup(const LabeledGraph& h1, const LabeledGraph& h2) {
  if (!h1.basepoint() || !h2.basepoint()) {
    throw PreconditionError("intersection_subgroup() needs based graphs");
  }
  Pullback p = pullback_product(h1, h2);
  std::vector<int> comp = component_ids(p.graph);
  int base = *p.graph.basepoint();
  std::vector<char> keep_v(p.graph.vertex_count()), keep_e(p.graph.edge_count());
  for (int v = 0; v < p.graph.vertex_count(); ++v) keep_v[v] = comp[v] == comp[base];
  for (int e = 0; e < p.graph.edge_count(); ++e) keep_e[e] = comp[p.graph.edge(e).source] == comp[base];
  Restriction component = restrict_graph(p.graph, keep_v, keep_e);
  return core(component.graph, component.graph.basepoint());
}

std::vector<CoreComponent> all_core_components(const Pullback& product) {
  const LabeledGraph& g = product.graph;
  Restriction trimmed = core_with_inclusion(g, std::nullopt);
  std::vector<int> comp = component_ids(trimmed.graph);
  int count = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<CoreComponent> out;
  for (int c = 0; c < count; ++c) {
    std::vector<char> keep_v(trimmed.graph.vertex_count()), keep_e(trimmed.graph.edge_count());
    for (int v = 0; v < trimmed.graph.vertex_count(); ++v) keep_v[v] = comp[v] == c;
    for (int e = 0; e < trimmed.graph.edge_count(); ++e) keep_e[e] = comp[trimmed.graph.edge(e).source] == c;
    Restriction piece = restrict_graph(trimmed.graph, keep_v, keep_e);
    CoreComponent cc;
    cc.inclusion = compose(piece.inclusion, trimmed.inclusion);
    // Vertex ids are v1 * n2 + v2, so the smallest id is the least pair.
    int anchor_local = static_cast<int>(
        std::min_element(cc.inclusion.vertex_map.begin(), cc.inclusion.vertex_map.end()) -
        cc.inclusion.vertex_map.begin());
    cc.anchor = product.pairs[cc.inclusion.vertex_map[anchor_local]];
    cc.graph = piece.graph;
    cc.graph.set_basepoint(anchor_local);
    out.push_back(std::move(cc));
  }
  std::sort(out.begin(), out.end(),
            [](const CoreComponent& a, const CoreComponent& b) { return a.anchor < b.anchor; });
  return out;
}

}  // namespace gog
