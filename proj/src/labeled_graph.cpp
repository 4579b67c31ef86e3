#include "gog/labeled_graph.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <queue>
#include <sstream>
#include <tuple>

#include "gog/errors.hpp"

namespace gog {

LabeledGraph::LabeledGraph(int vertex_count, std::optional<int> basepoint)
    : vertex_count_(vertex_count) {
  set_basepoint(basepoint);
}

int LabeledGraph::add_vertex() { return vertex_count_++; }

int LabeledGraph::add_edge(int source, int target, int label) {
  if (source < 0 || source >= vertex_count_ || target < 0 || target >= vertex_count_) {
    throw PreconditionError("edge endpoint out of range");
  }
  if (label < 0) throw PreconditionError("negative edge label");
  edges_.push_back({source, target, label});
  return edge_count() - 1;
}

void LabeledGraph::set_basepoint(std::optional<int> basepoint) {
  if (basepoint && (*basepoint < 0 || *basepoint >= vertex_count_)) {
    throw PreconditionError("basepoint out of range");
  }
  basepoint_ = basepoint;
}

std::vector<int> LabeledGraph::valences() const {
  std::vector<int> val(vertex_count_, 0);
  for (const Edge& e : edges_) {
    ++val[e.source];
    ++val[e.target];
  }
  return val;
}

int LabeledGraph::label_bound() const {
  int bound = 0;
  for (const Edge& e : edges_) bound = std::max(bound, e.label + 1);
  return bound;
}

bool LabeledGraph::is_folded() const {
  // (vertex, label, direction) must be unique.
  std::vector<std::tuple<int, int, int>> keys;
  keys.reserve(edges_.size() * 2);
  for (const Edge& e : edges_) {
    keys.emplace_back(e.source, e.label, 0);
    keys.emplace_back(e.target, e.label, 1);
  }
  std::sort(keys.begin(), keys.end());
  return std::adjacent_find(keys.begin(), keys.end()) == keys.end();
}

bool LabeledGraph::is_core() const {
  std::vector<int> val = valences();
  for (int v = 0; v < vertex_count_; ++v) {
    if (val[v] == 1 && basepoint_ != v) return false;
  }
  return true;
}

GraphMorphism GraphMorphism::identity(const LabeledGraph& g) {
  GraphMorphism m;
  m.vertex_map.resize(g.vertex_count());
  m.edge_map.resize(g.edge_count());
  std::iota(m.vertex_map.begin(), m.vertex_map.end(), 0);
  std::iota(m.edge_map.begin(), m.edge_map.end(), 0);
  return m;
}

bool is_morphism(const LabeledGraph& domain, const LabeledGraph& codomain, const GraphMorphism& m) {
  if (static_cast<int>(m.vertex_map.size()) != domain.vertex_count() ||
      static_cast<int>(m.edge_map.size()) != domain.edge_count()) {
    return false;
  }
  for (int v : m.vertex_map) {
    if (v < 0 || v >= codomain.vertex_count()) return false;
  }
  for (int e = 0; e < domain.edge_count(); ++e) {
    int f = m.edge_map[e];
    if (f < 0 || f >= codomain.edge_count()) return false;
    const Edge& de = domain.edge(e);
    const Edge& ce = codomain.edge(f);
    if (de.label != ce.label || m.vertex_map[de.source] != ce.source ||
        m.vertex_map[de.target] != ce.target) {
      return false;
    }
  }
  return true;
}

bool is_immersion(const LabeledGraph& domain, const LabeledGraph& codomain, const GraphMorphism& m) {
  if (!is_morphism(domain, codomain, m)) return false;
  // Two distinct edges leaving (or entering) one vertex may not share an image.
  std::vector<std::tuple<int, int, int>> keys;
  for (int e = 0; e < domain.edge_count(); ++e) {
    keys.emplace_back(domain.edge(e).source, 0, m.edge_map[e]);
    keys.emplace_back(domain.edge(e).target, 1, m.edge_map[e]);
  }
  std::sort(keys.begin(), keys.end());
  return std::adjacent_find(keys.begin(), keys.end()) == keys.end();
}

bool is_embedding(const LabeledGraph& domain, const LabeledGraph& codomain, const GraphMorphism& m) {
  if (!is_morphism(domain, codomain, m)) return false;
  auto injective = [](std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return std::adjacent_find(v.begin(), v.end()) == v.end();
  };
  return injective(m.vertex_map) && injective(m.edge_map);
}

GraphMorphism compose(const GraphMorphism& first, const GraphMorphism& second) {
  GraphMorphism m;
  m.vertex_map.reserve(first.vertex_map.size());
  m.edge_map.reserve(first.edge_map.size());
  for (int v : first.vertex_map) m.vertex_map.push_back(second.vertex_map.at(v));
  for (int e : first.edge_map) m.edge_map.push_back(second.edge_map.at(e));
  return m;
}

std::vector<int> component_ids(const LabeledGraph& g) {
  std::vector<std::vector<int>> adj(g.vertex_count());
  for (const Edge& e : g.edges()) {
    adj[e.source].push_back(e.target);
    adj[e.target].push_back(e.source);
  }
  std::vector<int> comp(g.vertex_count(), -1);
  int next = 0;
  for (int s = 0; s < g.vertex_count(); ++s) {
    if (comp[s] >= 0) continue;
    std::queue<int> q;
    q.push(s);
    comp[s] = next;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : adj[v]) {
        if (comp[w] < 0) {
          comp[w] = next;
          q.push(w);
        }
      }
    }
    ++next;
  }
  return comp;
}

int component_count(const LabeledGraph& g) {
  std::vector<int> comp = component_ids(g);
  return comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
}

std::vector<int> betti_profile(const LabeledGraph& g) {
  std::vector<int> comp = component_ids(g);
  int n = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<int> chi(n, 0);
  for (int c : comp) ++chi[c];
  for (const Edge& e : g.edges()) --chi[comp[e.source]];
  std::vector<int> betti;
  for (int c : chi) betti.push_back(1 - c);
  std::sort(betti.begin(), betti.end());
  return betti;
}

Restriction restrict_graph(const LabeledGraph& g, const std::vector<char>& keep_vertex,
                           const std::vector<char>& keep_edge) {
  Restriction r;
  r.vertex_index.assign(g.vertex_count(), -1);
  r.edge_index.assign(g.edge_count(), -1);
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (keep_vertex[v]) {
      r.vertex_index[v] = r.graph.add_vertex();
      r.inclusion.vertex_map.push_back(v);
    }
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (!keep_edge[e] || r.vertex_index[ed.source] < 0 || r.vertex_index[ed.target] < 0) continue;
    r.edge_index[e] = r.graph.add_edge(r.vertex_index[ed.source], r.vertex_index[ed.target], ed.label);
    r.inclusion.edge_map.push_back(e);
  }
  if (g.basepoint() && r.vertex_index[*g.basepoint()] >= 0) {
    r.graph.set_basepoint(r.vertex_index[*g.basepoint()]);
  }
  return r;
}

LabeledGraph disjoint_union(const LabeledGraph& first, const LabeledGraph& second) {
  LabeledGraph g(first.vertex_count() + second.vertex_count(), first.basepoint());
  for (const Edge& e : first.edges()) g.add_edge(e.source, e.target, e.label);
  int shift = first.vertex_count();
  for (const Edge& e : second.edges()) g.add_edge(e.source + shift, e.target + shift, e.label);
  return g;
}

namespace {

struct Incidence {
  int other;
  int label;
  int direction;  // 0 outgoing, 1 incoming, 2 loop
  auto operator<=>(const Incidence&) const = default;
};

std::vector<std::vector<Incidence>> incidences(const LabeledGraph& g) {
  std::vector<std::vector<Incidence>> inc(g.vertex_count());
  for (const Edge& e : g.edges()) {
    if (e.source == e.target) {
      inc[e.source].push_back({e.source, e.label, 2});
    } else {
      inc[e.source].push_back({e.target, e.label, 0});
      inc[e.target].push_back({e.source, e.label, 1});
    }
  }
  return inc;
}

std::vector<std::pair<int, int>> signature(const std::vector<Incidence>& inc) {
  std::vector<std::pair<int, int>> sig;
  for (const Incidence& i : inc) sig.emplace_back(i.label, i.direction);
  std::sort(sig.begin(), sig.end());
  return sig;
}

class IsomorphismSearch {
 public:
  IsomorphismSearch(const LabeledGraph& a, const LabeledGraph& b, bool match_basepoints)
      : a_(a), b_(b), inc_a_(incidences(a)), inc_b_(incidences(b)),
        map_(a.vertex_count(), -1), used_(b.vertex_count(), 0) {
    for (int v = 0; v < a.vertex_count(); ++v) sig_a_.push_back(signature(inc_a_[v]));
    for (int v = 0; v < b.vertex_count(); ++v) sig_b_.push_back(signature(inc_b_[v]));
    // BFS order, so every vertex but a component root has an earlier neighbor.
    std::vector<char> seen(a.vertex_count(), 0);
    std::vector<int> roots;
    if (match_basepoints && a.basepoint()) roots.push_back(*a.basepoint());
    for (int v = 0; v < a.vertex_count(); ++v) roots.push_back(v);
    for (int r : roots) {
      if (seen[r]) continue;
      seen[r] = 1;
      std::size_t head = order_.size();
      order_.push_back(r);
      while (head < order_.size()) {
        int v = order_[head++];
        for (const Incidence& i : inc_a_[v]) {
          if (!seen[i.other]) {
            seen[i.other] = 1;
            order_.push_back(i.other);
          }
        }
      }
    }
    if (match_basepoints && a.basepoint()) forced_ = {*a.basepoint(), b.basepoint().value_or(-1)};
  }

  bool run() { return extend(0); }
  const std::vector<int>& vertex_map() const { return map_; }

 private:
  std::vector<int> candidates(int v) const {
    if (forced_.first == v) return {forced_.second};
    for (const Incidence& i : inc_a_[v]) {
      int u = map_[i.other];
      if (u < 0 || i.other == v) continue;
      // Neighbor already placed: candidates are the matching neighbors of its image.
      std::vector<int> out;
      int flipped = i.direction == 0 ? 1 : 0;
      for (const Incidence& j : inc_b_[u]) {
        if (j.label == i.label && j.direction == flipped && !used_[j.other]) out.push_back(j.other);
      }
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      return out;
    }
    std::vector<int> out;
    for (int w = 0; w < b_.vertex_count(); ++w) {
      if (!used_[w]) out.push_back(w);
    }
    return out;
  }

  bool consistent(int v, int w) const {
    if (sig_a_[v] != sig_b_[w]) return false;
    std::vector<Incidence> lhs, rhs;
    for (const Incidence& i : inc_a_[v]) {
      int image = i.other == v ? w : map_[i.other];
      if (image >= 0) lhs.push_back({image, i.label, i.direction});
    }
    for (const Incidence& j : inc_b_[w]) {
      if (j.other == w || used_[j.other]) rhs.push_back(j);
    }
    std::sort(lhs.begin(), lhs.end());
    std::sort(rhs.begin(), rhs.end());
    return lhs == rhs;
  }

  bool extend(std::size_t k) {
    if (k == order_.size()) return true;
    int v = order_[k];
    for (int w : candidates(v)) {
      if (w < 0 || used_[w] || !consistent(v, w)) continue;
      map_[v] = w;
      used_[w] = 1;
      if (extend(k + 1)) return true;
      map_[v] = -1;
      used_[w] = 0;
    }
    return false;
  }

  const LabeledGraph& a_;
  const LabeledGraph& b_;
  std::vector<std::vector<Incidence>> inc_a_, inc_b_;
  std::vector<std::vector<std::pair<int, int>>> sig_a_, sig_b_;
  std::vector<int> order_;
  std::vector<int> map_;
  std::vector<char> used_;
  std::pair<int, int> forced_{-1, -1};
};

}  // namespace

std::optional<GraphMorphism> find_isomorphism(const LabeledGraph& a, const LabeledGraph& b,
                                              bool match_basepoints) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return std::nullopt;
  if (match_basepoints && a.basepoint().has_value() != b.basepoint().has_value()) return std::nullopt;
  IsomorphismSearch search(a, b, match_basepoints);
  if (!search.run()) return std::nullopt;
  GraphMorphism m;
  m.vertex_map = search.vertex_map();
  std::vector<char> taken(b.edge_count(), 0);
  for (const Edge& e : a.edges()) {
    int found = -1;
    for (int f = 0; f < b.edge_count(); ++f) {
      const Edge& be = b.edge(f);
      if (!taken[f] && be.label == e.label && be.source == m.vertex_map[e.source] &&
          be.target == m.vertex_map[e.target]) {
        found = f;
        break;
      }
    }
    if (found < 0) return std::nullopt;
    taken[found] = 1;
    m.edge_map.push_back(found);
  }
  return m;
}

bool are_isomorphic(const LabeledGraph& a, const LabeledGraph& b, bool match_basepoints) {
  return find_isomorphism(a, b, match_basepoints).has_value();
}

namespace {

std::string label_token(int label) {
  if (label < 26) return std::string(1, char('a' + label));
  return std::to_string(label);
}

int parse_label(const std::string& token, int line) {
  if (token.size() == 1 && token[0] >= 'a' && token[0] <= 'z') return token[0] - 'a';
  if (!token.empty() && std::all_of(token.begin(), token.end(),
                                    [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    return std::stoi(token);
  }
  throw ParseError("bad edge label '" + token + "'", line);
}

}  // namespace

std::string to_text(const LabeledGraph& g) {
  std::ostringstream out;
  out << "graph " << g.vertex_count() << "\n";
  if (g.basepoint()) out << "base " << *g.basepoint() << "\n";
  for (const Edge& e : g.edges()) {
    out << "edge " << e.source << ' ' << e.target << ' ' << label_token(e.label) << "\n";
  }
  return out.str();
}

LabeledGraph graph_from_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  std::optional<LabeledGraph> g;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key) || key[0] == '#') continue;
    if (key == "graph") {
      int n;
      if (!(ls >> n) || n < 0) throw ParseError("expected vertex count", line_no);
      g.emplace(n);
      continue;
    }
    if (!g) throw ParseError("expected 'graph <n>' header", line_no);
    try {
      if (key == "base") {
        int v;
        if (!(ls >> v)) throw ParseError("expected basepoint", line_no);
        g->set_basepoint(v);
      } else if (key == "edge") {
        int s, t;
        std::string label;
        if (!(ls >> s >> t >> label)) throw ParseError("expected 'edge <s> <t> <label>'", line_no);
        g->add_edge(s, t, parse_label(label, line_no));
      } else {
        throw ParseError("unknown record '" + key + "'", line_no);
      }
    } catch (const PreconditionError& e) {
      throw ParseError(e.what(), line_no);
    }
  }
  if (!g) throw ParseError("empty graph text");
  return *g;
}

std::string to_dot(const LabeledGraph& g, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    out << "  v" << v;
    if (g.basepoint() == v) out << " [shape=doublecircle]";
    out << ";\n";
  }
  for (const Edge& e : g.edges()) {
    out << "  v" << e.source << " -> v" << e.target << " [label=\"" << generator_name(e.label)
        << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace gog
