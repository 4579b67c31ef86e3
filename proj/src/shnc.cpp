#include "gog/shnc.hpp"

#include <algorithm>
#include <sstream>

#include "gog/errors.hpp"
#include "gog/instances.hpp"
#include "gog/pullback.hpp"
#include "gog/stallings.hpp"

namespace gog {

namespace {

std::string words(const std::vector<Word>& ws) { return to_string(std::span<const Word>(ws)); }

std::string hex(std::uint64_t v) {
  std::ostringstream out;
  out << "0x" << std::hex << v;
  return out.str();
}

// Doubled Euler characteristic from the valence census: sum of 2 - deg.
long doubled_chi(const std::vector<int>& valences, const std::vector<char>& mask) {
  long total = 0;
  for (std::size_t v = 0; v < valences.size(); ++v) {
    if (mask.empty() || mask[v]) total += 2 - valences[v];
  }
  return total;
}

std::vector<char> side_mask(const GraphOfGraphs& x, const DerivedGraph& horizontal, int side) {
  std::vector<char> mask;
  for (const SpaceElement& o : horizontal.vertex_origin) mask.push_back(x.vertex_spaces[o.space].side[o.local] == side);
  return mask;
}

// Restriction of g to the component containing `v`.
Restriction component_of(const LabeledGraph& g, const std::vector<int>& comp, int v) {
  std::vector<char> kv(g.vertex_count()), ke(g.edge_count());
  for (int w = 0; w < g.vertex_count(); ++w) kv[w] = comp[w] == comp[v];
  for (int e = 0; e < g.edge_count(); ++e) ke[e] = comp[g.edge(e).source] == comp[v];
  return restrict_graph(g, kv, ke);
}

int component_rank(const LabeledGraph& g, const std::vector<int>& comp, int v) {
  Restriction r = component_of(g, comp, v);
  return r.graph.rank();
}

}  // namespace

bool is_two_sided(const GraphOfGraphs& x) {
  bool seen[2] = {false, false};
  for (const VertexSpace& vs : x.vertex_spaces) {
    for (int s : vs.side) {
      if (s != 0 && s != 1) return false;
      seen[s] = true;
    }
  }
  if (!seen[0] || !seen[1]) return false;
  for (const EdgeSpace& es : x.edge_spaces) {
    for (int w = 0; w < es.graph.vertex_count(); ++w) {
      if (x.vertex_spaces[es.from].side[es.iota.vertex_image[w]] != x.vertex_spaces[es.to].side[es.tau.vertex_image[w]]) {
        return false;
      }
    }
  }
  return true;
}

std::optional<std::array<GraphMorphism, 2>> side_maps(const GraphOfGraphs& x, const DerivedGraph& mid,
                                                      const DerivedGraph& horizontal) {
  std::array<GraphMorphism, 2> maps;
  for (const SpaceElement& o : mid.vertex_origin) {
    const VertexSpace& vs = x.vertex_spaces[o.space];
    const Edge& e = vs.graph.edge(o.local);
    int ss = vs.side[e.source], st = vs.side[e.target];
    if (!((ss == 0 && st == 1) || (ss == 1 && st == 0))) return std::nullopt;
    int base = horizontal.vertex_offset[o.space];
    maps[ss].vertex_map.push_back(base + e.source);
    maps[st].vertex_map.push_back(base + e.target);
  }
  std::vector<int> h_edge_offset;
  int running = 0;
  for (const EdgeSpace& es : x.edge_spaces) {
    h_edge_offset.push_back(running);
    running += es.graph.vertex_count();
  }
  for (const SpaceElement& o : mid.edge_origin) {
    const EdgeSpace& es = x.edge_spaces[o.space];
    const Edge& f = es.graph.edge(o.local);
    int s_source = x.vertex_spaces[es.from].side[es.iota.vertex_image[f.source]];
    int s_target = x.vertex_spaces[es.from].side[es.iota.vertex_image[f.target]];
    if (s_source == s_target || s_source < 0 || s_source > 1 || s_target < 0 || s_target > 1) return std::nullopt;
    maps[s_source].edge_map.push_back(h_edge_offset[o.space] + f.source);
    maps[s_target].edge_map.push_back(h_edge_offset[o.space] + f.target);
  }
  for (const GraphMorphism& m : maps) {
    if (!is_morphism(mid.graph, horizontal.graph, m)) return std::nullopt;
  }
  return maps;
}

DeltaStatistics delta_statistics(const GraphOfGraphs& x) {
  validate(x);
  for (int i = 0; i < x.vertex_count(); ++i) {
    if (valence(x, i) != 3) {
      throw PreconditionError("underlying vertex " + std::to_string(i) + " has valence " +
                              std::to_string(valence(x, i)) + ", not 3");
    }
  }
  std::vector<Bigon> bigons = find_bigons(x);
  if (!bigons.empty()) {
    throw PreconditionError("not simple-edged: vertex space " + std::to_string(bigons[0].space) + " edges " +
                            std::to_string(bigons[0].first) + " and " + std::to_string(bigons[0].second));
  }
  if (!is_representing(x)) throw PreconditionError("not representing");
  if (!is_two_sided(x)) throw PreconditionError("horizontal graph is not two-sided");

  DeltaStatistics stats;
  for (int i = 0; i < x.vertex_count(); ++i) {
    std::vector<Slot> slots = slots_at(x, i);
    Subgraph d = intersect(intersect(image_of(x, slots[0]), image_of(x, slots[1])), image_of(x, slots[2]));
    const VertexSpace& vs = x.vertex_spaces[i];
    for (int v = 0; v < vs.graph.vertex_count(); ++v) {
      if (!d.vertices[v]) continue;
      (vs.side[v] == 0 ? stats.sigma1 : stats.sigma2) += 1;
    }
    stats.mu += d.edge_count();
    stats.deltas.push_back({i, std::move(d)});
  }
  return stats;
}

std::string IdentityCheck::to_string() const {
  std::ostringstream out;
  out << "chi2_h1=" << chi2_h1 << " chi2_h2=" << chi2_h2 << " chi2_m=" << chi2_m << " lhs=" << lhs
      << " rhs=" << rhs << " equal=" << (equal ? "yes" : "no") << " census=" << (census_consistent ? "ok" : "bad");
  return out.str();
}

IdentityCheck identity_check(const DeltaStatistics& stats, const GraphOfGraphs& x) {
  DerivedGraph horizontal = horizontal_graph(x);
  DerivedGraph mid = mid_graph(x);
  std::vector<int> hval = horizontal.graph.valences();
  IdentityCheck c;
  c.chi2_h1 = doubled_chi(hval, side_mask(x, horizontal, 0));
  c.chi2_h2 = doubled_chi(hval, side_mask(x, horizontal, 1));
  c.chi2_m = doubled_chi(mid.graph.valences(), {});
  c.lhs = c.chi2_h1 * c.chi2_h2 + 2 * c.chi2_m;
  c.rhs = static_cast<long>(stats.sigma1) * stats.sigma2 - 2L * stats.mu;
  c.equal = c.lhs == c.rhs;
  c.census_consistent = c.chi2_h1 == -stats.sigma1 && c.chi2_h2 == -stats.sigma2 && c.chi2_m == -stats.mu;
  return c;
}

std::string ShncValue::to_string() const {
  std::ostringstream out;
  out << "chi_h1=" << chi_h1 << " chi_h2=" << chi_h2 << " chi_m=" << chi_m << " value=" << value
      << " nonnegative=" << (nonnegative ? "yes" : "no");
  return out.str();
}

ShncValue shnc_inequality(const GraphOfGraphs& x) {
  if (!is_two_sided(x)) throw PreconditionError("horizontal graph is not two-sided");
  DerivedGraph horizontal = horizontal_graph(x);
  const LabeledGraph& h = horizontal.graph;
  ShncValue v;
  for (int w = 0; w < h.vertex_count(); ++w) {
    const SpaceElement& o = horizontal.vertex_origin[w];
    (x.vertex_spaces[o.space].side[o.local] == 0 ? v.chi_h1 : v.chi_h2) += 1;
  }
  for (const Edge& e : h.edges()) {
    const SpaceElement& o = horizontal.vertex_origin[e.source];
    (x.vertex_spaces[o.space].side[o.local] == 0 ? v.chi_h1 : v.chi_h2) -= 1;
  }
  v.chi_m = mid_graph(x).graph.euler_characteristic();
  v.value = v.chi_h1 * v.chi_h2 + v.chi_m;
  v.nonnegative = v.value >= 0;
  return v;
}

std::string BigonResolution::to_string() const {
  std::ostringstream out;
  out << "case=" << (same_component ? "same" : "distinct") << " p=" << p << " q=" << q
      << " mid_vertices=" << mid_vertices << " k_vertices=" << k_vertices << " mid_components=" << mid_components
      << " k_components=" << k_components << " rank_p=" << rank_p << " rank_q=" << rank_q << " rank_k=" << rank_k
      << " eta_iso=" << eta_isomorphic[0] << eta_isomorphic[1] << " immersions=" << immersions
      << " factorization=" << factorization << " merged=" << merged << " containment=" << containment
      << " proper=" << proper;
  return out.str();
}

BigonResolution resolve_bigon(const GraphOfGraphs& x, const Bigon& bigon) {
  validate(x);
  if (bigon.space < 0 || bigon.space >= x.vertex_count()) throw PreconditionError("bigon space out of range");
  const LabeledGraph& vg = x.vertex_spaces[bigon.space].graph;
  if (bigon.first == bigon.second || bigon.first < 0 || bigon.second < 0 || bigon.first >= vg.edge_count() ||
      bigon.second >= vg.edge_count()) {
    throw PreconditionError("bigon edges out of range");
  }
  {
    auto ends = [&](int e) { return std::minmax(vg.edge(e).source, vg.edge(e).target); };
    if (ends(bigon.first) != ends(bigon.second)) throw PreconditionError("no bigon at the given edges");
  }
  DerivedGraph mid = mid_graph(x);
  DerivedGraph horizontal = horizontal_graph(x);
  auto sides = side_maps(x, mid, horizontal);
  if (!sides) throw PreconditionError("vertex-space edges do not all join the two sides");
  const LabeledGraph& gm = mid.graph;
  const LabeledGraph& gh = horizontal.graph;

  BigonResolution r;
  r.p = mid.vertex_offset[bigon.space] + std::min(bigon.first, bigon.second);
  r.q = mid.vertex_offset[bigon.space] + std::max(bigon.first, bigon.second);
  std::vector<int> mcomp = component_ids(gm);
  r.same_component = mcomp[r.p] == mcomp[r.q];
  r.mid_vertices = gm.vertex_count();
  r.mid_components = component_count(gm);
  r.rank_p = component_rank(gm, mcomp, r.p);
  r.rank_q = component_rank(gm, mcomp, r.q);

  // Γ_M with q identified to p.
  GraphMorphism identify;
  for (int v = 0; v < gm.vertex_count(); ++v) identify.vertex_map.push_back(v < r.q ? v : v == r.q ? r.p : v - 1);
  LabeledGraph glued(gm.vertex_count() - 1);
  for (int e = 0; e < gm.edge_count(); ++e) {
    const Edge& ed = gm.edge(e);
    glued.add_edge(identify.vertex_map[ed.source], identify.vertex_map[ed.target], ed.label);
    identify.edge_map.push_back(e);
  }
  FoldResult folded = fold(glued);
  r.gamma_k = folded.graph;
  r.eta = compose(identify, folded.quotient);
  const LabeledGraph& gk = r.gamma_k;
  r.k_vertices = gk.vertex_count();
  r.k_components = component_count(gk);
  std::vector<int> kcomp = component_ids(gk);
  const int kp = r.eta.vertex_map[r.p];
  r.rank_k = component_rank(gk, kcomp, kp);

  // nu_i by lifting each component of Γ_K into Γ_H.
  std::vector<int> preimage(gk.vertex_count(), -1);
  for (int v = gm.vertex_count() - 1; v >= 0; --v) preimage[r.eta.vertex_map[v]] = v;
  bool lifted = true;
  for (int i = 0; i < 2; ++i) {
    GraphMorphism& nu = r.nu[i];
    nu.vertex_map.assign(gk.vertex_count(), -1);
    nu.edge_map.assign(gk.edge_count(), -1);
    for (int k = 0; k < gk.vertex_count(); ++k) {
      if (nu.vertex_map[k] >= 0) continue;
      Restriction piece = component_of(gk, kcomp, k);
      int local = piece.vertex_index[k];
      auto f = lift(piece.graph, local, gh, (*sides)[i].vertex_map[preimage[k]]);
      if (!f) {
        lifted = false;
        break;
      }
      for (int v = 0; v < piece.graph.vertex_count(); ++v) nu.vertex_map[piece.inclusion.vertex_map[v]] = f->vertex_map[v];
      for (int e = 0; e < piece.graph.edge_count(); ++e) nu.edge_map[piece.inclusion.edge_map[e]] = f->edge_map[e];
    }
  }
  r.immersions = lifted && is_immersion(gm, gk, r.eta) && is_immersion(gk, gh, r.nu[0]) &&
                 is_immersion(gk, gh, r.nu[1]);
  r.factorization = lifted && compose(r.eta, r.nu[0]) == (*sides)[0] && compose(r.eta, r.nu[1]) == (*sides)[1];
  r.merged = r.same_component ? r.k_components == r.mid_components : r.k_components == r.mid_components - 1;

  std::vector<Word> k_basis = fundamental_group_basis(gk, kp);
  auto all_accepted = [](const LabeledGraph& g, const std::vector<Word>& ws, int start) {
    TransitionTable t(g);
    return std::all_of(ws.begin(), ws.end(), [&](const Word& w) { return t.accepts(w, start); });
  };
  if (r.same_component) {
    r.containment = all_accepted(gh, k_basis, (*sides)[0].vertex_map[r.p]) &&
                    all_accepted(gh, k_basis, (*sides)[1].vertex_map[r.p]) &&
                    all_accepted(gk, fundamental_group_basis(gm, r.p), kp);
    // The fold cannot be an isomorphism, and K is strictly larger than M at p.
    r.proper = (r.k_vertices < r.mid_vertices || r.rank_k > r.rank_p) && !all_accepted(gm, k_basis, r.p);
  } else {
    r.containment = all_accepted(gk, fundamental_group_basis(gm, r.p), kp) &&
                    all_accepted(gk, fundamental_group_basis(gm, r.q), kp) &&
                    all_accepted(gh, k_basis, (*sides)[0].vertex_map[r.p]) &&
                    all_accepted(gh, k_basis, (*sides)[1].vertex_map[r.p]);
    r.proper = true;
    int ends[2] = {r.p, r.q};
    for (int j = 0; j < 2; ++j) {
      // eta restricted to the component is a bijection onto the component of Γ_K.
      int nv = 0, ne = 0;
      std::vector<char> hit_v(gk.vertex_count(), 0), hit_e(gk.edge_count(), 0);
      bool injective = true;
      for (int v = 0; v < gm.vertex_count(); ++v) {
        if (mcomp[v] != mcomp[ends[j]]) continue;
        ++nv;
        if (hit_v[r.eta.vertex_map[v]]++) injective = false;
      }
      for (int e = 0; e < gm.edge_count(); ++e) {
        if (mcomp[gm.edge(e).source] != mcomp[ends[j]]) continue;
        ++ne;
        if (hit_e[r.eta.edge_map[e]]++) injective = false;
      }
      int kv = 0, ke = 0;
      for (int v = 0; v < gk.vertex_count(); ++v) kv += kcomp[v] == kcomp[kp];
      for (int e = 0; e < gk.edge_count(); ++e) ke += kcomp[gk.edge(e).source] == kcomp[kp];
      r.eta_isomorphic[j] = injective && nv == kv && ne == ke;
      if (!r.eta_isomorphic[j] && all_accepted(gm, k_basis, ends[j])) r.proper = false;
    }
  }
  return r;
}

namespace {

struct Census {
  int u_rank = 0;
  int u_valence3 = 0;
  int h_valence3[2] = {0, 0};
  int m_max_valence = 0;
};

Census census(const GraphOfGraphs& x) {
  Census c;
  LabeledGraph u = underlying_graph(x);
  c.u_rank = component_count(u) == 1 ? u.rank() : -1;
  for (int i = 0; i < x.vertex_count(); ++i) c.u_valence3 += valence(x, i) == 3;
  DerivedGraph horizontal = horizontal_graph(x);
  std::vector<int> hval = horizontal.graph.valences();
  for (int w = 0; w < horizontal.graph.vertex_count(); ++w) {
    const SpaceElement& o = horizontal.vertex_origin[w];
    int s = x.vertex_spaces[o.space].side[o.local];
    if (hval[w] == 3 && (s == 0 || s == 1)) ++c.h_valence3[s];
  }
  for (int v : mid_graph(x).graph.valences()) c.m_max_valence = std::max(c.m_max_valence, v);
  return c;
}

}  // namespace

std::string CsTrial::to_string() const {
  std::ostringstream out;
  out << "trial=" << index << " seed=" << hex(seed) << " h1=" << words(h1) << " h2=" << words(h2)
      << " rank_join=" << rank_join << " rank_m=" << rank_m << " verdict=" << (rank_ok() ? "ok" : "FAIL");
  if (census_applicable) {
    out << " census=" << (census_pass ? "ok" : "FAIL") << " u_rank=" << u_rank << " u_val3=" << u_valence3
        << " h_val3=" << h1_valence3 << "/" << h2_valence3 << " m_maxval=" << m_max_valence;
  } else {
    out << " census=n/a";
  }
  return out.str();
}

int CsReport::rank_ok_count() const {
  return static_cast<int>(std::count_if(trials.begin(), trials.end(), [](const CsTrial& t) { return t.rank_ok(); }));
}
int CsReport::census_applicable_count() const {
  return static_cast<int>(
      std::count_if(trials.begin(), trials.end(), [](const CsTrial& t) { return t.census_applicable; }));
}
int CsReport::census_pass_count() const {
  return static_cast<int>(std::count_if(trials.begin(), trials.end(),
                                        [](const CsTrial& t) { return t.census_applicable && t.census_pass; }));
}
bool CsReport::passed() const {
  return rank_ok_count() == static_cast<int>(trials.size()) && census_pass_count() == census_applicable_count();
}

std::string CsReport::to_string() const {
  std::ostringstream out;
  for (const CsTrial& t : trials) out << t.to_string() << "\n";
  out << "summary trials=" << trials.size() << " rejected=" << rejected << " rank_le_1=" << rank_ok_count()
      << " census_applicable=" << census_applicable_count() << " census_pass=" << census_pass_count()
      << " verdict=" << (passed() ? "pass" : "FAIL") << "\n";
  return out.str();
}

CsReport culler_shalen_experiment(int trials, std::uint64_t seed, int max_length) {
  constexpr int kRank = 3;
  CsReport report;
  for (std::uint64_t attempt = 0; static_cast<int>(report.trials.size()) < trials; ++attempt) {
    if (attempt > 1000000) throw InternalError("culler-shalen sampler found too few valid pairs");
    CsTrial t;
    t.seed = derive_seed(seed, attempt);
    Rng rng(t.seed);
    t.h1 = random_subgroup(rng, kRank, 2, max_length);
    t.h2 = random_subgroup(rng, kRank, 2, max_length);
    LabeledGraph g1 = graph_from_words(t.h1, kRank);
    LabeledGraph g2 = graph_from_words(t.h2, kRank);
    if (subgroup_rank(g1) != 2 || subgroup_rank(g2) != 2) {
      ++report.rejected;
      continue;
    }
    t.rank_join = subgroup_rank(join(g1, g2));
    if (t.rank_join != 3) {
      ++report.rejected;
      continue;
    }
    t.index = static_cast<int>(report.trials.size()) + 1;
    LabeledGraph meet = intersection_subgroup(g1, g2);
    t.rank_m = subgroup_rank(meet);
    if (t.rank_m >= 1 && t.rank_ok()) {
      t.census_applicable = true;
      ReductionResult red = reduce_to_valence_three(build_representing(intersection_instance(kRank, t.h1, t.h2)));
      Census c = census(red.space);
      t.u_rank = c.u_rank;
      t.u_valence3 = c.u_valence3;
      t.h1_valence3 = c.h_valence3[0];
      t.h2_valence3 = c.h_valence3[1];
      t.m_max_valence = c.m_max_valence;
      t.census_pass = t.u_rank == 3 && t.u_valence3 == 4 && t.h1_valence3 == 2 && t.h2_valence3 == 2 &&
                      t.m_max_valence <= 2;
      t.trace = trace_to_string(red.trace);
    }
    report.trials.push_back(std::move(t));
  }
  return report;
}

std::string ShncCase::to_string() const {
  std::ostringstream out;
  out << "case=" << index << " seed=" << hex(seed) << " h1=" << words(h1) << " h2=" << words(h2)
      << " m=" << words(m);
  if (!included) {
    out << " excluded=" << reason;
    return out.str();
  }
  out << " " << identity.to_string() << " " << inequality.to_string()
      << " groups=" << (groups_match ? "ok" : "bad");
  return out.str();
}

int ShncReport::included_count() const {
  return static_cast<int>(std::count_if(cases.begin(), cases.end(), [](const ShncCase& c) { return c.included; }));
}
int ShncReport::excluded_count() const { return static_cast<int>(cases.size()) - included_count(); }
int ShncReport::identity_pass_count() const {
  return static_cast<int>(std::count_if(cases.begin(), cases.end(), [](const ShncCase& c) {
    return c.included && c.identity.equal && c.identity.census_consistent && c.groups_match;
  }));
}
int ShncReport::inequality_pass_count() const {
  return static_cast<int>(std::count_if(cases.begin(), cases.end(), [](const ShncCase& c) {
    return c.included && c.inequality.nonnegative;
  }));
}
bool ShncReport::passed() const {
  return identity_pass_count() == included_count() && inequality_pass_count() == included_count();
}

std::string ShncReport::to_string() const {
  std::ostringstream out;
  for (const ShncCase& c : cases) out << c.to_string() << "\n";
  out << "summary cases=" << cases.size() << " rejected=" << rejected << " included=" << included_count()
      << " excluded=" << excluded_count() << " identity_pass=" << identity_pass_count()
      << " inequality_pass=" << inequality_pass_count() << " verdict=" << (passed() ? "pass" : "FAIL") << "\n";
  return out.str();
}

ShncReport shnc_experiment(int included, std::uint64_t seed, int max_length) {
  constexpr int kRank = 2;
  ShncReport report;
  for (std::uint64_t attempt = 0; report.included_count() < included; ++attempt) {
    if (attempt > 1000000) throw InternalError("shnc sampler found too few valid instances");
    ShncCase c;
    c.seed = derive_seed(seed, attempt);
    Rng rng(c.seed);
    c.h1 = random_subgroup(rng, kRank, rng.uniform(2, 3), max_length);
    c.h2 = random_subgroup(rng, kRank, rng.uniform(2, 3), max_length);
    Instance inst = intersection_instance(kRank, c.h1, c.h2);
    c.m = inst.edge_groups[0].generators;
    if (c.m.empty()) {
      ++report.rejected;
      continue;
    }
    c.index = static_cast<int>(report.cases.size()) + 1;
    GraphOfGraphs built = build_representing(inst);
    ReductionResult red = reduce_to_valence_three(built);
    c.trace = trace_to_string(red.trace);
    const GraphOfGraphs& x = red.space;
    try {
      DeltaStatistics stats = delta_statistics(x);
      c.identity = identity_check(stats, x);
      c.inequality = shnc_inequality(x);
      c.included = true;
    } catch (const PreconditionError& e) {
      c.reason = std::string("\"") + e.what() + "\"";
    }
    if (c.included) {
      std::vector<LabeledGraph> hs = vertex_group_graphs(inst);
      std::vector<LabeledGraph> ms = edge_group_graphs(inst);
      c.groups_match = c.identity.chi2_h1 == 2L * hs[0].euler_characteristic() &&
                       c.identity.chi2_h2 == 2L * hs[1].euler_characteristic() &&
                       c.identity.chi2_m == 2L * ms[0].euler_characteristic();
    }
    report.cases.push_back(std::move(c));
  }
  return report;
}

}  // namespace gog
