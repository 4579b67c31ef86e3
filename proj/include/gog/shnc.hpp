#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gog/graph_of_graphs.hpp"
#include "gog/reduction.hpp"

namespace gog {

// Every vertex-space vertex carries side tag 0 or 1, both occur, and every
// Γ_H edge stays on one side.
bool is_two_sided(const GraphOfGraphs& x);

// Γ_M -> Γ_H maps sending a vertex-space edge to its endpoint on side i.
// Needs every vertex-space edge to join side 0 to side 1; nullopt otherwise,
// or when the maps fail to be morphisms.
std::optional<std::array<GraphMorphism, 2>> side_maps(const GraphOfGraphs& x, const DerivedGraph& mid,
                                                      const DerivedGraph& horizontal);

struct DeltaPiece {
  int vertex;        // underlying vertex
  Subgraph subgraph;  // triple intersection inside its vertex space
};

struct DeltaStatistics {
  std::vector<DeltaPiece> deltas;
  int sigma1 = 0;  // Δ vertices on side 0
  int sigma2 = 0;  // Δ vertices on side 1
  int mu = 0;      // Δ edges
};

// Throws PreconditionError unless x is valid, every underlying vertex has
// valence 3, x is simple-edged, representing and two-sided.
DeltaStatistics delta_statistics(const GraphOfGraphs& x);

// Both sides in doubled integers: 4χ(H1)χ(H2) + 4χ(M) against
// |Σ1||Σ2| - 2μ, with the Euler characteristics read from valence censuses.
struct IdentityCheck {
  long chi2_h1 = 0;
  long chi2_h2 = 0;
  long chi2_m = 0;
  long lhs = 0;
  long rhs = 0;
  bool equal = false;
  // 2χ(H_i) = -|Σ_i| and 2χ(M) = -μ.
  bool census_consistent = false;

  std::string to_string() const;
};
IdentityCheck identity_check(const DeltaStatistics& stats, const GraphOfGraphs& x);

struct ShncValue {
  long chi_h1 = 0;
  long chi_h2 = 0;
  long chi_m = 0;
  long value = 0;  // chi_h1 * chi_h2 + chi_m
  bool nonnegative = false;

  std::string to_string() const;
};
// Needs a two-sided x.
ShncValue shnc_inequality(const GraphOfGraphs& x);

// Identifies the Γ_M vertices of a bigon, folds, and checks how the result
// sits between Γ_M and Γ_H. Needs a valid two-sided x whose vertex-space
// edges all join the two sides.
struct BigonResolution {
  bool same_component = false;
  int p = 0;  // Γ_M vertices of the bigon
  int q = 0;
  LabeledGraph gamma_k;
  GraphMorphism eta;                // Γ_M -> Γ_K
  std::array<GraphMorphism, 2> nu;  // Γ_K -> Γ_H, found by lifting
  int mid_vertices = 0;
  int k_vertices = 0;
  int mid_components = 0;
  int k_components = 0;
  int rank_p = 0;  // rank of the Γ_M component of p (and of q)
  int rank_q = 0;
  int rank_k = 0;  // rank of the Γ_K component of the image of p
  std::array<bool, 2> eta_isomorphic{false, false};

  bool immersions = false;     // eta and both nu are immersions
  bool factorization = false;  // nu_i ∘ eta = s_i on vertices and edges
  bool merged = false;         // component count drops iff p, q were apart
  bool containment = false;    // K contains the groups at p and q, and lies in Γ_H at both images
  bool proper = false;         // containment is proper where claimed

  bool holds() const { return immersions && factorization && merged && containment && proper; }
  std::string to_string() const;
};
BigonResolution resolve_bigon(const GraphOfGraphs& x, const Bigon& bigon);

struct CsTrial {
  int index = 0;
  std::uint64_t seed = 0;
  std::vector<Word> h1;
  std::vector<Word> h2;
  int rank_join = 0;
  int rank_m = 0;
  bool census_applicable = false;
  bool census_pass = false;
  int u_rank = 0;
  int u_valence3 = 0;
  int h1_valence3 = 0;
  int h2_valence3 = 0;
  int m_max_valence = 0;
  std::string trace;

  bool rank_ok() const { return rank_m <= 1; }
  std::string to_string() const;
};

struct CsReport {
  std::vector<CsTrial> trials;
  int rejected = 0;  // sampled pairs failing the rank filters

  int rank_ok_count() const;
  int census_applicable_count() const;
  int census_pass_count() const;
  bool passed() const;
  std::string to_string() const;
};

// Random rank-2 pairs in F3 with a rank-3 join; each attempt draws from its
// own derived seed. Nontrivial intersections are reduced and censused.
CsReport culler_shalen_experiment(int trials, std::uint64_t seed, int max_length = 6);

struct ShncCase {
  int index = 0;
  std::uint64_t seed = 0;
  std::vector<Word> h1;
  std::vector<Word> h2;
  std::vector<Word> m;
  bool included = false;
  std::string reason;  // why excluded
  IdentityCheck identity;
  ShncValue inequality;
  // 2χ(Γ_{H_i}) of the input groups, against the census of the terminal state.
  bool groups_match = false;
  std::string trace;

  std::string to_string() const;
};

struct ShncReport {
  std::vector<ShncCase> cases;
  int rejected = 0;  // sampled pairs with trivial intersection

  int included_count() const;
  int excluded_count() const;
  int identity_pass_count() const;
  int inequality_pass_count() const;
  bool passed() const;
  std::string to_string() const;
};

// Pairs of random subgroups of F2 with 2-3 generators and a nontrivial
// intersection, built with the intersection as edge group and reduced,
// until `included` cases satisfy every hypothesis of the identity.
ShncReport shnc_experiment(int included, std::uint64_t seed, int max_length = 5);

}  // namespace gog
