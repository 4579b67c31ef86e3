#include "gog/instances.hpp"

#include "gog/pullback.hpp"
#include "gog/stallings.hpp"

namespace gog {

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  // splitmix64 finalizer over base + index * golden gamma
  std::uint64_t z = base + (index + 1) * 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Word random_word(Rng& rng, int rank, int max_length) {
  int length = rng.uniform(1, max_length);
  std::vector<Letter> letters;
  while (static_cast<int>(letters.size()) < length) {
    Letter l{rng.uniform(0, rank - 1), rng.uniform(0, 1) ? 1 : -1};
    if (!letters.empty() && letters.back() == l.inverse()) continue;
    letters.push_back(l);
  }
  return Word(letters);
}

std::vector<Word> random_subgroup(Rng& rng, int rank, int generators, int max_length) {
  std::vector<Word> out;
  for (int i = 0; i < generators; ++i) out.push_back(random_word(rng, rank, max_length));
  return out;
}

Instance intersection_instance(int rank, const std::vector<Word>& h1, const std::vector<Word>& h2) {
  LabeledGraph g1 = graph_from_words(h1, rank);
  LabeledGraph g2 = graph_from_words(h2, rank);
  LabeledGraph meet = intersection_subgroup(g1, g2);
  Instance inst;
  inst.rank = rank;
  inst.vertex_groups = {{h1, "H1"}, {h2, "H2"}};
  inst.edge_groups = {{0, 1, fundamental_group_basis(meet), "M1"}};
  return inst;
}

}  // namespace gog
