#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "gog/graph_of_graphs.hpp"
#include "gog/word.hpp"

namespace gog {

// Seed for the index-th independent stream derived from a base seed.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

// Thin wrapper over mt19937_64 that avoids the implementation-defined
// standard distributions, so streams are identical everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  // Uniform in [lo, hi].
  int uniform(int lo, int hi) { return lo + static_cast<int>(engine_() % static_cast<std::uint64_t>(hi - lo + 1)); }

 private:
  std::mt19937_64 engine_;
};

// Reduced word of uniform length in [1, max_length].
Word random_word(Rng& rng, int rank, int max_length);
std::vector<Word> random_subgroup(Rng& rng, int rank, int generators, int max_length);

// Two vertex groups joined by one edge group, their based intersection
// (given by a free basis read from the pullback).
Instance intersection_instance(int rank, const std::vector<Word>& h1, const std::vector<Word>& h2);

}  // namespace gog
