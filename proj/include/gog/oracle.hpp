#pragma once

#include <span>
#include <unordered_set>
#include <vector>

#include "gog/word.hpp"

// Brute-force ground truth for subgroup membership. Nothing in here touches
// graphs: the generating set is Nielsen-reduced, after which closure under
// left multiplication by generators with a length cap is complete for every
// element up to the cap (partial products of a Nielsen-reduced product never
// get longer than the product itself).
namespace gog::oracle {

using WordSet = std::unordered_set<Word, WordHash>;

inline constexpr int kMaxLength = 12;

// Nielsen-reduced generating set of <generators>, obtained by the elementary
// transformations u -> u^-1, u -> u v, and deleting trivial elements.
std::vector<Word> nielsen_reduce(std::span<const Word> generators);
// Conditions N0-N2 checked over all pairs and triples of U ∪ U^-1.
bool is_nielsen_reduced(std::span<const Word> generators);

// All elements of <generators> of length <= max_length.
// Throws OracleLimitError when max_length exceeds kMaxLength.
WordSet enumerate_elements(std::span<const Word> generators, int max_length);

// enumerate_elements(g1) ∩ enumerate_elements(g2).
WordSet brute_intersection(std::span<const Word> g1, std::span<const Word> g2, int max_length);

}  // namespace gog::oracle
