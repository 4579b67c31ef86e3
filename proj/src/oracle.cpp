#include "gog/oracle.hpp"

#include <algorithm>
#include <deque>

#include "gog/errors.hpp"

namespace gog::oracle {

namespace {

// Element of U ∪ U^-1: basis index and exponent.
struct Signed {
  std::size_t index;
  int exponent;
};

Word power(const std::vector<Word>& basis, Signed s) {
  return s.exponent > 0 ? basis[s.index] : basis[s.index].inverse();
}

std::vector<Signed> both_signs(std::size_t n) {
  std::vector<Signed> out;
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back({i, 1});
    out.push_back({i, -1});
  }
  return out;
}

bool same_element(Signed a, Signed b) { return a.index == b.index && a.exponent == b.exponent; }
bool inverse_elements(Signed a, Signed b) { return a.index == b.index && a.exponent != b.exponent; }

void set_power(std::vector<Word>& basis, Signed s, const Word& value) {
  basis[s.index] = s.exponent > 0 ? value : value.inverse();
}

// Removes trivial elements and elements equal to another one or its inverse.
bool prune(std::vector<Word>& basis) {
  bool changed = false;
  std::vector<Word> kept;
  for (const Word& w : basis) {
    if (w.is_identity()) {
      changed = true;
      continue;
    }
    bool duplicate = std::any_of(kept.begin(), kept.end(), [&](const Word& k) {
      return k == w || k == w.inverse();
    });
    if (duplicate) {
      changed = true;
      continue;
    }
    kept.push_back(w);
  }
  basis = std::move(kept);
  return changed;
}

// One length-reducing transformation u -> u v, if any applies.
bool shorten(std::vector<Word>& basis) {
  auto elems = both_signs(basis.size());
  for (Signed x : elems) {
    for (Signed y : elems) {
      if (x.index == y.index) continue;
      Word wx = power(basis, x);
      Word product = wx * power(basis, y);
      if (product.length() < wx.length()) {
        set_power(basis, x, product);
        return true;
      }
    }
  }
  return false;
}

// With lengths fixed, a triple x y z where y (of even length 2m) loses both
// halves is repaired by x -> x y or z -> y z, whichever lowers the left half
// that changes. Returns true if a transformation was made.
bool separate_halves(std::vector<Word>& basis) {
  auto elems = both_signs(basis.size());
  for (Signed y : elems) {
    Word wy = power(basis, y);
    for (Signed x : elems) {
      if (same_element(x, y) || inverse_elements(x, y)) continue;
      Word wx = power(basis, x);
      for (Signed z : elems) {
        if (same_element(z, y) || inverse_elements(z, y)) continue;
        Word wz = power(basis, z);
        Word xyz = wx * wy * wz;
        long lhs = static_cast<long>(xyz.length());
        long bound = static_cast<long>(wx.length()) - static_cast<long>(wy.length()) +
                     static_cast<long>(wz.length());
        if (lhs > bound) continue;
        std::size_t m = wy.length() / 2;
        if (wy.length() % 2 != 0) throw InternalError("Nielsen reduction: odd middle cancelled");
        std::vector<Letter> left(wy.letters().begin(), wy.letters().begin() + m);
        std::vector<Letter> right(wy.letters().begin() + m, wy.letters().end());
        Word left_half(left);
        Word right_inverse = Word(right).inverse();
        auto letters_less = [](const Word& a, const Word& b) {
          return std::lexicographical_compare(a.letters().begin(), a.letters().end(),
                                              b.letters().begin(), b.letters().end());
        };
        if (letters_less(right_inverse, left_half)) {
          set_power(basis, x, wx * wy);
        } else {
          set_power(basis, z, wy * wz);
        }
        return true;
      }
    }
  }
  return false;
}

}  // namespace

std::vector<Word> nielsen_reduce(std::span<const Word> generators) {
  std::vector<Word> basis(generators.begin(), generators.end());
  for (;;) {
    prune(basis);
    if (shorten(basis)) continue;
    if (separate_halves(basis)) continue;
    break;
  }
  if (!is_nielsen_reduced(basis)) throw InternalError("Nielsen reduction did not converge");
  return basis;
}

bool is_nielsen_reduced(std::span<const Word> generators) {
  std::vector<Word> basis(generators.begin(), generators.end());
  auto elems = both_signs(basis.size());
  for (Signed x : elems) {
    if (power(basis, x).is_identity()) return false;
  }
  for (Signed x : elems) {
    for (Signed y : elems) {
      Word wx = power(basis, x), wy = power(basis, y);
      Word xy = wx * wy;
      if (inverse_elements(x, y)) continue;
      if (xy.is_identity()) return false;  // a repeated generator
      if (xy.length() < wx.length() || xy.length() < wy.length()) return false;
    }
  }
  for (Signed x : elems) {
    for (Signed y : elems) {
      if (inverse_elements(x, y)) continue;
      for (Signed z : elems) {
        if (inverse_elements(y, z)) continue;
        Word wx = power(basis, x), wy = power(basis, y), wz = power(basis, z);
        long lhs = static_cast<long>((wx * wy * wz).length());
        long bound = static_cast<long>(wx.length()) - static_cast<long>(wy.length()) +
                     static_cast<long>(wz.length());
        if (lhs <= bound) return false;
      }
    }
  }
  return true;
}

WordSet enumerate_elements(std::span<const Word> generators, int max_length) {
  if (max_length > kMaxLength) {
    throw OracleLimitError("oracle length cap is " + std::to_string(kMaxLength) + ", asked for " +
                           std::to_string(max_length));
  }
  if (max_length < 0) throw PreconditionError("negative length cap");
  std::vector<Word> basis = nielsen_reduce(generators);
  std::vector<Word> steps;
  for (const Word& b : basis) {
    steps.push_back(b);
    steps.push_back(b.inverse());
  }
  WordSet found{Word()};
  std::deque<Word> queue{Word()};
  while (!queue.empty()) {
    Word w = std::move(queue.front());
    queue.pop_front();
    for (const Word& s : steps) {
      Word next = s * w;
      if (static_cast<int>(next.length()) > max_length) continue;
      if (found.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return found;
}

WordSet brute_intersection(std::span<const Word> g1, std::span<const Word> g2, int max_length) {
  WordSet a = enumerate_elements(g1, max_length);
  WordSet b = enumerate_elements(g2, max_length);
  WordSet out;
  for (const Word& w : a) {
    if (b.count(w)) out.insert(w);
  }
  return out;
}

}  // namespace gog::oracle
