#pragma once

#include <random>
#include <vector>

#include "cliffwave/multivector.hpp"

namespace cliffwave::testing {

// Random exact multivector with small Gaussian-integer coefficients.
inline ExactMV random_exact(int dim, std::mt19937_64& rng, int max_terms = 6) {
  std::uniform_int_distribution<int> c(-4, 4);
  std::uniform_int_distribution<Blade> b(0, (Blade{1} << dim) - 1);
  std::uniform_int_distribution<int> count(0, max_terms);
  ExactMV r(dim);
  int n = count(rng);
  for (int i = 0; i < n; ++i) r.add(b(rng), Exact(mpq_class(c(rng), 1 + (i % 3)), mpq_class(c(rng))));
  return r;
}

// Reduces a word of generators to canonical order, returning the sign and the blade.
inline std::pair<int, Blade> reduce_word(std::vector<int> word) {
  int sign = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
      if (word[i] == word[i + 1]) {
        sign = -sign;  // e_i e_i = -1
        word.erase(word.begin() + static_cast<long>(i), word.begin() + static_cast<long>(i) + 2);
        changed = true;
        break;
      }
      if (word[i] > word[i + 1]) {
        std::swap(word[i], word[i + 1]);
        sign = -sign;
        changed = true;
        break;
      }
    }
  }
  Blade b = 0;
  for (int g : word) b |= Blade{1} << g;
  return {sign, b};
}

}  // namespace cliffwave::testing
