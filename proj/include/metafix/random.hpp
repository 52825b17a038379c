#pragma once

// Random instances: Laurent polynomials, words, IA maps and pure braids.
// Shared by the selftest subcommand and the test suites.

#include <algorithm>
#include <cstddef>
#include <random>
#include <utility>
#include <vector>

#include "metafix/braid.hpp"
#include "metafix/endomorphism.hpp"
#include "metafix/lamatrix.hpp"
#include "metafix/laurent.hpp"
#include "metafix/metabelian.hpp"
#include "metafix/word.hpp"

namespace metafix::gen {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline LaurentPoly random_poly(Rng& rng, std::size_t n, int max_terms = 4, int exp_range = 2, int coeff_range = 3) {
  std::vector<Term> terms;
  int count = uniform(rng, 0, max_terms);
  for (int t = 0; t < count; ++t) {
    std::vector<int> e(n);
    for (auto& x : e) x = uniform(rng, -exp_range, exp_range);
    int c = 0;
    while (c == 0) c = uniform(rng, -coeff_range, coeff_range);
    terms.push_back({Monomial(e), c});
  }
  return LaurentPoly::from_terms(n, std::move(terms));
}

inline LaurentPoly random_nonzero_poly(Rng& rng, std::size_t n, int max_terms = 4, int exp_range = 2) {
  LaurentPoly p(n);
  while (p.is_zero()) p = random_poly(rng, n, max_terms, exp_range);
  return p;
}

/// Unreduced letter sequence, then reduced by the library.
inline Word random_word(Rng& rng, std::size_t n, std::size_t max_len) {
  std::vector<Letter> letters(static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(max_len))));
  for (auto& l : letters) l = {static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(n) - 1)), uniform(rng, 0, 1) ? 1 : -1};
  return Word::reduce(n, letters);
}

/// A product of conjugated basic commutators, so it lies in F'.
inline Word random_commutator_word(Rng& rng, std::size_t n, int factors = 2, std::size_t conj_len = 2) {
  Word w(n);
  for (int f = 0; f < factors; ++f) {
    std::size_t i = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(n) - 2));
    std::size_t j = static_cast<std::size_t>(uniform(rng, static_cast<int>(i) + 1, static_cast<int>(n) - 1));
    Word c = Word::commutator(Word::generator(n, i), Word::generator(n, j));
    if (uniform(rng, 0, 1)) c = c.inverse();
    Word g = random_word(rng, n, conj_len);
    w *= g * c * g.inverse();
  }
  return w;
}

/// y_k = x_k r_k with r_k in F' and |y_k| <= max_len.
inline Endomorphism random_ia(Rng& rng, std::size_t n, std::size_t max_len = 16) {
  std::vector<Word> imgs;
  for (std::size_t k = 0; k < n; ++k) {
    while (true) {
      Word y = Word::generator(n, k) * random_commutator_word(rng, n, uniform(rng, 0, 2));
      if (y.length() <= max_len) {
        imgs.push_back(std::move(y));
        break;
      }
    }
  }
  return Endomorphism(std::move(imgs));
}

inline LaMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, std::size_t n, int max_terms = 3) {
  LaMatrix m(rows, cols, n);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_poly(rng, n, max_terms, 1, 2);
  return m;
}

/// s_k = prod over a proper subset S of the basic commutators [x_i, x_j] of
/// random module powers, |S| <= n - 2, so rank(J^a - I) <= |S|.
inline Endomorphism random_low_rank_ia(Rng& rng, std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::shuffle(pairs.begin(), pairs.end(), rng);
  pairs.resize(static_cast<std::size_t>(uniform(rng, 1, static_cast<int>(n) - 2)));
  while (true) {
    std::vector<Word> imgs;
    bool moved = false;
    for (std::size_t k = 0; k < n; ++k) {
      Word s(n);
      for (auto [i, j] : pairs) {
        if (uniform(rng, 0, 2) == 0) continue;
        Word c = Word::commutator(Word::generator(n, i), Word::generator(n, j));
        s *= module_power_word(c, random_poly(rng, n, 2, 1, 2));
      }
      moved = moved || !s.empty();
      imgs.push_back(Word::generator(n, k) * s);
    }
    if (moved) return Endomorphism(std::move(imgs));
  }
}

/// Up to `max_len` pure generators A_ij^{+-1}.
inline BraidWord random_braid(Rng& rng, std::size_t n, int max_len) {
  std::vector<PureGenerator> g;
  int len = uniform(rng, 0, max_len);
  for (int k = 0; k < len; ++k) {
    std::size_t i = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(n) - 2));
    std::size_t j = static_cast<std::size_t>(uniform(rng, static_cast<int>(i) + 1, static_cast<int>(n) - 1));
    g.push_back({i, j, uniform(rng, 0, 1) ? 1 : -1});
  }
  return BraidWord(n, std::move(g));
}

}  // namespace metafix::gen
