#pragma once

// Random instance generators and brute-force oracles shared by the tests.
// The oracles deliberately avoid the library's own algorithms.

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "metafix/endomorphism.hpp"
#include "metafix/lamatrix.hpp"
#include "metafix/laurent.hpp"
#include "metafix/metabelian.hpp"
#include "metafix/random.hpp"
#include "metafix/word.hpp"

namespace metafix::testing {

using namespace metafix::gen;

/// x1 -> x1 [x2,x3,x1], x_i -> x_i otherwise.
inline Endomorphism commutator_twist(std::size_t n = 3) {
  std::vector<Word> imgs;
  for (std::size_t k = 0; k < n; ++k) imgs.push_back(Word::generator(n, k));
  imgs[0] = Word::parse("x1 [x2,x3,x1]", n);
  return Endomorphism(std::move(imgs));
}

/// x1 -> x1 s, x2 -> x2 s^-1 on F_2.
inline Endomorphism opposite_shift(const Word& s) {
  return Endomorphism({Word::generator(2, 0) * s, Word::generator(2, 1) * s.inverse()});
}

inline std::vector<Word> opposite_shift_displacements() {
  return {Word::parse("[x1,x2]", 2), Word::parse("x1 [x1,x2] x1^-1", 2), Word::parse("[x1,x2]^2", 2)};
}

/// x -> g x g^-1.
inline Endomorphism inner(const Word& g) {
  std::vector<Word> imgs;
  for (std::size_t i = 0; i < g.rank(); ++i) imgs.push_back(g * Word::generator(g.rank(), i) * g.inverse());
  return Endomorphism(std::move(imgs));
}

// ---------------------------------------------------------------------------
// Oracles

/// d_i^a(w) as the sum over occurrences of x_i^{+-1}: +prefix before a
/// positive letter, -prefix through a negative letter.
inline LaurentPoly naive_fox(const Word& w, std::size_t i) {
  const std::size_t n = w.rank();
  std::map<std::vector<int>, long> acc;
  std::vector<int> prefix(n, 0);
  for (const Letter& l : w.letters()) {
    if (l.sign < 0) --prefix[l.gen];
    if (l.gen == i) acc[prefix] += l.sign;
    if (l.sign > 0) ++prefix[l.gen];
  }
  std::vector<Term> terms;
  for (auto& [e, c] : acc) terms.push_back({Monomial(e), c});
  return LaurentPoly::from_terms(n, std::move(terms));
}

/// Leibniz formula over all permutations.
inline LaurentPoly leibniz_det(const LaMatrix& m) {
  const std::size_t k = m.rows();
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  LaurentPoly total(m.nvars());
  do {
    int inversions = 0;
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = a + 1; b < k; ++b)
        if (perm[a] > perm[b]) ++inversions;
    LaurentPoly prod = LaurentPoly::constant(m.nvars(), 1);
    for (std::size_t r = 0; r < k; ++r) prod *= m(r, perm[r]);
    total += inversions % 2 ? -prod : prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Naive rank: the size of the largest nonzero minor, via Leibniz.
inline std::size_t minor_rank(const LaMatrix& m) {
  const std::size_t r = m.rows(), c = m.cols();
  for (std::size_t k = std::min(r, c); k > 0; --k) {
    std::vector<bool> rsel(r, false), csel(c, false);
    std::fill(rsel.begin(), rsel.begin() + static_cast<long>(k), true);
    do {
      std::fill(csel.begin(), csel.end(), false);
      std::fill(csel.begin(), csel.begin() + static_cast<long>(k), true);
      do {
        std::vector<std::size_t> ri, ci;
        for (std::size_t i = 0; i < r; ++i)
          if (rsel[i]) ri.push_back(i);
        for (std::size_t j = 0; j < c; ++j)
          if (csel[j]) ci.push_back(j);
        if (!leibniz_det(m.submatrix(ri, ci)).is_zero()) return k;
      } while (std::prev_permutation(csel.begin(), csel.end()));
    } while (std::prev_permutation(rsel.begin(), rsel.end()));
  }
  return 0;
}

}  // namespace metafix::testing

#ifdef DOCTEST_VERSION_STR
namespace doctest {
template <>
struct StringMaker<metafix::LaurentPoly> {
  static String convert(const metafix::LaurentPoly& p) { return p.to_string().c_str(); }
};
template <>
struct StringMaker<metafix::Word> {
  static String convert(const metafix::Word& w) { return w.to_string().c_str(); }
};
}  // namespace doctest
#endif
