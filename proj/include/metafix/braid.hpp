#pragma once

// Pure braids as IA-automorphisms of F_n and their Gassner matrices.
//
// Conventions:
//  * The Artin generator s_i acts by x_i -> x_i x_{i+1} x_i^-1,
//    x_{i+1} -> x_i, fixing the other generators; every braid fixes the
//    product x_1 x_2 ... x_n.
//  * A_ij = s_{j-1} ... s_{i+1} s_i^2 s_{i+1}^-1 ... s_{j-1}^-1 (i < j).
//  * Braid words act on the right: the automorphism of the concatenation
//    b c substitutes the images of c into the images of b, so that
//    gassner_unreduced(b c) = gassner_unreduced(b) * gassner_unreduced(c).
//  * The Gassner variables t_i are the ring variables x_i.
//  * Reduction: with p = (1, x_1, x_1 x_2, ..., x_1...x_{n-1}), the Fox
//    gradient of x_1...x_n, the basis change C = [[I, 0], [p]] gives
//    C J C^-1 = [[G, *], [0 ... 0, 1]]; the reduced matrix is G.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "metafix/endomorphism.hpp"
#include "metafix/lamatrix.hpp"

namespace metafix {

/// A_ij^power with 0-based strands i < j.
struct PureGenerator {
  std::size_t i = 0;
  std::size_t j = 1;
  int power = 1;

  friend bool operator==(const PureGenerator&, const PureGenerator&) = default;
};

class BraidWord {
 public:
  explicit BraidWord(std::size_t strands = 2, std::vector<PureGenerator> gens = {});

  /// Whitespace-separated tokens `A[i,j]` or `A[i,j]^E`, 1 <= i < j <= n.
  static BraidWord parse(std::string_view text, std::size_t strands);

  std::size_t strands() const { return strands_; }
  const std::vector<PureGenerator>& generators() const { return gens_; }
  std::size_t length() const { return gens_.size(); }

  BraidWord inverse() const;
  friend BraidWord operator*(const BraidWord& a, const BraidWord& b);

  std::string to_string() const;

 private:
  std::size_t strands_;
  std::vector<PureGenerator> gens_;
};

/// Automorphism of the Artin generator s_i (0-based, i + 1 < n) or its inverse.
Endomorphism artin_generator(std::size_t n, std::size_t i, int sign = 1);
/// Automorphism of A_ij (0-based, i < j < n) or its inverse.
Endomorphism pure_generator(std::size_t n, std::size_t i, std::size_t j, int sign = 1);

Endomorphism braid_to_automorphism(const BraidWord& b);

LaMatrix gassner_unreduced(const BraidWord& b);
/// Conjugates an unreduced Gassner matrix and deletes the last row and column.
/// Throws InvariantViolation unless the conjugated last row is (0, ..., 0, 1).
LaMatrix gassner_reduce(const LaMatrix& unreduced);
LaMatrix gassner_reduced(const BraidWord& b);

/// det(reduced Gassner - I) = 0, i.e. the multivariable Alexander polynomial
/// of the closure vanishes.
bool alexander_vanishes(const BraidWord& b);

}  // namespace metafix
