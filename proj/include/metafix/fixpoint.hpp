#pragma once

// Fixed points of IA-endomorphisms of the free metabelian group M_n.
//
// Write phi(x_k) = x_k s_k with s_k in M' and let v_k be the Fox gradient of
// s_k. An element g = prod_k [x_k, x_{k+1}]^{z_k} of M' is fixed iff B z = 0,
// where column k of B is the gradient change of the k-th commutator:
//   B_k = (x_{k+1}^-1 - 1) v_k + (1 - x_k^-1) v_{k+1}.
// Every nontrivial fixed point of M' has a nonzero ZA-multiple of this form
// and the module M' is torsion-free, so a nonzero kernel of B is equivalent
// to a nontrivial fixed point in M'.
//
// Outside M', the coset x^a M' contains a fixed point iff some u in ZA^n
// solves
//   u (J^a - I) = x^-a (s_a - t_a),   sum_i u_i (x_i - 1) = 0,
// where s_a and t_a are the gradients of w_a = x_1^{a_1}...x_n^{a_n} and of
// phi(w_a); the fixed point is then w_a times the element of M' with
// gradient u.

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "metafix/endomorphism.hpp"
#include "metafix/lamatrix.hpp"
#include "metafix/metabelian.hpp"
#include "metafix/word.hpp"

namespace metafix {

/// Gradients of s_k = x_k^-1 y_k.
std::vector<ModuleVector> ia_displacements(const Endomorphism& phi);

/// The n x (n-1) matrix B above.
LaMatrix fixed_point_system(const Endomorphism& phi);

struct MprimeWitness {
  PolyVector kernel;  // z with B z = 0, reduced
  Word witness;       // realizes prod_k [x_k, x_{k+1}]^{z_k}
};

/// Nontrivial fixed point inside M', or nullopt if there is none.
/// With `verify`, the witness is re-checked by the word-problem oracle and a
/// failure raises InvariantViolation.
std::optional<MprimeWitness> find_fixed_in_Mprime(const Endomorphism& phi, bool verify = true);
std::optional<Word> detect_fixed_in_Mprime(const Endomorphism& phi);

enum class CosetStatus { found, none, undecided };

std::string_view to_string(CosetStatus s);

struct CosetResult {
  std::vector<int> a;
  CosetStatus status = CosetStatus::undecided;
  std::optional<Word> witness;
  bool verified = false;
};

/// Searches the coset x^a M' (a != 0) for a fixed point.
CosetResult detect_fixed_in_coset(const Endomorphism& phi, std::span<const int> a, bool verify = true);

/// rank(J^a - I) is at most n - 1 for every IA map.
enum class RankClass { at_most_n_minus_2, n_minus_1 };

std::string_view to_string(RankClass c);

struct FixReport {
  bool ia = false;
  std::size_t rank_JmI = 0;
  RankClass rank_class = RankClass::n_minus_1;
  std::optional<MprimeWitness> mprime;
  bool mprime_verified = false;
  bool mprime_normal = false;
  int bound = 0;
  std::vector<CosetResult> cosets;

  /// Every reported witness passed the oracle.
  bool all_verified() const;
  bool any_witness() const;
};

struct SearchOptions {
  int bound = 2;
  bool verify = true;
};

/// detect_fixed_in_Mprime plus detect_fixed_in_coset over every a != 0 with
/// max |a_i| <= bound, in lexicographic order of a.
FixReport search_fixed(const Endomorphism& phi, const SearchOptions& opts = {});

/// phi(g) = g in M_n, decided by the Magnus normal form of phi(g) g^-1.
bool verify_fixed(const Endomorphism& phi, const Word& g);

/// For g in Fix(phi) and in M': every conjugate x_i^{+-1} g x_i^{-+1} is fixed.
bool normality_check(const Endomorphism& phi, const Word& g);

}  // namespace metafix
