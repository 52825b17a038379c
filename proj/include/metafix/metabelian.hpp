#pragma once

// Normal form for the free metabelian group M_n = F_n / F_n''. An element is
// the pair (a, u) of its abelianization a in Z^n and its abelianized Fox
// gradient u in ZA^n; the pair determines the element (Magnus embedding), so
// comparing pairs decides the word problem in M_n.
//
// The commutator subgroup M' is a ZA-module under conjugation,
// r^u = prod_m (g_m r g_m^-1)^{c_m} for u = sum c_m m, and its Fox gradients
// are exactly the vectors u with sum u_i (x_i - 1) = 0.

#include <cstddef>
#include <vector>

#include "metafix/lamatrix.hpp"
#include "metafix/laurent.hpp"
#include "metafix/word.hpp"

namespace metafix {

class MagnusElement {
 public:
  /// Throws InvariantViolation unless sum u_i (x_i - 1) = x^a - 1.
  MagnusElement(std::vector<int> abelian, PolyVector coords);

  static MagnusElement identity(std::size_t n);

  std::size_t rank() const { return abelian_.size(); }
  const std::vector<int>& abelian() const { return abelian_; }
  const PolyVector& coords() const { return coords_; }
  bool is_identity() const;

  /// (a, u)(b, v) = (a + b, u + x^a v)
  friend MagnusElement operator*(const MagnusElement& g, const MagnusElement& h);
  /// (a, u)^-1 = (-a, -x^-a u)
  MagnusElement inverse() const;

  friend bool operator==(const MagnusElement&, const MagnusElement&) = default;

 private:
  struct Trusted {};
  MagnusElement(Trusted, std::vector<int> abelian, PolyVector coords)
      : abelian_(std::move(abelian)), coords_(std::move(coords)) {}

  std::vector<int> abelian_;
  PolyVector coords_;
};

/// Fox gradient of an element of M': sum u_i (x_i - 1) = 0.
class ModuleVector {
 public:
  /// Throws PreconditionError when the constraint fails.
  static ModuleVector from_coords(PolyVector coords);
  static ModuleVector zero(std::size_t n);

  std::size_t rank() const { return coords_.size(); }
  const PolyVector& coords() const { return coords_; }
  bool is_zero() const;

  friend ModuleVector operator+(const ModuleVector& a, const ModuleVector& b);
  ModuleVector scaled(const LaurentPoly& u) const;

  friend bool operator==(const ModuleVector&, const ModuleVector&) = default;

 private:
  explicit ModuleVector(PolyVector c) : coords_(std::move(c)) {}
  PolyVector coords_;
};

MagnusElement magnus_of_word(const Word& w);
bool is_trivial_in_M(const Word& w);

/// Coordinates of r^u for r in M'. Throws PreconditionError if r is not in M'.
ModuleVector module_power_coords(const Word& r, const LaurentPoly& u);

/// Word representing r^u: prod over the terms c*x^m of u of
/// g_m r^c g_m^-1, with g_m = x_1^{m_1} ... x_n^{m_n}.
Word module_power_word(const Word& r, const LaurentPoly& u);

/// u = sum_{i<j} coeff * gradient([x_i, x_j]).
struct CommutatorPower {
  std::size_t i;
  std::size_t j;
  LaurentPoly exponent;
};

/// Expresses a module vector in the commutators [x_i, x_j], i < j, by
/// eliminating the highest nonzero coordinate with exact divisions by
/// (x_k - 1).
std::vector<CommutatorPower> commutator_decomposition(const ModuleVector& u);

/// A word w in F' with magnus_of_word(w).coords() == u.
Word realize_module_coords(const ModuleVector& u);

}  // namespace metafix
