#pragma once

// Abelianized Fox calculus. d_i^a(w) is the image in ZA of the left Fox
// derivative of w with respect to x_i, computed by
//   d(1) = 0,  d(x_j) = e_j,  d(x_j^-1) = -x_j^-1 e_j,  d(uv) = d(u) + u^a d(v).
// It satisfies sum_i d_i^a(w) (x_i - 1) = w^a - 1.

#include <cstddef>

#include "metafix/endomorphism.hpp"
#include "metafix/lamatrix.hpp"
#include "metafix/laurent.hpp"
#include "metafix/word.hpp"

namespace metafix {

/// d_i^a(w) for 0 <= i < rank.
LaurentPoly fox_abel(const Word& w, std::size_t i);

/// (d_1^a(w), ..., d_n^a(w)) in one pass.
PolyVector fox_gradient(const Word& w);

/// Row vector (x_1 - 1, ..., x_n - 1) of the augmentation basis.
PolyVector augmentation_basis(std::size_t n);

/// sum_i u_i (x_i - 1)
LaurentPoly augmentation_pairing(std::span<const LaurentPoly> u);

/// J^a(phi), entry (i, j) = d_j^a(y_i).
LaMatrix jacobian_abel(const Endomorphism& phi);

/// For IA phi and psi, J^a(phi o psi) = J^a(psi) * J^a(phi) where
/// (phi o psi)(x) = phi(psi(x)). Equivalently, substituting psi into the
/// images of phi gives J^a(psi o phi) = J^a(phi) * J^a(psi).
bool product_rule_check(const Endomorphism& phi, const Endomorphism& psi);

}  // namespace metafix
