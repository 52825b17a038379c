#include "metafix/fox.hpp"

#include "metafix/error.hpp"

namespace metafix {

PolyVector fox_gradient(const Word& w) {
  const std::size_t n = w.rank();
  std::vector<std::vector<Term>> acc(n);
  std::vector<int> prefix(n, 0);
  for (const Letter& l : w.letters()) {
    if (l.sign > 0) {
      acc[l.gen].push_back({Monomial(prefix), 1});
      ++prefix[l.gen];
    } else {
      --prefix[l.gen];
      acc[l.gen].push_back({Monomial(prefix), -1});
    }
  }
  PolyVector out;
  out.reserve(n);
  for (auto& terms : acc) out.push_back(LaurentPoly::from_terms(n, std::move(terms)));
  return out;
}

LaurentPoly fox_abel(const Word& w, std::size_t i) {
  if (i >= w.rank()) throw DimensionError("fox_abel: generator index out of range");
  return fox_gradient(w)[i];
}

PolyVector augmentation_basis(std::size_t n) {
  PolyVector c;
  for (std::size_t i = 0; i < n; ++i)
    c.push_back(LaurentPoly::variable(n, i) - LaurentPoly::constant(n, 1));
  return c;
}

LaurentPoly augmentation_pairing(std::span<const LaurentPoly> u) {
  const std::size_t n = u.size();
  LaurentPoly s(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i].nvars() != n) throw DimensionError("augmentation_pairing: ring dimension mismatch");
    s += u[i].shifted(Monomial::variable(n, i)) - u[i];
  }
  return s;
}

LaMatrix jacobian_abel(const Endomorphism& phi) {
  const std::size_t n = phi.rank();
  std::vector<PolyVector> rows;
  rows.reserve(n);
  for (const Word& y : phi.images()) rows.push_back(fox_gradient(y));
  return LaMatrix::from_rows(std::move(rows), n);
}

bool product_rule_check(const Endomorphism& phi, const Endomorphism& psi) {
  if (!phi.is_ia() || !psi.is_ia()) throw PreconditionError("product_rule_check: both maps must be IA");
  return jacobian_abel(compose(phi, psi)) == jacobian_abel(psi) * jacobian_abel(phi);
}

}  // namespace metafix
