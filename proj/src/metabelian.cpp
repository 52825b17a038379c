#include "metafix/metabelian.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "metafix/error.hpp"
#include "metafix/fox.hpp"

namespace metafix {

namespace {

LaurentPoly abelian_monomial_minus_one(std::span<const int> a) {
  const std::size_t n = a.size();
  return LaurentPoly::monomial(Monomial(std::vector<int>(a.begin(), a.end()))) - LaurentPoly::constant(n, 1);
}

bool in_commutator_subgroup(const std::vector<int>& a) {
  return std::all_of(a.begin(), a.end(), [](int e) { return e == 0; });
}

}  // namespace

// ---------------------------------------------------------------------------
// MagnusElement

MagnusElement::MagnusElement(std::vector<int> abelian, PolyVector coords)
    : abelian_(std::move(abelian)), coords_(std::move(coords)) {
  if (coords_.size() != abelian_.size()) throw DimensionError("MagnusElement: length mismatch");
  if (augmentation_pairing(coords_) != abelian_monomial_minus_one(abelian_))
    throw InvariantViolation("MagnusElement: sum u_i (x_i - 1) != x^a - 1");
}

MagnusElement MagnusElement::identity(std::size_t n) {
  return MagnusElement(Trusted{}, std::vector<int>(n, 0), PolyVector(n, LaurentPoly(n)));
}

bool MagnusElement::is_identity() const {
  return in_commutator_subgroup(abelian_) &&
         std::all_of(coords_.begin(), coords_.end(), [](const LaurentPoly& p) { return p.is_zero(); });
}

MagnusElement operator*(const MagnusElement& g, const MagnusElement& h) {
  if (g.rank() != h.rank()) throw DimensionError("magnus_mul: rank mismatch");
  const std::size_t n = g.rank();
  Monomial shift(g.abelian_);
  std::vector<int> a(n);
  PolyVector u(n, LaurentPoly(n));
  for (std::size_t i = 0; i < n; ++i) {
    a[i] = g.abelian_[i] + h.abelian_[i];
    u[i] = g.coords_[i] + h.coords_[i].shifted(shift);
  }
  return MagnusElement(MagnusElement::Trusted{}, std::move(a), std::move(u));
}

MagnusElement MagnusElement::inverse() const {
  const std::size_t n = rank();
  Monomial shift = Monomial(abelian_).inverse();
  std::vector<int> a(n);
  PolyVector u(n, LaurentPoly(n));
  for (std::size_t i = 0; i < n; ++i) {
    a[i] = -abelian_[i];
    u[i] = -coords_[i].shifted(shift);
  }
  return MagnusElement(Trusted{}, std::move(a), std::move(u));
}

// ---------------------------------------------------------------------------
// ModuleVector

ModuleVector ModuleVector::from_coords(PolyVector coords) {
  if (!augmentation_pairing(coords).is_zero())
    throw PreconditionError("module vector violates sum u_i (x_i - 1) = 0");
  return ModuleVector(std::move(coords));
}

ModuleVector ModuleVector::zero(std::size_t n) { return ModuleVector(PolyVector(n, LaurentPoly(n))); }

bool ModuleVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const LaurentPoly& p) { return p.is_zero(); });
}

ModuleVector operator+(const ModuleVector& a, const ModuleVector& b) {
  if (a.rank() != b.rank()) throw DimensionError("module vector rank mismatch");
  PolyVector c = a.coords_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coords_[i];
  return ModuleVector(std::move(c));
}

ModuleVector ModuleVector::scaled(const LaurentPoly& u) const {
  PolyVector c = coords_;
  for (auto& p : c) p *= u;
  return ModuleVector(std::move(c));
}

// ---------------------------------------------------------------------------

MagnusElement magnus_of_word(const Word& w) {
  return MagnusElement(w.exponent_sums(), fox_gradient(w));
}

bool is_trivial_in_M(const Word& w) { return magnus_of_word(w).is_identity(); }

ModuleVector module_power_coords(const Word& r, const LaurentPoly& u) {
  if (u.nvars() != r.rank()) throw DimensionError("module_power_coords: ring dimension mismatch");
  if (!in_commutator_subgroup(r.exponent_sums()))
    throw PreconditionError("module_power_coords: word is not in the commutator subgroup");
  return ModuleVector::from_coords(fox_gradient(r)).scaled(u);
}

Word module_power_word(const Word& r, const LaurentPoly& u) {
  if (u.nvars() != r.rank()) throw DimensionError("module_power_word: ring dimension mismatch");
  Word out(r.rank());
  for (const Term& t : u.terms()) {
    if (!t.coeff.fits_slong_p()) throw PreconditionError("module_power_word: coefficient too large");
    Word g = Word::monomial(t.monomial.exponents());
    out *= g * r.pow(t.coeff.get_si()) * g.inverse();
  }
  return out;
}

std::vector<CommutatorPower> commutator_decomposition(const ModuleVector& u) {
  const std::size_t n = u.rank();
  PolyVector work = u.coords();
  std::map<std::pair<std::size_t, std::size_t>, LaurentPoly> lambda;  // coefficient of e_ij
  for (std::size_t k = n; k-- > 1;) {
    if (work[k].is_zero()) continue;
    // work[k] lies in the ideal (x_0 - 1, ..., x_{k-1} - 1); peel it apart one
    // variable at a time.
    LaurentPoly rest = work[k];
    for (std::size_t i = 0; i < k; ++i) {
      LaurentPoly next = rest.at_one(i);
      LaurentPoly c = divide_by_x_minus_one(rest - next, i);
      rest = std::move(next);
      if (c.is_zero()) continue;
      // u = u' - c e_ik with u' = work + c e_ik, where
      // e_ik = (x_k - 1) eps_i - (x_i - 1) eps_k.
      work[i] += c.shifted(Monomial::variable(n, k)) - c;
      work[k] -= c.shifted(Monomial::variable(n, i)) - c;
      auto [it, fresh] = lambda.try_emplace({i, k}, LaurentPoly(n));
      it->second -= c;
    }
    if (!rest.is_zero() || !work[k].is_zero())
      throw InvariantViolation("commutator_decomposition: coordinate not in the augmentation ideal");
  }
  if (n > 0 && !work[0].is_zero())
    throw InvariantViolation("commutator_decomposition: residual first coordinate");

  // gradient([x_i, x_j]) = -x_i^-1 x_j^-1 e_ij
  std::vector<CommutatorPower> out;
  for (auto& [ij, l] : lambda) {
    if (l.is_zero()) continue;
    Monomial m = Monomial::variable(n, ij.first) * Monomial::variable(n, ij.second);
    out.push_back({ij.first, ij.second, -l.shifted(m)});
  }
  return out;
}

Word realize_module_coords(const ModuleVector& u) {
  const std::size_t n = u.rank();
  Word w(n);
  for (const CommutatorPower& cp : commutator_decomposition(u)) {
    Word c = Word::commutator(Word::generator(n, cp.i), Word::generator(n, cp.j));
    w *= module_power_word(c, cp.exponent);
  }
  return w;
}

}  // namespace metafix
