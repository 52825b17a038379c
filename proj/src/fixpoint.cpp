#include "metafix/fixpoint.hpp"

#include <algorithm>

#include "metafix/error.hpp"
#include "metafix/fox.hpp"

namespace metafix {

namespace {

void require_ia(const Endomorphism& phi, const char* op) {
  if (!phi.is_ia()) throw PreconditionError(std::string(op) + ": endomorphism is not IA");
}

bool all_zero(std::span<const int> a) {
  return std::all_of(a.begin(), a.end(), [](int e) { return e == 0; });
}

PolyVector commutator_gradient(std::size_t n, std::size_t k) {
  return fox_gradient(Word::commutator(Word::generator(n, k), Word::generator(n, k + 1)));
}

}  // namespace

std::string_view to_string(CosetStatus s) {
  switch (s) {
    case CosetStatus::found:
      return "found";
    case CosetStatus::none:
      return "none";
    case CosetStatus::undecided:
      return "undecided";
  }
  return "?";
}

std::string_view to_string(RankClass c) {
  return c == RankClass::n_minus_1 ? "n-1" : "<=n-2";
}

std::vector<ModuleVector> ia_displacements(const Endomorphism& phi) {
  require_ia(phi, "ia_displacements");
  const std::size_t n = phi.rank();
  std::vector<ModuleVector> v;
  v.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    Word s = Word::generator(n, k, -1) * phi.image(k);
    v.push_back(ModuleVector::from_coords(fox_gradient(s)));
  }
  return v;
}

LaMatrix fixed_point_system(const Endomorphism& phi) {
  std::vector<ModuleVector> v = ia_displacements(phi);
  const std::size_t n = phi.rank();
  const LaurentPoly one = LaurentPoly::constant(n, 1);
  LaMatrix b(n, n == 0 ? 0 : n - 1, n);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    LaurentPoly left = LaurentPoly::variable(n, k + 1, -1) - one;
    LaurentPoly right = one - LaurentPoly::variable(n, k, -1);
    ModuleVector col = v[k].scaled(left) + v[k + 1].scaled(right);
    for (std::size_t i = 0; i < n; ++i) b(i, k) = col.coords()[i];
  }
  return b;
}

bool verify_fixed(const Endomorphism& phi, const Word& g) {
  return is_trivial_in_M(phi.apply(g) * g.inverse());
}

std::optional<MprimeWitness> find_fixed_in_Mprime(const Endomorphism& phi, bool verify) {
  require_ia(phi, "detect_fixed_in_Mprime");
  const std::size_t n = phi.rank();
  auto z = kernel_vector(fixed_point_system(phi));
  if (!z) return std::nullopt;
  ModuleVector u = ModuleVector::zero(n);
  for (std::size_t k = 0; k + 1 < n; ++k)
    if (!(*z)[k].is_zero()) u = u + ModuleVector::from_coords(commutator_gradient(n, k)).scaled((*z)[k]);
  Word g = realize_module_coords(u);
  if (verify && (!verify_fixed(phi, g) || is_trivial_in_M(g)))
    throw InvariantViolation("detect_fixed_in_Mprime: kernel vector does not give a nontrivial fixed point");
  return MprimeWitness{*std::move(z), std::move(g)};
}

std::optional<Word> detect_fixed_in_Mprime(const Endomorphism& phi) {
  auto w = find_fixed_in_Mprime(phi);
  if (!w) return std::nullopt;
  return std::move(w->witness);
}

namespace {

CosetResult coset_search(const Endomorphism& phi, const LaMatrix& jmi, std::span<const int> a, bool verify) {
  const std::size_t n = phi.rank();
  CosetResult res;
  res.a.assign(a.begin(), a.end());

  Word wa = Word::monomial(a);
  PolyVector s = fox_gradient(wa);
  PolyVector t = fox_gradient(phi.apply(wa));
  Monomial back = Monomial(res.a).inverse();

  // Unknown row vector u; the system u (J - I) = b, u . (x - 1) = 0 is
  // transposed into (n + 1) equations in n unknowns.
  LaMatrix m(n + 1, n, n);
  PolyVector rhs(n + 1, LaurentPoly(n));
  PolyVector aug = augmentation_basis(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) m(j, i) = jmi(i, j);
    rhs[j] = (s[j] - t[j]).shifted(back);
  }
  for (std::size_t i = 0; i < n; ++i) m(n, i) = aug[i];

  IntegralSolve sol = solve_integral(m, rhs);
  switch (sol.kind) {
    case IntegralSolve::Kind::inconsistent:
    case IntegralSolve::Kind::non_integral:
      res.status = CosetStatus::none;
      return res;
    case IntegralSolve::Kind::undecided:
      res.status = CosetStatus::undecided;
      return res;
    case IntegralSolve::Kind::solution:
      break;
  }
  Word g = wa * realize_module_coords(ModuleVector::from_coords(std::move(sol.solution)));
  if (verify) {
    if (!verify_fixed(phi, g))
      throw InvariantViolation("detect_fixed_in_coset: solution does not give a fixed point");
    res.verified = true;
  }
  res.status = CosetStatus::found;
  res.witness = std::move(g);
  return res;
}

}  // namespace

CosetResult detect_fixed_in_coset(const Endomorphism& phi, std::span<const int> a, bool verify) {
  require_ia(phi, "detect_fixed_in_coset");
  if (a.size() != phi.rank()) throw DimensionError("detect_fixed_in_coset: exponent vector length");
  if (all_zero(a)) throw PreconditionError("detect_fixed_in_coset: a = 0 is the commutator subgroup");
  const std::size_t n = phi.rank();
  return coset_search(phi, jacobian_abel(phi) - LaMatrix::identity(n, n), a, verify);
}

bool normality_check(const Endomorphism& phi, const Word& g) {
  if (!all_zero(g.exponent_sums())) throw PreconditionError("normality_check: word is not in M'");
  if (!verify_fixed(phi, g)) throw PreconditionError("normality_check: word is not fixed");
  const std::size_t n = phi.rank();
  for (std::size_t i = 0; i < n; ++i)
    for (int e : {1, -1}) {
      Word x = Word::generator(n, i, e);
      if (!verify_fixed(phi, x * g * x.inverse())) return false;
    }
  return true;
}

bool FixReport::all_verified() const {
  if (mprime && !mprime_verified) return false;
  return std::all_of(cosets.begin(), cosets.end(),
                     [](const CosetResult& c) { return c.status != CosetStatus::found || c.verified; });
}

bool FixReport::any_witness() const {
  return mprime.has_value() ||
         std::any_of(cosets.begin(), cosets.end(), [](const CosetResult& c) { return c.status == CosetStatus::found; });
}

FixReport search_fixed(const Endomorphism& phi, const SearchOptions& opts) {
  require_ia(phi, "search_fixed");
  if (opts.bound < 0) throw PreconditionError("search_fixed: bound must be nonnegative");
  const std::size_t n = phi.rank();
  FixReport rep;
  rep.ia = true;
  rep.bound = opts.bound;
  LaMatrix jmi = jacobian_abel(phi) - LaMatrix::identity(n, n);
  rep.rank_JmI = rank(jmi);
  if (rep.rank_JmI >= n && n > 0)
    throw InvariantViolation("search_fixed: J^a - I has full rank for an IA map");
  rep.rank_class = rep.rank_JmI + 2 <= n ? RankClass::at_most_n_minus_2 : RankClass::n_minus_1;

  rep.mprime = find_fixed_in_Mprime(phi, opts.verify);
  if (rep.mprime && opts.verify) {
    rep.mprime_verified = true;
    rep.mprime_normal = normality_check(phi, rep.mprime->witness);
  }

  std::vector<int> a(n, -opts.bound);
  if (opts.bound == 0 || n == 0) return rep;
  while (true) {
    if (!all_zero(a)) rep.cosets.push_back(coset_search(phi, jmi, a, opts.verify));
    std::size_t k = n;
    while (k > 0 && a[k - 1] == opts.bound) a[--k] = -opts.bound;
    if (k == 0) break;
    ++a[k - 1];
  }
  return rep;
}

}  // namespace metafix
