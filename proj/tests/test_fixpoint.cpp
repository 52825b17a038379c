#include <doctest.h>

#include "metafix/error.hpp"
#include "metafix/fixpoint.hpp"
#include "metafix/fox.hpp"
#include "support.hpp"

using namespace metafix;
using metafix::testing::Rng;

namespace {

Word W(const char* s, std::size_t n) { return Word::parse(s, n); }

/// g equals c^e in M for a unit e.
bool is_unit_power_of(const Word& g, const Word& c) {
  PolyVector gg = fox_gradient(g), cc = fox_gradient(c);
  std::optional<LaurentPoly> ratio;
  for (std::size_t i = 0; i < gg.size(); ++i) {
    if (cc[i].is_zero()) {
      if (!gg[i].is_zero()) return false;
      continue;
    }
    auto q = divide_exact(gg[i], cc[i]);
    if (!q || !q->is_unit() || (ratio && *ratio != *q)) return false;
    ratio = q;
  }
  return ratio.has_value() && g.exponent_sums() == std::vector<int>(g.rank(), 0);
}

Word product_of_commutators(std::size_t n, const PolyVector& z) {
  ModuleVector u = ModuleVector::zero(n);
  for (std::size_t k = 0; k + 1 < n; ++k)
    u = u + module_power_coords(Word::commutator(Word::generator(n, k), Word::generator(n, k + 1)), z[k]);
  return realize_module_coords(u);
}

}  // namespace

TEST_CASE("IA test") {
  CHECK(Endomorphism::identity(3).is_ia());
  CHECK(testing::commutator_twist().is_ia());
  CHECK_FALSE(Endomorphism({W("x2", 2), W("x1", 2)}).is_ia());
}

TEST_CASE("displacements") {
  for (const ModuleVector& v : ia_displacements(Endomorphism::identity(3))) CHECK(v.is_zero());

  auto v = ia_displacements(testing::commutator_twist());
  CHECK(v[0].coords() == fox_gradient(W("[x2,x3,x1]", 3)));
  CHECK(v[1].is_zero());
  CHECK(v[2].is_zero());

  Word s = W("[x1,x2]", 2);
  auto w = ia_displacements(testing::opposite_shift(s));
  CHECK(w[0].coords() == fox_gradient(s));
  CHECK(w[1].coords() == fox_gradient(s.inverse()));
  CHECK_THROWS_AS(ia_displacements(Endomorphism({W("x2", 2), W("x1", 2)})), PreconditionError);
}

TEST_CASE("fixed point system") {
  CHECK(fixed_point_system(Endomorphism::identity(3)).is_zero());

  Endomorphism twist = testing::commutator_twist();
  LaMatrix b = fixed_point_system(twist);
  CHECK(b.rows() == 3);
  CHECK(b.cols() == 2);
  for (std::size_t i = 0; i < 3; ++i) CHECK(b(i, 1).is_zero());
  CHECK_FALSE(b.is_zero());
  PolyVector z{LaurentPoly(3), LaurentPoly::constant(3, 1)};
  for (const LaurentPoly& p : b.apply(z)) CHECK(p.is_zero());

  for (const Word& s : testing::opposite_shift_displacements()) {
    LaMatrix b2 = fixed_point_system(testing::opposite_shift(s));
    CHECK(b2.cols() == 1);
    CHECK_FALSE(kernel_vector(b2).has_value());
  }
}

TEST_CASE("B z = 0 exactly when the product of commutator powers is fixed") {
  Rng rng(51);
  int fixed = 0, moved = 0;
  for (int k = 0; k < 120; ++k) {
    std::size_t n = static_cast<std::size_t>(testing::uniform(rng, 2, 4));
    Endomorphism phi = k % 2 ? testing::random_ia(rng, n, 12) : testing::random_low_rank_ia(rng, std::max<std::size_t>(n, 3));
    n = phi.rank();
    LaMatrix b = fixed_point_system(phi);
    PolyVector z(n - 1, LaurentPoly(n));
    auto kv = kernel_vector(b);
    if (kv && testing::uniform(rng, 0, 2)) {
      LaurentPoly c = testing::random_nonzero_poly(rng, n, 2, 1);
      for (std::size_t i = 0; i + 1 < n; ++i) z[i] = (*kv)[i] * c;
    } else {
      for (auto& p : z) p = testing::random_poly(rng, n, 2, 1);
    }
    bool in_kernel = true;
    for (const LaurentPoly& p : b.apply(z)) in_kernel = in_kernel && p.is_zero();
    Word g = product_of_commutators(n, z);
    REQUIRE(in_kernel == verify_fixed(phi, g));
    (in_kernel ? fixed : moved)++;
  }
  CHECK(fixed > 20);
  CHECK(moved > 20);
}

TEST_CASE("fixed points in the commutator subgroup") {
  Endomorphism inner = testing::inner(W("[x1,x2]", 2));
  auto g = detect_fixed_in_Mprime(inner);
  REQUIRE(g.has_value());
  CHECK(verify_fixed(inner, *g));
  CHECK_FALSE(is_trivial_in_M(*g));
  // Conjugation by an element of M' fixes all of M'.
  Rng rng(52);
  for (int k = 0; k < 20; ++k) CHECK(verify_fixed(inner, testing::random_commutator_word(rng, 2)));

  for (const Word& s : testing::opposite_shift_displacements())
    CHECK_FALSE(detect_fixed_in_Mprime(testing::opposite_shift(s)).has_value());

  Endomorphism twist = testing::commutator_twist();
  auto w = find_fixed_in_Mprime(twist);
  REQUIRE(w.has_value());
  CHECK(w->kernel[0].is_zero());
  CHECK(w->kernel[1].is_unit());
  CHECK(is_unit_power_of(w->witness, W("[x2,x3]", 3)));
  CHECK(verify_fixed(twist, w->witness));
}

TEST_CASE("coset detection") {
  Endomorphism g0 = testing::inner(W("x1 x2", 2));
  std::vector<int> a11{1, 1};
  CosetResult r = detect_fixed_in_coset(g0, a11);
  REQUIRE(r.status == CosetStatus::found);
  CHECK(r.verified);
  CHECK(verify_fixed(g0, *r.witness));
  CHECK(r.witness->exponent_sums() == a11);

  for (const Word& s : testing::opposite_shift_displacements()) {
    Endomorphism phi = testing::opposite_shift(s);
    for (int m = -3; m <= 3; ++m)
      for (int k = -3; k <= 3; ++k) {
        if (m == 0 && k == 0) continue;
        std::vector<int> a{m, k};
        CHECK(detect_fixed_in_coset(phi, a).status == CosetStatus::none);
      }
  }

  Endomorphism twist = testing::commutator_twist();
  for (int k : {-3, -2, -1, 1, 2, 3}) {
    std::vector<int> a{k, 0, 0};
    CHECK(detect_fixed_in_coset(twist, a).status == CosetStatus::none);
  }
  std::vector<int> a010{0, 1, 0};
  CosetResult x2 = detect_fixed_in_coset(twist, a010);
  REQUIRE(x2.status == CosetStatus::found);
  CHECK(*x2.witness == W("x2", 3));

  std::vector<int> zero{0, 0, 0};
  CHECK_THROWS_AS(detect_fixed_in_coset(twist, zero), PreconditionError);
  std::vector<int> short_a{1, 0};
  CHECK_THROWS_AS(detect_fixed_in_coset(twist, short_a), DimensionError);
}

TEST_CASE("bounded search") {
  FixReport id = search_fixed(Endomorphism::identity(3), {1, true});
  CHECK(id.mprime.has_value());
  CHECK(id.cosets.size() == 26);
  for (const CosetResult& c : id.cosets) CHECK(c.status == CosetStatus::found);
  CHECK(id.rank_JmI == 0);
  CHECK(id.rank_class == RankClass::at_most_n_minus_2);
  CHECK(id.all_verified());

  for (const Word& s : testing::opposite_shift_displacements()) {
    FixReport rep = search_fixed(testing::opposite_shift(s), {3, true});
    CHECK(rep.rank_JmI == 1);
    CHECK(rep.rank_class == RankClass::n_minus_1);
    CHECK_FALSE(rep.any_witness());
    CHECK(rep.cosets.size() == 48);
    for (const CosetResult& c : rep.cosets) CHECK(c.status == CosetStatus::none);
  }

  FixReport tw = search_fixed(testing::commutator_twist(), {2, true});
  CHECK(tw.mprime.has_value());
  CHECK(tw.mprime_normal);
  CHECK(tw.rank_class == RankClass::at_most_n_minus_2);
  bool saw_x2 = false;
  for (const CosetResult& c : tw.cosets)
    if (c.a == std::vector<int>{0, 1, 0}) {
      CHECK(c.status == CosetStatus::found);
      saw_x2 = c.witness == W("x2", 3);
    }
  CHECK(saw_x2);

  CHECK_THROWS_AS(search_fixed(Endomorphism({W("x2", 2), W("x1", 2)})), PreconditionError);
  CHECK_THROWS_AS(search_fixed(Endomorphism::identity(2), {-1, true}), PreconditionError);
}

TEST_CASE("witnesses are sound on random instances") {
  Rng rng(53);
  for (int k = 0; k < 30; ++k) {
    std::size_t n = static_cast<std::size_t>(testing::uniform(rng, 2, 3));
    Endomorphism phi = testing::random_ia(rng, n, 10);
    FixReport rep = search_fixed(phi, {1, true});
    CHECK(rep.all_verified());
    if (rep.mprime) {
      CHECK(verify_fixed(phi, rep.mprime->witness));
      CHECK_FALSE(is_trivial_in_M(rep.mprime->witness));
      CHECK(rep.mprime_normal);
    }
    for (const CosetResult& c : rep.cosets)
      if (c.witness) {
        CHECK(verify_fixed(phi, *c.witness));
        CHECK(c.witness->exponent_sums() == c.a);
      }
    if (rep.rank_class == RankClass::at_most_n_minus_2) CHECK(rep.mprime.has_value());
  }
}

TEST_CASE("rank at most n - 2 forces a fixed point in M'") {
  Rng rng(54);
  for (int k = 0; k < 25; ++k) {
    std::size_t n = static_cast<std::size_t>(testing::uniform(rng, 3, 4));
    Endomorphism phi = testing::random_low_rank_ia(rng, n);
    REQUIRE(rank(jacobian_abel(phi) - LaMatrix::identity(n, n)) + 2 <= n);
    auto g = detect_fixed_in_Mprime(phi);
    REQUIRE(g.has_value());
    CHECK(verify_fixed(phi, *g));
    CHECK_FALSE(is_trivial_in_M(*g));
  }
}

TEST_CASE("verification oracle and normality") {
  Rng rng(55);
  for (int k = 0; k < 20; ++k) CHECK(verify_fixed(Endomorphism::identity(3), testing::random_word(rng, 3, 10)));
  Endomorphism twist = testing::commutator_twist();
  CHECK(verify_fixed(twist, W("x2", 3)));
  CHECK(verify_fixed(twist, W("x3", 3)));
  CHECK_FALSE(verify_fixed(twist, W("x1", 3)));
  CHECK_FALSE(verify_fixed(testing::opposite_shift(W("[x1,x2]", 2)), W("[x1,x2]", 2)));

  CHECK(normality_check(testing::inner(W("[x1,x2]", 2)), W("[x1,x2]", 2)));
  CHECK(normality_check(Endomorphism::identity(3), W("[x1,x3]", 3)));
  CHECK(normality_check(twist, W("[x2,x3]", 3)));
  CHECK_THROWS_AS(normality_check(twist, W("x2", 3)), PreconditionError);
  CHECK_THROWS_AS(normality_check(twist, W("[x1,x2]", 3)), PreconditionError);
}
