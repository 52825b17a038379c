#include <doctest.h>

#include "metafix/error.hpp"
#include "metafix/fox.hpp"
#include "metafix/metabelian.hpp"
#include "support.hpp"

using namespace metafix;
using metafix::testing::Rng;

namespace {

LaurentPoly P(const char* s, std::size_t n = 2) { return LaurentPoly::parse(s, n); }
Word W(const char* s, std::size_t n = 2) { return Word::parse(s, n); }

PolyVector koszul(std::size_t n, std::size_t i, std::size_t j) {
  PolyVector e(n, LaurentPoly(n));
  LaurentPoly one = LaurentPoly::constant(n, 1);
  e[i] = LaurentPoly::variable(n, j) - one;
  e[j] = one - LaurentPoly::variable(n, i);
  return e;
}

ModuleVector random_module_vector(Rng& rng, std::size_t n) {
  ModuleVector u = ModuleVector::zero(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (testing::uniform(rng, 0, 1)) u = u + ModuleVector::from_coords(koszul(n, i, j)).scaled(testing::random_poly(rng, n, 3, 2));
  return u;
}

}  // namespace

TEST_CASE("magnus coordinates of small words") {
  MagnusElement e = magnus_of_word(Word(2));
  CHECK(e.is_identity());
  CHECK(e == MagnusElement::identity(2));

  MagnusElement c = magnus_of_word(W("[x1,x2]"));
  CHECK(c.abelian() == std::vector<int>{0, 0});
  CHECK(c.coords()[0] == P("x1^-1*x2^-1 - x1^-1"));
  CHECK(c.coords()[1] == P("x1^-1*x2^-1") * P("x1 - 1"));

  MagnusElement d = magnus_of_word(W("x1 x2 x1^-1"));
  CHECK(d.abelian() == std::vector<int>{0, 1});
  CHECK(d.coords()[0] == P("1 - x2"));
  CHECK(d.coords()[1] == P("x1"));
  CHECK(augmentation_pairing(d.coords()) == P("x2 - 1"));
}

TEST_CASE("fundamental identity is enforced") {
  CHECK_THROWS_AS(MagnusElement({0, 0}, {P("1"), P("0")}), InvariantViolation);
  CHECK_THROWS_AS(MagnusElement({0}, {P("1"), P("0")}), DimensionError);
  CHECK_NOTHROW(MagnusElement({1, 0}, {P("1"), P("0")}));
  CHECK_THROWS_AS(ModuleVector::from_coords({P("1"), P("0")}), PreconditionError);
}

TEST_CASE("group law") {
  Rng rng(31);
  for (int k = 0; k < 100; ++k) {
    MagnusElement g = magnus_of_word(testing::random_word(rng, 3, 12));
    CHECK((g * g.inverse()).is_identity());
    CHECK((g.inverse() * g).is_identity());
    CHECK(MagnusElement::identity(3) * g == g);
  }
  CHECK_THROWS_AS(magnus_of_word(W("x1")) * magnus_of_word(Word::parse("x1", 3)), DimensionError);
}

TEST_CASE("magnus_of_word is a homomorphism") {
  Rng rng(32);
  for (int k = 0; k < 500; ++k) {
    std::size_t n = static_cast<std::size_t>(testing::uniform(rng, 2, 4));
    Word u = testing::random_word(rng, n, 20), v = testing::random_word(rng, n, 20);
    REQUIRE(magnus_of_word(u * v) == magnus_of_word(u) * magnus_of_word(v));
    REQUIRE(magnus_of_word(u.inverse()) == magnus_of_word(u).inverse());
  }
}

TEST_CASE("word problem") {
  CHECK(is_trivial_in_M(Word::parse("[[x1,x2],[x1,x3]]", 3)));
  CHECK_FALSE(is_trivial_in_M(W("[x1,x2]")));
  CHECK(is_trivial_in_M(Word(2)));
  CHECK_FALSE(is_trivial_in_M(W("x1")));
  // Elements of F'' built from random commutator words.
  Rng rng(33);
  for (int k = 0; k < 50; ++k) {
    Word a = testing::random_commutator_word(rng, 3), b = testing::random_commutator_word(rng, 3);
    CHECK(is_trivial_in_M(Word::commutator(a, b)));
  }
}

TEST_CASE("module powers") {
  Word r = W("[x1,x2]");
  ModuleVector cr = ModuleVector::from_coords(fox_gradient(r));
  CHECK(module_power_coords(r, P("1")) == cr);
  CHECK(module_power_coords(r, P("0")).is_zero());
  CHECK(module_power_coords(r, P("x1")) == ModuleVector::from_coords(fox_gradient(W("x1 [x1,x2] x1^-1"))));
  CHECK_THROWS_AS(module_power_coords(W("x1"), P("1")), PreconditionError);

  Rng rng(34);
  for (int k = 0; k < 100; ++k) {
    Word s = testing::random_commutator_word(rng, 3);
    LaurentPoly u = testing::random_poly(rng, 3, 3, 2);
    CHECK(module_power_coords(s, u).coords() == fox_gradient(module_power_word(s, u)));
  }
}

TEST_CASE("torsion-freeness of M'") {
  Rng rng(35);
  int nontrivial = 0;
  for (int k = 0; k < 200; ++k) {
    Word r = testing::random_commutator_word(rng, 3);
    if (is_trivial_in_M(r)) continue;
    ++nontrivial;
    LaurentPoly u = testing::random_nonzero_poly(rng, 3);
    CHECK_FALSE(module_power_coords(r, u).is_zero());
  }
  CHECK(nontrivial > 100);
}

TEST_CASE("realizing module coordinates") {
  Word c12 = W("[x1,x2]");
  CHECK(is_trivial_in_M(realize_module_coords(ModuleVector::from_coords(fox_gradient(c12))) * c12.inverse()));

  Word c23 = Word::parse("[x2,x3]", 3);
  ModuleVector u = module_power_coords(c23, LaurentPoly::parse("x1 - 1", 3));
  Word g = realize_module_coords(u);
  CHECK(fox_gradient(g) == u.coords());
  CHECK(is_trivial_in_M(g * module_power_word(c23, LaurentPoly::parse("x1 - 1", 3)).inverse()));

  CHECK(realize_module_coords(ModuleVector::zero(3)).empty());

  Rng rng(36);
  for (int k = 0; k < 100; ++k) {
    std::size_t n = static_cast<std::size_t>(testing::uniform(rng, 2, 4));
    ModuleVector v = random_module_vector(rng, n);
    Word w = realize_module_coords(v);
    REQUIRE(magnus_of_word(w).coords() == v.coords());
    CHECK(w.exponent_sums() == std::vector<int>(n, 0));
  }
}

TEST_CASE("commutator decomposition reproduces the coordinates") {
  Rng rng(37);
  for (int k = 0; k < 100; ++k) {
    ModuleVector v = random_module_vector(rng, 4);
    ModuleVector back = ModuleVector::zero(4);
    for (const CommutatorPower& cp : commutator_decomposition(v)) {
      CHECK(cp.i < cp.j);
      Word c = Word::commutator(Word::generator(4, cp.i), Word::generator(4, cp.j));
      back = back + module_power_coords(c, cp.exponent);
    }
    CHECK(back == v);
  }
}
