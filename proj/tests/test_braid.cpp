#include <doctest.h>

#include "metafix/braid.hpp"
#include "metafix/error.hpp"
#include "metafix/fixpoint.hpp"
#include "metafix/fox.hpp"
#include "support.hpp"

using namespace metafix;
using metafix::gen::Rng;
using metafix::gen::random_braid;

namespace {

bool is_conjugate_of_generator(const Word& w, std::size_t k) {
  const auto& l = w.letters();
  if (l.size() % 2 == 0) return false;
  std::size_t mid = l.size() / 2;
  if (!(l[mid] == Letter{k, 1})) return false;
  for (std::size_t i = 0; i < mid; ++i)
    if (!(l[i] == l[l.size() - 1 - i].inverse())) return false;
  return true;
}

bool same_images(const Endomorphism& a, const Endomorphism& b) { return a.images() == b.images(); }

}  // namespace

TEST_CASE("Artin generators satisfy the braid relations") {
  for (std::size_t n : {3u, 4u}) {
    for (std::size_t i = 0; i + 1 < n; ++i) {
      Endomorphism s = artin_generator(n, i), si = artin_generator(n, i, -1);
      CHECK(same_images(compose(s, si), Endomorphism::identity(n)));
      CHECK(same_images(compose(si, s), Endomorphism::identity(n)));
      Word prod(n);
      for (std::size_t k = 0; k < n; ++k) prod *= Word::generator(n, k);
      CHECK(s.apply(prod) == prod);
    }
    Endomorphism s1 = artin_generator(n, 0), s2 = artin_generator(n, 1);
    CHECK(same_images(compose(s1, compose(s2, s1)), compose(s2, compose(s1, s2))));
  }
  CHECK_THROWS_AS(artin_generator(3, 2), DimensionError);
}

TEST_CASE("pure braid automorphisms") {
  Endomorphism id = braid_to_automorphism(BraidWord(3));
  CHECK(same_images(id, Endomorphism::identity(3)));

  Endomorphism a12 = braid_to_automorphism(BraidWord::parse("A[1,2]", 2));
  CHECK(a12.is_ia());
  for (std::size_t k = 0; k < 2; ++k) CHECK(is_conjugate_of_generator(a12.image(k), k));
  // A_12 = s_1^2
  CHECK(same_images(a12, compose(artin_generator(2, 0), artin_generator(2, 0))));

  Rng rng(61);
  for (int t = 0; t < 40; ++t) {
    std::size_t n = static_cast<std::size_t>(testing::uniform(rng, 2, 4));
    BraidWord b = random_braid(rng, n, 5);
    Endomorphism phi = braid_to_automorphism(b);
    CHECK(phi.is_ia());
    for (std::size_t k = 0; k < n; ++k) CHECK(is_conjugate_of_generator(phi.image(k), k));
    CHECK(same_images(braid_to_automorphism(b * b.inverse()), Endomorphism::identity(n)));
  }
  for (std::size_t n : {3u, 4u})
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        CHECK(same_images(compose(pure_generator(n, i, j, 1), pure_generator(n, i, j, -1)), Endomorphism::identity(n)));
}

TEST_CASE("braid word syntax") {
  BraidWord b = BraidWord::parse("A[1,2] A[1,3]^-1  A[2,3]^2", 3);
  CHECK(b.length() == 3);
  CHECK(b.generators()[1] == PureGenerator{0, 2, -1});
  CHECK(b.to_string() == "A[1,2] A[1,3]^-1 A[2,3]^2");
  CHECK(BraidWord::parse(b.to_string(), 3).generators() == b.generators());
  CHECK(BraidWord::parse("", 3).length() == 0);
  CHECK(BraidWord::parse("A[1,2]A[2,3]", 3).length() == 2);
  CHECK_THROWS_AS(BraidWord::parse("A[1,4]", 3), ParseError);
  CHECK_THROWS_AS(BraidWord::parse("A[2,1]", 3), ParseError);
  CHECK_THROWS_AS(BraidWord::parse("B[1,2]", 3), ParseError);
  CHECK_THROWS_AS(BraidWord::parse("A[1 2]", 3), ParseError);
  CHECK_THROWS_AS(BraidWord::parse("A[1,2]^", 3), ParseError);
  CHECK_THROWS_AS(BraidWord::parse("A[1,2]", 1), PreconditionError);
  try {
    BraidWord::parse("A[1,2] x", 3);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.column() == 8);
  }
  CHECK_THROWS_AS(BraidWord(3) * BraidWord(4), DimensionError);
}

TEST_CASE("Gassner matrices") {
  CHECK(gassner_unreduced(BraidWord(3)) == LaMatrix::identity(3, 3));
  CHECK(gassner_reduced(BraidWord(3)) == LaMatrix::identity(2, 3));
  CHECK(alexander_vanishes(BraidWord(3)));

  BraidWord a12 = BraidWord::parse("A[1,2]", 2);
  LaMatrix u = gassner_unreduced(a12);
  CHECK(u.rows() == 2);
  CHECK(det(u - LaMatrix::identity(2, 2)).is_zero());
  LaMatrix r = gassner_reduced(a12);
  CHECK(r.rows() == 1);
  CHECK(r.cols() == 1);
  // Both sides of the bridge, computed independently.
  bool vanishes = alexander_vanishes(a12);
  CHECK(vanishes == (rank(u - LaMatrix::identity(2, 2)) == 0));
  CHECK(vanishes == detect_fixed_in_Mprime(braid_to_automorphism(a12)).has_value());

  // Reduction fails loudly on a matrix that does not preserve the invariant row.
  LaMatrix bad = LaMatrix::identity(2, 2);
  bad(1, 0) = LaurentPoly::constant(2, 1);
  CHECK_THROWS_AS(gassner_reduce(bad), InvariantViolation);
  CHECK_THROWS_AS(gassner_reduce(LaMatrix(2, 3, 2)), DimensionError);
}

TEST_CASE("Gassner representation is multiplicative") {
  Rng rng(62);
  for (int t = 0; t < 50; ++t) {
    std::size_t n = static_cast<std::size_t>(testing::uniform(rng, 2, 4));
    BraidWord s = random_braid(rng, n, 3), tw = random_braid(rng, n, 3);
    REQUIRE(gassner_unreduced(s * tw) == gassner_unreduced(s) * gassner_unreduced(tw));
    REQUIRE(gassner_reduced(s * tw) == gassner_reduced(s) * gassner_reduced(tw));
  }
}

TEST_CASE("vanishing criterion matches the rank of J - I") {
  Rng rng(63);
  for (int t = 0; t < 60; ++t) {
    std::size_t n = static_cast<std::size_t>(testing::uniform(rng, 2, 4));
    BraidWord b = random_braid(rng, n, 4);
    LaMatrix j = gassner_unreduced(b);
    bool low = rank(j - LaMatrix::identity(n, n)) + 2 <= n;
    REQUIRE(alexander_vanishes(b) == low);
    auto g = detect_fixed_in_Mprime(braid_to_automorphism(b));
    REQUIRE(g.has_value() == low);
    if (g) CHECK(verify_fixed(braid_to_automorphism(b), *g));
  }
}
