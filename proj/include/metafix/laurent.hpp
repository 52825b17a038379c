#pragma once

// Exact arithmetic in the integral group ring ZA of the free abelian group
// A = Z^n, i.e. integer Laurent polynomials in n commuting variables
// x_1, ..., x_n. Variable indices are 0-based in the API; the textual syntax
// uses the 1-based names x1 ... xn.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace metafix {

using Integer = mpz_class;
using Rational = mpq_class;

/// x^e = x_1^{e_1} ... x_n^{e_n}, exponents possibly negative.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<int> exps) : exps_(std::move(exps)) {}

  static Monomial one(std::size_t nvars) { return Monomial(nvars); }
  static Monomial variable(std::size_t nvars, std::size_t i, int e = 1);

  std::size_t nvars() const { return exps_.size(); }
  int operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<int>& exponents() const { return exps_; }

  long degree() const;
  bool is_one() const;
  /// True iff every exponent of `this` is >= the matching exponent of `d`.
  bool divisible_by(const Monomial& d) const;

  Monomial inverse() const;
  Monomial operator*(const Monomial& o) const;
  Monomial operator/(const Monomial& o) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<int> exps_;
};

/// Graded lexicographic order with x_1 > x_2 > ... > x_n.
bool grlex_greater(const Monomial& a, const Monomial& b);

struct Term {
  Monomial monomial;
  Integer coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Units of ZA are exactly the signed monomials.
struct Unit {
  int sign = 1;
  Monomial monomial;

  Unit inverse() const { return {sign, monomial.inverse()}; }
};

class LaurentPoly {
 public:
  explicit LaurentPoly(std::size_t nvars = 0) : nvars_(nvars) {}

  static LaurentPoly constant(std::size_t nvars, const Integer& c);
  static LaurentPoly monomial(const Monomial& m, const Integer& c = 1);
  static LaurentPoly unit(const Unit& u);
  /// x_i as a polynomial (0-based i), optionally raised to `e`.
  static LaurentPoly variable(std::size_t nvars, std::size_t i, int e = 1);
  /// Builds a canonical polynomial from arbitrary (possibly repeated, possibly
  /// zero) terms.
  static LaurentPoly from_terms(std::size_t nvars, std::vector<Term> terms);

  /// Parses the canonical textual syntax, e.g. `3*x1^2*x2^-1 - x1 + 2`.
  static LaurentPoly parse(std::string_view text, std::size_t nvars);

  std::size_t nvars() const { return nvars_; }
  /// Terms in decreasing graded-lex order; no zero coefficients.
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  /// Single term with coefficient +-1.
  bool is_unit() const;
  std::optional<Unit> as_unit() const;
  const Term& leading_term() const { return terms_.front(); }

  /// Minimum / maximum exponent of variable i over the support.
  int min_exponent(std::size_t i) const;
  int max_exponent(std::size_t i) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  LaurentPoly scaled(const Integer& c) const;
  LaurentPoly shifted(const Monomial& m) const;
  LaurentPoly times(const Unit& u) const;

  /// Exact value at a point with all coordinates nonzero.
  Rational eval(std::span<const Rational> point) const;

  /// Sets x_i = 1.
  LaurentPoly at_one(std::size_t i) const;
  /// Sets x_i = sign, with sign = 1 or -1.
  LaurentPoly at_sign(std::size_t i, int sign) const;

  std::string to_string() const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  void check_same_ring(const LaurentPoly& o) const;

  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

/// p = unit * poly where poly has minimum exponent 0 in every variable and a
/// positive leading coefficient.
struct NormalizedPoly {
  LaurentPoly poly;
  Unit unit;
};

NormalizedPoly normalize(const LaurentPoly& p);

/// Returns q with g = q * f if such q exists in ZA. Decided by single-divisor
/// division of the normalized polynomials in graded-lex order, accepting iff
/// the remainder vanishes with an integral quotient.
std::optional<LaurentPoly> divide_exact(const LaurentPoly& g, const LaurentPoly& f);

/// Cheap necessary condition for f | g: at the points (1,...,1) and
/// (-1,...,-1) the integer value of f divides the value of g.
bool divisibility_plausible(const LaurentPoly& g, const LaurentPoly& f);

/// p / (x_i - 1), requiring p to vanish at x_i = 1.
LaurentPoly divide_by_x_minus_one(const LaurentPoly& p, std::size_t i);

/// gcd of the integer coefficients; 0 for the zero polynomial.
Integer content(const LaurentPoly& p);

/// Greatest common divisor in ZA, normalized as by `normalize`. gcd(0, 0) = 0.
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);
/// The fast evaluation-based gcd alone; nullopt when it gives up.
std::optional<LaurentPoly> gcd_heuristic(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace metafix
