#include "metafix/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <numeric>
#include <utility>

#include "metafix/error.hpp"

namespace metafix {

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::variable(std::size_t nvars, std::size_t i, int e) {
  Monomial m(nvars);
  m.exps_.at(i) = e;
  return m;
}

long Monomial::degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), 0L);
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
}

bool Monomial::divisible_by(const Monomial& d) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] < d.exps_[i]) return false;
  return true;
}

Monomial Monomial::inverse() const {
  Monomial r(*this);
  for (int& e : r.exps_) e = -e;
  return r;
}

Monomial Monomial::operator*(const Monomial& o) const {
  if (o.nvars() != nvars()) throw DimensionError("monomial dimension mismatch");
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += o.exps_[i];
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  if (o.nvars() != nvars()) throw DimensionError("monomial dimension mismatch");
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= o.exps_[i];
  return r;
}

bool grlex_greater(const Monomial& a, const Monomial& b) {
  long da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  return a.exponents() > b.exponents();
}

// ---------------------------------------------------------------------------
// LaurentPoly construction

namespace {

bool term_order(const Term& a, const Term& b) {
  return grlex_greater(a.monomial, b.monomial);
}

// Sorts, merges equal monomials and drops zeros.
void canonicalize(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(), term_order);
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    Integer c = terms[i].coeff;
    while (j < terms.size() && terms[j].monomial == terms[i].monomial) c += terms[j++].coeff;
    if (c != 0) {
      if (out != i) terms[out].monomial = std::move(terms[i].monomial);
      terms[out].coeff = c;
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

}  // namespace

LaurentPoly LaurentPoly::constant(std::size_t nvars, const Integer& c) {
  LaurentPoly p(nvars);
  if (c != 0) p.terms_.push_back({Monomial(nvars), c});
  return p;
}

LaurentPoly LaurentPoly::monomial(const Monomial& m, const Integer& c) {
  LaurentPoly p(m.nvars());
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

LaurentPoly LaurentPoly::unit(const Unit& u) { return monomial(u.monomial, u.sign); }

LaurentPoly LaurentPoly::variable(std::size_t nvars, std::size_t i, int e) {
  return monomial(Monomial::variable(nvars, i, e));
}

LaurentPoly LaurentPoly::from_terms(std::size_t nvars, std::vector<Term> terms) {
  for (const Term& t : terms)
    if (t.monomial.nvars() != nvars) throw DimensionError("term dimension mismatch");
  LaurentPoly p(nvars);
  canonicalize(terms);
  p.terms_ = std::move(terms);
  return p;
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].coeff == 1 && terms_[0].monomial.is_one();
}

bool LaurentPoly::is_unit() const {
  return terms_.size() == 1 && abs(terms_[0].coeff) == 1;
}

std::optional<Unit> LaurentPoly::as_unit() const {
  if (!is_unit()) return std::nullopt;
  return Unit{terms_[0].coeff > 0 ? 1 : -1, terms_[0].monomial};
}

int LaurentPoly::min_exponent(std::size_t i) const {
  int m = std::numeric_limits<int>::max();
  for (const Term& t : terms_) m = std::min(m, t.monomial[i]);
  return terms_.empty() ? 0 : m;
}

int LaurentPoly::max_exponent(std::size_t i) const {
  int m = std::numeric_limits<int>::min();
  for (const Term& t : terms_) m = std::max(m, t.monomial[i]);
  return terms_.empty() ? 0 : m;
}

void LaurentPoly::check_same_ring(const LaurentPoly& o) const {
  if (o.nvars_ != nvars_)
    throw DimensionError("Laurent polynomials over rings of different dimension (" +
                         std::to_string(nvars_) + " vs " + std::to_string(o.nvars_) + ")");
}

// ---------------------------------------------------------------------------
// Arithmetic

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(*this);
  for (Term& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

namespace {

// Merge of two canonical term lists; `sign` is +1 or -1 on the second.
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && grlex_greater(a[i].monomial, b[j].monomial))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || grlex_greater(b[j].monomial, a[i].monomial)) {
      out.push_back(b[j++]);
      if (sign < 0) out.back().coeff = -out.back().coeff;
    } else {
      Integer c = sign > 0 ? Integer(a[i].coeff + b[j].coeff) : Integer(a[i].coeff - b[j].coeff);
      if (c != 0) out.push_back({a[i].monomial, c});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  check_same_ring(o);
  terms_ = merge_terms(terms_, o.terms_, 1);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  check_same_ring(o);
  terms_ = merge_terms(terms_, o.terms_, -1);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.check_same_ring(b);
  LaurentPoly r(a.nvars_);
  if (a.is_zero() || b.is_zero()) return r;
  if (b.size() == 1) return a.shifted(b.terms_[0].monomial).scaled(b.terms_[0].coeff);
  if (a.size() == 1) return b.shifted(a.terms_[0].monomial).scaled(a.terms_[0].coeff);
  std::vector<Term> prod;
  prod.reserve(a.size() * b.size());
  for (const Term& s : a.terms_)
    for (const Term& t : b.terms_) prod.push_back({s.monomial * t.monomial, s.coeff * t.coeff});
  canonicalize(prod);
  r.terms_ = std::move(prod);
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly LaurentPoly::scaled(const Integer& c) const {
  if (c == 0) return LaurentPoly(nvars_);
  LaurentPoly r(*this);
  for (Term& t : r.terms_) t.coeff *= c;
  return r;
}

LaurentPoly LaurentPoly::shifted(const Monomial& m) const {
  if (m.nvars() != nvars_) throw DimensionError("monomial dimension mismatch");
  LaurentPoly r(*this);
  // Multiplying by a monomial preserves grlex order.
  for (Term& t : r.terms_) t.monomial = t.monomial * m;
  return r;
}

LaurentPoly LaurentPoly::times(const Unit& u) const {
  return shifted(u.monomial).scaled(u.sign);
}

namespace {

Rational pow_q(const Rational& base, int e) {
  Rational r = 1;
  Rational b = base;
  unsigned long k = static_cast<unsigned long>(e < 0 ? -static_cast<long>(e) : e);
  while (k) {
    if (k & 1) r *= b;
    b *= b;
    k >>= 1;
  }
  if (e < 0) r = 1 / r;
  return r;
}

}  // namespace

Rational LaurentPoly::eval(std::span<const Rational> point) const {
  if (point.size() != nvars_) throw DimensionError("evaluation point has wrong dimension");
  for (const Rational& v : point)
    if (v == 0) throw PreconditionError("evaluation point has a zero coordinate");
  Rational sum = 0;
  for (const Term& t : terms_) {
    Rational v = t.coeff;
    for (std::size_t i = 0; i < nvars_; ++i)
      if (t.monomial[i] != 0) v *= pow_q(point[i], t.monomial[i]);
    sum += v;
  }
  return sum;
}

LaurentPoly LaurentPoly::at_one(std::size_t i) const {
  std::vector<Term> ts = terms_;
  for (Term& t : ts) {
    std::vector<int> e = t.monomial.exponents();
    e.at(i) = 0;
    t.monomial = Monomial(std::move(e));
  }
  return from_terms(nvars_, std::move(ts));
}

LaurentPoly LaurentPoly::at_sign(std::size_t i, int sign) const {
  if (sign == 1) return at_one(i);
  if (sign != -1) throw PreconditionError("at_sign: value must be 1 or -1");
  std::vector<Term> ts = terms_;
  for (Term& t : ts) {
    std::vector<int> e = t.monomial.exponents();
    if (e.at(i) % 2 != 0) t.coeff = -t.coeff;
    e[i] = 0;
    t.monomial = Monomial(std::move(e));
  }
  return from_terms(nvars_, std::move(ts));
}

// ---------------------------------------------------------------------------
// Text

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const Term& t : terms_) {
    bool neg = t.coeff < 0;
    Integer mag = abs(t.coeff);
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < nvars_; ++i) {
      int e = t.monomial[i];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i + 1);
      if (e != 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += mono;
    }
  }
  return out;
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view s, std::size_t nvars) : s_(s), n_(nvars) {}

  LaurentPoly run() {
    std::vector<Term> terms;
    skip();
    if (pos_ == s_.size()) fail("empty polynomial");
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (s_[pos_] == '+' || s_[pos_] == '-') {
        sign = s_[pos_] == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      Term t = term();
      if (sign < 0) t.coeff = -t.coeff;
      terms.push_back(std::move(t));
      skip();
    }
    return LaurentPoly::from_terms(n_, std::move(terms));
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_ + 1); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  Integer integer() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  int exponent() {
    bool neg = false;
    bool paren = false;
    if (pos_ < s_.size() && s_[pos_] == '(') {
      paren = true;
      ++pos_;
    }
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) neg = s_[pos_++] == '-';
    Integer e = integer();
    if (paren) {
      if (pos_ >= s_.size() || s_[pos_] != ')') fail("expected ')'");
      ++pos_;
    }
    if (!e.fits_sint_p()) fail("exponent out of range");
    return neg ? -static_cast<int>(e.get_si()) : static_cast<int>(e.get_si());
  }

  Term term() {
    Term t{Monomial(n_), 1};
    std::vector<int> exps(n_, 0);
    bool any = false;
    while (true) {
      skip();
      if (pos_ >= s_.size()) fail("unexpected end of input");
      char c = s_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        t.coeff *= integer();
      } else if (c == 'x') {
        ++pos_;
        std::size_t at = pos_;
        Integer idx = integer();
        if (idx < 1 || idx > static_cast<long>(n_)) {
          pos_ = at;
          fail("variable index out of range 1.." + std::to_string(n_));
        }
        int e = 1;
        skip();
        if (pos_ < s_.size() && s_[pos_] == '^') {
          ++pos_;
          skip();
          e = exponent();
        }
        exps[idx.get_ui() - 1] += e;
      } else {
        fail(std::string("unexpected character '") + c + "'");
      }
      any = true;
      skip();
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    if (!any) fail("empty term");
    t.monomial = Monomial(std::move(exps));
    return t;
  }

  std::string_view s_;
  std::size_t n_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view text, std::size_t nvars) {
  return PolyParser(text, nvars).run();
}

// ---------------------------------------------------------------------------
// Normalization, content, exact division

NormalizedPoly normalize(const LaurentPoly& p) {
  if (p.is_zero()) throw PreconditionError("cannot normalize the zero polynomial");
  const std::size_t n = p.nvars();
  std::vector<int> mins(n);
  for (std::size_t i = 0; i < n; ++i) mins[i] = p.min_exponent(i);
  Monomial shift(std::move(mins));
  int sign = p.leading_term().coeff > 0 ? 1 : -1;
  Unit u{sign, shift};
  return {p.times(u.inverse()), u};
}

Integer content(const LaurentPoly& p) {
  Integer g = 0;
  for (const Term& t : p.terms()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

bool divisibility_plausible(const LaurentPoly& g, const LaurentPoly& f) {
  for (int s : {1, -1}) {
    Integer fv = 0, gv = 0;
    for (const Term& t : f.terms()) {
      bool odd = (t.monomial.degree() & 1) != 0;
      fv += (s < 0 && odd) ? Integer(-t.coeff) : t.coeff;
    }
    if (fv == 0) continue;
    for (const Term& t : g.terms()) {
      bool odd = (t.monomial.degree() & 1) != 0;
      gv += (s < 0 && odd) ? Integer(-t.coeff) : t.coeff;
    }
    if (!mpz_divisible_p(gv.get_mpz_t(), fv.get_mpz_t())) return false;
  }
  return true;
}

namespace {

// Division of polynomials with nonnegative exponents. Returns the quotient
// when f divides g in Z[x], nullopt otherwise. A leading term that is not
// divisible by lt(f) would stay in the remainder forever, and a non-integral
// quotient coefficient means the rational quotient is not integral, so both
// cases exit early.
std::optional<LaurentPoly> divide_polynomial(const LaurentPoly& g, const LaurentPoly& f) {
  const std::size_t n = g.nvars();
  const Term& lt = f.leading_term();
  LaurentPoly rem = g;
  std::vector<Term> quotient;
  for (std::size_t i = 0; i < n; ++i)
    if (g.max_exponent(i) < f.max_exponent(i)) return std::nullopt;
  while (!rem.is_zero()) {
    const Term& r = rem.leading_term();
    if (!r.monomial.divisible_by(lt.monomial)) return std::nullopt;
    if (!mpz_divisible_p(r.coeff.get_mpz_t(), lt.coeff.get_mpz_t())) return std::nullopt;
    Term q{r.monomial / lt.monomial, Integer(r.coeff / lt.coeff)};
    rem -= f.shifted(q.monomial).scaled(q.coeff);
    quotient.push_back(std::move(q));
  }
  return LaurentPoly::from_terms(n, std::move(quotient));
}

}  // namespace

std::optional<LaurentPoly> divide_exact(const LaurentPoly& g, const LaurentPoly& f) {
  if (f.nvars() != g.nvars()) throw DimensionError("divide_exact: dimension mismatch");
  if (f.is_zero()) throw PreconditionError("divide_exact: division by zero");
  if (g.is_zero()) return LaurentPoly(g.nvars());
  if (f.size() == 1) {
    const Term& t = f.leading_term();
    for (const Term& s : g.terms())
      if (!mpz_divisible_p(s.coeff.get_mpz_t(), t.coeff.get_mpz_t())) return std::nullopt;
    std::vector<Term> q;
    q.reserve(g.size());
    for (const Term& s : g.terms()) q.push_back({s.monomial / t.monomial, Integer(s.coeff / t.coeff)});
    return LaurentPoly::from_terms(g.nvars(), std::move(q));
  }
  if (g.size() < 2) return std::nullopt;  // a non-unit never divides a unit multiple
  if (!divisibility_plausible(g, f)) return std::nullopt;
  NormalizedPoly nf = normalize(f);
  NormalizedPoly ng = normalize(g);
  auto q = divide_polynomial(ng.poly, nf.poly);
  if (!q) return std::nullopt;
  // g = ug * q * nf.poly = (ug / uf) * q * f
  Unit u{ng.unit.sign * nf.unit.sign, ng.unit.monomial / nf.unit.monomial};
  return q->times(u);
}

LaurentPoly divide_by_x_minus_one(const LaurentPoly& p, std::size_t i) {
  const std::size_t n = p.nvars();
  if (i >= n) throw DimensionError("divide_by_x_minus_one: variable out of range");
  // Group terms by the exponents of the other variables; each group is a
  // univariate Laurent polynomial a(t) with a(1) = 0 and
  // a(t) / (t - 1) = -sum_e S_e t^e, S_e the prefix sums of coefficients.
  std::map<std::vector<int>, std::map<int, Integer>> groups;
  for (const Term& t : p.terms()) {
    std::vector<int> key = t.monomial.exponents();
    int e = key[i];
    key[i] = 0;
    groups[std::move(key)][e] += t.coeff;
  }
  std::vector<Term> out;
  for (auto& [key, uni] : groups) {
    Integer prefix = 0;
    int lo = uni.begin()->first;
    int hi = uni.rbegin()->first;
    for (int e = lo; e < hi; ++e) {
      auto it = uni.find(e);
      if (it != uni.end()) prefix += it->second;
      if (prefix != 0) {
        std::vector<int> ex = key;
        ex[i] = e;
        out.push_back({Monomial(std::move(ex)), Integer(-prefix)});
      }
    }
    prefix += uni.rbegin()->second;
    if (prefix != 0)
      throw PreconditionError("divide_by_x_minus_one: polynomial does not vanish at x" +
                              std::to_string(i + 1) + " = 1");
  }
  return LaurentPoly::from_terms(n, std::move(out));
}

// ---------------------------------------------------------------------------
// gcd via primitive pseudo-remainder sequences, recursive in the variables.

namespace {

using Univariate = std::vector<LaurentPoly>;  // coefficient of x_v^k at index k

int top_variable(const LaurentPoly& p) {
  for (int v = static_cast<int>(p.nvars()) - 1; v >= 0; --v)
    for (const Term& t : p.terms())
      if (t.monomial[v] != 0) return v;
  return -1;
}

Univariate to_univariate(const LaurentPoly& p, std::size_t v) {
  Univariate u;
  std::vector<std::vector<Term>> buckets;
  for (const Term& t : p.terms()) {
    std::size_t k = static_cast<std::size_t>(t.monomial[v]);
    if (buckets.size() <= k) buckets.resize(k + 1);
    std::vector<int> e = t.monomial.exponents();
    e[v] = 0;
    buckets[k].push_back({Monomial(std::move(e)), t.coeff});
  }
  for (auto& b : buckets) u.push_back(LaurentPoly::from_terms(p.nvars(), std::move(b)));
  while (!u.empty() && u.back().is_zero()) u.pop_back();
  return u;
}

LaurentPoly from_univariate(const Univariate& u, std::size_t v, std::size_t n) {
  LaurentPoly p(n);
  for (std::size_t k = 0; k < u.size(); ++k)
    if (!u[k].is_zero()) p += u[k].shifted(Monomial::variable(n, v, static_cast<int>(k)));
  return p;
}

LaurentPoly exact(const LaurentPoly& g, const LaurentPoly& f) {
  auto q = divide_exact(g, f);
  if (!q) throw InvariantViolation("gcd: expected exact division failed");
  return *q;
}

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

LaurentPoly content_in(const Univariate& u) {
  LaurentPoly c(u.front().nvars());
  for (const LaurentPoly& k : u) {
    c = poly_gcd(c, k);
    if (c.is_one()) break;
  }
  return c;
}

Univariate pseudo_remainder(Univariate a, const Univariate& b) {
  const LaurentPoly& lc = b.back();
  while (a.size() >= b.size()) {
    LaurentPoly lead = a.back();
    std::size_t shift = a.size() - b.size();
    for (auto& c : a) c *= lc;
    for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] -= lead * b[k];
    while (!a.empty() && a.back().is_zero()) a.pop_back();
  }
  return a;
}

Univariate primitive_part(const Univariate& u) {
  LaurentPoly c = content_in(u);
  Univariate r;
  for (const LaurentPoly& k : u) r.push_back(exact(k, c));
  return r;
}

LaurentPoly sign_normalized(const LaurentPoly& p) {
  return (!p.is_zero() && p.leading_term().coeff < 0) ? -p : p;
}

// Both arguments have nonnegative exponents.
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  const std::size_t n = a.nvars();
  if (a.is_zero()) return sign_normalized(b);
  if (b.is_zero()) return sign_normalized(a);
  int v = std::max(top_variable(a), top_variable(b));
  if (v < 0) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.leading_term().coeff.get_mpz_t(), b.leading_term().coeff.get_mpz_t());
    return LaurentPoly::constant(n, g);
  }
  const auto vv = static_cast<std::size_t>(v);
  Univariate ua = to_univariate(a, vv), ub = to_univariate(b, vv);
  LaurentPoly c = poly_gcd(content_in(ua), content_in(ub));
  Univariate pa = primitive_part(ua), pb = primitive_part(ub);
  if (pa.size() < pb.size()) std::swap(pa, pb);
  Univariate g;
  while (true) {
    if (pb.size() == 1) {
      g = {LaurentPoly::constant(n, 1)};
      break;
    }
    Univariate r = pseudo_remainder(pa, pb);
    if (r.empty()) {
      g = pb;
      break;
    }
    pa = std::move(pb);
    pb = primitive_part(r);
  }
  return sign_normalized(c * from_univariate(g, vv, n));
}

// Heuristic gcd: evaluate the top variable at a large integer xi, recurse,
// and rebuild a candidate from the symmetric xi-adic digits of the result.
// A primitive candidate dividing both inputs is the gcd.

Integer max_norm(const LaurentPoly& p) {
  Integer m = 0;
  for (const Term& t : p.terms()) m = std::max<Integer>(m, abs(t.coeff));
  return m;
}

LaurentPoly eval_at(const LaurentPoly& p, std::size_t v, const Integer& xi) {
  std::vector<Term> ts;
  ts.reserve(p.size());
  for (const Term& t : p.terms()) {
    Integer c;
    mpz_pow_ui(c.get_mpz_t(), xi.get_mpz_t(), static_cast<unsigned long>(t.monomial[v]));
    std::vector<int> e = t.monomial.exponents();
    e[v] = 0;
    ts.push_back({Monomial(std::move(e)), t.coeff * c});
  }
  return LaurentPoly::from_terms(p.nvars(), std::move(ts));
}

LaurentPoly xi_adic(LaurentPoly gamma, std::size_t v, const Integer& xi) {
  const std::size_t n = gamma.nvars();
  Integer half = xi / 2;
  std::vector<Term> out;
  for (int i = 0; !gamma.is_zero(); ++i) {
    std::vector<Term> digit, rest;
    for (const Term& t : gamma.terms()) {
      Integer r;
      mpz_fdiv_r(r.get_mpz_t(), t.coeff.get_mpz_t(), xi.get_mpz_t());
      if (r > half) r -= xi;
      if (r != 0) {
        std::vector<int> e = t.monomial.exponents();
        e[v] = i;
        out.push_back({Monomial(std::move(e)), r});
      }
      Integer q = (t.coeff - r) / xi;
      if (q != 0) rest.push_back({t.monomial, q});
    }
    gamma = LaurentPoly::from_terms(n, std::move(rest));
  }
  return LaurentPoly::from_terms(n, std::move(out));
}

LaurentPoly integer_primitive(const LaurentPoly& p) {
  Integer c = content(p);
  if (c == 1) return p;
  std::vector<Term> ts = p.terms();
  for (Term& t : ts) t.coeff /= c;
  return LaurentPoly::from_terms(p.nvars(), std::move(ts));
}

// Both arguments nonzero with nonnegative exponents; the result keeps the
// common monomial factor and integer content.
std::optional<LaurentPoly> heu_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  const std::size_t n = a.nvars();
  std::vector<int> ma(n), mb(n), mg(n);
  for (std::size_t i = 0; i < n; ++i) {
    ma[i] = a.min_exponent(i);
    mb[i] = b.min_exponent(i);
    mg[i] = std::min(ma[i], mb[i]);
  }
  Monomial common(mg);
  Integer ca = content(a), cb = content(b), c;
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  LaurentPoly pa = integer_primitive(a.shifted(Monomial(ma).inverse()));
  LaurentPoly pb = integer_primitive(b.shifted(Monomial(mb).inverse()));
  int v = std::max(top_variable(pa), top_variable(pb));
  if (v < 0) return LaurentPoly::monomial(common, c);
  const auto vv = static_cast<std::size_t>(v);
  Integer xi = 2 * std::min(max_norm(pa), max_norm(pb)) + 29;
  int deg = std::max(pa.max_exponent(vv), pb.max_exponent(vv));
  for (int attempt = 0; attempt < 6; ++attempt) {
    // Keep the evaluated coefficients to a sane size.
    if (mpz_sizeinbase(xi.get_mpz_t(), 2) * static_cast<std::size_t>(deg + 1) > 200000) return std::nullopt;
    LaurentPoly ea = eval_at(pa, vv, xi), eb = eval_at(pb, vv, xi);
    if (!ea.is_zero() && !eb.is_zero()) {
      auto g = heu_gcd(ea, eb);
      if (!g) return std::nullopt;
      LaurentPoly cand = xi_adic(*g, vv, xi);
      if (!cand.is_zero()) {
        cand = normalize(integer_primitive(cand)).poly;
        if (divide_exact(pa, cand) && divide_exact(pb, cand)) return cand.shifted(common).scaled(c);
      }
    }
    xi = xi * 73794 / 27011;
  }
  return std::nullopt;
}

}  // namespace

std::optional<LaurentPoly> gcd_heuristic(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.nvars() != b.nvars()) throw DimensionError("gcd: dimension mismatch");
  if (a.is_zero() && b.is_zero()) return LaurentPoly(a.nvars());
  if (a.is_zero()) return normalize(b).poly;
  if (b.is_zero()) return normalize(a).poly;
  auto g = heu_gcd(normalize(a).poly, normalize(b).poly);
  if (!g) return std::nullopt;
  return normalize(*g).poly;
}

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (auto g = gcd_heuristic(a, b)) return *g;
  return normalize(poly_gcd(normalize(a).poly, normalize(b).poly)).poly;
}

}  // namespace metafix
