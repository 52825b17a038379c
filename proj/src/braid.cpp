#include "metafix/braid.hpp"

#include <cctype>
#include <cstdlib>

#include "metafix/error.hpp"
#include "metafix/fox.hpp"

namespace metafix {

BraidWord::BraidWord(std::size_t strands, std::vector<PureGenerator> gens)
    : strands_(strands), gens_(std::move(gens)) {
  if (strands_ < 2) throw PreconditionError("braids need at least two strands");
  for (const PureGenerator& g : gens_)
    if (!(g.i < g.j && g.j < strands_))
      throw DimensionError("pure braid generator A[" + std::to_string(g.i + 1) + "," + std::to_string(g.j + 1) +
                           "] invalid for " + std::to_string(strands_) + " strands");
}

BraidWord BraidWord::inverse() const {
  std::vector<PureGenerator> inv(gens_.rbegin(), gens_.rend());
  for (auto& g : inv) g.power = -g.power;
  return BraidWord(strands_, std::move(inv));
}

BraidWord operator*(const BraidWord& a, const BraidWord& b) {
  if (a.strands_ != b.strands_) throw DimensionError("braid strand count mismatch");
  std::vector<PureGenerator> g = a.gens_;
  g.insert(g.end(), b.gens_.begin(), b.gens_.end());
  return BraidWord(a.strands_, std::move(g));
}

std::string BraidWord::to_string() const {
  std::string out;
  for (const PureGenerator& g : gens_) {
    if (!out.empty()) out += ' ';
    out += "A[" + std::to_string(g.i + 1) + "," + std::to_string(g.j + 1) + "]";
    if (g.power != 1) out += "^" + std::to_string(g.power);
  }
  return out;
}

BraidWord BraidWord::parse(std::string_view s, std::size_t strands) {
  if (strands < 2) throw PreconditionError("braids need at least two strands");
  std::vector<PureGenerator> gens;
  std::size_t pos = 0;
  auto fail = [&](const std::string& msg) -> void { throw ParseError(msg, pos + 1); };
  auto skip = [&] {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  };
  auto expect = [&](char c) {
    skip();
    if (pos >= s.size() || s[pos] != c) fail(std::string("expected '") + c + "'");
    ++pos;
  };
  auto integer = [&]() -> long {
    skip();
    std::size_t start = pos;
    bool neg = false;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) neg = s[pos++] == '-';
    std::size_t digits = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (digits == pos || pos - digits > 9) {
      pos = start;
      fail("expected integer");
    }
    long v = std::stol(std::string(s.substr(digits, pos - digits)));
    return neg ? -v : v;
  };
  while (true) {
    skip();
    if (pos >= s.size()) break;
    std::size_t token = pos;
    if (s[pos] != 'A') fail("expected braid generator A[i,j]");
    ++pos;
    expect('[');
    long i = integer();
    expect(',');
    long j = integer();
    expect(']');
    long e = 1;
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      e = integer();
    }
    if (!(1 <= i && i < j && static_cast<std::size_t>(j) <= strands)) {
      pos = token;
      fail("generator A[" + std::to_string(i) + "," + std::to_string(j) + "] needs 1 <= i < j <= " +
           std::to_string(strands));
    }
    if (e != 0)
      gens.push_back({static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1), static_cast<int>(e)});
  }
  return BraidWord(strands, std::move(gens));
}

// ---------------------------------------------------------------------------

Endomorphism artin_generator(std::size_t n, std::size_t i, int sign) {
  if (i + 1 >= n) throw DimensionError("artin_generator: index out of range");
  std::vector<Word> imgs;
  for (std::size_t k = 0; k < n; ++k) imgs.push_back(Word::generator(n, k));
  Word xi = Word::generator(n, i), xj = Word::generator(n, i + 1);
  if (sign > 0) {
    imgs[i] = xi * xj * xi.inverse();
    imgs[i + 1] = xi;
  } else {
    imgs[i] = xj;
    imgs[i + 1] = xj.inverse() * xi * xj;
  }
  return Endomorphism(std::move(imgs));
}

namespace {

// Right action: the images of `next` are substituted into those of `acc`.
Endomorphism then(const Endomorphism& acc, const Endomorphism& next) { return compose(next, acc); }

}  // namespace

Endomorphism pure_generator(std::size_t n, std::size_t i, std::size_t j, int sign) {
  if (!(i < j && j < n)) throw DimensionError("pure_generator: need i < j < n");
  Endomorphism a = Endomorphism::identity(n);
  for (std::size_t k = j; k-- > i + 1;) a = then(a, artin_generator(n, k, 1));
  a = then(a, artin_generator(n, i, 1));
  a = then(a, artin_generator(n, i, 1));
  for (std::size_t k = i + 1; k < j; ++k) a = then(a, artin_generator(n, k, -1));
  if (sign > 0) return a;
  // Inverse braid word: reversed with inverted letters.
  Endomorphism b = Endomorphism::identity(n);
  for (std::size_t k = j; k-- > i + 1;) b = then(b, artin_generator(n, k, 1));
  b = then(b, artin_generator(n, i, -1));
  b = then(b, artin_generator(n, i, -1));
  for (std::size_t k = i + 1; k < j; ++k) b = then(b, artin_generator(n, k, -1));
  return b;
}

Endomorphism braid_to_automorphism(const BraidWord& b) {
  const std::size_t n = b.strands();
  Endomorphism a = Endomorphism::identity(n);
  for (const PureGenerator& g : b.generators()) {
    Endomorphism step = pure_generator(n, g.i, g.j, g.power > 0 ? 1 : -1);
    for (int k = 0; k < std::abs(g.power); ++k) a = then(a, step);
  }
  return a;
}

LaMatrix gassner_unreduced(const BraidWord& b) { return jacobian_abel(braid_to_automorphism(b)); }

LaMatrix gassner_reduce(const LaMatrix& j) {
  if (!j.is_square() || j.rows() < 2) throw DimensionError("gassner_reduce: need a square matrix of size >= 2");
  const std::size_t n = j.rows();
  const std::size_t nv = j.nvars();
  // p_k = x_1 ... x_k (0-based k), D = p_{n-1}.
  PolyVector p;
  std::vector<int> e(nv, 0);
  for (std::size_t k = 0; k < n; ++k) {
    p.push_back(LaurentPoly::monomial(Monomial(e)));
    if (k < nv) e[k] = 1;
  }
  Monomial d_inv = p[n - 1].leading_term().monomial.inverse();
  LaMatrix c = LaMatrix::identity(n, nv), c_inv = LaMatrix::identity(n, nv);
  for (std::size_t k = 0; k + 1 < n; ++k) c_inv(n - 1, k) = -p[k].shifted(d_inv);
  for (std::size_t k = 0; k < n; ++k) c(n - 1, k) = p[k];
  c_inv(n - 1, n - 1) = LaurentPoly::monomial(d_inv);
  LaMatrix g = c * j * c_inv;
  for (std::size_t k = 0; k < n; ++k) {
    bool ok = k + 1 < n ? g(n - 1, k).is_zero() : g(n - 1, k).is_one();
    if (!ok) throw InvariantViolation("gassner_reduce: conjugated last row is not (0, ..., 0, 1)");
  }
  std::vector<std::size_t> keep(n - 1);
  for (std::size_t k = 0; k + 1 < n; ++k) keep[k] = k;
  return g.submatrix(keep, keep);
}

LaMatrix gassner_reduced(const BraidWord& b) { return gassner_reduce(gassner_unreduced(b)); }

bool alexander_vanishes(const BraidWord& b) {
  LaMatrix g = gassner_reduced(b);
  return det(g - LaMatrix::identity(g.rows(), g.nvars())).is_zero();
}

}  // namespace metafix
