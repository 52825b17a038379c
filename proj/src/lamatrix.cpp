#include "metafix/lamatrix.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "metafix/error.hpp"

namespace metafix {

LaMatrix::LaMatrix(std::size_t rows, std::size_t cols, std::size_t nvars)
    : rows_(rows), cols_(cols), nvars_(nvars), data_(rows * cols, LaurentPoly(nvars)) {}

LaMatrix LaMatrix::identity(std::size_t n, std::size_t nvars) {
  LaMatrix m(n, n, nvars);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = LaurentPoly::constant(nvars, 1);
  return m;
}

LaMatrix LaMatrix::from_rows(std::vector<PolyVector> rows, std::size_t nvars) {
  std::size_t c = rows.empty() ? 0 : rows.front().size();
  LaMatrix m(rows.size(), c, nvars);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw DimensionError("from_rows: ragged rows");
    for (std::size_t j = 0; j < c; ++j) {
      if (rows[i][j].nvars() != nvars) throw DimensionError("from_rows: entry ring dimension mismatch");
      m(i, j) = std::move(rows[i][j]);
    }
  }
  return m;
}

bool LaMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const LaurentPoly& p) { return p.is_zero(); });
}

PolyVector LaMatrix::row(std::size_t i) const {
  return PolyVector(data_.begin() + static_cast<long>(i * cols_),
                    data_.begin() + static_cast<long>((i + 1) * cols_));
}

PolyVector LaMatrix::column(std::size_t j) const {
  PolyVector c;
  c.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
  return c;
}

LaMatrix LaMatrix::transpose() const {
  LaMatrix t(cols_, rows_, nvars_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

LaMatrix LaMatrix::submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const {
  LaMatrix s(rows.size(), cols.size(), nvars_);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = (*this)(rows[i], cols[j]);
  return s;
}

LaMatrix LaMatrix::with_column(std::size_t j, std::span<const LaurentPoly> col) const {
  if (col.size() != rows_) throw DimensionError("with_column: length mismatch");
  LaMatrix r(*this);
  for (std::size_t i = 0; i < rows_; ++i) r(i, j) = col[i];
  return r;
}

LaMatrix LaMatrix::augmented(std::span<const LaurentPoly> col) const {
  if (col.size() != rows_) throw DimensionError("augmented: length mismatch");
  LaMatrix r(rows_, cols_ + 1, nvars_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
    r(i, cols_) = col[i];
  }
  return r;
}

LaMatrix LaMatrix::operator-() const {
  LaMatrix r(*this);
  for (auto& p : r.data_) p = -p;
  return r;
}

LaMatrix operator+(const LaMatrix& a, const LaMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix shape mismatch");
  LaMatrix r(a);
  for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] += b.data_[k];
  return r;
}

LaMatrix operator-(const LaMatrix& a, const LaMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix shape mismatch");
  LaMatrix r(a);
  for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] -= b.data_[k];
  return r;
}

LaMatrix operator*(const LaMatrix& a, const LaMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
  LaMatrix r(a.rows_, b.cols_, a.nvars_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const LaurentPoly& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) r(i, j) += aik * b(k, j);
    }
  return r;
}

PolyVector LaMatrix::apply(std::span<const LaurentPoly> z) const {
  if (z.size() != cols_) throw DimensionError("apply: length mismatch");
  PolyVector out(rows_, LaurentPoly(nvars_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!z[j].is_zero() && !(*this)(i, j).is_zero()) out[i] += (*this)(i, j) * z[j];
  return out;
}

PolyVector LaMatrix::apply_left(std::span<const LaurentPoly> z) const {
  if (z.size() != rows_) throw DimensionError("apply_left: length mismatch");
  PolyVector out(cols_, LaurentPoly(nvars_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!z[i].is_zero() && !(*this)(i, j).is_zero()) out[j] += z[i] * (*this)(i, j);
  return out;
}

std::vector<std::vector<std::string>> LaMatrix::to_strings() const {
  std::vector<std::vector<std::string>> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i].push_back((*this)(i, j).to_string());
  return out;
}

// ---------------------------------------------------------------------------
// Determinants

namespace {

LaurentPoly exact_quotient(const LaurentPoly& g, const LaurentPoly& f) {
  auto q = divide_exact(g, f);
  if (!q) throw InvariantViolation("fraction-free elimination: inexact division");
  return *std::move(q);
}

LaurentPoly cofactor_rec(const LaMatrix& m, std::vector<std::size_t>& cols, std::size_t row) {
  const std::size_t k = cols.size();
  if (k == 0) return LaurentPoly::constant(m.nvars(), 1);
  if (k == 1) return m(row, cols[0]);
  LaurentPoly sum(m.nvars());
  for (std::size_t c = 0; c < k; ++c) {
    const LaurentPoly& a = m(row, cols[c]);
    if (a.is_zero()) continue;
    std::size_t col = cols[c];
    cols.erase(cols.begin() + static_cast<long>(c));
    LaurentPoly minor = cofactor_rec(m, cols, row + 1);
    cols.insert(cols.begin() + static_cast<long>(c), col);
    if (c % 2 == 0)
      sum += a * minor;
    else
      sum -= a * minor;
  }
  return sum;
}

}  // namespace

LaurentPoly det_cofactor(const LaMatrix& m) {
  if (!m.is_square()) throw DimensionError("determinant of a non-square matrix");
  std::vector<std::size_t> cols(m.cols());
  std::iota(cols.begin(), cols.end(), 0);
  return cofactor_rec(m, cols, 0);
}

LaurentPoly det_bareiss(const LaMatrix& m) {
  if (!m.is_square()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return LaurentPoly::constant(m.nvars(), 1);
  LaMatrix a(m);
  LaurentPoly prev = LaurentPoly::constant(m.nvars(), 1);
  bool negate = false;
  for (std::size_t k = 0; k < n; ++k) {
    // Smallest-support pivot limits expression swell.
    std::size_t best = n;
    for (std::size_t i = k; i < n; ++i)
      if (!a(i, k).is_zero() && (best == n || a(i, k).size() < a(best, k).size())) best = i;
    if (best == n) return LaurentPoly(m.nvars());
    if (best != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(a(k, j), a(best, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = exact_quotient(a(k, k) * a(i, j) - a(i, k) * a(k, j), prev);
      a(i, k) = LaurentPoly(m.nvars());
    }
    prev = a(k, k);
  }
  return negate ? -a(n - 1, n - 1) : a(n - 1, n - 1);
}

LaurentPoly det(const LaMatrix& m) {
  if (!m.is_square()) throw DimensionError("determinant of a non-square matrix");
  return m.rows() <= 4 ? det_cofactor(m) : det_bareiss(m);
}

// ---------------------------------------------------------------------------
// Rank and kernels

Echelon echelon(const LaMatrix& m) {
  const std::size_t r = m.rows(), c = m.cols();
  LaMatrix a(m);
  std::vector<std::size_t> row_perm(r), col_perm(c);
  std::iota(row_perm.begin(), row_perm.end(), 0);
  std::iota(col_perm.begin(), col_perm.end(), 0);
  LaurentPoly prev = LaurentPoly::constant(m.nvars(), 1);
  Echelon e;
  for (std::size_t k = 0; k < std::min(r, c); ++k) {
    std::size_t bi = r, bj = c;
    for (std::size_t i = k; i < r; ++i)
      for (std::size_t j = k; j < c; ++j)
        if (!a(i, j).is_zero() && (bi == r || a(i, j).size() < a(bi, bj).size())) {
          bi = i;
          bj = j;
        }
    if (bi == r) break;
    if (bi != k) {
      for (std::size_t j = 0; j < c; ++j) std::swap(a(k, j), a(bi, j));
      std::swap(row_perm[k], row_perm[bi]);
    }
    if (bj != k) {
      for (std::size_t i = 0; i < r; ++i) std::swap(a(i, k), a(i, bj));
      std::swap(col_perm[k], col_perm[bj]);
    }
    for (std::size_t i = k + 1; i < r; ++i) {
      for (std::size_t j = k + 1; j < c; ++j)
        a(i, j) = exact_quotient(a(k, k) * a(i, j) - a(i, k) * a(k, j), prev);
      a(i, k) = LaurentPoly(m.nvars());
    }
    prev = a(k, k);
    ++e.rank;
  }
  e.pivot_rows.assign(row_perm.begin(), row_perm.begin() + static_cast<long>(e.rank));
  e.pivot_cols.assign(col_perm.begin(), col_perm.begin() + static_cast<long>(e.rank));
  return e;
}

std::size_t rank(const LaMatrix& m) { return echelon(m).rank; }

PolyVector reduce_vector(PolyVector v) {
  if (v.empty()) return v;
  const std::size_t n = v.front().nvars();
  LaurentPoly g(n);
  for (const auto& p : v) {
    auto next = gcd_heuristic(g, p);
    if (!next) {
      // Fall back to the integer content.
      Integer c = 0;
      for (const auto& q : v) mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), content(q).get_mpz_t());
      g = LaurentPoly::constant(n, c);
      break;
    }
    g = *std::move(next);
    if (g.is_one()) break;
  }
  if (g.is_zero()) return v;
  for (auto& p : v) {
    auto q = divide_exact(p, g);
    if (!q) throw InvariantViolation("reduce_vector: gcd does not divide an entry");
    p = *std::move(q);
  }
  for (const auto& p : v)
    if (!p.is_zero()) {
      Unit u = normalize(p).unit.inverse();
      for (auto& q : v) q = q.times(u);
      break;
    }
  return v;
}

std::vector<PolyVector> kernel_basis(const LaMatrix& m) {
  Echelon e = echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t j : e.pivot_cols) is_pivot[j] = true;
  LaMatrix square = m.submatrix(e.pivot_rows, e.pivot_cols);
  LaurentPoly d = det(square);
  std::vector<PolyVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    // square * z_P = -column_f * d, solved by Cramer's numerators.
    PolyVector rhs;
    for (std::size_t i : e.pivot_rows) rhs.push_back(-m(i, f));
    PolyVector z(m.cols(), LaurentPoly(m.nvars()));
    z[f] = d;
    for (std::size_t k = 0; k < e.rank; ++k) z[e.pivot_cols[k]] = det(square.with_column(k, rhs));
    basis.push_back(reduce_vector(std::move(z)));
  }
  return basis;
}

std::optional<PolyVector> kernel_vector(const LaMatrix& m) {
  auto basis = kernel_basis(m);
  if (basis.empty()) return std::nullopt;
  return basis.front();
}

CramerResult cramer_solve(const LaMatrix& m, std::span<const LaurentPoly> b) {
  if (!m.is_square()) throw DimensionError("cramer_solve: matrix is not square");
  if (b.size() != m.rows()) throw DimensionError("cramer_solve: right-hand side length mismatch");
  CramerResult res;
  LaurentPoly d = det(m);
  if (d.is_zero()) return res;
  for (std::size_t k = 0; k < m.cols(); ++k) {
    auto q = divide_exact(det(m.with_column(k, b)), d);
    if (!q) {
      res.kind = CramerResult::Kind::no_solution_in_za;
      res.solution.clear();
      return res;
    }
    res.solution.push_back(*std::move(q));
  }
  res.kind = CramerResult::Kind::solution;
  return res;
}

namespace {

enum class Verdict { refuted_inconsistent, refuted_non_integral, solved, open };

// Decides M z = b over the fraction field and looks for an integrality
// obstruction on the forced unknowns. On `solved`, z holds a ZA-solution.
Verdict analyze(const LaMatrix& m, std::span<const LaurentPoly> b, PolyVector* z_out) {
  Echelon e = echelon(m);
  if (rank(m.augmented(b)) != e.rank) return Verdict::refuted_inconsistent;
  LaMatrix square = m.submatrix(e.pivot_rows, e.pivot_cols);
  PolyVector rhs;
  for (std::size_t i : e.pivot_rows) rhs.push_back(b[i]);
  LaurentPoly d = det(square);

  // A pivot unknown is forced iff every kernel vector vanishes there; a
  // non-integral forced value rules out every solution over ZA.
  std::vector<bool> forced(m.cols(), true);
  for (const PolyVector& k : kernel_basis(m))
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!k[j].is_zero()) forced[j] = false;

  PolyVector z(m.cols(), LaurentPoly(m.nvars()));
  bool integral = true;
  for (std::size_t k = 0; k < e.rank; ++k) {
    std::size_t var = e.pivot_cols[k];
    auto q = divide_exact(det(square.with_column(k, rhs)), d);
    if (!q) {
      if (forced[var]) return Verdict::refuted_non_integral;
      integral = false;
      continue;
    }
    z[var] = *std::move(q);
  }
  if (!integral) return Verdict::open;
  if (z_out) *z_out = std::move(z);
  return Verdict::solved;
}

LaMatrix specialize(const LaMatrix& m, const std::vector<int>& values) {
  LaMatrix r = m;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      for (std::size_t v = 0; v < values.size(); ++v)
        if (values[v] != 0) r(i, j) = r(i, j).at_sign(v, values[v]);
  return r;
}

// Every assignment x_v in {keep, 1, -1}, fewest substitutions first.
std::vector<std::vector<int>> specializations(std::size_t n) {
  std::vector<std::vector<int>> all;
  std::vector<int> cur(n, 0);
  while (true) {
    std::size_t k = 0;
    while (k < n && cur[k] == -1) cur[k++] = 0;
    if (k == n) break;
    cur[k] = cur[k] == 0 ? 1 : -1;
    all.push_back(cur);
  }
  auto weight = [](const std::vector<int>& a) { return std::count_if(a.begin(), a.end(), [](int x) { return x != 0; }); };
  std::stable_sort(all.begin(), all.end(), [&](const auto& a, const auto& c) { return weight(a) < weight(c); });
  return all;
}

}  // namespace

IntegralSolve solve_integral(const LaMatrix& m, std::span<const LaurentPoly> b) {
  if (b.size() != m.rows()) throw DimensionError("solve_integral: right-hand side length mismatch");
  IntegralSolve res;
  PolyVector z;
  switch (analyze(m, b, &z)) {
    case Verdict::refuted_inconsistent:
      res.kind = IntegralSolve::Kind::inconsistent;
      return res;
    case Verdict::refuted_non_integral:
      res.kind = IntegralSolve::Kind::non_integral;
      return res;
    case Verdict::solved: {
      PolyVector check = m.apply(z);
      for (std::size_t i = 0; i < b.size(); ++i)
        if (check[i] != b[i]) throw InvariantViolation("solve_integral: particular solution fails the system");
      res.kind = IntegralSolve::Kind::solution;
      res.solution = std::move(z);
      return res;
    }
    case Verdict::open:
      break;
  }
  // A ZA-solution survives every ring map x_v -> +-1, so an obstruction in
  // any specialized system is a proof that none exists.
  for (const std::vector<int>& values : specializations(m.nvars())) {
    PolyVector sb(b.begin(), b.end());
    for (auto& p : sb)
      for (std::size_t v = 0; v < values.size(); ++v)
        if (values[v] != 0) p = p.at_sign(v, values[v]);
    Verdict sv = analyze(specialize(m, values), sb, nullptr);
    if (sv == Verdict::refuted_inconsistent || sv == Verdict::refuted_non_integral) {
      res.kind = IntegralSolve::Kind::non_integral;
      return res;
    }
  }
  return res;  // undecided
}

}  // namespace metafix
