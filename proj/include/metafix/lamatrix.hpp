#pragma once

// Exact linear algebra over ZA. Rank, kernels and solvability are taken over
// the fraction field of ZA, which is sound because ZA is a domain; integrality
// of solutions is then decided by exact division.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "metafix/laurent.hpp"

namespace metafix {

using PolyVector = std::vector<LaurentPoly>;

class LaMatrix {
 public:
  LaMatrix() = default;
  LaMatrix(std::size_t rows, std::size_t cols, std::size_t nvars);

  static LaMatrix identity(std::size_t n, std::size_t nvars);
  /// All rows must have equal length and share one ring dimension.
  static LaMatrix from_rows(std::vector<PolyVector> rows, std::size_t nvars);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nvars() const { return nvars_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_zero() const;

  const LaurentPoly& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  LaurentPoly& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  PolyVector row(std::size_t i) const;
  PolyVector column(std::size_t j) const;
  LaMatrix transpose() const;
  LaMatrix submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;
  LaMatrix with_column(std::size_t j, std::span<const LaurentPoly> col) const;
  /// Appends `col` as a new last column.
  LaMatrix augmented(std::span<const LaurentPoly> col) const;

  LaMatrix operator-() const;
  friend LaMatrix operator+(const LaMatrix& a, const LaMatrix& b);
  friend LaMatrix operator-(const LaMatrix& a, const LaMatrix& b);
  friend LaMatrix operator*(const LaMatrix& a, const LaMatrix& b);
  friend bool operator==(const LaMatrix&, const LaMatrix&) = default;

  /// M * z for a column vector z.
  PolyVector apply(std::span<const LaurentPoly> z) const;
  /// z * M for a row vector z.
  PolyVector apply_left(std::span<const LaurentPoly> z) const;

  std::vector<std::vector<std::string>> to_strings() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t nvars_ = 0;
  std::vector<LaurentPoly> data_;
};

/// Determinant; cofactor expansion up to 4x4, fraction-free elimination above.
LaurentPoly det(const LaMatrix& m);
LaurentPoly det_bareiss(const LaMatrix& m);
LaurentPoly det_cofactor(const LaMatrix& m);

/// Result of fraction-free elimination with full pivoting. The minor on
/// (pivot_rows, pivot_cols) is nonzero and has maximal size.
struct Echelon {
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_rows;
  std::vector<std::size_t> pivot_cols;
};

Echelon echelon(const LaMatrix& m);
std::size_t rank(const LaMatrix& m);

/// Kernel vector reduced to a canonical representative: entries divided by
/// their common gcd (only the integer content if the heuristic gcd gives up),
/// then by the unit of the first nonzero entry.
PolyVector reduce_vector(PolyVector v);

/// One kernel vector per non-pivot column, each reduced; spans the kernel over
/// the fraction field.
std::vector<PolyVector> kernel_basis(const LaMatrix& m);
/// A nonzero z with M z = 0, or nullopt when the columns are independent.
std::optional<PolyVector> kernel_vector(const LaMatrix& m);

struct CramerResult {
  enum class Kind { solution, no_solution_in_za, singular };
  Kind kind = Kind::singular;
  PolyVector solution;
};

/// Solves M z = b for square M by Cramer's rule with exact divisions.
CramerResult cramer_solve(const LaMatrix& m, std::span<const LaurentPoly> b);

/// Outcome of searching for a ZA-solution of a possibly non-square system.
struct IntegralSolve {
  enum class Kind {
    solution,      // `solution` satisfies M z = b exactly
    inconsistent,  // no solution even over the fraction field
    non_integral,  // no ZA-solution: a forced coordinate lies outside ZA, possibly
                   // after substituting x_v -> +-1 for some variables
    undecided,     // consistent, Cramer's particular solution is not integral and
                   // no specialization refutes integrality
  };
  Kind kind = Kind::undecided;
  PolyVector solution;
};

/// Decides M z = b over ZA within the reach of Cramer's rule on a maximal
/// nonsingular square subsystem (free unknowns set to zero). When that is
/// inconclusive, the system is specialized along every x_v -> +-1 and each
/// image is checked for inconsistency or a non-integral forced coordinate.
IntegralSolve solve_integral(const LaMatrix& m, std::span<const LaurentPoly> b);

}  // namespace metafix
