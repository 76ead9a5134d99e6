#pragma once

#include "polyef/rational.hpp"

#include <optional>
#include <span>
#include <variant>
#include <vector>

namespace polyef {

/// Dense row-major matrix of exact rationals.
class RatMatrix {
public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static RatMatrix identity(std::size_t n);
  static RatMatrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static RatMatrix from_columns(const std::vector<Vector>& cols, std::size_t rows);
  static RatMatrix column(const Vector& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<const Rational> row_span(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }
  Vector row(std::size_t r) const;
  Vector col(std::size_t c) const;

  RatMatrix transpose() const;
  Vector apply(const Vector& v) const;

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b);
RatMatrix mat_add(const RatMatrix& a, const RatMatrix& b);
RatMatrix mat_scale(const RatMatrix& a, const Rational& s);

/// Reduced row echelon form plus the pivot column of each nonzero row.
struct Echelon {
  RatMatrix reduced;
  std::vector<std::size_t> pivots;
};

/// Row reduction done fraction-free (Bareiss) on an integer scaling of `a`,
/// finished by exact back-substitution.
Echelon row_echelon(const RatMatrix& a);

std::size_t rank(const RatMatrix& a);

/// Basis (as columns of the result) of {x : a x = 0}. The result has
/// a.cols() rows and nullity columns.
RatMatrix null_space(const RatMatrix& a);

/// Rows of the reduced echelon form: a basis of the row space of `a`.
std::vector<Vector> row_space_basis(const RatMatrix& a);

namespace solve {
struct Unique {
  RatMatrix x;
};
struct NoSolution {};
struct Infinite {
  RatMatrix particular;
  RatMatrix null_basis; // columns
};
} // namespace solve

using SolveResult = std::variant<solve::Unique, solve::NoSolution, solve::Infinite>;

/// Solves a x = rhs exactly. rhs may carry several right-hand-side columns;
/// the verdict is shared by all of them.
SolveResult solve_linear(const RatMatrix& a, const RatMatrix& rhs);

std::optional<RatMatrix> inverse(const RatMatrix& a);

/// (BᵀB)⁻¹, or nullopt when the Gram matrix is singular.
std::optional<RatMatrix> gram_inverse(const RatMatrix& b);

} // namespace polyef
