#include "polyef/matrix.hpp"

#include "polyef/errors.hpp"

#include <utility>

namespace polyef {

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  RatMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionError("from_rows: ragged row");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RatMatrix RatMatrix::from_columns(const std::vector<Vector>& cols, std::size_t rows) {
  RatMatrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw DimensionError("from_columns: ragged column");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

RatMatrix RatMatrix::column(const Vector& v) { return from_columns({v}, v.size()); }

Vector RatMatrix::row(std::size_t r) const {
  auto s = row_span(r);
  return Vector(s.begin(), s.end());
}

Vector RatMatrix::col(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Vector RatMatrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw DimensionError("apply: vector length != cols");
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    mpq_class acc;
    for (std::size_t c = 0; c < cols_; ++c) acc += (*this)(r, c).raw() * v[c].raw();
    out[r] = Rational(std::move(acc));
  }
  return out;
}

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows())
    throw DimensionError("mat_mul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                         " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  RatMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      mpq_class acc;
      for (std::size_t k = 0; k < a.cols(); ++k) acc += a(i, k).raw() * b(k, j).raw();
      out(i, j) = Rational(std::move(acc));
    }
  return out;
}

RatMatrix mat_add(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("mat_add: shape mismatch");
  RatMatrix out(a);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) += b(i, j);
  return out;
}

RatMatrix mat_scale(const RatMatrix& a, const Rational& s) {
  RatMatrix out(a);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) *= s;
  return out;
}

namespace {

using IntGrid = std::vector<std::vector<mpz_class>>;

// Each row scaled by the lcm of its denominators.
IntGrid integer_rows(const RatMatrix& a) {
  IntGrid g(a.rows(), std::vector<mpz_class>(a.cols()));
  for (std::size_t r = 0; r < a.rows(); ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < a.cols(); ++c)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(r, c).raw().get_den_mpz_t());
    for (std::size_t c = 0; c < a.cols(); ++c)
      g[r][c] = a(r, c).numerator() * (l / a(r, c).denominator());
  }
  return g;
}

// Fraction-free forward elimination. Leaves `g` in row echelon form (rows
// beyond the returned pivot count are zero).
std::vector<std::size_t> bareiss_forward(IntGrid& g, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  const std::size_t m = g.size();
  mpz_class prev = 1;
  mpz_class rem;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < m; ++c) {
    std::size_t p = r;
    while (p < m && g[p][c] == 0) ++p;
    if (p == m) continue;
    std::swap(g[p], g[r]);
    for (std::size_t i = r + 1; i < m; ++i) {
      for (std::size_t j = c + 1; j < ncols; ++j) {
        mpz_class t = g[r][c] * g[i][j] - g[i][c] * g[r][j];
        mpz_tdiv_qr(g[i][j].get_mpz_t(), rem.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        if (rem != 0) throw ArithmeticError("bareiss: inexact division");
      }
      g[i][c] = 0;
    }
    prev = g[r][c];
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

} // namespace

Echelon row_echelon(const RatMatrix& a) {
  IntGrid g = integer_rows(a);
  auto pivots = bareiss_forward(g, a.cols());
  const std::size_t rk = pivots.size();
  RatMatrix red(rk, a.cols());
  for (std::size_t r = 0; r < rk; ++r) {
    const mpz_class& lead = g[r][pivots[r]];
    for (std::size_t c = 0; c < a.cols(); ++c) red(r, c) = Rational(g[r][c], lead);
  }
  for (std::size_t r = rk; r-- > 0;) {
    for (std::size_t above = 0; above < r; ++above) {
      Rational f = red(above, pivots[r]);
      if (f.is_zero()) continue;
      for (std::size_t c = pivots[r]; c < a.cols(); ++c) red(above, c) -= f * red(r, c);
    }
  }
  return {std::move(red), std::move(pivots)};
}

std::size_t rank(const RatMatrix& a) {
  IntGrid g = integer_rows(a);
  return bareiss_forward(g, a.cols()).size();
}

namespace {

RatMatrix null_space_from(const Echelon& e, std::size_t ncols) {
  std::vector<bool> is_pivot(ncols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    Vector v(ncols);
    v[f] = 1;
    for (std::size_t k = 0; k < e.pivots.size(); ++k) v[e.pivots[k]] = -e.reduced(k, f);
    for (const auto& x : v) {
      if (x.is_zero()) continue;
      if (x.sign() < 0) v = scale(v, Rational(-1));
      break;
    }
    basis.push_back(std::move(v));
  }
  return RatMatrix::from_columns(basis, ncols);
}

} // namespace

RatMatrix null_space(const RatMatrix& a) { return null_space_from(row_echelon(a), a.cols()); }

std::vector<Vector> row_space_basis(const RatMatrix& a) {
  auto e = row_echelon(a);
  std::vector<Vector> out;
  for (std::size_t r = 0; r < e.reduced.rows(); ++r) out.push_back(e.reduced.row(r));
  return out;
}

SolveResult solve_linear(const RatMatrix& a, const RatMatrix& rhs) {
  if (a.rows() != rhs.rows()) throw DimensionError("solve_linear: rhs rows != matrix rows");
  const std::size_t n = a.cols();
  RatMatrix aug(a.rows(), n + rhs.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    for (std::size_t c = 0; c < rhs.cols(); ++c) aug(r, n + c) = rhs(r, c);
  }
  auto e = row_echelon(aug);
  if (!e.pivots.empty() && e.pivots.back() >= n) return solve::NoSolution{};

  RatMatrix particular(n, rhs.cols());
  for (std::size_t k = 0; k < e.pivots.size(); ++k)
    for (std::size_t c = 0; c < rhs.cols(); ++c) particular(e.pivots[k], c) = e.reduced(k, n + c);
  if (e.pivots.size() == n) return solve::Unique{std::move(particular)};

  Echelon left{RatMatrix(e.reduced.rows(), n), e.pivots};
  for (std::size_t r = 0; r < e.reduced.rows(); ++r)
    for (std::size_t c = 0; c < n; ++c) left.reduced(r, c) = e.reduced(r, c);
  return solve::Infinite{std::move(particular), null_space_from(left, n)};
}

std::optional<RatMatrix> inverse(const RatMatrix& a) {
  if (a.rows() != a.cols()) throw DimensionError("inverse: matrix not square");
  auto res = solve_linear(a, RatMatrix::identity(a.rows()));
  if (auto* u = std::get_if<solve::Unique>(&res)) return std::move(u->x);
  return std::nullopt;
}

std::optional<RatMatrix> gram_inverse(const RatMatrix& b) {
  return inverse(mat_mul(b.transpose(), b));
}

} // namespace polyef
