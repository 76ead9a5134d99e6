#pragma once

// Independent reference computations for the tests. Nothing here calls the
// double description or simplex code.

#include "polyef/matrix.hpp"
#include "polyef/polyhedron.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using polyef::HPolyhedron;
using polyef::RatMatrix;
using polyef::Rational;
using polyef::Relation;
using polyef::Vector;

inline bool satisfies(const HPolyhedron& h, const Vector& x) {
  for (const auto& r : h.rows()) {
    Rational lhs = 0;
    for (std::size_t i = 0; i < x.size(); ++i) lhs += r.coeffs[i] * x[i];
    if (r.rel == Relation::Equal ? lhs != r.rhs : lhs > r.rhs) return false;
  }
  return true;
}

// Solves the square system by Gauss-Jordan elimination; empty when singular.
inline std::optional<Vector> solve_square(std::vector<Vector> a, Vector b) {
  const std::size_t n = b.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c].is_zero()) continue;
      Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  Vector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

// Vertices of a bounded H-polyhedron: feasible unique solutions of every
// dim-subset of rows taken with equality. Sorted, duplicates removed.
inline std::vector<Vector> brute_force_vertices(const HPolyhedron& h) {
  const std::size_t d = h.dim(), m = h.rows().size();
  std::set<Vector> found;
  if (d == 0) return {Vector{}};
  if (m < d) return {};
  std::vector<bool> pick(m, false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(d), true);
  do {
    std::vector<Vector> a;
    Vector b;
    for (std::size_t i = 0; i < m; ++i)
      if (pick[i]) {
        a.push_back(h.rows()[i].coeffs);
        b.push_back(h.rows()[i].rhs);
      }
    if (auto x = solve_square(a, b); x && satisfies(h, *x)) found.insert(*x);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return {found.begin(), found.end()};
}

inline Rational min_over(const std::vector<Vector>& pts, const Vector& c) {
  Rational best;
  bool first = true;
  for (const auto& p : pts) {
    Rational v = 0;
    for (std::size_t i = 0; i < c.size(); ++i) v += c[i] * p[i];
    if (first || v < best) best = v;
    first = false;
  }
  return best;
}

// Random convex combination with small integer weights.
inline Vector random_convex_point(std::mt19937_64& rng, const std::vector<Vector>& pts) {
  std::uniform_int_distribution<long> w(0, 5);
  Vector x(pts.front().size());
  Rational total = 0;
  for (const auto& p : pts) {
    Rational wi(w(rng));
    total += wi;
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += wi * p[i];
  }
  if (total.is_zero()) return pts.front();
  for (auto& xi : x) xi /= total;
  return x;
}

// The classic cycling example: Dantzig's largest-coefficient rule cycles on it.
//   min -3/4 x4 + 20 x5 - 1/2 x6 + 6 x7
//   1/4 x4 -  8 x5 -     x6 + 9 x7 <= 0
//   1/2 x4 - 12 x5 - 1/2 x6 + 3 x7 <= 0
//                          x6      <= 1,   x >= 0
// Optimum -5/4 at x4 = 1, x6 = 1.
inline HPolyhedron beale_feasible_set() {
  HPolyhedron h(4);
  h.add_le({Rational(1, 4), Rational(-8), Rational(-1), Rational(9)}, 0);
  h.add_le({Rational(1, 2), Rational(-12), Rational(-1, 2), Rational(3)}, 0);
  h.add_le({Rational(0), Rational(0), Rational(1), Rational(0)}, 1);
  for (std::size_t i = 0; i < 4; ++i) h.add_ge(polyef::unit_vector(4, i), 0);
  return h;
}

inline Vector beale_objective() { return {Rational(-3, 4), Rational(20), Rational(-1, 2), Rational(6)}; }

} // namespace oracle
