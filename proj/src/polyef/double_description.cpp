#include "polyef/double_description.hpp"

#include "polyef/errors.hpp"
#include "polyef/matrix.hpp"

#include <bit>
#include <cstdint>

namespace polyef {

namespace {

using IntVec = std::vector<mpz_class>;

class ZeroSet {
public:
  explicit ZeroSet(std::size_t bits = 0) : words_((bits + 63) / 64) {}
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  ZeroSet operator&(const ZeroSet& o) const {
    ZeroSet r(*this);
    for (std::size_t w = 0; w < words_.size(); ++w) r.words_[w] &= o.words_[w];
    return r;
  }
  bool contains(const ZeroSet& sub) const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if ((sub.words_[w] & ~words_[w]) != 0) return false;
    return true;
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

private:
  std::vector<std::uint64_t> words_;
};

struct Ray {
  IntVec coords;
  ZeroSet zeros;
};

void make_primitive(IntVec& v) {
  mpz_class g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g > 1)
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

IntVec to_primitive_ints(const Vector& v) {
  Vector p = primitive(v);
  IntVec out;
  out.reserve(p.size());
  for (const auto& x : p) out.push_back(x.numerator());
  return out;
}

mpz_class eval(const IntVec& row, const IntVec& ray) {
  mpz_class acc = 0;
  for (std::size_t i = 0; i < row.size(); ++i)
    if (row[i] != 0 && ray[i] != 0) acc += row[i] * ray[i];
  return acc;
}

// Extreme rays of the pointed cone {s : rows·s >= 0}; `rows` has full column
// rank `r`.
std::vector<IntVec> pointed_cone_rays(const std::vector<IntVec>& rows, std::size_t r) {
  const std::size_t m = rows.size();

  // Greedy choice of r independent rows seeds a simplicial cone.
  std::vector<std::size_t> chosen;
  std::vector<Vector> chosen_rows;
  for (std::size_t i = 0; i < m && chosen.size() < r; ++i) {
    Vector candidate;
    for (const auto& x : rows[i]) candidate.emplace_back(x);
    chosen_rows.push_back(candidate);
    if (rank(RatMatrix::from_rows(chosen_rows, r)) == chosen_rows.size())
      chosen.push_back(i);
    else
      chosen_rows.pop_back();
  }
  if (chosen.size() != r) throw ArithmeticError("double description: constraint matrix lacks full column rank");

  auto inv = inverse(RatMatrix::from_rows(chosen_rows, r));
  if (!inv) throw ArithmeticError("double description: singular seed basis");

  std::vector<Ray> rays;
  for (std::size_t j = 0; j < r; ++j) {
    Ray ray{to_primitive_ints(inv->col(j)), ZeroSet(m)};
    for (std::size_t k = 0; k < r; ++k)
      if (k != j) ray.zeros.set(chosen[k]);
    rays.push_back(std::move(ray));
  }

  std::vector<bool> used(m, false);
  for (auto i : chosen) used[i] = true;

  for (std::size_t i = 0; i < m; ++i) {
    if (used[i]) continue;
    const IntVec& row = rows[i];
    std::vector<mpz_class> vals(rays.size());
    std::vector<std::size_t> pos, neg, zero;
    for (std::size_t k = 0; k < rays.size(); ++k) {
      vals[k] = eval(row, rays[k].coords);
      int s = sgn(vals[k]);
      (s > 0 ? pos : s < 0 ? neg : zero).push_back(k);
    }
    if (neg.empty()) {
      for (auto k : zero) rays[k].zeros.set(i);
      continue;
    }

    std::vector<Ray> next;
    next.reserve(pos.size() + zero.size());
    for (auto k : pos) next.push_back(rays[k]);
    for (auto k : zero) {
      next.push_back(rays[k]);
      next.back().zeros.set(i);
    }
    for (auto p : pos) {
      for (auto n : neg) {
        ZeroSet common = rays[p].zeros & rays[n].zeros;
        if (common.count() + 2 < r) continue;
        bool adjacent = true;
        for (std::size_t k = 0; k < rays.size() && adjacent; ++k) {
          if (k == p || k == n) continue;
          if (rays[k].zeros.contains(common)) adjacent = false;
        }
        if (!adjacent) continue;
        Ray fresh{IntVec(r), common};
        mpz_class neg_val = -vals[n];
        for (std::size_t c = 0; c < r; ++c)
          fresh.coords[c] = vals[p] * rays[n].coords[c] + neg_val * rays[p].coords[c];
        make_primitive(fresh.coords);
        fresh.zeros.set(i);
        next.push_back(std::move(fresh));
      }
    }
    rays = std::move(next);
  }

  std::vector<IntVec> out;
  out.reserve(rays.size());
  for (auto& ray : rays) out.push_back(std::move(ray.coords));
  return out;
}

} // namespace

ConeGenerators cone_generators(const std::vector<Vector>& ineq, const std::vector<Vector>& eq,
                               std::size_t dim) {
  for (const auto& g : ineq)
    if (g.size() != dim) throw DimensionError("cone_generators: inequality length != dim");
  for (const auto& e : eq)
    if (e.size() != dim) throw DimensionError("cone_generators: equality length != dim");

  RatMatrix basis = eq.empty() ? RatMatrix::identity(dim) : null_space(RatMatrix::from_rows(eq, dim));
  const std::size_t k = basis.cols();
  ConeGenerators out;
  if (k == 0) return out;

  std::vector<Vector> reduced;
  reduced.reserve(ineq.size());
  for (const auto& g : ineq) {
    Vector row(k);
    for (std::size_t c = 0; c < k; ++c)
      for (std::size_t d = 0; d < dim; ++d)
        if (!g[d].is_zero()) row[c] += g[d] * basis(d, c);
    if (!is_zero(row)) reduced.push_back(std::move(row));
  }

  RatMatrix g_mat = RatMatrix::from_rows(reduced, k);
  RatMatrix lin_k = reduced.empty() ? RatMatrix::identity(k) : null_space(g_mat);
  for (std::size_t c = 0; c < lin_k.cols(); ++c) out.lineality.push_back(basis.apply(lin_k.col(c)));
  if (reduced.empty()) return out;

  auto span_rows = row_space_basis(g_mat);
  const std::size_t r = span_rows.size();
  RatMatrix span = RatMatrix::from_columns(span_rows, k); // k x r
  RatMatrix lift = mat_mul(basis, span);                   // dim x r

  std::vector<IntVec> rows;
  rows.reserve(reduced.size());
  RatMatrix h = mat_mul(g_mat, span);
  for (std::size_t i = 0; i < h.rows(); ++i) rows.push_back(to_primitive_ints(h.row(i)));

  for (const auto& s : pointed_cone_rays(rows, r)) {
    Vector sv;
    sv.reserve(r);
    for (const auto& x : s) sv.emplace_back(x);
    out.rays.push_back(primitive(lift.apply(sv)));
  }
  return out;
}

} // namespace polyef
