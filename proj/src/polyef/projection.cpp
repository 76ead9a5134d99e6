#include "polyef/projection.hpp"

#include "polyef/errors.hpp"
#include "polyef/simplex.hpp"

#include <algorithm>
#include <map>

namespace polyef {

namespace {

// Past this many rows an elimination step also runs the LP redundancy filter.
constexpr std::size_t kLpPruneThreshold = 48;

void check_keep(const std::vector<std::size_t>& keep, std::size_t dim) {
  std::vector<bool> seen(dim, false);
  for (auto k : keep) {
    if (k >= dim) throw DimensionError("keep index " + std::to_string(k) + " out of range");
    if (seen[k]) throw ArgumentError("keep index " + std::to_string(k) + " repeated");
    seen[k] = true;
  }
}

// Scale an inequality by a positive factor so its coefficients are coprime
// integers.
Row normalized(Row r) {
  if (is_zero(r.coeffs)) return r;
  Vector p = primitive(r.coeffs);
  std::size_t lead = 0;
  while (r.coeffs[lead].is_zero()) ++lead;
  Rational factor = p[lead] / r.coeffs[lead];
  r.rhs *= factor;
  r.coeffs = std::move(p);
  return r;
}

struct Cleaned {
  std::vector<Row> rows;
  bool infeasible = false;
};

Cleaned clean(std::vector<Row> rows) {
  Cleaned out;
  std::map<Vector, std::size_t> by_coeffs; // inequality normal -> index in out.rows
  for (auto& raw : rows) {
    if (is_zero(raw.coeffs)) {
      bool ok = raw.rel == Relation::Equal ? raw.rhs.is_zero() : raw.rhs.sign() >= 0;
      if (!ok) {
        out.infeasible = true;
        return out;
      }
      continue;
    }
    Row r = normalized(std::move(raw));
    if (r.rel == Relation::Equal) {
      if (std::find(out.rows.begin(), out.rows.end(), r) == out.rows.end()) out.rows.push_back(std::move(r));
      continue;
    }
    auto it = by_coeffs.find(r.coeffs);
    if (it == by_coeffs.end()) {
      by_coeffs.emplace(r.coeffs, out.rows.size());
      out.rows.push_back(std::move(r));
    } else if (r.rhs < out.rows[it->second].rhs) {
      out.rows[it->second].rhs = r.rhs;
    }
  }
  return out;
}

std::vector<Row> lp_prune(std::vector<Row> rows, std::size_t dim) {
  HPolyhedron h(dim, rows);
  if (!feasible_point(h)) return rows;
  return remove_redundancy(h).rows();
}

HPolyhedron infeasible_result(std::size_t dim) {
  HPolyhedron out(dim);
  out.add_le(Vector(dim), Rational(-1));
  return out;
}

} // namespace

HPolyhedron fourier_motzkin(const HPolyhedron& h, const std::vector<std::size_t>& keep) {
  const std::size_t d = h.dim();
  check_keep(keep, d);
  std::vector<bool> eliminate(d, true);
  for (auto k : keep) eliminate[k] = false;

  auto cleaned = clean(h.rows());
  if (cleaned.infeasible) return infeasible_result(keep.size());
  std::vector<Row> rows = std::move(cleaned.rows);

  // Substitute through equalities first.
  for (;;) {
    std::size_t eq_idx = rows.size(), var = d;
    for (std::size_t i = 0; i < rows.size() && eq_idx == rows.size(); ++i) {
      if (rows[i].rel != Relation::Equal) continue;
      for (std::size_t j = 0; j < d; ++j)
        if (eliminate[j] && !rows[i].coeffs[j].is_zero()) {
          eq_idx = i;
          var = j;
          break;
        }
    }
    if (eq_idx == rows.size()) break;
    Row pivot = rows[eq_idx];
    rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(eq_idx));
    for (auto& r : rows) {
      if (r.coeffs[var].is_zero()) continue;
      Rational f = r.coeffs[var] / pivot.coeffs[var];
      for (std::size_t j = 0; j < d; ++j) r.coeffs[j] -= f * pivot.coeffs[j];
      r.rhs -= f * pivot.rhs;
    }
    eliminate[var] = false; // gone from every remaining row
    auto again = clean(std::move(rows));
    if (again.infeasible) return infeasible_result(keep.size());
    rows = std::move(again.rows);
  }

  for (;;) {
    std::size_t best = d;
    std::size_t best_cost = 0;
    for (std::size_t j = 0; j < d; ++j) {
      if (!eliminate[j]) continue;
      std::size_t pos = 0, neg = 0;
      for (const auto& r : rows) {
        int s = r.coeffs[j].sign();
        pos += s > 0;
        neg += s < 0;
      }
      if (best == d || pos * neg < best_cost) {
        best = j;
        best_cost = pos * neg;
      }
    }
    if (best == d) break;
    const std::size_t j = best;
    eliminate[j] = false;

    std::vector<Row> next, pos, neg;
    for (auto& r : rows) {
      int s = r.coeffs[j].sign();
      if (s == 0)
        next.push_back(std::move(r));
      else
        (s > 0 ? pos : neg).push_back(std::move(r));
    }
    for (const auto& p : pos)
      for (const auto& n : neg) {
        Rational wp = -n.coeffs[j];
        Rational wn = p.coeffs[j];
        Row c{Vector(d), Relation::LessEqual, wp * p.rhs + wn * n.rhs};
        for (std::size_t k = 0; k < d; ++k) c.coeffs[k] = wp * p.coeffs[k] + wn * n.coeffs[k];
        c.coeffs[j] = 0;
        next.push_back(std::move(c));
      }
    auto again = clean(std::move(next));
    if (again.infeasible) return infeasible_result(keep.size());
    rows = std::move(again.rows);
    if (rows.size() > kLpPruneThreshold) rows = lp_prune(std::move(rows), d);
  }

  HPolyhedron out(keep.size());
  for (const auto& r : rows) {
    Vector coeffs(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i) coeffs[i] = r.coeffs[keep[i]];
    out.add_row({std::move(coeffs), r.rel, r.rhs});
  }
  if (!h.coord_names().empty()) {
    std::vector<std::string> names;
    for (auto k : keep) names.push_back(h.coord_names()[k]);
    out.set_coord_names(std::move(names));
  }
  return out;
}

VPolyhedron project_v(const VPolyhedron& v, const std::vector<std::size_t>& keep) {
  check_keep(keep, v.dim());
  auto pick = [&](const std::vector<Vector>& gens) {
    std::vector<Vector> out;
    for (const auto& g : gens) {
      Vector p(keep.size());
      for (std::size_t i = 0; i < keep.size(); ++i) p[i] = g[keep[i]];
      out.push_back(std::move(p));
    }
    return out;
  };
  if (v.is_empty()) return VPolyhedron::empty_set(keep.size());
  return canonicalize(VPolyhedron(keep.size(), pick(v.vertices()), pick(v.rays()), pick(v.lineality())));
}

} // namespace polyef
