#include "polyef/polyhedron.hpp"

#include "polyef/double_description.hpp"
#include "polyef/errors.hpp"
#include "polyef/simplex.hpp"

#include <algorithm>

namespace polyef {

bool Row::satisfied_by(const Vector& x) const {
  Rational lhs = dot(coeffs, x);
  return rel == Relation::Equal ? lhs == rhs : lhs <= rhs;
}

HPolyhedron::HPolyhedron(std::size_t dim, std::vector<Row> rows) : dim_(dim) {
  for (auto& r : rows) add_row(std::move(r));
}

HPolyhedron& HPolyhedron::add_row(Row row) {
  if (row.coeffs.size() != dim_)
    throw DimensionError("row has " + std::to_string(row.coeffs.size()) + " coefficients, expected " +
                         std::to_string(dim_));
  rows_.push_back(std::move(row));
  return *this;
}

HPolyhedron& HPolyhedron::add_le(Vector coeffs, Rational rhs) {
  return add_row({std::move(coeffs), Relation::LessEqual, std::move(rhs)});
}

HPolyhedron& HPolyhedron::add_ge(const Vector& coeffs, const Rational& rhs) {
  return add_row({scale(coeffs, Rational(-1)), Relation::LessEqual, -rhs});
}

HPolyhedron& HPolyhedron::add_eq(Vector coeffs, Rational rhs) {
  return add_row({std::move(coeffs), Relation::Equal, std::move(rhs)});
}

HPolyhedron& HPolyhedron::set_coord_names(std::vector<std::string> names) {
  if (!names.empty() && names.size() != dim_) throw DimensionError("coordinate name count != dim");
  names_ = std::move(names);
  return *this;
}

std::size_t HPolyhedron::inequality_count() const {
  return static_cast<std::size_t>(
      std::count_if(rows_.begin(), rows_.end(), [](const Row& r) { return r.rel == Relation::LessEqual; }));
}

std::size_t HPolyhedron::equality_count() const { return rows_.size() - inequality_count(); }

VPolyhedron::VPolyhedron(std::size_t dim, std::vector<Vector> vertices, std::vector<Vector> rays,
                         std::vector<Vector> lineality)
    : dim_(dim), vertices_(std::move(vertices)), rays_(std::move(rays)), lineality_(std::move(lineality)) {
  for (const auto* list : {&vertices_, &rays_, &lineality_})
    for (const auto& g : *list)
      if (g.size() != dim_) throw DimensionError("generator length != dim");
  if (vertices_.empty() && (!rays_.empty() || !lineality_.empty()))
    throw ArgumentError("rays or lineality given without any vertex");
}

VPolyhedron VPolyhedron::whole_space(std::size_t dim) {
  std::vector<Vector> lin;
  for (std::size_t i = 0; i < dim; ++i) lin.push_back(unit_vector(dim, i));
  return VPolyhedron(dim, {Vector(dim)}, {}, std::move(lin));
}

std::size_t dim_of(const AnyPolyhedron& p) {
  return std::visit([](const auto& x) { return x.dim(); }, p);
}

bool membership_h(const Vector& point, const HPolyhedron& h) {
  if (point.size() != h.dim()) throw DimensionError("membership_h: point length != dim");
  return std::all_of(h.rows().begin(), h.rows().end(), [&](const Row& r) { return r.satisfied_by(point); });
}

namespace {

// Is target = Σλ·convex + Σμ·conic + Σν·linear with λ,μ >= 0 and, when
// `convex` is nonempty, Σλ = 1?
bool representable(const Vector& target, const std::vector<Vector>& convex, const std::vector<Vector>& conic,
                   const std::vector<Vector>& linear) {
  const std::size_t dim = target.size();
  const std::size_t nv = convex.size(), nr = conic.size(), nl = linear.size();
  LinearProgram lp;
  lp.num_vars = nv + nr + nl;
  lp.nonnegative.assign(lp.num_vars, false);
  for (std::size_t i = 0; i < nv + nr; ++i) lp.nonnegative[i] = true;
  lp.objective = Vector(lp.num_vars);
  for (std::size_t d = 0; d < dim; ++d) {
    Row row{Vector(lp.num_vars), Relation::Equal, target[d]};
    for (std::size_t i = 0; i < nv; ++i) row.coeffs[i] = convex[i][d];
    for (std::size_t i = 0; i < nr; ++i) row.coeffs[nv + i] = conic[i][d];
    for (std::size_t i = 0; i < nl; ++i) row.coeffs[nv + nr + i] = linear[i][d];
    lp.rows.push_back(std::move(row));
  }
  if (nv > 0) {
    Row sum{Vector(lp.num_vars), Relation::Equal, Rational(1)};
    for (std::size_t i = 0; i < nv; ++i) sum.coeffs[i] = 1;
    lp.rows.push_back(std::move(sum));
  }
  return solve_lp(lp).optimal();
}

struct LinealityBasis {
  std::vector<Vector> rows; // reduced echelon rows
  std::vector<std::size_t> pivots;

  explicit LinealityBasis(const std::vector<Vector>& dirs, std::size_t dim) {
    if (dirs.empty()) return;
    auto e = row_echelon(RatMatrix::from_rows(dirs, dim));
    pivots = e.pivots;
    for (std::size_t r = 0; r < e.reduced.rows(); ++r) rows.push_back(e.reduced.row(r));
  }

  // Unique representative of v + span(rows) with zeros at the pivots.
  Vector reduce(Vector v) const {
    for (std::size_t k = 0; k < rows.size(); ++k) {
      Rational f = v[pivots[k]];
      if (f.is_zero()) continue;
      for (std::size_t c = 0; c < v.size(); ++c)
        if (!rows[k][c].is_zero()) v[c] -= f * rows[k][c];
    }
    return v;
  }
};

void sort_unique(std::vector<Vector>& vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

// Reduction and ordering only; the generators are assumed irredundant.
VPolyhedron canonical_order(std::size_t dim, std::vector<Vector> vertices, std::vector<Vector> rays,
                            const std::vector<Vector>& lineality) {
  if (vertices.empty()) return VPolyhedron::empty_set(dim);
  LinealityBasis lin(lineality, dim);
  for (auto& v : vertices) v = lin.reduce(std::move(v));
  std::vector<Vector> kept_rays;
  for (auto& r : rays) {
    Vector red = lin.reduce(std::move(r));
    if (!is_zero(red)) kept_rays.push_back(primitive(red));
  }
  sort_unique(vertices);
  sort_unique(kept_rays);
  std::vector<Vector> lin_rows = lin.rows;
  std::sort(lin_rows.begin(), lin_rows.end());
  return VPolyhedron(dim, std::move(vertices), std::move(kept_rays), std::move(lin_rows));
}

template <typename T>
std::vector<T> without(const std::vector<T>& xs, std::size_t skip) {
  std::vector<T> out;
  out.reserve(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i)
    if (i != skip) out.push_back(xs[i]);
  return out;
}

} // namespace

bool membership_v(const Vector& point, const VPolyhedron& v) {
  if (point.size() != v.dim()) throw DimensionError("membership_v: point length != dim");
  if (v.is_empty()) return false;
  return representable(point, v.vertices(), v.rays(), v.lineality());
}

bool in_recession_cone(const Vector& dir, const HPolyhedron& h) {
  if (dir.size() != h.dim()) throw DimensionError("in_recession_cone: direction length != dim");
  for (const auto& r : h.rows()) {
    Rational s = dot(r.coeffs, dir);
    if (r.rel == Relation::Equal ? !s.is_zero() : s.sign() > 0) return false;
  }
  return true;
}

bool in_recession_cone(const Vector& dir, const VPolyhedron& v) {
  if (dir.size() != v.dim()) throw DimensionError("in_recession_cone: direction length != dim");
  if (is_zero(dir)) return true;
  return representable(dir, {}, v.rays(), v.lineality());
}

VPolyhedron enumerate_generators(const HPolyhedron& h) {
  const std::size_t d = h.dim();
  std::vector<Vector> ineq, eq;
  for (const auto& r : h.rows()) {
    Vector g(d + 1);
    if (r.rel == Relation::LessEqual) {
      for (std::size_t i = 0; i < d; ++i) g[i] = -r.coeffs[i];
      g[d] = r.rhs;
      ineq.push_back(std::move(g));
    } else {
      for (std::size_t i = 0; i < d; ++i) g[i] = r.coeffs[i];
      g[d] = -r.rhs;
      eq.push_back(std::move(g));
    }
  }
  ineq.push_back(unit_vector(d + 1, d));

  auto cone = cone_generators(ineq, eq, d + 1);
  std::vector<Vector> vertices, rays, lineality;
  for (const auto& u : cone.rays) {
    Vector x(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(d));
    if (u[d].sign() > 0)
      vertices.push_back(scale(x, u[d].inverse()));
    else
      rays.push_back(std::move(x));
  }
  for (const auto& u : cone.lineality) lineality.emplace_back(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(d));
  return canonical_order(d, std::move(vertices), std::move(rays), lineality);
}

HPolyhedron enumerate_facets(const VPolyhedron& v) {
  const std::size_t d = v.dim();
  HPolyhedron out(d);
  if (v.is_empty()) {
    out.add_le(Vector(d), Rational(-1));
    return out;
  }
  std::vector<Vector> ineq, eq;
  for (const auto& p : v.vertices()) {
    Vector g(d + 1);
    for (std::size_t i = 0; i < d; ++i) g[i] = -p[i];
    g[d] = -1;
    ineq.push_back(std::move(g));
  }
  for (const auto& r : v.rays()) {
    Vector g(d + 1);
    for (std::size_t i = 0; i < d; ++i) g[i] = -r[i];
    ineq.push_back(std::move(g));
  }
  for (const auto& l : v.lineality()) {
    Vector g(d + 1);
    for (std::size_t i = 0; i < d; ++i) g[i] = l[i];
    eq.push_back(std::move(g));
  }
  auto polar = cone_generators(ineq, eq, d + 1);
  auto emit = [&](const Vector& c, Relation rel) {
    Vector a(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(d));
    if (is_zero(a)) return;
    out.add_row({std::move(a), rel, -c[d]});
  };
  std::vector<Vector> lin = polar.lineality;
  for (auto& c : lin) c = primitive(c);
  std::sort(lin.begin(), lin.end());
  for (const auto& c : lin) emit(c, Relation::Equal);
  std::vector<Vector> facets = polar.rays;
  std::sort(facets.begin(), facets.end());
  for (const auto& c : facets) emit(c, Relation::LessEqual);
  return out;
}

VPolyhedron canonicalize(const VPolyhedron& v) {
  const std::size_t d = v.dim();
  if (v.is_empty()) return VPolyhedron::empty_set(d);

  std::vector<Vector> lin_dirs;
  for (const auto& l : v.lineality())
    if (!is_zero(l)) lin_dirs.push_back(l);
  std::vector<Vector> rays;
  for (const auto& r : v.rays())
    if (!is_zero(r)) rays.push_back(primitive(r));
  sort_unique(rays);

  // Rays whose negation is also a recession direction belong to the
  // lineality space.
  for (bool moved = true; moved;) {
    moved = false;
    LinealityBasis lin(lin_dirs, d);
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (representable(scale(rays[i], Rational(-1)), {}, rays, lin.rows)) {
        lin_dirs.push_back(rays[i]);
        rays.erase(rays.begin() + static_cast<std::ptrdiff_t>(i));
        moved = true;
        break;
      }
    }
  }

  LinealityBasis lin(lin_dirs, d);
  std::vector<Vector> reduced_rays;
  for (const auto& r : rays) {
    Vector red = lin.reduce(r);
    if (!is_zero(red)) reduced_rays.push_back(primitive(red));
  }
  sort_unique(reduced_rays);
  for (std::size_t i = reduced_rays.size(); i-- > 0;) {
    if (representable(reduced_rays[i], {}, without(reduced_rays, i), lin.rows))
      reduced_rays.erase(reduced_rays.begin() + static_cast<std::ptrdiff_t>(i));
  }

  std::vector<Vector> vertices;
  for (const auto& p : v.vertices()) vertices.push_back(lin.reduce(p));
  sort_unique(vertices);
  for (std::size_t i = vertices.size(); i-- > 0;) {
    if (vertices.size() == 1) break;
    if (representable(vertices[i], without(vertices, i), reduced_rays, lin.rows))
      vertices.erase(vertices.begin() + static_cast<std::ptrdiff_t>(i));
  }
  return canonical_order(d, std::move(vertices), std::move(reduced_rays), lin_dirs);
}

HPolyhedron remove_redundancy(const HPolyhedron& h) {
  if (!feasible_point(h)) throw EmptyPolyhedronError("remove_redundancy: polyhedron is empty");

  std::vector<Row> rows = h.rows();
  for (auto& r : rows) {
    if (r.rel != Relation::LessEqual) continue;
    auto lo = simplex_solve(h, r.coeffs, Sense::Minimize);
    if (lo.optimal() && *lo.value == r.rhs) r.rel = Relation::Equal;
  }

  std::vector<bool> keep(rows.size(), false);
  std::vector<Vector> eq_rows;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].rel != Relation::Equal || is_zero(rows[i].coeffs)) continue;
    eq_rows.push_back(rows[i].coeffs);
    if (rank(RatMatrix::from_rows(eq_rows, h.dim())) == eq_rows.size())
      keep[i] = true;
    else
      eq_rows.pop_back();
  }
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (rows[i].rel == Relation::LessEqual) keep[i] = true;

  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].rel != Relation::LessEqual) continue;
    HPolyhedron rest(h.dim());
    for (std::size_t j = 0; j < rows.size(); ++j)
      if (keep[j] && j != i) rest.add_row(rows[j]);
    auto hi = simplex_solve(rest, rows[i].coeffs, Sense::Maximize);
    if (hi.optimal() && *hi.value <= rows[i].rhs) keep[i] = false;
  }

  HPolyhedron out(h.dim());
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (keep[i]) out.add_row(rows[i]);
  out.set_coord_names(h.coord_names());
  return out;
}

VPolyhedron to_v(const AnyPolyhedron& p) {
  if (auto* h = std::get_if<HPolyhedron>(&p)) return enumerate_generators(*h);
  return std::get<VPolyhedron>(p);
}

HPolyhedron to_h(const AnyPolyhedron& p) {
  if (auto* v = std::get_if<VPolyhedron>(&p)) return enumerate_facets(*v);
  return std::get<HPolyhedron>(p);
}

bool is_subset(const AnyPolyhedron& a, const AnyPolyhedron& b) {
  if (dim_of(a) != dim_of(b)) throw DimensionError("is_subset: dimension mismatch");
  VPolyhedron va = to_v(a);
  if (va.is_empty()) return true;
  auto check = [&](const auto& target) {
    for (const auto& p : va.vertices()) {
      bool in;
      if constexpr (std::is_same_v<std::decay_t<decltype(target)>, HPolyhedron>)
        in = membership_h(p, target);
      else
        in = membership_v(p, target);
      if (!in) return false;
    }
    for (const auto& r : va.rays())
      if (!in_recession_cone(r, target)) return false;
    for (const auto& l : va.lineality())
      if (!in_recession_cone(l, target) || !in_recession_cone(scale(l, Rational(-1)), target)) return false;
    return true;
  };
  return std::visit(check, b);
}

bool polyhedra_equal(const AnyPolyhedron& a, const AnyPolyhedron& b) {
  if (dim_of(a) != dim_of(b)) throw DimensionError("polyhedra_equal: dimension mismatch");
  return is_subset(a, b) && is_subset(b, a);
}

std::vector<Row> affine_hull(const VPolyhedron& v) {
  if (v.is_empty()) throw EmptyPolyhedronError("affine_hull: empty polyhedron");
  const std::size_t d = v.dim();
  const Vector& base = v.vertices().front();
  std::vector<Vector> dirs;
  for (std::size_t i = 1; i < v.vertices().size(); ++i) dirs.push_back(sub(v.vertices()[i], base));
  for (const auto& r : v.rays()) dirs.push_back(r);
  for (const auto& l : v.lineality()) dirs.push_back(l);
  RatMatrix normals = dirs.empty() ? RatMatrix::identity(d) : null_space(RatMatrix::from_rows(dirs, d));
  std::vector<Row> out;
  for (std::size_t c = 0; c < normals.cols(); ++c) {
    Vector n = primitive(normals.col(c));
    Rational rhs = dot(n, base);
    out.push_back({std::move(n), Relation::Equal, std::move(rhs)});
  }
  return out;
}

} // namespace polyef
