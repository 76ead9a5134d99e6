#include "polyef/ef.hpp"

#include "polyef/errors.hpp"
#include "polyef/projection.hpp"
#include "polyef/simplex.hpp"

namespace polyef {

LinearMap::LinearMap(RatMatrix matrix, std::optional<Vector> offset)
    : matrix_(std::move(matrix)), offset_(std::move(offset)) {
  if (offset_ && offset_->size() != matrix_.rows()) throw DimensionError("map offset length != target dim");
}

Vector LinearMap::apply(const Vector& x) const {
  Vector y = matrix_.apply(x);
  if (offset_) y = add(y, *offset_);
  return y;
}

std::string to_string(EFDefinition d) {
  switch (d) {
  case EFDefinition::Standard: return "standard";
  case EFDefinition::FioriniMap: return "map";
  case EFDefinition::FioriniExists: return "exists";
  }
  return "unknown";
}

namespace {

void check_coords(const HPolyhedron& q, const AnyPolyhedron& p, const std::vector<std::size_t>& x_coords) {
  if (x_coords.size() != dim_of(p))
    throw DimensionError("x_coords has " + std::to_string(x_coords.size()) + " entries but P lives in dimension " +
                         std::to_string(dim_of(p)));
  for (auto c : x_coords)
    if (c >= q.dim()) throw DimensionError("x coordinate " + std::to_string(c) + " outside Q");
}

std::vector<Vector> directions_of(const VPolyhedron& v) {
  std::vector<Vector> dirs = v.rays();
  for (const auto& l : v.lineality()) {
    dirs.push_back(l);
    dirs.push_back(scale(l, Rational(-1)));
  }
  return dirs;
}

// Smallest t in {1, 2} with base + t·dir violating the row. Requires
// row·dir != 0.
Vector step_off_equality(const Vector& base, const Vector& dir, const Row& row) {
  Vector p = add(base, dir);
  if (row.satisfied_by(p)) p = add(p, dir);
  return p;
}

// A point on base + t·dir (t >= 0) outside h, given that dir is not a
// recession direction of h.
std::optional<Vector> walk_out(const Vector& base, const Vector& dir, const HPolyhedron& h) {
  for (const auto& r : h.rows()) {
    Rational s = dot(r.coeffs, dir);
    if (r.rel == Relation::Equal && !s.is_zero()) return step_off_equality(base, dir, r);
    if (r.rel == Relation::LessEqual && s.sign() > 0) {
      Rational slack = r.rhs - dot(r.coeffs, base);
      Rational t = slack.sign() > 0 ? slack / s + 1 : Rational(1);
      return add(base, scale(dir, t));
    }
  }
  return std::nullopt;
}

struct Witness {
  Vector point;
  std::string side;
};

// A point in exactly one of `a` and `b`, given that they differ.
std::optional<Witness> separating_point(const VPolyhedron& a, const AnyPolyhedron& b, const std::string& side) {
  if (a.is_empty()) return std::nullopt;
  HPolyhedron hb = to_h(b);
  for (const auto& v : a.vertices())
    if (!membership_h(v, hb)) return Witness{v, side};
  for (const auto& d : directions_of(a))
    if (auto p = walk_out(a.vertices().front(), d, hb)) return Witness{*p, side};
  return std::nullopt;
}

std::optional<Witness> find_witness(const HPolyhedron& projection, const AnyPolyhedron& p) {
  VPolyhedron vproj = enumerate_generators(projection);
  VPolyhedron vp = to_v(p);
  // Prefer a point of the projection that leaves the affine hull of P.
  if (!vproj.is_empty() && !vp.is_empty()) {
    auto hull = affine_hull(vp);
    for (const auto& d : directions_of(vproj))
      for (const auto& row : hull)
        if (!dot(row.coeffs, d).is_zero())
          return Witness{step_off_equality(vproj.vertices().front(), d, row), "projection \\ P"};
  }
  if (auto w = separating_point(vproj, p, "projection \\ P")) return w;
  return separating_point(vp, projection, "P \\ projection");
}

HPolyhedron with_fixed(const HPolyhedron& q, const std::vector<std::size_t>& x_coords, const Vector& x) {
  HPolyhedron fixed = q;
  for (std::size_t i = 0; i < x_coords.size(); ++i) fixed.add_eq(unit_vector(q.dim(), x_coords[i]), x[i]);
  return fixed;
}

bool liftable(const HPolyhedron& q, const std::vector<std::size_t>& x_coords, const Vector& x) {
  return feasible_point(with_fixed(q, x_coords, x)).has_value();
}

// Is there e with (dir, e) in the recession cone of q?
bool direction_liftable(const HPolyhedron& q, const std::vector<std::size_t>& x_coords, const Vector& dir) {
  HPolyhedron cone(q.dim());
  for (const auto& r : q.rows()) cone.add_row({r.coeffs, r.rel, Rational(0)});
  return liftable(cone, x_coords, dir);
}

Vector restrict_to(const Vector& full, const std::vector<std::size_t>& coords) {
  Vector out;
  for (auto c : coords) out.push_back(full[c]);
  return out;
}

Vector embed(const Vector& x, const std::vector<std::size_t>& coords, std::size_t dim) {
  Vector out(dim);
  for (std::size_t i = 0; i < coords.size(); ++i) out[coords[i]] = x[i];
  return out;
}

// A point of q whose x part satisfies row.coeffs·x beyond row.rhs in the
// given direction (+1: greater, -1: smaller), if any.
std::optional<Vector> violating_lift(const HPolyhedron& q, const std::vector<std::size_t>& x_coords, const Row& row,
                                     int direction) {
  Vector obj = embed(row.coeffs, x_coords, q.dim());
  auto res = simplex_solve(q, obj, direction > 0 ? Sense::Maximize : Sense::Minimize);
  if (res.status == LPStatus::Infeasible) return std::nullopt;
  if (res.optimal()) {
    bool beyond = direction > 0 ? *res.value > row.rhs : *res.value < row.rhs;
    return beyond ? res.point : std::nullopt;
  }
  HPolyhedron beyond = q;
  if (direction > 0)
    beyond.add_ge(obj, row.rhs + 1);
  else
    beyond.add_le(obj, row.rhs - 1);
  return feasible_point(beyond);
}

} // namespace

EFVerdict is_ef_standard(const HPolyhedron& q, const AnyPolyhedron& p, const std::vector<std::size_t>& x_coords) {
  check_coords(q, p, x_coords);
  EFVerdict v;
  v.definition = EFDefinition::Standard;
  HPolyhedron projection = fourier_motzkin(q, x_coords);
  v.holds = polyhedra_equal(projection, p);
  if (!v.holds) {
    if (auto w = find_witness(projection, p)) {
      v.witness_point = std::move(w->point);
      v.witness_side = std::move(w->side);
    }
  }
  return v;
}

EFVerdict is_ef_exists(const HPolyhedron& q, const AnyPolyhedron& p, const std::vector<std::size_t>& x_coords) {
  check_coords(q, p, x_coords);
  EFVerdict v;
  v.definition = EFDefinition::FioriniExists;
  auto fail = [&](Vector point, std::string side) {
    v.holds = false;
    v.witness_point = std::move(point);
    v.witness_side = std::move(side);
    return v;
  };

  // Every x of P lifts.
  VPolyhedron vp = to_v(p);
  for (const auto& x : vp.vertices())
    if (!liftable(q, x_coords, x)) return fail(x, "P \\ liftable");
  for (const auto& d : directions_of(vp)) {
    if (direction_liftable(q, x_coords, d)) continue;
    Rational t = 1;
    for (int i = 0; i < 256; ++i, t *= 2) {
      Vector x = add(vp.vertices().front(), scale(d, t));
      if (!liftable(q, x_coords, x)) return fail(x, "P \\ liftable");
    }
    throw ArithmeticError("is_ef_exists: could not locate a non-liftable point along a direction");
  }

  // Every liftable x is in P.
  HPolyhedron hp = to_h(p);
  for (const auto& row : hp.rows()) {
    for (int dir : {1, -1}) {
      if (dir < 0 && row.rel != Relation::Equal) continue;
      if (auto lift = violating_lift(q, x_coords, row, dir)) return fail(restrict_to(*lift, x_coords), "liftable \\ P");
    }
  }
  v.holds = true;
  return v;
}

VPolyhedron image_under_map(const LinearMap& map, const VPolyhedron& q) {
  if (map.source_dim() != q.dim())
    throw DimensionError("image_under_map: map source dim " + std::to_string(map.source_dim()) +
                         " != polyhedron dim " + std::to_string(q.dim()));
  if (q.is_empty()) return VPolyhedron::empty_set(map.target_dim());
  std::vector<Vector> verts, rays, lin;
  for (const auto& v : q.vertices()) verts.push_back(map.apply(v));
  for (const auto& r : q.rays())
    if (auto img = map.apply_linear(r); !is_zero(img)) rays.push_back(std::move(img));
  for (const auto& l : q.lineality())
    if (auto img = map.apply_linear(l); !is_zero(img)) lin.push_back(std::move(img));
  return canonicalize(VPolyhedron(map.target_dim(), std::move(verts), std::move(rays), std::move(lin)));
}

EFVerdict is_ef_linear_map(const AnyPolyhedron& q, const AnyPolyhedron& p, const LinearMap& map) {
  if (map.source_dim() != dim_of(q) || map.target_dim() != dim_of(p))
    throw DimensionError("is_ef_linear_map: map is " + std::to_string(map.target_dim()) + "x" +
                         std::to_string(map.source_dim()) + ", polyhedra have dims " + std::to_string(dim_of(q)) +
                         " and " + std::to_string(dim_of(p)));
  EFVerdict v;
  v.definition = EFDefinition::FioriniMap;
  VPolyhedron image = image_under_map(map, to_v(q));
  v.holds = polyhedra_equal(image, p);
  if (v.holds) {
    v.witness_map = map;
  } else if (auto w = separating_point(image, p, "image \\ P")) {
    v.witness_point = std::move(w->point);
    v.witness_side = std::move(w->side);
  } else if (auto w2 = separating_point(to_v(p), image, "P \\ image")) {
    v.witness_point = std::move(w2->point);
    v.witness_side = std::move(w2->side);
  }
  return v;
}

std::optional<LinearMap> fit_linear_map(const std::vector<std::pair<Vector, Vector>>& pairs) {
  if (pairs.empty()) throw ArgumentError("fit_linear_map: no point pairs given");
  const std::size_t src = pairs.front().first.size();
  const std::size_t tgt = pairs.front().second.size();
  std::vector<Vector> sources, targets;
  for (const auto& [s, t] : pairs) {
    if (s.size() != src || t.size() != tgt) throw DimensionError("fit_linear_map: inconsistent pair dimensions");
    sources.push_back(s);
    targets.push_back(t);
  }
  RatMatrix s_mat = RatMatrix::from_rows(sources, src); // k x src
  RatMatrix t_mat = RatMatrix::from_rows(targets, tgt); // k x tgt
  auto res = solve_linear(s_mat, t_mat);                // s_mat · Mᵀ = t_mat
  RatMatrix mt;
  if (auto* u = std::get_if<solve::Unique>(&res))
    mt = std::move(u->x);
  else if (auto* inf = std::get_if<solve::Infinite>(&res))
    mt = std::move(inf->particular);
  else
    return std::nullopt;
  return LinearMap(mt.transpose());
}

bool is_degenerate_ef(const HPolyhedron& q, const std::vector<std::size_t>& x_coords) {
  for (auto c : x_coords)
    if (c >= q.dim()) throw DimensionError("x coordinate " + std::to_string(c) + " outside Q");
  HPolyhedron minimal = remove_redundancy(q);
  for (const auto& r : minimal.rows())
    for (auto c : x_coords)
      if (!r.coeffs[c].is_zero()) return false;
  return true;
}

InequalityCount count_inequalities(const HPolyhedron& h, CountConvention convention) {
  InequalityCount c;
  c.inequalities = h.inequality_count();
  c.equalities = h.equality_count();
  c.total = convention == CountConvention::EqualityAsTwo ? c.inequalities + 2 * c.equalities : c.inequalities;
  return c;
}

} // namespace polyef
