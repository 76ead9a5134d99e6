#include "polyef/bridge.hpp"

#include "polyef/ef.hpp"
#include "polyef/errors.hpp"
#include "polyef/random_polytope.hpp"
#include "polyef/simplex.hpp"

namespace polyef {

GraphL::GraphL(RatMatrix b, RatMatrix c, Vector r) : b_mat(std::move(b)), c_mat(std::move(c)), rhs(std::move(r)) {
  if (b_mat.rows() != c_mat.rows() || b_mat.rows() != rhs.size())
    throw DimensionError("GraphL: B, C and b disagree on the row count");
}

HPolyhedron GraphL::as_polyhedron() const {
  const std::size_t p = x_dim(), q = y_dim();
  HPolyhedron h(p + q);
  for (std::size_t i = 0; i < rows(); ++i) {
    Vector coeffs(p + q);
    for (std::size_t j = 0; j < p; ++j) coeffs[j] = b_mat(i, j);
    for (std::size_t j = 0; j < q; ++j) coeffs[p + j] = c_mat(i, j);
    h.add_eq(std::move(coeffs), rhs[i]);
  }
  return h;
}

Vector AffineBridge::apply(const Vector& y) const {
  if (y.size() != cbar.cols()) throw DimensionError("apply_bridge: y has the wrong length");
  return add(cbar.apply(y), bbar);
}

std::optional<AffineBridge> derive_bridge(const GraphL& l) {
  auto gram_inv = gram_inverse(l.b_mat);
  if (!gram_inv) return std::nullopt;
  // Bx = b - Cy  =>  BᵀBx = Bᵀb - BᵀCy  =>  x = (BᵀB)⁻¹Bᵀb - (BᵀB)⁻¹BᵀCy
  RatMatrix left = mat_mul(*gram_inv, l.b_mat.transpose());
  AffineBridge br;
  br.cbar = mat_scale(mat_mul(left, l.c_mat), Rational(-1));
  br.bbar = left.apply(l.rhs);
  return br;
}

Vector apply_bridge(const AffineBridge& br, const Vector& y) { return br.apply(y); }

TwoStepResult two_step_optimize(const Vector& alpha, const HPolyhedron& y_set, const AffineBridge& br) {
  if (alpha.size() != br.cbar.rows()) throw DimensionError("two_step_optimize: alpha length != x dimension");
  if (y_set.dim() != br.cbar.cols()) throw DimensionError("two_step_optimize: Y dimension != y dimension");

  // Step 1: the constant αᵀbbar plays no part in the minimization.
  Vector reduced_cost = br.cbar.transpose().apply(alpha);
  auto lp = simplex_solve(y_set, reduced_cost, Sense::Minimize);
  if (lp.status == LPStatus::Infeasible) throw OptimizationError("two_step_optimize: Y is empty");
  if (lp.status == LPStatus::Unbounded) throw OptimizationError("two_step_optimize: objective unbounded over Y");

  // Step 2: retrieve x through the graph.
  TwoStepResult out;
  out.y = *lp.point;
  out.x = br.apply(out.y);
  out.value = *lp.value + dot(alpha, br.bbar);
  return out;
}

Theorem2Report verify_theorem2(const HPolyhedron& x_set, const HPolyhedron& y_set, const GraphL& l,
                               const Vector& alpha) {
  Theorem2Report rep;
  if (l.x_dim() != x_set.dim() || l.y_dim() != y_set.dim())
    throw DimensionError("verify_theorem2: graph dimensions do not match X and Y");
  auto br = derive_bridge(l);
  if (!br) {
    rep.premise_failure = "Gram matrix BᵀB is singular";
    return rep;
  }
  auto direct = simplex_solve(x_set, alpha, Sense::Minimize);
  if (!direct.optimal()) {
    rep.premise_failure = direct.status == LPStatus::Infeasible ? "X is empty" : "objective unbounded over X";
    return rep;
  }
  rep.direct_value = direct.value;
  try {
    auto two = two_step_optimize(alpha, y_set, *br);
    rep.two_step_value = two.value;
    rep.x_star = two.x;
    rep.y_star = two.y;
  } catch (const OptimizationError& e) {
    rep.premise_failure = e.what();
    return rep;
  }
  rep.x_star_feasible = membership_h(*rep.x_star, x_set);
  if (!rep.x_star_feasible) {
    rep.premise_failure = "retrieved x* lies outside X";
    return rep;
  }
  rep.premise_ok = true;
  rep.values_equal = *rep.direct_value == *rep.two_step_value;
  return rep;
}

BridgeInstance random_bridge_instance(std::mt19937_64& rng, std::size_t dim) {
  const std::size_t rows = std::min<std::size_t>(12, 2 * dim + static_cast<std::size_t>(random_int(rng, 0, 3)));
  HPolyhedron y_set = random_polytope(rng, dim, rows);

  RatMatrix m(dim, dim);
  do {
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) m(i, j) = Rational(random_int(rng, -3, 3));
  } while (rank(m) != dim);
  Vector offset(dim);
  for (auto& x : offset) x = Rational(random_int(rng, -5, 5));

  LinearMap affine(m, offset);
  HPolyhedron x_set = enumerate_facets(image_under_map(affine, enumerate_generators(y_set)));

  Vector alpha(dim);
  for (auto& a : alpha) a = Rational(random_int(rng, -5, 5));

  return {std::move(x_set), std::move(y_set),
          GraphL(RatMatrix::identity(dim), mat_scale(m, Rational(-1)), offset), std::move(alpha)};
}

} // namespace polyef
