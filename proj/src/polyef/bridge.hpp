#pragma once

#include "polyef/matrix.hpp"
#include "polyef/polyhedron.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>

namespace polyef {

/// L = {(x, y) : B x + C y = b} with x in R^p and y in R^q.
struct GraphL {
  RatMatrix b_mat; // m x p
  RatMatrix c_mat; // m x q
  Vector rhs;      // m

  GraphL() = default;
  GraphL(RatMatrix b, RatMatrix c, Vector rhs);

  std::size_t rows() const { return b_mat.rows(); }
  std::size_t x_dim() const { return b_mat.cols(); }
  std::size_t y_dim() const { return c_mat.cols(); }

  /// L as an H-polyhedron over (x, y).
  HPolyhedron as_polyhedron() const;

  friend bool operator==(const GraphL&, const GraphL&) = default;
};

/// x = cbar·y + bbar.
struct AffineBridge {
  RatMatrix cbar; // p x q
  Vector bbar;    // p

  Vector apply(const Vector& y) const;
};

/// cbar = -(BᵀB)⁻¹BᵀC and bbar = (BᵀB)⁻¹Bᵀb, or nullopt when BᵀB is singular.
std::optional<AffineBridge> derive_bridge(const GraphL& l);

Vector apply_bridge(const AffineBridge& br, const Vector& y);

struct TwoStepResult {
  Vector x;
  Vector y;
  Rational value; // αᵀx, constant term included
};

/// Minimize (αᵀ cbar) y over y_set, then retrieve x = cbar y + bbar. Throws
/// OptimizationError when y_set is empty or the objective is unbounded.
TwoStepResult two_step_optimize(const Vector& alpha, const HPolyhedron& y_set, const AffineBridge& br);

struct Theorem2Report {
  bool premise_ok = false;
  std::string premise_failure;
  std::optional<Rational> direct_value;
  std::optional<Rational> two_step_value;
  std::optional<Vector> x_star;
  std::optional<Vector> y_star;
  bool x_star_feasible = false;
  bool values_equal = false;

  bool holds() const { return premise_ok && values_equal && x_star_feasible; }
};

/// Direct LP over x_set against the two-step route through y_set and L.
Theorem2Report verify_theorem2(const HPolyhedron& x_set, const HPolyhedron& y_set, const GraphL& l,
                               const Vector& alpha);

/// Instance satisfying every premise by construction: y_set is a random
/// bounded polytope, x_set its image under an invertible affine map M·y + m,
/// and L is x - M y = m.
struct BridgeInstance {
  HPolyhedron x_set;
  HPolyhedron y_set;
  GraphL graph;
  Vector alpha;
};

BridgeInstance random_bridge_instance(std::mt19937_64& rng, std::size_t dim);

} // namespace polyef
