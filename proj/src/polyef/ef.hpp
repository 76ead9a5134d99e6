#pragma once

#include "polyef/matrix.hpp"
#include "polyef/polyhedron.hpp"

#include <optional>
#include <string>
#include <vector>

namespace polyef {

/// x ↦ matrix·x (+ offset). The offset is absent for a purely linear map.
class LinearMap {
public:
  LinearMap() = default;
  explicit LinearMap(RatMatrix matrix, std::optional<Vector> offset = std::nullopt);

  static LinearMap zero(std::size_t target, std::size_t source) { return LinearMap(RatMatrix(target, source)); }
  static LinearMap identity(std::size_t n) { return LinearMap(RatMatrix::identity(n)); }

  std::size_t target_dim() const { return matrix_.rows(); }
  std::size_t source_dim() const { return matrix_.cols(); }
  const RatMatrix& matrix() const { return matrix_; }
  const std::optional<Vector>& offset() const { return offset_; }
  bool is_linear() const { return !offset_ || is_zero(*offset_); }

  Vector apply(const Vector& x) const;
  /// Image of a direction: the linear part only.
  Vector apply_linear(const Vector& d) const { return matrix_.apply(d); }

  friend bool operator==(const LinearMap&, const LinearMap&) = default;

private:
  RatMatrix matrix_;
  std::optional<Vector> offset_;
};

enum class EFDefinition {
  Standard,      // projection onto x-space equals P
  FioriniMap,    // P is the image of Q under a linear map
  FioriniExists, // x in P iff some y lifts (x, y) into Q
};

std::string to_string(EFDefinition d);

struct EFVerdict {
  EFDefinition definition = EFDefinition::Standard;
  bool holds = false;
  /// Point in exactly one of the two compared sets (failed biconditional).
  std::optional<Vector> witness_point;
  /// Which side the witness lies on, e.g. "projection \\ P".
  std::string witness_side;
  /// The map that certifies a Definition-by-image verdict.
  std::optional<LinearMap> witness_map;
};

/// Standard definition: fourier_motzkin(q, x_coords) equals p.
EFVerdict is_ef_standard(const HPolyhedron& q, const AnyPolyhedron& p, const std::vector<std::size_t>& x_coords);

/// Membership biconditional, checked without projecting: every generator of p
/// lifts into q (LP), and no facet of p is violated by a point of q (LP).
EFVerdict is_ef_exists(const HPolyhedron& q, const AnyPolyhedron& p, const std::vector<std::size_t>& x_coords);

/// Generator-wise image. Directions mapped to zero are dropped.
VPolyhedron image_under_map(const LinearMap& map, const VPolyhedron& q);

EFVerdict is_ef_linear_map(const AnyPolyhedron& q, const AnyPolyhedron& p, const LinearMap& map);

/// Linear map M with M·source = target for every pair, or nullopt when no
/// such map exists. Underdetermined entries are set to zero.
std::optional<LinearMap> fit_linear_map(const std::vector<std::pair<Vector, Vector>>& pairs);

/// True when the irredundant form of q has zero coefficients on every x
/// coordinate.
bool is_degenerate_ef(const HPolyhedron& q, const std::vector<std::size_t>& x_coords);

enum class CountConvention { EqualityAsTwo, EqualitySeparate };

struct InequalityCount {
  std::size_t inequalities = 0;
  std::size_t equalities = 0;
  /// Under EqualityAsTwo: inequalities + 2·equalities. Under EqualitySeparate:
  /// just the inequalities.
  std::size_t total = 0;
};

InequalityCount count_inequalities(const HPolyhedron& h, CountConvention convention);

} // namespace polyef
