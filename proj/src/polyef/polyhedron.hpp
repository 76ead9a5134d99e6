#pragma once

#include "polyef/matrix.hpp"
#include "polyef/rational.hpp"

#include <string>
#include <variant>
#include <vector>

namespace polyef {

enum class Relation { LessEqual, Equal };

/// One linear constraint `coeffs · x (<= | =) rhs`.
struct Row {
  Vector coeffs;
  Relation rel = Relation::LessEqual;
  Rational rhs;

  bool satisfied_by(const Vector& x) const;
  friend bool operator==(const Row&, const Row&) = default;
};

/// Outer description: a finite system of equalities and inequalities. No rows
/// means the whole space.
class HPolyhedron {
public:
  explicit HPolyhedron(std::size_t dim = 0) : dim_(dim) {}
  HPolyhedron(std::size_t dim, std::vector<Row> rows);

  std::size_t dim() const { return dim_; }
  const std::vector<Row>& rows() const { return rows_; }

  HPolyhedron& add_row(Row row);
  HPolyhedron& add_le(Vector coeffs, Rational rhs);
  HPolyhedron& add_ge(const Vector& coeffs, const Rational& rhs);
  HPolyhedron& add_eq(Vector coeffs, Rational rhs);

  const std::vector<std::string>& coord_names() const { return names_; }
  HPolyhedron& set_coord_names(std::vector<std::string> names);

  std::size_t inequality_count() const;
  std::size_t equality_count() const;

  friend bool operator==(const HPolyhedron& a, const HPolyhedron& b) {
    return a.dim_ == b.dim_ && a.rows_ == b.rows_;
  }

private:
  std::size_t dim_;
  std::vector<Row> rows_;
  std::vector<std::string> names_;
};

/// Inner description: conv(vertices) + cone(rays) + span(lineality). An empty
/// vertex list is the empty set.
class VPolyhedron {
public:
  explicit VPolyhedron(std::size_t dim = 0) : dim_(dim) {}
  VPolyhedron(std::size_t dim, std::vector<Vector> vertices, std::vector<Vector> rays = {},
              std::vector<Vector> lineality = {});

  static VPolyhedron empty_set(std::size_t dim) { return VPolyhedron(dim); }
  static VPolyhedron whole_space(std::size_t dim);

  std::size_t dim() const { return dim_; }
  bool is_empty() const { return vertices_.empty(); }
  bool is_bounded() const { return rays_.empty() && lineality_.empty(); }

  const std::vector<Vector>& vertices() const { return vertices_; }
  const std::vector<Vector>& rays() const { return rays_; }
  const std::vector<Vector>& lineality() const { return lineality_; }

  friend bool operator==(const VPolyhedron&, const VPolyhedron&) = default;

private:
  std::size_t dim_;
  std::vector<Vector> vertices_;
  std::vector<Vector> rays_;
  std::vector<Vector> lineality_;
};

using AnyPolyhedron = std::variant<HPolyhedron, VPolyhedron>;

std::size_t dim_of(const AnyPolyhedron& p);

bool membership_h(const Vector& point, const HPolyhedron& h);
bool membership_v(const Vector& point, const VPolyhedron& v);

/// Is `dir` in the recession cone, i.e. x + t·dir stays inside for t >= 0?
bool in_recession_cone(const Vector& dir, const HPolyhedron& h);
bool in_recession_cone(const Vector& dir, const VPolyhedron& v);

/// H -> V by double description. Equalities are eliminated by null-space
/// substitution first; the output is canonical.
VPolyhedron enumerate_generators(const HPolyhedron& h);

/// V -> H through the polar cone. Returns the facet inequalities together with
/// a basis of the affine hull equalities.
HPolyhedron enumerate_facets(const VPolyhedron& v);

/// Minimal generator set: lineality in reduced echelon form, rays primitive
/// and reduced modulo the lineality space, vertices reduced the same way,
/// every redundant generator removed, each list sorted lexicographically.
VPolyhedron canonicalize(const VPolyhedron& v);

/// Drops rows implied by the rest (each drop certified by an LP) and turns
/// implied equalities into `=` rows. Throws EmptyPolyhedronError on an empty
/// input.
HPolyhedron remove_redundancy(const HPolyhedron& h);

bool is_subset(const AnyPolyhedron& a, const AnyPolyhedron& b);
bool polyhedra_equal(const AnyPolyhedron& a, const AnyPolyhedron& b);

/// Independent equalities satisfied by every point of a nonempty V-polyhedron.
std::vector<Row> affine_hull(const VPolyhedron& v);

VPolyhedron to_v(const AnyPolyhedron& p);
HPolyhedron to_h(const AnyPolyhedron& p);

} // namespace polyef
