#include "polyef/fixtures.hpp"

namespace polyef::fixtures {

namespace {
Vector ints(std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}
} // namespace

VPolyhedron segment_p_vertices() { return VPolyhedron(3, {ints({8, 10, 6}), ints({12, 15, 9})}); }

HPolyhedron segment_p_description() {
  HPolyhedron p(3);
  p.add_le(ints({-5, 4, 0}), 0);
  p.add_eq(ints({0, 3, -5}), 0);
  p.add_le(ints({3, 0, -4}), 0);
  p.add_ge(ints({1, 0, 0}), 8);
  p.add_le(ints({1, 0, 0}), 12);
  p.add_ge(ints({0, 1, 0}), 10);
  p.add_le(ints({0, 1, 0}), 15);
  p.add_ge(ints({0, 0, 1}), 6);
  p.add_le(ints({0, 0, 1}), 9);
  p.set_coord_names({"x1", "x2", "x3"});
  return p;
}

Row segment_p_equality() { return {ints({0, 3, -5}), Relation::Equal, Rational(0)}; }

HPolyhedron slab_q() {
  HPolyhedron q(4);
  q.add_ge(ints({0, 0, 0, 1}), 2);
  q.add_le(ints({0, 0, 0, 1}), 3);
  q.set_coord_names({"x1", "x2", "x3", "y"});
  return q;
}

LinearMap slab_to_segment_map() {
  return LinearMap(RatMatrix::from_rows({ints({0, 0, 0, 4}), ints({0, 0, 0, 5}), ints({0, 0, 0, 3})}, 4));
}

Vector membership_witness() { return {Rational(45, 2), Rational(-50), Rational(100)}; }

std::vector<std::size_t> x_coordinates() { return {0, 1, 2}; }

HPolyhedron degeneracy_control() {
  HPolyhedron h(2);
  h.add_le(ints({1, 0}), 5);
  h.add_le(ints({1, 0}), 7);
  h.add_ge(ints({0, 1}), 2);
  h.add_le(ints({0, 1}), 3);
  return h;
}

} // namespace polyef::fixtures
