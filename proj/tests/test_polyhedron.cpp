#include "doctest.h"

#include "oracles.hpp"

#include "polyef/errors.hpp"
#include "polyef/fixtures.hpp"
#include "polyef/projection.hpp"
#include "polyef/random_polytope.hpp"
#include "polyef/simplex.hpp"
#include "polyef/tsp.hpp"

using namespace polyef;

namespace {

HPolyhedron unit_square() {
  HPolyhedron h(2);
  h.add_ge({1, 0}, 0).add_le({1, 0}, 1).add_ge({0, 1}, 0).add_le({0, 1}, 1);
  return h;
}

std::vector<Row> drop(const std::vector<Row>& rows, std::size_t k) {
  std::vector<Row> out;
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (i != k) out.push_back(rows[i]);
  return out;
}

} // namespace

TEST_CASE("membership in H form") {
  const auto p = fixtures::segment_p_description();
  CHECK(membership_h({8, 10, 6}, p));
  CHECK_FALSE(membership_h(fixtures::membership_witness(), p));
  CHECK(membership_h({0, 0, 0, 2}, fixtures::slab_q()));
  CHECK_THROWS_AS(membership_h({1, 2}, p), DimensionError);
}

TEST_CASE("membership in V form") {
  const auto p = fixtures::segment_p_vertices();
  CHECK(membership_v({10, Rational(25, 2), Rational(15, 2)}, p));
  CHECK(membership_v({8, 10, 6}, p));
  CHECK_FALSE(membership_v({8, 10, 7}, p));
  CHECK_FALSE(membership_v({16, 20, 12}, p));
  CHECK(membership_v({5, -3}, VPolyhedron::whole_space(2)));
  CHECK_FALSE(membership_v({0}, VPolyhedron::empty_set(1)));
}

TEST_CASE("generators of the unit square") {
  auto v = enumerate_generators(unit_square());
  CHECK(v.vertices() == std::vector<Vector>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  CHECK(v.rays().empty());
  CHECK(v.lineality().empty());
}

TEST_CASE("generators of the slab Q") {
  auto v = enumerate_generators(fixtures::slab_q());
  CHECK(v.vertices() == std::vector<Vector>{{0, 0, 0, 2}, {0, 0, 0, 3}});
  CHECK(v.rays().empty());
  REQUIRE(v.lineality().size() == 3);
  CHECK(polyhedra_equal(v, fixtures::slab_q()));
  std::vector<Vector> lin = v.lineality();
  std::sort(lin.begin(), lin.end());
  CHECK(lin == std::vector<Vector>{{0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}});
}

TEST_CASE("generators of AP for three cities") {
  auto v = enumerate_generators(tsp::build_ap_hrep(3));
  CHECK(v.vertices() == std::vector<Vector>{{0, 1, 1, 0}, {1, 0, 0, 1}});
}

TEST_CASE("generators of unbounded and empty sets") {
  HPolyhedron quadrant(2);
  quadrant.add_ge({1, 0}, 1).add_ge({0, 1}, 2);
  auto v = enumerate_generators(quadrant);
  CHECK(v.vertices() == std::vector<Vector>{{1, 2}});
  CHECK(v.rays() == std::vector<Vector>{{0, 1}, {1, 0}});

  HPolyhedron halfplane(2);
  halfplane.add_le({1, 1}, 3);
  auto hv = enumerate_generators(halfplane);
  CHECK(hv.rays().size() == 1);
  CHECK(hv.lineality().size() == 1);
  CHECK(polyhedra_equal(hv, halfplane));

  HPolyhedron empty(1);
  empty.add_le({1}, 0).add_ge({1}, 1);
  CHECK(enumerate_generators(empty).is_empty());

  auto all = enumerate_generators(HPolyhedron(3));
  CHECK(all.vertices() == std::vector<Vector>{Vector(3)});
  CHECK(all.rays().empty());
  CHECK(all.lineality().size() == 3);
  CHECK(polyhedra_equal(all, VPolyhedron::whole_space(3)));
}

TEST_CASE("remove_redundancy") {
  HPolyhedron h(1);
  h.add_ge({1}, 2).add_le({1}, 3).add_le({1}, 5);
  auto r = remove_redundancy(h);
  CHECK(r.rows().size() == 2);
  CHECK(polyhedra_equal(r, h));

  CHECK(remove_redundancy(fixtures::slab_q()).rows() == fixtures::slab_q().rows());

  HPolyhedron dup(1);
  dup.add_le({1}, 1).add_le({1}, 1);
  CHECK(remove_redundancy(dup).rows().size() == 1);

  HPolyhedron squeezed(2);
  squeezed.add_le({1, 0}, 1).add_ge({1, 0}, 1).add_ge({0, 1}, 0).add_le({0, 1}, 2);
  auto s = remove_redundancy(squeezed);
  CHECK(s.equality_count() == 1);
  CHECK(s.inequality_count() == 2);

  HPolyhedron empty(1);
  empty.add_le({1}, 0).add_ge({1}, 1);
  CHECK_THROWS_AS(remove_redundancy(empty), EmptyPolyhedronError);
}

TEST_CASE("polyhedra_equal across representations") {
  auto image = fixtures::segment_p_vertices();
  CHECK(polyhedra_equal(image, fixtures::segment_p_description()));
  CHECK(polyhedra_equal(fixtures::segment_p_description(), image));
  CHECK_FALSE(polyhedra_equal(VPolyhedron::whole_space(3), image));
  CHECK_FALSE(polyhedra_equal(fourier_motzkin(fixtures::slab_q(), {0, 1, 2}), fixtures::segment_p_description()));
  CHECK(polyhedra_equal(VPolyhedron::empty_set(2), VPolyhedron::empty_set(2)));
  CHECK_THROWS_AS(polyhedra_equal(image, unit_square()), DimensionError);
}

TEST_CASE("affine hull") {
  auto hull = affine_hull(fixtures::segment_p_vertices());
  REQUIRE(hull.size() == 2);
  RatMatrix normals = RatMatrix::from_rows({hull[0].coeffs, hull[1].coeffs}, 3);
  CHECK(rank(normals) == 2);
  for (const auto& r : hull) {
    CHECK(r.rel == Relation::Equal);
    CHECK(r.satisfied_by({8, 10, 6}));
    CHECK(r.satisfied_by({12, 15, 9}));
  }
  CHECK(affine_hull(enumerate_generators(unit_square())).empty());
  auto point = affine_hull(VPolyhedron(2, {{1, 2}}));
  CHECK(point.size() == 2);
  CHECK(point[0].satisfied_by({1, 2}));
  CHECK(point[1].satisfied_by({1, 2}));
  CHECK_THROWS_AS(affine_hull(VPolyhedron::empty_set(2)), EmptyPolyhedronError);
}

TEST_CASE("facets of a V-polytope") {
  auto h = enumerate_facets(VPolyhedron(2, {{0, 0}, {2, 0}, {0, 2}}));
  CHECK(h.rows().size() == 3);
  CHECK(polyhedra_equal(h, VPolyhedron(2, {{0, 0}, {2, 0}, {0, 2}})));
  auto seg = enumerate_facets(fixtures::segment_p_vertices());
  CHECK(seg.equality_count() == 2);
  CHECK(seg.inequality_count() == 2);
}

TEST_CASE("random polytopes agree with the brute-force oracle") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t dim = 1 + trial % 4;
    auto h = random_polytope(rng, dim, 2 * dim + 3);
    auto v = enumerate_generators(h);
    CHECK(v.vertices() == oracle::brute_force_vertices(h));
    CHECK(polyhedra_equal(v, h));

    // each vertex has dim independent active rows
    for (const auto& x : v.vertices()) {
      std::vector<Vector> active;
      for (const auto& r : h.rows())
        if (dot(r.coeffs, x) == r.rhs) active.push_back(r.coeffs);
      CHECK(rank(RatMatrix::from_rows(active, dim)) == dim);
    }

    // V and H membership agree on sampled points
    for (int k = 0; k < 100; ++k) {
      Vector pt(dim);
      for (auto& c : pt) c = Rational(random_int(rng, -2, 14), 2);
      CHECK(membership_h(pt, h) == membership_v(pt, v));
    }

    // irredundant: dropping any row enlarges the set
    auto r = remove_redundancy(h);
    CHECK(polyhedra_equal(r, h));
    for (std::size_t k = 0; k < r.rows().size(); ++k)
      CHECK_FALSE(is_subset(HPolyhedron(dim, drop(r.rows(), k)), r));
  }
}
