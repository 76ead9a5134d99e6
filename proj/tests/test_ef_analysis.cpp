#include "doctest.h"

#include "polyef/errors.hpp"
#include "polyef/fixtures.hpp"
#include "polyef/projection.hpp"
#include "polyef/random_polytope.hpp"
#include "polyef/simplex.hpp"

using namespace polyef;

namespace {

HPolyhedron diagonal_unit() {
  HPolyhedron h(2);
  h.add_eq({1, -1}, 0).add_ge({0, 1}, 0).add_le({0, 1}, 1);
  return h;
}

VPolyhedron unit_segment() { return VPolyhedron(1, {{0}, {1}}); }

bool lifts_into_q(const Vector& x) {
  HPolyhedron q = fixtures::slab_q();
  for (std::size_t i = 0; i < 3; ++i) q.add_eq(unit_vector(4, i), x[i]);
  return feasible_point(q).has_value();
}

} // namespace

TEST_CASE("standard definition on the slab and segment") {
  auto v = is_ef_standard(fixtures::slab_q(), fixtures::segment_p_description(), fixtures::x_coordinates());
  CHECK(v.definition == EFDefinition::Standard);
  CHECK_FALSE(v.holds);
  REQUIRE(v.witness_point.has_value());
  CHECK(lifts_into_q(*v.witness_point));
  CHECK_FALSE(membership_h(*v.witness_point, fixtures::segment_p_description()));

  CHECK(is_ef_standard(diagonal_unit(), unit_segment(), {0}).holds);
  CHECK(is_ef_standard(fixtures::slab_q(), VPolyhedron::whole_space(3), fixtures::x_coordinates()).holds);
  CHECK_THROWS_AS(is_ef_standard(fixtures::slab_q(), unit_segment(), {0, 1}), DimensionError);
  CHECK_THROWS_AS(is_ef_standard(fixtures::slab_q(), unit_segment(), {7}), DimensionError);
}

TEST_CASE("membership definition on the slab and segment") {
  auto v = is_ef_exists(fixtures::slab_q(), fixtures::segment_p_vertices(), fixtures::x_coordinates());
  CHECK(v.definition == EFDefinition::FioriniExists);
  CHECK_FALSE(v.holds);
  REQUIRE(v.witness_point.has_value());
  CHECK(lifts_into_q(*v.witness_point) != membership_v(*v.witness_point, fixtures::segment_p_vertices()));

  CHECK(is_ef_exists(diagonal_unit(), unit_segment(), {0}).holds);
  CHECK(is_ef_exists(fixtures::slab_q(), VPolyhedron::whole_space(3), fixtures::x_coordinates()).holds);
}

TEST_CASE("membership definition finds non-liftable points of P") {
  // Q projects onto [0, 1] but P = [0, 2].
  auto v = is_ef_exists(diagonal_unit(), VPolyhedron(1, {{0}, {2}}), {0});
  CHECK_FALSE(v.holds);
  REQUIRE(v.witness_point.has_value());
  CHECK(*v.witness_point > Vector{1});
}

TEST_CASE("standard and membership verdicts agree") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t dim = 2 + trial % 3;
    auto q = random_polytope(rng, dim, 2 * dim + 2);
    std::vector<std::size_t> xs{0};
    auto proj = fourier_motzkin(q, xs);
    // once against the true projection, once against a shrunken one
    CHECK(is_ef_standard(q, proj, xs).holds == is_ef_exists(q, proj, xs).holds);
    CHECK(is_ef_standard(q, proj, xs).holds);
    HPolyhedron smaller = proj;
    smaller.add_le({1}, Rational(random_int(rng, 1, 3)));
    CHECK(is_ef_standard(q, smaller, xs).holds == is_ef_exists(q, smaller, xs).holds);
  }
}

TEST_CASE("image under a map") {
  auto pi = fixtures::slab_to_segment_map();
  auto qv = enumerate_generators(fixtures::slab_q());
  CHECK(canonicalize(image_under_map(pi, qv)) == fixtures::segment_p_vertices());
  CHECK(polyhedra_equal(image_under_map(LinearMap::identity(4), qv), qv));
  CHECK(canonicalize(image_under_map(LinearMap::zero(3, 4), qv)) == VPolyhedron(3, {{0, 0, 0}}));
  CHECK_THROWS_AS(image_under_map(LinearMap::identity(3), qv), DimensionError);

  // midpoint of two vertices maps to the midpoint of the images
  Vector a{1, 2, 3, 2}, b{-5, 0, 1, 3};
  Vector mid = scale(add(a, b), Rational(1, 2));
  CHECK(pi.apply(mid) == scale(add(pi.apply(a), pi.apply(b)), Rational(1, 2)));
}

TEST_CASE("map definition") {
  auto v = is_ef_linear_map(fixtures::slab_q(), fixtures::segment_p_vertices(), fixtures::slab_to_segment_map());
  CHECK(v.holds);
  REQUIRE(v.witness_map.has_value());
  CHECK(*v.witness_map == fixtures::slab_to_segment_map());

  CHECK_FALSE(is_ef_linear_map(fixtures::slab_q(), fixtures::segment_p_vertices(), LinearMap::zero(3, 4)).holds);

  LinearMap doubled(mat_scale(fixtures::slab_to_segment_map().matrix(), Rational(2)));
  auto img = canonicalize(image_under_map(doubled, enumerate_generators(fixtures::slab_q())));
  CHECK(img == VPolyhedron(3, {{16, 20, 12}, {24, 30, 18}}));
  CHECK_FALSE(is_ef_linear_map(fixtures::slab_q(), fixtures::segment_p_vertices(), doubled).holds);
}

TEST_CASE("fit_linear_map") {
  std::vector<std::pair<Vector, Vector>> pairs = {
      {{0, 0, 0, 2}, {8, 10, 6}},
      {{0, 0, 0, 3}, {12, 15, 9}},
      {{1, 0, 0, 0}, {0, 0, 0}},
      {{0, 1, 0, 0}, {0, 0, 0}},
      {{0, 0, 1, 0}, {0, 0, 0}},
  };
  auto m = fit_linear_map(pairs);
  REQUIRE(m.has_value());
  CHECK(*m == fixtures::slab_to_segment_map());
  for (const auto& [s, t] : pairs) CHECK(m->apply(s) == t);

  auto id = fit_linear_map({{{1, 0}, {1, 0}}, {{0, 1}, {0, 1}}});
  REQUIRE(id.has_value());
  CHECK(id->matrix() == RatMatrix::identity(2));

  CHECK_FALSE(fit_linear_map({{{1}, {1}}, {{2}, {3}}}).has_value());
  CHECK_THROWS_AS(fit_linear_map({}), ArgumentError);
}

TEST_CASE("degenerate formulations") {
  CHECK(is_degenerate_ef(fixtures::slab_q(), fixtures::x_coordinates()));
  CHECK_FALSE(is_degenerate_ef(diagonal_unit(), {0}));
  CHECK_FALSE(is_degenerate_ef(fixtures::degeneracy_control(), {0}));
  HPolyhedron empty(2);
  empty.add_le({0, 1}, 0).add_ge({0, 1}, 1);
  CHECK_THROWS_AS(is_degenerate_ef(empty, {0}), EmptyPolyhedronError);
}

TEST_CASE("inequality counts") {
  auto q = count_inequalities(fixtures::slab_q(), CountConvention::EqualityAsTwo);
  CHECK(q.total == 2);
  auto p2 = count_inequalities(fixtures::segment_p_description(), CountConvention::EqualityAsTwo);
  CHECK(p2.total == 10);
  auto ps = count_inequalities(fixtures::segment_p_description(), CountConvention::EqualitySeparate);
  CHECK(ps.inequalities == 8);
  CHECK(ps.equalities == 1);
  CHECK(count_inequalities(HPolyhedron(3), CountConvention::EqualityAsTwo).total == 0);
}

TEST_CASE("the three refutation facts hold together") {
  const auto q = fixtures::slab_q();
  const auto p = fixtures::segment_p_description();
  CHECK(is_ef_linear_map(q, p, fixtures::slab_to_segment_map()).holds);
  CHECK_FALSE(is_ef_standard(q, p, fixtures::x_coordinates()).holds);
  for (auto c : {CountConvention::EqualityAsTwo, CountConvention::EqualitySeparate})
    CHECK(count_inequalities(remove_redundancy(q), c).total < count_inequalities(p, c).total);
}
