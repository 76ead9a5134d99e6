#include "doctest.h"

#include "polyef/errors.hpp"
#include "polyef/tsp.hpp"

#include <map>
#include <set>

using namespace polyef;
using namespace polyef::tsp;

namespace {

// Entry w(i, s) with 1-based city and time.
Rational w_at(const AssignmentMatrix& a, std::size_t city, std::size_t time) { return a.w(city - 1, time - 1); }

std::size_t ones(const AssignmentMatrix& a) {
  std::size_t k = 0;
  for (std::size_t i = 0; i < a.w.rows(); ++i)
    for (std::size_t j = 0; j < a.w.cols(); ++j)
      if (a.w(i, j) == 1) ++k;
  return k;
}

std::vector<std::pair<std::size_t, std::size_t>> arcs_of(const TravelLegVector& v) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < v.n; ++i)
    for (std::size_t j = 0; j < v.n; ++j)
      if (i != j && v.x[arc_index(v.n, i, j)] == 1) out.emplace_back(i, j);
  return out;
}

using Arcs = std::vector<std::pair<std::size_t, std::size_t>>;

} // namespace

TEST_CASE("tour to assignment") {
  auto a = tour_to_assignment(Tour(4, {2, 1, 3}));
  CHECK(w_at(a, 2, 1) == 1);
  CHECK(w_at(a, 1, 2) == 1);
  CHECK(w_at(a, 3, 3) == 1);
  CHECK(ones(a) == 3);

  auto b = tour_to_assignment(Tour(2, {1}));
  CHECK(b.w == RatMatrix::identity(1));

  auto c = tour_to_assignment(Tour(3, {2, 1}));
  CHECK(c.w == RatMatrix::from_rows({{0, 1}, {1, 0}}, 2));
}

TEST_CASE("assignment to tour inverts the construction") {
  for (auto t : {Tour(4, {2, 1, 3}), Tour(2, {1}), Tour(3, {2, 1})}) CHECK(assignment_to_tour(tour_to_assignment(t)) == t);

  AssignmentMatrix half{3, RatMatrix::from_rows({{Rational(1, 2), Rational(1, 2)}, {Rational(1, 2), Rational(1, 2)}}, 2)};
  CHECK_THROWS_AS(assignment_to_tour(half), ArgumentError);
  AssignmentMatrix twice{3, RatMatrix::from_rows({{1, 0}, {1, 0}}, 2)};
  CHECK_THROWS_AS(assignment_to_tour(twice), ArgumentError);
}

TEST_CASE("invalid tours are rejected") {
  CHECK_THROWS_AS(Tour(4, {1, 1, 3}), ArgumentError);
  CHECK_THROWS_AS(Tour(4, {0, 1, 2}), ArgumentError);
  CHECK_THROWS_AS(Tour(4, {1, 2}), ArgumentError);
  CHECK_THROWS_AS(Tour(1, {}), ArgumentError);
  CHECK(Tour(4, {2, 1, 3}).to_string() == "0 2 1 3 0");
}

TEST_CASE("AP row counts") {
  auto h3 = build_ap_hrep(3);
  CHECK(h3.dim() == 4);
  CHECK(h3.equality_count() == 4);
  CHECK(h3.inequality_count() == 4);

  auto h2 = build_ap_hrep(2);
  CHECK(h2.dim() == 1);
  CHECK(h2.equality_count() == 2);
  CHECK(h2.inequality_count() == 1);
  CHECK(enumerate_generators(h2) == VPolyhedron(1, {{1}}));

  auto h5 = build_ap_hrep(5);
  CHECK(h5.dim() == 16);
  CHECK(h5.equality_count() == 8);
  CHECK(h5.inequality_count() == 16);
  CHECK_THROWS_AS(build_ap_hrep(1), ArgumentError);
}

TEST_CASE("coordinate and arc indexing") {
  CHECK(ap_coordinate(4, 1, 1) == 0);
  CHECK(ap_coordinate(4, 2, 3) == 5);
  CHECK(ap_coordinate(4, 3, 3) == 8);
  CHECK(arc_index(3, 0, 1) == 0);
  CHECK(arc_index(3, 0, 2) == 1);
  CHECK(arc_index(3, 1, 0) == 2);
  CHECK(arc_index(3, 2, 1) == 5);
  CHECK_THROWS_AS(arc_index(3, 1, 1), ArgumentError);
}

TEST_CASE("travel-leg vectors") {
  CHECK(arcs_of(tour_to_tl_vector(Tour(3, {1, 2}))) == Arcs{{0, 1}, {1, 2}, {2, 0}});
  CHECK(arcs_of(tour_to_tl_vector(Tour(3, {2, 1}))) == Arcs{{0, 2}, {1, 0}, {2, 1}});
  auto v = tour_to_tl_vector(Tour(4, {2, 1, 3}));
  CHECK(v.x.size() == 12);
  CHECK(arcs_of(v) == Arcs{{0, 2}, {1, 3}, {2, 1}, {3, 0}});
}

TEST_CASE("tour enumeration") {
  CHECK(enumerate_tours(3).size() == 2);
  CHECK(enumerate_tours(4).size() == 6);
  CHECK(enumerate_tours(5).size() == 24);
  auto t4 = enumerate_tours(4);
  CHECK(std::is_sorted(t4.begin(), t4.end()));
  CHECK(t4.front().to_string() == "0 1 2 3 0");
  CHECK_THROWS_AS(enumerate_tours(9), ArgumentError);
  CHECK(enumerate_tours(9, 9).size() == 40320);
}

TEST_CASE("round trips and distinct travel legs up to seven cities") {
  for (std::size_t n = 2; n <= 7; ++n) {
    std::set<Vector> legs;
    auto tours = enumerate_tours(n);
    for (const auto& t : tours) {
      CHECK(assignment_to_tour(tour_to_assignment(t)) == t);
      legs.insert(tour_to_tl_vector(t).x);
    }
    CHECK(legs.size() == tours.size());
  }
}

TEST_CASE("AP vertices are the tours") {
  for (std::size_t n : {3, 4, 5, 6}) {
    auto r = verify_theorem1(n);
    CHECK(r.holds());
    CHECK(r.vertex_count == r.expected_count);
  }
  CHECK(verify_theorem1(4).vertex_count == 6);
  CHECK(verify_theorem1(6).vertex_count == 120);
}

TEST_CASE("a six-city tour") {
  Tour t(6, {3, 5, 1, 4, 2});
  auto a = tour_to_assignment(t);
  CHECK(w_at(a, 3, 1) == 1);
  CHECK(w_at(a, 2, 5) == 1);
  CHECK(assignment_to_tour(a) == t);
  CHECK(arcs_of(tour_to_tl_vector(t)).size() == 6);
}

TEST_CASE("a dummy root does not make AP vertices correspond to tours") {
  // All n! dummy-rooted assignments for n = 4; group them by the cycle they
  // induce on the real cities.
  const std::size_t n = 4;
  std::vector<std::size_t> seq{0, 1, 2, 3};
  std::map<Vector, std::vector<std::vector<std::size_t>>> by_cycle;
  do {
    by_cycle[cycle_from_dummy_assignment(dummy_extended_assignment(n, seq)).x].push_back(seq);
  } while (std::next_permutation(seq.begin(), seq.end()));

  CHECK(by_cycle.size() == 6);
  bool found_pair = false;
  for (const auto& [cycle, seqs] : by_cycle) {
    if (seqs.size() < 2) continue;
    found_pair = true;
    auto a = dummy_extended_assignment(n, seqs[0]);
    auto b = dummy_extended_assignment(n, seqs[1]);
    CHECK_FALSE(a == b);
    // the cities at the first and last times differ between the two
    CHECK(seqs[0].front() != seqs[1].front());
  }
  CHECK(found_pair);

  auto r1 = cycle_from_dummy_assignment(dummy_extended_assignment(n, {0, 1, 2, 3}));
  auto r2 = cycle_from_dummy_assignment(dummy_extended_assignment(n, {1, 2, 3, 0}));
  CHECK(r1 == r2);
  CHECK_THROWS_AS(dummy_extended_assignment(n, {0, 1, 1, 3}), ArgumentError);
}
