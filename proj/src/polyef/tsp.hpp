#pragma once

#include "polyef/matrix.hpp"
#include "polyef/polyhedron.hpp"

#include <string>
#include <vector>

namespace polyef::tsp {

inline constexpr std::size_t kDefaultTourCap = 8;

/// Tour rooted at city 0: 0 -> order[0] -> ... -> order[n-2] -> 0.
class Tour {
public:
  /// Throws ArgumentError unless `order` is a permutation of {1, ..., n-1}.
  Tour(std::size_t n, std::vector<std::size_t> order);

  std::size_t cities() const { return n_; }
  const std::vector<std::size_t>& order() const { return order_; }

  /// "0 a1 ... a_{n-1} 0"
  std::string to_string() const;

  friend bool operator==(const Tour&, const Tour&) = default;
  friend auto operator<=>(const Tour& a, const Tour& b) { return a.order_ <=> b.order_; }

private:
  std::size_t n_;
  std::vector<std::size_t> order_;
};

/// w(i, s) for city i in {1..n-1} (row i-1) and visit time s in {1..n-1}
/// (column s-1).
struct AssignmentMatrix {
  std::size_t n = 0;
  RatMatrix w;

  /// Coordinates in AP order, index (i-1)(n-1) + (s-1).
  Vector to_point() const;
  static AssignmentMatrix from_point(std::size_t n, const Vector& point);

  friend bool operator==(const AssignmentMatrix&, const AssignmentMatrix&) = default;
};

/// 0/1 vector over the arcs (i, j), i != j, in lexicographic order.
struct TravelLegVector {
  std::size_t n = 0;
  Vector x;

  friend bool operator==(const TravelLegVector&, const TravelLegVector&) = default;
};

std::size_t ap_coordinate(std::size_t n, std::size_t city, std::size_t time);
std::size_t arc_index(std::size_t n, std::size_t from, std::size_t to);

AssignmentMatrix tour_to_assignment(const Tour& t);

/// Throws ArgumentError unless w is a 0/1 permutation matrix.
Tour assignment_to_tour(const AssignmentMatrix& w);

/// Rows: n-1 city equalities, n-1 time equalities, then (n-1)² nonnegativity
/// rows.
HPolyhedron build_ap_hrep(std::size_t n);

TravelLegVector tour_to_tl_vector(const Tour& t);

/// All (n-1)! tours in lexicographic order of their visit sequences.
std::vector<Tour> enumerate_tours(std::size_t n, std::size_t cap = kDefaultTourCap);

struct Theorem1Report {
  std::size_t n = 0;
  std::size_t vertex_count = 0;
  std::size_t expected_count = 0;
  bool bounded = false;
  bool all_integral = false;
  bool all_permutation = false;
  bool vertex_set_matches_tours = false;
  bool round_trips = false;
  bool travel_legs_distinct = false;

  bool holds() const {
    return vertex_count == expected_count && bounded && all_integral && all_permutation && vertex_set_matches_tours &&
           round_trips && travel_legs_distinct;
  }
};

/// Enumerates the vertices of AP for n cities and checks them against the
/// tours one by one.
Theorem1Report verify_theorem1(std::size_t n, std::size_t cap = kDefaultTourCap);

/// Times-of-visit matrix when every one of the n cities gets a visit time and
/// an extra dummy city plays the root. `sequence` lists all n cities.
AssignmentMatrix dummy_extended_assignment(std::size_t n, const std::vector<std::size_t>& sequence);

/// The Hamiltonian cycle a dummy-rooted assignment induces on the n real
/// cities once the dummy is removed and the path is closed.
TravelLegVector cycle_from_dummy_assignment(const AssignmentMatrix& w);

} // namespace polyef::tsp
