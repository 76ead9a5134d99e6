#include "polyef/tsp.hpp"

#include "polyef/errors.hpp"

#include <algorithm>
#include <set>

namespace polyef::tsp {

namespace {

bool is_permutation_of_range(const std::vector<std::size_t>& seq, std::size_t lo, std::size_t hi) {
  std::vector<bool> seen(hi + 1, false);
  for (auto c : seq) {
    if (c < lo || c > hi || seen[c]) return false;
    seen[c] = true;
  }
  return seq.size() == hi + 1 - lo;
}

// Visit sequence encoded by a 0/1 permutation matrix: entry s is the row
// index holding the 1 in column s.
std::vector<std::size_t> read_permutation(const RatMatrix& w) {
  const std::size_t m = w.rows();
  if (w.cols() != m) throw ArgumentError("assignment matrix is not square");
  std::vector<std::size_t> seq(m);
  for (std::size_t s = 0; s < m; ++s) {
    std::size_t ones = 0;
    for (std::size_t i = 0; i < m; ++i) {
      const Rational& x = w(i, s);
      if (x == Rational(1)) {
        seq[s] = i;
        ++ones;
      } else if (!x.is_zero()) {
        throw ArgumentError("assignment matrix entry (" + std::to_string(i) + "," + std::to_string(s) +
                            ") is " + x.to_string() + ", not 0/1");
      }
    }
    if (ones != 1) throw ArgumentError("time column " + std::to_string(s + 1) + " does not sum to 1");
  }
  for (std::size_t i = 0; i < m; ++i) {
    Rational sum;
    for (std::size_t s = 0; s < m; ++s) sum += w(i, s);
    if (sum != Rational(1)) throw ArgumentError("city row " + std::to_string(i + 1) + " does not sum to 1");
  }
  return seq;
}

} // namespace

Tour::Tour(std::size_t n, std::vector<std::size_t> order) : n_(n), order_(std::move(order)) {
  if (n_ < 2) throw ArgumentError("a tour needs at least 2 cities");
  if (!is_permutation_of_range(order_, 1, n_ - 1))
    throw ArgumentError("tour order must be a permutation of 1.." + std::to_string(n_ - 1));
}

std::string Tour::to_string() const {
  std::string s = "0";
  for (auto c : order_) s += " " + std::to_string(c);
  return s + " 0";
}

Vector AssignmentMatrix::to_point() const {
  const std::size_t m = n - 1;
  Vector p(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t s = 0; s < m; ++s) p[i * m + s] = w(i, s);
  return p;
}

AssignmentMatrix AssignmentMatrix::from_point(std::size_t n, const Vector& point) {
  const std::size_t m = n - 1;
  if (n < 2 || point.size() != m * m) throw DimensionError("assignment point has the wrong length");
  AssignmentMatrix a{n, RatMatrix(m, m)};
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t s = 0; s < m; ++s) a.w(i, s) = point[i * m + s];
  return a;
}

std::size_t ap_coordinate(std::size_t n, std::size_t city, std::size_t time) {
  if (city < 1 || city >= n || time < 1 || time >= n) throw ArgumentError("ap_coordinate: index out of range");
  return (city - 1) * (n - 1) + (time - 1);
}

std::size_t arc_index(std::size_t n, std::size_t from, std::size_t to) {
  if (from >= n || to >= n || from == to) throw ArgumentError("arc_index: invalid arc");
  return from * (n - 1) + (to < from ? to : to - 1);
}

AssignmentMatrix tour_to_assignment(const Tour& t) {
  const std::size_t m = t.cities() - 1;
  AssignmentMatrix a{t.cities(), RatMatrix(m, m)};
  for (std::size_t s = 0; s < m; ++s) a.w(t.order()[s] - 1, s) = 1;
  return a;
}

Tour assignment_to_tour(const AssignmentMatrix& w) {
  if (w.n < 2 || w.w.rows() != w.n - 1) throw ArgumentError("assignment matrix shape does not match n");
  auto seq = read_permutation(w.w);
  for (auto& c : seq) ++c;
  return Tour(w.n, std::move(seq));
}

HPolyhedron build_ap_hrep(std::size_t n) {
  if (n < 2) throw ArgumentError("AP needs n >= 2, got " + std::to_string(n));
  const std::size_t m = n - 1;
  HPolyhedron h(m * m);
  for (std::size_t i = 1; i <= m; ++i) {
    Vector row(m * m);
    for (std::size_t s = 1; s <= m; ++s) row[ap_coordinate(n, i, s)] = 1;
    h.add_eq(std::move(row), Rational(1));
  }
  for (std::size_t s = 1; s <= m; ++s) {
    Vector row(m * m);
    for (std::size_t i = 1; i <= m; ++i) row[ap_coordinate(n, i, s)] = 1;
    h.add_eq(std::move(row), Rational(1));
  }
  for (std::size_t k = 0; k < m * m; ++k) h.add_ge(unit_vector(m * m, k), Rational(0));
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t s = 1; s <= m; ++s) names.push_back("w_" + std::to_string(i) + "_" + std::to_string(s));
  h.set_coord_names(std::move(names));
  return h;
}

TravelLegVector tour_to_tl_vector(const Tour& t) {
  const std::size_t n = t.cities();
  TravelLegVector v{n, Vector(n * (n - 1))};
  std::size_t prev = 0;
  for (auto c : t.order()) {
    v.x[arc_index(n, prev, c)] = 1;
    prev = c;
  }
  v.x[arc_index(n, prev, 0)] = 1;
  return v;
}

std::vector<Tour> enumerate_tours(std::size_t n, std::size_t cap) {
  if (n < 2) throw ArgumentError("enumerate_tours: need n >= 2, got " + std::to_string(n));
  if (n > cap) throw ArgumentError("enumerate_tours: n = " + std::to_string(n) + " exceeds the cap " + std::to_string(cap));
  std::vector<std::size_t> seq(n - 1);
  for (std::size_t i = 0; i < seq.size(); ++i) seq[i] = i + 1;
  std::vector<Tour> tours;
  do {
    tours.emplace_back(n, seq);
  } while (std::next_permutation(seq.begin(), seq.end()));
  return tours;
}

Theorem1Report verify_theorem1(std::size_t n, std::size_t cap) {
  Theorem1Report rep;
  rep.n = n;
  auto tours = enumerate_tours(n, cap);
  rep.expected_count = tours.size();

  VPolyhedron v = enumerate_generators(build_ap_hrep(n));
  rep.vertex_count = v.vertices().size();
  rep.bounded = v.is_bounded();

  rep.all_integral = std::all_of(v.vertices().begin(), v.vertices().end(), [](const Vector& p) {
    return std::all_of(p.begin(), p.end(), [](const Rational& x) { return x.is_integer(); });
  });

  rep.all_permutation = true;
  rep.round_trips = true;
  for (const auto& p : v.vertices()) {
    auto w = AssignmentMatrix::from_point(n, p);
    try {
      Tour t = assignment_to_tour(w);
      if (!(tour_to_assignment(t) == w)) rep.round_trips = false;
    } catch (const ArgumentError&) {
      rep.all_permutation = false;
      rep.round_trips = false;
    }
  }

  std::vector<Vector> from_tours;
  std::set<Vector> legs;
  for (const auto& t : tours) {
    auto w = tour_to_assignment(t);
    if (!(assignment_to_tour(w) == t)) rep.round_trips = false;
    from_tours.push_back(w.to_point());
    legs.insert(tour_to_tl_vector(t).x);
  }
  std::sort(from_tours.begin(), from_tours.end());
  rep.vertex_set_matches_tours = from_tours == v.vertices();
  rep.travel_legs_distinct = legs.size() == tours.size();
  return rep;
}

AssignmentMatrix dummy_extended_assignment(std::size_t n, const std::vector<std::size_t>& sequence) {
  if (!is_permutation_of_range(sequence, 0, n - 1))
    throw ArgumentError("dummy-extended sequence must be a permutation of 0.." + std::to_string(n - 1));
  AssignmentMatrix a{n + 1, RatMatrix(n, n)};
  for (std::size_t s = 0; s < n; ++s) a.w(sequence[s], s) = 1;
  return a;
}

TravelLegVector cycle_from_dummy_assignment(const AssignmentMatrix& w) {
  const std::size_t n = w.n - 1; // real cities
  auto seq = read_permutation(w.w);
  TravelLegVector v{n, Vector(n * (n - 1))};
  for (std::size_t s = 0; s < n; ++s) v.x[arc_index(n, seq[s], seq[(s + 1) % n])] = 1;
  return v;
}

} // namespace polyef::tsp
