// Acceptance suite: one PASS/FAIL line per criterion, exit 0 iff all pass.

#include "oracles.hpp"

#include "polyef/bridge.hpp"
#include "polyef/ef.hpp"
#include "polyef/fixtures.hpp"
#include "polyef/projection.hpp"
#include "polyef/random_polytope.hpp"
#include "polyef/simplex.hpp"
#include "polyef/tsp.hpp"
#include "polyef/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

using namespace polyef;

namespace {

struct Outcome {
  bool ok;
  std::string note;
};

bool check_holds(const std::string& id, std::uint64_t seed = 42) {
  VerifyOptions o;
  o.seed = seed;
  o.only = {id};
  auto r = run_verify_paper(o);
  return r.checks.size() == 1 && r.checks[0].holds;
}

Outcome ac1() {
  const std::size_t expected[] = {2, 6, 24, 120};
  for (std::size_t n = 3; n <= 6; ++n) {
    auto r = tsp::verify_theorem1(n);
    if (!r.holds() || r.vertex_count != expected[n - 3]) return {false, "n = " + std::to_string(n)};
  }
  return {check_holds("THM1-n6"), "2, 6, 24, 120 vertices"};
}

Outcome ac2() {
  const auto q = fixtures::slab_q();
  const auto p = fixtures::segment_p_description();
  auto v = is_ef_exists(q, p, fixtures::x_coordinates());
  if (v.holds || !v.witness_point) return {false, "biconditional did not fail"};

  const Vector w = fixtures::membership_witness();
  HPolyhedron pinned = q;
  for (std::size_t i = 0; i < 3; ++i) pinned.add_eq(unit_vector(4, i), w[i]);
  const bool lifts = feasible_point(pinned).has_value();
  const Row eq = fixtures::segment_p_equality();
  const bool violates = dot(eq.coeffs, w) != eq.rhs;
  return {lifts && violates && !membership_h(w, p) && check_holds("REF1a"), "witness (45/2, -50, 100)"};
}

Outcome ac3() {
  auto img = image_under_map(fixtures::slab_to_segment_map(), enumerate_generators(fixtures::slab_q()));
  auto p = fixtures::segment_p_vertices();
  return {is_subset(img, p) && is_subset(p, img) && check_holds("REF1b"), "pi(Q) = P"};
}

Outcome ac4() {
  auto proj = fourier_motzkin(fixtures::slab_q(), fixtures::x_coordinates());
  bool whole = proj.rows().empty() && polyhedra_equal(proj, VPolyhedron::whole_space(3));
  bool differs = !polyhedra_equal(proj, fixtures::segment_p_description());
  return {whole && differs && check_holds("REF2"), "projection is R^3"};
}

Outcome ac5() {
  auto q_min = remove_redundancy(fixtures::slab_q());
  auto p = fixtures::segment_p_description();
  auto q2 = count_inequalities(q_min, CountConvention::EqualityAsTwo);
  auto qs = count_inequalities(q_min, CountConvention::EqualitySeparate);
  auto p2 = count_inequalities(p, CountConvention::EqualityAsTwo);
  auto ps = count_inequalities(p, CountConvention::EqualitySeparate);
  bool counts = q2.total == 2 && qs.total == 2 && p2.total == 10 && ps.inequalities == 8 && ps.equalities == 1;
  bool extends = is_ef_linear_map(fixtures::slab_q(), p, fixtures::slab_to_segment_map()).holds;
  return {counts && extends && check_holds("REF3"), "2 < 10 and 2 < 8 (+1 eq)"};
}

Outcome ac6() { return {check_holds("THM2-random"), "50 random instances + segment"}; }

Outcome ac7() {
  std::mt19937_64 rng(20240601);
  for (int i = 0; i < 25; ++i) {
    const std::size_t dim = 1 + i % 5;
    const std::size_t rows = std::min<std::size_t>(12, 2 * dim + 1 + static_cast<std::size_t>(random_int(rng, 0, 2)));
    auto h = random_polytope(rng, dim, rows);
    auto verts = oracle::brute_force_vertices(h);

    Vector c(dim);
    for (auto& x : c) x = Rational(random_int(rng, -6, 6));
    auto lp = simplex_solve(h, c, Sense::Minimize);
    if (!lp.optimal() || *lp.value != oracle::min_over(verts, c)) return {false, "LP mismatch on polytope " + std::to_string(i)};

    auto v = enumerate_generators(h);
    if (v.vertices() != verts || !polyhedra_equal(v, h)) return {false, "DD mismatch on polytope " + std::to_string(i)};

    std::vector<std::size_t> keep;
    for (std::size_t k = 0; k < dim; k += 2) keep.push_back(k);
    if (!polyhedra_equal(fourier_motzkin(h, keep), project_v(v, keep)))
      return {false, "FM mismatch on polytope " + std::to_string(i)};
  }
  return {true, "25 polytopes"};
}

Outcome ac8() {
  bool q = is_degenerate_ef(fixtures::slab_q(), fixtures::x_coordinates());
  bool control = is_degenerate_ef(fixtures::degeneracy_control(), {0});
  return {q && !control && check_holds("DEGEN"), "Q degenerate, control not"};
}

} // namespace

int main() {
  struct Criterion {
    const char* id;
    const char* what;
    double limit_seconds;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"AC1", "AP vertex counts and tour bijection for n = 3..6", 60, ac1},
      {"AC2", "membership biconditional fails with a lifting witness", 1, ac2},
      {"AC3", "image of Q under pi equals P", 1, ac3},
      {"AC4", "projection of Q is R^3, not P", 1, ac4},
      {"AC5", "inequality counts under both conventions", 1, ac5},
      {"AC6", "two-step optimization equals direct LP", 30, ac6},
      {"AC7", "LP, DD and FM agree with independent oracles", 60, ac7},
      {"AC8", "degeneracy detector on Q and control", 1, ac8},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o{false, ""};
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.limit_seconds;
    const bool pass = o.ok && in_time;
    all = all && pass;
    std::printf("%s %s  %s  [%s; %.3f s, limit %.0f s]\n", pass ? "PASS" : "FAIL", c.id, c.what, o.note.c_str(), secs,
                c.limit_seconds);
  }
  return all ? 0 : 1;
}
