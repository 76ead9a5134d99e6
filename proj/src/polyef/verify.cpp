#include "polyef/verify.hpp"

#include "polyef/bridge.hpp"
#include "polyef/ef.hpp"
#include "polyef/errors.hpp"
#include "polyef/fixtures.hpp"
#include "polyef/projection.hpp"
#include "polyef/simplex.hpp"
#include "polyef/tsp.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <map>
#include <random>
#include <sstream>

namespace polyef {

namespace {

using json = nlohmann::ordered_json;

constexpr std::size_t kTheorem2Instances = 50;
constexpr std::size_t kTheorem2MaxDim = 5;

json to_json(const Vector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.to_string());
  return a;
}

json to_json(const std::vector<Vector>& vs) {
  json a = json::array();
  for (const auto& v : vs) a.push_back(to_json(v));
  return a;
}

json to_json(const InequalityCount& c) {
  return {{"inequalities", c.inequalities}, {"equalities", c.equalities}, {"total", c.total}};
}

json to_json(const EFVerdict& v) {
  json j = {{"definition", to_string(v.definition)}, {"holds", v.holds}};
  if (v.witness_point) {
    j["witness"] = to_json(*v.witness_point);
    j["witness_side"] = v.witness_side;
  }
  return j;
}

// A check fills in `details` and returns whether its claim holds.
struct CheckSpec {
  std::string id;
  std::string claim;
  double budget_seconds;
  std::function<bool(json&)> run;
};

bool check_theorem1(std::size_t n, json& d) {
  auto rep = tsp::verify_theorem1(n);
  d = {{"n", n},
       {"vertices", rep.vertex_count},
       {"expected", rep.expected_count},
       {"bounded", rep.bounded},
       {"integral", rep.all_integral},
       {"permutation_matrices", rep.all_permutation},
       {"vertex_set_matches_tours", rep.vertex_set_matches_tours},
       {"round_trips", rep.round_trips},
       {"travel_legs_distinct", rep.travel_legs_distinct}};
  return rep.holds();
}

// x = (4, 5, 3) y over y in [2, 3], i.e. B = I, C = -(4, 5, 3)ᵀ, b = 0.
BridgeInstance segment_instance() {
  HPolyhedron y_set(1);
  y_set.add_ge({Rational(1)}, 2);
  y_set.add_le({Rational(1)}, 3);
  RatMatrix c(3, 1);
  c(0, 0) = -4;
  c(1, 0) = -5;
  c(2, 0) = -3;
  return {fixtures::segment_p_description(), std::move(y_set), GraphL(RatMatrix::identity(3), c, Vector(3)),
          {Rational(1), Rational(0), Rational(0)}};
}

bool check_theorem2(std::uint64_t seed, json& d) {
  std::mt19937_64 rng(seed);
  std::size_t agreed = 0;
  json failures = json::array();
  for (std::size_t i = 0; i < kTheorem2Instances; ++i) {
    const std::size_t dim = 1 + i % kTheorem2MaxDim;
    auto inst = random_bridge_instance(rng, dim);
    auto rep = verify_theorem2(inst.x_set, inst.y_set, inst.graph, inst.alpha);
    if (rep.holds()) {
      ++agreed;
      continue;
    }
    json f = {{"instance", i}, {"dim", dim}};
    if (!rep.premise_failure.empty()) f["reason"] = rep.premise_failure;
    if (rep.direct_value) f["direct_value"] = rep.direct_value->to_string();
    if (rep.two_step_value) f["two_step_value"] = rep.two_step_value->to_string();
    failures.push_back(std::move(f));
  }

  auto seg = segment_instance();
  auto rep = verify_theorem2(seg.x_set, seg.y_set, seg.graph, seg.alpha);
  json s = {{"holds", rep.holds()}};
  if (rep.direct_value) s["direct_value"] = rep.direct_value->to_string();
  if (rep.two_step_value) s["two_step_value"] = rep.two_step_value->to_string();
  if (rep.x_star) s["x_star"] = to_json(*rep.x_star);
  if (rep.y_star) s["y_star"] = to_json(*rep.y_star);
  if (!rep.premise_failure.empty()) s["reason"] = rep.premise_failure;

  d = {{"seed", seed},
       {"random_instances", kTheorem2Instances},
       {"agreed", agreed},
       {"failures", std::move(failures)},
       {"segment_instance", std::move(s)}};
  return agreed == kTheorem2Instances && rep.holds();
}

// Q with the x coordinates pinned to `x`.
bool lifts_into_q(const Vector& x) {
  HPolyhedron q = fixtures::slab_q();
  for (std::size_t i = 0; i < x.size(); ++i) q.add_eq(unit_vector(q.dim(), i), x[i]);
  return feasible_point(q).has_value();
}

bool check_ref1a(json& d) {
  const auto q = fixtures::slab_q();
  const auto p = fixtures::segment_p_description();
  const auto verdict = is_ef_exists(q, p, fixtures::x_coordinates());

  const Vector w = fixtures::membership_witness();
  const bool lifts = lifts_into_q(w);
  const bool violates_equality = !fixtures::segment_p_equality().satisfied_by(w);
  const bool outside_p = !membership_h(w, p);
  const Row& eq = fixtures::segment_p_equality();

  d = {{"witness", to_json(w)},
       {"witness_lifts_into_q", lifts},
       {"witness_outside_p", outside_p},
       {"violated_row", "0 3 -5 = 0"},
       {"violated_row_value", dot(eq.coeffs, w).to_string()},
       {"verdict", to_json(verdict)}};
  bool computed_ok = verdict.witness_point.has_value();
  if (computed_ok) {
    // The computed witness must also be a genuine counterexample.
    computed_ok = lifts_into_q(*verdict.witness_point) != membership_h(*verdict.witness_point, p);
  }
  d["computed_witness_valid"] = computed_ok;
  return !verdict.holds && computed_ok && lifts && violates_equality && outside_p;
}

bool check_ref1b(json& d) {
  const auto pi = fixtures::slab_to_segment_map();
  const auto image = image_under_map(pi, to_v(fixtures::slab_q()));
  const auto p = fixtures::segment_p_vertices();
  const bool image_in_p = is_subset(image, p);
  const bool p_in_image = is_subset(p, image);
  const auto verdict = is_ef_linear_map(fixtures::slab_q(), p, pi);
  d = {{"image_vertices", to_json(canonicalize(image).vertices())},
       {"p_vertices", to_json(p.vertices())},
       {"image_subset_of_p", image_in_p},
       {"p_subset_of_image", p_in_image},
       {"verdict", to_json(verdict)}};
  return image_in_p && p_in_image && verdict.holds;
}

bool check_ref1c(json& d) {
  const auto q = fixtures::slab_q();
  const AnyPolyhedron p = fixtures::segment_p_description();
  const auto xs = fixtures::x_coordinates();
  const auto standard = is_ef_standard(q, p, xs);
  const auto exists = is_ef_exists(q, p, xs);
  const auto map = is_ef_linear_map(q, p, fixtures::slab_to_segment_map());
  d = {{"standard", to_json(standard)}, {"exists", to_json(exists)}, {"map", to_json(map)}};
  return map.holds && !exists.holds && !standard.holds;
}

// max of the row's left side over Q (x-part only) is unbounded in the
// violating direction.
bool valid_on_q(const Row& r) {
  Vector c = r.coeffs;
  c.emplace_back(0);
  const auto q = fixtures::slab_q();
  auto hi = simplex_solve(q, c, Sense::Maximize);
  if (hi.status != LPStatus::Optimal || *hi.value > r.rhs) return false;
  if (r.rel == Relation::LessEqual) return true;
  auto lo = simplex_solve(q, c, Sense::Minimize);
  return lo.status == LPStatus::Optimal && *lo.value >= r.rhs;
}

bool check_ref2(json& d) {
  const auto proj = fourier_motzkin(fixtures::slab_q(), fixtures::x_coordinates());
  const auto p = fixtures::segment_p_description();
  const bool whole = polyhedra_equal(proj, VPolyhedron::whole_space(3));
  const bool equals_p = polyhedra_equal(proj, p);
  std::size_t invalid = 0;
  for (const auto& r : p.rows())
    if (!valid_on_q(r)) ++invalid;
  d = {{"projection_rows", proj.rows().size()},
       {"projection_is_whole_space", whole},
       {"projection_equals_p", equals_p},
       {"p_rows", p.rows().size()},
       {"p_rows_invalid_on_q", invalid}};
  return whole && !equals_p && invalid > 0;
}

bool check_ref3(json& d) {
  const auto q_min = remove_redundancy(fixtures::slab_q());
  const auto p = fixtures::segment_p_description();
  const auto p_min = remove_redundancy(p);
  const auto q2 = count_inequalities(q_min, CountConvention::EqualityAsTwo);
  const auto qs = count_inequalities(q_min, CountConvention::EqualitySeparate);
  const auto p2 = count_inequalities(p, CountConvention::EqualityAsTwo);
  const auto ps = count_inequalities(p, CountConvention::EqualitySeparate);
  const auto map = is_ef_linear_map(fixtures::slab_q(), p, fixtures::slab_to_segment_map());
  d = {{"q_minimal", {{"equality_as_two", to_json(q2)}, {"equality_separate", to_json(qs)}}},
       {"p_description", {{"equality_as_two", to_json(p2)}, {"equality_separate", to_json(ps)}}},
       {"p_minimal",
        {{"equality_as_two", to_json(count_inequalities(p_min, CountConvention::EqualityAsTwo))},
         {"equality_separate", to_json(count_inequalities(p_min, CountConvention::EqualitySeparate))}}},
       {"q_extends_p_by_map", map.holds}};
  return q2.total == 2 && qs.total == 2 && p2.total == 10 && ps.inequalities == 8 && ps.equalities == 1 &&
         q2.total < p2.total && qs.total < ps.total && map.holds;
}

bool check_degen(json& d) {
  const bool q_degenerate = is_degenerate_ef(fixtures::slab_q(), fixtures::x_coordinates());
  const bool control_degenerate = is_degenerate_ef(fixtures::degeneracy_control(), {0});
  d = {{"q_degenerate", q_degenerate}, {"control_degenerate", control_degenerate}};
  return q_degenerate && !control_degenerate;
}

std::vector<CheckSpec> all_checks(const VerifyOptions& opts) {
  std::vector<CheckSpec> out;
  for (std::size_t n = 3; n <= opts.n_max; ++n) {
    out.push_back({"THM1-n" + std::to_string(n),
                   "AP vertices for n = " + std::to_string(n) + " are the permutation matrices of the tours",
                   60.0, [n](json& d) { return check_theorem1(n, d); }});
  }
  const std::uint64_t seed = opts.seed;
  out.push_back({"THM2-random", "two-step optimization through the affine bridge matches the direct LP", 30.0,
                 [seed](json& d) { return check_theorem2(seed, d); }});
  out.push_back({"REF1a", "x in P iff (x, y) in Q for some y fails for the slab Q and segment P", 1.0, check_ref1a});
  out.push_back({"REF1b", "the image of Q under pi equals P", 1.0, check_ref1b});
  out.push_back({"REF1c", "the map-image and membership definitions disagree on (Q, P)", 1.0, check_ref1c});
  out.push_back({"REF2", "the projection of Q onto x is all of R^3, not P", 1.0, check_ref2});
  out.push_back({"REF3", "minimal Q has fewer inequalities than the description of P", 1.0, check_ref3});
  out.push_back({"DEGEN", "minimal Q has zero coefficients on every x coordinate", 1.0, check_degen});
  std::sort(out.begin(), out.end(), [](const CheckSpec& a, const CheckSpec& b) { return a.id < b.id; });
  return out;
}

std::vector<CheckSpec> select(const VerifyOptions& opts) {
  auto all = all_checks(opts);
  if (opts.only.empty()) return all;
  std::vector<CheckSpec> out;
  for (auto& c : all)
    if (std::find(opts.only.begin(), opts.only.end(), c.id) != opts.only.end()) out.push_back(c);
  for (const auto& id : opts.only) {
    bool known = std::any_of(all.begin(), all.end(), [&](const CheckSpec& c) { return c.id == id; });
    if (!known) throw ArgumentError("unknown check id '" + id + "'");
  }
  return out;
}

} // namespace

bool VerifyReport::all_hold() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.holds; });
}

std::vector<std::string> selected_checks(const VerifyOptions& opts) {
  std::vector<std::string> ids;
  for (const auto& c : select(opts)) ids.push_back(c.id);
  return ids;
}

VerifyReport run_verify_paper(const VerifyOptions& opts) {
  VerifyReport report;
  report.seed = opts.seed;
  report.n_max = opts.n_max;
  for (const auto& spec : select(opts)) {
    CheckResult r;
    r.check_id = spec.id;
    r.claim = spec.claim;
    const auto start = std::chrono::steady_clock::now();
    try {
      r.holds = spec.run(r.details);
    } catch (const std::exception& e) {
      r.holds = false;
      r.details["error"] = e.what();
    }
    r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.elapsed_seconds > spec.budget_seconds) {
      r.holds = false;
      r.details["timeout"] = true;
    }
    report.checks.push_back(std::move(r));
  }
  return report;
}

std::string report_json(const VerifyReport& r, bool with_timings) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json j = {{"check_id", c.check_id}, {"claim", c.claim}, {"holds", c.holds}, {"details", c.details}};
    if (with_timings) j["elapsed_seconds"] = c.elapsed_seconds;
    checks.push_back(std::move(j));
  }
  json doc = {{"seed", r.seed}, {"n_max", r.n_max}, {"all_hold", r.all_hold()}, {"checks", std::move(checks)}};
  return doc.dump(2) + "\n";
}

std::string report_text(const VerifyReport& r) {
  std::size_t width = 0;
  for (const auto& c : r.checks) width = std::max(width, c.check_id.size());
  std::ostringstream out;
  for (const auto& c : r.checks) {
    out << (c.holds ? "PASS  " : "FAIL  ") << std::left << std::setw(static_cast<int>(width)) << c.check_id << "  "
        << c.claim << "  (" << std::fixed << std::setprecision(3) << c.elapsed_seconds << " s)\n";
    for (const auto& [key, value] : c.details.items()) out << "      " << key << ": " << value.dump() << "\n";
  }
  std::size_t passed = std::count_if(r.checks.begin(), r.checks.end(), [](const CheckResult& c) { return c.holds; });
  out << passed << "/" << r.checks.size() << " checks hold\n";
  return out.str();
}

} // namespace polyef
