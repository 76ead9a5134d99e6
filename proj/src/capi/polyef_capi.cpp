#include "polyef/polyef.h"

#include "polyef/bridge.hpp"
#include "polyef/ef.hpp"
#include "polyef/errors.hpp"
#include "polyef/projection.hpp"
#include "polyef/simplex.hpp"
#include "polyef/text_format.hpp"
#include "polyef/tsp.hpp"
#include "polyef/verify.hpp"

#include "json.hpp"

#include <cstring>
#include <sstream>

struct pef_polyhedron {
  polyef::AnyPolyhedron value;
};

struct pef_map {
  polyef::LinearMap value;
};

struct pef_graph {
  polyef::GraphL value;
};

struct pef_ef_verdict {
  bool holds = false;
  std::string witness;
  std::string side;
};

namespace {

thread_local std::string g_error;
thread_local std::size_t g_error_line = 0;

pef_status fail(pef_status s, const std::string& msg, std::size_t line = 0) {
  g_error = msg;
  g_error_line = line;
  return s;
}

// Runs `fn`, translating exceptions into status codes.
template <typename Fn>
pef_status guarded(Fn&& fn) {
  g_error.clear();
  g_error_line = 0;
  try {
    fn();
    return PEF_OK;
  } catch (const polyef::ParseError& e) {
    return fail(PEF_ERR_PARSE, e.what(), e.line());
  } catch (const polyef::DimensionError& e) {
    return fail(PEF_ERR_DIMENSION, e.what());
  } catch (const polyef::ArgumentError& e) {
    return fail(PEF_ERR_ARGUMENT, e.what());
  } catch (const polyef::EmptyPolyhedronError& e) {
    return fail(PEF_ERR_EMPTY, e.what());
  } catch (const polyef::IoError& e) {
    return fail(PEF_ERR_IO, e.what());
  } catch (const polyef::OptimizationError& e) {
    return fail(PEF_ERR_OPTIMIZATION, e.what());
  } catch (const std::bad_alloc&) {
    return fail(PEF_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(PEF_ERR_INTERNAL, e.what());
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw polyef::ArgumentError(what);
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::string join(const polyef::Vector& v) {
  std::string out;
  for (const auto& x : v) {
    if (!out.empty()) out += ' ';
    out += x.to_string();
  }
  return out;
}

nlohmann::ordered_json to_json(const polyef::Vector& v) {
  auto a = nlohmann::ordered_json::array();
  for (const auto& x : v) a.push_back(x.to_string());
  return a;
}

std::vector<std::size_t> coords(const std::size_t* xs, std::size_t n) {
  require(xs || n == 0, "coordinate list is NULL");
  return std::vector<std::size_t>(xs, xs + n);
}

pef_polyhedron* wrap(polyef::AnyPolyhedron p) { return new pef_polyhedron{std::move(p)}; }

polyef::HPolyhedron as_h(const pef_polyhedron* p) { return polyef::to_h(p->value); }

} // namespace

extern "C" {

const char* pef_version(void) { return "0.1.0"; }

const char* pef_status_name(pef_status s) {
  switch (s) {
  case PEF_OK: return "ok";
  case PEF_ERR_ARGUMENT: return "argument error";
  case PEF_ERR_PARSE: return "parse error";
  case PEF_ERR_DIMENSION: return "dimension error";
  case PEF_ERR_EMPTY: return "empty polyhedron";
  case PEF_ERR_IO: return "i/o error";
  case PEF_ERR_OPTIMIZATION: return "optimization error";
  case PEF_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* pef_last_error(void) { return g_error.c_str(); }
size_t pef_last_error_line(void) { return g_error_line; }
void pef_string_free(char* s) { std::free(s); }

pef_status pef_polyhedron_parse(const char* text, pef_polyhedron** out) {
  return guarded([&] {
    require(text && out, "NULL argument");
    *out = wrap(polyef::parse_polyhedron(text));
  });
}

pef_status pef_polyhedron_read_file(const char* path, pef_polyhedron** out) {
  return guarded([&] {
    require(path && out, "NULL argument");
    *out = wrap(polyef::parse_polyhedron(polyef::read_text_file(path)));
  });
}

void pef_polyhedron_free(pef_polyhedron* p) { delete p; }

pef_status pef_polyhedron_format(const pef_polyhedron* p, char** out_text) {
  return guarded([&] {
    require(p && out_text, "NULL argument");
    *out_text = dup_string(polyef::format_polyhedron(p->value));
  });
}

int pef_polyhedron_is_h(const pef_polyhedron* p) {
  return p && std::holds_alternative<polyef::HPolyhedron>(p->value) ? 1 : 0;
}

size_t pef_polyhedron_dim(const pef_polyhedron* p) { return p ? polyef::dim_of(p->value) : 0; }

size_t pef_polyhedron_size(const pef_polyhedron* p) {
  if (!p) return 0;
  if (auto h = std::get_if<polyef::HPolyhedron>(&p->value)) return h->rows().size();
  const auto& v = std::get<polyef::VPolyhedron>(p->value);
  return v.vertices().size() + v.rays().size() + v.lineality().size();
}

pef_status pef_polyhedron_contains(const pef_polyhedron* p, const char* point, int* out) {
  return guarded([&] {
    require(p && point && out, "NULL argument");
    polyef::Vector x = polyef::parse_vector(point);
    if (x.size() != polyef::dim_of(p->value)) throw polyef::DimensionError("point has the wrong dimension");
    if (auto h = std::get_if<polyef::HPolyhedron>(&p->value))
      *out = polyef::membership_h(x, *h);
    else
      *out = polyef::membership_v(x, std::get<polyef::VPolyhedron>(p->value));
  });
}

pef_status pef_polyhedron_is_empty(const pef_polyhedron* p, int* out) {
  return guarded([&] {
    require(p && out, "NULL argument");
    if (auto h = std::get_if<polyef::HPolyhedron>(&p->value))
      *out = !polyef::feasible_point(*h).has_value();
    else
      *out = std::get<polyef::VPolyhedron>(p->value).is_empty();
  });
}

pef_status pef_polyhedron_equal(const pef_polyhedron* a, const pef_polyhedron* b, int* out) {
  return guarded([&] {
    require(a && b && out, "NULL argument");
    *out = polyef::polyhedra_equal(a->value, b->value);
  });
}

pef_status pef_polyhedron_subset(const pef_polyhedron* a, const pef_polyhedron* b, int* out) {
  return guarded([&] {
    require(a && b && out, "NULL argument");
    *out = polyef::is_subset(a->value, b->value);
  });
}

pef_status pef_vertices(const pef_polyhedron* p, pef_polyhedron** out) {
  return guarded([&] {
    require(p && out, "NULL argument");
    *out = wrap(polyef::canonicalize(polyef::to_v(p->value)));
  });
}

pef_status pef_facets(const pef_polyhedron* p, pef_polyhedron** out) {
  return guarded([&] {
    require(p && out, "NULL argument");
    *out = wrap(polyef::enumerate_facets(polyef::to_v(p->value)));
  });
}

pef_status pef_remove_redundancy(const pef_polyhedron* h, pef_polyhedron** out) {
  return guarded([&] {
    require(h && out, "NULL argument");
    *out = wrap(polyef::remove_redundancy(as_h(h)));
  });
}

pef_status pef_project(const pef_polyhedron* p, const size_t* keep, size_t keep_len, pef_polyhedron** out) {
  return guarded([&] {
    require(p && out, "NULL argument");
    *out = wrap(polyef::fourier_motzkin(as_h(p), coords(keep, keep_len)));
  });
}

pef_status pef_count_inequalities(const pef_polyhedron* h, int convention, size_t* inequalities,
                                  size_t* equalities, size_t* total) {
  return guarded([&] {
    require(h, "NULL polyhedron");
    require(convention == 0 || convention == 1, "convention must be 0 or 1");
    auto c = polyef::count_inequalities(
        as_h(h), convention == 0 ? polyef::CountConvention::EqualityAsTwo : polyef::CountConvention::EqualitySeparate);
    if (inequalities) *inequalities = c.inequalities;
    if (equalities) *equalities = c.equalities;
    if (total) *total = c.total;
  });
}

pef_status pef_lp_solve(const pef_polyhedron* p, const char* objective, int maximize, pef_lp_status* status,
                        char** point, char** value) {
  return guarded([&] {
    require(p && objective && status, "NULL argument");
    auto h = as_h(p);
    polyef::Vector c = polyef::parse_vector(objective);
    if (c.size() != h.dim()) throw polyef::DimensionError("objective has the wrong dimension");
    auto res = polyef::simplex_solve(h, c, maximize ? polyef::Sense::Maximize : polyef::Sense::Minimize);
    switch (res.status) {
    case polyef::LPStatus::Optimal: *status = PEF_LP_OPTIMAL; break;
    case polyef::LPStatus::Unbounded: *status = PEF_LP_UNBOUNDED; break;
    case polyef::LPStatus::Infeasible: *status = PEF_LP_INFEASIBLE; break;
    }
    if (res.optimal()) {
      char* pt = point ? dup_string(join(*res.point)) : nullptr;
      if (value) *value = dup_string(res.value->to_string());
      if (point) *point = pt;
    }
  });
}

pef_status pef_map_parse(const char* text, pef_map** out) {
  return guarded([&] {
    require(text && out, "NULL argument");
    *out = new pef_map{polyef::parse_map(text)};
  });
}

pef_status pef_map_read_file(const char* path, pef_map** out) {
  return guarded([&] {
    require(path && out, "NULL argument");
    *out = new pef_map{polyef::parse_map(polyef::read_text_file(path))};
  });
}

void pef_map_free(pef_map* m) { delete m; }

pef_status pef_map_format(const pef_map* m, char** out_text) {
  return guarded([&] {
    require(m && out_text, "NULL argument");
    *out_text = dup_string(polyef::format_map(m->value));
  });
}

pef_status pef_image(const pef_map* m, const pef_polyhedron* q, pef_polyhedron** out) {
  return guarded([&] {
    require(m && q && out, "NULL argument");
    *out = wrap(polyef::canonicalize(polyef::image_under_map(m->value, polyef::to_v(q->value))));
  });
}

pef_status pef_ef_check(const pef_polyhedron* q, const pef_polyhedron* p, const size_t* x_coords, size_t x_len,
                        pef_ef_definition def, const pef_map* map, pef_ef_verdict** out) {
  return guarded([&] {
    require(q && p && out, "NULL argument");
    polyef::EFVerdict v;
    switch (def) {
    case PEF_EF_STANDARD: v = polyef::is_ef_standard(as_h(q), p->value, coords(x_coords, x_len)); break;
    case PEF_EF_EXISTS: v = polyef::is_ef_exists(as_h(q), p->value, coords(x_coords, x_len)); break;
    case PEF_EF_MAP:
      require(map, "the map definition needs a map");
      v = polyef::is_ef_linear_map(q->value, p->value, map->value);
      break;
    default: throw polyef::ArgumentError("unknown EF definition");
    }
    auto* r = new pef_ef_verdict;
    r->holds = v.holds;
    if (v.witness_point) {
      r->witness = join(*v.witness_point);
      r->side = v.witness_side;
    }
    *out = r;
  });
}

int pef_ef_verdict_holds(const pef_ef_verdict* v) { return v && v->holds ? 1 : 0; }
const char* pef_ef_verdict_witness(const pef_ef_verdict* v) { return v ? v->witness.c_str() : ""; }
const char* pef_ef_verdict_witness_side(const pef_ef_verdict* v) { return v ? v->side.c_str() : ""; }
void pef_ef_verdict_free(pef_ef_verdict* v) { delete v; }

pef_status pef_is_degenerate_ef(const pef_polyhedron* q, const size_t* x_coords, size_t x_len, int* out) {
  return guarded([&] {
    require(q && out, "NULL argument");
    *out = polyef::is_degenerate_ef(as_h(q), coords(x_coords, x_len));
  });
}

pef_status pef_graph_parse(const char* text, pef_graph** out) {
  return guarded([&] {
    require(text && out, "NULL argument");
    *out = new pef_graph{polyef::parse_graph(text)};
  });
}

pef_status pef_graph_read_file(const char* path, pef_graph** out) {
  return guarded([&] {
    require(path && out, "NULL argument");
    *out = new pef_graph{polyef::parse_graph(polyef::read_text_file(path))};
  });
}

void pef_graph_free(pef_graph* g) { delete g; }

pef_status pef_graph_format(const pef_graph* g, char** out_text) {
  return guarded([&] {
    require(g && out_text, "NULL argument");
    *out_text = dup_string(polyef::format_graph(g->value));
  });
}

pef_status pef_bridge_two_step(const pef_graph* g, const pef_polyhedron* y_set, const char* alpha, char** out_json) {
  return guarded([&] {
    require(g && y_set && alpha && out_json, "NULL argument");
    polyef::Vector a = polyef::parse_vector(alpha);
    if (a.size() != g->value.x_dim()) throw polyef::DimensionError("alpha must have one entry per x coordinate");
    auto y = as_h(y_set);
    if (y.dim() != g->value.y_dim()) throw polyef::DimensionError("Y does not match the graph's y dimension");
    auto br = polyef::derive_bridge(g->value);
    if (!br) throw polyef::ArgumentError("BᵀB is singular; no affine bridge exists");
    auto res = polyef::two_step_optimize(a, y, *br);
    nlohmann::ordered_json j = {{"x", to_json(res.x)}, {"y", to_json(res.y)}, {"value", res.value.to_string()}};
    *out_json = dup_string(j.dump(2) + "\n");
  });
}

pef_status pef_bridge_verify(const pef_graph* g, const pef_polyhedron* x_set, const pef_polyhedron* y_set,
                             const char* alpha, char** out_json, int* holds) {
  return guarded([&] {
    require(g && x_set && y_set && alpha && out_json && holds, "NULL argument");
    auto rep = polyef::verify_theorem2(as_h(x_set), as_h(y_set), g->value, polyef::parse_vector(alpha));
    nlohmann::ordered_json j = {{"holds", rep.holds()}, {"premise_ok", rep.premise_ok}};
    if (!rep.premise_failure.empty()) j["premise_failure"] = rep.premise_failure;
    if (rep.direct_value) j["direct_value"] = rep.direct_value->to_string();
    if (rep.two_step_value) j["two_step_value"] = rep.two_step_value->to_string();
    if (rep.x_star) j["x_star"] = to_json(*rep.x_star);
    if (rep.y_star) j["y_star"] = to_json(*rep.y_star);
    j["x_star_feasible"] = rep.x_star_feasible;
    j["values_equal"] = rep.values_equal;
    *out_json = dup_string(j.dump(2) + "\n");
    *holds = rep.holds();
  });
}

pef_status pef_tsp_tours(size_t n, size_t cap, char** out_text) {
  return guarded([&] {
    require(out_text, "NULL argument");
    std::string text;
    for (const auto& t : polyef::tsp::enumerate_tours(n, cap ? cap : polyef::tsp::kDefaultTourCap))
      text += t.to_string() + "\n";
    *out_text = dup_string(text);
  });
}

pef_status pef_tsp_ap(size_t n, pef_polyhedron** out) {
  return guarded([&] {
    require(out, "NULL argument");
    *out = wrap(polyef::tsp::build_ap_hrep(n));
  });
}

pef_status pef_tsp_bijection(size_t n, size_t cap, char** out_text, int* holds) {
  return guarded([&] {
    require(out_text && holds, "NULL argument");
    auto r = polyef::tsp::verify_theorem1(n, cap ? cap : polyef::tsp::kDefaultTourCap);
    auto yes = [](bool b) { return b ? "yes" : "no"; };
    std::ostringstream s;
    s << "cities: " << r.n << "\n"
      << "vertices: " << r.vertex_count << " (expected " << r.expected_count << ")\n"
      << "bounded: " << yes(r.bounded) << "\n"
      << "integral: " << yes(r.all_integral) << "\n"
      << "permutation matrices: " << yes(r.all_permutation) << "\n"
      << "vertex set matches tours: " << yes(r.vertex_set_matches_tours) << "\n"
      << "round trips: " << yes(r.round_trips) << "\n"
      << "travel-leg vectors distinct: " << yes(r.travel_legs_distinct) << "\n"
      << "bijection: " << (r.holds() ? "holds" : "fails") << "\n";
    *out_text = dup_string(s.str());
    *holds = r.holds();
  });
}

void pef_verify_options_init(pef_verify_options* opts) {
  if (!opts) return;
  opts->seed = 42;
  opts->n_max = 6;
  opts->only = nullptr;
  opts->json = 0;
  opts->timings = 0;
}

pef_status pef_verify_paper(const pef_verify_options* opts, char** out_report, int* all_hold) {
  return guarded([&] {
    require(opts && out_report && all_hold, "NULL argument");
    polyef::VerifyOptions o;
    o.seed = opts->seed;
    o.n_max = opts->n_max;
    if (opts->only) {
      std::stringstream ss(opts->only);
      std::string id;
      while (std::getline(ss, id, ','))
        if (!id.empty()) o.only.push_back(id);
      require(!o.only.empty(), "--only needs at least one check id");
    }
    polyef::selected_checks(o); // reject unknown ids before running anything
    auto report = polyef::run_verify_paper(o);
    *out_report = dup_string(opts->json ? polyef::report_json(report, opts->timings != 0)
                                        : polyef::report_text(report));
    *all_hold = report.all_hold();
  });
}

} // extern "C"
