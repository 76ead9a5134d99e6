// Exercises the shared library through its C header only.

#include "doctest.h"

#include "polyef/polyef.h"

#include <string>

namespace {

const char* kSlab = "begin h\ndim 4\n>= 0 0 0 1 | 2\n<= 0 0 0 1 | 3\nend\n";
const char* kSegment = "begin v\ndim 3\nvertex 8 10 6\nvertex 12 15 9\nend\n";
const char* kPi = "begin map\ndims 3 4\nrow 0 0 0 4\nrow 0 0 0 5\nrow 0 0 0 3\nend\n";

pef_polyhedron* parse(const char* text) {
  pef_polyhedron* p = nullptr;
  REQUIRE(pef_polyhedron_parse(text, &p) == PEF_OK);
  return p;
}

std::string take(char* s) {
  std::string out = s;
  pef_string_free(s);
  return out;
}

} // namespace

TEST_CASE("parse, format and free") {
  pef_polyhedron* q = parse(kSlab);
  CHECK(pef_polyhedron_is_h(q) == 1);
  CHECK(pef_polyhedron_dim(q) == 4);
  CHECK(pef_polyhedron_size(q) == 2);
  char* text = nullptr;
  REQUIRE(pef_polyhedron_format(q, &text) == PEF_OK);
  CHECK(take(text) == "begin h\ndim 4\n<= 0 0 0 -1 | -2\n<= 0 0 0 1 | 3\nend\n");
  pef_polyhedron_free(q);
  pef_polyhedron_free(nullptr);
}

TEST_CASE("errors map to status codes") {
  pef_polyhedron* p = nullptr;
  CHECK(pef_polyhedron_parse("begin h\ndim 1\n<= y | 1\nend\n", &p) == PEF_ERR_PARSE);
  CHECK(p == nullptr);
  CHECK(pef_last_error_line() == 3);
  CHECK(std::string(pef_last_error()).find("line 3") != std::string::npos);

  CHECK(pef_polyhedron_read_file("/nonexistent/x.txt", &p) == PEF_ERR_IO);
  CHECK(pef_polyhedron_parse(nullptr, &p) == PEF_ERR_ARGUMENT);

  pef_polyhedron* q = parse(kSlab);
  int inside = 0;
  CHECK(pef_polyhedron_contains(q, "1 2", &inside) == PEF_ERR_DIMENSION);
  CHECK(pef_polyhedron_contains(q, "1 2 3 2.5", &inside) == PEF_OK);
  CHECK(inside == 1);

  char* tours = nullptr;
  CHECK(pef_tsp_tours(1, 0, &tours) == PEF_ERR_ARGUMENT);

  pef_polyhedron* empty = parse("begin h\ndim 1\n<= 1 | 0\n>= 1 | 1\nend\n");
  pef_polyhedron* out = nullptr;
  CHECK(pef_remove_redundancy(empty, &out) == PEF_ERR_EMPTY);
  int is_empty = 0;
  CHECK(pef_polyhedron_is_empty(empty, &is_empty) == PEF_OK);
  CHECK(is_empty == 1);
  pef_polyhedron_free(empty);
  pef_polyhedron_free(q);
  CHECK(std::string(pef_status_name(PEF_ERR_PARSE)) == "parse error");
}

TEST_CASE("projection, vertices and equality") {
  pef_polyhedron* q = parse(kSlab);
  const size_t keep[] = {0, 1, 2};
  pef_polyhedron* proj = nullptr;
  REQUIRE(pef_project(q, keep, 3, &proj) == PEF_OK);
  CHECK(pef_polyhedron_size(proj) == 0);

  pef_polyhedron* v = nullptr;
  REQUIRE(pef_vertices(q, &v) == PEF_OK);
  CHECK(pef_polyhedron_is_h(v) == 0);
  CHECK(pef_polyhedron_size(v) == 5);

  pef_polyhedron* seg = parse(kSegment);
  int eq = 1;
  REQUIRE(pef_polyhedron_equal(proj, seg, &eq) == PEF_OK);
  CHECK(eq == 0);
  pef_polyhedron* facets = nullptr;
  REQUIRE(pef_facets(seg, &facets) == PEF_OK);
  REQUIRE(pef_polyhedron_equal(facets, seg, &eq) == PEF_OK);
  CHECK(eq == 1);

  size_t ineq = 0, eqs = 0, total = 0;
  REQUIRE(pef_count_inequalities(q, 0, &ineq, &eqs, &total) == PEF_OK);
  CHECK(total == 2);

  for (auto* p : {q, proj, v, seg, facets}) pef_polyhedron_free(p);
}

TEST_CASE("LP through the C API") {
  pef_polyhedron* q = parse(kSlab);
  pef_lp_status st;
  char* point = nullptr;
  char* value = nullptr;
  REQUIRE(pef_lp_solve(q, "0 0 0 1", 0, &st, &point, &value) == PEF_OK);
  CHECK(st == PEF_LP_OPTIMAL);
  CHECK(take(value) == "2");
  pef_string_free(point);
  REQUIRE(pef_lp_solve(q, "1 0 0 0", 1, &st, nullptr, nullptr) == PEF_OK);
  CHECK(st == PEF_LP_UNBOUNDED);
  pef_polyhedron_free(q);
}

TEST_CASE("EF verdicts") {
  pef_polyhedron* q = parse(kSlab);
  pef_polyhedron* p = parse(kSegment);
  pef_map* pi = nullptr;
  REQUIRE(pef_map_parse(kPi, &pi) == PEF_OK);
  const size_t xs[] = {0, 1, 2};

  pef_ef_verdict* v = nullptr;
  REQUIRE(pef_ef_check(q, p, xs, 3, PEF_EF_STANDARD, nullptr, &v) == PEF_OK);
  CHECK(pef_ef_verdict_holds(v) == 0);
  CHECK(std::string(pef_ef_verdict_witness(v)).size() > 0);
  pef_ef_verdict_free(v);

  REQUIRE(pef_ef_check(q, p, xs, 3, PEF_EF_EXISTS, nullptr, &v) == PEF_OK);
  CHECK(pef_ef_verdict_holds(v) == 0);
  pef_ef_verdict_free(v);

  REQUIRE(pef_ef_check(q, p, xs, 3, PEF_EF_MAP, pi, &v) == PEF_OK);
  CHECK(pef_ef_verdict_holds(v) == 1);
  CHECK(std::string(pef_ef_verdict_witness(v)).empty());
  pef_ef_verdict_free(v);

  CHECK(pef_ef_check(q, p, xs, 3, PEF_EF_MAP, nullptr, &v) == PEF_ERR_ARGUMENT);

  pef_polyhedron* img = nullptr;
  REQUIRE(pef_image(pi, q, &img) == PEF_OK);
  int eq = 0;
  REQUIRE(pef_polyhedron_equal(img, p, &eq) == PEF_OK);
  CHECK(eq == 1);

  int degenerate = 0;
  REQUIRE(pef_is_degenerate_ef(q, xs, 3, &degenerate) == PEF_OK);
  CHECK(degenerate == 1);

  char* text = nullptr;
  REQUIRE(pef_map_format(pi, &text) == PEF_OK);
  CHECK(take(text) == kPi);

  pef_polyhedron_free(img);
  pef_map_free(pi);
  pef_polyhedron_free(p);
  pef_polyhedron_free(q);
}

TEST_CASE("bridge and TSP") {
  pef_graph* g = nullptr;
  REQUIRE(pef_graph_parse("begin graph\ndims 1 1 1\nB-row 2\nC-row -4\nb 6\nend\n", &g) == PEF_OK);
  pef_polyhedron* y = parse("begin h\ndim 1\n>= 1 | 0\n<= 1 | 5\nend\n");
  char* json = nullptr;
  REQUIRE(pef_bridge_two_step(g, y, "-1", &json) == PEF_OK);
  CHECK(take(json).find("\"-13\"") != std::string::npos);
  pef_polyhedron_free(y);
  pef_graph_free(g);

  char* tours = nullptr;
  REQUIRE(pef_tsp_tours(4, 0, &tours) == PEF_OK);
  CHECK(take(tours) == "0 1 2 3 0\n0 1 3 2 0\n0 2 1 3 0\n0 2 3 1 0\n0 3 1 2 0\n0 3 2 1 0\n");

  pef_polyhedron* ap = nullptr;
  REQUIRE(pef_tsp_ap(4, &ap) == PEF_OK);
  CHECK(pef_polyhedron_dim(ap) == 9);
  pef_polyhedron_free(ap);

  char* report = nullptr;
  int holds = 0;
  REQUIRE(pef_tsp_bijection(5, 0, &report, &holds) == PEF_OK);
  CHECK(holds == 1);
  CHECK(take(report).find("vertices: 24") != std::string::npos);
}

TEST_CASE("verification suite") {
  pef_verify_options o;
  pef_verify_options_init(&o);
  CHECK(o.seed == 42);
  CHECK(o.n_max == 6);
  o.only = "REF1a,REF2";
  o.json = 1;
  char* report = nullptr;
  int all = 0;
  REQUIRE(pef_verify_paper(&o, &report, &all) == PEF_OK);
  CHECK(all == 1);
  std::string r = take(report);
  CHECK(r.find("\"REF1a\"") != std::string::npos);
  CHECK(r.find("\"45/2\"") != std::string::npos);

  o.only = "REF9";
  CHECK(pef_verify_paper(&o, &report, &all) == PEF_ERR_ARGUMENT);
}
