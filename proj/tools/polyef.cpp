// Command-line front end. Talks to the library only through polyef.h.

#include "polyef/polyef.h"

#include "CLI11.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

// Error carrying a process exit code.
struct Failure {
  int code;
  std::string message;
};

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using Poly = std::unique_ptr<pef_polyhedron, Deleter<pef_polyhedron, pef_polyhedron_free>>;
using Map = std::unique_ptr<pef_map, Deleter<pef_map, pef_map_free>>;
using Graph = std::unique_ptr<pef_graph, Deleter<pef_graph, pef_graph_free>>;
using Verdict = std::unique_ptr<pef_ef_verdict, Deleter<pef_ef_verdict, pef_ef_verdict_free>>;

void check(pef_status s) {
  if (s == PEF_OK) return;
  throw Failure{kExitUsage, std::string(pef_status_name(s)) + ": " + pef_last_error()};
}

std::string take(char* s) {
  std::string out = s ? s : "";
  pef_string_free(s);
  return out;
}

Poly read_poly(const std::string& path) {
  pef_polyhedron* p = nullptr;
  pef_status s = pef_polyhedron_read_file(path.c_str(), &p);
  if (s != PEF_OK) throw Failure{kExitUsage, path + ": " + pef_last_error()};
  return Poly(p);
}

Map read_map(const std::string& path) {
  pef_map* m = nullptr;
  pef_status s = pef_map_read_file(path.c_str(), &m);
  if (s != PEF_OK) throw Failure{kExitUsage, path + ": " + pef_last_error()};
  return Map(m);
}

Graph read_graph(const std::string& path) {
  pef_graph* g = nullptr;
  pef_status s = pef_graph_read_file(path.c_str(), &g);
  if (s != PEF_OK) throw Failure{kExitUsage, path + ": " + pef_last_error()};
  return Graph(g);
}

std::string format(const pef_polyhedron* p) {
  char* text = nullptr;
  check(pef_polyhedron_format(p, &text));
  return take(text);
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!(out << text)) throw Failure{kExitUsage, "cannot write '" + out_path + "'"};
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += sep;
    out += p;
  }
  return out;
}

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

struct VerifyArgs {
  std::uint64_t seed = 42;
  std::size_t n_max = 6;
  std::vector<std::string> only;
  std::string format = "text";
  std::string out;
  bool timings = false;
};

int cmd_verify_paper(const VerifyArgs& a) {
  pef_verify_options opts;
  pef_verify_options_init(&opts);
  opts.seed = a.seed;
  opts.n_max = a.n_max;
  std::string only = join(a.only, ",");
  opts.only = a.only.empty() ? nullptr : only.c_str();
  opts.json = a.format == "json";
  opts.timings = a.timings;
  char* report = nullptr;
  int all_hold = 0;
  check(pef_verify_paper(&opts, &report, &all_hold));
  emit(take(report), a.out);
  return all_hold ? kExitOk : kExitCheckFailed;
}

int cmd_project(const std::string& file, const std::vector<std::size_t>& keep, const std::string& out) {
  Poly p = read_poly(file);
  pef_polyhedron* proj = nullptr;
  check(pef_project(p.get(), keep.data(), keep.size(), &proj));
  Poly owned(proj);
  emit(format(owned.get()), out);
  return kExitOk;
}

int cmd_vertices(const std::string& file, const std::string& out) {
  Poly p = read_poly(file);
  pef_polyhedron* v = nullptr;
  check(pef_vertices(p.get(), &v));
  Poly owned(v);
  emit(format(owned.get()), out);
  return kExitOk;
}

struct EfArgs {
  std::string q_file, p_file, map_file, definition = "all", format = "text";
  std::vector<std::size_t> x_coords;
};

int cmd_ef_check(const EfArgs& a) {
  if (a.definition == "map" && a.map_file.empty()) throw Failure{kExitUsage, "--definition map needs --map"};
  Poly q = read_poly(a.q_file);
  Poly p = read_poly(a.p_file);
  Map m = a.map_file.empty() ? Map() : read_map(a.map_file);

  struct Entry {
    const char* name;
    pef_ef_definition def;
  };
  const Entry entries[] = {{"standard", PEF_EF_STANDARD}, {"exists", PEF_EF_EXISTS}, {"map", PEF_EF_MAP}};

  std::ostringstream text, json;
  json << "{\n";
  bool first = true;
  for (const auto& e : entries) {
    if (a.definition != "all" && a.definition != e.name) continue;
    if (!first) json << ",\n";
    first = false;
    if (e.def == PEF_EF_MAP && !m) {
      text << e.name << ": skipped (no map given)\n";
      json << "  \"" << e.name << "\": null";
      continue;
    }
    pef_ef_verdict* raw = nullptr;
    check(pef_ef_check(q.get(), p.get(), a.x_coords.data(), a.x_coords.size(), e.def, m.get(), &raw));
    Verdict v(raw);
    const bool holds = pef_ef_verdict_holds(v.get());
    const std::string witness = pef_ef_verdict_witness(v.get());
    const std::string side = pef_ef_verdict_witness_side(v.get());
    text << e.name << ": " << (holds ? "true" : "false");
    json << "  \"" << e.name << "\": {\"holds\": " << (holds ? "true" : "false");
    if (!witness.empty()) {
      text << "  witness (" << witness << ") in " << side;
      json << ", \"witness\": \"" << witness << "\", \"witness_side\": \"" << json_escape(side) << "\"";
    }
    text << "\n";
    json << "}";
  }
  json << "\n}\n";
  std::cout << (a.format == "json" ? json.str() : text.str());
  return kExitOk;
}

int cmd_tsp(std::size_t n, const std::string& what, std::size_t cap, const std::string& out) {
  if (what == "tours") {
    char* text = nullptr;
    check(pef_tsp_tours(n, cap, &text));
    emit(take(text), out);
    return kExitOk;
  }
  if (what == "ap") {
    pef_polyhedron* ap = nullptr;
    check(pef_tsp_ap(n, &ap));
    Poly owned(ap);
    emit(format(owned.get()), out);
    return kExitOk;
  }
  char* text = nullptr;
  int holds = 0;
  check(pef_tsp_bijection(n, cap, &text, &holds));
  emit(take(text), out);
  return holds ? kExitOk : kExitCheckFailed;
}

int cmd_bridge(const std::string& graph_file, const std::string& y_file, const std::string& x_file,
               const std::vector<std::string>& alpha, const std::string& out) {
  Graph g = read_graph(graph_file);
  Poly y = read_poly(y_file);
  const std::string a = join(alpha, " ");
  char* report = nullptr;
  if (x_file.empty()) {
    check(pef_bridge_two_step(g.get(), y.get(), a.c_str(), &report));
    emit(take(report), out);
    return kExitOk;
  }
  Poly x = read_poly(x_file);
  int holds = 0;
  check(pef_bridge_verify(g.get(), x.get(), y.get(), a.c_str(), &report, &holds));
  emit(take(report), out);
  return holds ? kExitOk : kExitCheckFailed;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact polyhedral computations and extended-formulation checks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", pef_version());

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify-paper", "Run the fixed verification check list");
  verify->add_option("--seed", va.seed, "Seed for the random instances")->capture_default_str();
  verify->add_option("--n-max", va.n_max, "Largest city count for the AP checks")->capture_default_str();
  verify->add_option("--only", va.only, "Run only these check ids")->delimiter(',');
  verify->add_option("--format", va.format, "Report format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  verify->add_option("--out", va.out, "Write the report here instead of stdout");
  verify->add_flag("--timings", va.timings, "Include elapsed times in the JSON report");

  std::string proj_file, proj_out;
  std::vector<std::size_t> keep;
  auto* project = app.add_subcommand("project", "Project an H-polyhedron onto some coordinates");
  project->add_option("file", proj_file, "Polyhedron file")->required();
  project->add_option("--keep", keep, "Coordinates to keep (0-based)")->delimiter(',')->required();
  project->add_option("--out", proj_out, "Output file");

  std::string vert_file, vert_out;
  auto* vertices = app.add_subcommand("vertices", "Enumerate vertices, rays and lineality");
  vertices->add_option("file", vert_file, "Polyhedron file")->required();
  vertices->add_option("--out", vert_out, "Output file");

  EfArgs ea;
  auto* ef = app.add_subcommand("ef-check", "Check whether Q is an extended formulation of P");
  ef->add_option("q_file", ea.q_file, "Lifted polyhedron Q")->required();
  ef->add_option("p_file", ea.p_file, "Target polyhedron P")->required();
  ef->add_option("--x-coords", ea.x_coords, "Coordinates of x inside Q")->delimiter(',')->required();
  ef->add_option("--map", ea.map_file, "Linear map file for the image definition");
  ef->add_option("--definition", ea.definition, "Which definition to check")
      ->check(CLI::IsMember({"all", "standard", "exists", "map"}))
      ->capture_default_str();
  ef->add_option("--format", ea.format, "Report format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();

  std::size_t tsp_n = 0, tsp_cap = 0;
  std::string tsp_what, tsp_out;
  auto* tsp = app.add_subcommand("tsp", "Tours and the assignment polytope");
  tsp->add_option("n", tsp_n, "Number of cities")->required();
  tsp->add_option("what", tsp_what, "tours, ap or bijection")->required()->check(CLI::IsMember({"tours", "ap", "bijection"}));
  tsp->add_option("--cap", tsp_cap, "Largest n allowed for enumeration (default 8)");
  tsp->add_option("--out", tsp_out, "Output file");

  std::string graph_file, y_file, x_file, bridge_out;
  std::vector<std::string> alpha;
  auto* bridge = app.add_subcommand("bridge", "Optimize through the affine bridge of Bx + Cy = b");
  bridge->add_option("graph", graph_file, "Graph file")->required();
  bridge->add_option("--y-set", y_file, "Polyhedron Y")->required();
  bridge->add_option("--x-set", x_file, "Polyhedron X; compares against the direct LP");
  bridge->add_option("--alpha", alpha, "Objective over x, comma-separated")->delimiter(',')->required();
  bridge->add_option("--out", bridge_out, "Output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*verify) return cmd_verify_paper(va);
    if (*project) return cmd_project(proj_file, keep, proj_out);
    if (*vertices) return cmd_vertices(vert_file, vert_out);
    if (*ef) return cmd_ef_check(ea);
    if (*tsp) return cmd_tsp(tsp_n, tsp_what, tsp_cap, tsp_out);
    if (*bridge) return cmd_bridge(graph_file, y_file, x_file, alpha, bridge_out);
  } catch (const Failure& f) {
    std::cerr << "polyef: " << f.message << "\n";
    return f.code;
  }
  return kExitUsage;
}
