#include "wheelset/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "wheelset/depth.hpp"
#include "wheelset/gale.hpp"
#include "wheelset/graph_count.hpp"
#include "wheelset/io.hpp"
#include "wheelset/oracle.hpp"
#include "wheelset/wheel.hpp"

namespace wheelset {

namespace {

using nlohmann::json;

struct Ctx {
  uint64_t seed = 0;
  bool json_mode = false;
  bool oracle = false;
  std::ostream* out = nullptr;
  std::ostream* err = nullptr;
};

json point_json(const Point& p) {
  json a = json::array();
  for (size_t i = 0; i < p.dim(); ++i) a.push_back(to_string(p[i]));
  return a;
}

json points_json(const std::vector<Point>& pts) {
  json a = json::array();
  for (const Point& p : pts) a.push_back(point_json(p));
  return a;
}

json counts_json(const std::vector<Count>& v) {
  json a = json::array();
  for (const Count& c : v) a.push_back(c.str());
  return a;
}

json freqvec_json(const FrequencyVector& f) {
  json a = json::array();
  for (int x : f.f) a.push_back(std::to_string(x));
  return a;
}

json file_echo(const std::string& path, const PointFile& f) {
  json j;
  j["file"] = path;
  j["points"] = points_json(f.points);
  if (f.extra) j["w"] = point_json(*f.extra);
  return j;
}

std::string join_freqvec(const FrequencyVector& f) {
  std::ostringstream out;
  for (size_t i = 0; i < f.f.size(); ++i) {
    if (i) out << ' ';
    out << f.f[i];
  }
  return out.str();
}

std::string join_counts(const std::vector<Count>& v) {
  std::ostringstream out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out << ' ';
    out << v[i];
  }
  return out.str();
}

int emit(const Ctx& c, const json& j, const std::string& human) {
  if (c.json_mode)
    *c.out << j.dump(2) << "\n";
  else
    *c.out << human;
  return 0;
}

// Oracle verdicts: 0 with the agreement recorded, or 1 with both values on
// the error stream.
int emit_checked(const Ctx& c, json j, std::string human, bool agrees,
                 const std::string& got, const std::string& want) {
  if (c.oracle) {
    j["oracle_agrees"] = agrees;
    if (!agrees) {
      j["oracle_value"] = want;
      *c.err << "oracle disagreement: computed " << got << ", oracle says "
             << want << "\n";
      if (c.json_mode) *c.out << j.dump(2) << "\n";
      return 1;
    }
    human += "oracle agrees\n";
  }
  return emit(c, j, human);
}

void no_oracle(const Ctx& c, const char* sub) {
  if (c.oracle)
    throw ParseError(std::string("no oracle cross-check for ") + sub);
}

void require_planar(const PointFile& f, const char* sub) {
  const size_t d = f.points.empty() ? f.extra->dim() : f.points[0].dim();
  if (d != 2)
    throw ParseError(std::string(sub) + " needs planar input, got dimension " +
                     std::to_string(d));
}

const Point& require_w(const PointFile& f, const char* sub,
                       const char* role = "query point") {
  if (!f.extra)
    throw ParseError(std::string(sub) + " requires a w line marking the " +
                     role);
  return *f.extra;
}

void forbid_w(const PointFile& f, const char* sub) {
  if (f.extra)
    throw ParseError(std::string(sub) +
                     " takes plain points only; remove the w line");
}

ConoWheelSet wheel_of(const PointFile& f, const char* sub) {
  require_planar(f, sub);
  require_w(f, sub, "hub");
  std::vector<Point> pts = f.points;
  pts.push_back(*f.extra);
  return build_conowheel(pts, pts.size() - 1);
}

// oracle-side frequency vector: embracing counts enumerated from scratch,
// then inverted through the profile machinery
FrequencyVector oracle_frequency_vector(const ConoWheelSet& cw) {
  EmbraceProfile prof;
  prof.n = cw.n();
  for (size_t k = 3; k <= cw.n(); ++k)
    prof.counts.push_back(oracle_embrace(cw.hull, cw.hub, k));
  return frequency_from_embrace(prof);
}

FrequencyVector checked_frequency_vector(const std::vector<int>& entries) {
  std::vector<Int> as_int(entries.begin(), entries.end());
  const ValidationReport report = validate_frequency_vector(as_int);
  if (!report.ok) {
    std::string msg = "not a frequency vector";
    for (const std::string& v : report.violations) msg += "; " + v;
    throw ParseError(msg);
  }
  FrequencyVector f;
  f.f = entries;
  return f;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Count count_field(const json& v, const char* what) {
  try {
    if (v.is_string()) return Count(v.get<std::string>());
    if (v.is_number_integer()) return Count(v.get<long long>());
  } catch (const std::exception&) {
  }
  throw ParseError(std::string(what) + " must be a decimal count");
}

int cmd_freqvec(const Ctx& c, const std::string& path, int dim) {
  const PointFile f = read_point_file(path);
  if (dim > 0) {
    no_oracle(c, "freqvec --dim");
    const Point& w = require_w(f, "freqvec --dim");
    if (static_cast<int>(w.dim()) != dim)
      throw ParseError("file has dimension " + std::to_string(w.dim()) +
                       ", not the requested " + std::to_string(dim));
    const std::vector<Count> fv = frequency_vector_d(f.points, w);
    json j;
    j["command"] = "freqvec";
    j["dim"] = dim;
    j["freqvec"] = counts_json(fv);
    j["input"] = file_echo(path, f);
    return emit(c, j, "frequency vector: " + join_counts(fv) + "\n");
  }
  const ConoWheelSet cw = wheel_of(f, "freqvec");
  const FrequencyVector fv = frequency_vector(cw);
  json j;
  j["command"] = "freqvec";
  j["freqvec"] = freqvec_json(fv);
  j["input"] = file_echo(path, f);
  const std::string human = "frequency vector: " + join_freqvec(fv) + "\n";
  if (!c.oracle) return emit(c, j, human);
  const FrequencyVector want = oracle_frequency_vector(cw);
  return emit_checked(c, j, human, fv == want, join_freqvec(fv),
                      join_freqvec(want));
}

int cmd_necklace(const Ctx& c, const std::string& path) {
  const PointFile f = read_point_file(path);
  const ConoWheelSet cw = wheel_of(f, "necklace");
  const Necklace nk = necklace_of(cw);
  const std::string canonical = canonical_necklace(nk, true);
  json j;
  j["command"] = "necklace";
  j["necklace"] = nk.str();
  j["canonical"] = canonical;
  j["input"] = file_echo(path, f);
  const std::string human =
      "necklace: " + nk.str() + "\ncanonical: " + canonical + "\n";
  if (!c.oracle) return emit(c, j, human);
  const FrequencyVector got = frequency_vector_of_necklace(nk);
  const FrequencyVector want = oracle_frequency_vector(cw);
  return emit_checked(c, j, human, got == want, join_freqvec(got),
                      join_freqvec(want));
}

int cmd_realize(const Ctx& c, const std::vector<int>& freqvec,
                const std::string& beads) {
  ConoWheelSet cw;
  if (!freqvec.empty() && !beads.empty())
    throw ParseError("realize needs --freqvec or --necklace, not both");
  if (!freqvec.empty())
    cw = realize_frequency_vector(checked_frequency_vector(freqvec));
  else if (!beads.empty())
    cw = realize_necklace(Necklace::from_string(beads));
  else
    throw ParseError("realize needs --freqvec or --necklace");
  const FrequencyVector fv = frequency_vector(cw);
  json j;
  j["command"] = "realize";
  j["points"] = points_json(cw.hull);
  j["w"] = point_json(cw.hub);
  j["freqvec"] = freqvec_json(fv);
  const std::string human = to_point_file(cw.hull, cw.hub);
  if (!c.oracle) return emit(c, j, human);
  const FrequencyVector want = oracle_frequency_vector(cw);
  return emit_checked(c, j, human, fv == want, join_freqvec(fv),
                      join_freqvec(want));
}

int cmd_order_types(const Ctx& c, size_t n, bool no_reflection,
                    bool enumerate) {
  no_oracle(c, "order-types");
  const bool identify = !no_reflection;
  const Count total = count_order_types(n, identify);
  json j;
  j["command"] = "order-types";
  j["n"] = n;
  j["reflection_identified"] = identify;
  j["count"] = total.str();
  std::string human;
  if (enumerate) {
    const std::vector<std::string> types = enumerate_order_types(n, identify);
    j["order_types"] = types;
    for (const std::string& t : types) human += t + "\n";
  }
  human += "order types: " + total.str() + "\n";
  return emit(c, j, human);
}

int cmd_enumerate_freqvecs(const Ctx& c, size_t n) {
  no_oracle(c, "enumerate-freqvecs");
  const std::vector<FrequencyVector> all = enumerate_frequency_vectors(n);
  json j;
  j["command"] = "enumerate-freqvecs";
  j["n"] = n;
  j["count"] = count_frequency_vectors(n).str();
  json list = json::array();
  std::string human;
  for (const FrequencyVector& f : all) {
    list.push_back(freqvec_json(f));
    human += join_freqvec(f) + "\n";
  }
  j["freqvecs"] = list;
  human += "frequency vectors: " + std::to_string(all.size()) + "\n";
  return emit(c, j, human);
}

int cmd_count(const Ctx& c, const std::string& cls_name,
              const std::string& path, const std::vector<int>& freqvec) {
  const GraphClass cls = parse_graph_class(cls_name);
  if (path.empty() == freqvec.empty())
    throw ParseError("count needs a point file or --freqvec, not both");
  std::optional<ConoWheelSet> cw;
  json input;
  if (!path.empty()) {
    const PointFile f = read_point_file(path);
    cw = wheel_of(f, "count");
    input = file_echo(path, f);
  } else {
    input["freqvec"] = freqvec_json(checked_frequency_vector(freqvec));
  }
  const CountResult res =
      cw ? count(cls, *cw) : count(cls, checked_frequency_vector(freqvec));
  json j;
  j["command"] = "count";
  j["class"] = to_string(cls);
  j["count"] = res.value.str();
  j["convex_convention"] = res.convex_convention;
  j["input"] = input;
  std::string human = to_string(cls) + ": " + res.value.str() + "\n";
  if (res.convex_convention)
    human += "note: convex position, count follows the convex convention\n";
  if (!c.oracle) return emit(c, j, human);
  if (!cw) cw = realize_frequency_vector(checked_frequency_vector(freqvec));
  std::vector<Point> pts = cw->hull;
  pts.push_back(cw->hub);
  const Count want = oracle_graph_count(cls, pts);
  return emit_checked(c, j, human, res.value == want, res.value.str(),
                      want.str());
}

int cmd_embrace(const Ctx& c, const std::string& path, size_t k) {
  const PointFile f = read_point_file(path);
  const Point& w = require_w(f, "embrace");
  const Count got = embrace_count({f.points, w, k}, c.seed);
  json j;
  j["command"] = "embrace";
  j["k"] = k;
  j["embrace"] = got.str();
  j["seed"] = c.seed;
  j["input"] = file_echo(path, f);
  const std::string human = "embracing " + std::to_string(k) +
                            "-sets: " + got.str() + "\n";
  if (!c.oracle) return emit(c, j, human);
  const Count want = oracle_embrace(f.points, w, k);
  return emit_checked(c, j, human, got == want, got.str(), want.str());
}

int cmd_depth(const Ctx& c, const std::string& path) {
  const PointFile f = read_point_file(path);
  const Point& w = require_w(f, "depth");
  const Count got = simplicial_depth(f.points, w, c.seed);
  json j;
  j["command"] = "depth";
  j["depth"] = got.str();
  j["seed"] = c.seed;
  j["input"] = file_echo(path, f);
  const std::string human = "depth: " + got.str() + "\n";
  if (!c.oracle) return emit(c, j, human);
  const Count want = oracle_embrace(f.points, w, w.dim() + 1);
  return emit_checked(c, j, human, got == want, got.str(), want.str());
}

int cmd_crossing_stats(const Ctx& c, const std::string& path) {
  no_oracle(c, "crossing-stats");
  const PointFile f = read_point_file(path);
  require_planar(f, "crossing-stats");
  std::vector<Point> pts = f.points;
  if (f.extra) pts.push_back(*f.extra);
  const CrossingStats cs = crossing_stats(pts);
  json j;
  j["command"] = "crossing-stats";
  j["convex_quads"] = cs.convex_quads.str();
  j["concave_quads"] = cs.concave_quads.str();
  j["input"] = file_echo(path, f);
  return emit(c, j,
              "convex quads: " + cs.convex_quads.str() +
                  "\nconcave quads: " + cs.concave_quads.str() + "\n");
}

int cmd_reconstruct(const Ctx& c, const std::string& embrace_path,
                    const std::string& triangle_path) {
  no_oracle(c, "reconstruct");
  if (embrace_path.empty() == triangle_path.empty())
    throw ParseError("reconstruct needs --from-embrace or --from-triangles");
  if (!embrace_path.empty()) {
    const json in = read_json_file(embrace_path);
    if (!in.contains("n") || !in.contains("embr") || !in["embr"].is_array())
      throw ParseError("embrace profile needs fields n and embr");
    EmbraceProfile prof;
    prof.n = in["n"].get<size_t>();
    if (prof.n < 3 || in["embr"].size() != prof.n - 2)
      throw ParseError("embr must list the counts for k = 3..n");
    for (const json& v : in["embr"])
      prof.counts.push_back(count_field(v, "embr entry"));
    const FrequencyVector f = frequency_from_embrace(prof);
    json j;
    j["command"] = "reconstruct";
    j["freqvec"] = freqvec_json(f);
    return emit(c, j, "frequency vector: " + join_freqvec(f) + "\n");
  }
  const json in = read_json_file(triangle_path);
  if (!in.contains("n") || !in.contains("triples") || !in["triples"].is_array())
    throw ParseError("triangle family needs fields n and triples");
  TriangleFamily fam;
  fam.n = in["n"].get<size_t>();
  for (const json& t : in["triples"]) {
    if (!t.is_array() || t.size() != 3)
      throw ParseError("each triple must hold three point indices");
    std::array<int, 3> tri{t[0].get<int>(), t[1].get<int>(), t[2].get<int>()};
    std::sort(tri.begin(), tri.end());
    if (tri[0] < 0 || tri[2] >= static_cast<int>(fam.n) || tri[0] == tri[1] ||
        tri[1] == tri[2])
      throw ParseError("triple indices must be distinct and below n");
    fam.triples.insert(tri);
  }
  const std::string code = order_type_from_triangles(fam);
  json j;
  j["command"] = "reconstruct";
  j["necklace"] = code;
  return emit(c, j, "necklace: " + code + "\n");
}

int cmd_gale_dual(const Ctx& c, const std::string& path) {
  no_oracle(c, "gale-dual");
  const RatMatrix rows = read_matrix_file(path);
  std::vector<Point> pts;
  pts.reserve(rows.size());
  for (const std::vector<Rat>& r : rows) pts.emplace_back(r);
  const GaleConfiguration g = gale_dual(legalize(pts));
  json j;
  j["command"] = "gale-dual";
  j["n"] = g.primal.n();
  j["d"] = g.primal.d();
  json dual = json::array();
  std::string human;
  for (const Point& p : g.dual_points) {
    dual.push_back(point_json(p));
    human += to_string(p) + "\n";
  }
  j["dual"] = dual;
  j["input"]["file"] = path;
  j["input"]["points"] = points_json(pts);
  if (g.dual_points[0].dim() == 0)
    human = "empty dual: the points form a simplex\n";
  return emit(c, j, human);
}

int cmd_fvector(const Ctx& c, const std::string& path) {
  const PointFile f = read_point_file(path);
  forbid_w(f, "fvector");
  const FVector fv = f_vector(f.points, c.seed);
  json j;
  j["command"] = "fvector";
  j["fvector"] = counts_json(fv.entries);
  j["seed"] = c.seed;
  j["input"] = file_echo(path, f);
  const std::string human = "f-vector: " + join_counts(fv.entries) + "\n";
  if (!c.oracle) return emit(c, j, human);
  std::vector<Count> want = oracle_fvector(f.points);
  want.insert(want.begin(), Count(1));
  return emit_checked(c, j, human, fv.entries == want,
                      join_counts(fv.entries), join_counts(want));
}

int cmd_facets(const Ctx& c, const std::string& path) {
  const PointFile f = read_point_file(path);
  forbid_w(f, "facets");
  const Count got = facet_count(f.points, c.seed);
  json j;
  j["command"] = "facets";
  j["facet_count"] = got.str();
  j["seed"] = c.seed;
  j["input"] = file_echo(path, f);
  const std::string human = "facets: " + got.str() + "\n";
  if (!c.oracle) return emit(c, j, human);
  const Count want(oracle_facets(f.points).size());
  return emit_checked(c, j, human, got == want, got.str(), want.str());
}

int cmd_minimal_embracing(const Ctx& c, const std::string& path) {
  no_oracle(c, "minimal-embracing");
  const PointFile f = read_point_file(path);
  require_planar(f, "minimal-embracing");
  std::vector<Point> pts = f.points;
  if (f.extra)
    for (Point& p : pts) p = p - *f.extra;
  const DirectedMultiset ms = project_to_circle(pts);
  json j;
  j["command"] = "minimal-embracing";
  j["minimal_embracing"] = minimal_embracing_count(ms).str();
  j["minimal_pairs"] = minimal_pair_count(ms).str();
  j["minimal_triangles"] = minimal_triangle_count(ms).str();
  j["proper_triangles"] = proper_triangle_count(ms).str();
  json dirs = json::array();
  for (const DirectionStat& st : ms.directions) {
    json d;
    d["h"] = point_json(st.h);
    d["m"] = st.m;
    d["o"] = st.o;
    d["l"] = st.l;
    d["r"] = st.r;
    dirs.push_back(d);
  }
  j["directions"] = dirs;
  j["input"] = file_echo(path, f);
  return emit(c, j,
              "minimal embracing: " + minimal_embracing_count(ms).str() +
                  "\npairs: " + minimal_pair_count(ms).str() +
                  "\ntriangles: " + minimal_triangle_count(ms).str() +
                  "\nproper triangles: " + proper_triangle_count(ms).str() +
                  "\n");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Ctx ctx;
  ctx.out = &out;
  ctx.err = &err;

  CLI::App app{"Exact invariants of wheel sets, embracing counts, and small polytopes"};
  app.require_subcommand(1);
  app.add_option("--seed", ctx.seed, "Seed for the generic flat selection");
  app.add_flag("--json", ctx.json_mode, "Emit one JSON object");
  app.add_flag("--oracle", ctx.oracle,
               "Recompute through the brute-force oracle and compare");

  std::string file;
  int dim = 0;
  std::vector<int> freqvec;
  std::string beads;
  size_t n = 0;
  bool no_reflection = false;
  bool enumerate = false;
  std::string cls_name;
  size_t k = 0;
  std::string embrace_path, triangle_path;

  CLI::App* s_freqvec = app.add_subcommand(
      "freqvec", "Frequency vector of a conowheel file (w line = hub)");
  s_freqvec->add_option("file", file)->required();
  s_freqvec->add_option("--dim", dim,
                        "Use the d-dimensional tuple definition instead");

  CLI::App* s_necklace = app.add_subcommand(
      "necklace", "Bead sequence and canonical order type of a conowheel file");
  s_necklace->add_option("file", file)->required();

  CLI::App* s_realize = app.add_subcommand(
      "realize", "Rational conowheel set from a frequency vector or necklace");
  s_realize->add_option("--freqvec", freqvec, "Frequency vector entries");
  s_realize->add_option("--necklace", beads, "Bead string of length 2n");

  CLI::App* s_order = app.add_subcommand(
      "order-types", "Number of conowheel order types with n hull points");
  s_order->add_option("--n", n)->required();
  s_order->add_flag("--no-reflection", no_reflection,
                    "Count reflections separately");
  s_order->add_flag("--enumerate", enumerate,
                    "List one canonical necklace per order type");

  CLI::App* s_enum = app.add_subcommand(
      "enumerate-freqvecs", "All frequency vectors of length n");
  s_enum->add_option("--n", n)->required();

  CLI::App* s_count = app.add_subcommand(
      "count", "Crossing-free structures of a class on a conowheel set");
  s_count->add_option("--class", cls_name, "Graph class name")->required();
  s_count->add_option("file", file);
  s_count->add_option("--freqvec", freqvec, "Frequency vector instead of points");

  CLI::App* s_embrace = app.add_subcommand(
      "embrace", "Number of k-subsets embracing the marked query point");
  s_embrace->add_option("--k", k)->required();
  s_embrace->add_option("file", file)->required();

  CLI::App* s_depth = app.add_subcommand(
      "depth", "Simplicial depth of the marked query point");
  s_depth->add_option("file", file)->required();

  CLI::App* s_cross = app.add_subcommand(
      "crossing-stats", "Convex and concave quadruples of a planar file");
  s_cross->add_option("file", file)->required();

  CLI::App* s_recon = app.add_subcommand(
      "reconstruct", "Invert an embrace profile or a triangle family");
  s_recon->add_option("--from-embrace", embrace_path,
                      "JSON file {\"n\": N, \"embr\": [counts for k=3..n]}");
  s_recon->add_option("--from-triangles", triangle_path,
                      "JSON file {\"n\": N, \"triples\": [[a,b,c]...]}, 0-based");

  CLI::App* s_gale = app.add_subcommand(
      "gale-dual", "Exact orthogonal dual of a point matrix (one row per point)");
  s_gale->add_option("file", file)->required();

  CLI::App* s_fvec = app.add_subcommand(
      "fvector", "Face numbers of the simplicial hull of a point file");
  s_fvec->add_option("file", file)->required();

  CLI::App* s_facets = app.add_subcommand(
      "facets", "Facet count of the simplicial hull of a point file");
  s_facets->add_option("file", file)->required();

  CLI::App* s_minimal = app.add_subcommand(
      "minimal-embracing",
      "Minimal embracing subsets of a planar direction multiset");
  s_minimal->add_option("file", file)->required();

  for (CLI::App* s : app.get_subcommands({})) s->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (s_freqvec->parsed()) return cmd_freqvec(ctx, file, dim);
    if (s_necklace->parsed()) return cmd_necklace(ctx, file);
    if (s_realize->parsed()) return cmd_realize(ctx, freqvec, beads);
    if (s_order->parsed()) return cmd_order_types(ctx, n, no_reflection, enumerate);
    if (s_enum->parsed()) return cmd_enumerate_freqvecs(ctx, n);
    if (s_count->parsed()) return cmd_count(ctx, cls_name, file, freqvec);
    if (s_embrace->parsed()) return cmd_embrace(ctx, file, k);
    if (s_depth->parsed()) return cmd_depth(ctx, file);
    if (s_cross->parsed()) return cmd_crossing_stats(ctx, file);
    if (s_recon->parsed()) return cmd_reconstruct(ctx, embrace_path, triangle_path);
    if (s_gale->parsed()) return cmd_gale_dual(ctx, file);
    if (s_fvec->parsed()) return cmd_fvector(ctx, file);
    if (s_facets->parsed()) return cmd_facets(ctx, file);
    if (s_minimal->parsed()) return cmd_minimal_embracing(ctx, file);
    err << "no subcommand\n";
    return 2;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const BoundError& e) {
    err << "bound exceeded: " << e.what() << "\n";
    return 4;
  } catch (const Error& e) {
    err << "degenerate input: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace wheelset
