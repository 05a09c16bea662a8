// Command line front end: verification suite, bulk field sampling, strain
// profiles, jump solving and report export for the self-similar three-variant
// microstructure library.
//
// Exit codes: 0 success, 1 usage or configuration error, 2 verification
// failure (including "no solution" answers from the jump solver).

#include "tristar/analysis.hpp"
#include "tristar/jump.hpp"
#include "tristar/landau.hpp"
#include "tristar/sampler.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

using nlohmann::ordered_json;
using namespace tristar;

std::string fmt(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  size_t start = 0;
  while (true) {
    size_t pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return parts;
}

struct RunConfig {
  std::string L = "1";
  std::string epsilon = "1";
  int kmax = 8;
  int grid = 256;
  std::string format = "csv";
  std::string rigid;
  std::string params_file;
  std::string backend;
  std::string out;

  // parsed forms
  Rational length{1};
  Rational eps{1};
  RigidMotion rigid_motion;
  LandauParams landau;
};

void resolve(RunConfig& cfg) {
  cfg.length = parse_rational(cfg.L);
  cfg.eps = parse_rational(cfg.epsilon);
  if (!cfg.rigid.empty()) {
    auto parts = split(cfg.rigid, ',');
    if (parts.size() != 3) throw std::invalid_argument("--rigid wants three components z1,z2,z3");
    cfg.rigid_motion.spin = parse_qsqrt3(parts[0]);
    cfg.rigid_motion.shift = {parse_qsqrt3(parts[1]), parse_qsqrt3(parts[2])};
  }
  if (!cfg.params_file.empty()) cfg.landau = load_landau_params(cfg.params_file);
  validate(cfg.landau);
  if (cfg.kmax < 0) throw std::invalid_argument("--kmax must be >= 0");
  if (cfg.grid < 2) throw std::invalid_argument("--grid must be >= 2");
}

DisplacementField make_field(const RunConfig& cfg) {
  Tiling tiling({cfg.length});
  DisplacementField field(std::move(tiling), cfg.eps);
  if (!cfg.rigid_motion.is_zero()) return field.with_rigid_motion(cfg.rigid_motion);
  return field;
}

void emit_output(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(cfg.out, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open output file: " + cfg.out);
  file << text;
  if (!file) throw std::runtime_error("write failed: " + cfg.out);
}

ordered_json config_json(const RunConfig& cfg, Backend backend) {
  ordered_json j;
  j["L"] = cfg.length.str();
  j["epsilon"] = cfg.eps.str();
  j["kmax"] = cfg.kmax;
  j["grid"] = cfg.grid;
  j["format"] = cfg.format;
  j["backend"] = backend == Backend::Exact ? "exact" : "float";
  j["rigid"] = {cfg.rigid_motion.spin.str(), cfg.rigid_motion.shift.x.str(),
                cfg.rigid_motion.shift.y.str()};
  j["landau"] = {{"A1", cfg.landau.A1}, {"A", cfg.landau.A}, {"B", cfg.landau.B},
                 {"C", cfg.landau.C},   {"T", cfg.landau.T}, {"Tc", cfg.landau.Tc}};
  return j;
}

struct CheckRow {
  std::string name;
  std::string family;
  int k = 0;
  bool pass = false;
  std::string residual;
};

void compat_rows(const DisplacementField& field, const RunConfig& cfg, Mutation mutation,
                 Backend backend, std::vector<CheckRow>& rows) {
  CompatReport report = verify_tiling(field, cfg.kmax, mutation, backend);
  for (const CompatCheck& c : report.checks) {
    const char* kind = interface_kind_name(c.id.kind);
    rows.push_back({"jump-det", kind, c.id.gen, c.det_ok, c.residual});
    std::string rec =
        backend == Backend::Exact ? (c.reconstruction_ok ? "0" : "nonzero") : c.residual;
    rows.push_back({"jump-rank-one", kind, c.id.gen, c.reconstruction_ok, rec});
  }
}

void trace_rows(const DisplacementField& field, const RunConfig& cfg, Backend backend,
                std::vector<CheckRow>& rows) {
  const std::array<Rational, 5> params = {Rational(0), Rational(1, 4), Rational(1, 2),
                                          Rational(3, 4), Rational(1)};
  const std::array<const char*, 5> labels = {"trace@0", "trace@1/4", "trace@1/2", "trace@3/4",
                                             "trace@1"};
  for (int k = 0; k <= cfg.kmax; ++k)
    for (InterfaceKind kind : kInterfaceKinds)
      for (size_t i = 0; i < params.size(); ++i) {
        InterfaceTrace tr = field.interface_trace({kind, k}, params[i]);
        CheckRow row{labels[i], interface_kind_name(kind), k, false, "0"};
        if (backend == Backend::Exact) {
          QVec d1 = tr.from_upper - tr.from_lower;
          QVec d2 = tr.closed_form - tr.from_lower;
          row.pass = d1.x.is_zero() && d1.y.is_zero() && d2.x.is_zero() && d2.y.is_zero();
          if (!row.pass) {
            const QSqrt3& bad = !d1.x.is_zero()   ? d1.x
                                : !d1.y.is_zero() ? d1.y
                                : !d2.x.is_zero() ? d2.x
                                                  : d2.y;
            row.residual = bad.str();
          }
        } else {
          DVec lo = to_double(tr.from_lower);
          DVec up = to_double(tr.from_upper);
          DVec cf = to_double(tr.closed_form);
          double scale = std::max({1.0, std::abs(lo.x), std::abs(lo.y)});
          double res = std::max({std::abs(up.x - lo.x), std::abs(up.y - lo.y),
                                 std::abs(cf.x - lo.x), std::abs(cf.y - lo.y)});
          row.pass = res <= 1e-12 * scale;
          row.residual = fmt(res);
        }
        rows.push_back(row);
      }
}

void well_rows(const DisplacementField& field, const RunConfig& cfg,
               std::vector<CheckRow>& rows) {
  auto wells = strain_wells<QSqrt3>(field.eps());
  for (int k = 0; k <= cfg.kmax; ++k)
    for (Family f : kFamilies) {
      bool ok = sym_part(field.gradient({f, k})) == wells[well_index(f) - 1];
      rows.push_back(
          {"well-inclusion", std::string(1, family_letter(f)), k, ok, ok ? "0" : "nonzero"});
    }
}

void landau_rows(const RunConfig& cfg, std::vector<CheckRow>& rows) {
  double eps_star = transformation_strain(cfg.landau);
  auto wells = strain_wells<double>(eps_star);
  for (int i = 0; i < 3; ++i) {
    auto e = linear_strains(wells[i]);
    double psi = landau_energy(e[0], e[1], e[2], cfg.landau);
    rows.push_back({"landau-well-depth", std::to_string(i + 1), 0, std::abs(psi) <= 1e-12,
                    fmt(std::abs(psi))});
  }
}

void fraction_rows(const DisplacementField& field, const RunConfig& cfg,
                   std::vector<CheckRow>& rows) {
  PhaseFractionReport pf = phase_fractions(field, std::max(2, cfg.kmax));
  double tol = 1e-9 * std::max(1.0, pf.disk_area);
  for (int i = 0; i < 3; ++i) {
    double res = std::abs(pf.areas[i] - pf.expected());
    rows.push_back({"phase-fraction", std::to_string(i + 1), pf.kmax, res <= tol, fmt(res)});
  }
}

ordered_json checks_json(const std::vector<CheckRow>& rows) {
  ordered_json arr = ordered_json::array();
  for (const CheckRow& r : rows)
    arr.push_back({{"name", r.name},
                   {"family", r.family},
                   {"k", r.k},
                   {"status", r.pass ? "pass" : "fail"},
                   {"residual", r.residual}});
  return arr;
}

ordered_json summaries_json(const DisplacementField& field, const RunConfig& cfg,
                            bool extended) {
  ordered_json s;
  PhaseFractionReport pf = phase_fractions(field, std::max(2, cfg.kmax));
  s["phase_fractions"] = {{"kmax", pf.kmax},
                          {"areas", pf.areas},
                          {"expected_each", pf.expected()},
                          {"disk_area", pf.disk_area}};
  s["area_ratio"] = area_ratio_generation01(field.tiling());
  QVec o = field.origin_value();
  s["origin_value"] = {{"exact", {o.x.str(), o.y.str()}},
                       {"value", {o.x.to_double(), o.y.to_double()}}};
  ordered_json lp = ordered_json::array();
  for (int p = 1; p <= 4; ++p) {
    LpNorm n = skew_lp_norm(field, p, std::max(1, cfg.kmax));
    lp.push_back(
        {{"p", p}, {"kmax", n.kmax}, {"partial", n.partial}, {"tail_bound", n.tail_bound}});
  }
  s["lp_norms"] = lp;
  GrowthReport g = skew_growth(field, std::max(1, cfg.kmax));
  s["growth"] = {{"kmax", g.kmax}, {"slope", g.slope},
                 {"c1", g.c1},     {"c2", g.c2},
                 {"bounds_hold", g.bounds_hold}, {"shell_max", g.shell_max}};
  if (extended) {
    Tiling::AreaCheck ac = field.tiling().area_check(cfg.kmax);
    s["tiling_area"] = {{"kmax", ac.kmax},   {"kite_partial", ac.kite_partial},
                        {"clipped", ac.clipped}, {"tail", ac.tail},
                        {"total", ac.total}, {"disk", ac.disk},
                        {"defect", ac.defect}};
    s["max_displacement"] = max_displacement(field);
    KiteMidpointMarker m = kite_midpoint_marker(field.tiling(), 2);
    s["kite_marker"] = {{"generation", 2},
                        {"point_exact", {m.point.x.str(), m.point.y.str()}},
                        {"point", {m.point.x.to_double(), m.point.y.to_double()}},
                        {"region", m.region.str()},
                        {"distance", m.distance}};
    s["landau"] = {{"transformation_strain", transformation_strain(cfg.landau)},
                   {"upper_transition_temperature", upper_transition_temperature(cfg.landau)},
                   {"energy_offset", energy_offset(cfg.landau)}};
  }
  return s;
}

std::string scalar_text(const ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

// Summaries as "info" rows so the csv carries the same numbers as the json.
void append_flattened(const ordered_json& summaries, std::string& out) {
  ordered_json flat = summaries.flatten();
  for (const auto& [path, value] : flat.items()) {
    std::string name = "summary" + path;
    for (char& c : name)
      if (c == '/') c = '.';
    out += name + ",,,info," + scalar_text(value) + "\n";
  }
}

int run_verify(const RunConfig& cfg, Backend backend, Mutation mutation, bool extended) {
  DisplacementField field = make_field(cfg);
  std::vector<CheckRow> rows;
  compat_rows(field, cfg, mutation, backend, rows);
  trace_rows(field, cfg, backend, rows);
  well_rows(field, cfg, rows);
  landau_rows(cfg, rows);
  fraction_rows(field, cfg, rows);

  int failures = 0;
  for (const CheckRow& r : rows)
    if (!r.pass) ++failures;

  ordered_json summaries = summaries_json(field, cfg, extended);
  std::string text;
  if (cfg.format == "json") {
    ordered_json doc;
    doc["config"] = config_json(cfg, backend);
    doc["checks"] = checks_json(rows);
    doc["summaries"] = summaries;
    text = doc.dump(2) + "\n";
  } else {
    text = "name,family,k,status,residual\n";
    for (const CheckRow& r : rows)
      text += r.name + "," + r.family + "," + std::to_string(r.k) + "," +
              (r.pass ? "pass" : "fail") + "," + r.residual + "\n";
    append_flattened(summaries, text);
  }
  emit_output(cfg, text);

  std::cerr << (extended ? "report" : "verify") << ": " << rows.size() << " checks, "
            << failures << " failure" << (failures == 1 ? "" : "s") << "\n";
  if (failures > 0) {
    int shown = 0;
    for (const CheckRow& r : rows)
      if (!r.pass && shown++ < 8)
        std::cerr << "  FAIL " << r.name << " " << r.family << " k=" << r.k
                  << " residual=" << r.residual << "\n";
    return 2;
  }
  return 0;
}

int run_grid(const RunConfig& cfg, Backend backend) {
  if (backend == Backend::Exact)
    throw std::invalid_argument(
        "grid sampling is double precision; exact arithmetic applies to verify, profile and "
        "jump");
  DisplacementField field = make_field(cfg);
  FieldSampler sampler(field);
  std::vector<GridRow> rows = sample_grid(sampler, cfg.grid);

  std::string text;
  if (cfg.format == "json") {
    ordered_json doc;
    doc["config"] = config_json(cfg, backend);
    doc["columns"] = {"x", "y", "u1", "u2", "well", "eps1", "eps2", "eps3"};
    ordered_json data = ordered_json::array();
    for (const GridRow& r : rows)
      data.push_back({r.x, r.y, r.u1, r.u2, r.well, r.eps1, r.eps2, r.eps3});
    doc["rows"] = std::move(data);
    text = doc.dump(2) + "\n";
  } else {
    text = "x,y,u1,u2,well,eps1,eps2,eps3\n";
    for (const GridRow& r : rows)
      text += fmt(r.x) + "," + fmt(r.y) + "," + fmt(r.u1) + "," + fmt(r.u2) + "," +
              std::to_string(r.well) + "," + fmt(r.eps1) + "," + fmt(r.eps2) + "," +
              fmt(r.eps3) + "\n";
  }
  emit_output(cfg, text);
  return 0;
}

int run_profile(const RunConfig& cfg, Backend backend, const std::string& from_str,
                const std::string& to_str, int samples) {
  auto fp = split(from_str, ',');
  auto tp = split(to_str, ',');
  if (fp.size() != 2 || tp.size() != 2)
    throw std::invalid_argument("--from/--to want coordinates x,y");
  QVec from{parse_qsqrt3(fp[0]), parse_qsqrt3(fp[1])};
  QVec to{parse_qsqrt3(tp[0]), parse_qsqrt3(tp[1])};

  DisplacementField field = make_field(cfg);
  std::vector<ProfileRow> rows;
  if (backend == Backend::Exact) {
    rows = sample_profile(field, from, to, samples);
  } else {
    FieldSampler sampler(field);
    rows = sample_profile(sampler, to_double(from), to_double(to), samples);
  }

  std::string text;
  if (cfg.format == "json") {
    ordered_json doc;
    doc["config"] = config_json(cfg, backend);
    doc["segment"] = {{"from", {from.x.str(), from.y.str()}},
                      {"to", {to.x.str(), to.y.str()}},
                      {"samples", samples}};
    doc["columns"] = {"s", "x", "y", "eps2", "eps3", "eps1", "e1", "e2", "e3"};
    ordered_json data = ordered_json::array();
    for (const ProfileRow& r : rows)
      data.push_back({r.s, r.x, r.y, r.eps2, r.eps3, r.eps1, r.e1, r.e2, r.e3});
    doc["rows"] = std::move(data);
    text = doc.dump(2) + "\n";
  } else {
    text = "s,x,y,eps2,eps3,eps1,e1,e2,e3\n";
    for (const ProfileRow& r : rows)
      text += fmt(r.s) + "," + fmt(r.x) + "," + fmt(r.y) + "," + fmt(r.eps2) + "," +
              fmt(r.eps3) + "," + fmt(r.eps1) + "," + fmt(r.e1) + "," + fmt(r.e2) + "," +
              fmt(r.e3) + "\n";
  }
  emit_output(cfg, text);
  return 0;
}

int run_jump(const RunConfig& cfg, int plus, int minus, const std::string& normal_str,
             bool enumerate) {
  if (enumerate == !normal_str.empty())
    throw std::invalid_argument("jump wants exactly one of --normal or --enumerate");
  QSqrt3 eps{cfg.eps};
  auto wells = strain_wells<QSqrt3>(eps);

  std::vector<JumpSolution> sols;
  if (enumerate) {
    sols = enumerate_jumps(wells[plus - 1], wells[minus - 1], eps);
  } else {
    auto np = split(normal_str, ',');
    if (np.size() != 2) throw std::invalid_argument("--normal wants components n1,n2");
    QVec n{parse_qsqrt3(np[0]), parse_qsqrt3(np[1])};
    sols.push_back(solve_jump(wells[plus - 1], QMat{}, wells[minus - 1], n, eps));
  }

  std::string text;
  if (cfg.format == "json") {
    ordered_json doc;
    doc["config"] = config_json(cfg, Backend::Exact);
    doc["wells"] = {{"plus", plus}, {"minus", minus}};
    ordered_json arr = ordered_json::array();
    for (const JumpSolution& s : sols)
      arr.push_back(
          {{"spin", {{"exact", s.spin.str()}, {"value", s.spin.to_double()}}},
           {"amplitude",
            {{"exact", {s.amplitude.x.str(), s.amplitude.y.str()}},
             {"value", {s.amplitude.x.to_double(), s.amplitude.y.to_double()}}}},
           {"normal",
            {{"exact", {s.normal.x.str(), s.normal.y.str()}},
             {"value", {s.normal.x.to_double(), s.normal.y.to_double()}}}}});
    doc["solutions"] = std::move(arr);
    text = doc.dump(2) + "\n";
  } else {
    text = "spin,a1,a2,n1,n2\n";
    for (const JumpSolution& s : sols)
      text += fmt(s.spin.to_double()) + "," + fmt(s.amplitude.x.to_double()) + "," +
              fmt(s.amplitude.y.to_double()) + "," + fmt(s.normal.x.to_double()) + "," +
              fmt(s.normal.y.to_double()) + "\n";
  }
  emit_output(cfg, text);
  return 0;
}

int run_areas(const RunConfig& cfg) {
  DisplacementField field = make_field(cfg);
  const Tiling& tiling = field.tiling();
  Tiling::AreaCheck ac = tiling.area_check(cfg.kmax);
  PhaseFractionReport pf = phase_fractions(field, std::max(2, cfg.kmax));

  ordered_json body;
  body["tiling_area"] = {{"kmax", ac.kmax},   {"kite_partial", ac.kite_partial},
                         {"clipped", ac.clipped}, {"tail", ac.tail},
                         {"total", ac.total}, {"disk", ac.disk},
                         {"defect", ac.defect}};
  body["kite_area_total_exact"] = tiling.kite_area_total().str();
  body["phase_fractions"] = {{"kmax", pf.kmax},
                             {"areas", pf.areas},
                             {"expected_each", pf.expected()},
                             {"disk_area", pf.disk_area}};
  body["area_ratio_generation01"] = area_ratio_generation01(tiling);

  std::string text;
  if (cfg.format == "json") {
    ordered_json doc;
    doc["config"] = config_json(cfg, Backend::Exact);
    for (const auto& [key, value] : body.items()) doc[key] = value;
    text = doc.dump(2) + "\n";
  } else {
    text = "name,value\n";
    ordered_json flat = body.flatten();
    for (const auto& [path, value] : flat.items()) {
      std::string name = path.substr(1);
      for (char& c : name)
        if (c == '/') c = '.';
      text += name + "," + scalar_text(value) + "\n";
    }
  }
  emit_output(cfg, text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact construction, verification and sampling of a self-similar three-variant "
      "martensitic microstructure on a disk"};
  app.require_subcommand(1);

  RunConfig cfg;
  app.add_option("--L", cfg.L, "Length unit (exact rational: 1, 7/100, 0.07)")
      ->capture_default_str();
  app.add_option("--epsilon", cfg.epsilon, "Transformation strain (exact rational)")
      ->capture_default_str();
  app.add_option("--kmax", cfg.kmax, "Deepest generation checked / summed")
      ->capture_default_str();
  app.add_option("--grid", cfg.grid, "Grid resolution per side")->capture_default_str();
  app.add_option("--format", cfg.format, "Output encoding")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--rigid", cfg.rigid,
                 "Superpose a rigid motion z1,z2,z3 (spin, shift); components are "
                 "a+b*sqrt(3) literals such as 3r3/2");
  app.add_option("--params", cfg.params_file, "Landau coefficient file (key = value lines)");
  app.add_option("--backend", cfg.backend,
                 "Arithmetic backend; defaults to exact for verify/jump/report and float "
                 "for grid/profile")
      ->check(CLI::IsMember({"exact", "float"}));
  app.add_option("--out", cfg.out, "Write output to this file instead of stdout");

  auto* verify = app.add_subcommand(
      "verify", "Run the compatibility / continuity / well / fraction check suite");
  std::string mutate;
  verify->add_option("--mutate", mutate, "Fault injection hook")
      ->check(CLI::IsMember({"skew-B0"}));

  auto* grid = app.add_subcommand(
      "grid", "Dump displacement and strains over an n x n grid of the bounding square");

  auto* profile = app.add_subcommand("profile", "Strain profile along a segment");
  std::string from_str, to_str;
  int samples = 256;
  profile->add_option("--from", from_str, "Segment start x,y")->required();
  profile->add_option("--to", to_str, "Segment end x,y")->required();
  profile->add_option("--samples", samples, "Points on the segment")->capture_default_str();

  auto* jump =
      app.add_subcommand("jump", "Solve the rank-one jump between two variant wells");
  int plus = 0, minus = 0;
  std::string normal_str;
  bool enumerate = false;
  jump->add_option("--plus", plus, "Variant on the + side")->required()->check(CLI::Range(1, 3));
  jump->add_option("--minus", minus, "Variant on the - side")
      ->required()
      ->check(CLI::Range(1, 3));
  jump->add_option("--normal", normal_str, "Prescribed unit normal n1,n2");
  jump->add_flag("--enumerate", enumerate, "Solve for both admissible normals instead");

  auto* areas = app.add_subcommand(
      "areas", "Area audit: kite sums, clipped regions, tail, fractions, coverage ratio");
  auto* report = app.add_subcommand("report", "Verify checks plus every summary");

  for (CLI::App* sub : {verify, grid, profile, jump, areas, report}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    resolve(cfg);
    Backend check_backend = cfg.backend == "float" ? Backend::Float : Backend::Exact;
    Backend sample_backend = cfg.backend == "exact" ? Backend::Exact : Backend::Float;
    if (verify->parsed()) {
      Mutation m = mutate.empty() ? Mutation::None : Mutation::NegateSkewB0;
      return run_verify(cfg, check_backend, m, false);
    }
    if (grid->parsed()) return run_grid(cfg, sample_backend);
    if (profile->parsed()) return run_profile(cfg, sample_backend, from_str, to_str, samples);
    if (jump->parsed()) return run_jump(cfg, plus, minus, normal_str, enumerate);
    if (areas->parsed()) return run_areas(cfg);
    if (report->parsed()) return run_verify(cfg, check_backend, Mutation::None, true);
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
