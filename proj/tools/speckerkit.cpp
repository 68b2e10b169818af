// speckerkit: batch analysis of three-measurement pairwise statistics.
//
// Subcommands: check, vertices, decompose, fine, ontmax, relabel, quantum-scan.
// All IO is UTF-8 JSON on stdin/stdout; rationals are "p/q" strings in lowest
// terms. Output is byte-identical for identical inputs and seed.
// Exit codes: 0 success, 2 validation or parse failure, 3 infeasible result,
// 1 internal error. SPECKER_KIT_LOG in {quiet, info, debug} controls stderr.

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "specker/json_io.hpp"
#include "specker/quantum.hpp"

using namespace specker;

namespace {

enum class LogLevel { Quiet = 0, Info = 1, Debug = 2 };

LogLevel log_level() {
  const char* env = std::getenv("SPECKER_KIT_LOG");
  if (!env) return LogLevel::Quiet;
  std::string v(env);
  if (v == "debug") return LogLevel::Debug;
  if (v == "info") return LogLevel::Info;
  return LogLevel::Quiet;
}

void log_info(const std::string& msg) {
  if (log_level() >= LogLevel::Info) std::cerr << "[speckerkit] " << msg << "\n";
}

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open input file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse_json(const std::string& path) {
  std::string text = slurp(path);
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("JSON parse failure: ") + e.what());
  }
}

void emit(const Json& report) { std::cout << report.dump(2) << "\n"; }

// Fixed-format float for byte-stable output.
Json num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return Json::parse(buf);
}

Json vec3_to_json(const quantum::Vec3& v) {
  return Json::array({num(v[0]), num(v[1]), num(v[2])});
}

int cmd_check(const std::string& input, const std::vector<std::string>& eta0s) {
  CorrelationVector cv = correlation_from_json(parse_json(input));
  Json report;
  report["command"] = "check";
  report["input"] = to_json(cv);
  ValidationReport vr = validate(cv);
  report["validation"] = to_json(vr);
  if (!vr.ok()) {
    emit(report);
    return 2;
  }
  SixParams s = to_six_params(cv);
  report.update(to_json(s));
  RValues r = evaluate(s);
  report["R"] = to_json(r);
  Json ks = Json::array();
  for (int i : check_ks(r)) ks.push_back(inequality_label(i));
  report["ks_violations"] = ks;
  FacetReport facets = in_ks_polytope(s);
  report["ks_polytope"] = Json{{"inside", facets.inside}, {"violated_facets", facets.violated}};
  Json nc = Json::array();
  for (const std::string& text : eta0s) {
    auto eta0 = parse_rational(text);
    if (!eta0) throw ParseError("--eta0: malformed rational '" + text + "'");
    Json row;
    row["eta0"] = rational_to_json(*eta0);
    Json viol = Json::array();
    for (int i : check_nc(r, *eta0)) viol.push_back(inequality_label(i));
    row["violations"] = viol;
    nc.push_back(row);
  }
  report["nc"] = nc;
  emit(report);
  return 0;
}

int cmd_vertices() {
  Json report;
  report["command"] = "vertices";
  Json arr = Json::array();
  for (const auto& v : vertices()) arr.push_back(to_json(v));
  report["vertices"] = arr;
  emit(report);
  return 0;
}

int cmd_decompose(const std::string& input) {
  CorrelationVector cv = correlation_from_json(parse_json(input));
  Json report;
  report["command"] = "decompose";
  report["input"] = to_json(cv);
  ValidationReport vr = validate(cv);
  report["validation"] = to_json(vr);
  if (!vr.ok()) {
    emit(report);
    return 2;
  }
  report.update(to_json(decompose(cv)));
  report["extremal"] = is_extremal(cv);
  emit(report);
  return 0;
}

int cmd_fine(const std::string& input) {
  Json j = parse_json(input);
  Json report;
  report["command"] = "fine";
  MarginalScenario sc;
  JointResult result;
  if (j.contains("scenario")) {
    sc = scenario_from_json(j.at("scenario"));
    ScenarioStats stats = stats_from_json(j.at("stats"), sc);
    report["scenario"] = to_json(sc);
    report["stats"] = to_json(stats);
    result = find_joint(sc, stats);
  } else {
    CorrelationVector cv = correlation_from_json(j);
    validate_or_throw(cv);
    sc = specker_scenario();
    report["input"] = to_json(cv);
    result = find_joint(cv);
  }
  report["feasible"] = result.feasible;
  if (result.feasible) {
    report["joint"] = to_json(result.joint, sc);
    emit(report);
    return 0;
  }
  Json cert = Json::array();
  for (const Rat& y : result.certificate) cert.push_back(rational_to_json(y));
  report["certificate"] = cert;
  emit(report);
  return 3;
}

int cmd_ontmax(int which, const std::vector<std::string>& etas) {
  Json report;
  report["command"] = "ontmax";
  report["R"] = inequality_label(which);
  std::vector<Rat> grid;
  if (etas.empty()) {
    for (int k = 0; k <= 20; ++k) grid.emplace_back(k, 20);
  } else {
    for (const std::string& text : etas) {
      auto eta = parse_rational(text);
      if (!eta || *eta < 0 || *eta > 1) {
        throw ParseError("--eta: expected a rational in [0,1], got '" + text + "'");
      }
      grid.push_back(*eta);
    }
  }
  Json rows = Json::array();
  for (const Rat& eta : grid) {
    MaxRResult r = noncontextual_max_R(which, eta);
    Json row;
    row["eta"] = rational_to_json(eta);
    row["max"] = rational_to_json(r.value);
    row["maximizing_assignments"] = r.maximizing_assignments;
    rows.push_back(row);
  }
  report["rows"] = rows;
  emit(report);
  return 0;
}

int cmd_relabel(const std::string& input, int measurement) {
  CorrelationVector cv = correlation_from_json(parse_json(input));
  validate_or_throw(cv);
  Json report;
  report["command"] = "relabel";
  report["measurement"] = measurement;
  report["input"] = to_json(cv);
  CorrelationVector out = relabel(cv, measurement);
  report["output"] = to_json(out);
  report["R_input"] = to_json(evaluate(to_six_params(cv)));
  report["R_output"] = to_json(evaluate(to_six_params(out)));
  emit(report);
  return 0;
}

Json povm_to_json(const quantum::JointPOVM& povm) {
  static const char* kLabels[4] = {"00", "01", "10", "11"};
  Json out;
  for (int k = 0; k < 4; ++k) {
    const auto& g = povm.G[k];
    Json rows = Json::array();
    for (int r = 0; r < 2; ++r) {
      Json row = Json::array();
      for (int c = 0; c < 2; ++c) {
        row.push_back(Json::array({num(g(r, c).real()), num(g(r, c).imag())}));
      }
      rows.push_back(row);
    }
    out[kLabels[k]] = rows;
  }
  return out;
}

int cmd_quantum_scan(const std::string& directions, const std::string& eta_grid,
                     const std::string& state, long long seed, bool emit_povms) {
  quantum::LswScanOptions opts;
  if (directions == "trine") {
    opts.directions = quantum::trine_directions();
  } else {
    Json j = parse_json(directions);
    if (!j.is_array() || j.size() != 3) {
      throw ParseError("--directions file must hold an array of 3 unit vectors");
    }
    for (int k = 0; k < 3; ++k) {
      auto v = j[k].get<std::vector<double>>();
      if (v.size() != 3) throw ParseError("direction " + std::to_string(k) + " must have 3 components");
      opts.directions[k] = quantum::Vec3(v[0], v[1], v[2]);
    }
  }
  double lo = 0, hi = 0, step = 0;
  if (std::sscanf(eta_grid.c_str(), "%lf:%lf:%lf", &lo, &hi, &step) != 3 || step <= 0) {
    throw ParseError("--eta-grid: expected lo:hi:step with step > 0");
  }
  for (double eta = lo; eta <= hi + 1e-12; eta += step) opts.eta_grid.push_back(eta);
  if (state == "optimize") {
    opts.state_bloch = std::nullopt;
  } else {
    double x, y, z;
    if (std::sscanf(state.c_str(), "%lf,%lf,%lf", &x, &y, &z) != 3) {
      throw ParseError("--state: expected x,y,z or 'optimize'");
    }
    opts.state_bloch = quantum::Vec3(x, y, z);
  }

  log_info("quantum-scan: " + std::to_string(opts.eta_grid.size()) + " grid points");
  auto rows = quantum::lsw_scan(opts);

  Json report;
  report["command"] = "quantum-scan";
  report["directions"] = Json::array({vec3_to_json(opts.directions[0]),
                                      vec3_to_json(opts.directions[1]),
                                      vec3_to_json(opts.directions[2])});
  report["seed"] = seed;  // echoed; the scan itself is deterministic
  report["rng"] = "mt19937_64";
  Json out_rows = Json::array();
  for (const auto& row : rows) {
    Json r;
    r["eta"] = num(row.eta);
    r["pair_feasible"] = Json::array({row.pair_feasible[0], row.pair_feasible[1], row.pair_feasible[2]});
    r["feasible"] = row.feasible;
    if (row.feasible) {
      r["R3"] = num(row.r3);
      r["bound"] = num(row.bound);
      r["violated"] = row.violated;
      r["R_relabelled"] = Json::array({num(row.r_relabelled[0]), num(row.r_relabelled[1]), num(row.r_relabelled[2])});
      r["violated_relabelled"] = Json::array({row.violated_relabelled[0], row.violated_relabelled[1], row.violated_relabelled[2]});
      r["state"] = vec3_to_json(row.state);
      if (emit_povms) {
        r["joints"] = Json::array({povm_to_json(row.joints[0]), povm_to_json(row.joints[1]),
                                   povm_to_json(row.joints[2])});
      }
    }
    if (!row.error.empty()) r["error"] = row.error;
    out_rows.push_back(r);
  }
  report["rows"] = out_rows;
  emit(report);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Analysis toolkit for three pairwise-measurable binary measurements"};
  app.require_subcommand(1);

  std::string input = "-";
  std::vector<std::string> eta0s;
  auto* check = app.add_subcommand("check", "Validate statistics and evaluate the inequalities");
  check->add_option("--input", input, "Input JSON file, '-' for stdin");
  check->add_option("--eta0", eta0s, "Predictability values for the noncontextual bounds");

  auto* verts = app.add_subcommand("vertices", "List the 12 extreme points");

  auto* dec = app.add_subcommand("decompose", "Convex decomposition over the 12 extreme points");
  dec->add_option("--input", input, "Input JSON file, '-' for stdin");

  auto* fine = app.add_subcommand("fine", "Joint-distribution feasibility (marginal problem)");
  fine->add_option("--input", input, "Correlation JSON or {scenario, stats} JSON");

  int which_r = 3;
  std::vector<std::string> etas;
  auto* ontmax = app.add_subcommand("ontmax", "Noncontextual maxima of the R forms");
  ontmax->add_option("--r", which_r, "Which form, 0..3")->check(CLI::Range(0, 3));
  ontmax->add_option("--eta", etas, "Sharpness values (default: 0,1/20,...,1)");

  int measurement = 1;
  auto* rel = app.add_subcommand("relabel", "Flip one measurement's outcome labels");
  rel->add_option("--input", input, "Input JSON file, '-' for stdin");
  rel->add_option("--measurement", measurement, "Measurement to flip, 1..3")->check(CLI::Range(1, 3));

  std::string directions = "trine";
  std::string eta_grid = "0.05:0.75:0.05";
  std::string state = "optimize";
  long long seed = 0;
  bool emit_povms = false;
  auto* qscan = app.add_subcommand("quantum-scan", "Sharpness scan of the joint-measurability bound");
  qscan->add_option("--directions", directions, "'trine' or a JSON file with 3 unit vectors");
  qscan->add_option("--eta-grid", eta_grid, "lo:hi:step");
  qscan->add_option("--state", state, "Bloch vector x,y,z or 'optimize'");
  qscan->add_option("--seed", seed, "Echoed in the report for provenance");
  qscan->add_flag("--povms", emit_povms, "Include the maximizing joint POVMs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*check) return cmd_check(input, eta0s);
    if (*verts) return cmd_vertices();
    if (*dec) return cmd_decompose(input);
    if (*fine) return cmd_fine(input);
    if (*ontmax) return cmd_ontmax(which_r, etas);
    if (*rel) return cmd_relabel(input, measurement);
    if (*qscan) return cmd_quantum_scan(directions, eta_grid, state, seed, emit_povms);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    emit(Json{{"validation", to_json(e.report)}});
    return 2;
  } catch (const InvalidStats& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ChainViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
