#include "newtres/cli_app.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "newtres/envelope.hpp"
#include "newtres/measure.hpp"
#include "newtres/oracle.hpp"
#include "newtres/region_map.hpp"
#include "newtres/ridge.hpp"
#include "newtres/serialize.hpp"
#include "newtres/solver2d.hpp"

namespace newtres {

namespace {

using nlohmann::json;

constexpr double kDefaultClamp = 1e6;

double to_radians(double v, bool degrees) { return degrees ? v * kPi / 180.0 : v; }

void print_envelope(const json& j) { std::cout << j.dump(2) << "\n"; }

/// Problem flags shared by solve2d and oracle: either the angle triple or
/// the slope triple (with optional width), never both.
struct ProblemFlags {
  std::optional<double> phi0, phi1, phi2;
  std::optional<double> k0, k1, k2;
  double x0 = 0.0;
  double clamp = kDefaultClamp;
  bool degrees = false;

  bool angle_form() const { return phi0 || phi1 || phi2; }

  void add_to(CLI::App* cmd) {
    auto opt = [&](const char* name, std::optional<double>& slot, const char* desc) {
      return cmd->add_option(name, slot, desc);
    };
    auto* p0 = opt("--phi0", phi0, "target normal angle (radians)");
    auto* p1 = opt("--phi1", phi1, "upper window angle (radians)");
    auto* p2 = opt("--phi2", phi2, "lower window angle (radians)");
    auto* q0 = opt("--k0", k0, "target slope K");
    auto* q1 = opt("--k1", k1, "upper slope bound");
    auto* q2 = opt("--k2", k2, "lower slope bound");
    cmd->add_option("--x0", x0, "width before normalization (slope form)");
    cmd->add_option("--clamp", clamp, "maximum accepted |slope|")->capture_default_str();
    cmd->add_flag("--degrees", degrees, "angle inputs are in degrees");
    for (auto* a : {p0, p1, p2}) {
      for (auto* s : {q0, q1, q2}) a->excludes(s);
    }
  }

  AngleProblem make_angle_problem() const {
    if (angle_form()) {
      if (!(phi0 && phi1 && phi2)) {
        throw std::invalid_argument("angle form needs all of --phi0 --phi1 --phi2");
      }
      return AngleProblem(Angle(to_radians(*phi0, degrees)), Angle(to_radians(*phi1, degrees)),
                          Angle(to_radians(*phi2, degrees)));
    }
    const SlopeProblem sp = make_slope_problem();
    return AngleProblem(angle_from_slope(sp.K), angle_from_slope(sp.k1), angle_from_slope(sp.k2));
  }

  SlopeProblem make_slope_problem() const {
    if (angle_form()) {
      // tan of the boundary angles; rejected below if outside the clamp.
      const AngleProblem ap = make_angle_problem();
      return checked(SlopeProblem(slope_from_angle(ap.phi1), slope_from_angle(ap.phi2),
                                  slope_from_angle(ap.phi0)));
    }
    if (!(k0 && k1 && k2)) {
      throw std::invalid_argument("slope form needs all of --k0 --k1 --k2");
    }
    return checked(SlopeProblem(*k1, *k2, *k0, x0));
  }

  SlopeProblem checked(const SlopeProblem& sp) const {
    for (double k : {sp.k1, sp.k2, sp.K}) {
      if (!(std::abs(k) <= clamp)) {
        throw std::invalid_argument("slope magnitude exceeds --clamp");
      }
    }
    return sp;
  }

  json echo() const {
    json j;
    if (angle_form()) {
      j["phi0"] = to_radians(*phi0, degrees);
      j["phi1"] = to_radians(*phi1, degrees);
      j["phi2"] = to_radians(*phi2, degrees);
    } else {
      j["k0"] = k0 ? *k0 : 0.0;
      j["k1"] = k1 ? *k1 : 0.0;
      j["k2"] = k2 ? *k2 : 0.0;
      if (x0 > 0.0) j["x0"] = x0;
    }
    j["clamp"] = clamp;
    return j;
  }
};

int cmd_solve2d(const ProblemFlags& flags) {
  Solution2D sol = flags.angle_form() ? solve_angles(flags.make_angle_problem())
                                      : solve_slopes(flags.make_slope_problem());
  json tol;
  tol["weight_prune"] = 1e-15;
  print_envelope(make_envelope("solve2d", flags.echo(), tol, to_json(sol)));
  return 0;
}

struct RidgeFlags {
  double theta = 0.0;
  double phi1 = 0.0;
  double phi2 = 0.0;
  double theta_eps = 0.0;
  bool degrees = false;
};

int cmd_classify_ridge(const RidgeFlags& f) {
  double theta = to_radians(f.theta, f.degrees);
  const double eps = to_radians(f.theta_eps, f.degrees);
  if (theta >= 0.0 && theta <= eps) theta = 0.0;  // explicit opt-in snap to regime c
  const DihedralData d(Angle(theta), Angle(to_radians(f.phi1, f.degrees)),
                       Angle(to_radians(f.phi2, f.degrees)));
  const RidgeVerdict v = classify_ridge(d);

  json inputs;
  inputs["theta"] = theta;
  inputs["phi1"] = d.phi1.rad();
  inputs["phi2"] = d.phi2.rad();
  inputs["theta_eps"] = eps;
  json tol;
  tol["exceptional_point"] = 1e-12;
  print_envelope(make_envelope("classify-ridge", inputs, tol, to_json(v)));
  return 0;
}

struct RegionFlags {
  std::string which;
  int resolution = 400;
  std::optional<double> theta;
  std::string format = "csv";
  std::string out;
  double k_min = -3.0;
  double k_max = 3.0;
};

int cmd_region_map(const RegionFlags& f) {
  RegionMapOptions opts;
  if (f.which == "lemma1") {
    opts.kind = MapKind::slope_cases;
  } else if (f.which == "lemma2") {
    opts.kind = MapKind::angle_cases;
  } else if (f.which == "ridge") {
    opts.kind = MapKind::ridge_admissible;
    if (!f.theta) throw std::invalid_argument("--which ridge requires --theta");
    opts.theta = *f.theta;
  } else {
    throw std::invalid_argument("--which must be one of lemma1, lemma2, ridge");
  }
  if (f.resolution < 2) throw std::invalid_argument("--resolution must be at least 2");
  opts.resolution = f.resolution;
  opts.k_min = f.k_min;
  opts.k_max = f.k_max;

  std::ostringstream buf;
  if (f.format == "csv") {
    write_region_csv(buf, opts);
  } else if (f.format == "svg") {
    write_region_svg(buf, opts);
  } else {
    throw std::invalid_argument("--format must be csv or svg");
  }

  if (f.out.empty()) {
    std::cout << buf.str();
    return 0;
  }
  std::ofstream file(f.out, std::ios::binary);
  if (!file) throw std::invalid_argument("cannot open output path: " + f.out);
  file << buf.str();
  if (!file.good()) throw std::invalid_argument("write failed: " + f.out);
  return 0;
}

struct OracleFlags {
  ProblemFlags problem;
  int grid = 2001;
  bool inject = false;
  int samples = 0;
  std::uint64_t seed = 0;
};

int cmd_oracle(const OracleFlags& f) {
  const AngleProblem ap = f.problem.make_angle_problem();
  const Solution2D sol = solve_angles(ap);

  GridSpec g;
  g.n = f.grid;
  if (f.inject) {
    for (const MeasureAtom& a : sol.measure.atoms) g.extra_atoms.push_back(a.phi);
  }
  const OracleResult oracle = oracle_pairs(ap, g);

  json result;
  result["oracle_value"] = oracle.value;
  result["solver_value"] = sol.value;
  result["gap"] = std::abs(oracle.value - sol.value);
  result["oracle_atoms"] = to_json(oracle.measure);
  if (f.samples > 0) {
    result["sampler_value"] = oracle_sampler(f.problem.make_slope_problem(), f.samples, f.seed);
  }

  json inputs = f.problem.echo();
  inputs["grid"] = f.grid;
  inputs["inject_solver_atoms"] = f.inject;
  if (f.samples > 0) {
    inputs["samples"] = f.samples;
    inputs["seed"] = f.seed;
  }
  json tol;
  tol["weight_clamp"] = 1e-14;
  print_envelope(make_envelope("oracle", inputs, tol, result));
  return 0;
}

int cmd_resistance(const std::string& body_path) {
  std::ifstream file(body_path);
  if (!file) throw std::invalid_argument("cannot open body file: " + body_path);
  json j;
  try {
    file >> j;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }

  json inputs;
  inputs["body"] = body_path;
  json result;
  const auto body = body_from_json(j);
  if (std::holds_alternative<ConvexBody2D>(body)) {
    const ConvexBody2D& b = std::get<ConvexBody2D>(body);
    const SurfaceMeasure2D m = surface_measure_2d(b);
    result["dimension"] = 2;
    result["resistance"] = resistance_2d(b);
    result["atoms"] = to_json(m);
    result["balance_residual"] = m.moment().norm();
  } else {
    const ConvexPolytope3D& p = std::get<ConvexPolytope3D>(body);
    result["dimension"] = 3;
    result["resistance"] = resistance_3d(p);
    result["facet_count"] = p.facets().size();
    result["balance_residual"] = p.balance_residual();
  }
  json tol;
  tol["balance_3d"] = 1e-9;
  print_envelope(make_envelope("resistance", inputs, tol, result));
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"Closed-form 2D least-resistance solver and singular-point classifier"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  ProblemFlags solve_flags;
  auto* solve_cmd = app.add_subcommand("solve2d", "solve the 2D minimal-resistance problem");
  solve_flags.add_to(solve_cmd);

  RidgeFlags ridge_flags;
  auto* ridge_cmd = app.add_subcommand("classify-ridge", "check ridge-point necessary conditions");
  ridge_cmd->add_option("--theta", ridge_flags.theta, "edge inclination (radians)")->required();
  ridge_cmd->add_option("--phi1", ridge_flags.phi1, "upper normal angle")->required();
  ridge_cmd->add_option("--phi2", ridge_flags.phi2, "lower normal angle")->required();
  ridge_cmd->add_option("--theta-eps", ridge_flags.theta_eps,
                        "treat theta <= eps as exactly horizontal");
  ridge_cmd->add_flag("--degrees", ridge_flags.degrees, "angle inputs are in degrees");

  RegionFlags region_flags;
  auto* region_cmd = app.add_subcommand("region-map", "emit a parameter-plane diagram");
  region_cmd->add_option("--which", region_flags.which, "lemma1, lemma2 or ridge")->required();
  region_cmd->add_option("--resolution", region_flags.resolution, "grid resolution")
      ->capture_default_str();
  region_cmd->add_option("--theta", region_flags.theta, "edge inclination (ridge only)");
  region_cmd->add_option("--format", region_flags.format, "csv or svg")->capture_default_str();
  region_cmd->add_option("--out", region_flags.out, "output path (default stdout)");
  region_cmd->add_option("--kmin", region_flags.k_min, "slope window lower bound")
      ->capture_default_str();
  region_cmd->add_option("--kmax", region_flags.k_max, "slope window upper bound")
      ->capture_default_str();

  OracleFlags oracle_flags;
  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force cross-check of the solver");
  oracle_flags.problem.add_to(oracle_cmd);
  oracle_cmd->add_option("--grid", oracle_flags.grid, "grid atom count")->capture_default_str();
  oracle_cmd->add_flag("--inject-solver-atoms", oracle_flags.inject,
                       "add the solver's atom angles to the grid");
  oracle_cmd->add_option("--samples", oracle_flags.samples, "random concave samples");
  oracle_cmd->add_option("--seed", oracle_flags.seed, "sampler seed");

  std::string body_path;
  auto* resist_cmd = app.add_subcommand("resistance", "resistance of a convex body file");
  resist_cmd->add_option("--body", body_path, "JSON body file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (solve_cmd->parsed()) return cmd_solve2d(solve_flags);
    if (ridge_cmd->parsed()) return cmd_classify_ridge(ridge_flags);
    if (region_cmd->parsed()) return cmd_region_map(region_flags);
    if (oracle_cmd->parsed()) return cmd_oracle(oracle_flags);
    if (resist_cmd->parsed()) return cmd_resistance(body_path);
    std::cerr << "error: no subcommand\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace newtres
