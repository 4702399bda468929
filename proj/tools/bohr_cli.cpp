// Command-line front end: radii, the unit-dilatation table, Bohr-sum
// verification, sharpness excess, image curves and the self-check suite.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "bohr/bohr_sum.hpp"
#include "bohr/pairing.hpp"
#include "bohr/radius_solver.hpp"
#include "bohr/report.hpp"
#include "bohr/selfcheck.hpp"
#include "bohr/subordination.hpp"

namespace {

using bohr::format_number;
using nlohmann::json;

constexpr const char* kTolEnv = "BOHR_TOL";

double default_tolerance() {
  if (const char* env = std::getenv(kTolEnv)) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && *end == '\0' && v > 0.0) return v;
    throw std::invalid_argument(std::string(kTolEnv) + " must be a positive number");
  }
  return 1e-13;
}

struct ProblemFlags {
  std::string theorem;
  double K = 1.0;
  std::optional<double> k;
  int n = 1;
  double a = 0.0;

  void add(CLI::App* cmd, bool theorem_required = true) {
    auto* opt = cmd->add_option("--theorem", theorem, "Radius statement id (thm11 ... thm211, cor25)");
    if (theorem_required) opt->required();
    cmd->add_option("--K", K, "Quasiconformality constant K >= 1")->capture_default_str();
    cmd->add_option("--k", k, "Dilatation amplitude in (0,1] or map parameter in [0,1)");
    cmd->add_option("--n", n, "Dilatation exponent")->capture_default_str();
    cmd->add_option("--a", a, "Mobius dilatation parameter in (-1,1)")->capture_default_str();
  }

  bohr::RadiusProblem problem() const {
    bohr::RadiusProblem p{bohr::parse_radius_id(theorem)};
    p.K = K;
    p.n = n;
    p.a = a;
    if (p.uses_k()) {
      if (!k) throw std::invalid_argument(theorem + " requires --k");
      p.k = *k;
    }
    p.validate();
    return p;
  }
};

struct MapFlags {
  std::string map;
  std::size_t order = 2000;
  double theta = 0.0;
  bool minus = false;

  void add(CLI::App* cmd) {
    cmd->add_option("--map", map, "Catalog map id")->required();
    cmd->add_option("--order", order, "Truncation order")->capture_default_str();
    cmd->add_option("--theta", theta, "Phase of a monomial dilatation")->capture_default_str();
    cmd->add_flag("--minus", minus, "Use the (a - z)/(1 - a z) Mobius dilatation");
  }

  bohr::NamedMap named(const ProblemFlags& pf, const bohr::RadiusProblem* p) const {
    bohr::NamedMap spec{bohr::parse_map_id(map), std::nullopt, order};
    if (bohr::needs_parameter(spec.name)) {
      if (!pf.k) throw std::invalid_argument(map + " requires --k");
      if (p && p->uses_k()) throw std::invalid_argument("--k cannot serve both the map and the dilatation");
      spec.k = pf.k;
    }
    spec.validate();
    return spec;
  }
};

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(out);
  if (!file) throw std::runtime_error("cannot open output file " + out);
  file << text;
}

std::string certificate_plain(const bohr::RootCertificate& c) {
  std::ostringstream s;
  s << "# " << bohr::describe(*c.problem) << '\n'
    << "root " << format_number(c.root) << '\n'
    << "lo " << format_number(c.lo) << '\n'
    << "hi " << format_number(c.hi) << '\n'
    << "residual " << format_number(c.residual) << '\n'
    << "iterations " << c.iterations << '\n'
    << "monotone_checked " << (c.monotone_checked ? "true" : "false") << '\n';
  return s.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bohr-radius verification toolkit.\nEnvironment: " + std::string(kTolEnv) +
               " overrides the default root bracket width tolerance (1e-13)."};
  app.require_subcommand(1);
  std::string out;
  std::string format = "plain";
  const std::vector<std::string> formats{"plain", "csv", "json"};
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--out", out, "Write output to a file instead of standard output");
    cmd->add_option("--format", format, "plain | csv | json")->check(CLI::IsMember(formats))->capture_default_str();
  };

  int status = 0;
  std::string text;

  // radius
  ProblemFlags radius_flags;
  std::optional<double> tol;
  bool min_rule = false;
  auto* radius = app.add_subcommand("radius", "Solve or evaluate one radius and print its certificate");
  radius_flags.add(radius);
  radius->add_option("--tol", tol, "Bracket width tolerance");
  radius->add_flag("--min-rule", min_rule, "Report min(1/3, radius) for the subordination class");
  add_common(radius);

  // table
  int max_n = 4;
  auto* table = app.add_subcommand("table", "Radii of the unit monomial dilatation family for n = 1..max-n");
  table->add_option("--max-n", max_n, "Largest exponent")->check(CLI::Range(1, 64))->capture_default_str();
  add_common(table);

  // verify / sharpness
  ProblemFlags verify_problem;
  MapFlags verify_map;
  bohr::VerifyOptions vopt;
  std::optional<double> bound;
  auto* verify = app.add_subcommand("verify", "Profile Bohr sums of a map below a radius");
  verify_problem.add(verify);
  verify_map.add(verify);
  verify->add_option("--margin", vopt.margin, "Distance kept below the radius")->capture_default_str();
  verify->add_option("--grid", vopt.grid_size, "Number of grid points")->capture_default_str();
  verify->add_option("--bound", bound, "Right-hand side (defaults to the statement's normalization)");
  add_common(verify);

  ProblemFlags sharp_problem;
  MapFlags sharp_map;
  double epsilon = 0.01;
  std::optional<double> sharp_bound;
  auto* sharpness = app.add_subcommand("sharpness", "Bohr sum just above the radius minus the bound");
  sharp_problem.add(sharpness);
  sharp_map.add(sharpness);
  sharpness->add_option("--epsilon", epsilon, "Offset above the radius")->capture_default_str();
  sharpness->add_option("--bound", sharp_bound, "Right-hand side");
  add_common(sharpness);

  // image-curve
  std::string curve_map;
  std::optional<double> curve_k;
  double curve_r = 0.0;
  int samples = 4096;
  auto* image = app.add_subcommand("image-curve", "Image of the circle |z| = r under a catalog map (CSV)");
  image->add_option("--map", curve_map, "Catalog map id")->required();
  image->add_option("--k", curve_k, "Map parameter for p_k and q_k");
  image->add_option("--r", curve_r, "Circle radius in (0,1)")->required();
  image->add_option("--samples", samples, "Points on the circle")->check(CLI::PositiveNumber)->capture_default_str();
  image->add_option("--out", out, "Write output to a file instead of standard output");

  // majorant-curve
  ProblemFlags curve_problem;
  double r_max = 0.99;
  int curve_samples = 200;
  auto* majorant = app.add_subcommand("majorant-curve", "Majorant of a root-defined radius on a grid (CSV)");
  curve_problem.add(majorant);
  majorant->add_option("--r-max", r_max, "Right end of the grid")->capture_default_str();
  majorant->add_option("--samples", curve_samples, "Grid points")->check(CLI::PositiveNumber)->capture_default_str();
  majorant->add_option("--out", out, "Write output to a file instead of standard output");

  // subordination-campaign
  bohr::CampaignOptions copt;
  auto* campaign = app.add_subcommand("subordination-campaign", "Seeded Schwarz compositions against Koebe and "
                                                                "half-plane maps on r <= 1/3");
  campaign->add_option("--cases", copt.cases, "Number of seeds")->capture_default_str();
  campaign->add_option("--seed", copt.base_seed, "First seed")->capture_default_str();
  campaign->add_option("--order", copt.order, "Composition order")->capture_default_str();
  campaign->add_option("--grid", copt.grid_points, "Points on (0, 1/3]")->capture_default_str();
  add_common(campaign);

  // selfcheck
  bohr::SelfcheckOptions sopt;
  auto* selfcheck = app.add_subcommand("selfcheck", "Run the invariant suite");
  selfcheck->add_flag("--quick", sopt.quick, "Smaller subordination campaign");
  selfcheck->add_flag("--perturb", sopt.perturb, "Debug: perturb extremal coefficients by 1e-3");

  CLI11_PARSE(app, argc, argv);

  try {
    if (radius->parsed()) {
      const bohr::RadiusProblem p = radius_flags.problem();
      bohr::SolverTolerances st;
      st.width = tol.value_or(default_tolerance());
      bohr::RootCertificate cert = bohr::solve_radius(p, st);
      if (min_rule) {
        const double r = std::min(1.0 / 3.0, cert.root);
        if (r != cert.root) cert.lo = cert.hi = cert.root = r, cert.iterations = 0, cert.residual = 0.0;
      }
      if (format == "json") {
        json j = bohr::to_json(cert);
        j["parameters"] = {{"tol", bohr::round12(st.width)}, {"min_rule", min_rule}};
        text = j.dump(2) + "\n";
      } else if (format == "csv") {
        text = "# " + bohr::describe(p) + " tol=" + format_number(st.width) + "\n" +
               "root,lo,hi,residual,iterations,monotone_checked\n" + format_number(cert.root) + "," +
               format_number(cert.lo) + "," + format_number(cert.hi) + "," + format_number(cert.residual) + "," +
               std::to_string(cert.iterations) + "," + (cert.monotone_checked ? "true" : "false") + "\n";
      } else {
        text = certificate_plain(cert);
      }
    } else if (table->parsed()) {
      std::vector<double> roots;
      bool decreasing = true;
      for (int n = 1; n <= max_n; ++n) {
        roots.push_back(bohr::solve_radius(bohr::RadiusProblem::unit_monomial(n), {default_tolerance()}).root);
        if (n > 1) decreasing = decreasing && roots[n - 1] < roots[n - 2];
      }
      if (format == "json") {
        json rows = json::array();
        for (int n = 1; n <= max_n; ++n) rows.push_back({{"n", n}, {"r0", bohr::round12(roots[n - 1])}});
        text = json{{"parameters", {{"theorem", "cor25"}, {"max_n", max_n}}}, {"rows", rows},
                    {"strictly_decreasing", decreasing}}
                   .dump(2) +
               "\n";
      } else {
        text = "# theorem=cor25 max_n=" + std::to_string(max_n) + "\n";
        text += format == "csv" ? "n,r0\n" : "n r0\n";
        for (int n = 1; n <= max_n; ++n)
          text += std::to_string(n) + (format == "csv" ? "," : " ") + format_number(roots[n - 1]) + "\n";
      }
      if (!decreasing) status = 1;
    } else if (verify->parsed() || sharpness->parsed()) {
      const bool is_verify = verify->parsed();
      const ProblemFlags& pf = is_verify ? verify_problem : sharp_problem;
      const MapFlags& mf = is_verify ? verify_map : sharp_map;
      const bohr::RadiusProblem p = pf.problem();
      bohr::Pairing pairing{mf.named(pf, &p), p, mf.theta, mf.minus};
      if (auto why = bohr::incompatibility(pairing)) throw std::invalid_argument(*why);
      const bohr::HarmonicMap f = bohr::build_map(pairing);
      const double tc = bohr::tail_constant(pairing.map.name);
      std::string header = "# map=" + std::string(bohr::map_id(pairing.map.name));
      if (pairing.map.k) header += " k=" + format_number(*pairing.map.k);
      header += " " + bohr::describe(p) + " order=" + std::to_string(mf.order);

      if (is_verify) {
        vopt.bound = bound;
        vopt.tail_constant = tc;
        vopt.map_id = std::string(bohr::map_id(pairing.map.name));
        const bohr::BohrProfile prof = bohr::verify_inequality(f, p, vopt);
        header += " margin=" + format_number(vopt.margin) + " grid=" + std::to_string(vopt.grid_size) +
                  " bound=" + format_number(prof.bound);
        if (format == "json") {
          json j = bohr::to_json(prof);
          j["parameters"] = header.substr(2);
          j["all_pass"] = prof.all_pass();
          text = j.dump(2) + "\n";
        } else if (format == "csv") {
          text = header + "\n" + bohr::profile_csv(prof);
        } else {
          std::size_t passed = 0;
          for (bool v : prof.verdicts) passed += v;
          text = header + "\nradius " + format_number(bohr::solve_radius(p).root) + "\npassed " +
                 std::to_string(passed) + "/" + std::to_string(prof.size()) + "\nmax_partial_sum " +
                 format_number(prof.partial_sums.back()) + "\n" + (prof.all_pass() ? "PASS\n" : "FAIL\n");
        }
        if (!prof.all_pass()) status = 1;
      } else {
        if (!bohr::is_extremal(pairing))
          throw std::invalid_argument(header.substr(2) + ": the map is not extremal for this statement");
        const double excess = bohr::sharpness_scan(f, p, epsilon, sharp_bound, tc);
        header += " epsilon=" + format_number(epsilon);
        if (format == "json") {
          text = json{{"parameters", header.substr(2)}, {"excess", bohr::round12(excess)}, {"sharp", excess > 0.0}}
                     .dump(2) +
                 "\n";
        } else if (format == "csv") {
          text = header + "\nexcess\n" + format_number(excess) + "\n";
        } else {
          text = header + "\nexcess " + format_number(excess) + "\n" + (excess > 0.0 ? "SHARP\n" : "NOT SHARP\n");
        }
        if (!(excess > 0.0)) status = 1;
      }
    } else if (image->parsed()) {
      bohr::NamedMap spec{bohr::parse_map_id(curve_map), curve_k, 2000};
      if (samples < 64) throw std::invalid_argument("image-curve needs at least 64 samples");
      const bohr::BoundaryReach reach = bohr::boundary_reach(spec, curve_r, samples);
      std::ostringstream s;
      s << "# map=" << bohr::map_id(spec.name) << " r=" << format_number(curve_r) << " samples=" << samples
        << " max_mod=" << format_number(reach.max_mod) << '\n'
        << "re,im\n";
      for (int j = 0; j < samples; ++j) {
        const bohr::Complex w =
            bohr::closed_form_eval(spec, std::polar(curve_r, 2.0 * std::numbers::pi * j / samples));
        s << format_number(w.real()) << ',' << format_number(w.imag()) << '\n';
      }
      text = s.str();
    } else if (majorant->parsed()) {
      const bohr::RadiusProblem p = curve_problem.problem();
      if (!(r_max > 0.0 && r_max < 1.0)) throw std::invalid_argument("--r-max must lie in (0, 1)");
      std::ostringstream s;
      s << "# " << bohr::describe(p) << " r_max=" << format_number(r_max) << " samples=" << curve_samples << '\n'
        << "r,value\n";
      for (int i = 1; i <= curve_samples; ++i) {
        const double r = r_max * i / curve_samples;
        s << format_number(r) << ',' << format_number(bohr::majorant_value(p, r)) << '\n';
      }
      text = s.str();
    } else if (campaign->parsed()) {
      const auto entries = bohr::run_domination_campaign(copt);
      double worst = INFINITY;
      for (const auto& e : entries) worst = std::min(worst, e.worst_margin);
      const std::string params = "cases=" + std::to_string(copt.cases) + " seed=" + std::to_string(copt.base_seed) +
                                 " order=" + std::to_string(copt.order) + " grid=" + std::to_string(copt.grid_points);
      if (format == "json") {
        text = json{{"parameters", params}, {"entries", bohr::to_json(entries)}, {"worst_margin", bohr::round12(worst)},
                    {"pass", worst >= -copt.tolerance}}
                   .dump(2) +
               "\n";
      } else {
        std::ostringstream s;
        s << "# " << params << '\n';
        if (format == "csv") {
          s << "seed,map,worst_margin\n";
          for (const auto& e : entries) s << e.seed << ',' << e.map_id << ',' << format_number(e.worst_margin) << '\n';
        } else {
          s << "compositions " << entries.size() << "\nworst_margin " << format_number(worst) << '\n'
            << (worst >= -copt.tolerance ? "PASS\n" : "FAIL\n");
        }
        text = s.str();
      }
      if (worst < -copt.tolerance) status = 1;
    } else if (selfcheck->parsed()) {
      const auto results = bohr::run_selfcheck(sopt);
      std::ostringstream s;
      int passed = 0;
      s << "# quick=" << (sopt.quick ? "true" : "false") << " perturb=" << (sopt.perturb ? "true" : "false") << '\n';
      for (const auto& r : results) {
        passed += r.passed;
        s << (r.passed ? "PASS " : "FAIL ") << r.name << "  " << r.detail << '\n';
      }
      s << "passed " << passed << " failed " << (results.size() - passed) << '\n';
      text = s.str();
      if (passed != static_cast<int>(results.size())) status = 1;
    }
    emit(text, out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return status;
}
