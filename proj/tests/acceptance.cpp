// Acceptance suite: one PASS/FAIL line per criterion.
//   bohr_acceptance <path to bohr CLI> [criterion]

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "bohr/bohr_sum.hpp"
#include "bohr/dilatation.hpp"
#include "bohr/extremal_maps.hpp"
#include "bohr/pairing.hpp"
#include "bohr/radius_solver.hpp"
#include "bohr/report.hpp"
#include "bohr/subordination.hpp"
#include "oracles.hpp"

using namespace bohr;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [" << what << "]";
    }
  }
};

std::string cli_path;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string run(const std::string& args, int& status) {
  const std::string cmd = "\"" + cli_path + "\" " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("cannot start " + cmd);
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  status = pclose(pipe);
  return out;
}

std::string fmt(double x) {
  std::ostringstream s;
  s.precision(6);
  s << x;
  return s.str();
}

Outcome radius_table() {
  Outcome o;
  int status = 0;
  const auto t0 = std::chrono::steady_clock::now();
  const std::string out = run("table --max-n 4 --format json", status);
  const double elapsed = seconds_since(t0);
  o.require(status == 0, "table exited with status " + std::to_string(status));
  if (status != 0) return o;
  const auto rows = nlohmann::json::parse(out)["rows"];
  o.require(rows.size() == 4, "expected 4 rows");
  for (std::size_t i = 0; i < rows.size() && i < 4; ++i) {
    const double r = rows[i]["r0"].get<double>();
    const double err = std::abs(r - oracle::kQuotedTable[i]);
    o.detail << " n=" << i + 1 << " r0=" << fmt(r) << " quoted=" << oracle::kQuotedTable[i] << " err=" << fmt(err);
    o.require(err <= 5e-5, "n=" + std::to_string(i + 1) + " off by " + fmt(err));
  }
  o.detail << " runtime=" << fmt(elapsed) << "s";
  o.require(elapsed < 1.0, "runtime");
  return o;
}

Outcome closed_forms() {
  Outcome o;
  const double r11 = solve_radius(RadiusProblem::subordinate_univalent()).root;
  o.require(std::abs(r11 - (3 - std::sqrt(8.0))) < 1e-12, "subordinate univalent radius");

  const double c29 = (5 - std::sqrt(17.0)) / 4, c211 = (3 - std::sqrt(5.0)) / 2;
  o.require(std::abs(*closed_form_radius(RadiusProblem::convex_shear()) - c29) < 1e-12, "convex shear closed form");
  o.require(std::abs(*closed_form_radius(RadiusProblem::convex_harmonic()) - c211) < 1e-12, "convex harmonic closed form");

  const double s29 = solve_radius(RadiusProblem::convex_shear()).root;
  const double s211 = solve_radius(RadiusProblem::convex_harmonic()).root;
  o.require(std::abs(s29 - c29) <= 1e-10, "convex shear solver vs closed form");
  o.require(std::abs(s211 - c211) <= 1e-10, "convex harmonic solver vs closed form");

  const double r27 = solve_radius(RadiusProblem::mobius()).root;
  const double r210 = solve_radius(RadiusProblem::convex_shear_normalized()).root;
  o.require(std::abs(r27 - 0.2291) <= 5e-5, "mobius root");
  o.require(std::abs(r210 - 0.3134) <= 5e-5, "normalized shear root");
  o.detail << " mobius=" << fmt(r27) << " shear_normalized=" << fmt(r210) << " shear_solver_err=" << fmt(std::abs(s29 - c29))
           << " harmonic_solver_err=" << fmt(std::abs(s211 - c211));
  return o;
}

Outcome k_limits() {
  Outcome o;
  const double r12 = *closed_form_radius(RadiusProblem::quasiconformal_distance(1.0));
  const double r23 = *closed_form_radius(RadiusProblem::quasiconformal(1.0));
  o.require(std::abs(r12 - (3 - std::sqrt(8.0))) <= 1e-12, "distance formula at K = 1");
  o.require(std::abs(r23 - (3 - std::sqrt(5.0)) / 2) <= 1e-12, "quasiconformal formula at K = 1");
  double prev12 = std::numeric_limits<double>::infinity(), prev23 = prev12;
  for (int i = 0; i < 200; ++i) {
    const double K = 1.0 + 99.0 * i / 199.0;
    const double a = *closed_form_radius(RadiusProblem::quasiconformal_distance(K));
    const double b = *closed_form_radius(RadiusProblem::quasiconformal(K));
    if (!(a < prev12)) o.require(false, "distance formula not decreasing at K=" + fmt(K));
    if (!(b < prev23)) o.require(false, "quasiconformal formula not decreasing at K=" + fmt(K));
    prev12 = a;
    prev23 = b;
  }
  o.detail << " at K=100: " << fmt(prev12) << " " << fmt(prev23);
  return o;
}

Outcome extremal_equality() {
  Outcome o;
  const Pairing pairs[] = {
      {{MapName::HarmonicHalfPlane}, RadiusProblem::convex_harmonic()},
      {{MapName::HarmonicKoebe}, RadiusProblem::convex_shear_normalized()},
      {{MapName::KoebeUnitDilatation}, RadiusProblem::unit_monomial(1)},
  };
  for (const Pairing& p : pairs) {
    const std::string name(map_id(p.map.name));
    const HarmonicMap f = build_map(p);
    const double r = solve_radius(p.problem).root;
    const double bound = default_bound(p.problem);
    const double gap = std::abs(bohr_partial_sum(f, r, 2000).sum - bound);
    const double excess = sharpness_scan(f, p.problem, 0.01);
    o.detail << " " << name << ": gap=" << fmt(gap) << " excess=" << fmt(excess);
    o.require(gap <= 2e-4, name + " gap");
    o.require(excess > 0.0, name + " excess");
  }
  return o;
}

Outcome dilatation_oracles() {
  Outcome o;
  const PowerSeries h = make_map({MapName::KoebeAnalytic, std::nullopt, 50}).h();
  const std::vector<Complex> hc(h.coeffs().begin(), h.coeffs().end());
  double worst = 0.0;
  for (double a : {-0.9, -0.5, 0.0, 0.3, 0.7}) {
    const PowerSeries g = g_from_mobius(h, {a, false});
    const auto expected = oracle::mobius_by_division(hc, a);
    for (std::size_t m = 1; m <= 50; ++m) {
      const double scale = std::abs(expected[m]);
      const double err = std::abs(g[m] - expected[m]);
      worst = std::max(worst, scale > 0.0 ? err / scale : err);
    }
  }
  o.require(worst <= 1e-12, "mobius relative error " + fmt(worst));

  const PowerSeries k = make_map({MapName::KoebeAnalytic, std::nullopt, 2000}).h();
  const PowerSeries g = g_from_monomial(k, {1.0, 0.0, 1});
  int ulps = 0;
  for (std::size_t m = 1; m <= 2000; ++m) {
    const double x = static_cast<double>(m);
    const double target = (x - 1) * (x - 1) / x;
    const double err = std::abs(g[m] - target);
    const double unit = std::numeric_limits<double>::epsilon() * std::max(target, std::numeric_limits<double>::min());
    ulps = std::max(ulps, static_cast<int>(std::ceil(err / unit)));
  }
  o.require(ulps <= 2, "monomial coefficients off by " + std::to_string(ulps) + " ulp");
  o.detail << " mobius_rel=" << fmt(worst) << " monomial_ulps=" << ulps;
  return o;
}

Outcome campaign() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const auto entries = run_domination_campaign({.cases = 200, .base_seed = 1, .order = 200});
  const double elapsed = seconds_since(t0);
  double worst = std::numeric_limits<double>::infinity();
  for (const auto& e : entries) worst = std::min(worst, e.worst_margin);
  o.require(entries.size() == 400, "expected 400 compositions");
  o.require(worst >= -1e-9, "worst margin " + fmt(worst));
  o.require(elapsed < 30.0, "runtime");
  o.detail << " compositions=" << entries.size() << " worst_margin=" << fmt(worst) << " runtime=" << fmt(elapsed) << "s";
  return o;
}

Outcome image_curves() {
  Outcome o;
  const std::pair<const char*, const char*> cases[] = {{"f0_sharp", "0.3485"}, {"harmonic_koebe_K", "0.3134"}};
  for (const auto& [map, r] : cases) {
    int status = 0;
    const std::string out = run(std::string("image-curve --map ") + map + " --r " + r + " --samples 4096", status);
    o.require(status == 0, std::string(map) + " exited with status " + std::to_string(status));
    const auto pos = out.find("max_mod=");
    if (status != 0 || pos == std::string::npos) {
      o.require(false, std::string(map) + " header missing");
      continue;
    }
    const double max_mod = std::stod(out.substr(pos + 8));
    const double err = std::abs(max_mod - 1.0);
    o.detail << " " << map << "@" << r << ": max_mod=" << fmt(max_mod) << " err=" << fmt(err);
    o.require(err <= 5e-4, std::string(map) + " off by " + fmt(err));
  }
  return o;
}

Outcome monotonicity() {
  Outcome o;
  std::vector<RadiusProblem> problems{RadiusProblem::mobius(), RadiusProblem::convex_shear(),
                                      RadiusProblem::convex_shear_normalized(), RadiusProblem::convex_harmonic()};
  for (int n = 1; n <= 4; ++n) {
    problems.push_back(RadiusProblem::unit_monomial(n));
    for (double k : {0.1, 0.5, 0.9, 1.0}) problems.push_back(RadiusProblem::monomial(k, n));
  }
  int failures = 0;
  for (const auto& p : problems) {
    const bool ok =
        increasing_with_single_crossing([&](double r) { return majorant_value(p, r); }, 0.99 / 1000, 0.99, 1000);
    if (!ok) {
      ++failures;
      o.require(false, describe(p));
    }
  }
  o.detail << " variants=" << problems.size() << " failures=" << failures;
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: bohr_acceptance <bohr cli> [criterion]\n";
    return 2;
  }
  cli_path = argv[1];
  const std::map<int, std::pair<const char*, std::function<Outcome()>>> criteria{
      {1, {"radius table", radius_table}},       {2, {"closed-form radii", closed_forms}},
      {3, {"K-limit consistency", k_limits}},    {4, {"extremal equality", extremal_equality}},
      {5, {"dilatation oracles", dilatation_oracles}}, {6, {"subordination campaign", campaign}},
      {7, {"image curves", image_curves}},       {8, {"majorant monotonicity", monotonicity}},
  };
  std::vector<int> selected;
  if (argc > 2) {
    selected.push_back(std::stoi(argv[2]));
    if (!criteria.count(selected.front())) {
      std::cerr << "unknown criterion " << argv[2] << "\n";
      return 2;
    }
  } else {
    for (const auto& [id, _] : criteria) selected.push_back(id);
  }

  int failed = 0;
  for (int id : selected) {
    const auto& [name, check] = criteria.at(id);
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.require(false, std::string("threw: ") + e.what());
    }
    std::cout << "criterion " << id << " (" << name << "): " << (o.pass ? "PASS" : "FAIL") << o.detail.str() << "\n";
    failed += o.pass ? 0 : 1;
  }
  return failed ? 1 : 0;
}
