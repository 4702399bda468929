#include "bohr/selfcheck.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <random>
#include <sstream>

#include "bohr/bohr_sum.hpp"
#include "bohr/dilatation.hpp"
#include "bohr/extremal_maps.hpp"
#include "bohr/pairing.hpp"
#include "bohr/radius_solver.hpp"
#include "bohr/report.hpp"
#include "bohr/subordination.hpp"

namespace bohr {

namespace {

using Check = std::function<std::pair<bool, std::string>()>;

std::vector<Complex> circle(double r, int samples) {
  std::vector<Complex> pts;
  for (int j = 0; j < samples; ++j) pts.push_back(std::polar(r, 2.0 * std::numbers::pi * j / samples));
  return pts;
}

std::string num(double x) { return format_number(x); }

HarmonicMap perturbed(const HarmonicMap& f, bool on) {
  if (!on) return f;
  std::vector<Complex> a(f.h().coeffs().begin(), f.h().coeffs().end());
  a[1] += 1e-3;
  return HarmonicMap(PowerSeries(std::move(a)), f.g());
}

struct Extremal {
  std::string label;
  Pairing pairing;
};

std::vector<Extremal> extremal_pairs() {
  return {
      {"half_plane_L/thm211", {{MapName::HarmonicHalfPlane}, RadiusProblem::convex_harmonic()}},
      {"harmonic_koebe_K/thm210", {{MapName::HarmonicKoebe}, RadiusProblem::convex_shear_normalized()}},
      {"f0_sharp/cor25(n=1)", {{MapName::KoebeUnitDilatation}, RadiusProblem::unit_monomial(1)}},
  };
}

}  // namespace

std::vector<CheckResult> run_selfcheck(const SelfcheckOptions& opt) {
  std::vector<std::pair<std::string, Check>> checks;

  checks.emplace_back("series.round_trip", [] {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<Complex> c(301);
    for (auto& x : c) x = {u(rng), u(rng)};
    const PowerSeries s(c);
    const PowerSeries back = term_differentiate(term_integrate(s));
    double worst = 0.0;
    for (std::size_t m = 0; m <= s.order(); ++m) worst = std::max(worst, std::abs(back[m] - s[m]) / std::abs(s[m]));
    return std::pair{worst <= 4e-16, "max relative deviation " + num(worst)};
  });

  checks.emplace_back("series.product_evaluation", [] {
    const PowerSeries a = make_map({MapName::KoebeAnalytic, std::nullopt, 200}).h();
    const PowerSeries b = make_map({MapName::HalfPlaneAnalytic, std::nullopt, 200}).h();
    const PowerSeries ab = cauchy_product(a, b);
    double worst = 0.0;
    for (const Complex& z : circle(0.5, 64)) worst = std::max(worst, std::abs(eval(ab, z) - eval(a, z) * eval(b, z)));
    return std::pair{worst <= 1e-9, "max deviation " + num(worst)};
  });

  checks.emplace_back("series.composition_evaluation", [] {
    const PowerSeries f = make_map({MapName::KoebeAnalytic, std::nullopt, 200}).h();
    const SchwarzFunction psi = random_schwarz(7, 3, 200);
    const PowerSeries fp = compose(f, psi.series());
    double worst = 0.0;
    for (const Complex& z : disc_grid(0.3, 6, 32))
      worst = std::max(worst, std::abs(eval(fp, z) - eval(f, eval(psi.series(), z))));
    return std::pair{worst <= 1e-9, "max deviation " + num(worst)};
  });

  checks.emplace_back("dilatation.monomial_residual", [] {
    const PowerSeries h = make_map({MapName::KoebeAnalytic, std::nullopt, 500}).h();
    const MonomialDilatation w{0.5, std::numbers::pi / 2, 2};
    const double res = dilatation_residual(HarmonicMap(h, g_from_monomial(h, w)), w, disc_grid(0.5, 8, 32));
    return std::pair{res <= 1e-10, "residual " + num(res)};
  });

  checks.emplace_back("dilatation.mobius_residual", [] {
    const PowerSeries h = make_map({MapName::KoebeAnalytic, std::nullopt, 500}).h();
    double worst = 0.0;
    for (bool minus : {false, true}) {
      const MobiusDilatation w{0.3, minus};
      worst = std::max(worst, dilatation_residual(HarmonicMap(h, g_from_mobius(h, w)), w, disc_grid(0.5, 8, 32)));
    }
    return std::pair{worst <= 1e-10, "residual " + num(worst)};
  });

  checks.emplace_back("dilatation.f0_coanalytic_part", [] {
    const HarmonicMap f0 = make_map({MapName::KoebeUnitDilatation, std::nullopt, 2000});
    const PowerSeries g = g_from_monomial(f0.h(), {1.0, 0.0, 1});
    double worst = 0.0;
    for (std::size_t m = 2; m <= 2000; ++m) worst = std::max(worst, std::abs(g[m] - f0.g()[m]) / std::abs(f0.g()[m]));
    return std::pair{worst <= 4e-16, "max relative deviation " + num(worst)};
  });

  checks.emplace_back("dilatation.quasiconformal_bound", [] {
    const PowerSeries h = make_map({MapName::KoebeAnalytic, std::nullopt, 600}).h();
    double worst = 0.0;
    for (double k : {0.1, 0.5, 0.9}) {
      const PowerSeries dh = term_differentiate(h);
      const PowerSeries dg = term_differentiate(g_from_monomial(h, {k, 0.0, 2}));
      for (const Complex& z : circle(0.9, 64)) worst = std::max(worst, std::abs(eval(dg, z) / eval(dh, z)) - k);
    }
    return std::pair{worst <= 1e-9, "max |w| - k = " + num(worst)};
  });

  checks.emplace_back("catalog.coefficient_bounds", [] {
    const HarmonicMap K = make_map({MapName::HarmonicKoebe, std::nullopt, 200});
    const HarmonicMap L = make_map({MapName::HarmonicHalfPlane, std::nullopt, 200});
    bool ok = true;
    for (std::size_t m = 1; m <= 200; ++m) {
      const double x = static_cast<double>(m);
      ok = ok && std::abs(K.h()[m]) == (x + 1) * (2 * x + 1) / 6 && std::abs(K.g()[m]) == (x - 1) * (2 * x - 1) / 6;
      ok = ok && std::abs(L.h()[m]) == (x + 1) / 2 && std::abs(L.g()[m]) == (x - 1) / 2;
    }
    return std::pair{ok, ok ? "bounds attained with equality for m <= 200" : "bound mismatch"};
  });

  checks.emplace_back("catalog.closed_form_agreement", [] {
    double worst = 0.0;
    for (MapName name : all_maps()) {
      NamedMap spec{name, needs_parameter(name) ? std::optional<double>(0.5) : std::nullopt, 2000};
      const HarmonicMap f = make_map(spec);
      for (const Complex& z : circle(0.3, 32))
        worst = std::max(worst, std::abs(closed_form_eval(spec, z) - eval_harmonic(f, z)));
    }
    return std::pair{worst <= 1e-10, "max deviation " + num(worst)};
  });

  checks.emplace_back("radius.unit_monomial_roots", [] {
    // Independent high-precision roots of the n = 1..4 majorants.
    const double expected[] = {0.348385079532061, 0.311964499827587, 0.179307791905554, 0.0959815037305731};
    double worst = 0.0;
    for (int n = 1; n <= 4; ++n)
      worst = std::max(worst, std::abs(solve_radius(RadiusProblem::unit_monomial(n)).root - expected[n - 1]));
    return std::pair{worst <= 1e-12, "max deviation " + num(worst)};
  });

  checks.emplace_back("radius.monotone_single_crossing", [] {
    bool ok = true;
    std::vector<RadiusProblem> problems{RadiusProblem::mobius(), RadiusProblem::convex_shear(),
                                        RadiusProblem::convex_shear_normalized(), RadiusProblem::convex_harmonic()};
    for (int n = 1; n <= 4; ++n) {
      problems.push_back(RadiusProblem::unit_monomial(n));
      for (double k : {0.1, 0.5, 0.9, 1.0}) problems.push_back(RadiusProblem::monomial(k, n));
    }
    for (const auto& p : problems)
      ok = ok && increasing_with_single_crossing([&p](double r) { return majorant_value(p, r); }, 0.99 / 1000, 0.99,
                                                 1000);
    return std::pair{ok, std::to_string(problems.size()) + " majorants scanned"};
  });

  checks.emplace_back("radius.closed_form_agreement", [] {
    double worst = 0.0;
    for (const auto& p : {RadiusProblem::convex_shear(), RadiusProblem::convex_harmonic()})
      worst = std::max(worst, std::abs(solve_radius(p).root - *closed_form_radius(p)));
    return std::pair{worst <= 1e-10, "max deviation " + num(worst)};
  });

  checks.emplace_back("radius.K_limits", [] {
    const double d1 = std::abs(*closed_form_radius(RadiusProblem::quasiconformal_distance(1.0)) - (3 - std::sqrt(8.0)));
    const double d2 = std::abs(*closed_form_radius(RadiusProblem::quasiconformal(1.0)) - (3 - std::sqrt(5.0)) / 2);
    const double d3 =
        std::abs(*closed_form_radius(RadiusProblem::quasiconformal_distance(1e6)) - (5 - std::sqrt(24.0)));
    bool ok = d1 <= 1e-12 && d2 <= 1e-12 && d3 <= 1e-5;
    double prev12 = 1.0, prev23 = 1.0;
    for (int i = 0; i < 200; ++i) {
      const double K = 1.0 + 99.0 * i / 199.0;
      const double r12 = *closed_form_radius(RadiusProblem::quasiconformal_distance(K));
      const double r23 = *closed_form_radius(RadiusProblem::quasiconformal(K));
      ok = ok && r12 < prev12 && r23 < prev23;
      prev12 = r12;
      prev23 = r23;
    }
    return std::pair{ok, "K=1 deviations " + num(d1) + ", " + num(d2)};
  });

  checks.emplace_back("radius.decreasing_in_n", [] {
    double prev = 1.0;
    bool ok = true;
    for (int n = 1; n <= 8; ++n) {
      const double r = solve_radius(RadiusProblem::unit_monomial(n)).root;
      ok = ok && r < prev;
      prev = r;
    }
    return std::pair{ok, "n = 8 root " + num(prev)};
  });

  const bool perturb = opt.perturb;
  checks.emplace_back("bohr.extremal_equality", [perturb] {
    double worst = 0.0;
    for (const auto& e : extremal_pairs()) {
      const HarmonicMap f = perturbed(build_map(e.pairing), perturb);
      for (double r : {0.1, 0.2, 0.3}) {
        const PartialSum s = bohr_partial_sum(f, r, 2000, tail_constant(e.pairing.map.name));
        worst = std::max(worst, std::abs(s.sum + s.tail - (majorant_value(e.pairing.problem, r) + 1.0)));
      }
    }
    return std::pair{worst <= 1e-9, "max deviation " + num(worst)};
  });

  checks.emplace_back("bohr.sharpness", [perturb] {
    bool ok = true;
    std::string detail;
    for (const auto& e : extremal_pairs()) {
      const HarmonicMap f = perturbed(build_map(e.pairing), perturb);
      const double r0 = solve_radius(e.pairing.problem).root;
      const double at = bohr_partial_sum(f, r0, 2000).sum - 1.0;
      const double excess = sharpness_scan(f, e.pairing.problem, 0.01);
      ok = ok && std::abs(at) <= 2e-4 && excess > 0.0;
      detail += e.label + " gap " + num(at) + " excess " + num(excess) + "; ";
    }
    return std::pair{ok, detail};
  });

  checks.emplace_back("bohr.tail_soundness", [] {
    bool ok = true;
    for (MapName name : all_maps()) {
      NamedMap spec{name, needs_parameter(name) ? std::optional<double>(0.9) : std::nullopt, 400};
      const HarmonicMap f = make_map(spec);
      for (double r : {0.5, 0.8, 0.9}) {
        const PartialSum s1 = bohr_partial_sum(f, r, 100, tail_constant(name));
        const PartialSum s2 = bohr_partial_sum(f, r, 200, tail_constant(name));
        ok = ok && s1.sum <= s2.sum && s2.sum <= s1.sum + s1.tail;
      }
    }
    return std::pair{ok, "M and 2M sums bracketed"};
  });

  checks.emplace_back("bohr.verify_below_radius", [] {
    bool ok = true;
    const std::vector<Pairing> pairings{
        {{MapName::HarmonicKoebe}, RadiusProblem::convex_shear_normalized()},
        {{MapName::HarmonicHalfPlane}, RadiusProblem::convex_harmonic()},
        {{MapName::HarmonicHalfPlane}, RadiusProblem::convex_shear()},
        {{MapName::KoebeQuasiconformal, 0.5}, RadiusProblem::quasiconformal_distance(3.0)},
        {{MapName::KoebeQuasiconformal, 0.5}, RadiusProblem::quasiconformal(3.0)},
        {{MapName::KoebeAnalytic}, RadiusProblem::monomial(0.5, 2)},
        {{MapName::KoebeAnalytic}, RadiusProblem::mobius(0.3)},
    };
    for (const auto& p : pairings) {
      VerifyOptions vo;
      vo.grid_size = 64;
      vo.tail_constant = tail_constant(p.map.name);
      ok = ok && verify_inequality(build_map(p), p.problem, vo).all_pass();
    }
    return std::pair{ok, std::to_string(pairings.size()) + " pairings profiled"};
  });

  const int cases = opt.quick ? 24 : 200;
  checks.emplace_back("subordination.domination_campaign", [cases] {
    CampaignOptions co;
    co.cases = cases;
    const auto entries = run_domination_campaign(co);
    double worst = INFINITY;
    for (const auto& e : entries) worst = std::min(worst, e.worst_margin);
    return std::pair{worst >= -1e-9, std::to_string(entries.size()) + " compositions, worst margin " + num(worst)};
  });

  checks.emplace_back("subordination.rotation_invariance", [] {
    const HarmonicMap f = make_map({MapName::KoebeQuasiconformal, 0.5, 200});
    const HarmonicMap rotated = subordinate(f, SchwarzFunction::scaled_identity(std::polar(1.0, 1.234)));
    double worst = 0.0;
    for (double r : {0.1, 0.2, 1.0 / 3.0})
      worst = std::max(worst, std::abs(bohr_partial_sum(f, r, 200).sum - bohr_partial_sum(rotated, r, 200).sum));
    return std::pair{worst <= 1e-12, "max deviation " + num(worst)};
  });

  std::vector<CheckResult> results;
  for (auto& [name, check] : checks) {
    CheckResult res{name, false, ""};
    try {
      auto [passed, detail] = check();
      res.passed = passed;
      res.detail = std::move(detail);
    } catch (const std::exception& e) {
      res.detail = std::string("exception: ") + e.what();
    }
    results.push_back(std::move(res));
  }
  return results;
}

}  // namespace bohr
