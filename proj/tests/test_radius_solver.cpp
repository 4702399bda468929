#include <doctest.h>

#include <cmath>
#include <limits>

#include "bohr/radius_solver.hpp"
#include "oracles.hpp"

using namespace bohr;

TEST_CASE("linear root") {
  const RootCertificate c = bracket_root([](double r) { return r - 1.0 / 3.0; }, 0.0, 1.0);
  CHECK(std::abs(c.root - 1.0 / 3.0) <= 1e-13);
  CHECK(c.lo <= c.root);
  CHECK(c.root <= c.hi);
  CHECK(c.hi - c.lo <= 1e-13);
  CHECK(c.iterations > 0);
  CHECK_FALSE(c.degenerate());
}

TEST_CASE("bracket errors") {
  CHECK_THROWS_AS(bracket_root([](double r) { return r + 1.0; }, 0.0, 1.0), BracketError);
  CHECK_THROWS_AS(bracket_root([](double r) { return 1.0 - r; }, 0.0, 0.5), BracketError);
  CHECK_THROWS_AS(bracket_root([](double r) { return r; }, 0.5, 0.1), BracketError);
  CHECK_THROWS_AS(bracket_root([](double) { return std::nan(""); }, 0.0, 1.0), BracketError);
  CHECK_THROWS_AS(bracket_root([](double r) { return r < 0.4 ? -1.0 : (r < 0.6 ? INFINITY : 1.0); }, 0.0, 1.0),
                  BracketError);
  CHECK_THROWS_AS(bracket_root([](double r) { return r - 0.5; }, 0.0, 1.0, {0.0}), std::invalid_argument);
  // Identically zero on [0.4, 0.6]: no isolated root.
  CHECK_THROWS_AS(bracket_root([](double r) { return r < 0.4 ? r - 0.4 : (r > 0.6 ? r - 0.6 : 0.0); }, 0.0, 1.0),
                  BracketError);
}

TEST_CASE("cubic roots against Cardano") {
  const double mobius = oracle::cubic_real_root(1, -3, 5, -1);
  const double shear = oracle::cubic_real_root(4, -9, 12, -3);
  CHECK(std::abs(mobius - oracle::kMobiusRoot) <= 1e-14);
  CHECK(std::abs(shear - oracle::kNormalizedShearRoot) <= 1e-14);
  CHECK(std::abs(solve_radius(RadiusProblem::mobius()).root - mobius) <= 1e-12);
  CHECK(std::abs(solve_radius(RadiusProblem::mobius(0.6)).root - mobius) <= 1e-12);
  CHECK(std::abs(solve_radius(RadiusProblem::convex_shear_normalized()).root - shear) <= 1e-12);
}

TEST_CASE("solver agrees with the closed forms") {
  CHECK(std::abs(solve_radius(RadiusProblem::convex_harmonic()).root - (3 - std::sqrt(5.0)) / 2) <= 1e-10);
  CHECK(std::abs(solve_radius(RadiusProblem::convex_shear()).root - (5 - std::sqrt(17.0)) / 4) <= 1e-10);
}

TEST_CASE("unit monomial roots") {
  for (int n = 1; n <= 8; ++n) {
    const RootCertificate c = solve_radius(RadiusProblem::unit_monomial(n));
    CHECK(std::abs(c.root - oracle::kUnitMonomialRoots[n - 1]) <= 1e-12);
    CHECK(c.monotone_checked);
  }
  CHECK(solve_radius(RadiusProblem::monomial(1.0, 3)).root == solve_radius(RadiusProblem::unit_monomial(3)).root);
}

TEST_CASE("monomial lattice roots") {
  for (const auto& e : oracle::kMonomialRoots)
    CHECK(std::abs(solve_radius(RadiusProblem::monomial(e.k, e.n)).root - e.root) <= 1e-12);
}

TEST_CASE("closed-form kinds give degenerate certificates") {
  const RootCertificate c = solve_radius(RadiusProblem::quasiconformal(3.0));
  CHECK(c.degenerate());
  CHECK(c.root == *closed_form_radius(RadiusProblem::quasiconformal(3.0)));
  CHECK(c.problem == RadiusProblem::quasiconformal(3.0));
  CHECK(std::abs(solve_radius(RadiusProblem::subordinate_univalent()).root - (3 - std::sqrt(8.0))) <= 1e-12);
}

TEST_CASE("min rule") {
  CHECK(min_rule_radius(RadiusProblem::quasiconformal(1.0)) == 1.0 / 3.0);
  CHECK(min_rule_radius(RadiusProblem::quasiconformal(5.0)) == *closed_form_radius(RadiusProblem::quasiconformal(5.0)));
  CHECK(min_rule_radius(RadiusProblem::convex_harmonic()) == 1.0 / 3.0);
  CHECK(min_rule_radius(RadiusProblem::mobius()) == solve_radius(RadiusProblem::mobius()).root);
}

TEST_CASE("determinism") {
  for (int n = 1; n <= 4; ++n) {
    const RootCertificate a = solve_radius(RadiusProblem::unit_monomial(n));
    const RootCertificate b = solve_radius(RadiusProblem::unit_monomial(n));
    CHECK(a.root == b.root);
    CHECK(a.lo == b.lo);
    CHECK(a.hi == b.hi);
    CHECK(a.iterations == b.iterations);
  }
}

TEST_CASE("property: certificates re-verify") {
  std::vector<RadiusProblem> problems{RadiusProblem::mobius(), RadiusProblem::convex_shear(),
                                      RadiusProblem::convex_shear_normalized(), RadiusProblem::convex_harmonic()};
  for (int n = 1; n <= 8; ++n) problems.push_back(RadiusProblem::unit_monomial(n));
  for (const auto& e : oracle::kMonomialRoots) problems.push_back(RadiusProblem::monomial(e.k, e.n));
  for (const auto& p : problems) {
    const RootCertificate c = solve_radius(p);
    const auto f = [&](double r) { return majorant_value(p, r); };
    CHECK(certificate_valid(c, f));
    CHECK(f(c.lo) <= 0.0);
    CHECK(f(c.hi) >= 0.0);
    CHECK(std::abs(c.residual) <= 1e-9);
    CHECK(c.hi - c.lo <= 1e-13);
  }

  RootCertificate bad = solve_radius(RadiusProblem::mobius());
  bad.root = bad.hi + 1e-3;
  CHECK_FALSE(certificate_valid(bad, [](double r) { return majorant_value(RadiusProblem::mobius(), r); }));
}

TEST_CASE("property: unit monomial radius strictly decreases in n") {
  double prev = 1.0;
  for (int n = 1; n <= 8; ++n) {
    const double r = solve_radius(RadiusProblem::unit_monomial(n)).root;
    CHECK(r < prev);
    prev = r;
  }
}

TEST_CASE("single crossing scan") {
  CHECK(increasing_with_single_crossing([](double r) { return r - 0.5; }, 0.0, 1.0, 1000));
  CHECK_FALSE(increasing_with_single_crossing([](double r) { return (r - 0.5) * (r - 0.5) - 0.01; }, 0.0, 1.0, 1000));
  CHECK_FALSE(increasing_with_single_crossing([](double r) { return r + 1.0; }, 0.0, 1.0, 1000));
  CHECK_THROWS_AS(increasing_with_single_crossing([](double r) { return r; }, 0.0, 1.0, 1), std::invalid_argument);
}
