#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "bohr/radius_catalog.hpp"
#include "oracles.hpp"

using namespace bohr;

TEST_CASE("radius ids round trip") {
  for (RadiusKind k : all_radius_kinds()) CHECK(parse_radius_id(radius_id(k)) == k);
  CHECK_THROWS_AS(parse_radius_id("thm99"), std::invalid_argument);
  CHECK(all_radius_kinds().size() == 15);
}

TEST_CASE("problem validation") {
  CHECK_THROWS_AS(RadiusProblem::quasiconformal(0.5), std::invalid_argument);
  CHECK_THROWS_AS(RadiusProblem::quasiconformal_distance(INFINITY), std::invalid_argument);
  CHECK_THROWS_AS(RadiusProblem::monomial(0.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(RadiusProblem::monomial(1.5, 1), std::invalid_argument);
  CHECK_THROWS_AS(RadiusProblem::monomial(0.5, 0), std::invalid_argument);
  CHECK_THROWS_AS(RadiusProblem::unit_monomial(0), std::invalid_argument);
  CHECK_THROWS_AS(RadiusProblem::mobius(1.0), std::invalid_argument);
  CHECK_NOTHROW(RadiusProblem::monomial(1.0, 3));
  CHECK(RadiusProblem::quasiconformal(3.0).dilatation_bound() == 0.5);
}

TEST_CASE("majorant values") {
  for (double k : {0.1, 0.5, 1.0})
    for (int n : {1, 2, 3}) CHECK(majorant_value(RadiusProblem::monomial(k, n), 0.0) == -1.0);

  CHECK(std::abs(majorant_value(RadiusProblem::convex_harmonic(), (3 - std::sqrt(5.0)) / 2)) <= 1e-12);
  CHECK(std::abs(majorant_value(RadiusProblem::mobius(), 0.2291)) < 5e-4);
  CHECK(std::abs(majorant_value(RadiusProblem::convex_shear(), (5 - std::sqrt(17.0)) / 4)) <= 1e-12);

  // The normalized shear majorant is the cubic 4r^3 - 9r^2 + 12r - 3 divided
  // by 3(1-r)^3.
  for (double r : {0.05, 0.2, 0.3134, 0.6}) {
    const double cubic = ((4 * r - 9) * r + 12) * r - 3;
    CHECK(majorant_value(RadiusProblem::convex_shear_normalized(), r) ==
          doctest::Approx(cubic / (3 * std::pow(1 - r, 3))).epsilon(1e-13));
  }

  // The unit case is the k = 1 member of the monomial family, and matches the
  // closed-form f0 Bohr sum minus 1.
  for (double r : {0.1, 0.3, 0.7}) {
    CHECK(majorant_value(RadiusProblem::unit_monomial(1), r) == majorant_value(RadiusProblem::monomial(1.0, 1), r));
    CHECK(majorant_value(RadiusProblem::unit_monomial(1), r) == doctest::Approx(oracle::f0_value(r) - 1).epsilon(1e-14));
  }

  CHECK_THROWS_AS(majorant_value(RadiusProblem::convex_harmonic(), 1.0), std::domain_error);
  CHECK_THROWS_AS(majorant_value(RadiusProblem::convex_harmonic(), -0.1), std::domain_error);
  CHECK_THROWS_AS(majorant_value(RadiusProblem::quasiconformal(2.0), 0.1), std::invalid_argument);
  CHECK_THROWS_AS(majorant_value(RadiusProblem::subordinate_univalent(), 0.1), std::invalid_argument);
}

TEST_CASE("closed-form radii") {
  CHECK(std::abs(*closed_form_radius(RadiusProblem::subordinate_univalent()) - (3 - std::sqrt(8.0))) <= 1e-15);
  CHECK(*closed_form_radius(RadiusProblem::subordinate_convex()) == 1.0 / 3.0);
  CHECK(*closed_form_radius(RadiusProblem::normalized_subordinate()) == 1.0 / 3.0);
  CHECK(std::abs(*closed_form_radius(RadiusProblem::quasiconformal_distance(1.0)) - (6 - std::sqrt(32.0)) / 2) <= 1e-15);
  CHECK(std::abs(*closed_form_radius(RadiusProblem::quasiconformal(1.0)) - (3 - std::sqrt(5.0)) / 2) <= 1e-15);
  CHECK(std::abs(*closed_form_radius(RadiusProblem::convex_shear()) - 0.21922359359558486) <= 1e-15);
  CHECK(std::abs(*closed_form_radius(RadiusProblem::convex_harmonic()) - 0.38196601125010515) <= 1e-15);
  CHECK(*closed_form_radius(RadiusProblem::quasiconformal_distance(3.0, true)) == 4.0 / 16.0);
  CHECK(*closed_form_radius(RadiusProblem::quasiconformal(3.0, true)) == 0.4);

  // Unrationalized forms agree away from K = 1.
  for (double K : {1.5, 3.0, 10.0, 100.0}) {
    CHECK(*closed_form_radius(RadiusProblem::quasiconformal_distance(K)) ==
          doctest::Approx((5 * K + 1 - std::sqrt(8 * K * (3 * K + 1))) / (K + 1)).epsilon(1e-12));
    CHECK(*closed_form_radius(RadiusProblem::quasiconformal(K)) ==
          doctest::Approx((2 * K + 1 - std::sqrt(K * (3 * K + 2))) / (K + 1)).epsilon(1e-12));
  }

  CHECK_FALSE(closed_form_radius(RadiusProblem::unit_monomial(2)).has_value());
  CHECK_FALSE(closed_form_radius(RadiusProblem::mobius(0.3)).has_value());
  CHECK_FALSE(closed_form_radius(RadiusProblem::convex_shear_normalized()).has_value());
}

TEST_CASE("min rule and crossover") {
  for (double K : {1.0, 1.5, 2.0, 3.0, 7.0, 50.0}) {
    CHECK(*closed_form_radius(RadiusProblem::quasiconformal_subordinate(K)) ==
          std::min(1.0 / 3.0, *closed_form_radius(RadiusProblem::quasiconformal(K))));
    CHECK(*closed_form_radius(RadiusProblem::quasiconformal_subordinate(K, true)) ==
          std::min(1.0 / 3.0, *closed_form_radius(RadiusProblem::quasiconformal(K, true))));
  }
  // Regression value: the quasiconformal radius equals 1/3 at K = 2.
  CHECK(*closed_form_radius(RadiusProblem::quasiconformal(2.0)) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(*closed_form_radius(RadiusProblem::quasiconformal(1.99)) > 1.0 / 3.0);
  CHECK(*closed_form_radius(RadiusProblem::quasiconformal(2.01)) < 1.0 / 3.0);
}

TEST_CASE("property: K formulas decrease toward their limits") {
  double prev12 = 1.0, prev23 = 1.0;
  for (int i = 0; i < 200; ++i) {
    const double K = 1.0 + 99.0 * i / 199.0;
    const double r12 = *closed_form_radius(RadiusProblem::quasiconformal_distance(K));
    const double r23 = *closed_form_radius(RadiusProblem::quasiconformal(K));
    CHECK(r12 < prev12);
    CHECK(r23 < prev23);
    prev12 = r12;
    prev23 = r23;
  }
  CHECK(std::abs(*closed_form_radius(RadiusProblem::quasiconformal_distance(1e6)) - (5 - std::sqrt(24.0))) <= 1e-5);
}

TEST_CASE("property: root-defined majorants increase and cross zero once") {
  std::vector<RadiusProblem> problems{RadiusProblem::mobius(), RadiusProblem::convex_shear(),
                                      RadiusProblem::convex_shear_normalized(), RadiusProblem::convex_harmonic()};
  for (int n = 1; n <= 4; ++n) {
    problems.push_back(RadiusProblem::unit_monomial(n));
    for (double k : {0.1, 0.5, 0.9, 1.0}) problems.push_back(RadiusProblem::monomial(k, n));
  }
  for (const auto& p : problems) {
    CHECK(majorant_value(p, 0.001) < 0.0);
    CHECK(majorant_value(p, 0.99) > 0.0);
    double prev = majorant_value(p, 0.99 / 1000);
    for (int i = 2; i <= 1000; ++i) {
      const double v = majorant_value(p, 0.99 * i / 1000);
      REQUIRE(v > prev);
      prev = v;
    }
  }
}

TEST_CASE("default bounds") {
  CHECK(default_bound(RadiusProblem::subordinate_univalent()) == 0.25);
  CHECK(default_bound(RadiusProblem::quasiconformal_distance(3)) == 0.25);
  CHECK(default_bound(RadiusProblem::quasiconformal_distance(3, true)) == 0.5);
  CHECK(default_bound(RadiusProblem::subordinate_convex()) == 0.5);
  CHECK(default_bound(RadiusProblem::mobius(-0.4)) == 1.4);
  CHECK(default_bound(RadiusProblem::convex_harmonic()) == 1.0);
}

TEST_CASE("majorant identities") {
  CHECK(majorant_identity_check(MajorantIdentity::SumMRm, 0.5, 200) <= 1e-12);
  CHECK(majorant_identity_check(MajorantIdentity::SumRmOverM, 0.5, 2000) <= 1e-12);
  CHECK(std::abs(majorant_identity_closed_form(MajorantIdentity::SumRmOverM, 0.5) - std::log(2.0)) <= 1e-15);
  CHECK(majorant_identity_check(MajorantIdentity::SumMMplus1Rm, 0.2291, 2000) <= 1e-12);
  CHECK(majorant_identity_check(MajorantIdentity::SumTwoM2Plus1Over3Rm, 0.3134, 2000) <= 1e-12);
  CHECK(majorant_identity_check(MajorantIdentity::SumRm, 0.95, 2000) <= 1e-12);
  // The Möbius majorant factor r(1+r)/(1-r)^3 + r/(1-r)^2 is 1 at the cubic's root.
  CHECK(majorant_identity_closed_form(MajorantIdentity::SumMMplus1Rm, oracle::kMobiusRoot) ==
        doctest::Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS(majorant_identity_check(MajorantIdentity::SumRm, 0.96, 10), std::domain_error);
}

TEST_CASE("property: identities hold on [0, 0.95] within the geometric tail") {
  const MajorantIdentity ids[] = {MajorantIdentity::SumMRm, MajorantIdentity::SumRm, MajorantIdentity::SumRmOverM,
                                  MajorantIdentity::SumMMplus1Rm, MajorantIdentity::SumTwoM2Plus1Over3Rm};
  for (MajorantIdentity id : ids) {
    for (int i = 0; i <= 19; ++i) {
      const double r = std::min(0.05 * i, 0.95);
      // Terms grow at most like m^2, so the omitted tail is below 3 times
      // the squared-weight tail; rounding adds a few ulps of the total.
      const double tail = 3.0 * square_weighted_tail(r, 2000);
      const double total = majorant_identity_closed_form(id, r);
      CHECK(majorant_identity_check(id, r, 2000) <= tail + 1e-13 * (1.0 + total));
    }
  }
}

TEST_CASE("square weighted tail") {
  CHECK(square_weighted_tail(0.0, 10) == 0.0);
  double brute = 0.0;
  for (int m = 21; m < 5000; ++m) brute += m * m * std::pow(0.7, m);
  CHECK(square_weighted_tail(0.7, 20) == doctest::Approx(brute).epsilon(1e-12));
  CHECK_THROWS_AS(square_weighted_tail(1.0, 10), std::domain_error);
}
