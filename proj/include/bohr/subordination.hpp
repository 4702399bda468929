#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bohr/bohr_sum.hpp"
#include "bohr/series.hpp"

namespace bohr {

/// Analytic self-map of the disc fixing 0, kept both as a truncated series and
/// as the closed form it was built from.
class SchwarzFunction {
public:
  enum class Kind { ScaledIdentity, Monomial, BlaschkeProduct };

  /// c z with |c| <= 1.
  static SchwarzFunction scaled_identity(Complex c, std::size_t order = 200);
  /// c z^j with |c| <= 1, j >= 1.
  static SchwarzFunction monomial(Complex c, int j, std::size_t order = 200);
  /// e^{i rotation} z prod_j (z - w_j)/(1 - conj(w_j) z) with |w_j| < 1.
  static SchwarzFunction blaschke(std::vector<Complex> zeros, double rotation, std::size_t order = 200);

  Kind kind() const noexcept { return kind_; }
  const PowerSeries& series() const noexcept { return series_; }
  const std::vector<Complex>& zeros() const noexcept { return zeros_; }
  Complex coefficient() const noexcept { return scale_; }
  int exponent() const noexcept { return exponent_; }

  /// Closed-form value; valid for |z| <= 1.
  Complex operator()(Complex z) const;
  /// Max of |psi| over `samples` points on |z| = radius.
  double sup_on_circle(double radius = 0.999, int samples = 256) const;
  std::string describe() const;

private:
  SchwarzFunction(Kind kind, Complex scale, int exponent, std::vector<Complex> zeros, std::size_t order);
  void check() const;

  Kind kind_;
  Complex scale_;
  int exponent_;
  std::vector<Complex> zeros_;
  PowerSeries series_;
};

/// Seeded rotated Blaschke product with `degree` zeros besides the origin
/// (degree 0 gives a rotation). Zeros are drawn with modulus at most 0.9.
SchwarzFunction random_schwarz(std::uint64_t seed, int degree, std::size_t order = 200);

/// f o psi, truncated to the common order.
PowerSeries subordinate(const PowerSeries& f, const SchwarzFunction& psi);
/// (h o psi) + conj(g o psi).
HarmonicMap subordinate(const HarmonicMap& f, const SchwarzFunction& psi);

/// min over the grid of Sum |a_m| r^m - Sum |b_m| r^m with b the
/// coefficients of f o psi. Grid points must lie in (0, 1/3].
double check_domination(const PowerSeries& f, const SchwarzFunction& psi, const std::vector<double>& r_grid,
                        std::size_t M);

/// Profile of a subordinated harmonic map against min(1/3, radius of p).
BohrProfile check_harmonic_subordination_bound(const HarmonicMap& f1, const RadiusProblem& p,
                                               const VerifyOptions& opt = {});

struct CampaignEntry {
  std::uint64_t seed = 0;
  std::string map_id;
  std::string psi;
  double worst_margin = 0.0;
};

struct CampaignOptions {
  int cases = 200;
  std::uint64_t base_seed = 1;
  std::size_t order = 200;
  int grid_points = 32;
  double tolerance = 1e-9;
};

/// Seeds base_seed .. base_seed + cases - 1 against the analytic Koebe and
/// half-plane maps; degree cycles through 1..8.
std::vector<CampaignEntry> run_domination_campaign(const CampaignOptions& opt = {});

}  // namespace bohr
