#include "bohr/subordination.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

namespace bohr {

namespace {

PowerSeries blaschke_factor_series(Complex w, std::size_t order) {
  std::vector<Complex> c(order + 1);
  c[0] = -w;
  const Complex wbar = std::conj(w);
  const double scale = 1.0 - std::norm(w);
  Complex power{1.0, 0.0};
  for (std::size_t j = 1; j <= order; ++j) {
    c[j] = power * scale;
    power *= wbar;
  }
  return PowerSeries(std::move(c));
}

PowerSeries monomial_series(Complex c, std::size_t j, std::size_t order) {
  std::vector<Complex> out(order + 1, Complex{});
  if (j <= order) out[j] = c;
  return PowerSeries(std::move(out));
}

}  // namespace

SchwarzFunction::SchwarzFunction(Kind kind, Complex scale, int exponent, std::vector<Complex> zeros,
                                 std::size_t order)
    : kind_(kind), scale_(scale), exponent_(exponent), zeros_(std::move(zeros)), series_(order) {
  if (order < 1) throw std::invalid_argument("Schwarz function order must be at least 1");
  if (!(std::abs(scale_) <= 1.0)) throw std::invalid_argument("Schwarz function scale must satisfy |c| <= 1");
  if (exponent_ < 1) throw std::invalid_argument("Schwarz function must vanish at the origin");
  for (const Complex& w : zeros_)
    if (!(std::abs(w) < 1.0)) throw std::invalid_argument("Blaschke zeros must lie inside the unit disc");

  PowerSeries s = monomial_series(scale_, static_cast<std::size_t>(exponent_), order);
  for (const Complex& w : zeros_) s = cauchy_product(s, blaschke_factor_series(w, order));
  series_ = std::move(s);
  check();
}

SchwarzFunction SchwarzFunction::scaled_identity(Complex c, std::size_t order) {
  return SchwarzFunction(Kind::ScaledIdentity, c, 1, {}, order);
}

SchwarzFunction SchwarzFunction::monomial(Complex c, int j, std::size_t order) {
  return SchwarzFunction(Kind::Monomial, c, j, {}, order);
}

SchwarzFunction SchwarzFunction::blaschke(std::vector<Complex> zeros, double rotation, std::size_t order) {
  return SchwarzFunction(Kind::BlaschkeProduct, std::polar(1.0, rotation), 1, std::move(zeros), order);
}

Complex SchwarzFunction::operator()(Complex z) const {
  Complex value = scale_ * std::pow(z, exponent_);
  for (const Complex& w : zeros_) value *= (z - w) / (1.0 - std::conj(w) * z);
  return value;
}

double SchwarzFunction::sup_on_circle(double radius, int samples) const {
  double sup = 0.0;
  for (int j = 0; j < samples; ++j)
    sup = std::max(sup, std::abs((*this)(std::polar(radius, 2.0 * std::numbers::pi * j / samples))));
  return sup;
}

void SchwarzFunction::check() const {
  if (series_[0] != Complex{}) throw std::logic_error("Schwarz function series does not vanish at 0");
  if (sup_on_circle() > 1.0 + 1e-6) throw std::logic_error("Schwarz function leaves the unit disc");
}

std::string SchwarzFunction::describe() const {
  std::ostringstream out;
  out.precision(12);
  switch (kind_) {
    case Kind::ScaledIdentity: out << "scaled_identity(" << scale_.real() << "," << scale_.imag() << ")"; break;
    case Kind::Monomial:
      out << "monomial(" << scale_.real() << "," << scale_.imag() << ";" << exponent_ << ")";
      break;
    case Kind::BlaschkeProduct:
      out << "blaschke(rotation=" << std::arg(scale_) << ";zeros=";
      for (std::size_t j = 0; j < zeros_.size(); ++j)
        out << (j ? "|" : "") << zeros_[j].real() << "," << zeros_[j].imag();
      out << ")";
      break;
  }
  return out.str();
}

SchwarzFunction random_schwarz(std::uint64_t seed, int degree, std::size_t order) {
  if (degree < 0 || degree > 8) throw std::invalid_argument("Schwarz degree must lie in [0, 8]");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::uniform_real_distribution<double> modulus(0.0, 0.9);
  const double rotation = angle(rng);
  std::vector<Complex> zeros;
  for (int j = 0; j < degree; ++j) {
    const double m = modulus(rng);
    zeros.push_back(std::polar(m, angle(rng)));
  }
  return SchwarzFunction::blaschke(std::move(zeros), rotation, order);
}

PowerSeries subordinate(const PowerSeries& f, const SchwarzFunction& psi) { return compose(f, psi.series()); }

HarmonicMap subordinate(const HarmonicMap& f, const SchwarzFunction& psi) {
  return HarmonicMap(compose(f.h(), psi.series()), compose(f.g(), psi.series()));
}

double check_domination(const PowerSeries& f, const SchwarzFunction& psi, const std::vector<double>& r_grid,
                        std::size_t M) {
  const PowerSeries composed = subordinate(f, psi);
  if (M > composed.order()) throw std::invalid_argument("term count exceeds the composition order");
  double worst = std::numeric_limits<double>::infinity();
  for (double r : r_grid) {
    if (!(r > 0.0 && r <= 1.0 / 3.0 + 1e-15)) throw std::invalid_argument("domination grid must lie in (0, 1/3]");
    worst = std::min(worst, modulus_sum(f, r, M) - modulus_sum(composed, r, M));
  }
  return worst;
}

BohrProfile check_harmonic_subordination_bound(const HarmonicMap& f1, const RadiusProblem& p,
                                               const VerifyOptions& opt) {
  const double radius = min_rule_radius(p);
  return bohr_profile(f1, radius, opt.bound.value_or(default_bound(p)), opt);
}

std::vector<CampaignEntry> run_domination_campaign(const CampaignOptions& opt) {
  if (opt.cases < 0 || opt.grid_points < 1) throw std::invalid_argument("invalid campaign size");
  std::vector<double> grid;
  for (int i = 1; i <= opt.grid_points; ++i) grid.push_back(static_cast<double>(i) / (3.0 * opt.grid_points));

  const std::vector<NamedMap> bases{{MapName::KoebeAnalytic, std::nullopt, opt.order},
                                    {MapName::HalfPlaneAnalytic, std::nullopt, opt.order}};
  std::vector<PowerSeries> analytic;
  for (const auto& spec : bases) analytic.push_back(make_map(spec).h());

  std::vector<CampaignEntry> out;
  for (int c = 0; c < opt.cases; ++c) {
    const std::uint64_t seed = opt.base_seed + static_cast<std::uint64_t>(c);
    const SchwarzFunction psi = random_schwarz(seed, 1 + c % 8, opt.order);
    for (std::size_t i = 0; i < bases.size(); ++i) {
      CampaignEntry e;
      e.seed = seed;
      e.map_id = std::string(map_id(bases[i].name));
      e.psi = psi.describe();
      e.worst_margin = check_domination(analytic[i], psi, grid, opt.order);
      out.push_back(std::move(e));
    }
  }
  return out;
}

}  // namespace bohr
