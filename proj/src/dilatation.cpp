#include "bohr/dilatation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bohr {

void MonomialDilatation::validate() const {
  if (!(k > 0.0 && k <= 1.0)) throw std::invalid_argument("dilatation amplitude k must lie in (0, 1]");
  if (n < 1) throw std::invalid_argument("dilatation exponent n must be at least 1");
  if (!std::isfinite(theta)) throw std::invalid_argument("dilatation phase must be finite");
}

Complex MonomialDilatation::operator()(Complex z) const {
  return std::polar(k, std::fmod(theta, 2.0 * std::numbers::pi)) * std::pow(z, n);
}

void MobiusDilatation::validate() const {
  if (!(std::abs(a) < 1.0)) throw std::invalid_argument("Mobius parameter must satisfy |a| < 1");
}

Complex MobiusDilatation::operator()(Complex z) const {
  const double s = minus ? -1.0 : 1.0;
  return (a + s * z) / (1.0 + s * a * z);
}

PowerSeries g_from_monomial(const PowerSeries& h, const MonomialDilatation& d) {
  d.validate();
  const auto n = static_cast<std::size_t>(d.n);
  if (h.order() < n + 1) throw std::invalid_argument("analytic part is too short for the dilatation exponent");
  const Complex factor = std::polar(d.k, std::fmod(d.theta, 2.0 * std::numbers::pi));
  const auto a = h.coeffs();
  std::vector<Complex> b(a.size(), Complex{});
  for (std::size_t m = 1; m + n < a.size(); ++m)
    b[m + n] = factor * (static_cast<double>(m) / static_cast<double>(m + n)) * a[m];
  return PowerSeries(std::move(b));
}

PowerSeries g_from_mobius(const PowerSeries& h, const MobiusDilatation& d) {
  d.validate();
  if (h.order() < 1) throw std::invalid_argument("analytic part must have order at least 1");
  // (a - z)/(1 - a z) = -(a' + z)/(1 + a' z) with a' = -a.
  const double a = d.minus ? -d.a : d.a;
  const double sign = d.minus ? -1.0 : 1.0;
  const auto c = h.coeffs();
  std::vector<Complex> b(c.size(), Complex{});
  b[1] = a * c[1];
  for (std::size_t m = 2; m < c.size(); ++m) {
    const double mm = static_cast<double>(m);
    b[m] = (a * mm * c[m] + (mm - 1.0) * c[m - 1] - a * (mm - 1.0) * b[m - 1]) / mm;
  }
  if (sign < 0.0)
    for (auto& x : b) x = -x;
  return PowerSeries(std::move(b));
}

double dilatation_residual(const HarmonicMap& f, const std::function<Complex(Complex)>& w,
                           const std::vector<Complex>& points) {
  const PowerSeries dh = term_differentiate(f.h());
  const PowerSeries dg = term_differentiate(f.g());
  double worst = 0.0;
  for (const Complex& z : points) worst = std::max(worst, std::abs(eval(dg, z) - w(z) * eval(dh, z)));
  return worst;
}

std::vector<Complex> disc_grid(double max_radius, int rings, int per_ring) {
  std::vector<Complex> points{Complex{}};
  for (int i = 1; i <= rings; ++i) {
    const double radius = max_radius * i / rings;
    for (int j = 0; j < per_ring; ++j)
      points.push_back(std::polar(radius, 2.0 * std::numbers::pi * j / per_ring));
  }
  return points;
}

}  // namespace bohr
