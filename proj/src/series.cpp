#include "bohr/series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace bohr {

namespace {

bool finite(const Complex& c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

void check_point(Complex z, bool open_disc) {
  if (!finite(z)) throw std::invalid_argument("evaluation point is not finite");
  const double mod = std::abs(z);
  if (open_disc ? mod >= 1.0 : mod > 1.0)
    throw std::domain_error("evaluation point outside the unit disc: |z| = " + std::to_string(mod));
}

}  // namespace

PowerSeries::PowerSeries(std::size_t order) : coeffs_(order + 1, Complex{}) {}

PowerSeries::PowerSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("power series needs at least one coefficient");
  for (std::size_t m = 0; m < coeffs_.size(); ++m)
    if (!finite(coeffs_[m]))
      throw std::invalid_argument("non-finite coefficient at index " + std::to_string(m));
}

PowerSeries PowerSeries::from_real(const std::vector<double>& coeffs) {
  return PowerSeries(std::vector<Complex>(coeffs.begin(), coeffs.end()));
}

PowerSeries PowerSeries::truncated(std::size_t order) const {
  std::vector<Complex> out(order + 1, Complex{});
  std::copy_n(coeffs_.begin(), std::min(out.size(), coeffs_.size()), out.begin());
  return PowerSeries(std::move(out));
}

std::size_t PowerSeries::valuation() const noexcept {
  for (std::size_t m = 0; m < coeffs_.size(); ++m)
    if (coeffs_[m] != Complex{}) return m;
  return coeffs_.size();
}

HarmonicMap::HarmonicMap(PowerSeries h, PowerSeries g) : h_(std::move(h)), g_(std::move(g)) {
  if (h_.order() != g_.order())
    throw std::invalid_argument("analytic and co-analytic parts must share a truncation order");
  if (g_[0] != Complex{}) throw std::invalid_argument("co-analytic part must vanish at the origin");
}

HarmonicMap HarmonicMap::analytic(PowerSeries h) {
  const auto order = h.order();
  return HarmonicMap(std::move(h), PowerSeries(order));
}

bool HarmonicMap::normalized() const noexcept {
  return h_.order() >= 1 && h_[0] == Complex{} && h_[1] == Complex{1.0, 0.0};
}

Complex eval(const PowerSeries& s, Complex z) {
  check_point(z, false);
  const auto c = s.coeffs();
  Complex acc = c.back();
  for (std::size_t m = c.size() - 1; m-- > 0;) acc = acc * z + c[m];
  return acc;
}

PowerSeries cauchy_product(const PowerSeries& a, const PowerSeries& b) {
  const std::size_t order = std::min(a.order(), b.order());
  const auto x = a.coeffs();
  const auto y = b.coeffs();
  std::vector<Complex> out(order + 1, Complex{});
  for (std::size_t i = 0; i <= order; ++i) {
    if (x[i] == Complex{}) continue;
    for (std::size_t j = 0; i + j <= order; ++j) out[i + j] += x[i] * y[j];
  }
  return PowerSeries(std::move(out));
}

PowerSeries term_integrate(const PowerSeries& s) {
  const auto c = s.coeffs();
  std::vector<Complex> out(c.size() + 1, Complex{});
  for (std::size_t m = 0; m < c.size(); ++m) out[m + 1] = c[m] / static_cast<double>(m + 1);
  return PowerSeries(std::move(out));
}

PowerSeries term_differentiate(const PowerSeries& s) {
  const auto c = s.coeffs();
  if (c.size() == 1) return PowerSeries(0);
  std::vector<Complex> out(c.size() - 1);
  for (std::size_t m = 1; m < c.size(); ++m) out[m - 1] = static_cast<double>(m) * c[m];
  return PowerSeries(std::move(out));
}

PowerSeries compose(const PowerSeries& f, const PowerSeries& psi) {
  if (psi[0] != Complex{})
    throw std::invalid_argument("composition requires psi(0) = 0");
  const std::size_t order = std::min(f.order(), psi.order());
  const auto inner = psi.coeffs();
  const auto outer = f.coeffs();

  // power holds psi^j, whose coefficients below index j vanish.
  std::vector<Complex> result(order + 1, Complex{});
  std::vector<Complex> power(order + 1, Complex{});
  std::vector<Complex> next(order + 1);
  power[0] = 1.0;
  result[0] = outer[0];
  for (std::size_t j = 1; j <= order; ++j) {
    std::fill(next.begin(), next.end(), Complex{});
    for (std::size_t i = j - 1; i <= order; ++i) {
      if (power[i] == Complex{}) continue;
      for (std::size_t l = 1; i + l <= order; ++l) next[i + l] += power[i] * inner[l];
    }
    power.swap(next);
    if (outer[j] == Complex{}) continue;
    for (std::size_t i = j; i <= order; ++i) result[i] += outer[j] * power[i];
  }
  return PowerSeries(std::move(result));
}

Complex eval_harmonic(const HarmonicMap& f, Complex z) {
  check_point(z, true);
  return eval(f.h(), z) + std::conj(eval(f.g(), z));
}

double modulus_sum(const PowerSeries& s, double r, std::size_t M, std::size_t from) {
  if (!(r >= 0.0 && r < 1.0)) throw std::domain_error("radius must lie in [0, 1)");
  if (M > s.order()) throw std::invalid_argument("summation bound exceeds truncation order");
  const auto c = s.coeffs();
  double sum = 0.0;
  double power = 1.0;
  for (std::size_t m = 0; m <= M; ++m) {
    if (m >= from) sum += std::abs(c[m]) * power;
    power *= r;
  }
  return sum;
}

}  // namespace bohr
