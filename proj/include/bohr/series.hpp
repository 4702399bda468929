#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace bohr {

using Complex = std::complex<double>;

/// Truncated power series c_0 + c_1 z + ... + c_M z^M with complex
/// coefficients. Immutable once built; every operation returns a new series.
class PowerSeries {
public:
  /// Zero series of the given truncation order.
  explicit PowerSeries(std::size_t order = 0);
  /// Throws std::invalid_argument on an empty list or a non-finite entry.
  explicit PowerSeries(std::vector<Complex> coeffs);
  static PowerSeries from_real(const std::vector<double>& coeffs);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  std::span<const Complex> coeffs() const noexcept { return coeffs_; }
  const Complex& operator[](std::size_t m) const { return coeffs_.at(m); }

  /// Copy truncated (or zero-padded) to a new order.
  PowerSeries truncated(std::size_t order) const;
  /// Smallest index with a nonzero coefficient; order()+1 for the zero series.
  std::size_t valuation() const noexcept;

  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

private:
  std::vector<Complex> coeffs_;
};

/// f = h + conj(g). g(0) must vanish and both parts share one order.
class HarmonicMap {
public:
  HarmonicMap(PowerSeries h, PowerSeries g);
  /// Analytic map (g = 0).
  static HarmonicMap analytic(PowerSeries h);

  const PowerSeries& h() const noexcept { return h_; }
  const PowerSeries& g() const noexcept { return g_; }
  std::size_t order() const noexcept { return h_.order(); }

  /// h(0) = 0 and h'(0) = 1.
  bool normalized() const noexcept;

private:
  PowerSeries h_;
  PowerSeries g_;
};

/// Horner evaluation. Rejects non-finite z and |z| > 1.
Complex eval(const PowerSeries& s, Complex z);

/// Product truncated to min(a.order(), b.order()).
PowerSeries cauchy_product(const PowerSeries& a, const PowerSeries& b);

/// Antiderivative vanishing at 0; order grows by one.
PowerSeries term_integrate(const PowerSeries& s);

/// Derivative; order shrinks by one (an order-0 series maps to zero).
PowerSeries term_differentiate(const PowerSeries& s);

/// Coefficients of f(psi(z)) truncated to min(f.order(), psi.order()).
/// Throws std::invalid_argument unless psi(0) = 0.
PowerSeries compose(const PowerSeries& f, const PowerSeries& psi);

/// h(z) + conj(g(z)); requires |z| < 1.
Complex eval_harmonic(const HarmonicMap& f, Complex z);

/// Sum_{m=from..M} |c_m| r^m for 0 <= r < 1.
double modulus_sum(const PowerSeries& s, double r, std::size_t M, std::size_t from = 0);

}  // namespace bohr
