#pragma once

#include <functional>
#include <vector>

#include "bohr/series.hpp"

namespace bohr {

/// w(z) = k e^{i theta} z^n. k = 1 is admitted as the limiting case of the
/// quasiconformal family.
struct MonomialDilatation {
  double k = 1.0;
  double theta = 0.0;
  int n = 1;

  /// Throws std::invalid_argument unless 0 < k <= 1, n >= 1, theta finite.
  void validate() const;
  Complex operator()(Complex z) const;
};

/// w(z) = (a + z)/(1 + a z), or (a - z)/(1 - a z) when `minus` is set.
struct MobiusDilatation {
  double a = 0.0;
  bool minus = false;

  void validate() const;
  Complex operator()(Complex z) const;
};

/// Co-analytic part with g' = w h' for a monomial dilatation:
/// b_{m+n} = k e^{i theta} m/(m+n) a_m. Same order as h.
PowerSeries g_from_monomial(const PowerSeries& h, const MonomialDilatation& d);

/// Co-analytic part with g' = w h' for a Mobius dilatation, via the
/// coefficient recurrence m b_m + a (m-1) b_{m-1} = a m a_m + (m-1) a_{m-1}
/// (signs of a and z flipped together for the minus variant).
PowerSeries g_from_mobius(const PowerSeries& h, const MobiusDilatation& d);

/// Max over `points` of |g'(z) - w(z) h'(z)|.
double dilatation_residual(const HarmonicMap& f, const std::function<Complex(Complex)>& w,
                           const std::vector<Complex>& points);

/// Points on `rings` concentric circles of radius up to `max_radius`,
/// `per_ring` equally spaced on each, plus the origin.
std::vector<Complex> disc_grid(double max_radius, int rings, int per_ring);

}  // namespace bohr
