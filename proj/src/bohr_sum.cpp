#include "bohr/bohr_sum.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

namespace bohr {

PartialSum bohr_partial_sum(const HarmonicMap& f, double r, std::size_t M, double tail_constant) {
  if (!(r >= 0.0 && r < 1.0)) throw std::domain_error("Bohr sums need 0 <= r < 1");
  if (M > f.order()) throw std::invalid_argument("term count exceeds the map's truncation order");
  const auto a = f.h().coeffs();
  const auto b = f.g().coeffs();
  PartialSum out;
  double power = r;
  for (std::size_t m = 1; m <= M; ++m) {
    out.sum += (std::abs(a[m]) + std::abs(b[m])) * power;
    power *= r;
  }
  out.tail = tail_constant * square_weighted_tail(r, M);
  return out;
}

bool BohrProfile::all_pass() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](bool v) { return v; });
}

BohrProfile bohr_profile(const HarmonicMap& f, double radius, double bound, const VerifyOptions& opt) {
  if (!(opt.margin > 0.0)) throw std::invalid_argument("margin must be positive");
  if (opt.grid_size < 1) throw std::invalid_argument("grid size must be positive");
  const double top = radius - opt.margin;
  if (!(top > 0.0 && top < 1.0)) throw std::invalid_argument("margin leaves an empty grid");
  const std::size_t M = opt.terms.value_or(std::min<std::size_t>(f.order(), 2000));

  BohrProfile profile;
  profile.map_id = opt.map_id;
  profile.bound = bound;
  for (int i = 1; i <= opt.grid_size; ++i) {
    const double r = top * i / opt.grid_size;
    const PartialSum s = bohr_partial_sum(f, r, M, opt.tail_constant);
    profile.r_grid.push_back(r);
    profile.partial_sums.push_back(s.sum);
    profile.tail_bounds.push_back(s.tail);
    profile.verdicts.push_back(s.sum + s.tail <= bound);
  }
  return profile;
}

BohrProfile verify_inequality(const HarmonicMap& f, const RadiusProblem& p, const VerifyOptions& opt) {
  const double radius = solve_radius(p).root;
  return bohr_profile(f, radius, opt.bound.value_or(default_bound(p)), opt);
}

double sharpness_scan(const HarmonicMap& f, const RadiusProblem& p, double epsilon, std::optional<double> bound,
                      double tail_constant) {
  const double r = solve_radius(p).root + epsilon;
  if (!(r > 0.0 && r < 1.0)) throw std::domain_error("radius plus epsilon must lie in (0, 1)");
  const std::size_t M = std::min<std::size_t>(f.order(), 2000);
  const PartialSum s = bohr_partial_sum(f, r, M, tail_constant);
  // The truncated sum is a lower bound on the full sum.
  return s.sum - bound.value_or(default_bound(p));
}

namespace {

BoundaryReach reach(const std::function<Complex(Complex)>& eval_at, double r, int samples) {
  if (!(r > 0.0 && r < 1.0)) throw std::domain_error("circle radius must lie in (0, 1)");
  if (samples < 64) throw std::invalid_argument("boundary sampling needs at least 64 points");
  BoundaryReach out{0.0, INFINITY};
  for (int j = 0; j < samples; ++j) {
    const double mod = std::abs(eval_at(std::polar(r, 2.0 * std::numbers::pi * j / samples)));
    out.max_mod = std::max(out.max_mod, mod);
    out.min_mod = std::min(out.min_mod, mod);
  }
  return out;
}

}  // namespace

BoundaryReach boundary_reach(const NamedMap& spec, double r, int samples) {
  spec.validate();
  return reach([&spec](Complex z) { return closed_form_eval(spec, z); }, r, samples);
}

BoundaryReach boundary_reach(const HarmonicMap& f, double r, int samples) {
  return reach([&f](Complex z) { return eval_harmonic(f, z); }, r, samples);
}

}  // namespace bohr
