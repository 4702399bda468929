#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

#include "bohr/radius_catalog.hpp"

namespace bohr {

/// Thrown when a bracket has no sign change or f is not finite somewhere.
class BracketError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct SolverTolerances {
  double width = 1e-13;
  double residual = 1e-9;
  int max_iterations = 400;
};

/// Bracketed root with the evidence that certifies it. Closed-form radii are
/// wrapped in a degenerate certificate with lo == root == hi and zero
/// iterations.
struct RootCertificate {
  std::optional<RadiusProblem> problem;
  double lo = 0.0;
  double hi = 0.0;
  double root = 0.0;
  double residual = 0.0;
  int iterations = 0;
  bool monotone_checked = false;

  bool degenerate() const { return iterations == 0 && lo == hi; }
};

/// Safeguarded secant/bisection on [lo, hi] with f(lo) < 0 < f(hi).
RootCertificate bracket_root(const std::function<double(double)>& f, double lo, double hi,
                             const SolverTolerances& tol = {});

/// Default search interval for the majorants, which diverge at r = 1.
inline constexpr double kBracketLo = 1e-9;
inline constexpr double kBracketHi = 1.0 - 1e-9;

/// Radius of `p`: the bracketed root of its majorant, or the closed form.
/// Root-defined kinds are also scanned for monotonicity on 1000 points.
RootCertificate solve_radius(const RadiusProblem& p, const SolverTolerances& tol = {});

/// min(1/3, radius of p) for the subordination classes.
double min_rule_radius(const RadiusProblem& p, const SolverTolerances& tol = {});

/// True iff f is strictly increasing on `samples` equally spaced points of
/// [lo, hi] and changes sign exactly once there.
bool increasing_with_single_crossing(const std::function<double(double)>& f, double lo, double hi, int samples);

/// Re-evaluates f at the certificate's points and checks every invariant.
bool certificate_valid(const RootCertificate& c, const std::function<double(double)>& f,
                       const SolverTolerances& tol = {});

}  // namespace bohr
