#include "bohr/radius_solver.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace bohr {

namespace {

double checked(const std::function<double(double)>& f, double x) {
  const double v = f(x);
  if (!std::isfinite(v)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "function value is not finite at r = " << x;
    throw BracketError(msg.str());
  }
  return v;
}

}  // namespace

RootCertificate bracket_root(const std::function<double(double)>& f, double lo, double hi,
                             const SolverTolerances& tol) {
  if (!(tol.width > 0.0)) throw std::invalid_argument("width tolerance must be positive");
  if (!(lo < hi)) throw BracketError("bracket invalid: lo must be below hi");
  double flo = checked(f, lo);
  double fhi = checked(f, hi);
  if (!(flo < 0.0 && fhi > 0.0)) throw BracketError("bracket invalid: no sign change from negative to positive");

  RootCertificate cert;
  int it = 0;
  bool secant_turn = true;
  while (hi - lo > tol.width && it < tol.max_iterations) {
    double mid = 0.5 * (lo + hi);
    if (secant_turn) {
      // Secant point of the current bracket, used only when well inside it.
      const double s = lo - flo * (hi - lo) / (fhi - flo);
      const double guard = 0.01 * (hi - lo);
      if (s > lo + guard && s < hi - guard) mid = s;
    }
    secant_turn = !secant_turn;
    if (mid <= lo || mid >= hi) break;
    ++it;
    const double fm = checked(f, mid);
    if (fm < 0.0) {
      lo = mid;
      flo = fm;
    } else if (fm > 0.0) {
      hi = mid;
      fhi = fm;
    } else {
      // Exact zero: widen symmetrically until both signs reappear.
      double step = std::nextafter(mid, INFINITY) - mid;
      bool found = false;
      while (!found && 2.0 * step <= tol.width) {
        const double l = std::max(lo, mid - step);
        const double h = std::min(hi, mid + step);
        const double fl = checked(f, l);
        const double fh = checked(f, h);
        if (fl < 0.0 && fh > 0.0) {
          lo = l, flo = fl, hi = h, fhi = fh;
          found = true;
        }
        step *= 2.0;
      }
      if (!found) throw BracketError("function vanishes on an interval wider than the tolerance");
      break;
    }
  }
  if (hi - lo > tol.width) throw BracketError("bracket did not shrink to the width tolerance");

  cert.lo = lo;
  cert.hi = hi;
  cert.root = 0.5 * (lo + hi);
  if (cert.root <= lo || cert.root >= hi) cert.root = std::abs(flo) < std::abs(fhi) ? lo : hi;
  cert.residual = std::abs(checked(f, cert.root));
  cert.iterations = it;
  if (cert.residual > tol.residual) {
    std::ostringstream msg;
    msg << "residual " << cert.residual << " exceeds tolerance " << tol.residual;
    throw BracketError(msg.str());
  }
  return cert;
}

bool increasing_with_single_crossing(const std::function<double(double)>& f, double lo, double hi, int samples) {
  if (samples < 2) throw std::invalid_argument("need at least two samples");
  double prev = f(lo);
  int crossings = 0;
  for (int i = 1; i < samples; ++i) {
    const double x = lo + (hi - lo) * i / (samples - 1);
    const double v = f(x);
    if (!(v > prev)) return false;
    if (prev < 0.0 && v >= 0.0) ++crossings;
    prev = v;
  }
  return crossings == 1;
}

RootCertificate solve_radius(const RadiusProblem& p, const SolverTolerances& tol) {
  p.validate();
  if (!is_root_defined(p.kind)) {
    const double r = *closed_form_radius(p);
    RootCertificate cert;
    cert.problem = p;
    cert.lo = cert.hi = cert.root = r;
    return cert;
  }
  const auto f = [&p](double r) { return majorant_value(p, r); };
  RootCertificate cert = bracket_root(f, kBracketLo, kBracketHi, tol);
  cert.problem = p;
  cert.monotone_checked = increasing_with_single_crossing(f, kBracketLo, kBracketHi, 1000);
  return cert;
}

double min_rule_radius(const RadiusProblem& p, const SolverTolerances& tol) {
  return std::min(1.0 / 3.0, solve_radius(p, tol).root);
}

bool certificate_valid(const RootCertificate& c, const std::function<double(double)>& f,
                       const SolverTolerances& tol) {
  if (c.degenerate()) return c.residual == 0.0;
  if (!(c.lo < c.root && c.root < c.hi) && !(c.root == c.lo || c.root == c.hi)) return false;
  if (c.hi - c.lo > tol.width) return false;
  if (!(f(c.lo) < 0.0 && f(c.hi) > 0.0)) return false;
  return std::abs(f(c.root)) == c.residual && c.residual <= tol.residual;
}

}  // namespace bohr
