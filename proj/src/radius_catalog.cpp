#include "bohr/radius_catalog.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace bohr {

namespace {

constexpr std::array<std::pair<RadiusKind, std::string_view>, 15> kIds{{
    {RadiusKind::SubordinateUnivalent, "thm11"},
    {RadiusKind::SubordinateConvex, "thm11_convex"},
    {RadiusKind::QuasiconformalDistance, "thm12"},
    {RadiusKind::QuasiconformalDistanceConvex, "thm12_convex"},
    {RadiusKind::NormalizedSubordinate, "thm22"},
    {RadiusKind::Quasiconformal, "thm23"},
    {RadiusKind::QuasiconformalConvex, "thm23_convex"},
    {RadiusKind::QuasiconformalSubordinate, "thm23_sub"},
    {RadiusKind::QuasiconformalSubordinateConvex, "thm23_sub_convex"},
    {RadiusKind::MonomialDilatation, "thm24"},
    {RadiusKind::UnitMonomialDilatation, "cor25"},
    {RadiusKind::MobiusDilatation, "thm27"},
    {RadiusKind::ConvexShear, "thm29"},
    {RadiusKind::ConvexShearNormalized, "thm210"},
    {RadiusKind::ConvexHarmonic, "thm211"},
}};

// (K+1)/(2K+1+sqrt(K(3K+2))), the rationalized root of (1+k) r/(1-r)^2 = 1.
double quasiconformal_radius(double K) { return (K + 1.0) / (2.0 * K + 1.0 + std::sqrt(K * (3.0 * K + 2.0))); }

}  // namespace

RadiusProblem RadiusProblem::quasiconformal_distance(double K, bool convex) {
  RadiusProblem p{convex ? RadiusKind::QuasiconformalDistanceConvex : RadiusKind::QuasiconformalDistance};
  p.K = K;
  p.validate();
  return p;
}

RadiusProblem RadiusProblem::quasiconformal(double K, bool convex) {
  RadiusProblem p{convex ? RadiusKind::QuasiconformalConvex : RadiusKind::Quasiconformal};
  p.K = K;
  p.validate();
  return p;
}

RadiusProblem RadiusProblem::quasiconformal_subordinate(double K, bool convex) {
  RadiusProblem p{convex ? RadiusKind::QuasiconformalSubordinateConvex : RadiusKind::QuasiconformalSubordinate};
  p.K = K;
  p.validate();
  return p;
}

RadiusProblem RadiusProblem::monomial(double k, int n) {
  RadiusProblem p{RadiusKind::MonomialDilatation};
  p.k = k;
  p.n = n;
  p.validate();
  return p;
}

RadiusProblem RadiusProblem::unit_monomial(int n) {
  RadiusProblem p{RadiusKind::UnitMonomialDilatation};
  p.n = n;
  p.validate();
  return p;
}

RadiusProblem RadiusProblem::mobius(double a) {
  RadiusProblem p{RadiusKind::MobiusDilatation};
  p.a = a;
  p.validate();
  return p;
}

bool RadiusProblem::uses_K() const {
  switch (kind) {
    case RadiusKind::QuasiconformalDistance:
    case RadiusKind::QuasiconformalDistanceConvex:
    case RadiusKind::Quasiconformal:
    case RadiusKind::QuasiconformalConvex:
    case RadiusKind::QuasiconformalSubordinate:
    case RadiusKind::QuasiconformalSubordinateConvex: return true;
    default: return false;
  }
}

bool RadiusProblem::uses_n() const {
  return kind == RadiusKind::MonomialDilatation || kind == RadiusKind::UnitMonomialDilatation;
}

void RadiusProblem::validate() const {
  if (uses_K() && !(K >= 1.0 && std::isfinite(K)))
    throw std::invalid_argument("quasiconformality constant K must be finite and at least 1");
  if (uses_k() && !(k > 0.0 && k <= 1.0)) throw std::invalid_argument("dilatation amplitude k must lie in (0, 1]");
  if (uses_n() && n < 1) throw std::invalid_argument("dilatation exponent n must be at least 1");
  if (uses_a() && !(std::abs(a) < 1.0)) throw std::invalid_argument("Mobius parameter must satisfy |a| < 1");
}

std::string_view radius_id(RadiusKind kind) {
  for (const auto& [k, id] : kIds)
    if (k == kind) return id;
  throw std::logic_error("unhandled radius kind");
}

RadiusKind parse_radius_id(std::string_view id) {
  for (const auto& [k, s] : kIds)
    if (s == id) return k;
  throw std::invalid_argument("unknown theorem id '" + std::string(id) + "'");
}

std::vector<RadiusKind> all_radius_kinds() {
  std::vector<RadiusKind> out;
  for (const auto& entry : kIds) out.push_back(entry.first);
  return out;
}

bool is_root_defined(RadiusKind kind) {
  switch (kind) {
    case RadiusKind::MonomialDilatation:
    case RadiusKind::UnitMonomialDilatation:
    case RadiusKind::MobiusDilatation:
    case RadiusKind::ConvexShear:
    case RadiusKind::ConvexShearNormalized:
    case RadiusKind::ConvexHarmonic: return true;
    default: return false;
  }
}

double default_bound(const RadiusProblem& p) {
  switch (p.kind) {
    case RadiusKind::SubordinateUnivalent:
    case RadiusKind::QuasiconformalDistance: return 0.25;
    case RadiusKind::SubordinateConvex:
    case RadiusKind::QuasiconformalDistanceConvex: return 0.5;
    case RadiusKind::MobiusDilatation: return 1.0 + std::abs(p.a);
    default: return 1.0;
  }
}

double majorant_value(const RadiusProblem& p, double r) {
  p.validate();
  if (!(r >= 0.0 && r < 1.0)) throw std::domain_error("majorant argument must lie in [0, 1)");
  const double u = 1.0 - r;
  switch (p.kind) {
    case RadiusKind::MonomialDilatation:
    case RadiusKind::UnitMonomialDilatation: {
      const double k = p.kind == RadiusKind::UnitMonomialDilatation ? 1.0 : p.k;
      const double n = p.n;
      return (k + 1.0) * r / (u * u) - 2.0 * n * k * r / u - k * n * n * std::log1p(-r) - 1.0;
    }
    case RadiusKind::MobiusDilatation: return ((r - 3.0) * r + 5.0) * r - 1.0;
    case RadiusKind::ConvexShear: return -((2.0 * r - 5.0) * r + 1.0);
    case RadiusKind::ConvexShearNormalized: return 2.0 * r * (r + 1.0) / (3.0 * u * u * u) + r / (3.0 * u) - 1.0;
    case RadiusKind::ConvexHarmonic: return r / (u * u) - 1.0;
    default:
      throw std::invalid_argument(std::string(radius_id(p.kind)) +
                                  " has a closed-form radius and no root-defined majorant");
  }
}

std::optional<double> closed_form_radius(const RadiusProblem& p) {
  p.validate();
  const double K = p.K;
  switch (p.kind) {
    case RadiusKind::SubordinateUnivalent: return 1.0 / (3.0 + std::sqrt(8.0));
    case RadiusKind::SubordinateConvex:
    case RadiusKind::NormalizedSubordinate: return 1.0 / 3.0;
    case RadiusKind::QuasiconformalDistance:
      return (K + 1.0) / (5.0 * K + 1.0 + std::sqrt(8.0 * K * (3.0 * K + 1.0)));
    case RadiusKind::QuasiconformalDistanceConvex: return (K + 1.0) / (5.0 * K + 1.0);
    case RadiusKind::Quasiconformal: return quasiconformal_radius(K);
    case RadiusKind::QuasiconformalConvex: return (K + 1.0) / (3.0 * K + 1.0);
    case RadiusKind::QuasiconformalSubordinate: return std::min(1.0 / 3.0, quasiconformal_radius(K));
    case RadiusKind::QuasiconformalSubordinateConvex: return std::min(1.0 / 3.0, (K + 1.0) / (3.0 * K + 1.0));
    case RadiusKind::ConvexShear: return 2.0 / (5.0 + std::sqrt(17.0));
    case RadiusKind::ConvexHarmonic: return 2.0 / (3.0 + std::sqrt(5.0));
    default: return std::nullopt;
  }
}

double majorant_identity_term(MajorantIdentity id, std::size_t m) {
  const double x = static_cast<double>(m);
  switch (id) {
    case MajorantIdentity::SumMRm: return x;
    case MajorantIdentity::SumRm: return 1.0;
    case MajorantIdentity::SumRmOverM: return 1.0 / x;
    case MajorantIdentity::SumMMplus1Rm: return x * (x + 1.0);
    case MajorantIdentity::SumTwoM2Plus1Over3Rm: return (2.0 * x * x + 1.0) / 3.0;
  }
  throw std::logic_error("unhandled identity");
}

double majorant_identity_closed_form(MajorantIdentity id, double r) {
  const double u = 1.0 - r;
  switch (id) {
    case MajorantIdentity::SumMRm: return r / (u * u);
    case MajorantIdentity::SumRm: return r / u;
    case MajorantIdentity::SumRmOverM: return -std::log1p(-r);
    case MajorantIdentity::SumMMplus1Rm: return r * (1.0 + r) / (u * u * u) + r / (u * u);
    case MajorantIdentity::SumTwoM2Plus1Over3Rm: return 2.0 * r * (1.0 + r) / (3.0 * u * u * u) + r / (3.0 * u);
  }
  throw std::logic_error("unhandled identity");
}

double majorant_identity_check(MajorantIdentity id, double r, std::size_t M) {
  if (!(r >= 0.0 && r <= 0.95)) throw std::domain_error("identity check needs 0 <= r <= 0.95");
  double sum = 0.0;
  double power = r;
  for (std::size_t m = 1; m <= M; ++m) {
    sum += majorant_identity_term(id, m) * power;
    power *= r;
  }
  return std::abs(sum - majorant_identity_closed_form(id, r));
}

double square_weighted_tail(double r, std::size_t M) {
  if (!(r >= 0.0 && r < 1.0)) throw std::domain_error("tail needs 0 <= r < 1");
  if (r == 0.0) return 0.0;
  const double N = static_cast<double>(M + 1);
  const double u = 1.0 - r;
  return std::pow(r, N) * (N * N / u + 2.0 * N * r / (u * u) + r * (1.0 + r) / (u * u * u));
}

}  // namespace bohr
