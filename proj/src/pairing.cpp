#include "bohr/pairing.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bohr {

namespace {

bool one_of(MapName name, std::initializer_list<MapName> names) {
  return std::find(names.begin(), names.end(), name) != names.end();
}

bool constructs_dilatation(RadiusKind kind) {
  return kind == RadiusKind::MonomialDilatation || kind == RadiusKind::UnitMonomialDilatation ||
         kind == RadiusKind::MobiusDilatation;
}

constexpr double kParameterSlack = 1e-12;

}  // namespace

std::optional<std::string> incompatibility(const Pairing& p) {
  p.map.validate();
  p.problem.validate();
  const MapName m = p.map.name;
  const RadiusKind kind = p.problem.kind;
  const std::string pair = std::string(map_id(m)) + " with " + std::string(radius_id(kind));

  bool ok = false;
  switch (kind) {
    case RadiusKind::SubordinateUnivalent:
    case RadiusKind::NormalizedSubordinate:
      ok = one_of(m, {MapName::KoebeAnalytic, MapName::HalfPlaneAnalytic});
      break;
    case RadiusKind::SubordinateConvex: ok = m == MapName::HalfPlaneAnalytic; break;
    case RadiusKind::QuasiconformalDistance:
    case RadiusKind::Quasiconformal:
    case RadiusKind::QuasiconformalSubordinate:
      ok = one_of(m, {MapName::KoebeAnalytic, MapName::KoebeQuasiconformal});
      break;
    case RadiusKind::QuasiconformalDistanceConvex:
    case RadiusKind::QuasiconformalConvex:
    case RadiusKind::QuasiconformalSubordinateConvex:
      ok = one_of(m, {MapName::HalfPlaneAnalytic, MapName::HalfPlaneQuasiconformal});
      break;
    case RadiusKind::MonomialDilatation:
    case RadiusKind::MobiusDilatation:
      ok = one_of(m, {MapName::KoebeAnalytic, MapName::HalfPlaneAnalytic});
      break;
    case RadiusKind::UnitMonomialDilatation:
      ok = one_of(m, {MapName::KoebeAnalytic, MapName::HalfPlaneAnalytic}) ||
           (m == MapName::KoebeUnitDilatation && p.problem.n == 1);
      break;
    case RadiusKind::ConvexShear:
      ok = one_of(m, {MapName::HalfPlaneAnalytic, MapName::HarmonicHalfPlane, MapName::HalfPlaneQuasiconformal});
      break;
    case RadiusKind::ConvexShearNormalized:
      ok = one_of(m, {MapName::HalfPlaneAnalytic, MapName::HarmonicHalfPlane, MapName::HarmonicKoebe});
      break;
    case RadiusKind::ConvexHarmonic: ok = one_of(m, {MapName::HalfPlaneAnalytic, MapName::HarmonicHalfPlane}); break;
  }
  if (!ok) return pair + ": the map does not satisfy the statement's hypotheses";

  if (needs_parameter(m) && p.problem.uses_K() && *p.map.k > p.problem.dilatation_bound() + kParameterSlack)
    return pair + ": k exceeds (K-1)/(K+1), so the map is not K-quasiconformal";
  if (constructs_dilatation(kind) && p.map.order < static_cast<std::size_t>(p.problem.n) + 2)
    return pair + ": truncation order too small for the dilatation";
  return std::nullopt;
}

HarmonicMap build_map(const Pairing& p) {
  if (auto why = incompatibility(p)) throw std::invalid_argument(*why);
  const HarmonicMap base = make_map(p.map);
  if (p.map.name == MapName::KoebeUnitDilatation || !constructs_dilatation(p.problem.kind)) return base;

  switch (p.problem.kind) {
    case RadiusKind::MonomialDilatation:
      return HarmonicMap(base.h(), g_from_monomial(base.h(), {p.problem.k, p.theta, p.problem.n}));
    case RadiusKind::UnitMonomialDilatation:
      return HarmonicMap(base.h(), g_from_monomial(base.h(), {1.0, p.theta, p.problem.n}));
    case RadiusKind::MobiusDilatation:
      return HarmonicMap(base.h(), g_from_mobius(base.h(), {p.problem.a, p.mobius_minus}));
    default: return base;
  }
}

bool is_extremal(const Pairing& p) {
  if (incompatibility(p)) return false;
  const MapName m = p.map.name;
  const RadiusProblem& q = p.problem;
  const double k = p.map.k.value_or(0.0);
  const bool k_matches = std::abs(k - q.dilatation_bound()) <= kParameterSlack;
  switch (q.kind) {
    case RadiusKind::SubordinateUnivalent: return m == MapName::KoebeAnalytic;
    case RadiusKind::SubordinateConvex: return m == MapName::HalfPlaneAnalytic;
    case RadiusKind::QuasiconformalDistance:
    case RadiusKind::Quasiconformal: return k_matches;
    case RadiusKind::QuasiconformalSubordinate: return k_matches && q.K >= 2.0;
    case RadiusKind::QuasiconformalDistanceConvex:
    case RadiusKind::QuasiconformalConvex: return k_matches;
    case RadiusKind::QuasiconformalSubordinateConvex: return false;
    case RadiusKind::MonomialDilatation: return m == MapName::KoebeAnalytic && q.n == 1;
    case RadiusKind::UnitMonomialDilatation:
      return (m == MapName::KoebeAnalytic || m == MapName::KoebeUnitDilatation) && q.n == 1;
    case RadiusKind::ConvexShearNormalized: return m == MapName::HarmonicKoebe;
    case RadiusKind::ConvexHarmonic: return m == MapName::HarmonicHalfPlane;
    default: return false;
  }
}

}  // namespace bohr
