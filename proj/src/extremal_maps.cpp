#include "bohr/extremal_maps.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace bohr {

namespace {

constexpr std::array<std::pair<MapName, std::string_view>, 7> kIds{{
    {MapName::KoebeAnalytic, "koebe_analytic"},
    {MapName::HalfPlaneAnalytic, "half_plane_analytic"},
    {MapName::HarmonicKoebe, "harmonic_koebe_K"},
    {MapName::HarmonicHalfPlane, "half_plane_L"},
    {MapName::KoebeUnitDilatation, "f0_sharp"},
    {MapName::KoebeQuasiconformal, "p_k"},
    {MapName::HalfPlaneQuasiconformal, "q_k"},
}};

void check_open_disc(Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw std::invalid_argument("evaluation point is not finite");
  if (std::abs(z) >= 1.0) throw std::domain_error("closed forms are evaluated only inside the unit disc");
}

}  // namespace

std::string_view map_id(MapName name) {
  for (const auto& [n, id] : kIds)
    if (n == name) return id;
  throw std::logic_error("unhandled map name");
}

MapName parse_map_id(std::string_view id) {
  if (id == "f0") return MapName::KoebeUnitDilatation;
  for (const auto& [n, s] : kIds)
    if (s == id) return n;
  throw std::invalid_argument("unknown map '" + std::string(id) + "'");
}

std::vector<MapName> all_maps() {
  std::vector<MapName> out;
  for (const auto& entry : kIds) out.push_back(entry.first);
  return out;
}

bool needs_parameter(MapName name) {
  return name == MapName::KoebeQuasiconformal || name == MapName::HalfPlaneQuasiconformal;
}

void NamedMap::validate() const {
  if (needs_parameter(name)) {
    if (!k) throw std::invalid_argument(std::string(map_id(name)) + " requires the parameter k");
    if (!(*k >= 0.0 && *k < 1.0)) throw std::invalid_argument("k must lie in [0, 1)");
  } else if (k) {
    throw std::invalid_argument(std::string(map_id(name)) + " takes no parameter k");
  }
  if (order < 1) throw std::invalid_argument("map order must be at least 1");
}

HarmonicMap make_map(const NamedMap& spec) {
  spec.validate();
  const std::size_t M = spec.order;
  std::vector<double> a(M + 1, 0.0);
  std::vector<double> b(M + 1, 0.0);
  for (std::size_t m = 1; m <= M; ++m) {
    const double x = static_cast<double>(m);
    switch (spec.name) {
      case MapName::KoebeAnalytic: a[m] = x; break;
      case MapName::HalfPlaneAnalytic: a[m] = 1.0; break;
      case MapName::HarmonicKoebe:
        a[m] = (x + 1.0) * (2.0 * x + 1.0) / 6.0;
        b[m] = (x - 1.0) * (2.0 * x - 1.0) / 6.0;
        break;
      case MapName::HarmonicHalfPlane:
        a[m] = (x + 1.0) / 2.0;
        b[m] = (1.0 - x) / 2.0;
        break;
      case MapName::KoebeUnitDilatation:
        a[m] = x;
        b[m] = (x - 1.0) * (x - 1.0) / x;
        break;
      case MapName::KoebeQuasiconformal:
        a[m] = x;
        b[m] = *spec.k * x;
        break;
      case MapName::HalfPlaneQuasiconformal:
        a[m] = 1.0;
        b[m] = *spec.k;
        break;
    }
  }
  return HarmonicMap(PowerSeries::from_real(a), PowerSeries::from_real(b));
}

Complex closed_form_eval(const NamedMap& spec, Complex z) {
  spec.validate();
  check_open_disc(z);
  const Complex one{1.0, 0.0};
  const Complex u = one - z;
  const Complex koebe = z / (u * u);
  const Complex half_plane = z / u;
  Complex h, g;
  switch (spec.name) {
    case MapName::KoebeAnalytic: h = koebe; break;
    case MapName::HalfPlaneAnalytic: h = half_plane; break;
    case MapName::HarmonicKoebe: {
      const Complex cube = u * u * u;
      h = (z - z * z / 2.0 + z * z * z / 6.0) / cube;
      g = (z * z / 2.0 + z * z * z / 6.0) / cube;
      break;
    }
    case MapName::HarmonicHalfPlane:
      h = 0.5 * (half_plane + koebe);
      g = 0.5 * (half_plane - koebe);
      break;
    case MapName::KoebeUnitDilatation:
      h = koebe;
      g = koebe - 2.0 * half_plane - std::log(u);
      break;
    case MapName::KoebeQuasiconformal:
      h = koebe;
      g = *spec.k * koebe;
      break;
    case MapName::HalfPlaneQuasiconformal:
      h = half_plane;
      g = *spec.k * half_plane;
      break;
  }
  return h + std::conj(g);
}

double tail_constant(MapName name) {
  switch (name) {
    case MapName::HarmonicKoebe:
    case MapName::HarmonicHalfPlane:
    case MapName::HalfPlaneAnalytic: return 1.0;
    default: return 2.0;
  }
}

}  // namespace bohr
