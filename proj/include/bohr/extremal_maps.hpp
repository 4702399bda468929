#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bohr/series.hpp"

namespace bohr {

/// Named extremal maps. The comment after each entry gives its stable CLI id.
enum class MapName {
  KoebeAnalytic,            // koebe_analytic: z/(1-z)^2
  HalfPlaneAnalytic,        // half_plane_analytic: z/(1-z)
  HarmonicKoebe,            // harmonic_koebe_K
  HarmonicHalfPlane,        // half_plane_L
  KoebeUnitDilatation,      // f0_sharp: Koebe h with g' = z h'
  KoebeQuasiconformal,      // p_k: Koebe + k conj(Koebe)
  HalfPlaneQuasiconformal,  // q_k: z/(1-z) + k conj(z/(1-z))
};

struct NamedMap {
  MapName name = MapName::KoebeAnalytic;
  std::optional<double> k;
  std::size_t order = 2000;

  /// p_k and q_k need k in [0, 1); the others reject it.
  void validate() const;
};

std::string_view map_id(MapName name);
/// Accepts the stable ids plus the short alias "f0".
MapName parse_map_id(std::string_view id);
std::vector<MapName> all_maps();
bool needs_parameter(MapName name);

HarmonicMap make_map(const NamedMap& spec);

/// Evaluates the rational/log closed form of h + conj(g). |z| < 1.
Complex closed_form_eval(const NamedMap& spec, Complex z);

/// Constant C with |a_m| + |b_m| <= C m^2 for every m >= 1.
double tail_constant(MapName name);

}  // namespace bohr
