#pragma once

#include <optional>
#include <string>

#include "bohr/dilatation.hpp"
#include "bohr/extremal_maps.hpp"
#include "bohr/radius_catalog.hpp"

namespace bohr {

/// Which catalog maps satisfy the hypotheses of which radius statement, and
/// how to build the map for that statement.
///
///   thm11, thm22                 koebe_analytic, half_plane_analytic
///   thm11_convex                 half_plane_analytic
///   thm12, thm23, thm23_sub      koebe_analytic, p_k with k <= (K-1)/(K+1)
///   thm12_convex, thm23_convex,
///   thm23_sub_convex             half_plane_analytic, q_k with k <= (K-1)/(K+1)
///   thm24, cor25, thm27          koebe_analytic, half_plane_analytic (g is
///                                built from the statement's dilatation);
///                                f0_sharp for cor25 with n = 1
///   thm29                        half_plane_analytic, half_plane_L, q_k
///   thm210                       half_plane_analytic, half_plane_L, harmonic_koebe_K
///   thm211                       half_plane_analytic, half_plane_L
struct Pairing {
  NamedMap map;
  RadiusProblem problem;
  double theta = 0.0;          // phase of a monomial dilatation
  bool mobius_minus = false;   // use (a - z)/(1 - a z)
};

/// Empty when compatible; otherwise the reason.
std::optional<std::string> incompatibility(const Pairing& p);

/// The map for the pairing (throws std::invalid_argument when incompatible).
HarmonicMap build_map(const Pairing& p);

/// True when the map meets the majorant with equality, so the radius is sharp
/// for it.
bool is_extremal(const Pairing& p);

}  // namespace bohr
