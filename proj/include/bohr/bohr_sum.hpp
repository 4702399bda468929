#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bohr/extremal_maps.hpp"
#include "bohr/radius_solver.hpp"
#include "bohr/series.hpp"

namespace bohr {

struct PartialSum {
  double sum = 0.0;
  double tail = 0.0;
};

/// sum = Sum_{m=1..M} (|a_m| + |b_m|) r^m and tail = C Sum_{m>M} m^2 r^m,
/// an upper bound for the omitted terms when |a_m| + |b_m| <= C m^2.
PartialSum bohr_partial_sum(const HarmonicMap& f, double r, std::size_t M, double tail_constant = 2.0);

/// Bohr sums of a map over an r-grid together with per-point verdicts.
struct BohrProfile {
  std::string map_id;
  std::vector<double> r_grid;
  std::vector<double> partial_sums;
  std::vector<double> tail_bounds;
  double bound = 1.0;
  std::vector<bool> verdicts;

  bool all_pass() const;
  std::size_t size() const { return r_grid.size(); }
};

struct VerifyOptions {
  double margin = 1e-3;
  int grid_size = 256;
  std::optional<double> bound;  // defaults to default_bound(problem)
  std::optional<std::size_t> terms;  // defaults to min(order, 2000)
  double tail_constant = 2.0;
  std::string map_id = "custom";
};

/// Profile on the grid r_i = i (radius - margin)/grid_size, i = 1..grid_size.
BohrProfile bohr_profile(const HarmonicMap& f, double radius, double bound, const VerifyOptions& opt);

/// Solves the radius of `p` and profiles f below it.
BohrProfile verify_inequality(const HarmonicMap& f, const RadiusProblem& p, const VerifyOptions& opt = {});

/// Bohr sum at radius + epsilon minus the bound; positive for the extremal map.
double sharpness_scan(const HarmonicMap& f, const RadiusProblem& p, double epsilon,
                      std::optional<double> bound = std::nullopt, double tail_constant = 2.0);

struct BoundaryReach {
  double max_mod = 0.0;
  double min_mod = 0.0;  // lower bound on the distance from f(0) to the image curve
};

/// Extremes of |f| over `samples` equally spaced points on |z| = r, the
/// first at z = r. Closed forms are used for named maps.
BoundaryReach boundary_reach(const NamedMap& spec, double r, int samples);
BoundaryReach boundary_reach(const HarmonicMap& f, double r, int samples);

}  // namespace bohr
