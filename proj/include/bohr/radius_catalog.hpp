#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bohr {

/// One Bohr-radius statement. The comment after each entry is its stable
/// CLI id; the parameters it consumes are listed after the colon.
enum class RadiusKind {
  SubordinateUnivalent,             // thm11: subordinates of a univalent map, distance bound
  SubordinateConvex,                // thm11_convex
  QuasiconformalDistance,           // thm12: K
  QuasiconformalDistanceConvex,     // thm12_convex: K
  NormalizedSubordinate,            // thm22: normalized univalent, bound 1
  Quasiconformal,                   // thm23: K
  QuasiconformalConvex,             // thm23_convex: K
  QuasiconformalSubordinate,        // thm23_sub: K, min(1/3, .) rule
  QuasiconformalSubordinateConvex,  // thm23_sub_convex: K
  MonomialDilatation,               // thm24: k, n
  UnitMonomialDilatation,           // cor25: n
  MobiusDilatation,                 // thm27: a (bound metadata only)
  ConvexShear,                      // thm29: h + e^{it} g convex
  ConvexShearNormalized,            // thm210: same with b_1 = 0
  ConvexHarmonic,                   // thm211
};

struct RadiusProblem {
  RadiusKind kind = RadiusKind::NormalizedSubordinate;
  double K = 1.0;  // quasiconformality constant
  double k = 1.0;  // dilatation amplitude
  int n = 1;       // dilatation exponent
  double a = 0.0;  // Mobius parameter

  static RadiusProblem subordinate_univalent() { return {RadiusKind::SubordinateUnivalent}; }
  static RadiusProblem subordinate_convex() { return {RadiusKind::SubordinateConvex}; }
  static RadiusProblem quasiconformal_distance(double K, bool convex = false);
  static RadiusProblem normalized_subordinate() { return {RadiusKind::NormalizedSubordinate}; }
  static RadiusProblem quasiconformal(double K, bool convex = false);
  static RadiusProblem quasiconformal_subordinate(double K, bool convex = false);
  static RadiusProblem monomial(double k, int n);
  static RadiusProblem unit_monomial(int n);
  static RadiusProblem mobius(double a = 0.0);
  static RadiusProblem convex_shear() { return {RadiusKind::ConvexShear}; }
  static RadiusProblem convex_shear_normalized() { return {RadiusKind::ConvexShearNormalized}; }
  static RadiusProblem convex_harmonic() { return {RadiusKind::ConvexHarmonic}; }

  /// Throws std::invalid_argument if a parameter the kind uses is out of range.
  void validate() const;
  /// k = (K - 1)/(K + 1).
  double dilatation_bound() const { return (K - 1.0) / (K + 1.0); }
  bool uses_K() const;
  bool uses_k() const { return kind == RadiusKind::MonomialDilatation; }
  bool uses_n() const;
  bool uses_a() const { return kind == RadiusKind::MobiusDilatation; }

  friend bool operator==(const RadiusProblem&, const RadiusProblem&) = default;
};

std::string_view radius_id(RadiusKind kind);
RadiusKind parse_radius_id(std::string_view id);
std::vector<RadiusKind> all_radius_kinds();

/// True for kinds whose radius is the root of an increasing majorant.
bool is_root_defined(RadiusKind kind);

/// Right-hand side of the Bohr inequality: the Koebe distance 1/4 or the
/// half-plane distance 1/2 for the distance-normalized statements, 1 + |a|
/// for the Mobius case and 1 otherwise.
double default_bound(const RadiusProblem& p);

/// Majorant minus bound, oriented to increase through zero at the radius.
/// Throws std::domain_error for r outside [0, 1) and std::invalid_argument for
/// kinds with closed-form radii only.
double majorant_value(const RadiusProblem& p, double r);

/// Closed-form radius where one exists. Root-defined kinds with an algebraic
/// root (quadratic) report it too.
std::optional<double> closed_form_radius(const RadiusProblem& p);

/// Power-series identities used to sum the majorants.
enum class MajorantIdentity {
  SumMRm,               // sum m r^m = r/(1-r)^2
  SumRm,                // sum r^m = r/(1-r)
  SumRmOverM,           // sum r^m/m = -log(1-r)
  SumMMplus1Rm,         // sum m(m+1) r^m = r(1+r)/(1-r)^3 + r/(1-r)^2
  SumTwoM2Plus1Over3Rm, // sum (2m^2+1)/3 r^m = 2r(1+r)/(3(1-r)^3) + r/(3(1-r))
};

double majorant_identity_term(MajorantIdentity id, std::size_t m);
double majorant_identity_closed_form(MajorantIdentity id, double r);
/// |sum_{m=1..M} term_m r^m - closed form|. Requires 0 <= r <= 0.95.
double majorant_identity_check(MajorantIdentity id, double r, std::size_t M);

/// Sum_{m > M} m^2 r^m in closed form.
double square_weighted_tail(double r, std::size_t M);

}  // namespace bohr
