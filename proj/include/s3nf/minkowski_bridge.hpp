#pragma once

#include <vector>

#include "s3nf/radial_profile.hpp"
#include "s3nf/spectrum.hpp"

namespace s3nf {

/// Class function f(z) = sum_m (m+1) c_m sin((m+1)z)/sin z.
struct ZonalProfile {
  std::vector<cplx> c;

  ZonalProfile() = default;
  explicit ZonalProfile(int max_degree) : c(max_degree + 1, cplx(0.0)) {}
  int max_degree() const { return static_cast<int>(c.size()) - 1; }
  /// f^(pi_m) = c_m I
  SU2Spectrum to_spectrum() const;
  /// Throws std::invalid_argument (unsupported input) unless every block is a multiple
  /// of the identity to `tol` relative to the largest block.
  static ZonalProfile from_spectrum(const SU2Spectrum& s, double tol = 1e-12);
  cplx value(double z) const;
  cplx dz(double z) const;
};

/// U_m(cos z) = sin((m+1)z)/sin z and its z-derivative, for m = 0..M.
void zonal_characters(int M, double z, std::vector<double>& chi, std::vector<double>& dchi);

struct CylinderPoint {
  double t = 0.0, z = 0.0;
};

struct ConformalPoint {
  double Omega = 0.0;
  double t = 0.0, z = 0.0;
};

/// t = arctan(t~+r~) + arctan(t~-r~), z = arctan(t~+r~) - arctan(t~-r~).
CylinderPoint to_cylinder(double tt, double rt);
/// Inverse on the diamond |t| + z < pi, z >= 0.
std::pair<double, double> to_minkowski(double t, double z);
/// 2 <t~-r~>^{-1} <t~+r~>^{-1}
double omega_minkowski(double tt, double rt);
/// 2 cos((t-z)/2) cos((t+z)/2)
double omega_cylinder(double t, double z);
ConformalPoint conformal_factor(double tt, double rt);
/// omega = Omega at t~ = 0, i.e. 2/(1+r~^2).
double omega_spatial(double rt);
/// Q0(Omega, Omega) from the analytic derivatives of Omega = cos t + cos z.
double q0_omega_omega(double t, double z);
/// The closed form 2 Omega sin((t-z)/2) sin((t+z)/2).
double q0_omega_omega_closed(double t, double z);

/// Value and first derivatives in (t, z) of a zonal field.
struct Jet {
  cplx v = 0.0, t = 0.0, z = 0.0;
};

/// a_t b_t - a_z b_z
inline cplx q0(const Jet& a, const Jet& b) { return a.t * b.t - a.z * b.z; }

/// Omega^4 Q0(phi,psi) + Omega^3 phi Q0(Omega,psi) + Omega^3 psi Q0(Omega,phi) + Omega^2 phi psi Q0(Omega,Omega)
cplx conformal_null_form(const Jet& Omega, const Jet& phi, const Jet& psi);
/// Omega^{-3} times the above for the actual conformal factor at (t, z); smooth up to the
/// boundary of the diamond.
cplx conformal_null_form_scaled(double t, double z, const Jet& phi, const Jet& psi);

/// Free zonal solution of (box+1) phi = 0 with data (f0, f1): jet at (t, z).
Jet zonal_wave_jet(const ZonalProfile& f0, const ZonalProfile& f1, double t, double z);

/// Integral of h over the diamond {|t| + z < pi} against dt dvol_{S^3} (total sphere
/// volume 2 pi^2), with a Gauss-Legendre rule of `nodes` points per side of the
/// triangle -pi/2 < v <= u < pi/2, u = (t+z)/2, v = (t-z)/2.
double diamond_integral(const std::function<double(double t, double z)>& h, int nodes);

struct ZonalLift {
  ZonalProfile profile;
  double residual = 0.0;  // L^2(S^3) norm of the projection error, relative to the lifted function
  double norm = 0.0;      // L^2(S^3) norm of the lifted function
};

struct LiftOptions {
  int quadrature_nodes = 0;  // 0: max(512, 8(M+1))
  double tolerance = 1e-3;   // error when residual exceeds it
};

/// Samples omega^{-power} f~ at r~ = tan(z/2) and projects onto degrees <= M.
/// power 1 lifts f~_0, power 2 lifts f~_1. Throws std::domain_error when the
/// relative residual exceeds the tolerance or the lift is not finite.
ZonalLift lift_radial_data(const RadialProfile& f, double power, int M, const LiftOptions& opt = {});

struct WeightedNorm {
  double value = 0.0;
  double projected = 0.0;  // H^s norm of the degree <= M projection
  double residual = 0.0;   // relative L^2 projection error
};

/// ||omega^{-(delta+3-s)/2} f~||_{H^s(S^3)} through the degree <= M projection. For s = 0
/// the L^2 norm of the lift is returned directly and no residual bound applies.
WeightedNorm weighted_sobolev_norm(const RadialProfile& f, double s, double delta, int M, const LiftOptions& opt = {});

struct CorollaryResult {
  double lhs = 0.0;  // ||<t~-r~><t~+r~> Q0~||^2_{L^2(R^4)}
  double rhs = 0.0;  // (||f0||^2_{W^2_1} + ||f1||^2_{W^1_2})(||g0||^2_{W^{1+e}_e} + ||g1||^2_{W^e_{1+e}})
  double max_residual = 0.0;
  int nodes = 0;
  double ratio() const { return rhs > 0.0 ? lhs / rhs : 0.0; }
};

struct CorollaryOptions {
  LiftOptions lift;
  int nodes = 0;  // 0: 3M + 48
};

/// Cylinder data (f0, f1), (g0, g1), all zonal of common degree.
CorollaryResult corollary_check(const ZonalProfile& f0, const ZonalProfile& f1, const ZonalProfile& g0,
                                const ZonalProfile& g1, double eps, int nodes = 0);
/// Minkowski radial data, lifted with omega, omega^2 and projected to degree M.
CorollaryResult corollary_check(const RadialProfile& f0, const RadialProfile& f1, const RadialProfile& g0,
                                const RadialProfile& g1, double eps, int M, const CorollaryOptions& opt = {});

}  // namespace s3nf
