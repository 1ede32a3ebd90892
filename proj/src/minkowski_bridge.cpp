#include "s3nf/minkowski_bridge.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "quadrature.hpp"
#include "s3nf/peter_weyl.hpp"

namespace s3nf {

namespace {

constexpr double kPi = std::numbers::pi;
using detail::gauss_legendre;
using detail::GaussLegendre;

}  // namespace

SU2Spectrum ZonalProfile::to_spectrum() const {
  SU2Spectrum s(max_degree());
  for (int m = 0; m <= max_degree(); ++m) s[m] = c[m] * Matrix::Identity(m + 1, m + 1);
  return s;
}

ZonalProfile ZonalProfile::from_spectrum(const SU2Spectrum& s, double tol) {
  ZonalProfile out(s.max_degree());
  double scale = 0.0;
  for (const Matrix& b : s.coeffs) scale = std::max(scale, b.norm());
  for (int m = 0; m <= s.max_degree(); ++m) {
    const cplx c = s[m].trace() / static_cast<double>(m + 1);
    if ((s[m] - c * Matrix::Identity(m + 1, m + 1)).norm() > tol * std::max(scale, 1e-300))
      throw std::invalid_argument("unsupported input: spectrum is not zonal");
    out.c[m] = c;
  }
  return out;
}

void zonal_characters(int M, double z, std::vector<double>& chi, std::vector<double>& dchi) {
  chi.assign(M + 1, 0.0);
  dchi.assign(M + 1, 0.0);
  // Chebyshev U_m(x) and U_m'(x), then d/dz = -sin z d/dx
  const double x = std::cos(z), s = std::sin(z);
  double u0 = 1.0, u1 = 2.0 * x, d0 = 0.0, d1 = 2.0;
  for (int m = 0; m <= M; ++m) {
    chi[m] = u0;
    dchi[m] = -s * d0;
    const double u2 = 2.0 * x * u1 - u0;
    const double d2 = 2.0 * u1 + 2.0 * x * d1 - d0;
    u0 = u1;
    u1 = u2;
    d0 = d1;
    d1 = d2;
  }
}

cplx ZonalProfile::value(double z) const {
  std::vector<double> chi, dchi;
  zonal_characters(max_degree(), z, chi, dchi);
  cplx acc = 0.0;
  for (int m = 0; m <= max_degree(); ++m) acc += (m + 1.0) * c[m] * chi[m];
  return acc;
}

cplx ZonalProfile::dz(double z) const {
  std::vector<double> chi, dchi;
  zonal_characters(max_degree(), z, chi, dchi);
  cplx acc = 0.0;
  for (int m = 0; m <= max_degree(); ++m) acc += (m + 1.0) * c[m] * dchi[m];
  return acc;
}

CylinderPoint to_cylinder(double tt, double rt) {
  const double p = std::atan(tt + rt), q = std::atan(tt - rt);
  return {p + q, p - q};
}

std::pair<double, double> to_minkowski(double t, double z) {
  const double p = std::tan(0.5 * (t + z)), q = std::tan(0.5 * (t - z));
  return {0.5 * (p + q), 0.5 * (p - q)};
}

double omega_minkowski(double tt, double rt) {
  const double a = tt - rt, b = tt + rt;
  return 2.0 / std::sqrt((1.0 + a * a) * (1.0 + b * b));
}

double omega_cylinder(double t, double z) { return 2.0 * std::cos(0.5 * (t - z)) * std::cos(0.5 * (t + z)); }

ConformalPoint conformal_factor(double tt, double rt) {
  const CylinderPoint c = to_cylinder(tt, rt);
  return {omega_minkowski(tt, rt), c.t, c.z};
}

double omega_spatial(double rt) { return 2.0 / (1.0 + rt * rt); }

double q0_omega_omega(double t, double z) {
  const double ot = -std::sin(t), oz = -std::sin(z);
  return ot * ot - oz * oz;
}

double q0_omega_omega_closed(double t, double z) {
  return 2.0 * omega_cylinder(t, z) * std::sin(0.5 * (t - z)) * std::sin(0.5 * (t + z));
}

cplx conformal_null_form(const Jet& Omega, const Jet& phi, const Jet& psi) {
  const cplx W = Omega.v, W2 = W * W, W3 = W2 * W;
  return W2 * W2 * q0(phi, psi) + W3 * phi.v * q0(Omega, psi) + W3 * psi.v * q0(Omega, phi) +
         W2 * phi.v * psi.v * q0(Omega, Omega);
}

cplx conformal_null_form_scaled(double t, double z, const Jet& phi, const Jet& psi) {
  const Jet Omega{omega_cylinder(t, z), -std::sin(t), -std::sin(z)};
  // Q0(Omega,Omega)/Omega in closed form
  const double qw = 2.0 * std::sin(0.5 * (t - z)) * std::sin(0.5 * (t + z));
  return Omega.v * q0(phi, psi) + phi.v * q0(Omega, psi) + psi.v * q0(Omega, phi) + phi.v * psi.v * qw;
}

Jet zonal_wave_jet(const ZonalProfile& f0, const ZonalProfile& f1, double t, double z) {
  const int M = std::max(f0.max_degree(), f1.max_degree());
  std::vector<double> chi, dchi;
  zonal_characters(M, z, chi, dchi);
  Jet out;
  for (int m = 0; m <= M; ++m) {
    const double k = m + 1.0;
    const cplx a = m <= f0.max_degree() ? f0.c[m] : cplx(0.0);
    const cplx b = m <= f1.max_degree() ? f1.c[m] : cplx(0.0);
    const double c = std::cos(k * t), s = std::sin(k * t);
    const cplx amp = a * c + b * (s / k);
    const cplx dt = -a * (k * s) + b * c;
    out.v += k * amp * chi[m];
    out.t += k * dt * chi[m];
    out.z += k * amp * dchi[m];
  }
  return out;
}

double diamond_integral(const std::function<double(double t, double z)>& h, int nodes) {
  if (nodes < 1) throw std::invalid_argument("diamond_integral: nodes must be positive");
  const GaussLegendre U = gauss_legendre(nodes, -0.5 * kPi, 0.5 * kPi);
  const GaussLegendre ref = gauss_legendre(nodes, 0.0, 1.0);
  std::vector<double> partial(nodes, 0.0);
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < nodes; ++i) {
    const double u = U.x[i];
    const double len = u + 0.5 * kPi;
    double acc = 0.0;
    for (int j = 0; j < nodes; ++j) {
      const double v = -0.5 * kPi + len * ref.x[j];
      const double t = u + v, z = u - v, sz = std::sin(z);
      acc += ref.w[j] * len * 4.0 * kPi * sz * sz * h(t, z);
    }
    partial[i] = 2.0 * U.w[i] * acc;  // dt dz = 2 du dv
  }
  double total = 0.0;
  for (double p : partial) total += p;
  return total;
}

ZonalLift lift_radial_data(const RadialProfile& f, double power, int M, const LiftOptions& opt) {
  if (M < 0) throw std::invalid_argument("lift_radial_data: negative degree");
  const int Q = opt.quadrature_nodes > 0 ? opt.quadrature_nodes : std::max(512, 8 * (M + 1));
  const GaussLegendre G = gauss_legendre(Q, 0.0, kPi);
  std::vector<double> vals(Q);
  for (int q = 0; q < Q; ++q) {
    const double rt = std::tan(0.5 * G.x[q]);
    vals[q] = std::pow(0.5 * (1.0 + rt * rt), power) * f(rt);
    if (!std::isfinite(vals[q])) throw std::domain_error("lift of profile " + f.name + " is not finite");
  }

  ZonalLift out;
  out.profile = ZonalProfile(M);
  std::vector<double> chi, dchi;
  std::vector<std::vector<double>> chis(Q);
  double norm2 = 0.0;
  for (int q = 0; q < Q; ++q) {
    zonal_characters(M, G.x[q], chi, dchi);
    chis[q] = chi;
    const double s = std::sin(G.x[q]);
    const double wq = G.w[q] * (2.0 / kPi) * s * s;
    norm2 += wq * vals[q] * vals[q];
    for (int m = 0; m <= M; ++m) out.profile.c[m] += wq * vals[q] * chi[m] / (m + 1.0);
  }
  double res2 = 0.0;
  for (int q = 0; q < Q; ++q) {
    double fm = 0.0;
    for (int m = 0; m <= M; ++m) fm += (m + 1.0) * out.profile.c[m].real() * chis[q][m];
    const double s = std::sin(G.x[q]);
    res2 += G.w[q] * (2.0 / kPi) * s * s * (vals[q] - fm) * (vals[q] - fm);
  }
  out.norm = std::sqrt(norm2);
  out.residual = out.norm > 0.0 ? std::sqrt(res2) / out.norm : 0.0;
  if (out.residual > opt.tolerance)
    throw std::domain_error("lift of profile " + f.name + " not band-limited at degree " + std::to_string(M) +
                            ": relative residual " + std::to_string(out.residual));
  return out;
}

WeightedNorm weighted_sobolev_norm(const RadialProfile& f, double s, double delta, int M, const LiftOptions& opt) {
  LiftOptions o = opt;
  if (s == 0.0) o.tolerance = std::numeric_limits<double>::infinity();
  const ZonalLift lift = lift_radial_data(f, 0.5 * (delta + 3.0 - s), M, o);
  WeightedNorm out;
  out.projected = sobolev_norm(lift.profile.to_spectrum(), s);
  out.residual = lift.residual;
  out.value = s == 0.0 ? lift.norm : out.projected;
  return out;
}

CorollaryResult corollary_check(const ZonalProfile& f0, const ZonalProfile& f1, const ZonalProfile& g0,
                                const ZonalProfile& g1, double eps, int nodes) {
  if (!(eps > 0.0)) throw std::invalid_argument("corollary_check: eps must be positive");
  const int M = std::max({f0.max_degree(), f1.max_degree(), g0.max_degree(), g1.max_degree()});
  CorollaryResult out;
  out.nodes = nodes > 0 ? nodes : 3 * M + 48;
  auto sq = [](double x) { return x * x; };
  out.rhs = (sq(sobolev_norm(f0.to_spectrum(), 2.0)) + sq(sobolev_norm(f1.to_spectrum(), 1.0))) *
            (sq(sobolev_norm(g0.to_spectrum(), 1.0 + eps)) + sq(sobolev_norm(g1.to_spectrum(), eps)));
  const auto integrand = [&](double t, double z) {
    const Jet phi = zonal_wave_jet(f0, f1, t, z);
    const Jet psi = zonal_wave_jet(g0, g1, t, z);
    return std::norm(conformal_null_form_scaled(t, z, phi, psi));
  };
  // <t~-r~><t~+r~> = 2/Omega and dvol_eta = Omega^-4 dt dvol_{S^3}
  out.lhs = 4.0 * diamond_integral(integrand, out.nodes);
  return out;
}

CorollaryResult corollary_check(const RadialProfile& f0, const RadialProfile& f1, const RadialProfile& g0,
                                const RadialProfile& g1, double eps, int M, const CorollaryOptions& opt) {
  const ZonalLift a = lift_radial_data(f0, 1.0, M, opt.lift);
  const ZonalLift b = lift_radial_data(f1, 2.0, M, opt.lift);
  const ZonalLift c = lift_radial_data(g0, 1.0, M, opt.lift);
  const ZonalLift d = lift_radial_data(g1, 2.0, M, opt.lift);
  CorollaryResult out = corollary_check(a.profile, b.profile, c.profile, d.profile, eps, opt.nodes);
  out.max_residual = std::max({a.residual, b.residual, c.residual, d.residual});
  return out;
}

}  // namespace s3nf
