#include "s3nf/su2.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace s3nf {

namespace {

double wrap_4pi(double x) {
  const double period = 4.0 * std::numbers::pi;
  double r = std::fmod(x, period);
  if (r < 0) r += period;
  if (r >= period) r -= period;
  return r;
}

}  // namespace

SU2 su2_from_euler(const EulerAngles& g) {
  const double c = std::cos(0.5 * g.beta), s = std::sin(0.5 * g.beta);
  const double p = 0.5 * (g.alpha + g.gamma), q = 0.5 * (g.alpha - g.gamma);
  SU2 u;
  u(0, 0) = std::polar(c, -p);
  u(0, 1) = -std::polar(s, -q);
  u(1, 0) = std::polar(s, q);
  u(1, 1) = std::polar(c, p);
  return u;
}

EulerAngles euler_from_su2(const SU2& u) {
  EulerAngles g;
  const double c = std::abs(u(1, 1)), s = std::abs(u(1, 0));
  g.beta = 2.0 * std::atan2(s, c);
  const double tiny = 1e-300;
  if (s <= tiny) {
    g.alpha = wrap_4pi(2.0 * std::arg(u(1, 1)));
    g.gamma = 0.0;
  } else if (c <= tiny) {
    g.alpha = wrap_4pi(2.0 * std::arg(u(1, 0)));
    g.gamma = 0.0;
  } else {
    const double p = std::arg(u(1, 1)), q = std::arg(u(1, 0));
    g.alpha = wrap_4pi(p + q);
    g.gamma = wrap_4pi(p - q);
  }
  return g;
}

SU2 su2_exp(const Eigen::Matrix2cd& a, double s) {
  // a = i(v . sigma) with real v; exp(s a) = cos(s|v|) I + sin(s|v|)/|v| a
  const double norm = std::sqrt(std::max(0.0, std::real((a * a.adjoint()).trace()) * 0.5));
  SU2 out = SU2::Identity();
  if (norm == 0.0) return out;
  out = std::cos(s * norm) * SU2::Identity() + (std::sin(s * norm) / norm) * a;
  return out;
}

double su2_polar_angle(const SU2& u) {
  const double half_trace = std::clamp(0.5 * std::real(u.trace()), -1.0, 1.0);
  return std::acos(half_trace);
}

}  // namespace s3nf
