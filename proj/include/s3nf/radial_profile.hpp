#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace s3nf {

/// Radial function on R^3, evaluated at r~ >= 0.
struct RadialProfile {
  std::string name;
  std::map<std::string, double> params;
  std::function<double(double)> fn;
  double operator()(double r) const { return fn(r); }
};

/// Closed-form registry:
///   zero
///   gaussian         amplitude, width        A exp(-(r/w)^2)
///   bump             amplitude, radius       A exp(1 - 1/(1 - (r/R)^2)) inside R, 0 outside
///   omega_power      amplitude, power        A omega^p, omega = 2/(1+r^2)
///   omega_power_cos  amplitude, power        A omega^p cos z, cos z = (1-r^2)/(1+r^2)
/// Missing parameters take the defaults above (amplitude 1, width 1, radius 1, power 1).
/// Throws std::invalid_argument for unknown names or parameters.
RadialProfile make_profile(const std::string& name, const std::map<std::string, double>& params = {});
std::vector<std::string> profile_names();

/// Interpolated samples (r, value); `interpolation` is linear, cubic or steffen.
/// Clamped below the first sample, zero beyond the last.
RadialProfile profile_from_samples(std::vector<double> r, std::vector<double> values,
                                   const std::string& interpolation = "cubic");
/// Two-column CSV (r, value); '#' comments and a non-numeric header line are skipped.
RadialProfile profile_from_csv(const std::string& path, const std::string& interpolation = "cubic");

}  // namespace s3nf
