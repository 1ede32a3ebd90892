#pragma once

#include <Eigen/Dense>

#include "s3nf/wigner.hpp"

namespace s3nf {

using SU2 = Eigen::Matrix2cd;

/// The 2x2 matrix of Euler angles; coincides with pi_1(alpha, beta, gamma).
SU2 su2_from_euler(const EulerAngles& g);

/// Inverse of su2_from_euler on the double-cover domain alpha, gamma in [0, 4pi).
EulerAngles euler_from_su2(const SU2& u);

/// exp(s * a) for a traceless anti-Hermitian 2x2 matrix a.
SU2 su2_exp(const Eigen::Matrix2cd& a, double s);

/// Geodesic distance z from the identity, Tr u = 2 cos z.
double su2_polar_angle(const SU2& u);

}  // namespace s3nf
