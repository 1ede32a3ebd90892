#pragma once

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <vector>

#include "s3nf/half_int.hpp"

namespace s3nf {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;

struct EulerAngles {
  double alpha = 0.0, beta = 0.0, gamma = 0.0;
};

/// pi_m evaluated at Euler angles. Rows and columns run over weights -m/2..m/2.
struct DMatrix {
  int m = 0;
  Matrix entries;
  EulerAngles angles;
};

/// Standard Wigner small-d d^j_{m'm}(beta), all labels doubled.
/// Jacobi-polynomial form with a three-term recurrence.
double wigner_small_d(int two_j, int two_mp, int two_m, double beta);

/// Direct factorial-sum evaluation of the same quantity; slow, used as an oracle.
double wigner_small_d_reference(int two_j, int two_mp, int two_m, double beta);

/// Real (m+1)x(m+1) matrix d with d(r,c) = d^{m/2}_{-i,-j}(beta),
/// i = r - m/2, j = c - m/2.
RealMatrix wigner_small_d_matrix(int m, double beta);

/// (pi_m)_{ij}(alpha, beta, gamma) = exp(i(i alpha + j gamma)) d^{m/2}_{-i,-j}(beta).
DMatrix wigner_d_matrix(int m, double alpha, double beta, double gamma);
DMatrix wigner_d_matrix(int m, const EulerAngles& g);

/// X_1, X_2, X_3 = 2i * (spin-m/2 angular momentum matrices), weights increasing.
std::array<Matrix, 3> generators(int m);

/// Little-d matrices for every degree 0..max_degree at a fixed list of beta values.
class WignerTable {
 public:
  WignerTable() = default;
  WignerTable(std::vector<double> betas, int max_degree);

  int max_degree() const { return max_degree_; }
  std::size_t size() const { return betas_.size(); }
  double beta(std::size_t b) const { return betas_[b]; }
  /// Row-major (m+1)x(m+1) little-d block for node b, degree m.
  const double* block(std::size_t b, int m) const {
    return data_.data() + offsets_[b * (max_degree_ + 1) + m];
  }

 private:
  std::vector<double> betas_;
  int max_degree_ = -1;
  std::vector<std::size_t> offsets_;
  std::vector<double> data_;
};

}  // namespace s3nf
