
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "s3nf/peter_weyl.hpp"
#include "quadrature.hpp"

namespace s3nf {

EulerGrid::EulerGrid(int band_limit, int n_alpha, int n_beta, int n_gamma)
    : band_limit_(band_limit) {
  if (band_limit < 0 || n_alpha < 1 || n_beta < 1 || n_gamma < 1)
    throw std::invalid_argument("invalid grid dimensions");
  const double four_pi = 4.0 * std::numbers::pi;
  for (int a = 0; a < n_alpha; ++a) alpha_.push_back(four_pi * a / n_alpha);
  for (int c = 0; c < n_gamma; ++c) gamma_.push_back(four_pi * c / n_gamma);

  const detail::GaussLegendre gl = detail::gauss_legendre(n_beta, -1.0, 1.0);
  for (int b = 0; b < n_beta; ++b) {
    beta_.push_back(std::acos(gl.x[b]));
    beta_weight_.push_back(0.5 * gl.w[b]);
    weight_.push_back(0.5 * gl.w[b] / (static_cast<double>(n_alpha) * n_gamma));
  }

  // alpha/gamma frequencies of a product reach a+b in doubled units; beta needs
  // degree (a+b)/2 in cos(beta), integrated exactly up to 2*n_beta - 1.
  const int by_angles = std::min(n_alpha, n_gamma) - 1;
  const int by_beta = 2 * (2 * n_beta - 1);
  exactness_ = std::min(by_angles, by_beta);
  table_ = std::make_shared<const WignerTable>(beta_, band_limit_);
}

EulerAngles EulerGrid::node(std::size_t idx) const {
  const std::size_t ng = gamma_.size(), na = alpha_.size();
  const int c = static_cast<int>(idx % ng);
  const int a = static_cast<int>((idx / ng) % na);
  const int b = static_cast<int>(idx / (ng * na));
  return {alpha_[a], beta_[b], gamma_[c]};
}

std::shared_ptr<const WignerTable> EulerGrid::table(int degree) const {
  if (degree <= table_->max_degree()) return table_;
  return std::make_shared<const WignerTable>(beta_, degree);
}

GridPtr build_grid(int M) {
  if (M < 0) throw std::invalid_argument("negative band limit");
  return std::make_shared<const EulerGrid>(M, 2 * M + 2, M + 1, 2 * M + 2);
}

}  // namespace s3nf
