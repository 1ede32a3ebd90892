#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "s3nf/spectrum.hpp"
#include "s3nf/wigner.hpp"

namespace s3nf {

/// Product quadrature on the double cover: alpha, gamma uniform on [0, 4pi),
/// cos(beta) at Gauss-Legendre nodes. Node (b, a, c) has flat index (b*na + a)*ng + c.
class EulerGrid {
 public:
  EulerGrid(int band_limit, int n_alpha, int n_beta, int n_gamma);

  int band_limit() const { return band_limit_; }
  /// Products pi_a (x) conj(pi_b) with a + b <= exactness_degree() integrate exactly.
  int exactness_degree() const { return exactness_; }
  int n_alpha() const { return static_cast<int>(alpha_.size()); }
  int n_beta() const { return static_cast<int>(beta_.size()); }
  int n_gamma() const { return static_cast<int>(gamma_.size()); }
  std::size_t size() const { return alpha_.size() * beta_.size() * gamma_.size(); }

  double alpha(int a) const { return alpha_[a]; }
  double beta(int b) const { return beta_[b]; }
  double gamma(int c) const { return gamma_[c]; }
  /// Haar weight of every node in beta slice b.
  double weight(int b) const { return weight_[b]; }
  double beta_weight(int b) const { return beta_weight_[b]; }
  std::size_t index(int b, int a, int c) const {
    return (static_cast<std::size_t>(b) * alpha_.size() + a) * gamma_.size() + c;
  }
  EulerAngles node(std::size_t idx) const;

  /// Little-d values at the beta nodes for degrees up to at least `degree`.
  std::shared_ptr<const WignerTable> table(int degree) const;

 private:
  int band_limit_;
  int exactness_;
  std::vector<double> alpha_, beta_, gamma_, weight_, beta_weight_;
  std::shared_ptr<const WignerTable> table_;
};

using GridPtr = std::shared_ptr<const EulerGrid>;

/// Grid able to analyse band limit M: 2M+2 nodes in alpha and gamma, M+1 in beta.
GridPtr build_grid(int M);

struct GridFunction {
  GridPtr grid;
  Eigen::VectorXcd values;

  GridFunction() = default;
  explicit GridFunction(GridPtr g);

  /// Quadrature of |f|^2 against normalised Haar measure.
  double l2_norm2() const;
  cplx integrate() const;
  GridFunction& operator*=(const GridFunction& o);
  GridFunction& operator+=(const GridFunction& o);
  GridFunction& operator-=(const GridFunction& o);
};

GridFunction sample(GridPtr grid, const std::function<cplx(const EulerAngles&)>& f);

/// f^(pi_m) = int f(g) pi_m(g^{-1}) dmu for m <= M. Requires exactness >= 2M.
SU2Spectrum analyze(const GridFunction& f, int M);
/// f(g) = sum_m (m+1) Tr(f^(pi_m) pi_m(g)) at every node.
GridFunction synthesize(const SU2Spectrum& s, GridPtr grid);

/// Point evaluation sum_m (m+1) Tr(f^(pi_m) pi_m(g)).
cplx evaluate(const SU2Spectrum& s, const EulerAngles& g);

/// Direct node-by-node evaluation with full D-matrices; serial, used as an oracle.
SU2Spectrum analyze_reference(const GridFunction& f, int M);
GridFunction synthesize_reference(const SU2Spectrum& s, GridPtr grid);

/// (sum_m (m+1)^(2 order + 1) |||f^(pi_m)|||^2)^(1/2)
double sobolev_norm(const SU2Spectrum& s, double order);
/// Multiplies block m by (m+1)^p.
SU2Spectrum apply_J_power(const SU2Spectrum& s, double p);
/// Derivative along s -> exp(s a_k) g, a_k = X_k(1); acts as f^(pi_m) X_k(m).
SU2Spectrum left_derivative(const SU2Spectrum& s, int k);
/// sum_k X_k X_k, computed through left_derivative.
SU2Spectrum laplacian(const SU2Spectrum& s);
/// sum_m m(m+1)(m+2) |||f^(pi_m)|||^2
double gradient_norm2(const SU2Spectrum& s);

/// z = arccos(cos(beta/2) cos((alpha+gamma)/2)).
double euler_to_polar(double alpha, double beta, double gamma);

}  // namespace s3nf
