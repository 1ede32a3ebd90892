#include "quadrature.hpp"

#include <gsl/gsl_integration.h>

#include <stdexcept>

namespace s3nf::detail {

GaussLegendre gauss_legendre(int n, double a, double b) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be positive");
  // the eigenvalue-based rule; the glfixed tables lose ~1e-10 for untabulated n
  gsl_integration_fixed_workspace* ws = gsl_integration_fixed_alloc(gsl_integration_fixed_legendre, n, a, b, 0.0, 0.0);
  if (!ws) throw std::runtime_error("gauss_legendre: allocation failed");
  const double* x = gsl_integration_fixed_nodes(ws);
  const double* w = gsl_integration_fixed_weights(ws);
  GaussLegendre out{{x, x + n}, {w, w + n}};
  gsl_integration_fixed_free(ws);
  return out;
}

}  // namespace s3nf::detail
