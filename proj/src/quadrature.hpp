#pragma once

#include <vector>

namespace s3nf::detail {

struct GaussLegendre {
  std::vector<double> x, w;
};

/// n-point Gauss-Legendre rule on [a, b], nodes ascending.
GaussLegendre gauss_legendre(int n, double a, double b);

}  // namespace s3nf::detail
