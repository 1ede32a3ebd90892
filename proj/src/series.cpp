#include "s3nf/series.hpp"

#include <cmath>
#include <stdexcept>

namespace s3nf {

double series_partial_sum(double beta0, double alpha, double beta, long n) {
  if (n < 2) throw std::invalid_argument("series_partial_sum: n must be at least 2");
  // Neumaier summation
  double sum = 0.0, comp = 0.0;
  for (long k = 1; k < n; ++k) {
    const double term = std::pow(1.0 + std::labs(n - 2 * k), -1.0 - 2.0 * beta0) *
                        std::pow(static_cast<double>(k), -alpha) * std::pow(static_cast<double>(n - k), -beta);
    const double t = sum + term;
    comp += std::abs(sum) >= std::abs(term) ? (sum - t) + term : (term - t) + sum;
    sum = t;
  }
  return sum + comp;
}

SeriesClass series_classify(double beta0, double alpha, double beta) {
  SeriesClass out;
  out.triple = {beta0, alpha, beta};
  out.conditions = {alpha + beta + 2.0 * beta0 > 0.0, alpha + beta >= 0.0, 1.0 + 2.0 * beta0 >= 0.0,
                    alpha + 1.0 + 2.0 * beta0 >= 0.0, beta + 1.0 + 2.0 * beta0 >= 0.0};
  out.predicted_convergent = true;
  for (bool c : out.conditions) out.predicted_convergent = out.predicted_convergent && c;

  for (long n = kScanFrom; n <= kSlopeTo; n *= 2) out.samples.emplace_back(n, series_partial_sum(beta0, alpha, beta, n));

  constexpr int points = 24;
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  const double lo = std::log(static_cast<double>(kSlopeFrom)), hi = std::log(static_cast<double>(kSlopeTo));
  for (int i = 0; i < points; ++i) {
    const long n = std::lround(std::exp(lo + (hi - lo) * i / (points - 1)));
    const double x = std::log(static_cast<double>(n));
    const double y = series_partial_sum(beta0, alpha, beta, n);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  out.slope = (points * sxy - sx * sy) / (points * sxx - sx * sx);
  return out;
}

const std::vector<SeriesProbe>& series_probe_set() {
  static const std::vector<SeriesProbe> probes = {
      {{0.0, 1.0, 1.0}, "all conditions, integrable ends", false},
      {{-0.5, 0.5, 0.6}, "1+2b0 = 0 on its boundary", false},
      {{0.5, 0.0, 0.0}, "alpha = beta = 0", false},
      {{0.0, 0.5, 0.5}, "balanced half powers", false},
      {{-0.25, 1.0, 0.0}, "beta = 0 with b0 < 0", false},
      {{0.25, -0.2, 0.5}, "negative alpha", false},
      {{1.0, 2.0, 2.0}, "strongly decaying", false},
      {{0.0, 0.0, 0.0}, "violates alpha+beta+2b0 > 0; harmonic growth", true},
      {{-0.25, 0.0, 0.0}, "violates alpha+beta+2b0 > 0; power growth", true},
      {{1.0, -0.3, 0.2}, "violates alpha+beta >= 0", true},
      {{-0.75, 0.2, 1.0}, "violates 1+2b0 >= 0 and alpha+1+2b0 >= 0", true},
      {{-0.75, 1.0, 0.2}, "violates 1+2b0 >= 0 and beta+1+2b0 >= 0", true},
  };
  return probes;
}

}  // namespace s3nf
