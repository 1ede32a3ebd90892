#pragma once

#include <array>
#include <string>
#include <vector>

namespace s3nf {

/// sum_{k=1}^{n-1} (1+|n-2k|)^{-1-2b0} k^{-alpha} (n-k)^{-beta}, compensated summation.
double series_partial_sum(double beta0, double alpha, double beta, long n);

struct SeriesTriple {
  double beta0 = 0.0, alpha = 0.0, beta = 0.0;
};

/// Slope of S against log n is fitted on log-spaced n in [kSlopeFrom, kSlopeTo].
inline constexpr long kSlopeFrom = 410, kSlopeTo = 4096;
inline constexpr long kScanFrom = 16;

struct SeriesClass {
  SeriesTriple triple;
  /// alpha+beta+2b0 > 0, alpha+beta >= 0, 1+2b0 >= 0, alpha+1+2b0 >= 0, beta+1+2b0 >= 0
  std::array<bool, 5> conditions{};
  bool predicted_convergent = false;
  double slope = 0.0;                       // least-squares dS / d(log n)
  std::vector<std::pair<long, double>> samples;  // (n, S) at n = 2^4 .. 2^12
};

SeriesClass series_classify(double beta0, double alpha, double beta);

struct SeriesProbe {
  SeriesTriple triple;
  std::string note;
  bool divergent = false;  // known behaviour of the partial sums
};

/// Probe points covering every condition: convergent points and divergent
/// violators of each condition.
const std::vector<SeriesProbe>& series_probe_set();

}  // namespace s3nf
