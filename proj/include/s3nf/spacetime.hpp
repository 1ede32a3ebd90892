#pragma once

#include <vector>

#include "s3nf/spectrum.hpp"

namespace s3nf {

/// Uniform nodes t_j = -pi + 2 pi j / count on [-pi, pi).
struct TimeSampling {
  int count = 0;

  TimeSampling() = default;
  explicit TimeSampling(int n);
  double t(int j) const;
  /// Smallest sampling resolving every frequency |n| <= N.
  static TimeSampling for_degree(int N) { return TimeSampling(2 * N + 1); }
};

/// Coefficients F(u)(pi_m)_n for |n| <= N and m <= M, time measure dt / 2pi.
struct SpacetimeSpectrum {
  int N = 0;
  std::vector<SU2Spectrum> slices;  // slices[n + N]

  SpacetimeSpectrum() = default;
  SpacetimeSpectrum(int n_max, int max_degree);

  int max_degree() const { return slices.empty() ? -1 : slices.front().max_degree(); }
  SU2Spectrum& at(int n) { return slices[n + N]; }
  const SU2Spectrum& at(int n) const { return slices[n + N]; }
  bool has(int n) const { return n >= -N && n <= N; }

  /// Copy with frequency range N and degree M (truncating or zero padding).
  SpacetimeSpectrum resized(int n_max, int max_degree) const;

  /// sum_n sum_m (m+1) |||F(u)(pi_m)_n|||^2
  double plancherel_norm2() const;

  SpacetimeSpectrum& operator+=(const SpacetimeSpectrum& o);
  SpacetimeSpectrum& operator-=(const SpacetimeSpectrum& o);
  SpacetimeSpectrum& operator*=(cplx s);
};

SpacetimeSpectrum operator+(SpacetimeSpectrum a, const SpacetimeSpectrum& b);
SpacetimeSpectrum operator-(SpacetimeSpectrum a, const SpacetimeSpectrum& b);
SpacetimeSpectrum operator*(cplx s, SpacetimeSpectrum a);

double spacetime_distance(const SpacetimeSpectrum& a, const SpacetimeSpectrum& b);

/// Discrete Fourier coefficients in t of a sampled series of spatial spectra.
/// Throws std::domain_error when samples.count < 2N + 1.
SpacetimeSpectrum spacetime_analyze(const std::vector<SU2Spectrum>& series,
                                    const TimeSampling& samples, int N);
/// Spatial spectrum at time t.
SU2Spectrum spacetime_evaluate(const SpacetimeSpectrum& s, double t);
std::vector<SU2Spectrum> spacetime_synthesize(const SpacetimeSpectrum& s,
                                              const TimeSampling& samples);

/// Multiplies F(u)(pi_m)_n by (i n)^k.
SpacetimeSpectrum time_derivative(const SpacetimeSpectrum& s, int k = 1);
/// Multiplies F(u)(pi_m)_n by symbol(n, m).
template <class Symbol>
SpacetimeSpectrum apply_symbol(SpacetimeSpectrum s, Symbol symbol) {
  for (int n = -s.N; n <= s.N; ++n)
    for (int m = 0; m <= s.max_degree(); ++m) s.at(n)[m] *= symbol(n, m);
  return s;
}

/// Per-(n, m) Frobenius norms, for diagnostics.
struct BlockNorm {
  int n = 0, m = 0;
  double norm = 0.0;
};
std::vector<BlockNorm> block_norms(const SpacetimeSpectrum& s, double threshold = 0.0);

}  // namespace s3nf
