#include "s3nf/spacetime.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace s3nf {

TimeSampling::TimeSampling(int n) : count(n) {
  if (n < 1) throw std::invalid_argument("time sampling needs at least one node");
}

double TimeSampling::t(int j) const {
  return -std::numbers::pi + 2.0 * std::numbers::pi * j / count;
}

SpacetimeSpectrum::SpacetimeSpectrum(int n_max, int max_degree) : N(n_max) {
  if (n_max < 0) throw std::invalid_argument("negative frequency range");
  slices.assign(2 * n_max + 1, SU2Spectrum(max_degree));
}

SpacetimeSpectrum SpacetimeSpectrum::resized(int n_max, int max_degree) const {
  SpacetimeSpectrum out(n_max, max_degree);
  for (int n = -std::min(n_max, N); n <= std::min(n_max, N); ++n)
    out.at(n) = at(n).resized(max_degree);
  return out;
}

double SpacetimeSpectrum::plancherel_norm2() const {
  double acc = 0.0;
  for (const auto& s : slices) acc += s.plancherel_norm2();
  return acc;
}

SpacetimeSpectrum& SpacetimeSpectrum::operator+=(const SpacetimeSpectrum& o) {
  if (o.N > N || o.max_degree() > max_degree())
    *this = resized(std::max(N, o.N), std::max(max_degree(), o.max_degree()));
  for (int n = -o.N; n <= o.N; ++n) at(n) += o.at(n);
  return *this;
}

SpacetimeSpectrum& SpacetimeSpectrum::operator-=(const SpacetimeSpectrum& o) {
  if (o.N > N || o.max_degree() > max_degree())
    *this = resized(std::max(N, o.N), std::max(max_degree(), o.max_degree()));
  for (int n = -o.N; n <= o.N; ++n) at(n) -= o.at(n);
  return *this;
}

SpacetimeSpectrum& SpacetimeSpectrum::operator*=(cplx s) {
  for (auto& x : slices) x *= s;
  return *this;
}

SpacetimeSpectrum operator+(SpacetimeSpectrum a, const SpacetimeSpectrum& b) { return a += b; }
SpacetimeSpectrum operator-(SpacetimeSpectrum a, const SpacetimeSpectrum& b) { return a -= b; }
SpacetimeSpectrum operator*(cplx s, SpacetimeSpectrum a) { return a *= s; }

double spacetime_distance(const SpacetimeSpectrum& a, const SpacetimeSpectrum& b) {
  return std::sqrt((a - b).plancherel_norm2());
}

SpacetimeSpectrum spacetime_analyze(const std::vector<SU2Spectrum>& series,
                                    const TimeSampling& samples, int N) {
  if (static_cast<int>(series.size()) != samples.count)
    throw std::invalid_argument("series length does not match the time sampling");
  if (samples.count < 2 * N + 1)
    throw std::domain_error("time sampling of " + std::to_string(samples.count) +
                            " nodes aliases frequency " + std::to_string(N));
  int M = 0;
  for (const auto& s : series) M = std::max(M, s.max_degree());
  SpacetimeSpectrum out(N, M);
  const double w = 1.0 / samples.count;

#pragma omp parallel for schedule(static)
  for (int k = 0; k < 2 * N + 1; ++k) {
    const int n = k - N;
    SU2Spectrum acc(M);
    for (int j = 0; j < samples.count; ++j) {
      const cplx phase = std::polar(w, -n * samples.t(j));
      const SU2Spectrum& s = series[j];
      for (int m = 0; m <= s.max_degree(); ++m) acc[m] += phase * s[m];
    }
    out.at(n) = std::move(acc);
  }
  return out;
}

SU2Spectrum spacetime_evaluate(const SpacetimeSpectrum& s, double t) {
  SU2Spectrum out(std::max(0, s.max_degree()));
  for (int n = -s.N; n <= s.N; ++n) {
    const cplx phase = std::polar(1.0, n * t);
    for (int m = 0; m <= s.max_degree(); ++m) out[m] += phase * s.at(n)[m];
  }
  return out;
}

std::vector<SU2Spectrum> spacetime_synthesize(const SpacetimeSpectrum& s,
                                              const TimeSampling& samples) {
  std::vector<SU2Spectrum> out(samples.count);
#pragma omp parallel for schedule(static)
  for (int j = 0; j < samples.count; ++j) out[j] = spacetime_evaluate(s, samples.t(j));
  return out;
}

SpacetimeSpectrum time_derivative(const SpacetimeSpectrum& s, int k) {
  return apply_symbol(s, [k](int n, int) {
    cplx v = 1.0;
    for (int i = 0; i < k; ++i) v *= cplx(0.0, n);
    return v;
  });
}

std::vector<BlockNorm> block_norms(const SpacetimeSpectrum& s, double threshold) {
  std::vector<BlockNorm> out;
  for (int n = -s.N; n <= s.N; ++n)
    for (int m = 0; m <= s.max_degree(); ++m) {
      const double v = s.at(n)[m].norm();
      if (v > threshold) out.push_back({n, m, v});
    }
  return out;
}

}  // namespace s3nf
