#include "s3nf/cylinder_wave.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace s3nf {

namespace {

double reduce(double t) { return std::remainder(t, 2.0 * std::numbers::pi); }

// Weights of the composite Simpson rule on `intervals` equal steps; a final
// 3/8 panel absorbs an odd interval count.
std::vector<double> simpson_weights(int intervals, double h) {
  if (intervals < 2) throw std::domain_error("Duhamel quadrature needs at least two intervals");
  std::vector<double> w(intervals + 1, 0.0);
  const int simpson = (intervals % 2 == 0) ? intervals : intervals - 3;
  for (int k = 0; k < simpson; k += 2) {
    w[k] += h / 3.0;
    w[k + 1] += 4.0 * h / 3.0;
    w[k + 2] += h / 3.0;
  }
  if (simpson != intervals) {
    const int k = simpson;
    w[k] += 3.0 * h / 8.0;
    w[k + 1] += 9.0 * h / 8.0;
    w[k + 2] += 9.0 * h / 8.0;
    w[k + 3] += 3.0 * h / 8.0;
  }
  return w;
}

}  // namespace

WaveState::WaveState(SU2Spectrum a, SU2Spectrum b) : f0(std::move(a)), f1(std::move(b)) {
  const int M = std::max(f0.max_degree(), f1.max_degree());
  f0 = f0.resized(M);
  f1 = f1.resized(M);
}

SU2Spectrum evolve_free(const WaveState& state, double t) {
  const double tr = reduce(t);
  SU2Spectrum out(state.max_degree());
  for (int m = 0; m <= state.max_degree(); ++m) {
    const double k = m + 1.0;
    out[m] = std::cos(k * tr) * state.f0[m] + (std::sin(k * tr) / k) * state.f1[m];
  }
  return out;
}

SU2Spectrum evolve_free_dt(const WaveState& state, double t) {
  const double tr = reduce(t);
  SU2Spectrum out(state.max_degree());
  for (int m = 0; m <= state.max_degree(); ++m) {
    const double k = m + 1.0;
    out[m] = (-k * std::sin(k * tr)) * state.f0[m] + std::cos(k * tr) * state.f1[m];
  }
  return out;
}

WaveState evolve_free_state(const WaveState& state, double t) {
  return {evolve_free(state, t), evolve_free_dt(state, t)};
}

SpacetimeSpectrum free_spacetime(const WaveState& state) {
  const int M = state.max_degree();
  SpacetimeSpectrum out(M + 1, M);
  for (int m = 0; m <= M; ++m) {
    const double k = m + 1.0;
    // cos = (e+ + e-)/2, sin/k = (e+ - e-)/(2ik)
    out.at(m + 1)[m] = 0.5 * state.f0[m] + state.f1[m] / cplx(0.0, 2.0 * k);
    out.at(-m - 1)[m] = 0.5 * state.f0[m] - state.f1[m] / cplx(0.0, 2.0 * k);
  }
  return out;
}

FrequencySplit freq_split(const SU2Spectrum& f1) {
  const int M = f1.max_degree();
  FrequencySplit s{SpacetimeSpectrum(M + 1, M), SpacetimeSpectrum(M + 1, M)};
  for (int m = 0; m <= M; ++m) {
    s.plus.at(m + 1)[m] = f1[m] / (m + 1.0);
    s.minus.at(-m - 1)[m] = f1[m] / (m + 1.0);
  }
  return s;
}

SpacetimeSpectrum recombine(const FrequencySplit& split) {
  return cplx(0.0, -0.5) * (split.plus - split.minus);
}

ForcingSamples sample_forcing(const std::function<SU2Spectrum(double)>& F, double t, int intervals) {
  if (intervals < 1) throw std::invalid_argument("need at least one interval");
  ForcingSamples out;
  for (int k = 0; k <= intervals; ++k) {
    const double s = t * k / intervals;
    out.times.push_back(s);
    out.values.push_back(F(s));
  }
  return out;
}

WaveState evolve_forced_state(const WaveState& state, const ForcingSamples& forcing) {
  const auto& ts = forcing.times;
  if (ts.size() != forcing.values.size() || ts.size() < 2)
    throw std::domain_error("forcing samples and times are inconsistent");
  const int intervals = static_cast<int>(ts.size()) - 1;
  const double t = ts.back();
  const double h = t / intervals;
  const double scale = std::max(1.0, std::abs(t));
  if (std::abs(ts.front()) > 1e-14 * scale)
    throw std::domain_error("forcing samples must start at t = 0");
  for (int k = 0; k <= intervals; ++k)
    if (std::abs(ts[k] - k * h) > 1e-10 * scale)
      throw std::domain_error("forcing samples are not uniformly spaced");

  WaveState out = evolve_free_state(state, t);
  if (t == 0.0) return out;
  const std::vector<double> w = simpson_weights(intervals, h);
  const int M = state.max_degree();
  for (int m = 0; m <= M; ++m) {
    const double k = m + 1.0;
    Matrix acc = Matrix::Zero(m + 1, m + 1), acc_dt = Matrix::Zero(m + 1, m + 1);
    for (int j = 0; j <= intervals; ++j) {
      const SU2Spectrum& F = forcing.values[j];
      if (m > F.max_degree()) continue;
      const double lag = k * (t - ts[j]);
      acc += (w[j] * std::sin(lag) / k) * F[m];
      acc_dt += (w[j] * std::cos(lag)) * F[m];
    }
    out.f0[m] += acc;
    out.f1[m] += acc_dt;
  }
  return out;
}

SU2Spectrum evolve_forced(const WaveState& state, const ForcingSamples& forcing, double t) {
  if (forcing.times.empty() ||
      std::abs(forcing.times.back() - t) > 1e-12 * std::max(1.0, std::abs(t)))
    throw std::domain_error("forcing samples do not end at the requested time");
  return evolve_forced_state(state, forcing).f0;
}

double energy(const WaveState& s) {
  double acc = 0.0;
  for (int m = 0; m <= s.max_degree(); ++m) {
    const double k = m + 1.0;
    acc += k * (s.f1[m].squaredNorm() + k * k * s.f0[m].squaredNorm());
  }
  return acc;
}

}  // namespace s3nf
