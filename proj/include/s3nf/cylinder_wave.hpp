#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "s3nf/spacetime.hpp"

namespace s3nf {

/// Cauchy data (phi, d_t phi) at one instant.
struct WaveState {
  SU2Spectrum f0, f1;

  WaveState() = default;
  WaveState(SU2Spectrum a, SU2Spectrum b);
  int max_degree() const { return f0.max_degree(); }
};

/// Free mode formula cos((m+1)t) f0 + sin((m+1)t)/(m+1) f1; t is reduced mod 2pi first.
SU2Spectrum evolve_free(const WaveState& state, double t);
/// Time derivative of evolve_free.
SU2Spectrum evolve_free_dt(const WaveState& state, double t);
WaveState evolve_free_state(const WaveState& state, double t);

/// Full space-time spectrum of the free solution (frequencies |n| <= M+1).
SpacetimeSpectrum free_spacetime(const WaveState& state);

/// phi^+ and phi^- for data (0, f1).
struct FrequencySplit {
  SpacetimeSpectrum plus, minus;
};
FrequencySplit freq_split(const SU2Spectrum& f1);
/// (phi^+ - phi^-) / 2i
SpacetimeSpectrum recombine(const FrequencySplit& split);

/// Forcing sampled at uniformly spaced times from 0 to the target time.
struct ForcingSamples {
  std::vector<double> times;
  std::vector<SU2Spectrum> values;
};
ForcingSamples sample_forcing(const std::function<SU2Spectrum(double)>& F, double t, int intervals);

/// Order of the composite Simpson rule used for the Duhamel integral.
inline constexpr int kDuhamelOrder = 4;

/// Solution of (box + 1) phi = F with the given data, at time forcing.times.back().
/// Throws std::domain_error for non-uniform or inconsistent samples.
WaveState evolve_forced_state(const WaveState& state, const ForcingSamples& forcing);
SU2Spectrum evolve_forced(const WaveState& state, const ForcingSamples& forcing, double t);

/// sum_m (m+1) (|||d_t phi|||^2 + (m+1)^2 |||phi|||^2) for the pair (phi, d_t phi).
double energy(const WaveState& at_t);

}  // namespace s3nf
