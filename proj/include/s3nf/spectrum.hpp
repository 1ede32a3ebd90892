#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "s3nf/wigner.hpp"

namespace s3nf {

/// Truncated Peter-Weyl coefficients f^(pi_m), m = 0..max_degree.
struct SU2Spectrum {
  std::vector<Matrix> coeffs;

  SU2Spectrum() = default;
  explicit SU2Spectrum(int max_degree);

  static SU2Spectrum zero(int max_degree) { return SU2Spectrum(max_degree); }
  /// f^(pi_0) = c, everything else zero.
  static SU2Spectrum constant(int max_degree, cplx c);

  int max_degree() const { return static_cast<int>(coeffs.size()) - 1; }
  Matrix& operator[](int m) { return coeffs[m]; }
  const Matrix& operator[](int m) const { return coeffs[m]; }

  /// Copy truncated or zero-padded to a new degree.
  SU2Spectrum resized(int max_degree) const;

  /// sum_m (m+1) |||f^(pi_m)|||^2
  double plancherel_norm2() const;

  SU2Spectrum& operator+=(const SU2Spectrum& o);
  SU2Spectrum& operator-=(const SU2Spectrum& o);
  SU2Spectrum& operator*=(cplx s);
};

SU2Spectrum operator+(SU2Spectrum a, const SU2Spectrum& b);
SU2Spectrum operator-(SU2Spectrum a, const SU2Spectrum& b);
SU2Spectrum operator*(cplx s, SU2Spectrum a);

/// Plancherel norm of the difference (degrees may differ; missing blocks are zero).
double plancherel_distance(const SU2Spectrum& a, const SU2Spectrum& b);

/// Deterministic stream seed for (seed, counter...) via splitmix64 mixing.
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0);

/// i.i.d. complex Gaussian entries (unit variance per entry) scaled by (m+1)^(-sigma).
SU2Spectrum random_spectrum(int max_degree, std::mt19937_64& rng, double sigma = 0.0);

/// Spectrum of a real-valued function: projects a random spectrum onto the
/// real subspace f^(pi_m) = conj-symmetric under the real structure of pi_m.
SU2Spectrum real_part_spectrum(const SU2Spectrum& s);

}  // namespace s3nf
