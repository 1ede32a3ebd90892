#pragma once

#include <memory>
#include <vector>

#include "s3nf/spacetime.hpp"

namespace s3nf {

/// F(Q0(phi, psi))(pi_m)_n for n >= 0 of the sine solutions with data (0, f), (0, g).
/// The spectrum is even in n, so negative frequencies are implied.
struct SineQ0Spectrum {
  int M = 0;                               // data degree
  std::vector<std::vector<Matrix>> blocks;  // blocks[n][m]; size-0 matrix where identically zero
  int n_max() const { return static_cast<int>(blocks.size()) - 1; }
  /// |||F(Q0)(pi_m)_n|||^2, valid for any sign of n.
  double norm2(int n, int m) const;
  SpacetimeSpectrum to_spacetime() const;
};

/// Sine-pair Q0 through fast products on a twisted half torus in (alpha, gamma)
/// with Gauss-Legendre nodes in beta. Plans and tables are built once per degree.
class SinePairEngine {
 public:
  explicit SinePairEngine(int M);
  ~SinePairEngine();
  SinePairEngine(const SinePairEngine&) = delete;
  SinePairEngine& operator=(const SinePairEngine&) = delete;

  int max_degree() const { return M_; }
  SineQ0Spectrum compute(const SU2Spectrum& f, const SU2Spectrum& g) const;

 private:
  struct Impl;
  int M_;
  std::unique_ptr<Impl> impl_;
};

}  // namespace s3nf
