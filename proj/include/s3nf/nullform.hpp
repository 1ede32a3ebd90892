#pragma once

#include <utility>
#include <vector>

#include "s3nf/peter_weyl.hpp"
#include "s3nf/spacetime.hpp"

namespace s3nf {

/// Frequency signs of the two factors, e.g. {+1, -1} for Q0(phi^+, psi^-).
struct SignPair {
  int s1 = 1, s2 = 1;
  friend bool operator==(const SignPair&, const SignPair&) = default;
};

inline constexpr SignPair kPlusPlus{1, 1}, kPlusMinus{1, -1}, kMinusPlus{-1, 1}, kMinusMinus{-1, -1};

/// 1 + (m+1)^2 - n^2, the symbol of (box + 2).
long long multiplier_symbol(int n, int m);

/// (m+1)^2 - n^2, the symbol of (box + 1).
long long wave_symbol(int n, int m);

/// Pieces of F(phi^{s1} psi^{s2})(pi_m)_n coming from f^(pi_{l-1}) and the
/// single g block compatible with frequency n.
struct VarpiBlock {
  int l = 0, n = 0;
  SignPair signs;
  int a = -1, b = -1;              // degrees of the f and g blocks; -1 when empty
  std::vector<Matrix> by_degree;   // by_degree[m], zero outside the support
  bool empty() const { return a < 0; }
  int max_degree() const { return static_cast<int>(by_degree.size()) - 1; }
};

/// U_m^T (F (x) G) U_m / (m+1) for every m in |a-b|..a+b, U_m the real CG intertwiner
/// of pi_a (x) pi_b. Entry m of the result is empty outside the selection range.
std::vector<Matrix> varpi_degrees(int a, int b, const Matrix& F, const Matrix& G);

VarpiBlock varpi(int l, int n, const SU2Spectrum& f, const SU2Spectrum& g, SignPair signs);

/// (sum_m |||(m+1) varpi_l(pi_m)_n|||^2, |||f^(pi_{l-1})|||^2 |||g^(pi_b)|||^2)
std::pair<double, double> young_bound_check(int l, int n, const SU2Spectrum& f, const SU2Spectrum& g,
                                            SignPair signs);

/// Spectrum of the product of two space-time functions given spectrally,
/// computed through CG coupling and convolution in n.
SpacetimeSpectrum cg_product(const SpacetimeSpectrum& u, const SpacetimeSpectrum& v);

/// Q0(phi^{s1}, psi^{s2}) for data (0, f), (0, g); blocks (-,+), (-,-) come from
/// the (+,-), (+,+) blocks by symmetry.
SpacetimeSpectrum q0_cg_route(const SU2Spectrum& f, const SU2Spectrum& g, SignPair signs);

/// Q0(phi, psi) for the sine solutions with data (0, f), (0, g).
SpacetimeSpectrum q0_cg_sine(const SU2Spectrum& f, const SU2Spectrum& g);

/// Q0 of two free solutions given by their space-time spectra.
SpacetimeSpectrum q0_cg_free(const SpacetimeSpectrum& phi, const SpacetimeSpectrum& psi);

/// Space-time sampling used by the grid routes.
struct SpacetimeGrid {
  GridPtr grid;
  TimeSampling times;
  int M = 0, N = 0;  // output degree and frequency range
};

/// Smallest grid resolving products of spectra with the given degree and frequency bounds.
SpacetimeGrid product_grid(int M, int N);

/// Samples of a space-time field on a SpacetimeGrid.
struct SampledField {
  TimeSampling times;
  std::vector<GridFunction> slices;
};

SampledField sample_spacetime(const SpacetimeSpectrum& u, const SpacetimeGrid& g);
SpacetimeSpectrum analyze_spacetime(const SampledField& u, int M, int N);

/// F(Q0) = (1/2)(1 + (m+1)^2 - n^2) F(phi psi) with the product formed on the grid.
/// Throws std::domain_error when the grid cannot resolve the product.
SpacetimeSpectrum q0_multiplier_route(const SpacetimeSpectrum& phi, const SpacetimeSpectrum& psi,
                                      const SpacetimeGrid& g);
SpacetimeSpectrum q0_multiplier_route(const SpacetimeSpectrum& phi, const SpacetimeSpectrum& psi);

/// 2 Q0 = (box + 2)(phi psi) - phi G - psi F for (box+1) phi = F, (box+1) psi = G.
/// Throws std::invalid_argument when a PDE residual exceeds kForcedResidualTol
/// relative to max(1, |||forcing|||).
inline constexpr double kForcedResidualTol = 1e-8;
SpacetimeSpectrum q0_forced_route(const SpacetimeSpectrum& phi, const SpacetimeSpectrum& psi,
                                  const SpacetimeSpectrum& F, const SpacetimeSpectrum& G);

/// d_t phi d_t psi - sum_k (X_k phi)(X_k psi) evaluated at every node.
SampledField q0_pointwise_route(const SpacetimeSpectrum& phi, const SpacetimeSpectrum& psi,
                                const SpacetimeGrid& g);
SpacetimeSpectrum q0_pointwise_spectrum(const SpacetimeSpectrum& phi, const SpacetimeSpectrum& psi);

}  // namespace s3nf
