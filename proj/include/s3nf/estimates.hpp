#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "s3nf/cylinder_wave.hpp"
#include "s3nf/product_engine.hpp"

namespace s3nf {

struct EstimateParams {
  double alpha1 = 1.0, alpha2 = 0.25, beta0 = 0.0, betaw = 0.0;
};

struct Admissibility {
  bool admissible = false;
  bool boundary = false;               // some non-strict condition holds with equality
  std::vector<std::string> violated;   // labels of failed conditions
};

/// Conditions of the multiplier theorem:
/// a1+a2+b0 > 1+2bw, a1+a2 >= 1+2bw, a1+b0 >= bw, a2+b0 >= bw, bw >= -1, -1/2 <= b0 <= 2bw+3/2.
Admissibility admissible(const EstimateParams& p, double tol = 1e-12);

/// (sum_{n,m} (m+1)^{1-2b0} |1+(m+1)^2-n^2|^{2bw} |||F(u)(pi_m)_n|||^2)^{1/2}
double weighted_spacetime_norm(const SpacetimeSpectrum& u, double beta0, double betaw);
double weighted_spacetime_norm(const SineQ0Spectrum& q, double beta0, double betaw);

/// ||J^{-b0} W^{bw} Q0(phi, psi)|| / (||f||_{H^a1} ||g||_{H^a2}) for the sine solutions
/// with data (0, f), (0, g); Q0 through the CG route. Throws std::invalid_argument on a
/// zero denominator.
double estimate_ratio(const SU2Spectrum& f, const SU2Spectrum& g, const EstimateParams& p);
/// Same ratio from a precomputed Q0 spectrum.
double estimate_ratio(const SineQ0Spectrum& q, const SU2Spectrum& f, const SU2Spectrum& g, const EstimateParams& p);

struct SweepConfig {
  std::uint64_t seed = 1;
  int trials = 200;
  std::vector<int> degrees{16, 32};
  double sigma = 4.5;  // entries of block m scaled by (m+1)^-sigma
};

struct DegreeRatios {
  int M = 0;
  std::vector<double> ratios;
  std::vector<double> running_sup;
  std::optional<double> sup;  // empty when no trials ran
};

struct RatioReport {
  EstimateParams params;
  Admissibility admissibility;
  SweepConfig config;
  std::string ensemble;
  std::vector<DegreeRatios> by_degree;
  std::optional<double> sup;
  /// Relative change of the supremum between the last two degrees.
  std::optional<double> sup_change() const;
};

/// Random data pair of a trial; block m depends only on (seed, trial), so lower
/// degrees see a prefix of the same data.
std::pair<SU2Spectrum, SU2Spectrum> trial_data(const SweepConfig& cfg, int trial, int M);

/// One report per parameter set; each trial's Q0 is computed once and shared.
std::vector<RatioReport> ratio_sweep(const SweepConfig& cfg, const std::vector<EstimateParams>& params);
RatioReport ratio_sweep(const SweepConfig& cfg, const EstimateParams& params);

/// f at pi_0 and g at the top degree M (single entries), one ratio per degree.
RatioReport adversarial_sweep(const EstimateParams& params, const std::vector<int>& degrees);

/// (1 + (m+1)^2 - n^2)^2 / (m+1)
double lambda_basic(double m, int n);
double lambda_basic_derivative(double m, int n);
/// (m+1)^{-1-2b0} |n^2 - 1 - (m+1)^2|^{2+2bw}
double lambda_weighted(double m, int n, double beta0, double betaw);
/// Closed-form derivative in m of lambda_weighted, away from its zeros.
double lambda_weighted_derivative(double m, int n, double beta0, double betaw);

struct LambdaProfile {
  int n = 0;
  double beta0 = 0.0, betaw = 0.0;
  std::optional<double> m_star;  // sqrt(n^2-1) - 1 for |n| >= 2
  double min_value = 0.0;        // lambda_basic at m_star
  bool basic_sign_ok = true;     // lambda_basic' < 0 before m_star and > 0 after
  bool pp_applicable = false;    // n >= 2
  bool pp_decreasing = false;    // on 0 <= m <= n-2
  bool pp_expected = false;      // b0 >= -1/2 and bw >= -1
  bool pm_applicable = false;    // n != 0
  bool pm_increasing = false;    // on m >= |n|
  bool pm_expected = false;      // -1/2 <= b0 <= 2bw + 3/2
};

/// Dense sampling plus sign of the closed-form derivative.
LambdaProfile lambda_profile(int n, double beta0, double betaw, int samples_per_unit = 16);

/// Periodic solution of (box+1) phi = F with data `state` at t = 0. F must not
/// resonate (no content at n = +-(m+1)); throws std::domain_error otherwise.
SpacetimeSpectrum forced_solution(const WaveState& state, const SpacetimeSpectrum& F);

struct ForcedEstimate {
  double lhs = 0.0;          // ||Q0||_{L^2([-pi,pi]; H^{1+eps})}
  double lhs_dt = 0.0;       // ||d_t Q0||_{L^2([-pi,pi]; H^eps)}
  double rhs = 0.0;          // product of the brackets with L^1 in time forcing norms
  double rhs_l2 = 0.0;       // same brackets with L^2 in time forcing norms
  double duhamel_residual = 0.0;  // spectral solution vs Duhamel quadrature at t = pi/2
  double ratio() const { return rhs > 0.0 ? lhs / rhs : 0.0; }
  double ratio_with_dt() const { return rhs_l2 > 0.0 ? (lhs + lhs_dt) / rhs_l2 : 0.0; }
};

/// Throws std::invalid_argument unless 0 < eps <= 1/2.
ForcedEstimate forced_estimate_check(const WaveState& phi_data, const SpacetimeSpectrum& F,
                                     const WaveState& psi_data, const SpacetimeSpectrum& G, double eps);

struct ForcedCase {
  WaveState phi_data, psi_data;
  SpacetimeSpectrum F, G;
};

/// Smooth random data and forcing (blocks scaled by (m+1)^-sigma) at time frequencies
/// 0 and +-2, with the resonant block m = 1 of the +-2 part removed. Lower degrees see
/// a prefix of the same data.
ForcedCase manufactured_forced_case(int M, std::uint64_t seed = 1, double sigma = 4.5);

}  // namespace s3nf
