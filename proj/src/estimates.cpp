#include "s3nf/estimates.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "s3nf/nullform.hpp"

namespace s3nf {

namespace {

double weight(int n, int m, double beta0, double betaw) {
  const double k = m + 1.0;
  const double w = std::abs(static_cast<double>(multiplier_symbol(n, m)));
  return std::pow(k, 1.0 - 2.0 * beta0) * std::pow(w, 2.0 * betaw);
}

double ratio_from(double numerator, const SU2Spectrum& f, const SU2Spectrum& g, const EstimateParams& p) {
  const double den = sobolev_norm(f, p.alpha1) * sobolev_norm(g, p.alpha2);
  if (!(den > 0.0)) throw std::invalid_argument("estimate_ratio: zero data norm");
  return numerator / den;
}

// sum_m (m+1)^(2s+1) |||s_m|||^2 for a space-time spectrum slice by slice, times 2 pi
// for the dt measure, with an extra n^(2k) time-derivative weight.
double time_sobolev2(const SpacetimeSpectrum& u, double s, int k) {
  double acc = 0.0;
  for (int n = -u.N; n <= u.N; ++n)
    for (int m = 0; m <= u.max_degree(); ++m)
      acc += std::pow(static_cast<double>(n), 2 * k) * std::pow(m + 1.0, 2.0 * s + 1.0) * u.at(n)[m].squaredNorm();
  return 2.0 * std::numbers::pi * acc;
}

// int_{-pi}^{pi} ||u(t)||_{H^s} dt by the periodic trapezoid rule.
double time_l1_sobolev(const SpacetimeSpectrum& u, double s) {
  const TimeSampling ts(std::max(256, 8 * (2 * u.N + 1)));
  double acc = 0.0;
  for (int j = 0; j < ts.count; ++j) acc += sobolev_norm(spacetime_evaluate(u, ts.t(j)), s);
  return 2.0 * std::numbers::pi * acc / ts.count;
}

}  // namespace

Admissibility admissible(const EstimateParams& p, double tol) {
  Admissibility out;
  const double a1 = p.alpha1, a2 = p.alpha2, b0 = p.beta0, bw = p.betaw;
  auto weak = [&](double lhs, double rhs, const char* label) {
    if (lhs < rhs - tol) out.violated.emplace_back(label);
    else if (std::abs(lhs - rhs) <= tol) out.boundary = true;
  };
  if (!(a1 + a2 + b0 > 1.0 + 2.0 * bw + tol)) out.violated.emplace_back("a1+a2+b0 > 1+2bw");
  weak(a1 + a2, 1.0 + 2.0 * bw, "a1+a2 >= 1+2bw");
  weak(a1 + b0, bw, "a1+b0 >= bw");
  weak(a2 + b0, bw, "a2+b0 >= bw");
  weak(bw, -1.0, "bw >= -1");
  weak(b0, -0.5, "b0 >= -1/2");
  weak(2.0 * bw + 1.5, b0, "b0 <= 2bw+3/2");
  out.admissible = out.violated.empty();
  return out;
}

double weighted_spacetime_norm(const SpacetimeSpectrum& u, double beta0, double betaw) {
  double acc = 0.0;
  for (int n = -u.N; n <= u.N; ++n)
    for (int m = 0; m <= u.max_degree(); ++m) {
      const double b = u.at(n)[m].squaredNorm();
      if (b != 0.0) acc += weight(n, m, beta0, betaw) * b;
    }
  return std::sqrt(acc);
}

double weighted_spacetime_norm(const SineQ0Spectrum& q, double beta0, double betaw) {
  double acc = 0.0;
  for (int n = 0; n <= q.n_max(); ++n)
    for (int m = 0; m < static_cast<int>(q.blocks[n].size()); ++m) {
      const double b = q.norm2(n, m);
      if (b != 0.0) acc += (n == 0 ? 1.0 : 2.0) * weight(n, m, beta0, betaw) * b;
    }
  return std::sqrt(acc);
}

double estimate_ratio(const SU2Spectrum& f, const SU2Spectrum& g, const EstimateParams& p) {
  const double den = sobolev_norm(f, p.alpha1) * sobolev_norm(g, p.alpha2);
  if (!(den > 0.0)) throw std::invalid_argument("estimate_ratio: zero data norm");
  return weighted_spacetime_norm(q0_cg_sine(f, g), p.beta0, p.betaw) / den;
}

double estimate_ratio(const SineQ0Spectrum& q, const SU2Spectrum& f, const SU2Spectrum& g, const EstimateParams& p) {
  return ratio_from(weighted_spacetime_norm(q, p.beta0, p.betaw), f, g, p);
}

std::optional<double> RatioReport::sup_change() const {
  if (by_degree.size() < 2) return std::nullopt;
  const auto& a = by_degree[by_degree.size() - 2].sup;
  const auto& b = by_degree.back().sup;
  if (!a || !b || *a == 0.0) return std::nullopt;
  return std::abs(*b - *a) / *a;
}

std::pair<SU2Spectrum, SU2Spectrum> trial_data(const SweepConfig& cfg, int trial, int M) {
  std::mt19937_64 rf(stream_seed(cfg.seed, static_cast<std::uint64_t>(trial), 0));
  std::mt19937_64 rg(stream_seed(cfg.seed, static_cast<std::uint64_t>(trial), 1));
  SU2Spectrum f = random_spectrum(M, rf, cfg.sigma);
  SU2Spectrum g = random_spectrum(M, rg, cfg.sigma);
  return {std::move(f), std::move(g)};
}

std::vector<RatioReport> ratio_sweep(const SweepConfig& cfg, const std::vector<EstimateParams>& params) {
  std::ostringstream ens;
  ens << "complex Gaussian blocks scaled by (m+1)^-" << cfg.sigma << ", seed " << cfg.seed;
  std::vector<RatioReport> out(params.size());
  for (std::size_t i = 0; i < params.size(); ++i) {
    out[i].params = params[i];
    out[i].admissibility = admissible(params[i]);
    out[i].config = cfg;
    out[i].ensemble = ens.str();
  }
  for (int M : cfg.degrees) {
    std::vector<DegreeRatios> rows(params.size());
    for (auto& r : rows) r.M = M;
    if (cfg.trials > 0) {
      // trials run in order; the engine parallelises inside each product
      const SinePairEngine engine(M);
      for (int t = 0; t < cfg.trials; ++t) {
        const auto [f, g] = trial_data(cfg, t, M);
        const SineQ0Spectrum q = engine.compute(f, g);
        for (std::size_t i = 0; i < params.size(); ++i) {
          const double r = estimate_ratio(q, f, g, params[i]);
          rows[i].ratios.push_back(r);
          rows[i].sup = std::max(rows[i].sup.value_or(r), r);
          rows[i].running_sup.push_back(*rows[i].sup);
        }
      }
    }
    for (std::size_t i = 0; i < params.size(); ++i) {
      if (rows[i].sup) out[i].sup = std::max(out[i].sup.value_or(*rows[i].sup), *rows[i].sup);
      out[i].by_degree.push_back(std::move(rows[i]));
    }
  }
  return out;
}

RatioReport ratio_sweep(const SweepConfig& cfg, const EstimateParams& params) {
  return ratio_sweep(cfg, std::vector<EstimateParams>{params}).front();
}

RatioReport adversarial_sweep(const EstimateParams& params, const std::vector<int>& degrees) {
  RatioReport out;
  out.params = params;
  out.admissibility = admissible(params);
  out.config.trials = 1;
  out.config.degrees = degrees;
  out.ensemble = "single modes: f at pi_0, g at pi_M";
  for (int M : degrees) {
    SU2Spectrum f(M), g(M);
    f[0](0, 0) = 1.0;
    g[M](0, 0) = 1.0;
    const double r = estimate_ratio(f, g, params);
    out.by_degree.push_back({M, {r}, {r}, r});
    out.sup = std::max(out.sup.value_or(r), r);
  }
  return out;
}

double lambda_basic(double m, int n) {
  const double k = m + 1.0;
  const double x = 1.0 + k * k - static_cast<double>(n) * n;
  return x * x / k;
}

double lambda_basic_derivative(double m, int n) {
  const double k = m + 1.0, n2 = static_cast<double>(n) * n;
  return (k * k + 1.0 - n2) * (3.0 * k * k + n2 - 1.0) / (k * k);
}

double lambda_weighted(double m, int n, double beta0, double betaw) {
  const double k = m + 1.0;
  const double x = std::abs(static_cast<double>(n) * n - 1.0 - k * k);
  return std::pow(k, -1.0 - 2.0 * beta0) * std::pow(x, 2.0 + 2.0 * betaw);
}

double lambda_weighted_derivative(double m, int n, double beta0, double betaw) {
  const double k = m + 1.0, n2 = static_cast<double>(n) * n;
  const double x = n2 - 1.0 - k * k;
  const double front = std::pow(k, -2.0 - 2.0 * beta0);
  if (x > 0.0)
    return -((1.0 + 2.0 * beta0) * x + 2.0 * k * k * (2.0 + 2.0 * betaw)) * front * std::pow(x, 1.0 + 2.0 * betaw);
  const double y = -x;
  return front * std::pow(y, 1.0 + 2.0 * betaw) *
         ((n2 - 1.0) * (1.0 + 2.0 * beta0) + k * k * (3.0 + 4.0 * betaw - 2.0 * beta0));
}

LambdaProfile lambda_profile(int n, double beta0, double betaw, int samples_per_unit) {
  LambdaProfile out;
  out.n = n;
  out.beta0 = beta0;
  out.betaw = betaw;
  const int an = std::abs(n);
  const double h = 1.0 / samples_per_unit;
  constexpr double rel = 1e-12;

  if (an >= 2) {
    const double ms = std::sqrt(static_cast<double>(n) * n - 1.0) - 1.0;
    out.m_star = ms;
    out.min_value = lambda_basic(ms, n);
  }
  const double top = 4.0 * an + 50.0;
  for (double m = 0.0; m <= top; m += h) {
    const double d = lambda_basic_derivative(m, n);
    if (out.m_star && std::abs(m - *out.m_star) < 1e-9) continue;
    const bool before = out.m_star && m < *out.m_star;
    if (before ? !(d < 0.0) : !(d > 0.0)) out.basic_sign_ok = false;
  }

  out.pp_expected = beta0 >= -0.5 && betaw >= -1.0;
  out.pm_expected = beta0 >= -0.5 && beta0 <= 2.0 * betaw + 1.5;

  if (n >= 2) {
    out.pp_applicable = true;
    out.pp_decreasing = true;
    double prev = lambda_weighted(0.0, n, beta0, betaw);
    for (double m = 0.0; m <= n - 2 + 1e-12; m += h) {
      const double v = lambda_weighted(m, n, beta0, betaw);
      const double d = lambda_weighted_derivative(m, n, beta0, betaw);
      if (v > prev * (1.0 + rel) || d > rel * v) out.pp_decreasing = false;
      prev = v;
    }
  }
  if (n != 0) {
    out.pm_applicable = true;
    out.pm_increasing = true;
    double prev = lambda_weighted(an, n, beta0, betaw);
    for (double m = an; m <= top; m += h) {
      const double v = lambda_weighted(m, n, beta0, betaw);
      const double d = lambda_weighted_derivative(m, n, beta0, betaw);
      if (v < prev * (1.0 - rel) || d < -rel * v) out.pm_increasing = false;
      prev = v;
    }
  }
  return out;
}

SpacetimeSpectrum forced_solution(const WaveState& state, const SpacetimeSpectrum& F) {
  const int M = std::max(state.max_degree(), F.max_degree());
  SpacetimeSpectrum particular(F.N, M);
  for (int n = -F.N; n <= F.N; ++n)
    for (int m = 0; m <= F.max_degree(); ++m) {
      const Matrix& b = F.at(n)[m];
      if (b.squaredNorm() == 0.0) continue;
      const long long w = wave_symbol(n, m);
      if (w == 0) throw std::domain_error("forced_solution: forcing resonates at n = " + std::to_string(n));
      particular.at(n)[m] = b / static_cast<double>(w);
    }
  const SU2Spectrum p0 = spacetime_evaluate(particular, 0.0);
  const SU2Spectrum p1 = spacetime_evaluate(time_derivative(particular), 0.0);
  const WaveState rest(state.f0.resized(M) - p0.resized(M), state.f1.resized(M) - p1.resized(M));
  return particular + free_spacetime(rest);
}

ForcedEstimate forced_estimate_check(const WaveState& phi_data, const SpacetimeSpectrum& F,
                                     const WaveState& psi_data, const SpacetimeSpectrum& G, double eps) {
  if (!(eps > 0.0 && eps <= 0.5)) throw std::invalid_argument("forced_estimate_check: need 0 < eps <= 1/2");
  const SpacetimeSpectrum phi = forced_solution(phi_data, F), psi = forced_solution(psi_data, G);

  ForcedEstimate out;
  const SpacetimeSpectrum q = q0_forced_route(phi, psi, F, G);
  out.lhs = std::sqrt(time_sobolev2(q, 1.0 + eps, 0));
  out.lhs_dt = std::sqrt(time_sobolev2(q, eps, 1));

  auto bracket = [&](const WaveState& d, const SpacetimeSpectrum& force, bool l2) {
    const double data = sobolev_norm(d.f0, 2.0 + eps) + sobolev_norm(d.f1, 1.0 + eps);
    return data + (l2 ? std::sqrt(time_sobolev2(force, 1.0 + eps, 0)) : time_l1_sobolev(force, 1.0 + eps));
  };
  out.rhs = bracket(phi_data, F, false) * bracket(psi_data, G, false);
  out.rhs_l2 = bracket(phi_data, F, true) * bracket(psi_data, G, true);

  const double t = 0.5 * std::numbers::pi;
  const ForcingSamples fs = sample_forcing([&](double s) { return spacetime_evaluate(F, s); }, t, 64);
  const int M = phi.max_degree();
  const SU2Spectrum direct = evolve_forced(WaveState(phi_data.f0.resized(M), phi_data.f1.resized(M)), fs, t);
  const SU2Spectrum spectral = spacetime_evaluate(phi, t);
  const double scale = std::max(1e-300, std::sqrt(spectral.plancherel_norm2()));
  out.duhamel_residual = plancherel_distance(direct, spectral) / scale;
  return out;
}

ForcedCase manufactured_forced_case(int M, std::uint64_t seed, double sigma) {
  SweepConfig cfg;
  cfg.seed = seed;
  cfg.sigma = sigma;
  const auto [f0, g0] = trial_data(cfg, 0, M);
  const auto [f1, g1] = trial_data(cfg, 1, M);
  const auto [h0, k0] = trial_data(cfg, 2, M);
  auto [h2, k2] = trial_data(cfg, 3, M);
  if (M >= 1) {
    h2[1].setZero();
    k2[1].setZero();
  }
  ForcedCase out{WaveState(f0, f1), WaveState(g0, g1), SpacetimeSpectrum(2, M), SpacetimeSpectrum(2, M)};
  // F = h0 + cos(2t) h2, G = k0 + sin(2t) k2
  out.F.at(0) = h0;
  out.F.at(2) = 0.5 * h2;
  out.F.at(-2) = 0.5 * h2;
  out.G.at(0) = k0;
  out.G.at(2) = cplx(0.0, -0.5) * k2;
  out.G.at(-2) = cplx(0.0, 0.5) * k2;
  return out;
}

}  // namespace s3nf
