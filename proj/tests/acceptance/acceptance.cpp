// One line per acceptance criterion; exit status is the number of failures.
#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "s3nf/clebsch_gordan.hpp"
#include "s3nf/cylinder_wave.hpp"
#include "s3nf/estimates.hpp"
#include "s3nf/minkowski_bridge.hpp"
#include "s3nf/nullform.hpp"
#include "s3nf/peter_weyl.hpp"
#include "s3nf/radial_profile.hpp"
#include "s3nf/series.hpp"
#include "s3nf/wigner.hpp"
#include "support/oracles.hpp"

using namespace s3nf;

namespace {

constexpr double kPi = std::numbers::pi;

// pinned tolerances and limits
constexpr int kCgMaxDoubledSpin = 12;
constexpr int kExpansionMaxDegree = 6;
constexpr double kUnitarityTol = 1e-11;
constexpr double kExpansionTol = 1e-11;
constexpr double kKernelSeconds = 30.0;

constexpr int kTransformMaxDegree = 32;
constexpr double kTransformTol = 1e-11;
constexpr double kTransformSeconds = 60.0;

constexpr double kEnergyDriftTol = 1e-12;
constexpr double kOrderWindow = 0.5;

constexpr int kRouteDegree = 8;
constexpr int kRoutePairs = 20;
constexpr double kRouteTol = 1e-9;
constexpr double kAnalyticTol = 1e-12;

constexpr int kYoungBlocks = 500;
constexpr int kYoungMaxDegree = 24;
constexpr double kYoungSlack = 1e-12;
constexpr double kEqualityTol = 1e-12;

constexpr double kLambdaTol = 1e-12;

constexpr int kSweepTrials = 200;
constexpr double kSweepChange = 0.20;
constexpr double kSweepSeconds = 600.0;

constexpr double kConvergentSlope = 0.02;
constexpr double kDivergentSlope = 0.05;
constexpr double kHarmonicSlopeTol = 0.15;

constexpr double kForcedEps = 0.25;
constexpr double kForcedChange = 0.15;
constexpr double kDuhamelResidual = 1e-6;

constexpr double kOmegaTol = 1e-12;
constexpr double kBridgeChange = 0.10;
constexpr double kBridgeSeconds = 300.0;

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

void note(Outcome& o, bool ok, const std::string& what) {
  o.pass = o.pass && ok;
  if (!o.detail.empty()) o.detail += "; ";
  o.detail += what;
  if (!ok) o.detail += " [FAIL]";
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double rel(const SpacetimeSpectrum& a, const SpacetimeSpectrum& b) {
  return spacetime_distance(a, b) / std::max(1e-300, std::sqrt(b.plancherel_norm2()));
}

SpacetimeSpectrum sine_solution(const SU2Spectrum& f) { return free_spacetime(WaveState(SU2Spectrum(f.max_degree()), f)); }

// ---------------------------------------------------------------------------

class ExactTable {
 public:
  const ExactCG& at(int tj1, int tm1, int tj2, int tm2, int tj3, int tm3) {
    const auto key = std::make_tuple(tj1, tm1, tj2, tm2, tj3, tm3);
    auto it = memo_.find(key);
    if (it == memo_.end())
      it = memo_.emplace(key, clebsch_gordan_exact({HalfInt(tj1), HalfInt(tm1), HalfInt(tj2), HalfInt(tm2), HalfInt(tj3),
                                                    HalfInt(tm3)}))
               .first;
    return it->second;
  }

 private:
  std::map<std::tuple<int, int, int, int, int, int>, ExactCG> memo_;
};

Outcome kernel() {
  Outcome o;
  ExactTable cg;
  long sums = 0, bad = 0;
  for (int tj1 = 0; tj1 <= kCgMaxDoubledSpin; ++tj1)
    for (int tj2 = 0; tj2 <= kCgMaxDoubledSpin; ++tj2) {
      const int lo = std::abs(tj1 - tj2), hi = tj1 + tj2;
      // sum over (m1, m2) at fixed (j3, m3), (j3', m3)
      for (int tj3 = lo; tj3 <= hi; tj3 += 2)
        for (int tj3p = lo; tj3p <= hi; tj3p += 2)
          for (int tm3 = -std::min(tj3, tj3p); tm3 <= std::min(tj3, tj3p); tm3 += 2) {
            RadicalSum sum;
            for (int tm1 = -tj1; tm1 <= tj1; tm1 += 2) {
              const int tm2 = tm3 - tm1;
              if (std::abs(tm2) > tj2) continue;
              sum.add_product(cg.at(tj1, tm1, tj2, tm2, tj3, tm3), cg.at(tj1, tm1, tj2, tm2, tj3p, tm3));
            }
            int sign = 0;
            Rational sq;
            const bool ok = sum.evaluate(sign, sq) && (tj3 == tj3p ? (sign == 1 && sq == 1) : sign == 0);
            ++sums;
            bad += !ok;
          }
      // sum over (j3, m3) at fixed (m1, m2), (m1', m2')
      for (int tm1 = -tj1; tm1 <= tj1; tm1 += 2)
        for (int tm2 = -tj2; tm2 <= tj2; tm2 += 2)
          for (int tm1p = -tj1; tm1p <= tj1; tm1p += 2) {
            const int tm3 = tm1 + tm2, tm2p = tm3 - tm1p;
            if (std::abs(tm2p) > tj2) continue;
            RadicalSum sum;
            for (int tj3 = std::max(lo, std::abs(tm3)); tj3 <= hi; tj3 += 2)
              sum.add_product(cg.at(tj1, tm1, tj2, tm2, tj3, tm3), cg.at(tj1, tm1p, tj2, tm2p, tj3, tm3));
            int sign = 0;
            Rational sq;
            const bool ok = sum.evaluate(sign, sq) && (tm1 == tm1p ? (sign == 1 && sq == 1) : sign == 0);
            ++sums;
            bad += !ok;
          }
    }
  note(o, bad == 0, fmt("exact orthogonality %ld/%ld sums (2j<=%d)", sums - bad, sums, kCgMaxDoubledSpin));

  std::mt19937_64 rng(1001);
  double unitary = 0.0, expansion = 0.0;
  for (int t = 0; t < 10; ++t) {
    const EulerAngles g = oracle::random_angles(rng);
    std::vector<Matrix> p;
    for (int m = 0; m <= 2 * kExpansionMaxDegree; ++m) p.push_back(wigner_d_matrix(m, g).entries);
    for (int m = 0; m <= kExpansionMaxDegree; ++m)
      unitary = std::max(unitary, (p[m] * p[m].adjoint() - Matrix::Identity(m + 1, m + 1)).norm());
    for (int a = 0; a <= kExpansionMaxDegree; ++a)
      for (int b = 0; b <= kExpansionMaxDegree; ++b)
        for (int ri = 0; ri <= a; ++ri)
          for (int rj = 0; rj <= a; ++rj)
            for (int rr = 0; rr <= b; ++rr)
              for (int rs = 0; rs <= b; ++rs) {
                const int ti = 2 * ri - a, tj = 2 * rj - a, tr = 2 * rr - b, ts = 2 * rs - b;
                cplx rhs = 0.0;
                for (int k = 0; k <= std::min(a, b); ++k) {
                  const int c = std::abs(a - b) + 2 * k;
                  if (std::abs(ti + tr) > c || std::abs(tj + ts) > c) continue;
                  rhs += clebsch_gordan2(a, ti, b, tr, c, ti + tr) * clebsch_gordan2(a, tj, b, ts, c, tj + ts) *
                         p[c]((ti + tr + c) / 2, (tj + ts + c) / 2);
                }
                expansion = std::max(expansion, std::abs(p[a](ri, rj) * p[b](rr, rs) - rhs));
              }
  }
  note(o, unitary <= kUnitarityTol, fmt("unitarity err %.2e", unitary));
  note(o, expansion <= kExpansionTol, fmt("indexed expansion err %.2e", expansion));
  return o;
}

Outcome transform() {
  Outcome o;
  std::mt19937_64 rng(1002);
  double plancherel = 0.0, round_trip = 0.0;
  for (int M : {0, 1, 2, 3, 4, 6, 8, 12, 16, 24, kTransformMaxDegree}) {
    const GridPtr grid = build_grid(M);
    for (int t = 0; t < 2; ++t) {
      const SU2Spectrum s = random_spectrum(M, rng);
      const GridFunction f = synthesize(s, grid);
      const double n2 = s.plancherel_norm2();
      plancherel = std::max(plancherel, std::abs(f.l2_norm2() - n2) / n2);
      round_trip = std::max(round_trip, plancherel_distance(analyze(f, M), s) / std::sqrt(n2));
    }
  }
  note(o, plancherel <= kTransformTol, fmt("Plancherel rel err %.2e", plancherel));
  note(o, round_trip <= kTransformTol, fmt("round trip rel err %.2e (M<=%d)", round_trip, kTransformMaxDegree));
  return o;
}

Outcome evolution() {
  Outcome o;
  std::mt19937_64 rng(1003);
  const int M = 16;
  const WaveState s(random_spectrum(M, rng, 1.0), random_spectrum(M, rng, 0.0));

  std::uniform_real_distribution<double> u(-kPi, kPi);
  long mismatches = 0;
  for (int k = 0; k < 20; ++k) {
    const double t = std::ldexp(std::round(std::ldexp(u(rng), 40)), -40);
    const SU2Spectrum a = evolve_free(s, t), b = evolve_free(s, t + 2 * kPi);
    const SU2Spectrum da = evolve_free_dt(s, t), db = evolve_free_dt(s, t + 2 * kPi);
    for (int m = 0; m <= M; ++m) mismatches += (a[m] != b[m]) + (da[m] != db[m]);
  }
  note(o, mismatches == 0, fmt("2pi periodicity mismatched blocks %ld", mismatches));

  const double e0 = energy(s);
  double drift = 0.0;
  for (int k = 0; k < 200; ++k) {
    const double t = -kPi + 2 * kPi * k / 199.0;
    drift = std::max(drift, std::abs(energy(evolve_free_state(s, t)) - e0) / e0);
  }
  note(o, drift <= kEnergyDriftTol, fmt("energy drift %.2e", drift));

  // psi = sin(qt) A + cos(t) B at one degree solves the forced equation with F below
  const int m = 3;
  const double q = 2.5, k = m + 1.0, T = 2.0;
  const Matrix A = random_spectrum(m, rng)[m], B = random_spectrum(m, rng)[m];
  auto psi = [&](double x) { return Matrix(std::sin(q * x) * A + std::cos(x) * B); };
  auto F = [&](double x) {
    SU2Spectrum out(m);
    out[m] = (k * k - q * q) * std::sin(q * x) * A + (k * k - 1.0) * std::cos(x) * B;
    return out;
  };
  SU2Spectrum f0(m), f1(m);
  f0[m] = psi(0.0);
  f1[m] = q * A;
  std::vector<double> err;
  for (int n : {8, 16, 32}) err.push_back((evolve_forced(WaveState(f0, f1), sample_forcing(F, T, n), T)[m] - psi(T)).norm());
  const double p1 = std::log2(err[0] / err[1]), p2 = std::log2(err[1] / err[2]);
  const bool ok = std::abs(p1 - kDuhamelOrder) <= kOrderWindow && std::abs(p2 - kDuhamelOrder) <= kOrderWindow;
  note(o, ok, fmt("Duhamel orders %.2f, %.2f (declared %d)", p1, p2, kDuhamelOrder));
  return o;
}

Outcome null_forms() {
  Outcome o;
  std::mt19937_64 rng(1004);
  double worst = 0.0;
  for (int trial = 0; trial < kRoutePairs; ++trial) {
    const SU2Spectrum f = random_spectrum(kRouteDegree, rng, 1.0), g = random_spectrum(kRouteDegree, rng, 1.0);
    const SpacetimeSpectrum phi = sine_solution(f), psi = sine_solution(g);
    const SpacetimeSpectrum mult = q0_multiplier_route(phi, psi);
    worst = std::max({worst, rel(q0_pointwise_spectrum(phi, psi), mult), rel(q0_cg_sine(f, g), mult),
                      rel(q0_cg_free(phi, psi), mult)});
  }
  note(o, worst <= kRouteTol, fmt("routes rel diff %.2e over %d pairs at M=%d", worst, kRoutePairs, kRouteDegree));

  // oracles by direct time quadrature: phi+ = e^{it} gives Q0 = (i e^{it})^2, and
  // phi = sin t gives Q0 = cos^2 t; both integrands are trigonometric polynomials
  const int n = 64;
  cplx coeff = 0.0;
  double norm2 = 0.0;
  for (int j = 0; j < n; ++j) {
    const double t = 2 * kPi * j / n;
    const cplx dt = cplx(0, 1) * std::polar(1.0, t);
    coeff += dt * dt * std::polar(1.0, -2 * t) / static_cast<double>(n);
    norm2 += std::pow(std::cos(t), 4) / n;
  }
  const FrequencySplit one = freq_split(SU2Spectrum::constant(0, 1.0));
  const cplx got = q0_multiplier_route(one.plus, one.plus).at(2)[0](0, 0);
  const SU2Spectrum unit = SU2Spectrum::constant(0, 1.0);
  const double n_cg = q0_cg_sine(unit, unit).plancherel_norm2();
  const double n_mult = q0_multiplier_route(sine_solution(unit), sine_solution(unit)).plancherel_norm2();
  const double e1 = std::abs(got - coeff), e2 = std::max(std::abs(n_cg - norm2), std::abs(n_mult - norm2));
  note(o, e1 <= kAnalyticTol, fmt("F(Q0++)(pi0)_2 = %.15g%+.1ei (oracle %.15g)", got.real(), got.imag(), coeff.real()));
  note(o, e2 <= kAnalyticTol, fmt("||Q0(sin t, sin t)||^2 = %.15g (oracle %.15g)", n_cg, norm2));
  return o;
}

Outcome young() {
  Outcome o;
  std::mt19937_64 rng(1005);
  int checked = 0, violations = 0, attempts = 0, top = 0;
  while (checked < kYoungBlocks && attempts < 50 * kYoungBlocks) {
    ++attempts;
    const int da = static_cast<int>(rng() % (kYoungMaxDegree + 1)), db = static_cast<int>(rng() % (kYoungMaxDegree + 1));
    const SU2Spectrum A = random_spectrum(kYoungMaxDegree, rng), B = random_spectrum(kYoungMaxDegree, rng);
    // l - 1 is the f degree; n pairs it with g degree db for the chosen signs
    const int l = da + 1;
    const bool pp = rng() % 2;
    const int n = pp ? (da + 1) + (db + 1) : (da + 1) - (db + 1);
    auto [lhs, rhs] = young_bound_check(l, n, A, B, pp ? kPlusPlus : kPlusMinus);
    if (rhs == 0.0) continue;
    ++checked;
    top = std::max({top, da, db});
    violations += lhs > rhs * (1 + kYoungSlack);
  }
  note(o, checked == kYoungBlocks && violations == 0,
       fmt("%d blocks (degrees<=%d, max seen %d), %d violations", checked, kYoungMaxDegree, top, violations));

  SU2Spectrum f(0), g(0);
  f[0](0, 0) = 3.0;
  g[0](0, 0) = cplx(0.0, 2.0);
  auto [l0, r0] = young_bound_check(1, 2, f, g, kPlusPlus);
  note(o, std::abs(l0 - r0) <= kEqualityTol * r0 && std::abs(r0 - 36.0) <= kEqualityTol * 36.0,
       fmt("rank-one equality %.15g = %.15g", l0, r0));
  return o;
}

Outcome lambdas() {
  Outcome o;
  double m_err = 0.0, z_err = 0.0;
  bool sign_ok = true;
  for (int n = 2; n <= 50; ++n) {
    const LambdaProfile pr = lambda_profile(n, 0.0, 0.0);
    if (!pr.m_star) {
      sign_ok = false;
      continue;
    }
    m_err = std::max(m_err, std::abs(*pr.m_star - (std::sqrt(n * n - 1.0) - 1.0)));
    z_err = std::max(z_err, std::abs(pr.min_value));
    sign_ok = sign_ok && pr.basic_sign_ok;
  }
  note(o, m_err <= kLambdaTol && sign_ok, fmt("m* err %.2e", m_err));
  note(o, z_err <= kLambdaTol, fmt("min value %.2e", z_err));

  // boxes sampled on a grid that includes every edge
  int pp = 0, pm = 0, pp_bad = 0, pm_bad = 0;
  for (int i = 0; i <= 10; ++i)
    for (int j = 0; j <= 8; ++j)
      for (int n : {-25, -9, -2, -1, 1, 2, 3, 5, 10, 25, 50}) {
        const double b0 = -0.5 + 0.25 * i, bw = -1.0 + 0.25 * j;
        const LambdaProfile pr = lambda_profile(n, b0, bw, 8);
        if (pr.pp_applicable && pr.pp_expected) {
          ++pp;
          pp_bad += !pr.pp_decreasing;
        }
        if (pr.pm_applicable && pr.pm_expected) {
          ++pm;
          pm_bad += !pr.pm_increasing;
        }
      }
  note(o, pp_bad == 0 && pp > 0, fmt("(+,+) decreasing %d/%d", pp - pp_bad, pp));
  note(o, pm_bad == 0 && pm > 0, fmt("(+,-) increasing %d/%d", pm - pm_bad, pm));
  return o;
}

Outcome sweeps() {
  Outcome o;
  SweepConfig cfg;
  cfg.trials = kSweepTrials;
  cfg.degrees = {16, 32};
  const double e = 0.25;
  const std::vector<EstimateParams> sets{{1.0, 0.25, 0.0, 0.0}, {1.0 + e, e, -e, 0.0}, {1.5, 1.0, 0.5, 0.5}, {0.75, 0.75, 0.25, -0.25}};
  for (const RatioReport& r : ratio_sweep(cfg, sets)) {
    const auto change = r.sup_change();
    const bool ok = r.admissibility.admissible && change && *change < kSweepChange;
    note(o, ok, fmt("(%g,%g,%g,%g) sup %.5f->%.5f", r.params.alpha1, r.params.alpha2, r.params.beta0, r.params.betaw,
                    r.by_degree.front().sup.value_or(NAN), r.by_degree.back().sup.value_or(NAN)));
  }
  const RatioReport adv = adversarial_sweep({1.0, 0.25, -0.6, 0.0}, {8, 16, 32});
  bool increasing = !adv.admissibility.admissible;
  std::string sups;
  for (std::size_t i = 0; i < adv.by_degree.size(); ++i) {
    const double s = adv.by_degree[i].sup.value_or(NAN);
    sups += fmt(i ? "<%.4f" : "%.4f", s);
    if (i > 0) increasing = increasing && s > adv.by_degree[i - 1].sup.value_or(INFINITY);
  }
  note(o, increasing, "b0=-0.6 adversarial " + sups);
  return o;
}

Outcome series() {
  Outcome o;
  std::array<bool, 5> violated{};
  int agree = 0, total = 0;
  for (const SeriesProbe& p : series_probe_set()) {
    const SeriesClass c = series_classify(p.triple.beta0, p.triple.alpha, p.triple.beta);
    ++total;
    const bool ok = c.predicted_convergent ? (!p.divergent && c.slope < kConvergentSlope) : (p.divergent && c.slope > kDivergentSlope);
    agree += ok;
    for (int i = 0; i < 5; ++i) violated[i] = violated[i] || !c.conditions[i];
  }
  const bool all_conditions = std::all_of(violated.begin(), violated.end(), [](bool v) { return v; });
  note(o, agree == total && total == 12 && all_conditions, fmt("probe agreement %d/%d, all five conditions probed", agree, total));
  const double slope = series_classify(0.0, 0.0, 0.0).slope;
  note(o, std::abs(slope - 1.0) <= kHarmonicSlopeTol, fmt("(0,0,0) slope %.4f", slope));
  return o;
}

Outcome forced() {
  Outcome o;
  std::vector<double> ratios;
  double residual = 0.0;
  for (int M : {8, 16}) {
    const ForcedCase c = manufactured_forced_case(M);
    const ForcedEstimate fe = forced_estimate_check(c.phi_data, c.F, c.psi_data, c.G, kForcedEps);
    ratios.push_back(fe.ratio());
    residual = std::max(residual, fe.duhamel_residual);
  }
  const bool finite = std::all_of(ratios.begin(), ratios.end(), [](double r) { return std::isfinite(r) && r > 0.0; });
  const double change = std::abs(ratios[1] / ratios[0] - 1.0);
  note(o, finite && change <= kForcedChange, fmt("ratio M=8 %.5f, M=16 %.5f, change %.1f%%", ratios[0], ratios[1], 100 * change));
  note(o, residual <= kDuhamelResidual, fmt("Duhamel residual %.2e", residual));
  return o;
}

Outcome bridge() {
  Outcome o;
  double omega = 0.0;
  for (int i = 0; i < 81; ++i)
    for (int j = 0; j < 81; ++j) {
      const double tt = -20.0 + 40.0 * i / 80.0, rt = 20.0 * j / 80.0;
      const double t = std::atan(tt + rt) + std::atan(tt - rt), z = std::atan(tt + rt) - std::atan(tt - rt);
      const double mink = 2.0 / (std::hypot(1.0, tt - rt) * std::hypot(1.0, tt + rt));
      const ConformalPoint p = conformal_factor(tt, rt);
      omega = std::max({omega, std::abs(mink - (std::cos(t) + std::cos(z))), std::abs(omega_minkowski(tt, rt) - mink),
                        std::abs(omega_cylinder(t, z) - mink), std::abs(p.Omega - mink)});
    }
  note(o, omega <= kOmegaTol, fmt("Omega forms err %.2e", omega));

  double q = 0.0;
  for (int i = 0; i <= 60; ++i)
    for (int j = 0; j <= 60; ++j) {
      const double t = -kPi + 2 * kPi * i / 60.0, z = kPi * j / 60.0;
      const double direct = std::sin(t) * std::sin(t) - std::sin(z) * std::sin(z);
      q = std::max({q, std::abs(q0_omega_omega(t, z) - direct), std::abs(q0_omega_omega_closed(t, z) - direct)});
    }
  note(o, q <= kOmegaTol, fmt("Q0(Omega,Omega) err %.2e", q));

  const RadialProfile f0 = make_profile("gaussian");
  const RadialProfile f1 = make_profile("gaussian", {{"width", 0.8}, {"amplitude", 0.5}});
  const RadialProfile g0 = make_profile("gaussian", {{"width", 1.3}, {"amplitude", -0.7}});
  const RadialProfile g1 = make_profile("gaussian", {{"width", 0.6}});
  const CorollaryResult a = corollary_check(f0, f1, g0, g1, 0.25, 16), b = corollary_check(f0, f1, g0, g1, 0.25, 32);
  const double change = std::abs(b.ratio() / a.ratio() - 1.0);
  note(o, std::isfinite(change) && change <= kBridgeChange,
       fmt("Gaussian bump ratio M=16 %.5f, M=32 %.5f, change %.2f%%", a.ratio(), b.ratio(), 100 * change));
  return o;
}

struct Criterion {
  const char* label;
  std::function<Outcome()> run;
  double seconds_limit;  // 0: none
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"CG/Wigner kernel", kernel, kKernelSeconds},
      {"transform", transform, kTransformSeconds},
      {"evolution", evolution, 0.0},
      {"null-form routes", null_forms, 0.0},
      {"discrete Young bound", young, 0.0},
      {"lambda profiles", lambdas, 0.0},
      {"multiplier estimate sweeps", sweeps, kSweepSeconds},
      {"series classifier", series, 0.0},
      {"forced estimate", forced, 0.0},
      {"Minkowski bridge", bridge, kBridgeSeconds},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double s = seconds_since(t0);
    if (criteria[i].seconds_limit > 0.0) note(o, s < criteria[i].seconds_limit, fmt("runtime limit %.0f s", criteria[i].seconds_limit));
    failures += !o.pass;
    std::printf("AC%-2zu %s  %-26s %7.1f s  %s\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].label, s, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures;
}
