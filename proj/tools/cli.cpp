#include "cli.hpp"

#include <openssl/evp.h>
#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "s3nf/clebsch_gordan.hpp"
#include "s3nf/cylinder_wave.hpp"
#include "s3nf/minkowski_bridge.hpp"
#include "s3nf/nullform.hpp"
#include "s3nf/peter_weyl.hpp"
#include "s3nf/series.hpp"
#include "s3nf/wigner.hpp"

#ifndef S3NF_VERSION
#define S3NF_VERSION "unknown"
#endif

namespace s3nf::cli {

namespace {

constexpr double kPi = std::numbers::pi;

Json opt_json(const std::optional<double>& x) { return x ? Json(*x) : Json(nullptr); }

double tolerance_or(const RunConfig& cfg, double fallback) { return cfg.tolerance.value_or(fallback); }

struct Check {
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;
  bool pass() const { return std::isfinite(value) && value <= tolerance; }
};

void add_checks(Outcome& o, const std::vector<Check>& checks) {
  o.table.header = {"check", "value", "tolerance", "pass"};
  Json arr = Json::array();
  for (const Check& c : checks) {
    arr.push_back({{"check", c.name}, {"value", std::isfinite(c.value) ? Json(c.value) : Json(nullptr)},
                   {"tolerance", c.tolerance}, {"pass", c.pass()}});
    o.table.add_row({c.name, csv_number(c.value), csv_number(c.tolerance), c.pass() ? "1" : "0"});
    o.verified = o.verified && c.pass();
  }
  o.result["checks"] = std::move(arr);
}

std::mt19937_64 stream(const RunConfig& cfg, std::uint64_t a, std::uint64_t b = 0) {
  return std::mt19937_64(stream_seed(cfg.seed, a, b));
}

// transform: round trip and Plancherel on random band-limited data
std::vector<Check> transform_checks(const RunConfig& cfg, int trials, double tol) {
  const int M = cfg.max_degree;
  const GridPtr grid = build_grid(M);
  double round_trip = 0.0, plancherel = 0.0, reference = 0.0;
  for (int t = 0; t < trials; ++t) {
    auto rng = stream(cfg, 1, t);
    const SU2Spectrum s = random_spectrum(M, rng);
    const double n2 = s.plancherel_norm2();
    const GridFunction g = synthesize(s, grid);
    round_trip = std::max(round_trip, plancherel_distance(analyze(g, M), s) / std::sqrt(n2));
    plancherel = std::max(plancherel, std::abs(g.l2_norm2() - n2) / n2);
    // the serial oracle evaluates full D-matrices node by node, so it runs at low degree
    const int Mr = std::min(M, 6);
    const SU2Spectrum low = s.resized(Mr);
    const GridPtr low_grid = build_grid(Mr);
    const GridFunction fast = synthesize(low, low_grid), slow = synthesize_reference(low, low_grid);
    reference = std::max(reference, (fast.values - slow.values).cwiseAbs().maxCoeff() / std::sqrt(low.plancherel_norm2()));
  }
  return {{"round_trip", round_trip, tol}, {"plancherel", plancherel, tol}, {"parallel_vs_serial", reference, tol}};
}

Outcome cmd_transform(const RunConfig& cfg) {
  Outcome o;
  add_checks(o, transform_checks(cfg, cfg.trials, tolerance_or(cfg, 1e-11)));
  return o;
}

Outcome cmd_evolve(const RunConfig& cfg) {
  Outcome o;
  const int M = cfg.max_degree;
  auto rng = stream(cfg, 2);
  const WaveState data(random_spectrum(M, rng, 1.0), random_spectrum(M, rng, 1.0));
  const double e0 = energy(data);
  const double tol = tolerance_or(cfg, 1e-12);
  o.table.header = {"t", "energy", "relative_drift"};
  Json series = Json::array();
  double drift = 0.0;
  for (int j = 0; j <= cfg.time_samples; ++j) {
    const double t = -kPi + 2.0 * kPi * j / cfg.time_samples;
    const double e = energy(evolve_free_state(data, t));
    const double d = std::abs(e - e0) / e0;
    drift = std::max(drift, d);
    series.push_back({{"t", t}, {"energy", e}, {"relative_drift", d}});
    o.table.add_row({csv_number(t), csv_number(e), csv_number(d)});
  }
  const double period = plancherel_distance(evolve_free(data, 2.0 * kPi), data.f0) / std::sqrt(data.f0.plancherel_norm2());
  o.result["energy"] = std::move(series);
  o.result["max_relative_drift"] = drift;
  o.result["periodicity_error"] = period;
  o.result["tolerance"] = tol;
  o.verified = drift <= tol && period <= tol;
  return o;
}

struct RouteErrors {
  double multiplier = 0.0, pointwise = 0.0;
};

RouteErrors route_errors(const SU2Spectrum& f0, const SU2Spectrum& f1, const SU2Spectrum& g0, const SU2Spectrum& g1) {
  const SpacetimeSpectrum phi = free_spacetime(WaveState(f0, f1)), psi = free_spacetime(WaveState(g0, g1));
  const SpacetimeSpectrum cg = q0_cg_free(phi, psi);
  const double scale = std::sqrt(cg.plancherel_norm2());
  const SpacetimeSpectrum mult = q0_multiplier_route(phi, psi);
  const SpacetimeSpectrum pw = q0_pointwise_spectrum(phi, psi);
  return {spacetime_distance(mult, cg) / scale, spacetime_distance(pw, cg) / scale};
}

Outcome cmd_nullform(const RunConfig& cfg) {
  Outcome o;
  const int M = cfg.max_degree;
  const double tol = tolerance_or(cfg, 1e-9);
  o.table.header = {"trial", "multiplier_vs_cg", "pointwise_vs_cg", "pass"};
  Json rows = Json::array();
  for (int t = 0; t < cfg.trials; ++t) {
    auto rng = stream(cfg, 3, t);
    const SU2Spectrum f0 = random_spectrum(M, rng, 1.0), f1 = random_spectrum(M, rng, 1.0);
    const SU2Spectrum g0 = random_spectrum(M, rng, 1.0), g1 = random_spectrum(M, rng, 1.0);
    const RouteErrors e = route_errors(f0, f1, g0, g1);
    const bool pass = e.multiplier <= tol && e.pointwise <= tol;
    o.verified = o.verified && pass;
    rows.push_back({{"trial", t}, {"multiplier_vs_cg", e.multiplier}, {"pointwise_vs_cg", e.pointwise}, {"pass", pass}});
    o.table.add_row({std::to_string(t), csv_number(e.multiplier), csv_number(e.pointwise), pass ? "1" : "0"});
  }
  o.result["routes"] = std::move(rows);
  o.result["tolerance"] = tol;
  return o;
}

Outcome cmd_verify_estimate(const RunConfig& cfg) {
  Outcome o;
  SweepConfig sweep;
  sweep.seed = cfg.seed;
  sweep.trials = cfg.trials;
  sweep.degrees = {cfg.max_degree, 2 * cfg.max_degree};
  const RatioReport rep = ratio_sweep(sweep, cfg.params);
  const RatioReport adv = adversarial_sweep(cfg.params, sweep.degrees);
  const double tol = tolerance_or(cfg, 0.2);
  o.result["sweep"] = to_json(rep);
  o.result["adversarial"] = to_json(adv);
  o.result["stability_tolerance"] = tol;
  if (rep.admissibility.admissible) {
    const auto change = rep.sup_change();
    o.verified = change && *change < tol;
  }
  if (cfg.epsilon) {
    Json forced = Json::array();
    std::vector<double> ratios;
    for (int M : sweep.degrees) {
      const ForcedCase c = manufactured_forced_case(M, cfg.seed);
      const ForcedEstimate e = forced_estimate_check(c.phi_data, c.F, c.psi_data, c.G, *cfg.epsilon);
      Json j = to_json(e);
      j["M"] = M;
      forced.push_back(std::move(j));
      ratios.push_back(e.ratio());
      o.verified = o.verified && std::isfinite(e.ratio()) && e.duhamel_residual < 1e-6;
    }
    o.result["forced"] = std::move(forced);
    const double change = std::abs(ratios[1] / ratios[0] - 1.0);
    o.result["forced_ratio_change"] = change;
    o.verified = o.verified && change < tol;
  }
  o.table = ratio_table({rep});
  return o;
}

bool probe_consistent(const SeriesClass& c) {
  return c.predicted_convergent ? c.slope < 0.02 : c.slope > 0.05;
}

Outcome cmd_series_scan(const RunConfig& cfg) {
  Outcome o;
  std::vector<SeriesClass> classes;
  Json arr = Json::array();
  if (cfg.alpha || cfg.beta) {
    classes.push_back(series_classify(cfg.params.beta0, cfg.alpha.value_or(0.0), cfg.beta.value_or(0.0)));
    Json j = to_json(classes.back());
    j["consistent"] = probe_consistent(classes.back());
    arr.push_back(std::move(j));
  } else {
    for (const SeriesProbe& p : series_probe_set()) {
      classes.push_back(series_classify(p.triple.beta0, p.triple.alpha, p.triple.beta));
      Json j = to_json(classes.back());
      j["note"] = p.note;
      j["known_divergent"] = p.divergent;
      const bool ok = probe_consistent(classes.back()) && classes.back().predicted_convergent != p.divergent;
      j["consistent"] = ok;
      o.verified = o.verified && ok;
      arr.push_back(std::move(j));
    }
  }
  o.result["series"] = std::move(arr);
  o.table = series_table(classes);
  return o;
}

std::vector<Check> bridge_identity_checks(double tol) {
  double omega = 0.0, q0ww = 0.0, chart = 0.0;
  for (int i = 0; i < 100; ++i)
    for (int j = 0; j < 100; ++j) {
      const double tt = -10.0 + 20.0 * i / 99.0, rt = 10.0 * j / 99.0;
      const ConformalPoint p = conformal_factor(tt, rt);
      omega = std::max(omega, std::abs(p.Omega - omega_cylinder(p.t, p.z)));
      q0ww = std::max(q0ww, std::abs(q0_omega_omega(p.t, p.z) - q0_omega_omega_closed(p.t, p.z)));
      const auto [t2, r2] = to_minkowski(p.t, p.z);
      chart = std::max(chart, (std::abs(t2 - tt) + std::abs(r2 - rt)) / (1.0 + std::abs(tt) + rt));
    }
  return {{"omega_closed_forms", omega, tol}, {"q0_omega_omega", q0ww, tol}, {"chart_round_trip", chart, tol}};
}

Outcome cmd_bridge(const RunConfig& cfg) {
  Outcome o;
  add_checks(o, bridge_identity_checks(1e-12));
  const double eps = cfg.epsilon.value_or(0.25);
  CorollaryOptions opt;
  opt.lift.tolerance = tolerance_or(cfg, opt.lift.tolerance);
  const RadialProfile f0 = parse_profile(cfg.f0), f1 = parse_profile(cfg.f1);
  const RadialProfile g0 = parse_profile(cfg.g0), g1 = parse_profile(cfg.g1);
  Json study = Json::array();
  CsvTable table;
  table.header = {"M", "lhs", "rhs", "ratio", "max_residual"};
  for (int M : {cfg.max_degree, 2 * cfg.max_degree}) {
    const CorollaryResult r = corollary_check(f0, f1, g0, g1, eps, M, opt);
    Json j = to_json(r);
    j["M"] = M;
    study.push_back(std::move(j));
    table.add_row({std::to_string(M), csv_number(r.lhs), csv_number(r.rhs), csv_number(r.ratio()), csv_number(r.max_residual)});
  }
  const double a = study[0]["ratio"].get<double>(), b = study[1]["ratio"].get<double>();
  o.result["refinement"] = std::move(study);
  o.result["ratio_change"] = a > 0.0 ? std::abs(b / a - 1.0) : 0.0;
  o.result["epsilon"] = eps;
  o.result["lift_tolerance"] = opt.lift.tolerance;
  o.table = std::move(table);
  return o;
}

// selftest suites, each a list of checks at the configured degree
std::vector<Check> selftest_checks(const RunConfig& cfg) {
  std::vector<Check> out;
  const int M = cfg.max_degree;

  {
    // CG orthogonality in both index pairs, doubled spins up to min(2M, 8)
    const int J = std::min(2 * M, 8);
    double worst = 0.0;
    for (int j1 = 0; j1 <= J; ++j1)
      for (int j2 = 0; j2 <= J; ++j2)
        for (int j3 = std::abs(j1 - j2); j3 <= j1 + j2; j3 += 2)
          for (int m3 = -j3; m3 <= j3; m3 += 2) {
            double s = 0.0;
            for (int m1 = -j1; m1 <= j1; m1 += 2) {
              const int m2 = m3 - m1;
              if (std::abs(m2) > j2) continue;
              const double c = clebsch_gordan2(j1, m1, j2, m2, j3, m3);
              s += c * c;
            }
            worst = std::max(worst, std::abs(s - 1.0));
          }
    out.push_back({"cg_orthogonality", worst, 1e-12});
    double unitary = 0.0;
    std::mt19937_64 rng = stream(cfg, 4);
    std::uniform_real_distribution<double> ang(0.0, 4 * kPi), bet(0.0, kPi);
    for (int m = 0; m <= std::min(M, 6); ++m) {
      const Matrix D = wigner_d_matrix(m, ang(rng), bet(rng), ang(rng)).entries;
      unitary = std::max(unitary, (D.adjoint() * D - Matrix::Identity(m + 1, m + 1)).norm());
    }
    out.push_back({"d_matrix_unitarity", unitary, 1e-11});
  }

  for (Check c : transform_checks(cfg, 2, 1e-11)) {
    c.name = "transform_" + c.name;
    out.push_back(c);
  }

  {
    auto rng = stream(cfg, 5);
    const WaveState data(random_spectrum(M, rng, 1.0), random_spectrum(M, rng, 1.0));
    const double e0 = energy(data);
    double drift = 0.0;
    for (int j = 0; j <= 32; ++j) drift = std::max(drift, std::abs(energy(evolve_free_state(data, -kPi + 2 * kPi * j / 32.0)) - e0) / e0);
    out.push_back({"energy_drift", drift, 1e-12});
    out.push_back({"periodicity", plancherel_distance(evolve_free(data, 2 * kPi), data.f0), 1e-12});
  }

  {
    const int Mn = std::min(M, 6);
    double worst = 0.0;
    for (int t = 0; t < 3; ++t) {
      auto rng = stream(cfg, 6, t);
      const SU2Spectrum f0 = random_spectrum(Mn, rng, 1.0), f1 = random_spectrum(Mn, rng, 1.0);
      const SU2Spectrum g0 = random_spectrum(Mn, rng, 1.0), g1 = random_spectrum(Mn, rng, 1.0);
      const RouteErrors e = route_errors(f0, f1, g0, g1);
      worst = std::max({worst, e.multiplier, e.pointwise});
    }
    out.push_back({"nullform_routes", worst, 1e-9});
    const SU2Spectrum one = SU2Spectrum::constant(0, 1.0);
    const SpacetimeSpectrum q = q0_cg_sine(one, one);
    out.push_back({"sine_constant_norm", std::abs(q.plancherel_norm2() - 3.0 / 8.0), 1e-12});
  }

  {
    double excess = 0.0;
    for (int k = 0; k < 100; ++k) {
      auto rng = stream(cfg, 7, k);
      std::uniform_int_distribution<int> deg(0, std::min(M, 6));
      const int Mf = deg(rng);
      const SU2Spectrum f = random_spectrum(Mf, rng), g = random_spectrum(Mf, rng);
      std::uniform_int_distribution<int> ln(0, Mf);
      const int l = ln(rng);
      const int n = l + 1 + ln(rng);
      const auto [lhs, rhs] = young_bound_check(l, n, f, g, kPlusPlus);
      excess = std::max(excess, (lhs - rhs) / std::max(rhs, 1e-300));
    }
    out.push_back({"young_bound_excess", std::max(excess, 0.0), 1e-12});
  }

  {
    double mstar = 0.0, minv = 0.0;
    bool signs = true;
    for (int n = 2; n <= 50; ++n) {
      const LambdaProfile p = lambda_profile(n, 0.0, 0.0);
      mstar = std::max(mstar, std::abs(*p.m_star - (std::sqrt(n * n - 1.0) - 1.0)));
      minv = std::max(minv, std::abs(p.min_value));
      signs = signs && p.basic_sign_ok;
    }
    out.push_back({"lambda_m_star", mstar, 1e-12});
    out.push_back({"lambda_minimum", minv, 1e-12});
    out.push_back({"lambda_sign_pattern", signs ? 0.0 : 1.0, 0.0});
    int bad = 0;
    for (double b0 = -0.5; b0 <= 2.0 + 1e-12; b0 += 0.5)
      for (double bw = -1.0; bw <= 1.0 + 1e-12; bw += 0.5)
        for (int n : {-5, -1, 1, 2, 7}) {
          const LambdaProfile p = lambda_profile(n, b0, bw, 4);
          if (p.pp_applicable && p.pp_expected && !p.pp_decreasing) ++bad;
          if (p.pm_applicable && p.pm_expected && !p.pm_increasing) ++bad;
        }
    out.push_back({"lambda_monotonicity_failures", static_cast<double>(bad), 0.0});
  }

  {
    int bad = 0;
    for (const SeriesProbe& p : series_probe_set()) {
      const SeriesClass c = series_classify(p.triple.beta0, p.triple.alpha, p.triple.beta);
      if (!probe_consistent(c) || c.predicted_convergent == p.divergent) ++bad;
    }
    out.push_back({"series_probe_disagreements", static_cast<double>(bad), 0.0});
  }

  {
    int bad = 0;
    bad += !admissible({1.0, 0.25, 0.0, 0.0}).admissible;
    bad += !admissible({1.25, 0.25, -0.25, 0.0}).boundary;
    bad += admissible({1.0, 0.25, -0.6, 0.0}).admissible;
    out.push_back({"admissibility_examples", static_cast<double>(bad), 0.0});
    const SU2Spectrum one = SU2Spectrum::constant(0, 1.0);
    out.push_back({"estimate_constant_ratio",
                   std::abs(estimate_ratio(one, one, {1.0, 0.25, 0.0, 0.0}) - std::sqrt(3.0 / 8.0)), 1e-12});
    auto rng = stream(cfg, 8);
    const SU2Spectrum f = random_spectrum(M, rng, 2.0), g = random_spectrum(M, rng, 2.0);
    const EstimateParams p{1.0, 0.25, 0.0, 0.0};
    const double r = estimate_ratio(f, g, p);
    out.push_back({"engine_vs_cg", std::abs(estimate_ratio(SinePairEngine(M).compute(f, g), f, g, p) - r) / r, 1e-10});
  }

  for (Check c : bridge_identity_checks(1e-12)) {
    c.name = "bridge_" + c.name;
    out.push_back(c);
  }
  return out;
}

Outcome cmd_selftest(const RunConfig& cfg) {
  Outcome o;
  std::vector<Check> checks = selftest_checks(cfg);
  if (cfg.tolerance)
    for (Check& c : checks)
      if (c.tolerance > 0.0) c.tolerance = std::max(c.tolerance, *cfg.tolerance);
  add_checks(o, checks);
  return o;
}

std::string timestamp_utc() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream s;
  s << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return s.str();
}

void error_json(std::ostream& err, int code, const std::string& msg) {
  err << Json{{"error", msg}, {"exit_code", code}}.dump() << "\n";
}

}  // namespace

Json config_json(const RunConfig& cfg) {
  return {{"command", cfg.command},
          {"max_degree", cfg.max_degree},
          {"time_samples", cfg.time_samples},
          {"seed", cfg.seed},
          {"trials", cfg.trials},
          {"alpha1", cfg.params.alpha1},
          {"alpha2", cfg.params.alpha2},
          {"beta0", cfg.params.beta0},
          {"betaw", cfg.params.betaw},
          {"alpha", opt_json(cfg.alpha)},
          {"beta", opt_json(cfg.beta)},
          {"epsilon", opt_json(cfg.epsilon)},
          {"format", cfg.format},
          {"tolerance", opt_json(cfg.tolerance)},
          {"f0", cfg.f0},
          {"f1", cfg.f1},
          {"g0", cfg.g0},
          {"g1", cfg.g1}};
}

void apply_config_json(RunConfig& cfg, const Json& j, const std::vector<std::string>& locked) {
  if (!j.is_object()) throw std::invalid_argument("config: expected a JSON object");
  using Setter = std::function<void(const Json&)>;
  auto num = [](const Json& v, const std::string& key) {
    if (!v.is_number()) throw std::invalid_argument("config: " + key + " must be a number");
    return v.get<double>();
  };
  auto integer = [](const Json& v, const std::string& key) {
    if (!v.is_number_integer()) throw std::invalid_argument("config: " + key + " must be an integer");
    return v.get<long long>();
  };
  auto str = [](const Json& v, const std::string& key) {
    if (!v.is_string()) throw std::invalid_argument("config: " + key + " must be a string");
    return v.get<std::string>();
  };
  const std::map<std::string, Setter> setters{
      {"max_degree", [&](const Json& v) { cfg.max_degree = static_cast<int>(integer(v, "max_degree")); }},
      {"time_samples", [&](const Json& v) { cfg.time_samples = static_cast<int>(integer(v, "time_samples")); }},
      {"seed", [&](const Json& v) {
         const long long s = integer(v, "seed");
         if (s < 0) throw std::invalid_argument("config: seed must be non-negative");
         cfg.seed = static_cast<std::uint64_t>(s);
       }},
      {"trials", [&](const Json& v) { cfg.trials = static_cast<int>(integer(v, "trials")); }},
      {"alpha1", [&](const Json& v) { cfg.params.alpha1 = num(v, "alpha1"); }},
      {"alpha2", [&](const Json& v) { cfg.params.alpha2 = num(v, "alpha2"); }},
      {"beta0", [&](const Json& v) { cfg.params.beta0 = num(v, "beta0"); }},
      {"betaw", [&](const Json& v) { cfg.params.betaw = num(v, "betaw"); }},
      {"alpha", [&](const Json& v) { cfg.alpha = num(v, "alpha"); }},
      {"beta", [&](const Json& v) { cfg.beta = num(v, "beta"); }},
      {"epsilon", [&](const Json& v) { cfg.epsilon = num(v, "epsilon"); }},
      {"tolerance", [&](const Json& v) { cfg.tolerance = num(v, "tolerance"); }},
      {"output", [&](const Json& v) { cfg.output = str(v, "output"); }},
      {"format", [&](const Json& v) { cfg.format = str(v, "format"); }},
      {"no_meta", [&](const Json& v) {
         if (!v.is_boolean()) throw std::invalid_argument("config: no_meta must be a boolean");
         cfg.no_meta = v.get<bool>();
       }},
      {"f0", [&](const Json& v) { cfg.f0 = str(v, "f0"); }},
      {"f1", [&](const Json& v) { cfg.f1 = str(v, "f1"); }},
      {"g0", [&](const Json& v) { cfg.g0 = str(v, "g0"); }},
      {"g1", [&](const Json& v) { cfg.g1 = str(v, "g1"); }},
  };
  for (const auto& [key, value] : j.items()) {
    const auto it = setters.find(key);
    if (it == setters.end()) throw std::invalid_argument("config: unknown key " + key);
    if (std::find(locked.begin(), locked.end(), key) != locked.end()) continue;
    it->second(value);
  }
}

void validate(const RunConfig& cfg) {
  if (cfg.max_degree < 1) throw std::invalid_argument("max_degree must be positive");
  if (cfg.time_samples < 1) throw std::invalid_argument("time_samples must be positive");
  if (cfg.trials < 0) throw std::invalid_argument("trials must be non-negative");
  if (cfg.command == "verify-estimate" && cfg.trials == 0) throw std::invalid_argument("empty ensemble");
  if ((cfg.command == "transform" || cfg.command == "nullform") && cfg.trials == 0)
    throw std::invalid_argument("trials must be positive");
  if (cfg.tolerance && !(*cfg.tolerance > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if (cfg.epsilon && !(*cfg.epsilon > 0.0 && *cfg.epsilon <= 0.5)) throw std::invalid_argument("epsilon must lie in (0, 1/2]");
  if (cfg.format != "json" && cfg.format != "csv") throw std::invalid_argument("format must be json or csv");
  for (double x : {cfg.params.alpha1, cfg.params.alpha2, cfg.params.beta0, cfg.params.betaw})
    if (!std::isfinite(x)) throw std::invalid_argument("estimate parameters must be finite");
  if (cfg.command == "bridge")
    for (const std::string* s : {&cfg.f0, &cfg.f1, &cfg.g0, &cfg.g1}) parse_profile(*s);
}

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 failed");
  std::ostringstream s;
  for (unsigned int i = 0; i < len; ++i) s << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  return s.str();
}

RadialProfile parse_profile(const std::string& spec) {
  if (spec.rfind("csv:", 0) == 0) {
    std::string rest = spec.substr(4);
    std::string interp = "cubic";
    for (const char* k : {":linear", ":cubic", ":steffen"}) {
      const std::string suffix(k);
      if (rest.size() > suffix.size() && rest.compare(rest.size() - suffix.size(), suffix.size(), suffix) == 0) {
        interp = suffix.substr(1);
        rest.resize(rest.size() - suffix.size());
        break;
      }
    }
    return profile_from_csv(rest, interp);
  }
  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  std::map<std::string, double> params;
  if (colon != std::string::npos) {
    std::stringstream ss(spec.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) throw std::invalid_argument("profile " + spec + ": expected key=value");
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(item.substr(eq + 1), &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != item.size() - eq - 1) throw std::invalid_argument("profile " + spec + ": bad number");
      params[item.substr(0, eq)] = v;
    }
  }
  return make_profile(name, params);
}

Outcome execute(const RunConfig& cfg) {
  if (cfg.command == "transform") return cmd_transform(cfg);
  if (cfg.command == "evolve") return cmd_evolve(cfg);
  if (cfg.command == "nullform") return cmd_nullform(cfg);
  if (cfg.command == "verify-estimate") return cmd_verify_estimate(cfg);
  if (cfg.command == "series-scan") return cmd_series_scan(cfg);
  if (cfg.command == "bridge") return cmd_bridge(cfg);
  if (cfg.command == "selftest") return cmd_selftest(cfg);
  throw std::invalid_argument("unknown command " + cfg.command);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Null-form estimates on R x S^3: spectral transforms, evolution and estimate sweeps"};
  app.name(args.empty() ? "s3nf" : args.front());
  app.require_subcommand(1, 1);

  std::map<std::string, CLI::Option*> opts;
  double alpha = 0.0, beta = 0.0, epsilon = 0.0, tolerance = 0.0;
  std::string config_path;
  opts["max_degree"] = app.add_option("--max-degree", cfg.max_degree, "band limit M");
  opts["time_samples"] = app.add_option("--time-samples", cfg.time_samples, "time samples on [-pi, pi]");
  opts["seed"] = app.add_option("--seed", cfg.seed, "ensemble seed");
  opts["trials"] = app.add_option("--trials", cfg.trials, "number of random trials");
  opts["alpha1"] = app.add_option("--alpha1", cfg.params.alpha1, "Sobolev order on f");
  opts["alpha2"] = app.add_option("--alpha2", cfg.params.alpha2, "Sobolev order on g");
  opts["beta0"] = app.add_option("--beta0", cfg.params.beta0, "spatial weight exponent");
  opts["betaw"] = app.add_option("--betaw", cfg.params.betaw, "wave weight exponent");
  opts["alpha"] = app.add_option("--alpha", alpha, "series exponent alpha");
  opts["beta"] = app.add_option("--beta", beta, "series exponent beta");
  opts["epsilon"] = app.add_option("--epsilon", epsilon, "regularity gain epsilon");
  opts["output"] = app.add_option("--output", cfg.output, "report directory (append-only, named by config hash)");
  opts["format"] = app.add_option("--format", cfg.format, "json or csv");
  opts["tolerance"] = app.add_option("--tolerance", tolerance, "tolerance override");
  opts["no_meta"] = app.add_flag("--no-meta", cfg.no_meta, "omit timestamp and version");
  opts["f0"] = app.add_option("--f0", cfg.f0, "bridge profile for f0");
  opts["f1"] = app.add_option("--f1", cfg.f1, "bridge profile for f1");
  opts["g0"] = app.add_option("--g0", cfg.g0, "bridge profile for g0");
  opts["g1"] = app.add_option("--g1", cfg.g1, "bridge profile for g1");
  app.add_option("--config", config_path, "JSON config; command-line flags take precedence");

  const std::vector<std::pair<std::string, std::string>> commands{
      {"transform", "round trip and Plancherel diagnostics"},
      {"evolve", "energy and periodicity series"},
      {"nullform", "three-route agreement table"},
      {"verify-estimate", "ratio sweep and forced estimate check"},
      {"series-scan", "partial-sum classifier"},
      {"bridge", "weighted Minkowski estimate refinement study"},
      {"selftest", "invariant suites"}};
  for (const auto& [name, help] : commands) app.add_subcommand(name, help)->fallthrough();

  std::vector<const char*> argv;
  argv.push_back(args.empty() ? "s3nf" : args.front().c_str());
  for (std::size_t i = 1; i < args.size(); ++i) argv.push_back(args[i].c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    error_json(err, kInvalidConfig, e.what());
    return kInvalidConfig;
  }

  try {
    cfg.command = app.get_subcommands().front()->get_name();
    if (opts["alpha"]->count()) cfg.alpha = alpha;
    if (opts["beta"]->count()) cfg.beta = beta;
    if (opts["epsilon"]->count()) cfg.epsilon = epsilon;
    if (opts["tolerance"]->count()) cfg.tolerance = tolerance;
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw std::invalid_argument("cannot open config " + config_path);
      Json j;
      try {
        j = Json::parse(in);
      } catch (const Json::exception& e) {
        throw std::invalid_argument(std::string("config: ") + e.what());
      }
      std::vector<std::string> locked;
      for (const auto& [key, opt] : opts)
        if (opt->count()) locked.push_back(key);
      apply_config_json(cfg, j, locked);
    }
    validate(cfg);
  } catch (const std::invalid_argument& e) {
    error_json(err, kInvalidConfig, e.what());
    return kInvalidConfig;
  }

  try {
    const Outcome o = execute(cfg);
    Json report{{"command", cfg.command}, {"config", config_json(cfg)}, {"result", o.result},
                {"status", o.verified ? "pass" : "fail"}};
    if (!cfg.no_meta)
      report["meta"] = {{"version", S3NF_VERSION}, {"timestamp", timestamp_utc()}, {"threads", omp_get_max_threads()}};
    if (cfg.format == "json") out << report.dump(2) << "\n";
    else out << o.table.str();

    if (!cfg.output.empty()) {
      std::filesystem::create_directories(cfg.output);
      const std::string hash = sha256_hex(config_json(cfg).dump());
      const std::filesystem::path path =
          std::filesystem::path(cfg.output) / (hash + (cfg.format == "json" ? ".jsonl" : ".csv"));
      const bool fresh = !std::filesystem::exists(path);
      std::ofstream file(path, std::ios::app);
      if (!file) throw std::runtime_error("cannot open report file " + path.string());
      if (cfg.format == "json") file << report.dump() << "\n";
      else file << o.table.str(fresh);
    }
    if (!o.verified) {
      error_json(err, kVerificationFailure, "verification failed for " + cfg.command);
      return kVerificationFailure;
    }
    return kSuccess;
  } catch (const std::invalid_argument& e) {
    error_json(err, kInvalidConfig, e.what());
    return kInvalidConfig;
  } catch (const std::domain_error& e) {
    // data outside what the requested degree resolves
    error_json(err, kInvalidConfig, e.what());
    return kInvalidConfig;
  } catch (const std::exception& e) {
    error_json(err, kInternalFailure, e.what());
    return kInternalFailure;
  }
}

}  // namespace s3nf::cli
