#include "s3nf/nullform.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "s3nf/clebsch_gordan.hpp"
#include "s3nf/cylinder_wave.hpp"

namespace s3nf {

namespace {

struct Coupling {
  int r1, r2;
  double c;
};

// Nonzero entries of column p of U_m, as (r1, r2, CG) triples.
std::vector<std::vector<Coupling>> columns(const CGBlock& C, int m) {
  const int delta = (C.a + C.b - m) / 2;
  std::vector<std::vector<Coupling>> out(m + 1);
  for (int p = 0; p <= m; ++p)
    for (int r1 = std::max(0, p + delta - C.b); r1 <= std::min(C.a, p + delta); ++r1) {
      const double c = C(r1, p + delta - r1);
      if (c != 0.0) out[p].push_back({r1, p + delta - r1, c});
    }
  return out;
}

bool nonzero(const Matrix& x) { return x.size() > 0 && x.cwiseAbs().maxCoeff() > 0.0; }

SpacetimeSpectrum reflect(const SpacetimeSpectrum& s) {
  SpacetimeSpectrum out(s.N, s.max_degree());
  for (int n = -s.N; n <= s.N; ++n) out.at(n) = s.at(-n);
  return out;
}

SpacetimeSpectrum half_multiplier(const SpacetimeSpectrum& s) {
  return apply_symbol(s, [](int n, int m) { return 0.5 * static_cast<double>(multiplier_symbol(n, m)); });
}

void require_resolves(const SpacetimeGrid& g, int M, int N) {
  if (g.grid->exactness_degree() < 2 * M)
    throw std::domain_error("grid of exactness " + std::to_string(g.grid->exactness_degree()) +
                            " aliases a product of degree " + std::to_string(M));
  if (g.times.count < 2 * N + 1)
    throw std::domain_error("time sampling of " + std::to_string(g.times.count) +
                            " nodes aliases a product of frequency " + std::to_string(N));
}

SampledField multiply(const SampledField& a, const SampledField& b) {
  SampledField out = a;
  for (std::size_t j = 0; j < out.slices.size(); ++j) out.slices[j] *= b.slices[j];
  return out;
}

SpacetimeSpectrum grid_product(const SpacetimeSpectrum& u, const SpacetimeSpectrum& v, const SpacetimeGrid& g) {
  return analyze_spacetime(multiply(sample_spacetime(u, g), sample_spacetime(v, g)), g.M, g.N);
}

}  // namespace

long long multiplier_symbol(int n, int m) {
  const long long k = m + 1;
  return 1 + k * k - static_cast<long long>(n) * n;
}

long long wave_symbol(int n, int m) {
  const long long k = m + 1;
  return k * k - static_cast<long long>(n) * n;
}

std::vector<Matrix> varpi_degrees(int a, int b, const Matrix& F, const Matrix& G) {
  if (F.rows() != a + 1 || F.cols() != a + 1 || G.rows() != b + 1 || G.cols() != b + 1)
    throw std::invalid_argument("varpi: block sizes do not match the degrees");
  std::vector<Matrix> out(a + b + 1);
  for (int m = 0; m <= a + b; ++m) out[m] = Matrix::Zero(m + 1, m + 1);
  for (int m = std::abs(a - b); m <= a + b; m += 2) {
    const auto U = columns(cg_block(a, b, m), m);
    Matrix& w = out[m];
    for (int p = 0; p <= m; ++p)
      for (int q = 0; q <= m; ++q) {
        cplx acc = 0.0;
        for (const Coupling& x : U[p])
          for (const Coupling& y : U[q]) acc += x.c * y.c * F(x.r1, y.r1) * G(x.r2, y.r2);
        w(p, q) = acc / static_cast<double>(m + 1);
      }
  }
  return out;
}

VarpiBlock varpi(int l, int n, const SU2Spectrum& f, const SU2Spectrum& g, SignPair signs) {
  VarpiBlock out;
  out.l = l;
  out.n = n;
  out.signs = signs;
  if (l < 1) return out;
  const int a = l - 1;
  const int b = signs.s2 * (n - signs.s1 * l) - 1;
  if (a > f.max_degree() || b < 0 || b > g.max_degree()) return out;
  out.a = a;
  out.b = b;
  out.by_degree = varpi_degrees(a, b, f[a], g[b]);
  return out;
}

std::pair<double, double> young_bound_check(int l, int n, const SU2Spectrum& f, const SU2Spectrum& g,
                                            SignPair signs) {
  const VarpiBlock w = varpi(l, n, f, g, signs);
  if (w.empty()) return {0.0, 0.0};
  double lhs = 0.0;
  for (int m = 0; m <= w.max_degree(); ++m) lhs += static_cast<double>((m + 1) * (m + 1)) * w.by_degree[m].squaredNorm();
  return {lhs, f[w.a].squaredNorm() * g[w.b].squaredNorm()};
}

SpacetimeSpectrum cg_product(const SpacetimeSpectrum& u, const SpacetimeSpectrum& v) {
  const int Mu = u.max_degree(), Mv = v.max_degree();
  SpacetimeSpectrum out(u.N + v.N, Mu + Mv);
  std::vector<char> nu((2 * u.N + 1) * (Mu + 1)), nv((2 * v.N + 1) * (Mv + 1));
  for (int n = -u.N; n <= u.N; ++n)
    for (int a = 0; a <= Mu; ++a) nu[(n + u.N) * (Mu + 1) + a] = nonzero(u.at(n)[a]);
  for (int n = -v.N; n <= v.N; ++n)
    for (int b = 0; b <= Mv; ++b) nv[(n + v.N) * (Mv + 1) + b] = nonzero(v.at(n)[b]);

  // each output frequency is owned by one thread and summed in a fixed order
#pragma omp parallel for schedule(dynamic)
  for (int k = 0; k <= 2 * out.N; ++k) {
    const int n = k - out.N;
    SU2Spectrum& dst = out.at(n);
    for (int n1 = -u.N; n1 <= u.N; ++n1) {
      const int n2 = n - n1;
      if (!v.has(n2)) continue;
      for (int a = 0; a <= Mu; ++a) {
        if (!nu[(n1 + u.N) * (Mu + 1) + a]) continue;
        for (int b = 0; b <= Mv; ++b) {
          if (!nv[(n2 + v.N) * (Mv + 1) + b]) continue;
          const auto w = varpi_degrees(a, b, u.at(n1)[a], v.at(n2)[b]);
          const double weight = static_cast<double>((a + 1) * (b + 1));
          for (int m = std::abs(a - b); m <= a + b; m += 2) dst[m] += weight * w[m];
        }
      }
    }
  }
  return out;
}

SpacetimeSpectrum q0_cg_route(const SU2Spectrum& f, const SU2Spectrum& g, SignPair signs) {
  if (signs == kMinusMinus) return reflect(q0_cg_route(f, g, kPlusPlus));
  if (signs == kMinusPlus) return q0_cg_route(g, f, kPlusMinus);
  const FrequencySplit sf = freq_split(f), sg = freq_split(g);
  const SpacetimeSpectrum& psi = signs.s2 > 0 ? sg.plus : sg.minus;
  return half_multiplier(cg_product(sf.plus, psi));
}

SpacetimeSpectrum q0_cg_sine(const SU2Spectrum& f, const SU2Spectrum& g) {
  const SpacetimeSpectrum pp = q0_cg_route(f, g, kPlusPlus);
  const SpacetimeSpectrum pm = q0_cg_route(f, g, kPlusMinus);
  const SpacetimeSpectrum mp = q0_cg_route(f, g, kMinusPlus);
  SpacetimeSpectrum out = pp - pm - mp + reflect(pp);
  out *= -0.25;
  return out;
}

SpacetimeSpectrum q0_cg_free(const SpacetimeSpectrum& phi, const SpacetimeSpectrum& psi) {
  return half_multiplier(cg_product(phi, psi));
}

SpacetimeGrid product_grid(int M, int N) {
  return {build_grid(M), TimeSampling::for_degree(N), M, N};
}

SampledField sample_spacetime(const SpacetimeSpectrum& u, const SpacetimeGrid& g) {
  SampledField out{g.times, {}};
  out.slices.reserve(g.times.count);
  for (int j = 0; j < g.times.count; ++j) out.slices.push_back(synthesize(spacetime_evaluate(u, g.times.t(j)), g.grid));
  return out;
}

SpacetimeSpectrum analyze_spacetime(const SampledField& u, int M, int N) {
  std::vector<SU2Spectrum> series;
  series.reserve(u.slices.size());
  for (const auto& s : u.slices) series.push_back(analyze(s, M));
  return spacetime_analyze(series, u.times, N);
}

SpacetimeSpectrum q0_multiplier_route(const SpacetimeSpectrum& phi, const SpacetimeSpectrum& psi,
                                      const SpacetimeGrid& g) {
  const int M = phi.max_degree() + psi.max_degree(), N = phi.N + psi.N;
  require_resolves(g, M, N);
  return half_multiplier(grid_product(phi, psi, g).resized(N, M));
}

SpacetimeSpectrum q0_multiplier_route(const SpacetimeSpectrum& phi, const SpacetimeSpectrum& psi) {
  return q0_multiplier_route(phi, psi, product_grid(phi.max_degree() + psi.max_degree(), phi.N + psi.N));
}

SpacetimeSpectrum q0_forced_route(const SpacetimeSpectrum& phi, const SpacetimeSpectrum& psi,
                                  const SpacetimeSpectrum& F, const SpacetimeSpectrum& G) {
  auto check = [](const SpacetimeSpectrum& u, const SpacetimeSpectrum& force, const char* name) {
    const SpacetimeSpectrum lhs = apply_symbol(u, [](int n, int m) { return static_cast<double>(wave_symbol(n, m)); });
    const double scale = std::max(1.0, std::sqrt(force.plancherel_norm2()));
    const double residual = spacetime_distance(lhs, force);
    if (residual > kForcedResidualTol * scale)
      throw std::invalid_argument(std::string("q0_forced_route: (box+1)") + name + " differs from its forcing by " +
                                  std::to_string(residual));
  };
  check(phi, F, "phi");
  check(psi, G, "psi");

  const int M = std::max({phi.max_degree() + psi.max_degree(), phi.max_degree() + G.max_degree(),
                          psi.max_degree() + F.max_degree()});
  const int N = std::max({phi.N + psi.N, phi.N + G.N, psi.N + F.N});
  const SpacetimeGrid g = product_grid(M, N);
  const SampledField sphi = sample_spacetime(phi, g), spsi = sample_spacetime(psi, g);
  SpacetimeSpectrum out = apply_symbol(analyze_spacetime(multiply(sphi, spsi), M, N),
                                       [](int n, int m) { return static_cast<double>(multiplier_symbol(n, m)); });
  out -= analyze_spacetime(multiply(sphi, sample_spacetime(G, g)), M, N);
  out -= analyze_spacetime(multiply(spsi, sample_spacetime(F, g)), M, N);
  out *= 0.5;
  return out;
}

SampledField q0_pointwise_route(const SpacetimeSpectrum& phi, const SpacetimeSpectrum& psi, const SpacetimeGrid& g) {
  const SpacetimeSpectrum dphi = time_derivative(phi), dpsi = time_derivative(psi);
  SampledField out{g.times, {}};
  out.slices.reserve(g.times.count);
  for (int j = 0; j < g.times.count; ++j) {
    const double t = g.times.t(j);
    const SU2Spectrum a = spacetime_evaluate(phi, t), b = spacetime_evaluate(psi, t);
    GridFunction acc = synthesize(spacetime_evaluate(dphi, t), g.grid);
    acc *= synthesize(spacetime_evaluate(dpsi, t), g.grid);
    for (int k = 1; k <= 3; ++k) {
      GridFunction x = synthesize(left_derivative(a, k), g.grid);
      x *= synthesize(left_derivative(b, k), g.grid);
      acc -= x;
    }
    out.slices.push_back(std::move(acc));
  }
  return out;
}

SpacetimeSpectrum q0_pointwise_spectrum(const SpacetimeSpectrum& phi, const SpacetimeSpectrum& psi) {
  const int M = phi.max_degree() + psi.max_degree(), N = phi.N + psi.N;
  const SpacetimeGrid g = product_grid(M, N);
  return analyze_spacetime(q0_pointwise_route(phi, psi, g), M, N);
}

}  // namespace s3nf
