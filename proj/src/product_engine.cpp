#include "s3nf/product_engine.hpp"

#include <fftw3.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "quadrature.hpp"

namespace s3nf {

namespace {

int wrap(int k, int N) { return ((k % N) + N) % N; }

// Largest degree present in W_n: pairs a - b = +-n reach 2M - n, pairs a + b + 2 = n reach n - 2.
int top_degree(int n, int M) { return std::max(n - 2, 2 * M - n); }

}  // namespace

double SineQ0Spectrum::norm2(int n, int m) const {
  const int k = std::abs(n);
  if (k > n_max() || m >= static_cast<int>(blocks[k].size())) return 0.0;
  const Matrix& b = blocks[k][m];
  return b.size() == 0 ? 0.0 : b.squaredNorm();
}

SpacetimeSpectrum SineQ0Spectrum::to_spacetime() const {
  SpacetimeSpectrum out(n_max(), 2 * M);
  for (int n = 0; n <= n_max(); ++n)
    for (int m = 0; m < static_cast<int>(blocks[n].size()); ++m) {
      if (blocks[n][m].size() == 0) continue;
      out.at(n)[m] = blocks[n][m];
      out.at(-n)[m] = blocks[n][m];
    }
  return out;
}

struct SinePairEngine::Impl {
  int M, N;
  std::vector<double> beta, weight;
  WignerTable table;
  fftw_plan forward = nullptr, backward = nullptr;
  std::vector<cplx> twist;  // exp(i(alpha + gamma)) on the half torus

  explicit Impl(int m) : M(m), N(2 * m + 2) {
    const detail::GaussLegendre gl = detail::gauss_legendre(M + 1, -1.0, 1.0);
    for (int b = 0; b <= M; ++b) {
      beta.push_back(std::acos(gl.x[b]));
      weight.push_back(0.5 * gl.w[b]);
    }
    table = WignerTable(beta, 2 * M);

    std::vector<cplx> scratch(static_cast<std::size_t>(N) * N);
    auto* p = reinterpret_cast<fftw_complex*>(scratch.data());
    forward = fftw_plan_dft_2d(N, N, p, p, FFTW_FORWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
    backward = fftw_plan_dft_2d(N, N, p, p, FFTW_BACKWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);

    twist.resize(static_cast<std::size_t>(N) * N);
    for (int k = 0; k < N; ++k)
      for (int l = 0; l < N; ++l) twist[k * N + l] = std::polar(1.0, 2.0 * std::numbers::pi * (k + l) / N);
  }

  ~Impl() {
    fftw_destroy_plan(forward);
    fftw_destroy_plan(backward);
  }

  void execute(fftw_plan plan, std::vector<cplx>& buf) const {
    auto* p = reinterpret_cast<fftw_complex*>(buf.data());
    fftw_execute_dft(plan, p, p);
  }

  // Twisted samples of Tr(F pi_a) at beta node b.
  void synthesize(const Matrix& F, int a, int b, std::vector<cplx>& out) const {
    std::fill(out.begin(), out.end(), cplx(0.0));
    const int eps = a & 1;
    const double* d = table.block(b, a);
    for (int r = 0; r <= a; ++r)
      for (int c = 0; c <= a; ++c) {
        const int p = (2 * r - a - eps) / 2, q = (2 * c - a - eps) / 2;
        out[wrap(p, N) * N + wrap(q, N)] += F(c, r) * d[r * (a + 1) + c];
      }
    execute(backward, out);
  }
};

SinePairEngine::SinePairEngine(int M) : M_(M) {
  if (M < 0) throw std::invalid_argument("SinePairEngine: negative degree");
  impl_ = std::make_unique<Impl>(M);
}

SinePairEngine::~SinePairEngine() = default;

SineQ0Spectrum SinePairEngine::compute(const SU2Spectrum& f, const SU2Spectrum& g) const {
  const Impl& I = *impl_;
  const int M = M_, N = I.N, NN = N * N, n_top = 2 * M + 2;
  const SU2Spectrum F = f.resized(M), G = g.resized(M);

  SineQ0Spectrum out;
  out.M = M;
  out.blocks.resize(n_top + 1);
  for (int n = 0; n <= n_top; ++n) {
    out.blocks[n].resize(top_degree(n, M) + 1);
    for (int m = n % 2; m <= top_degree(n, M); m += 2) out.blocks[n][m] = Matrix::Zero(m + 1, m + 1);
  }

  std::vector<std::vector<cplx>> u(M + 1, std::vector<cplx>(NN)), v(M + 1, std::vector<cplx>(NN)), vt(M + 1, std::vector<cplx>(NN));
  std::vector<char> fz(M + 1), gz(M + 1);
  for (int a = 0; a <= M; ++a) {
    fz[a] = F[a].cwiseAbs().maxCoeff() == 0.0;
    gz[a] = G[a].cwiseAbs().maxCoeff() == 0.0;
  }
  const double inv = 1.0 / NN;

  for (int b = 0; b <= M; ++b) {
#pragma omp parallel for schedule(dynamic)
    for (int a = 0; a <= M; ++a) {
      if (!fz[a]) I.synthesize(F[a], a, b, u[a]);
      if (!gz[a]) {
        I.synthesize(G[a], a, b, v[a]);
        if (a & 1)
          for (int k = 0; k < NN; ++k) vt[a][k] = v[a][k] * I.twist[k];
      }
    }

#pragma omp parallel
    {
      std::vector<cplx> w(NN);
#pragma omp for schedule(dynamic)
      for (int n = 0; n <= n_top; ++n) {
        std::fill(w.begin(), w.end(), cplx(0.0));
        bool any = false;
        auto add = [&](int a, int c, double coef) {
          if (a < 0 || c < 0 || a > M || c > M || fz[a] || gz[c]) return;
          any = true;
          // odd-odd pairs carry the extra factor exp(i(alpha + gamma)), folded into vt
          const double* __restrict x = reinterpret_cast<const double*>(u[a].data());
          const double* __restrict y = reinterpret_cast<const double*>(((a & 1) && (c & 1)) ? vt[c].data() : v[c].data());
          double* __restrict z = reinterpret_cast<double*>(w.data());
#pragma omp simd
          for (int k = 0; k < 2 * NN; k += 2) {
            z[k] += coef * (x[k] * y[k] - x[k + 1] * y[k + 1]);
            z[k + 1] += coef * (x[k] * y[k + 1] + x[k + 1] * y[k]);
          }
        };
        if (n == 0) {
          for (int a = 0; a <= M; ++a) add(a, a, 0.5);
        } else {
          for (int a = n; a <= M; ++a) add(a, a - n, 0.25);
          for (int a = 0; a + n <= M; ++a) add(a, a + n, 0.25);
          for (int a = 0; a <= n - 2; ++a) add(a, n - 2 - a, -0.25);
        }
        if (!any) continue;
        I.execute(I.forward, w);

        const int eps = n & 1;
        for (int m = eps; m <= top_degree(n, M); m += 2) {
          const double* d = I.table.block(b, m);
          const double scale = I.weight[b] * inv * 0.5 * static_cast<double>(1 + (m + 1) * (m + 1) - n * n);
          Matrix& blk = out.blocks[n][m];
          for (int c = 0; c <= m; ++c) {
            const cplx* col = w.data() + static_cast<std::size_t>(wrap((2 * c - m - eps) / 2, N)) * N;
            const double* dc = d + c * (m + 1);
            cplx* dst = blk.data() + static_cast<std::size_t>(c) * (m + 1);
            const int h = (m + eps) / 2;  // frequency of row r is r - h
#pragma omp simd
            for (int r = 0; r < h; ++r) dst[r] += (scale * dc[r]) * col[r - h + N];
#pragma omp simd
            for (int r = h; r <= m; ++r) dst[r] += (scale * dc[r]) * col[r - h];
          }
        }
      }
    }
  }
  return out;
}

}  // namespace s3nf
