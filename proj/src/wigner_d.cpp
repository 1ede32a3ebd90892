#include "s3nf/wigner.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace s3nf {

namespace {

double log_factorial(int n) { return std::lgamma(n + 1.0); }

const std::vector<double>& factorial_table() {
  static const std::vector<double> t = [] {
    std::vector<double> v(171);
    v[0] = 1.0;
    for (int i = 1; i <= 170; ++i) v[i] = v[i - 1] * i;
    return v;
  }();
  return t;
}

// sqrt(s!(s+mu+nu)! / ((s+mu)!(s+nu)!))
double jacobi_prefactor(int s, int mu, int nu) {
  if (s + mu + nu <= 170) {
    const auto& f = factorial_table();
    return std::sqrt((f[s] / f[s + mu]) * (f[s + mu + nu] / f[s + nu]));
  }
  return std::exp(0.5 * (log_factorial(s) + log_factorial(s + mu + nu) - log_factorial(s + mu) -
                         log_factorial(s + nu)));
}

double jacobi_p(int n, double a, double b, double x) {
  if (n == 0) return 1.0;
  double p0 = 1.0;
  double p1 = (a + 1.0) + 0.5 * (a + b + 2.0) * (x - 1.0);
  for (int k = 2; k <= n; ++k) {
    const double c = 2.0 * k + a + b;
    const double a1 = 2.0 * k * (k + a + b) * (c - 2.0);
    const double a2 = (c - 1.0) * (c * (c - 2.0) * x + a * a - b * b);
    const double a3 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * c;
    const double p2 = (a2 * p1 - a3 * p0) / a1;
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

}  // namespace

double wigner_small_d(int two_j, int two_mp, int two_m, double beta) {
  if (two_j < 0) throw std::invalid_argument("negative spin");
  if (std::abs(two_mp) > two_j || std::abs(two_m) > two_j) return 0.0;
  if (((two_j - two_mp) & 1) || ((two_j - two_m) & 1)) return 0.0;
  const int mu = std::abs(two_m - two_mp) / 2;
  const int nu = std::abs(two_m + two_mp) / 2;
  const int s = (two_j - mu - nu) / 2;
  double xi = 1.0;
  if (two_m < two_mp && (((two_m - two_mp) / 2) & 1)) xi = -1.0;
  const double sh = std::sin(0.5 * beta), ch = std::cos(0.5 * beta);
  return jacobi_prefactor(s, mu, nu) * xi * std::pow(sh, mu) * std::pow(ch, nu) *
         jacobi_p(s, mu, nu, std::cos(beta));
}

double wigner_small_d_reference(int two_j, int two_mp, int two_m, double beta) {
  if (std::abs(two_mp) > two_j || std::abs(two_m) > two_j) return 0.0;
  if (((two_j - two_mp) & 1) || ((two_j - two_m) & 1)) return 0.0;
  const int jpm = (two_j + two_m) / 2, jmm = (two_j - two_m) / 2;
  const int jpmp = (two_j + two_mp) / 2, jmmp = (two_j - two_mp) / 2;
  const int dm = (two_mp - two_m) / 2;
  const long double ch = std::cos(0.5L * beta), sh = std::sin(0.5L * beta);
  auto lf = [](int n) { return std::lgamma(n + 1.0L); };
  const long double lnorm = 0.5L * (lf(jpmp) + lf(jmmp) + lf(jpm) + lf(jmm));
  long double sum = 0.0L;
  const int smin = std::max(0, -dm);
  const int smax = std::min(jpm, jmmp);
  for (int s = smin; s <= smax; ++s) {
    const long double lw = lnorm - lf(jpm - s) - lf(s) - lf(dm + s) - lf(jmmp - s);
    const int pc = two_j - 2 * s - dm;
    const int ps = dm + 2 * s;
    const long double term = std::exp(lw) * std::pow(ch, pc) * std::pow(sh, ps);
    sum += ((dm + s) & 1) ? -term : term;
  }
  return static_cast<double>(sum);
}

RealMatrix wigner_small_d_matrix(int m, double beta) {
  if (m < 0) throw std::invalid_argument("negative degree");
  RealMatrix d(m + 1, m + 1);
  for (int r = 0; r <= m; ++r)
    for (int c = 0; c <= m; ++c) d(r, c) = wigner_small_d(m, m - 2 * r, m - 2 * c, beta);
  return d;
}

DMatrix wigner_d_matrix(int m, double alpha, double beta, double gamma) {
  if (m < 0) throw std::invalid_argument("negative degree");
  DMatrix out;
  out.m = m;
  out.angles = {alpha, beta, gamma};
  const RealMatrix d = wigner_small_d_matrix(m, beta);
  out.entries.resize(m + 1, m + 1);
  for (int r = 0; r <= m; ++r) {
    const double wi = 0.5 * (2 * r - m);
    for (int c = 0; c <= m; ++c) {
      const double wj = 0.5 * (2 * c - m);
      out.entries(r, c) = std::polar(d(r, c), wi * alpha + wj * gamma);
    }
  }
  return out;
}

DMatrix wigner_d_matrix(int m, const EulerAngles& g) {
  return wigner_d_matrix(m, g.alpha, g.beta, g.gamma);
}

std::array<Matrix, 3> generators(int m) {
  if (m < 0) throw std::invalid_argument("negative degree");
  const int n = m + 1;
  const double j = 0.5 * m;
  Matrix jp = Matrix::Zero(n, n);
  for (int r = 0; r + 1 < n; ++r) {
    const double w = 0.5 * (2 * r - m);
    jp(r + 1, r) = std::sqrt(j * (j + 1.0) - w * (w + 1.0));
  }
  const Matrix jm = jp.adjoint();
  const cplx I(0.0, 1.0);
  Matrix jz = Matrix::Zero(n, n);
  for (int r = 0; r < n; ++r) jz(r, r) = 0.5 * (2 * r - m);
  const Matrix jx = 0.5 * (jp + jm);
  const Matrix jy = (jp - jm) / (2.0 * I);
  return {2.0 * I * jx, 2.0 * I * jy, 2.0 * I * jz};
}

WignerTable::WignerTable(std::vector<double> betas, int max_degree)
    : betas_(std::move(betas)), max_degree_(max_degree) {
  const std::size_t nb = betas_.size();
  offsets_.resize(nb * (max_degree_ + 1));
  std::size_t total = 0;
  for (std::size_t b = 0; b < nb; ++b)
    for (int m = 0; m <= max_degree_; ++m) {
      offsets_[b * (max_degree_ + 1) + m] = total;
      total += static_cast<std::size_t>(m + 1) * (m + 1);
    }
  data_.resize(total);
#pragma omp parallel for schedule(dynamic)
  for (std::size_t b = 0; b < nb; ++b)
    for (int m = 0; m <= max_degree_; ++m) {
      const RealMatrix d = wigner_small_d_matrix(m, betas_[b]);
      double* out = data_.data() + offsets_[b * (max_degree_ + 1) + m];
      for (int r = 0; r <= m; ++r)
        for (int c = 0; c <= m; ++c) out[r * (m + 1) + c] = d(r, c);
    }
}

}  // namespace s3nf
