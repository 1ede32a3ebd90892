#include "s3nf/peter_weyl.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace s3nf {

namespace {

// E(a, P + M) = exp(i P x_a / 2) for doubled weights P in [-M, M].
Matrix half_angle_exponentials(const std::vector<double>& x, int M) {
  Matrix e(x.size(), 2 * M + 1);
  for (std::size_t a = 0; a < x.size(); ++a)
    for (int p = -M; p <= M; ++p) e(a, p + M) = std::polar(1.0, 0.5 * p * x[a]);
  return e;
}

std::vector<double> grid_axis(const EulerGrid& g, int which) {
  std::vector<double> v;
  if (which == 0)
    for (int a = 0; a < g.n_alpha(); ++a) v.push_back(g.alpha(a));
  else
    for (int c = 0; c < g.n_gamma(); ++c) v.push_back(g.gamma(c));
  return v;
}

Matrix d_matrix_reference(int m, const EulerAngles& g) {
  Matrix out(m + 1, m + 1);
  for (int r = 0; r <= m; ++r)
    for (int c = 0; c <= m; ++c) {
      const double d = wigner_small_d_reference(m, m - 2 * r, m - 2 * c, g.beta);
      out(r, c) = std::polar(d, 0.5 * (2 * r - m) * g.alpha + 0.5 * (2 * c - m) * g.gamma);
    }
  return out;
}

}  // namespace

GridFunction::GridFunction(GridPtr g) : grid(std::move(g)) {
  values = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(grid->size()));
}

double GridFunction::l2_norm2() const {
  double acc = 0.0;
  const std::size_t slice = static_cast<std::size_t>(grid->n_alpha()) * grid->n_gamma();
  for (int b = 0; b < grid->n_beta(); ++b) {
    double part = 0.0;
    for (std::size_t k = 0; k < slice; ++k) part += std::norm(values[b * slice + k]);
    acc += grid->weight(b) * part;
  }
  return acc;
}

cplx GridFunction::integrate() const {
  cplx acc = 0.0;
  const std::size_t slice = static_cast<std::size_t>(grid->n_alpha()) * grid->n_gamma();
  for (int b = 0; b < grid->n_beta(); ++b) {
    cplx part = 0.0;
    for (std::size_t k = 0; k < slice; ++k) part += values[b * slice + k];
    acc += grid->weight(b) * part;
  }
  return acc;
}

GridFunction& GridFunction::operator*=(const GridFunction& o) {
  values.array() *= o.values.array();
  return *this;
}
GridFunction& GridFunction::operator+=(const GridFunction& o) {
  values += o.values;
  return *this;
}
GridFunction& GridFunction::operator-=(const GridFunction& o) {
  values -= o.values;
  return *this;
}

GridFunction sample(GridPtr grid, const std::function<cplx(const EulerAngles&)>& f) {
  GridFunction out(grid);
  for (std::size_t i = 0; i < grid->size(); ++i) out.values[i] = f(grid->node(i));
  return out;
}

GridFunction synthesize(const SU2Spectrum& s, GridPtr grid) {
  const int M = s.max_degree();
  const auto table = grid->table(M);
  const Matrix ea = half_angle_exponentials(grid_axis(*grid, 0), M);
  const Matrix eg_t = half_angle_exponentials(grid_axis(*grid, 1), M).transpose();
  const int na = grid->n_alpha(), ng = grid->n_gamma(), nb = grid->n_beta();
  GridFunction out(grid);

#pragma omp parallel for schedule(static)
  for (int b = 0; b < nb; ++b) {
    Matrix C = Matrix::Zero(2 * M + 1, 2 * M + 1);
    for (int m = 0; m <= M; ++m) {
      const double* d = table->block(b, m);
      const Matrix& fm = s.coeffs[m];
      const double dim = m + 1.0;
      for (int r = 0; r <= m; ++r)
        for (int c = 0; c <= m; ++c)
          C(2 * r - m + M, 2 * c - m + M) += dim * fm(c, r) * d[r * (m + 1) + c];
    }
    const Matrix V = ea * C * eg_t;
    for (int a = 0; a < na; ++a)
      for (int c = 0; c < ng; ++c) out.values[grid->index(b, a, c)] = V(a, c);
  }
  return out;
}

SU2Spectrum analyze(const GridFunction& f, int M) {
  const EulerGrid& grid = *f.grid;
  if (M < 0) throw std::invalid_argument("negative degree");
  if (grid.exactness_degree() < 2 * M)
    throw std::domain_error("grid exactness " + std::to_string(grid.exactness_degree()) +
                            " too low for degree " + std::to_string(M));
  const auto table = grid.table(M);
  const Matrix ea_h = half_angle_exponentials(grid_axis(grid, 0), M).adjoint();
  const Matrix eg_c = half_angle_exponentials(grid_axis(grid, 1), M).conjugate();
  const int na = grid.n_alpha(), ng = grid.n_gamma(), nb = grid.n_beta();
  const double norm = 1.0 / (static_cast<double>(na) * ng);
  std::vector<SU2Spectrum> partial(nb);

#pragma omp parallel for schedule(static)
  for (int b = 0; b < nb; ++b) {
    Matrix V(na, ng);
    for (int a = 0; a < na; ++a)
      for (int c = 0; c < ng; ++c) V(a, c) = f.values[grid.index(b, a, c)];
    const Matrix F = ea_h * V * eg_c;
    SU2Spectrum part(M);
    const double w = grid.beta_weight(b) * norm;
    for (int m = 0; m <= M; ++m) {
      const double* d = table->block(b, m);
      for (int r = 0; r <= m; ++r)
        for (int c = 0; c <= m; ++c)
          part.coeffs[m](r, c) = w * F(2 * c - m + M, 2 * r - m + M) * d[c * (m + 1) + r];
    }
    partial[b] = std::move(part);
  }
  SU2Spectrum out(M);
  for (int b = 0; b < nb; ++b) out += partial[b];
  return out;
}

SU2Spectrum analyze_reference(const GridFunction& f, int M) {
  const EulerGrid& grid = *f.grid;
  SU2Spectrum out(M);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const EulerAngles g = grid.node(i);
    const int b = static_cast<int>(i / (static_cast<std::size_t>(grid.n_alpha()) * grid.n_gamma()));
    const cplx wf = grid.weight(b) * f.values[i];
    for (int m = 0; m <= M; ++m) out.coeffs[m] += wf * d_matrix_reference(m, g).adjoint();
  }
  return out;
}

GridFunction synthesize_reference(const SU2Spectrum& s, GridPtr grid) {
  GridFunction out(grid);
  for (std::size_t i = 0; i < grid->size(); ++i) {
    const EulerAngles g = grid->node(i);
    cplx acc = 0.0;
    for (int m = 0; m <= s.max_degree(); ++m)
      acc += (m + 1.0) * (s.coeffs[m] * d_matrix_reference(m, g)).trace();
    out.values[i] = acc;
  }
  return out;
}

cplx evaluate(const SU2Spectrum& s, const EulerAngles& g) {
  cplx acc = 0.0;
  for (int m = 0; m <= s.max_degree(); ++m)
    acc += (m + 1.0) * (s.coeffs[m] * wigner_d_matrix(m, g).entries).trace();
  return acc;
}

double sobolev_norm(const SU2Spectrum& s, double order) {
  double acc = 0.0;
  for (int m = 0; m <= s.max_degree(); ++m)
    acc += std::pow(m + 1.0, 2.0 * order + 1.0) * s.coeffs[m].squaredNorm();
  return std::sqrt(acc);
}

SU2Spectrum apply_J_power(const SU2Spectrum& s, double p) {
  SU2Spectrum out = s;
  for (int m = 0; m <= s.max_degree(); ++m) out.coeffs[m] *= std::pow(m + 1.0, p);
  return out;
}

SU2Spectrum left_derivative(const SU2Spectrum& s, int k) {
  if (k < 1 || k > 3) throw std::invalid_argument("direction must be 1, 2 or 3");
  SU2Spectrum out(s.max_degree());
  for (int m = 0; m <= s.max_degree(); ++m) out.coeffs[m] = s.coeffs[m] * generators(m)[k - 1];
  return out;
}

SU2Spectrum laplacian(const SU2Spectrum& s) {
  SU2Spectrum out(s.max_degree());
  for (int k = 1; k <= 3; ++k) out += left_derivative(left_derivative(s, k), k);
  return out;
}

double gradient_norm2(const SU2Spectrum& s) {
  double acc = 0.0;
  for (int m = 0; m <= s.max_degree(); ++m)
    acc += static_cast<double>(m) * (m + 1) * (m + 2) * s.coeffs[m].squaredNorm();
  return acc;
}

double euler_to_polar(double alpha, double beta, double gamma) {
  const double c = std::cos(0.5 * beta) * std::cos(0.5 * (alpha + gamma));
  return std::acos(std::clamp(c, -1.0, 1.0));
}

}  // namespace s3nf
