#include "s3nf/spectrum.hpp"

#include <cmath>
#include <stdexcept>

namespace s3nf {

SU2Spectrum::SU2Spectrum(int max_degree) {
  if (max_degree < 0) throw std::invalid_argument("negative max degree");
  coeffs.resize(max_degree + 1);
  for (int m = 0; m <= max_degree; ++m) coeffs[m] = Matrix::Zero(m + 1, m + 1);
}

SU2Spectrum SU2Spectrum::constant(int max_degree, cplx c) {
  SU2Spectrum s(max_degree);
  s.coeffs[0](0, 0) = c;
  return s;
}

SU2Spectrum SU2Spectrum::resized(int max_degree) const {
  SU2Spectrum out(max_degree);
  for (int m = 0; m <= std::min(max_degree, this->max_degree()); ++m) out.coeffs[m] = coeffs[m];
  return out;
}

double SU2Spectrum::plancherel_norm2() const {
  double acc = 0.0;
  for (int m = 0; m <= max_degree(); ++m) acc += (m + 1) * coeffs[m].squaredNorm();
  return acc;
}

SU2Spectrum& SU2Spectrum::operator+=(const SU2Spectrum& o) {
  if (o.max_degree() > max_degree()) *this = resized(o.max_degree());
  for (int m = 0; m <= o.max_degree(); ++m) coeffs[m] += o.coeffs[m];
  return *this;
}

SU2Spectrum& SU2Spectrum::operator-=(const SU2Spectrum& o) {
  if (o.max_degree() > max_degree()) *this = resized(o.max_degree());
  for (int m = 0; m <= o.max_degree(); ++m) coeffs[m] -= o.coeffs[m];
  return *this;
}

SU2Spectrum& SU2Spectrum::operator*=(cplx s) {
  for (auto& c : coeffs) c *= s;
  return *this;
}

SU2Spectrum operator+(SU2Spectrum a, const SU2Spectrum& b) { return a += b; }
SU2Spectrum operator-(SU2Spectrum a, const SU2Spectrum& b) { return a -= b; }
SU2Spectrum operator*(cplx s, SU2Spectrum a) { return a *= s; }

double plancherel_distance(const SU2Spectrum& a, const SU2Spectrum& b) {
  return std::sqrt((a - b).plancherel_norm2());
}

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  return mix(mix(mix(seed) ^ a) ^ (b * 0x632be59bd9b4e019ULL));
}

SU2Spectrum random_spectrum(int max_degree, std::mt19937_64& rng, double sigma) {
  std::normal_distribution<double> gauss(0.0, std::sqrt(0.5));
  SU2Spectrum s(max_degree);
  for (int m = 0; m <= max_degree; ++m) {
    const double scale = std::pow(m + 1.0, -sigma);
    for (int r = 0; r <= m; ++r)
      for (int c = 0; c <= m; ++c) {
        const double re = gauss(rng);
        const double im = gauss(rng);
        s.coeffs[m](r, c) = scale * cplx(re, im);
      }
  }
  return s;
}

SU2Spectrum real_part_spectrum(const SU2Spectrum& s) {
  SU2Spectrum out(s.max_degree());
  for (int m = 0; m <= s.max_degree(); ++m) {
    const Matrix& a = s.coeffs[m];
    for (int r = 0; r <= m; ++r)
      for (int c = 0; c <= m; ++c) {
        const double sign = ((c - r) & 1) ? -1.0 : 1.0;
        out.coeffs[m](r, c) = 0.5 * (a(r, c) + sign * std::conj(a(m - r, m - c)));
      }
  }
  return out;
}

}  // namespace s3nf
