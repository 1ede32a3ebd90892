#include <cmath>
#include <random>

#include "doctest.h"
#include "s3nf/clebsch_gordan.hpp"
#include "s3nf/su2.hpp"
#include "s3nf/wigner.hpp"
#include "support/oracles.hpp"

using namespace s3nf;

TEST_CASE("wigner_d_matrix examples") {
  CHECK(std::abs(wigner_d_matrix(0, 0.3, 1.1, -2.0).entries(0, 0) - cplx(1, 0)) < 1e-15);
  const double b = 0.77;
  CHECK(std::abs(wigner_d_matrix(2, 1.3, b, 0.4).entries(1, 1) - std::cos(b)) < 1e-15);
  const double a = 0.9, g = 2.1;
  const Matrix p = wigner_d_matrix(1, a, 0.0, g).entries;
  CHECK(std::abs(p(0, 0) - std::polar(1.0, -(a + g) / 2)) < 1e-15);
  CHECK(std::abs(p(1, 1) - std::polar(1.0, (a + g) / 2)) < 1e-15);
  CHECK(std::abs(p(0, 1)) < 1e-15);
  CHECK(std::abs(p(1, 0)) < 1e-15);
}

TEST_CASE("degrees one and two match the displayed matrices") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    const EulerAngles g = oracle::random_angles(rng);
    const Matrix p1 = wigner_d_matrix(1, g).entries;
    const Matrix p2 = wigner_d_matrix(2, g).entries;
    CHECK((p1 - Matrix(oracle::pi1(g.alpha, g.beta, g.gamma))).norm() < 1e-14);
    CHECK((p2 - Matrix(oracle::pi2(g.alpha, g.beta, g.gamma))).norm() < 1e-14);
    CHECK((p1 - Matrix(su2_from_euler(g))).norm() < 1e-15);
  }
}

TEST_CASE("jacobi little-d agrees with the factorial sum") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> beta(0.0, oracle::pi);
  for (int tj = 0; tj <= 24; ++tj)
    for (int rep = 0; rep < 3; ++rep) {
      const double b = beta(rng);
      for (int tmp = -tj; tmp <= tj; tmp += 2)
        for (int tm = -tj; tm <= tj; tm += 2)
          CHECK(std::abs(wigner_small_d(tj, tmp, tm, b) - wigner_small_d_reference(tj, tmp, tm, b)) <
                1e-12);
    }
  CHECK(wigner_small_d(1, 1, -1, 0.4) == doctest::Approx(-std::sin(0.2)));
  CHECK(wigner_small_d(2, 0, 0, 0.4) == doctest::Approx(std::cos(0.4)));
}

TEST_CASE("unitarity up to degree 16 and at high degree") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 100; ++t) {
    const EulerAngles g = oracle::random_angles(rng);
    for (int m = 0; m <= 16; ++m) {
      const Matrix p = wigner_d_matrix(m, g).entries;
      CHECK((p * p.adjoint() - Matrix::Identity(m + 1, m + 1)).norm() <= 1e-12);
    }
  }
  for (int m : {32, 48, 64}) {
    const RealMatrix d = wigner_small_d_matrix(m, 1.234);
    CHECK((d * d.transpose() - RealMatrix::Identity(m + 1, m + 1)).norm() <= 1e-12);
  }
}

TEST_CASE("homomorphism through 2x2 products and Euler decomposition") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 30; ++t) {
    const EulerAngles g1 = oracle::random_angles(rng), g2 = oracle::random_angles(rng);
    const EulerAngles g12 = euler_from_su2(su2_from_euler(g1) * su2_from_euler(g2));
    CHECK((su2_from_euler(g12) - su2_from_euler(g1) * su2_from_euler(g2)).norm() < 1e-14);
    for (int m = 0; m <= 8; ++m) {
      const Matrix lhs = wigner_d_matrix(m, g12).entries;
      const Matrix rhs = wigner_d_matrix(m, g1).entries * wigner_d_matrix(m, g2).entries;
      CHECK((lhs - rhs).norm() <= 1e-10);
    }
  }
}

TEST_CASE("euler decomposition handles degenerate beta") {
  for (double b : {0.0, oracle::pi}) {
    const EulerAngles g{1.0, b, 2.5};
    const SU2 u = su2_from_euler(g);
    CHECK((su2_from_euler(euler_from_su2(u)) - u).norm() < 1e-14);
  }
}

TEST_CASE("generators") {
  const auto x0 = generators(0);
  for (const auto& x : x0) CHECK(x.norm() == 0.0);
  for (int m = 0; m <= 10; ++m) {
    const auto x = generators(m);
    Matrix cas = Matrix::Zero(m + 1, m + 1);
    for (const auto& xk : x) {
      CHECK((xk + xk.adjoint()).norm() < 1e-14);
      cas += xk * xk;
    }
    CHECK((cas + m * (m + 2.0) * Matrix::Identity(m + 1, m + 1)).norm() < 1e-12);
  }
  const auto x1 = generators(1);
  const auto x2 = generators(2);
  Matrix c1 = x1[0] * x1[0] + x1[1] * x1[1] + x1[2] * x1[2];
  Matrix c2 = x2[0] * x2[0] + x2[1] * x2[1] + x2[2] * x2[2];
  CHECK((c1 + 3.0 * Matrix::Identity(2, 2)).norm() < 1e-14);
  // spin-1 matrices scaled by 2i, written out by hand
  const cplx I(0, 1);
  const double r = 1.0 / std::sqrt(2.0);
  Matrix jx(3, 3), jy(3, 3), jz(3, 3);
  jx << 0, r, 0, r, 0, r, 0, r, 0;
  jy << 0, I * r, 0, -I * r, 0, I * r, 0, -I * r, 0;
  jz << -1, 0, 0, 0, 0, 0, 0, 0, 1;
  CHECK((x2[0] - 2.0 * I * jx).norm() < 1e-14);
  CHECK((x2[1] - 2.0 * I * jy).norm() < 1e-14);
  CHECK((x2[2] - 2.0 * I * jz).norm() < 1e-14);
  CHECK((c2 + 8.0 * Matrix::Identity(3, 3)).norm() < 1e-13);
}

TEST_CASE("generators are derivatives of left translation") {
  std::mt19937_64 rng(13);
  const double h = 1e-5;
  for (int t = 0; t < 5; ++t) {
    const EulerAngles g = oracle::random_angles(rng);
    const SU2 u = su2_from_euler(g);
    for (int k = 0; k < 3; ++k) {
      const Eigen::Matrix2cd a = generators(1)[k];
      const EulerAngles gp = euler_from_su2(su2_exp(a, h) * u);
      const EulerAngles gm = euler_from_su2(su2_exp(a, -h) * u);
      for (int m = 0; m <= 6; ++m) {
        const Matrix fd = (wigner_d_matrix(m, gp).entries - wigner_d_matrix(m, gm).entries) / (2 * h);
        const Matrix exact = generators(m)[k] * wigner_d_matrix(m, g).entries;
        CHECK((fd - exact).norm() < 1e-7 * (m + 1) * (m + 1));
      }
    }
  }
}

TEST_CASE("indexed Clebsch-Gordan expansion of products") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 4; ++t) {
    const EulerAngles g = oracle::random_angles(rng);
    std::vector<Matrix> p;
    for (int m = 0; m <= 12; ++m) p.push_back(wigner_d_matrix(m, g).entries);
    for (int a = 0; a <= 6; ++a)
      for (int b = 0; b <= 6; ++b)
        for (int ri = 0; ri <= a; ++ri)
          for (int rj = 0; rj <= a; ++rj)
            for (int rr = 0; rr <= b; ++rr)
              for (int rs = 0; rs <= b; ++rs) {
                const int ti = 2 * ri - a, tj = 2 * rj - a, tr = 2 * rr - b, ts = 2 * rs - b;
                cplx rhs = 0.0;
                for (int k = 0; k <= std::min(a, b); ++k) {
                  const int c = std::abs(a - b) + 2 * k;
                  if (std::abs(ti + tr) > c || std::abs(tj + ts) > c) continue;
                  rhs += clebsch_gordan2(a, ti, b, tr, c, ti + tr) *
                         clebsch_gordan2(a, tj, b, ts, c, tj + ts) *
                         p[c]((ti + tr + c) / 2, (tj + ts + c) / 2);
                }
                CHECK(std::abs(p[a](ri, rj) * p[b](rr, rs) - rhs) <= 1e-11);
              }
  }
}
