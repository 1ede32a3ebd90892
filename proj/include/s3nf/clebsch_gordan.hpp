#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <vector>

#include "s3nf/half_int.hpp"

namespace s3nf {

using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

/// Label of <j1 m1 j2 m2 | j3 m3>.
struct CGKey {
  HalfInt j1, m1, j2, m2, j3, m3;
};

/// A CG coefficient stored exactly as sign * sqrt(radicand), radicand >= 0 rational.
struct ExactCG {
  int sign = 0;
  Rational radicand = 0;

  double to_double() const;
  bool is_zero() const { return sign == 0; }
};

/// Throws std::invalid_argument for malformed labels (negative spin, or j - m
/// not an integer). Selection-rule failures are not errors.
void validate(const CGKey& key);

/// True when every selection rule holds, i.e. the coefficient can be nonzero.
bool cg_allowed(const CGKey& key);

/// Racah closed form evaluated in exact rational arithmetic, Condon-Shortley phase.
ExactCG clebsch_gordan_exact(const CGKey& key);

/// Floating-point value, memoised in a process-wide thread-safe table.
double clebsch_gordan(const CGKey& key);

/// Convenience overload with doubled labels.
double clebsch_gordan2(int tj1, int tm1, int tj2, int tm2, int tj3, int tm3);

/// Sum of terms q_k * sqrt(r_k) in exact arithmetic. Supports sums whose
/// radicands are pairwise commensurable (ratios are rational squares), which is
/// the case for the CG orthogonality sums. Returns false if not commensurable.
struct RadicalSum {
  std::vector<std::pair<Rational, Rational>> terms;  // (coefficient, radicand)
  void add(const Rational& q, const Rational& r) { terms.emplace_back(q, r); }
  void add_product(const ExactCG& a, const ExactCG& b);
  /// On success writes value^2 with its sign into (sign, square).
  bool evaluate(int& sign, Rational& square) const;
};

/// Dense table C[r1][r2] = <a/2 i, b/2 j | m/2 i+j> for degree-a, -b, -m blocks,
/// indexed by weight positions r1 = i + a/2, r2 = j + b/2.
struct CGBlock {
  int a = 0, b = 0, m = 0;
  std::vector<double> values;  // (a+1)*(b+1), zero where i+j outside the m block
  double operator()(int r1, int r2) const { return values[r1 * (b + 1) + r2]; }
};

CGBlock cg_block(int a, int b, int m);

}  // namespace s3nf
