#include "s3nf/clebsch_gordan.hpp"

#include <cmath>
#include <cstdlib>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

namespace s3nf {

namespace {

const BigInt& factorial(int n) {
  static const std::vector<BigInt> table = [] {
    std::vector<BigInt> t(1024);
    t[0] = 1;
    for (int i = 1; i < 1024; ++i) t[i] = t[i - 1] * i;
    return t;
  }();
  if (n < 0 || n >= static_cast<int>(table.size()))
    throw std::out_of_range("factorial argument out of table range");
  return table[n];
}

// All arguments are doubled; returns the integer (x)/2 for even x.
int half(int doubled) { return doubled / 2; }

bool is_perfect_square(const BigInt& v, BigInt& root) {
  if (v < 0) return false;
  root = boost::multiprecision::sqrt(v);
  return root * root == v;
}

std::uint64_t pack(const CGKey& k) {
  auto enc = [](HalfInt h) { return static_cast<std::uint64_t>(h.twice + 512) & 0x3ffu; };
  return enc(k.j1) | enc(k.m1) << 10 | enc(k.j2) << 20 | enc(k.m2) << 30 | enc(k.j3) << 40 |
         enc(k.m3) << 50;
}

struct CGCache {
  std::shared_mutex mutex;
  std::unordered_map<std::uint64_t, double> table;
};

CGCache& cache() {
  static CGCache c;
  return c;
}

}  // namespace

double ExactCG::to_double() const {
  if (sign == 0) return 0.0;
  return sign * std::sqrt(radicand.convert_to<double>());
}

void validate(const CGKey& k) {
  const HalfInt js[3] = {k.j1, k.j2, k.j3};
  const HalfInt ms[3] = {k.m1, k.m2, k.m3};
  for (int a = 0; a < 3; ++a) {
    if (js[a].twice < 0) throw std::invalid_argument("negative spin " + js[a].str());
    if (!same_parity(js[a], ms[a]))
      throw std::invalid_argument("spin/weight parity mismatch: j=" + js[a].str() +
                                  " m=" + ms[a].str());
    if (js[a].twice > 500 || std::abs(ms[a].twice) > 500)
      throw std::invalid_argument("label exceeds supported range");
  }
}

bool cg_allowed(const CGKey& k) {
  validate(k);
  if (std::abs(k.m1.twice) > k.j1.twice) return false;
  if (std::abs(k.m2.twice) > k.j2.twice) return false;
  if (std::abs(k.m3.twice) > k.j3.twice) return false;
  if (k.m1.twice + k.m2.twice != k.m3.twice) return false;
  if (((k.j1.twice + k.j2.twice + k.j3.twice) & 1) != 0) return false;
  if (k.j3.twice < std::abs(k.j1.twice - k.j2.twice)) return false;
  if (k.j3.twice > k.j1.twice + k.j2.twice) return false;
  return true;
}

ExactCG clebsch_gordan_exact(const CGKey& k) {
  ExactCG out;
  if (!cg_allowed(k)) return out;
  const int j1 = k.j1.twice, j2 = k.j2.twice, J = k.j3.twice;
  const int m1 = k.m1.twice, m2 = k.m2.twice, M = k.m3.twice;

  const int A = half(J + j1 - j2), B = half(J - j1 + j2), C = half(j1 + j2 - J);
  const int D = half(j1 + j2 + J) + 1;
  BigInt num = BigInt(J + 1) * factorial(A) * factorial(B) * factorial(C) *
               factorial(half(J + M)) * factorial(half(J - M)) * factorial(half(j1 - m1)) *
               factorial(half(j1 + m1)) * factorial(half(j2 - m2)) * factorial(half(j2 + m2));
  Rational R(num, factorial(D));

  const int e1 = half(j1 - m1), e2 = half(j2 + m2);
  const int e3 = half(J - j2 + m1), e4 = half(J - j1 - m2);
  const int kmin = std::max({0, -e3, -e4});
  const int kmax = std::min({C, e1, e2});
  Rational S = 0;
  for (int kk = kmin; kk <= kmax; ++kk) {
    BigInt den = factorial(kk) * factorial(C - kk) * factorial(e1 - kk) * factorial(e2 - kk) *
                 factorial(e3 + kk) * factorial(e4 + kk);
    Rational term(BigInt(1), den);
    if (kk & 1) S -= term; else S += term;
  }
  if (S == 0) return out;
  out.sign = S > 0 ? 1 : -1;
  out.radicand = S * S * R;
  return out;
}

double clebsch_gordan(const CGKey& key) {
  if (!cg_allowed(key)) return 0.0;
  const std::uint64_t id = pack(key);
  CGCache& c = cache();
  {
    std::shared_lock lock(c.mutex);
    auto it = c.table.find(id);
    if (it != c.table.end()) return it->second;
  }
  const double v = clebsch_gordan_exact(key).to_double();
  std::unique_lock lock(c.mutex);
  c.table.emplace(id, v);
  return v;
}

double clebsch_gordan2(int tj1, int tm1, int tj2, int tm2, int tj3, int tm3) {
  return clebsch_gordan(CGKey{HalfInt(tj1), HalfInt(tm1), HalfInt(tj2), HalfInt(tm2),
                              HalfInt(tj3), HalfInt(tm3)});
}

void RadicalSum::add_product(const ExactCG& a, const ExactCG& b) {
  if (a.sign == 0 || b.sign == 0) return;
  add(Rational(a.sign * b.sign), a.radicand * b.radicand);
}

bool RadicalSum::evaluate(int& sign, Rational& square) const {
  const Rational* base = nullptr;
  for (const auto& t : terms)
    if (t.first != 0 && t.second != 0) { base = &t.second; break; }
  if (!base) { sign = 0; square = 0; return true; }
  Rational total = 0;
  for (const auto& [q, r] : terms) {
    if (q == 0 || r == 0) continue;
    Rational ratio = r / *base;
    BigInt rn, rd;
    if (!is_perfect_square(boost::multiprecision::numerator(ratio), rn) ||
        !is_perfect_square(boost::multiprecision::denominator(ratio), rd))
      return false;
    total += q * Rational(rn, rd);
  }
  sign = total > 0 ? 1 : (total < 0 ? -1 : 0);
  square = total * total * *base;
  return true;
}

CGBlock cg_block(int a, int b, int m) {
  CGBlock blk;
  blk.a = a; blk.b = b; blk.m = m;
  blk.values.assign(static_cast<std::size_t>(a + 1) * (b + 1), 0.0);
  for (int r1 = 0; r1 <= a; ++r1)
    for (int r2 = 0; r2 <= b; ++r2) {
      const int ti = 2 * r1 - a, tj = 2 * r2 - b;
      if (std::abs(ti + tj) > m) continue;
      blk.values[r1 * (b + 1) + r2] = clebsch_gordan2(a, ti, b, tj, m, ti + tj);
    }
  return blk;
}

}  // namespace s3nf
