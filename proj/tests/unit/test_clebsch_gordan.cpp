#include <cmath>
#include <random>
#include <thread>

#include "doctest.h"
#include "s3nf/clebsch_gordan.hpp"

using namespace s3nf;

namespace {

CGKey key2(int tj1, int tm1, int tj2, int tm2, int tj3, int tm3) {
  return {HalfInt(tj1), HalfInt(tm1), HalfInt(tj2), HalfInt(tm2), HalfInt(tj3), HalfInt(tm3)};
}

struct Fixture {
  int tj1, tm1, tj2, tm2, tj3, tm3;
  double value;
};

// Independent values from a computer-algebra evaluation of the Racah formula.
const Fixture kTable[] = {
#include "cg_fixture.inc"
};

}  // namespace

TEST_CASE("clebsch_gordan examples") {
  CHECK(clebsch_gordan2(0, 0, 0, 0, 0, 0) == 1.0);
  CHECK(clebsch_gordan2(1, 1, 1, 1, 2, 2) == 1.0);
  CHECK(clebsch_gordan2(1, 1, 1, -1, 2, 0) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK(clebsch_gordan2(2, 2, 2, 2, 2, 4) == 0.0);
}

TEST_CASE("clebsch_gordan selection rules give exact zeros") {
  CHECK(clebsch_gordan2(2, 2, 2, 0, 2, 0) == 0.0);   // m1+m2 != m3
  CHECK(clebsch_gordan2(2, 0, 2, 0, 6, 0) == 0.0);   // triangle
  CHECK(clebsch_gordan2(2, 4, 2, 0, 4, 4) == 0.0);   // |m1| > j1
  CHECK(clebsch_gordan_exact(key2(2, 2, 2, 0, 2, 0)).is_zero());
}

TEST_CASE("malformed keys are errors, not zeros") {
  CHECK_THROWS_AS(clebsch_gordan(key2(-2, 0, 2, 0, 2, 0)), std::invalid_argument);
  CHECK_THROWS_AS(clebsch_gordan(key2(2, 1, 2, 0, 2, 1)), std::invalid_argument);
  CHECK_THROWS_AS(clebsch_gordan(key2(1, 1, 1, 1, 2, 3)), std::invalid_argument);
}

TEST_CASE("clebsch_gordan matches independent table") {
  for (const auto& f : kTable) {
    CAPTURE(f.tj1); CAPTURE(f.tm1); CAPTURE(f.tj2); CAPTURE(f.tm2); CAPTURE(f.tj3);
    CHECK(clebsch_gordan2(f.tj1, f.tm1, f.tj2, f.tm2, f.tj3, f.tm3) ==
          doctest::Approx(f.value).epsilon(1e-14));
  }
}

TEST_CASE("spin one-half coupling closed forms") {
  // <j1 m-1/2, 1/2 1/2 | j1+1/2 m> = sqrt((j1+m+1/2)/(2j1+1))
  for (int tj1 = 0; tj1 <= 20; ++tj1)
    for (int tm = -(tj1 + 1); tm <= tj1 + 1; tm += 2) {
      const int tm1 = tm - 1;
      if (std::abs(tm1) > tj1) continue;
      const double j1 = 0.5 * tj1, m = 0.5 * tm;
      CHECK(clebsch_gordan2(tj1, tm1, 1, 1, tj1 + 1, tm) ==
            doctest::Approx(std::sqrt((j1 + m + 0.5) / (2 * j1 + 1))).epsilon(1e-14));
      if (tj1 >= 1 && std::abs(tm) <= tj1 - 1)
        CHECK(clebsch_gordan2(tj1, tm1, 1, 1, tj1 - 1, tm) ==
              doctest::Approx(-std::sqrt((j1 - m + 0.5) / (2 * j1 + 1))).epsilon(1e-14));
    }
}

TEST_CASE("exact orthogonality in rational arithmetic, doubled spins <= 6") {
  for (int tj1 = 0; tj1 <= 6; ++tj1)
    for (int tj2 = 0; tj2 <= 6; ++tj2) {
      // sum over (m1, m2) for fixed (j3, m3), (j3', m3)
      for (int tj3 = std::abs(tj1 - tj2); tj3 <= tj1 + tj2; tj3 += 2)
        for (int tj3p = std::abs(tj1 - tj2); tj3p <= tj1 + tj2; tj3p += 2)
          for (int tm3 = -std::min(tj3, tj3p); tm3 <= std::min(tj3, tj3p); tm3 += 2) {
            RadicalSum sum;
            for (int tm1 = -tj1; tm1 <= tj1; tm1 += 2) {
              const int tm2 = tm3 - tm1;
              if (std::abs(tm2) > tj2) continue;
              sum.add_product(clebsch_gordan_exact(key2(tj1, tm1, tj2, tm2, tj3, tm3)),
                              clebsch_gordan_exact(key2(tj1, tm1, tj2, tm2, tj3p, tm3)));
            }
            int sign = 0;
            Rational sq;
            REQUIRE(sum.evaluate(sign, sq));
            if (tj3 == tj3p) CHECK((sign == 1 && sq == 1));
            else CHECK(sign == 0);
          }
    }
}

TEST_CASE("bounded by one on sampled keys up to doubled spin 40") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> spin(0, 40);
  int checked = 0;
  while (checked < 1500) {
    const int tj1 = spin(rng), tj2 = spin(rng);
    const int lo = std::abs(tj1 - tj2), hi = std::min(tj1 + tj2, 40);
    if (lo > hi) continue;
    const int tj3 = lo + 2 * std::uniform_int_distribution<int>(0, (hi - lo) / 2)(rng);
    const int tm1 = -tj1 + 2 * std::uniform_int_distribution<int>(0, tj1)(rng);
    const int tm2 = -tj2 + 2 * std::uniform_int_distribution<int>(0, tj2)(rng);
    if (std::abs(tm1 + tm2) > tj3) continue;
    const double v = clebsch_gordan2(tj1, tm1, tj2, tm2, tj3, tm1 + tm2);
    CHECK(std::abs(v) <= 1.0 + 1e-15);
    ++checked;
  }
}

TEST_CASE("memo table is consistent under concurrent access") {
  std::vector<double> serial;
  std::vector<CGKey> keys;
  for (int tj = 0; tj <= 16; ++tj)
    for (int tm = -tj; tm <= tj; tm += 2) keys.push_back(key2(tj, tm, 8, 0, tj + 8, tm));
  for (const auto& k : keys) serial.push_back(clebsch_gordan_exact(k).to_double());
  std::vector<std::thread> pool;
  std::vector<int> mismatches(4, 0);
  for (int t = 0; t < 4; ++t)
    pool.emplace_back([&, t] {
      for (std::size_t i = 0; i < keys.size(); ++i)
        if (clebsch_gordan(keys[i]) != serial[i]) ++mismatches[t];
    });
  for (auto& th : pool) th.join();
  for (int mm : mismatches) CHECK(mm == 0);
}

TEST_CASE("cg_block reproduces pointwise coefficients") {
  const CGBlock blk = cg_block(3, 2, 3);
  for (int r1 = 0; r1 <= 3; ++r1)
    for (int r2 = 0; r2 <= 2; ++r2) {
      const int ti = 2 * r1 - 3, tj = 2 * r2 - 2;
      const double expect = std::abs(ti + tj) <= 3 ? clebsch_gordan2(3, ti, 2, tj, 3, ti + tj) : 0.0;
      CHECK(blk(r1, r2) == expect);
    }
}
