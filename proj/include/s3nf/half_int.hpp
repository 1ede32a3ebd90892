#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace s3nf {

/// Spin or weight label j stored as the integer 2j.
struct HalfInt {
  int twice = 0;

  constexpr HalfInt() = default;
  constexpr explicit HalfInt(int doubled) : twice(doubled) {}

  static constexpr HalfInt from_int(int v) { return HalfInt(2 * v); }
  static constexpr HalfInt from_twice(int t) { return HalfInt(t); }

  constexpr bool is_integer() const { return (twice & 1) == 0; }
  constexpr double value() const { return 0.5 * twice; }

  constexpr HalfInt operator-() const { return HalfInt(-twice); }
  constexpr HalfInt operator+(HalfInt o) const { return HalfInt(twice + o.twice); }
  constexpr HalfInt operator-(HalfInt o) const { return HalfInt(twice - o.twice); }
  constexpr HalfInt& operator+=(HalfInt o) { twice += o.twice; return *this; }
  constexpr HalfInt& operator-=(HalfInt o) { twice -= o.twice; return *this; }

  constexpr auto operator<=>(const HalfInt&) const = default;

  /// Integer value; only meaningful when is_integer().
  int as_int() const;
  std::string str() const;
};

/// (j - m) is an integer, i.e. both labels have the same doubled parity.
constexpr bool same_parity(HalfInt a, HalfInt b) { return ((a.twice - b.twice) & 1) == 0; }

/// Row/column position of weight i inside a degree-m block ordered -m/2..m/2.
constexpr int weight_index(int m, HalfInt i) { return (i.twice + m) / 2; }
constexpr HalfInt index_weight(int m, int r) { return HalfInt(2 * r - m); }

}  // namespace s3nf
