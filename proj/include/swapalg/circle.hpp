#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>

#include "swapalg/point.hpp"
#include "swapalg/scalar.hpp"

namespace swapalg {

/// A value in {0, +-1/2, +-1}, stored doubled.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  static HalfInt from_doubled(int doubled);

  constexpr int doubled() const { return doubled_; }
  Rational value() const {
    Rational q(doubled_, 2);
    q.canonicalize();
    return q;
  }
  bool is_zero() const { return doubled_ == 0; }
  constexpr HalfInt operator-() const { return HalfInt(-doubled_); }

  std::string str() const;

  constexpr auto operator<=>(const HalfInt&) const = default;

 private:
  constexpr explicit HalfInt(int doubled) : doubled_(doubled) {}
  int doubled_ = 0;
};

/// Sign function: -1, 0, 1 for negative, zero, positive.
int sign(const Rational& a);
constexpr int sign(std::int64_t a) { return (a > 0) - (a < 0); }

/// Linking number J(rx, sy) of two chords, from explicit coordinates sigma(.) of the four
/// endpoints on the circle cut open at a basepoint.
HalfInt linking_number_at(std::int64_t r, std::int64_t x, std::int64_t s, std::int64_t y);

/// Linking number with sigma given by point positions (basepoint before the first point).
HalfInt linking_number(Point r, Point x, Point s, Point y);
inline HalfInt linking_number(const PairGen& a, const PairGen& b) {
  return linking_number(a.left, a.right, b.left, b.right);
}

/// True iff the points are pairwise distinct and appear in this anticlockwise cyclic order.
bool cyclically_ordered(std::span<const Point> points);
inline bool cyclically_ordered(std::initializer_list<Point> points) {
  return cyclically_ordered(std::span<const Point>(points.begin(), points.size()));
}

/// Parallel number s_||(a_i a_j, a_i' a_j'); requires i != j and ip != jp.
HalfInt parallel_number(Point i, Point j, Point ip, Point jp);

}  // namespace swapalg
