#include "swapalg/circle.hpp"

#include <algorithm>
#include <vector>

#include "swapalg/errors.hpp"

namespace swapalg {

HalfInt HalfInt::from_doubled(int doubled) {
  if (doubled < -2 || doubled > 2) throw InvalidInput("half-integer out of range: " + std::to_string(doubled) + "/2");
  return HalfInt(doubled);
}

std::string HalfInt::str() const {
  if (doubled_ % 2 == 0) return std::to_string(doubled_ / 2);
  return std::to_string(doubled_) + "/2";
}

int sign(const Rational& a) { return sgn(a); }

HalfInt linking_number_at(std::int64_t r, std::int64_t x, std::int64_t s, std::int64_t y) {
  int first = sign(r - x) * sign(r - y) * sign(y - x);
  int second = sign(r - x) * sign(r - s) * sign(s - x);
  return HalfInt::from_doubled(first - second);
}

HalfInt linking_number(Point r, Point x, Point s, Point y) {
  return linking_number_at(r.position(), x.position(), s.position(), y.position());
}

bool cyclically_ordered(std::span<const Point> points) {
  std::vector<Point> seq(points.begin(), points.end());
  if (seq.empty()) return true;
  auto lowest = std::min_element(seq.begin(), seq.end());
  std::rotate(seq.begin(), lowest, seq.end());
  return std::adjacent_find(seq.begin(), seq.end(), [](Point a, Point b) { return !(a < b); }) == seq.end();
}

HalfInt parallel_number(Point i, Point j, Point ip, Point jp) {
  if (i == j || ip == jp) throw PreconditionError("parallel number needs two proper chords");
  if (cyclically_ordered({i, ip, jp, j})) return HalfInt::from_doubled(2);
  if (cyclically_ordered({ip, i, j, jp})) return HalfInt::from_doubled(-2);
  if ((i == ip && cyclically_ordered({i, jp, j})) || (jp == j && cyclically_ordered({i, ip, jp}))) {
    return HalfInt::from_doubled(1);
  }
  if ((ip == i && cyclically_ordered({ip, j, jp})) || (j == jp && cyclically_ordered({ip, i, j}))) {
    return HalfInt::from_doubled(-1);
  }
  return HalfInt{};
}

}  // namespace swapalg
