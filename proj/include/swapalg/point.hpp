#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace swapalg {

/// A point of a finite cyclic subset of the circle.
///
/// Points are identified by an integer position; the anticlockwise cyclic order of the circle
/// is the order of positions (the basepoint sits just before the smallest position). The
/// declared points a_1..a_r occupy positions k * kGap. Fresh auxiliary points live strictly
/// inside the gap after a_k, so the point set can be enlarged without renumbering.
class Point {
 public:
  static constexpr std::int32_t kGap = 1 << 12;
  static constexpr std::int32_t kSlot = 1 << 4;
  static constexpr int kMaxSlot = kGap / kSlot - 1;

  constexpr Point() = default;

  /// The declared point a_index (index >= 1).
  static Point main(int index);
  /// The slot-th auxiliary point in the gap after a_after (1 <= slot <= kMaxSlot).
  static Point aux(int after, int slot);
  /// A side marker strictly between this point and the next possible auxiliary point.
  /// Markers only feed linking numbers; they never appear in polynomials.
  Point marker_after() const { return Point(position_ + 1); }
  Point marker_before() const { return Point(position_ - 1); }

  constexpr std::int32_t position() const { return position_; }
  bool is_main() const { return position_ % kGap == 0; }
  bool is_aux() const { return !is_main() && position_ % kSlot == 0; }
  bool is_marker() const { return position_ % kSlot != 0; }
  /// Index k of the declared point a_k at or immediately before this point.
  int gap_index() const { return position_ / kGap; }
  int slot() const { return (position_ % kGap) / kSlot; }

  /// "a3" for declared points, "a3_1" for auxiliary ones.
  std::string name() const;

  /// Inverse of name(); std::nullopt if the text is not a point name.
  static std::optional<Point> from_name(std::string_view text);

  constexpr auto operator<=>(const Point&) const = default;

 private:
  constexpr explicit Point(std::int32_t position) : position_(position) {}

  std::int32_t position_ = 0;
};

/// An ordered pair xy of points: the generator of Z(P) with x in the vector slot
/// and y in the covector slot. Ordered lexicographically by (left, right).
struct PairGen {
  Point left;
  Point right;

  constexpr auto operator<=>(const PairGen&) const = default;
  std::string name() const { return left.name() + "." + right.name(); }
};

/// The declared points a_1..a_r, optionally enlarged by auxiliary points.
class PointSet {
 public:
  explicit PointSet(int r);
  PointSet(int r, std::vector<Point> aux);

  int r() const { return r_; }
  /// All points in anticlockwise order.
  const std::vector<Point>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  bool contains(Point p) const;

  /// The set with extra points added (duplicates ignored).
  PointSet enlarged(const std::vector<Point>& extra) const;

  /// Resolves a point name against this set; throws InvalidInput for unknown names.
  Point resolve(std::string_view name) const;

  bool operator==(const PointSet&) const = default;

 private:
  int r_;
  std::vector<Point> points_;
};

}  // namespace swapalg

template <>
struct std::hash<swapalg::Point> {
  std::size_t operator()(const swapalg::Point& p) const noexcept {
    return std::hash<std::int32_t>{}(p.position());
  }
};

template <>
struct std::hash<swapalg::PairGen> {
  std::size_t operator()(const swapalg::PairGen& g) const noexcept {
    auto l = static_cast<std::uint64_t>(static_cast<std::uint32_t>(g.left.position()));
    auto r = static_cast<std::uint64_t>(static_cast<std::uint32_t>(g.right.position()));
    return std::hash<std::uint64_t>{}((l << 32U) | r);
  }
};
