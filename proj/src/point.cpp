#include "swapalg/point.hpp"

#include <algorithm>
#include <charconv>

#include "swapalg/errors.hpp"

namespace swapalg {

Point Point::main(int index) {
  if (index < 1 || index >= (1 << 18)) throw InvalidInput("point index out of range: " + std::to_string(index));
  return Point(index * kGap);
}

Point Point::aux(int after, int slot) {
  if (after < 0 || after >= (1 << 18)) throw InvalidInput("aux gap index out of range: " + std::to_string(after));
  if (slot < 1 || slot > kMaxSlot) throw InvalidInput("aux slot out of range: " + std::to_string(slot));
  return Point(after * kGap + slot * kSlot);
}

std::string Point::name() const {
  if (is_main()) return "a" + std::to_string(gap_index());
  if (is_aux()) return "a" + std::to_string(gap_index()) + "_" + std::to_string(slot());
  return "@" + std::to_string(position_);
}

namespace {

std::optional<int> parse_uint(std::string_view s) {
  if (s.empty()) return std::nullopt;
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

}  // namespace

std::optional<Point> Point::from_name(std::string_view text) {
  if (text.size() < 2 || text.front() != 'a') return std::nullopt;
  text.remove_prefix(1);
  auto underscore = text.find('_');
  try {
    if (underscore == std::string_view::npos) {
      auto k = parse_uint(text);
      if (!k || *k < 1) return std::nullopt;
      return Point::main(*k);
    }
    auto k = parse_uint(text.substr(0, underscore));
    auto m = parse_uint(text.substr(underscore + 1));
    if (!k || !m) return std::nullopt;
    return Point::aux(*k, *m);
  } catch (const InvalidInput&) {
    return std::nullopt;
  }
}

PointSet::PointSet(int r) : PointSet(r, {}) {}

PointSet::PointSet(int r, std::vector<Point> aux) : r_(r) {
  if (r < 1) throw InvalidInput("a point set needs at least one point");
  points_.reserve(static_cast<std::size_t>(r) + aux.size());
  for (int k = 1; k <= r; ++k) points_.push_back(Point::main(k));
  for (Point p : aux) {
    if (p.is_marker()) throw InvalidInput("side markers cannot be members of a point set");
    if (p.gap_index() > r) throw InvalidInput("auxiliary point " + p.name() + " lies outside the circle of " + std::to_string(r) + " points");
    points_.push_back(p);
  }
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

bool PointSet::contains(Point p) const { return std::binary_search(points_.begin(), points_.end(), p); }

PointSet PointSet::enlarged(const std::vector<Point>& extra) const {
  std::vector<Point> aux;
  for (Point p : points_) {
    if (!p.is_main()) aux.push_back(p);
  }
  aux.insert(aux.end(), extra.begin(), extra.end());
  return PointSet(r_, std::move(aux));
}

Point PointSet::resolve(std::string_view name) const {
  auto p = Point::from_name(name);
  if (!p || !contains(*p)) {
    // Auxiliary points of a declared gap are always admissible; they enlarge the set.
    if (p && p->is_aux() && p->gap_index() >= 1 && p->gap_index() <= r_) return *p;
    throw InvalidInput("unknown point '" + std::string(name) + "'");
  }
  return *p;
}

}  // namespace swapalg
