#pragma once

#include <string>
#include <vector>

#include "swapalg/rank.hpp"

namespace swapalg::testing {

inline Point A(int k) { return Point::main(k); }
inline PairPoly G(int i, int j) { return gen(Point::main(i), Point::main(j)); }
inline std::vector<Point> pts(std::initializer_list<int> ks) {
  std::vector<Point> out;
  for (int k : ks) out.push_back(Point::main(k));
  return out;
}
inline std::string data_path(const std::string& name) { return std::string(SWAPALG_TEST_DATA) + "/" + name; }

}  // namespace swapalg::testing
