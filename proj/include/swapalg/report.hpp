#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "swapalg/rank.hpp"

namespace swapalg {

struct ReportItem {
  std::string key;
  /// A certificate verdict ("ProvedZero", "ProbablyZero", "NonZero") or "Exact" / "Mismatch"
  /// for exact structural checks.
  std::string verdict;
  /// "exact", "reduction" or "oracle".
  std::string method;
  int trials = 0;
  /// Number of individual identities aggregated into this item.
  std::size_t checked = 1;
  bool pass = true;
  std::string detail;
  double elapsed_ms = 0;
};

ReportItem item_from_certificate(std::string key, const ZeroCertificate& cert, bool expect_zero = true);

struct Report {
  std::string task;
  nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
  std::vector<ReportItem> items;

  bool pass() const;
  /// Sorts items by key; reports are canonical regardless of execution order.
  void canonicalize();
  /// Timings are omitted unless requested so that reports are byte-identical across runs.
  nlohmann::ordered_json to_json(bool timings = false) const;
  std::string to_text(bool timings = false) const;
};

}  // namespace swapalg
