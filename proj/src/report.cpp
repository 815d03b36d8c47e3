#include "swapalg/report.hpp"

#include <algorithm>
#include <cstdio>

namespace swapalg {

ReportItem item_from_certificate(std::string key, const ZeroCertificate& cert, bool expect_zero) {
  ReportItem item;
  item.key = std::move(key);
  item.verdict = to_string(cert.verdict);
  item.method = cert.method;
  item.trials = cert.trials;
  item.pass = cert.is_zero() == expect_zero;
  if (cert.verdict == Verdict::NonZero && cert.witness_seed) {
    item.detail = "witness seed " + std::to_string(*cert.witness_seed) + ", value " + std::to_string(*cert.witness_value);
  }
  return item;
}

bool Report::pass() const {
  return std::all_of(items.begin(), items.end(), [](const ReportItem& i) { return i.pass; });
}

void Report::canonicalize() {
  std::stable_sort(items.begin(), items.end(), [](const ReportItem& a, const ReportItem& b) { return a.key < b.key; });
}

nlohmann::ordered_json Report::to_json(bool timings) const {
  nlohmann::ordered_json out;
  out["task"] = task;
  out["parameters"] = parameters;
  auto list = nlohmann::ordered_json::array();
  for (const auto& i : items) {
    nlohmann::ordered_json j;
    j["key"] = i.key;
    j["verdict"] = i.verdict;
    j["method"] = i.method;
    j["trials"] = i.trials;
    j["checked"] = i.checked;
    j["pass"] = i.pass;
    if (!i.detail.empty()) j["detail"] = i.detail;
    if (timings) j["elapsed_ms"] = i.elapsed_ms;
    list.push_back(std::move(j));
  }
  out["items"] = std::move(list);
  out["pass"] = pass();
  return out;
}

std::string Report::to_text(bool timings) const {
  std::string out = task + " " + parameters.dump() + "\n";
  std::size_t checked = 0;
  for (const auto& i : items) {
    checked += i.checked;
    out += "  " + std::string(i.pass ? "ok  " : "FAIL") + " " + i.key + "  " + i.verdict + " (" + i.method;
    if (i.trials > 0) out += ", " + std::to_string(i.trials) + " trials";
    if (i.checked > 1) out += ", " + std::to_string(i.checked) + " checked";
    out += ")";
    if (timings) {
      char buf[32];
      std::snprintf(buf, sizeof buf, " %.1f ms", i.elapsed_ms);
      out += buf;
    }
    if (!i.detail.empty()) out += "  " + i.detail;
    out += "\n";
  }
  out += std::string(pass() ? "PASS" : "FAIL") + ": " + std::to_string(items.size()) + " items, " +
         std::to_string(checked) + " identities\n";
  return out;
}

}  // namespace swapalg
