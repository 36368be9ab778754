#pragma once

#include <string>
#include <vector>

#include "cwb/check.hpp"
#include "cwb/report/config.hpp"

namespace cwb::report {

inline constexpr int report_schema_version = 1;

struct ReportEntry {
  CheckResult result;
  std::string anchor;
};

class Report {
 public:
  void add(CheckResult r);
  void warn(std::string message) { warnings_.push_back(std::move(message)); }
  void note_cache(nlohmann::json record) { cache_.push_back(std::move(record)); }

  const std::vector<ReportEntry>& entries() const { return entries_; }
  const std::vector<std::string>& warnings() const { return warnings_; }
  std::size_t count(Status s) const;
  bool failed() const { return count(Status::fail) > 0; }

  // Everything except the "runtime" block is a pure function of the config and seed.
  nlohmann::json document(const RunConfig& config) const;
  nlohmann::json deterministic_document(const RunConfig& config) const;
  std::string text() const;

 private:
  std::vector<ReportEntry> entries_;
  std::vector<std::string> warnings_;
  std::vector<nlohmann::json> cache_;
};

}  // namespace cwb::report
