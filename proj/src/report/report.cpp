#include "cwb/report/report.hpp"

#include <chrono>
#include <ctime>
#include <iomanip>
#include <sstream>

#include "cwb/report/registry.hpp"

namespace cwb::report {

void Report::add(CheckResult r) {
  std::string anchor = "plumbing";
  try {
    anchor = find_check(r.check_id).anchor;
  } catch (const InvalidArgument&) {
  }
  entries_.push_back({std::move(r), std::move(anchor)});
}

std::size_t Report::count(Status s) const {
  std::size_t n = 0;
  for (const auto& e : entries_) n += e.result.status == s;
  return n;
}

nlohmann::json Report::deterministic_document(const RunConfig& config) const {
  auto entries = nlohmann::json::array();
  for (const auto& e : entries_) {
    nlohmann::json j{{"check_id", e.result.check_id},
                     {"anchor", e.anchor},
                     {"subject", e.result.subject},
                     {"status", to_string(e.result.status)},
                     {"witness", e.result.witness}};
    j["genus"] = e.result.genus ? nlohmann::json(*e.result.genus) : nlohmann::json(nullptr);
    entries.push_back(j);
  }
  return {{"schema_version", report_schema_version},
          {"config", config.to_json()},
          {"entries", entries},
          {"summary",
           {{"pass", count(Status::pass)}, {"fail", count(Status::fail)}, {"skip", count(Status::skip)}}}};
}

nlohmann::json Report::document(const RunConfig& config) const {
  nlohmann::json doc = deterministic_document(config);
  auto timings = nlohmann::json::array();
  for (const auto& e : entries_)
    timings.push_back({{"check_id", e.result.check_id}, {"subject", e.result.subject}, {"seconds", e.result.seconds}});
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::ostringstream ts;
  ts << std::put_time(std::gmtime(&now), "%Y-%m-%dT%H:%M:%SZ");
  doc["runtime"] = {{"finished_utc", ts.str()}, {"timings", timings}, {"cache", cache_}, {"warnings", warnings_}};
  return doc;
}

std::string Report::text() const {
  std::ostringstream os;
  for (const auto& e : entries_) {
    const auto& r = e.result;
    os << std::left << std::setw(5) << (r.status == Status::pass ? "ok" : r.status == Status::fail ? "FAIL" : "skip")
       << std::setw(34) << r.check_id << std::setw(6) << (r.genus ? "g=" + std::to_string(*r.genus) : "")
       << std::setw(14) << r.subject << std::fixed << std::setprecision(2) << r.seconds << "s\n";
    if (r.status == Status::fail) os << "      " << r.witness.dump() << "\n";
  }
  for (const auto& w : warnings_) os << "warning: " << w << "\n";
  os << count(Status::pass) << " passed, " << count(Status::fail) << " failed, " << count(Status::skip) << " skipped\n";
  return os.str();
}

}  // namespace cwb::report
