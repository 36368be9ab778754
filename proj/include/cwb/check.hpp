#pragma once

#include <optional>
#include <string>

#include <json.hpp>

namespace cwb {

enum class Status { pass, fail, skip };

std::string to_string(Status s);

/// One verified statement, as it appears in the report stream.
struct CheckResult {
  std::string check_id;
  std::optional<int> genus;
  std::string subject;  // curve label or empty for curve-free checks
  Status status = Status::skip;
  nlohmann::json witness = nlohmann::json::object();
  double seconds = 0.0;

  bool passed() const { return status == Status::pass; }
};

CheckResult make_check(std::string id, std::optional<int> genus, bool ok,
                       nlohmann::json witness, std::string subject = {});

}  // namespace cwb
