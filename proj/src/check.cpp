#include "cwb/check.hpp"

namespace cwb {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skip: return "skip";
  }
  return "skip";
}

CheckResult make_check(std::string id, std::optional<int> genus, bool ok,
                       nlohmann::json witness, std::string subject) {
  CheckResult r;
  r.check_id = std::move(id);
  r.genus = genus;
  r.subject = std::move(subject);
  r.status = ok ? Status::pass : Status::fail;
  r.witness = std::move(witness);
  return r;
}

}  // namespace cwb
