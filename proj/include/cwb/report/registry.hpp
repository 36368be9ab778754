#pragma once

#include <string>
#include <vector>

#include "cwb/report/config.hpp"

namespace cwb::report {

struct CheckInfo {
  std::string id;
  Suite suite;
  std::string anchor;  // label of the statement, or "plumbing"
  std::string statement;
  std::string oracle;  // tolerance and how the expected value is obtained
  bool per_genus = false;  // emitted once per genus rather than once per curve
};

const std::vector<CheckInfo>& registry();
const CheckInfo& find_check(const std::string& id);  // throws InvalidArgument listing valid ids
std::string explain(const std::string& id);

}  // namespace cwb::report
