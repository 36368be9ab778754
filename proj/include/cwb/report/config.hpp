#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "cwb/curve/curve.hpp"

namespace cwb::report {

enum class Suite { lattice, groupring, periods, abel_jacobi, iterated, main };

std::string to_string(Suite s);
Suite parse_suite(const std::string& name);
const std::vector<Suite>& all_suites();  // dependency order

// x as exact text ("2", "1/2", "3/2+i") and the sheet sign.
struct PointSpec {
  std::string x;
  int sign = 1;
};

struct CurveConfig {
  std::string label;
  std::string polynomial;
  PointSpec p{"2", 1}, q{"3", 1}, b{"-2", 1};
  std::optional<int> genus;
};

struct RunConfig {
  std::vector<CurveConfig> curves;
  std::vector<int> lattice_genera{2, 3, 4, 5};
  std::vector<int> groupring_genera{1, 2, 3, 4};
  long double tolerance = 1e-13L;
  int kronrod_points = 61;
  long double kaenders_tolerance = 1e-5L;
  std::set<Suite> suites;
  std::string cache_dir;
  std::uint64_t seed = 20240601;

  nlohmann::json to_json() const;
};

RunConfig default_config();
RunConfig load_config(const std::filesystem::path& file);
RunConfig parse_config(const std::string& yaml_text);
// CWB_CACHE_DIR overrides the configured cache directory.
void apply_environment(RunConfig& config);
void validate(const RunConfig& config);  // throws InvalidArgument

// Resolves a configured point on the curve, rejecting branch points.
curve::SheetPoint resolve_point(const curve::Curve& c, const PointSpec& p, const std::string& name);

}  // namespace cwb::report
