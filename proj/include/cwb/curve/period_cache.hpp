#pragma once

#include <filesystem>
#include <string>

#include "cwb/curve/periods.hpp"

namespace cwb::curve {

inline constexpr int period_cache_version = 1;

enum class CacheOutcome { hit, miss, corrupted, version_mismatch, disabled };

std::string to_string(CacheOutcome o);

struct CacheLookup {
  PeriodData data;
  CacheOutcome outcome;
  std::filesystem::path file;
  std::string warning;  // set when a cache file existed but could not be used
};

std::string sha256_hex(const std::string& text);

// One JSON file per (polynomial, quadrature, basis construction) key. Loading re-derives
// everything from the stored lasso integrals, so a hit reproduces a fresh run bit for bit.
class PeriodCache {
 public:
  explicit PeriodCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  // Empty directory disables caching.
  static PeriodCache disabled() { return PeriodCache({}); }
  bool enabled() const { return !dir_.empty(); }

  CacheLookup get(const HomologyBasis& basis, const QuadratureOptions& q) const;
  std::filesystem::path file_for(const HomologyBasis& basis, const QuadratureOptions& q) const;

  static nlohmann::json serialize(const PeriodData& pd);
  // Throws NumericalError when the record is malformed or its hash does not match.
  static PeriodData deserialize(const nlohmann::json& j, const HomologyBasis& basis, const QuadratureOptions& q);

 private:
  std::filesystem::path dir_;
};

}  // namespace cwb::curve
