#include "cwb/curve/period_cache.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include <openssl/evp.h>

namespace cwb::curve {

std::string to_string(CacheOutcome o) {
  switch (o) {
    case CacheOutcome::hit: return "hit";
    case CacheOutcome::miss: return "miss";
    case CacheOutcome::corrupted: return "corrupted";
    case CacheOutcome::version_mismatch: return "version_mismatch";
    case CacheOutcome::disabled: return "disabled";
  }
  return "?";
}

std::string sha256_hex(const std::string& text) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(text.data(), text.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw NumericalError("sha256 failed");
  std::ostringstream os;
  for (unsigned i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return os.str();
}

namespace {

std::string dec(real v) {
  std::ostringstream os;
  os << std::setprecision(21) << v;
  return os.str();
}

real parse_real(const nlohmann::json& j) {
  const std::string s = j.get<std::string>();
  std::size_t used = 0;
  const real v = std::stold(s, &used);
  if (used != s.size()) throw NumericalError("bad decimal '" + s + "'");
  return v;
}

nlohmann::json key_fields(const HomologyBasis& basis, const QuadratureOptions& q) {
  auto coeffs = nlohmann::json::array();
  for (const auto& c : basis.curve()->polynomial().coefficients()) coeffs.push_back(c.str());
  return {{"polynomial", basis.curve()->text()},
          {"coefficients", coeffs},
          {"tolerance", dec(q.tolerance)},
          {"kronrod_points", q.kronrod_points},
          {"max_depth", q.max_depth},
          {"clearance_factor", dec(basis.curve()->options().clearance_factor)},
          {"basis", basis.describe()}};
}

nlohmann::json matrix_json(const CMatrix& m) {
  auto out = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    auto row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back({dec(m(i, j).real()), dec(m(i, j).imag())});
    out.push_back(row);
  }
  return out;
}

CMatrix matrix_from(const nlohmann::json& j, Eigen::Index rows, Eigen::Index cols) {
  if (!j.is_array() || static_cast<Eigen::Index>(j.size()) != rows) throw NumericalError("bad matrix shape");
  CMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    if (static_cast<Eigen::Index>(j[i].size()) != cols) throw NumericalError("bad matrix shape");
    for (Eigen::Index k = 0; k < cols; ++k) m(i, k) = cplx(parse_real(j[i][k][0]), parse_real(j[i][k][1]));
  }
  return m;
}

}  // namespace

nlohmann::json PeriodCache::serialize(const PeriodData& pd) {
  nlohmann::json j = key_fields(pd.basis, pd.quadrature);
  j["version"] = period_cache_version;
  j["genus"] = pd.genus();
  j["lasso_integrals"] = matrix_json(pd.lasso);
  j["raw_periods"] = matrix_json(pd.raw);
  j["normalized_periods"] = matrix_json(pd.Omega);
  j["error_estimate"] = dec(pd.error_estimate);
  j["hash"] = sha256_hex(j.dump());
  return j;
}

PeriodData PeriodCache::deserialize(const nlohmann::json& j, const HomologyBasis& basis, const QuadratureOptions& q) {
  if (!j.is_object() || !j.contains("hash")) throw NumericalError("cache record has no hash");
  nlohmann::json body = j;
  body.erase("hash");
  if (sha256_hex(body.dump()) != j["hash"].get<std::string>()) throw NumericalError("cache record hash mismatch");
  const auto key = key_fields(basis, q);
  for (const auto& [k, v] : key.items())
    if (!j.contains(k) || j[k] != v) throw NumericalError("cache record parameter mismatch: " + k);
  const int g = basis.genus();
  const auto nb = static_cast<Eigen::Index>(basis.curve()->branch_points().size());
  const CMatrix lasso = matrix_from(j.at("lasso_integrals"), g, nb);
  return assemble_periods(basis, q, lasso, parse_real(j.at("error_estimate")));
}

std::filesystem::path PeriodCache::file_for(const HomologyBasis& basis, const QuadratureOptions& q) const {
  return dir_ / ("periods-" + sha256_hex(key_fields(basis, q).dump()).substr(0, 24) + ".json");
}

CacheLookup PeriodCache::get(const HomologyBasis& basis, const QuadratureOptions& q) const {
  if (!enabled()) return {compute_periods(basis, q), CacheOutcome::disabled, {}, {}};
  const auto file = file_for(basis, q);
  CacheOutcome outcome = CacheOutcome::miss;
  std::string warning;
  if (std::filesystem::exists(file)) {
    try {
      std::ifstream in(file);
      const auto j = nlohmann::json::parse(in);
      if (!j.contains("version") || j["version"] != period_cache_version) {
        outcome = CacheOutcome::version_mismatch;
        warning = "period cache " + file.string() + " has an unsupported version; recomputing";
      } else {
        return {deserialize(j, basis, q), CacheOutcome::hit, file, {}};
      }
    } catch (const std::exception& e) {
      outcome = CacheOutcome::corrupted;
      warning = "period cache " + file.string() + " is unusable (" + e.what() + "); recomputing";
    }
  }
  PeriodData pd = compute_periods(basis, q);
  std::filesystem::create_directories(dir_);
  const auto tmp = file.string() + ".tmp";
  {
    std::ofstream out(tmp);
    out << serialize(pd).dump(1) << '\n';
    if (!out) throw NumericalError("cannot write period cache " + tmp);
  }
  std::filesystem::rename(tmp, file);
  return {pd, outcome, file, warning};
}

}  // namespace cwb::curve
