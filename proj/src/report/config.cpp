#include "cwb/report/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <yaml-cpp/yaml.h>

#include "cwb/curve/polynomial.hpp"

namespace cwb::report {

std::string to_string(Suite s) {
  switch (s) {
    case Suite::lattice: return "lattice";
    case Suite::groupring: return "groupring";
    case Suite::periods: return "periods";
    case Suite::abel_jacobi: return "abel_jacobi";
    case Suite::iterated: return "iterated";
    case Suite::main: return "main";
  }
  return "?";
}

const std::vector<Suite>& all_suites() {
  static const std::vector<Suite> s{Suite::lattice, Suite::groupring, Suite::periods,
                                    Suite::abel_jacobi, Suite::iterated, Suite::main};
  return s;
}

Suite parse_suite(const std::string& name) {
  for (Suite s : all_suites())
    if (to_string(s) == name) return s;
  throw InvalidArgument("unknown suite '" + name + "' (lattice, groupring, periods, abel_jacobi, iterated, main)");
}

RunConfig default_config() {
  RunConfig c;
  c.curves.push_back({"fermat5", "x^5 - 1", {"2", 1}, {"3", 1}, {"-2", 1}, 2});
  c.curves.push_back({"consecutive5", "x*(x-1)*(x-2)*(x-3)*(x-4)", {"1/2", 1}, {"7/2", 1}, {"-1", 1}, 2});
  c.suites = {all_suites().begin(), all_suites().end()};
  return c;
}

namespace {

int parse_sign(const YAML::Node& n) {
  const std::string s = n.as<std::string>();
  if (s == "+" || s == "1" || s == "+1") return 1;
  if (s == "-" || s == "-1") return -1;
  throw InvalidArgument("sheet sign must be + or -, got '" + s + "'");
}

PointSpec parse_point(const YAML::Node& n, const PointSpec& fallback) {
  if (!n) return fallback;
  if (n.IsSequence() && n.size() == 2) return {n[0].as<std::string>(), parse_sign(n[1])};
  if (n.IsMap()) return {n["x"].as<std::string>(), n["sheet"] ? parse_sign(n["sheet"]) : 1};
  throw InvalidArgument("a point is [x, sign] or {x: ..., sheet: ...}");
}

std::vector<int> int_list(const YAML::Node& n, std::vector<int> fallback) {
  if (!n) return fallback;
  std::vector<int> out;
  for (const auto& v : n) out.push_back(v.as<int>());
  return out;
}

long double parse_ld(const YAML::Node& n) {
  const std::string s = n.as<std::string>();
  std::size_t used = 0;
  const long double v = std::stold(s, &used);
  if (used != s.size()) throw InvalidArgument("not a number: '" + s + "'");
  return v;
}

}  // namespace

RunConfig parse_config(const std::string& yaml_text) {
  RunConfig c = default_config();
  YAML::Node root;
  try {
    root = YAML::Load(yaml_text);
  } catch (const YAML::Exception& e) {
    throw InvalidArgument(std::string("config parse error: ") + e.what());
  }
  if (!root || root.IsNull()) return c;
  try {
    if (root["seed"]) c.seed = root["seed"].as<std::uint64_t>();
    if (auto prec = root["precision"]) {
      if (prec["tolerance"]) c.tolerance = parse_ld(prec["tolerance"]);
      if (prec["kronrod_points"]) c.kronrod_points = prec["kronrod_points"].as<int>();
      if (prec["kaenders_tolerance"]) c.kaenders_tolerance = parse_ld(prec["kaenders_tolerance"]);
    }
    if (root["cache_dir"]) c.cache_dir = root["cache_dir"].as<std::string>();
    if (auto s = root["suites"]) {
      c.suites.clear();
      for (const auto& v : s) c.suites.insert(parse_suite(v.as<std::string>()));
    }
    if (root["lattice"]) c.lattice_genera = int_list(root["lattice"]["genera"], c.lattice_genera);
    if (root["groupring"]) c.groupring_genera = int_list(root["groupring"]["genera"], c.groupring_genera);
    if (auto curves = root["curves"]) {
      c.curves.clear();
      int k = 0;
      for (const auto& n : curves) {
        CurveConfig cc;
        cc.polynomial = n["polynomial"].as<std::string>();
        cc.label = n["label"] ? n["label"].as<std::string>() : "curve" + std::to_string(k);
        cc.p = parse_point(n["p"], cc.p);
        cc.q = parse_point(n["q"], cc.q);
        cc.b = parse_point(n["b"], cc.b);
        if (n["genus"]) cc.genus = n["genus"].as<int>();
        c.curves.push_back(cc);
        ++k;
      }
    }
  } catch (const YAML::Exception& e) {
    throw InvalidArgument(std::string("config error: ") + e.what());
  }
  return c;
}

RunConfig load_config(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw InvalidArgument("cannot read config file " + file.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

void apply_environment(RunConfig& config) {
  if (const char* dir = std::getenv("CWB_CACHE_DIR"); dir && *dir) config.cache_dir = dir;
}

void validate(const RunConfig& config) {
  if (!(config.tolerance > 0)) throw InvalidArgument("tolerance must be positive");
  if (!(config.kaenders_tolerance > 0)) throw InvalidArgument("kaenders tolerance must be positive");
  if (config.kronrod_points != 31 && config.kronrod_points != 61)
    throw InvalidArgument("kronrod_points must be 31 or 61");
  for (int g : config.lattice_genera)
    if (g < 2) throw InvalidArgument("lattice genera must be >= 2");
  for (int g : config.groupring_genera)
    if (g < 1) throw InvalidArgument("groupring genera must be >= 1");
  for (const auto& c : config.curves) {
    const auto f = curve::ExactPolynomial::parse(c.polynomial);
    if (f.degree() < 5) throw InvalidArgument("curve " + c.label + ": degree must be at least 5");
    const int g = (f.degree() - 1) / 2;
    if (c.genus && *c.genus != g)
      throw InvalidArgument("curve " + c.label + ": genus override " + std::to_string(*c.genus) +
                            " does not match degree " + std::to_string(f.degree()));
    for (const auto* p : {&c.p, &c.q, &c.b}) {
      const auto x = curve::ExactPolynomial::parse(p->x);
      if (x.degree() > 0) throw InvalidArgument("curve " + c.label + ": point coordinate '" + p->x + "' is not a constant");
    }
  }
}

curve::SheetPoint resolve_point(const curve::Curve& c, const PointSpec& p, const std::string& name) {
  const auto xe = curve::ExactPolynomial::parse(p.x);
  const cplx x = xe.is_zero() ? cplx(0) : xe.coefficients()[0].to_complex();
  const auto pt = c.point(x, p.sign);
  if (pt.is_branch() || c.branch_distance(pt.x) < c.clearance())
    throw InvalidArgument("point " + name + " = " + p.x + " is (too close to) a branch point");
  return pt;
}

nlohmann::json RunConfig::to_json() const {
  auto cj = nlohmann::json::array();
  auto pj = [](const PointSpec& p) { return nlohmann::json::array({p.x, p.sign > 0 ? "+" : "-"}); };
  for (const auto& c : curves) {
    nlohmann::json j{{"label", c.label}, {"polynomial", c.polynomial}, {"p", pj(c.p)}, {"q", pj(c.q)}, {"b", pj(c.b)}};
    if (c.genus) j["genus"] = *c.genus;
    cj.push_back(j);
  }
  auto sj = nlohmann::json::array();
  for (Suite s : all_suites())
    if (suites.count(s)) sj.push_back(to_string(s));
  std::ostringstream tol, ktol;
  tol << tolerance;
  ktol << kaenders_tolerance;
  return {{"curves", cj},
          {"lattice_genera", lattice_genera},
          {"groupring_genera", groupring_genera},
          {"tolerance", tol.str()},
          {"kronrod_points", kronrod_points},
          {"kaenders_tolerance", ktol.str()},
          {"suites", sj},
          {"seed", seed}};
}

}  // namespace cwb::report
