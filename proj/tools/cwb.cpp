// cwb: verification harness for the hyperelliptic cycle-class computations.

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>

#include <CLI11.hpp>

#include "cwb/report/registry.hpp"
#include "cwb/report/suites.hpp"

using namespace cwb;

namespace {

struct Globals {
  std::string config_file;
  int precision = 0;
  double tolerance = 0;
  std::string cache_dir;
  std::optional<std::uint64_t> seed;
  std::string json_out;
};

report::RunConfig make_config(const Globals& o) {
  report::RunConfig c = o.config_file.empty() ? report::default_config() : report::load_config(o.config_file);
  report::apply_environment(c);
  if (!o.cache_dir.empty()) c.cache_dir = o.cache_dir;
  if (o.precision > 0) c.tolerance = std::pow(10.0L, -static_cast<long double>(o.precision));
  if (o.tolerance > 0) c.tolerance = o.tolerance;
  if (o.seed) c.seed = *o.seed;
  return c;
}

int emit(const report::Report& r, const report::RunConfig& c, const Globals& o) {
  std::cout << r.text();
  if (!o.json_out.empty()) {
    std::ofstream out(o.json_out);
    out << r.document(c).dump(2) << '\n';
    if (!out) {
      std::cerr << "cannot write " << o.json_out << "\n";
      return 2;
    }
  }
  return r.failed() ? 1 : 0;
}

void print_periods(const report::RunConfig& c) {
  report::Report scratch;
  for (const auto& cc : c.curves) {
    auto ctx = report::prepare_curve(c, cc, scratch, false);
    const auto& pd = *ctx->periods;
    std::cout << cc.label << ": y^2 = " << ctx->curve->text() << ", g = " << pd.genus() << "\n"
              << "  basis: " << pd.basis.describe() << "\n"
              << "  cond(A) = " << static_cast<double>(pd.condition_A)
              << ", error estimate = " << static_cast<double>(pd.error_estimate) << "\n  Z =\n";
    std::cout << std::setprecision(15);
    for (int i = 0; i < pd.genus(); ++i) {
      std::cout << "   ";
      for (int j = 0; j < pd.genus(); ++j)
        std::cout << "  (" << static_cast<double>(pd.Z(i, j).real()) << ", " << static_cast<double>(pd.Z(i, j).imag()) << ")";
      std::cout << "\n";
    }
  }
  for (const auto& w : scratch.warnings()) std::cerr << "warning: " << w << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cwb - cycle class and period verification for hyperelliptic curves"};
  Globals o;
  app.add_option("--config", o.config_file, "YAML run configuration")->check(CLI::ExistingFile);
  app.add_option("--precision", o.precision, "quadrature target in decimal digits (tolerance 10^-N)")
      ->check(CLI::Range(1, 18));
  app.add_option("--tolerance", o.tolerance, "quadrature tolerance (overrides --precision)")
      ->check(CLI::PositiveNumber);
  app.add_option("--cache-dir", o.cache_dir, "period cache directory (env CWB_CACHE_DIR)");
  app.add_option("--seed", o.seed, "seed for randomized trials");
  app.add_option("--json-out", o.json_out, "write the JSON report here");
  app.require_subcommand(1);

  using report::Suite;
  struct Cmd {
    const char* name;
    const char* help;
    std::vector<Suite> suites;
  };
  const std::vector<Cmd> cmds{
      {"periods", "period matrices, period and Abel-Jacobi suites", {Suite::periods, Suite::abel_jacobi}},
      {"verify-lattice", "exact lattice suite", {Suite::lattice}},
      {"verify-groupring", "exact group-ring suite", {Suite::groupring}},
      {"verify-kaenders", "iterated-integral suite and the higher period relation", {Suite::iterated}},
      {"verify-main", "Abel-Jacobi arithmetic of the main theorem and the residues", {Suite::main}},
      {"verify-all", "every suite selected in the config", {}},
  };
  std::vector<std::pair<CLI::App*, const Cmd*>> subs;
  for (const auto& c : cmds) subs.emplace_back(app.add_subcommand(c.name, c.help), &c);

  std::string check_id;
  auto* explain = app.add_subcommand("explain", "describe a check id");
  explain->add_option("check_id", check_id, "check id, e.g. thm_main2.kaenders")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*explain) {
      std::cout << report::explain(check_id);
      return 0;
    }
    report::RunConfig config = make_config(o);
    for (const auto& [sub, cmd] : subs) {
      if (!*sub) continue;
      if (!cmd->suites.empty()) config.suites = {cmd->suites.begin(), cmd->suites.end()};
      report::validate(config);
      if (std::string(cmd->name) == "periods") print_periods(config);
      const auto r = report::run_suites(config, &std::cerr);
      return emit(r, config, o);
    }
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
