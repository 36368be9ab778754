#pragma once

#include <iosfwd>
#include <memory>

#include "cwb/curve/period_cache.hpp"
#include "cwb/report/report.hpp"

namespace cwb::report {

// Everything the numeric suites need for one configured curve.
struct CurveContext {
  CurveConfig config;
  curve::CurvePtr curve;
  std::unique_ptr<curve::HomologyBasis> basis;
  std::unique_ptr<curve::PeriodData> periods;
  std::unique_ptr<curve::PeriodData> refined;  // tighter tolerance, other Kronrod rule
  curve::SheetPoint p, q, b;
};

curve::QuadratureOptions quadrature_options(const RunConfig& config);
curve::QuadratureOptions refined_options(const RunConfig& config);

// Builds the curve and its periods (through the cache). Failures become report entries.
std::unique_ptr<CurveContext> prepare_curve(const RunConfig& config, const CurveConfig& cc, Report& report,
                                            bool want_refined);

// Runs the selected suites in dependency order; `log` receives one line per finished check.
Report run_suites(const RunConfig& config, std::ostream* log = nullptr);

}  // namespace cwb::report
