#include "cwb/report/suites.hpp"

#include <chrono>
#include <functional>
#include <ostream>

#include "cwb/curve/intersection.hpp"
#include "cwb/groupring/checks.hpp"
#include "cwb/iterated/checks.hpp"
#include "cwb/lattice/cohomology.hpp"

namespace cwb::report {

namespace {

using Clock = std::chrono::steady_clock;

void log_line(std::ostream* log, const CheckResult& r) {
  if (!log) return;
  *log << (r.passed() ? "ok   " : r.status == Status::fail ? "FAIL " : "skip ") << r.check_id;
  if (r.genus) *log << " g=" << *r.genus;
  if (!r.subject.empty()) *log << " [" << r.subject << "]";
  *log << std::endl;
}

// Runs `body`, timing it and turning exceptions into failing entries for every id it owns.
void run(Report& report, std::ostream* log, const std::vector<std::string>& ids, std::optional<int> genus,
         const std::string& subject, const std::function<std::vector<CheckResult>()>& body) {
  const auto t0 = Clock::now();
  std::vector<CheckResult> results;
  try {
    results = body();
  } catch (const std::exception& e) {
    results.clear();
    for (const auto& id : ids) results.push_back(make_check(id, genus, false, {{"error", e.what()}}, subject));
  }
  const double seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  for (auto& r : results) {
    r.seconds = seconds / static_cast<double>(results.size());
    if (r.subject.empty()) r.subject = subject;
    log_line(log, r);
    report.add(std::move(r));
  }
}

std::vector<CheckResult> one(CheckResult r) { return {std::move(r)}; }

std::uint64_t mix(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

bool same_point(const curve::SheetPoint& a, const curve::SheetPoint& b) {
  return std::abs(a.x - b.x) < 1e-12L && std::abs(a.y - b.y) < 1e-9L * std::max<real>(1, std::abs(a.y));
}

}  // namespace

curve::QuadratureOptions quadrature_options(const RunConfig& config) {
  curve::QuadratureOptions q;
  q.tolerance = config.tolerance;
  q.kronrod_points = config.kronrod_points;
  return q;
}

curve::QuadratureOptions refined_options(const RunConfig& config) {
  curve::QuadratureOptions q = quadrature_options(config);
  q.tolerance = std::max<real>(config.tolerance * 1e-3L, 1e-18L);
  q.kronrod_points = config.kronrod_points == 61 ? 31 : 61;
  return q;
}

std::unique_ptr<CurveContext> prepare_curve(const RunConfig& config, const CurveConfig& cc, Report& report,
                                            bool want_refined) {
  auto ctx = std::make_unique<CurveContext>();
  ctx->config = cc;
  ctx->curve = curve::Curve::build(cc.polynomial);
  ctx->p = resolve_point(*ctx->curve, cc.p, "p");
  ctx->q = resolve_point(*ctx->curve, cc.q, "q");
  ctx->b = resolve_point(*ctx->curve, cc.b, "b");
  if (same_point(ctx->p, ctx->b) || same_point(ctx->q, ctx->b))
    throw InvalidArgument("curve " + cc.label + ": p and q must differ from b");
  if (same_point(curve::involution_conjugate(ctx->q), ctx->p))
    throw InvalidArgument("curve " + cc.label + ": q' must differ from p");
  ctx->basis = std::make_unique<curve::HomologyBasis>(curve::HomologyBasis::build(ctx->curve));
  const curve::PeriodCache cache =
      config.cache_dir.empty() ? curve::PeriodCache::disabled() : curve::PeriodCache(config.cache_dir);
  auto fetch = [&](const curve::QuadratureOptions& q) {
    auto look = cache.get(*ctx->basis, q);
    report.note_cache({{"subject", cc.label},
                       {"tolerance", static_cast<double>(q.tolerance)},
                       {"outcome", curve::to_string(look.outcome)},
                       {"file", look.file.string()}});
    if (!look.warning.empty()) report.warn(look.warning);
    return std::make_unique<curve::PeriodData>(std::move(look.data));
  };
  ctx->periods = fetch(quadrature_options(config));
  if (want_refined) ctx->refined = fetch(refined_options(config));
  return ctx;
}

Report run_suites(const RunConfig& config, std::ostream* log) {
  validate(config);
  Report report;
  const auto& s = config.suites;

  if (s.count(Suite::lattice))
    for (int g : config.lattice_genera) {
      run(report, log, {"lemma_cal_of_cup.phi_v0"}, g, "", [&] { return one(lattice::verify_phi_v0(Genus(g))); });
      run(report, log, {"prop_gr2.index"}, g, "", [&] { return one(lattice::index_and_primitivity(Genus(g))); });
      run(report, log, {"thm_main.theta"}, g, "", [&] { return one(lattice::verify_theta(Genus(g), mix(config.seed, 1))); });
    }

  if (s.count(Suite::groupring))
    for (int g : config.groupring_genera) {
      const Genus G(g);
      run(report, log, {"lemma_modJ4"}, g, "", [&] { return one(groupring::verify_modJ4(G)); });
      run(report, log, {"heisenberg.presentation"}, g, "",
          [&] { return one(groupring::verify_heisenberg(G, mix(config.seed, 2))); });
      if (g <= 2) run(report, log, {"sandling_tahara.j2j3_rank"}, g, "", [&] { return one(groupring::verify_j2j3_rank(G)); });
      if (g >= 2) run(report, log, {"collino.congruence"}, g, "", [&] { return one(groupring::verify_collino(G)); });
      run(report, log, {"lemma_lhs_modJ4"}, g, "", [&] { return one(groupring::verify_lhs_lemma(G)); });
      run(report, log, {"lemma_dbdq_vanish"}, g, "", [&] { return one(groupring::verify_dbdq_vanish(G)); });
    }

  const bool numeric = s.count(Suite::periods) || s.count(Suite::abel_jacobi) || s.count(Suite::iterated) ||
                       s.count(Suite::main);
  if (!numeric) return report;

  for (std::size_t ci = 0; ci < config.curves.size(); ++ci) {
    const auto& cc = config.curves[ci];
    std::unique_ptr<CurveContext> ctx;
    run(report, log, {"homology.intersection"}, cc.genus, cc.label, [&] {
      ctx = prepare_curve(config, cc, report, s.count(Suite::periods) > 0);
      return s.count(Suite::periods) ? one(curve::certify_basis(*ctx->basis)) : std::vector<CheckResult>{};
    });
    if (!ctx) continue;
    const int g = ctx->curve->genus();
    const auto& pd = *ctx->periods;
    const std::string& label = cc.label;
    const std::uint64_t seed = mix(config.seed, 100 + ci);

    if (s.count(Suite::periods))
      run(report, log,
          {"periods.symmetry", "periods.im_positive", "periods.dual_basis", "periods.v0_decomp",
           "periods.self_convergence", "periods.trace_identity"},
          g, label, [&] { return curve::period_checks(pd, *ctx->refined, label); });

    if (s.count(Suite::abel_jacobi))
      run(report, log,
          {"abel.principal", "riemann_constant.t_independence", "abel.pq_relation", "riemann_constant.weierstrass",
           "riemann_constant.shift"},
          g, label, [&] { return curve::abel_jacobi_checks(pd, ctx->p, ctx->q, seed, label); });

    if (s.count(Suite::iterated)) {
      run(report, log, {"iterated.kernel_agreement"}, g, label,
          [&] { return one(iterated::kernel_agreement_check(pd, label)); });
      run(report, log, {"iterated.shuffle"}, g, label, [&] { return one(iterated::shuffle_check(pd, seed + 1, label)); });
      run(report, log, {"iterated.composition"}, g, label,
          [&] { return one(iterated::composition_check(pd, seed + 2, label)); });
      run(report, log, {"iterated.homotopy"}, g, label, [&] { return one(iterated::homotopy_check(pd, seed + 3, label)); });
      run(report, log, {"thm_main1.psi1"}, g, label, [&] { return one(iterated::psi1_check(pd, label)); });
      run(report, log, {"thm_main2.kaenders", "iterated.conjugation_symmetry"}, g, label, [&] {
        return iterated::kaenders_checks(pd, ctx->p, seed + 4, label, config.kaenders_tolerance);
      });
    }

    if (s.count(Suite::main)) {
      run(report, log, {"thm_main2.arithmetic"}, g, label,
          [&] { return one(iterated::main_theorem_check(pd, ctx->p, ctx->q, ctx->b, seed + 5, label)); });
      run(report, log, {"lemma_res.explicit"}, g, label, [&] { return one(iterated::residue_check(pd, label)); });
    }
  }
  return report;
}

}  // namespace cwb::report
