#include "cwb/curve/abel_jacobi.hpp"

#include <cmath>

namespace cwb::curve {

LatticeReduction reduce_mod_lattice(const CVector& v, const CMatrix& Omega) {
  const auto g = Omega.rows();
  RMatrix M(2 * g, 2 * g);
  M.topRows(g) = Omega.real();
  M.bottomRows(g) = Omega.imag();
  RVector rhs(2 * g);
  rhs.head(g) = v.real();
  rhs.tail(g) = v.imag();
  Eigen::FullPivLU<RMatrix> lu(M);
  if (!lu.isInvertible()) throw NumericalError("real period matrix is singular");
  LatticeReduction out{lu.solve(rhs), 0};
  RVector frac = out.t;
  for (Eigen::Index i = 0; i < frac.size(); ++i) frac(i) -= std::round(frac(i));
  const CVector w = Omega * frac.cast<cplx>();
  out.residual = w.norm();
  return out;
}

JacobianPoint make_jacobian_point(const CVector& v, const PeriodData& pd) {
  return {v, reduce_mod_lattice(v, pd.Omega)};
}

CVector integrate_normalized(const PeriodData& pd, const Path& p) {
  return pd.normalize(integrate_raw(p, pd.genus(), pd.quadrature));
}

CVector abel_jacobi_integral(const PeriodData& pd, const SheetPoint& from, const SheetPoint& to, int fix_branch) {
  if (from.x == to.x && from.y == to.y && from.branch == to.branch) return CVector::Zero(pd.genus());
  return integrate_normalized(pd, route(pd.basis.curve(), from, to, fix_branch));
}

JacobianPoint abel_jacobi(const PeriodData& pd, const Divisor& divisor, const SheetPoint& base) {
  int degree = 0;
  for (const auto& [pt, n] : divisor) degree += n;
  if (degree != 0) throw InvalidArgument("divisor has nonzero degree " + std::to_string(degree));
  CVector v = CVector::Zero(pd.genus());
  for (const auto& [pt, n] : divisor)
    if (n != 0) v += static_cast<real>(n) * abel_jacobi_integral(pd, base, pt);
  return make_jacobian_point(v, pd);
}

JacobianPoint riemann_constant_twice(const PeriodData& pd, const SheetPoint& p, const SheetPoint& t) {
  if (t.is_branch() || std::abs(t.y) == 0) throw InvalidArgument("auxiliary point for K_C must not be a branch point");
  const int g = pd.genus();
  const CVector v = -static_cast<real>(g - 1) *
                    (abel_jacobi_integral(pd, p, t) + abel_jacobi_integral(pd, p, involution_conjugate(t)));
  return make_jacobian_point(v, pd);
}

SheetPoint random_point(const Curve& c, std::mt19937_64& rng) {
  const auto& roots = c.original_roots();
  cplx center = 0;
  for (auto r : roots) center += r;
  center /= static_cast<real>(roots.size());
  real R = 0;
  for (auto r : roots) R = std::max(R, std::abs(r - center));
  real far = 0;
  for (auto e : c.branch_points()) far = std::max(far, std::abs(e));
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    const cplx x = center + 1.5L * R * cplx(u(rng), u(rng));
    const int sign = u(rng) < 0 ? -1 : 1;
    if (c.uses_mobius() && std::abs(x - c.mobius_center()) < 1e-3L * R) continue;
    const SheetPoint p = c.point(x, sign);
    if (p.is_branch() || c.branch_distance(p.x) < 2 * c.clearance() || std::abs(p.x) > 3 * far) continue;
    return p;
  }
  throw NumericalError("could not sample a point away from the branch points");
}

SheetPoint default_auxiliary_point(const Curve& c) {
  std::mt19937_64 rng(0x5eed);
  return random_point(c, rng);
}

namespace {

double d(real v) { return static_cast<double>(v); }

}  // namespace

std::vector<CheckResult> abel_jacobi_checks(const PeriodData& pd, const SheetPoint& p, const SheetPoint& q,
                                            std::uint64_t seed, const std::string& subject, int principal_trials) {
  const auto& c = *pd.basis.curve();
  const int g = pd.genus();
  std::vector<CheckResult> out;
  std::mt19937_64 rng(seed);

  real worst = 0;
  auto trials = nlohmann::json::array();
  for (int k = 0; k < principal_trials; ++k) {
    const SheetPoint alpha = random_point(c, rng), beta = random_point(c, rng);
    // each point reached through a different sheet-fixing lasso, so cancellation needs the lattice
    const int nb = static_cast<int>(c.branch_points().size());
    const CVector v = abel_jacobi_integral(pd, p, alpha, k % nb) +
                      abel_jacobi_integral(pd, p, involution_conjugate(alpha), (k + 1) % nb) -
                      abel_jacobi_integral(pd, p, beta, (k + 2) % nb) -
                      abel_jacobi_integral(pd, p, involution_conjugate(beta), (k + 3) % nb);
    const auto J = make_jacobian_point(v, pd);
    worst = std::max(worst, J.reduction.residual);
    if (k < 3) trials.push_back({{"residual", d(J.reduction.residual)}});
  }
  out.push_back(make_check("abel.principal", g, worst < 1e-6L,
                           {{"trials", principal_trials}, {"max_residual", d(worst)}, {"first", trials}, {"seed", seed}},
                           subject));

  const SheetPoint t1 = default_auxiliary_point(c);
  const SheetPoint t2 = random_point(c, rng);
  const auto k1 = riemann_constant_twice(pd, p, t1);
  const auto k2 = riemann_constant_twice(pd, p, t2);
  const auto diff = make_jacobian_point(k1.v - k2.v, pd);
  out.push_back(make_check("riemann_constant.t_independence", g, diff.reduction.residual < 1e-6L,
                           {{"residual", d(diff.reduction.residual)}}, subject));

  const SheetPoint pc = involution_conjugate(p), qc = involution_conjugate(q);
  const auto lhs = abel_jacobi(pd, {{pc, 1}, {qc, 1}, {p, -1}, {q, -1}}, p);
  const auto rhs = abel_jacobi(pd, {{qc, 2}, {p, -2}}, p);
  const auto rel = make_jacobian_point(lhs.v - rhs.v, pd);
  out.push_back(make_check("abel.pq_relation", g, rel.reduction.residual < 1e-6L,
                           {{"residual", d(rel.reduction.residual)}}, subject));

  const auto kw = riemann_constant_twice(pd, c.weierstrass(0), t1);
  out.push_back(make_check("riemann_constant.weierstrass", g, kw.reduction.residual < 1e-6L,
                           {{"residual", d(kw.reduction.residual)}}, subject));

  const SheetPoint ps = random_point(c, rng);
  const auto kps = riemann_constant_twice(pd, ps, t1);
  const auto shift = abel_jacobi(pd, {{ps, 2 * g - 2}, {p, 2 - 2 * g}}, p);
  const auto sh = make_jacobian_point(kps.v - k1.v - shift.v, pd);
  out.push_back(make_check("riemann_constant.shift", g, sh.reduction.residual < 1e-6L,
                           {{"residual", d(sh.reduction.residual)}}, subject));
  return out;
}

}  // namespace cwb::curve
