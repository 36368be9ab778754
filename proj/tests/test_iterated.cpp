#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "cwb/iterated/checks.hpp"

using namespace cwb;
using namespace cwb::curve;
using namespace cwb::iterated;

namespace {

const PeriodData& fermat() {
  static const PeriodData pd = compute_periods(HomologyBasis::build(Curve::build("x^5 - 1")));
  return pd;
}

const PeriodData& septic() {
  static const PeriodData pd = compute_periods(HomologyBasis::build(Curve::build("x^7 - x - 1")));
  return pd;
}

// Pullback of a form to a single segment, evaluated directly from the segment data.
cplx form_on(const PeriodData& pd, const Segment& s, const OneForm& f, real t) {
  const int g = pd.genus();
  CVector raw(g);
  const cplx x = s.x(t), d = s.dx_over_y(t);
  for (int j = 0; j < g; ++j) raw(j) = std::pow(x, j) * d;
  const CVector w = pd.A_inv * raw;
  cplx v = 0;
  for (int j = 0; j < g; ++j) v += f.c(j) * w(j) + f.cbar(j) * std::conj(w(j));
  return v;
}

cplx gk(const std::function<cplx(real)>& h, real a, real b) {
  using boost::math::quadrature::gauss_kronrod;
  const real re = gauss_kronrod<real, 31>::integrate([&](real t) { return h(t).real(); }, a, b, 10, 1e-17L);
  const real im = gauss_kronrod<real, 31>::integrate([&](real t) { return h(t).imag(); }, a, b, 10, 1e-17L);
  return {re, im};
}

// integral over 0 < s < t < 1 of f1(s) f2(t), as nested one-dimensional quadrature
cplx nested_oracle(const PeriodData& pd, const Segment& s, const OneForm& f1, const OneForm& f2) {
  return gk([&](real t) { return gk([&](real u) { return form_on(pd, s, f1, u); }, 0, t) * form_on(pd, s, f2, t); }, 0, 1);
}

}  // namespace

TEST_CASE("normalization over the basis loops") {
  const auto& pd = fermat();
  const int g = pd.genus();
  for (int nu = 0; nu < g; ++nu)
    for (int i = 0; i < g; ++i) {
      const auto v = iterint(pd, pd.basis.cycle(nu), {omega(g, i)});
      CHECK(std::abs(v.value - cplx(i == nu ? 1 : 0)) < 1e-14L);
    }
  const auto forms = dual_basis_forms(pd);
  for (int l = 0; l < 2 * g; ++l)
    for (int k = 0; k < 2 * g; ++k)
      CHECK(std::abs(iterint(pd, pd.basis.cycle(l), {forms[k]}).value - cplx(k == l ? 1 : 0)) < 1e-14L);
}

TEST_CASE("constant path gives zero") {
  const auto& pd = fermat();
  const Path empty(pd.basis.curve());
  const auto forms = dual_basis_forms(pd);
  CHECK(std::abs(iterint(pd, empty, {forms[0]}).value) == 0);
  CHECK(std::abs(iterint(pd, empty, {forms[0], forms[1]}).value) == 0);
  CHECK(std::abs(iterint(pd, empty, {forms[0], forms[1], forms[2]}).value) == 0);
}

TEST_CASE("reversal") {
  const auto& pd = septic();
  const auto& c = pd.basis.curve();
  const Path p = route(c, c->point(cplx(0.5L, 1.2L), 1), c->point(cplx(-1.1L, -0.9L), -1));
  const Path r = p.reversed();
  const auto f = dual_basis_forms(pd);
  CHECK(std::abs(iterint(pd, r, {f[0]}).value + iterint(pd, p, {f[0]}).value) < 1e-14L);
  CHECK(std::abs(iterint(pd, r, {f[1], f[4]}).value - iterint(pd, p, {f[4], f[1]}).value) < 1e-13L);
  CHECK(std::abs(iterint(pd, r, {f[1], f[4], f[2]}).value + iterint(pd, p, {f[2], f[4], f[1]}).value) < 1e-13L);
}

TEST_CASE("invalid word lengths") {
  const auto& pd = fermat();
  const auto f = dual_basis_forms(pd);
  CHECK_THROWS_AS(iterint(pd, pd.basis.cycle(0), {}), InvalidArgument);
  CHECK_THROWS_AS(iterint(pd, pd.basis.cycle(0), {f[0], f[1], f[2], f[3]}), InvalidArgument);
}

TEST_CASE("shuffle examples on gamma_1") {
  const auto& pd = fermat();
  const auto x = dual_basis_forms(pd);
  const Path g1 = pd.basis.cycle(0);
  const cplx x1x2 = iterint(pd, g1, {x[0], x[1]}).value, x2x1 = iterint(pd, g1, {x[1], x[0]}).value;
  CHECK(std::abs(x1x2 + x2x1) < 1e-13L);
  CHECK(std::abs(cplx(2) * iterint(pd, g1, {x[0], x[0]}).value - cplx(1)) < 1e-13L);
  CHECK(std::abs(iterint(pd, g1, {x[0], x[0], x[0]}).value - cplx(1.0L / 6)) < 1e-13L);
}

TEST_CASE("length-2 integrals match nested quadrature on a segment") {
  const auto& pd = fermat();
  const auto& c = pd.basis.curve();
  const Path p = PathBuilder(c, c->point(2, 1)).line_to(cplx(1.2L, 1.4L)).build();
  REQUIRE(p.segments().size() == 1);
  const auto& seg = p.segments()[0];
  const int g = pd.genus();
  const std::vector<OneForm> forms{omega(g, 0), omega_bar(g, 1), dual_form(pd, 2), omega(g, 1)};
  for (const auto& a : forms)
    for (const auto& b : forms) {
      const cplx want = nested_oracle(pd, seg, a, b);
      CHECK(std::abs(iterint(pd, p, {a, b}).value - want) < 1e-13L * std::max<real>(1, std::abs(want)));
    }
}

TEST_CASE("serial and parallel kernels agree") {
  const auto& pd = septic();
  const auto forms = dual_basis_forms(pd);
  const GaussLegendre rule(16);
  for (int nu = 0; nu < 2 * pd.genus(); ++nu) {
    const auto v = panel_values(pd, pd.basis.cycle(nu), forms, rule, 3);
    const int n = static_cast<int>(forms.size());
    CHECK(signature_serial(v, n, 3, rule).distance(signature_parallel(v, n, 3, rule)) < 1e-15L);
  }
  CHECK(kernel_agreement_check(pd, "septic").passed());
}

TEST_CASE("chen product") {
  const auto& pd = fermat();
  const auto forms = dual_basis_forms(pd);
  const Path loop = pd.basis.cycle(3);
  for (real u : {0.4L, 1.5L, 2.7L}) {
    const auto [a, b] = loop.split(u);
    const auto sa = path_signature(pd, a, forms, 3).value, sb = path_signature(pd, b, forms, 3).value;
    CHECK(chen_product(sa, sb).distance(path_signature(pd, loop, forms, 3).value) < 1e-13L);
  }
  const auto s = path_signature(pd, loop, forms, 3).value;
  const auto z = Signature::zero(4, 3);
  CHECK(chen_product(s, z).distance(s) == 0);
  CHECK(chen_product(z, s).distance(s) == 0);
}

TEST_CASE("composition identity with a degenerate piece") {
  const auto& pd = fermat();
  const auto forms = dual_basis_forms(pd);
  const Path loop = pd.basis.cycle(1);
  const Path empty(pd.basis.curve());
  const auto s = path_signature(pd, loop, forms, 2).value;
  const auto e = path_signature(pd, empty, forms, 2).value;
  CHECK(chen_product(s, e).distance(s) < 1e-18L);
  CHECK(chen_product(e, s).distance(s) < 1e-18L);
}

TEST_CASE("one forms") {
  const auto& pd = fermat();
  const OneForm w = omega(2, 1);
  CHECK(w.conjugate().cbar == w.c);
  CHECK((w + omega_bar(2, 0)).cbar(0) == cplx(1));
  CHECK((cplx(0, 2) * w).c(1) == cplx(0, 2));
  const OneForm x = dual_form(pd, 0);
  CHECK((x.conjugate().c - x.c).norm() < 1e-16L);  // real form
}

TEST_CASE("psi1 tensor is delta_ik delta_jk") {
  for (const PeriodData* pd : {&fermat(), &septic()}) {
    const int n = 2 * pd->genus();
    const auto T = psi1_tensor(*pd);
    real worst = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          worst = std::max(worst, std::abs(T[(i * n + j) * n + k] - cplx(i == k && j == k ? 1 : 0)));
    CHECK(worst < 1e-7L);
    CHECK(psi1_check(*pd, "x").passed());
  }
}

TEST_CASE("kaenders relation on the default points") {
  const auto& pd = fermat();
  const auto& c = *pd.basis.curve();
  const auto r = kaenders(pd, c.point(2, 1), default_auxiliary_point(c));
  CHECK(r.difference.residual < 1e-5L);
  CHECK(r.conjugation_defect < 1e-10L);
  // the relation is not trivially satisfied: both sides are nonzero mod the lattice
  CHECK(reduce_mod_lattice(r.lhs, pd.Omega).residual > 1e-3L);
}

TEST_CASE("kaenders relation on a genus 3 curve") {
  const auto& pd = septic();
  const auto& c = *pd.basis.curve();
  const auto r = kaenders(pd, c.point(cplx(0.3L, 1.1L), 1), default_auxiliary_point(c));
  CHECK(r.difference.residual < 1e-4L);
}

TEST_CASE("main theorem arithmetic") {
  const auto& pd = fermat();
  const auto& c = *pd.basis.curve();
  const SheetPoint t1 = default_auxiliary_point(c), t2 = c.point(cplx(-1.3L, 0.6L), -1);
  const auto r = main_theorem_arithmetic(pd, c.point(2, 1), c.point(3, 1), c.point(-2, 1), t1, t2);
  CHECK(r.residual < 1e-6L);
  CHECK(r.fibre_residual < 1e-6L);
}

TEST_CASE("suite checks pass on the fermat quintic") {
  const auto& pd = fermat();
  const auto& c = *pd.basis.curve();
  CHECK(shuffle_check(pd, 1, "f").passed());
  CHECK(composition_check(pd, 2, "f").passed());
  CHECK(homotopy_check(pd, 3, "f").passed());
  for (const auto& r : kaenders_checks(pd, c.point(2, 1), 4, "f")) CHECK_MESSAGE(r.passed(), r.check_id);
  CHECK(main_theorem_check(pd, c.point(2, 1), c.point(3, 1), c.point(-2, 1), 5, "f").passed());
  const auto res = residue_check(pd, "f");
  CHECK(res.passed());
  CHECK(res.witness["res_sum_times_2pii"] == "4");
  CHECK(res.witness["res_b_times_2pii"] == "2");
  CHECK(res.witness["res_qprime_times_2pii"] == "2");
}
