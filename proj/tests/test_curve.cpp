#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Eigenvalues>

#include "cwb/curve/path.hpp"
#include "cwb/curve/periods.hpp"

using namespace cwb;
using namespace cwb::curve;

namespace {

// Roots from the eigenvalues of the companion matrix.
std::vector<cplx> companion_roots(const std::vector<cplx>& c) {
  const int n = static_cast<int>(c.size()) - 1;
  Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic> M = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic>::Zero(n, n);
  for (int i = 1; i < n; ++i) M(i, i - 1) = 1;
  for (int i = 0; i < n; ++i) M(i, n - 1) = -c[i] / c[n];
  Eigen::ComplexEigenSolver<decltype(M)> es(M);
  return {es.eigenvalues().data(), es.eigenvalues().data() + n};
}

real match_distance(const std::vector<cplx>& a, std::vector<cplx> b) {
  real worst = 0;
  for (cplx z : a) {
    auto it = std::min_element(b.begin(), b.end(), [&](cplx u, cplx v) { return std::abs(u - z) < std::abs(v - z); });
    worst = std::max(worst, std::abs(*it - z));
    b.erase(it);
  }
  return worst;
}

// Closed polygon around the odd-model point `center` with half-width h.
Path square(const CurvePtr& c, cplx center, real h, int sign) {
  const cplx corners[] = {center + cplx(h, -h), center + cplx(h, h), center + cplx(-h, h), center + cplx(-h, -h)};
  PathBuilder b(c, c->point_odd(corners[0], sign));
  for (int i = 1; i <= 4; ++i) b.line_to(corners[i % 4]);
  return b.build();
}

real min_gap(const Curve& c) {
  real gap = 1e300L;
  const auto& e = c.branch_points();
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i + 1; j < e.size(); ++j) gap = std::min(gap, std::abs(e[i] - e[j]));
  return gap;
}

}  // namespace

TEST_CASE("polynomial parsing and printing") {
  const auto f = ExactPolynomial::parse("x^5 - 1");
  CHECK(f.degree() == 5);
  CHECK(f.str() == "x^5 - 1");
  CHECK(ExactPolynomial::parse(f.str()) == f);
  const auto h = ExactPolynomial::parse("x*(x-1)*(x-2)*(x-3)*(x-4)");
  CHECK(h.degree() == 5);
  CHECK(h(cplx(3, 0)) == cplx(0, 0));
  CHECK(ExactPolynomial::parse("1/2*x^2 + i*x") (GaussianRational(2)) == GaussianRational(2, 2));
  CHECK_THROWS_AS(ExactPolynomial::parse("x^^2"), InvalidArgument);
}

TEST_CASE("gcd and squarefree") {
  const auto f = ExactPolynomial::parse("(x-1)^2*(x+2)");
  CHECK_FALSE(is_squarefree(f));
  CHECK(gcd(f, f.derivative()) == ExactPolynomial::parse("x - 1"));
  CHECK(is_squarefree(ExactPolynomial::parse("x^7 - x - 1")));
}

TEST_CASE("curve construction rejects bad input") {
  CHECK_THROWS_AS(Curve::build("x^4 - 1"), InvalidArgument);
  CHECK_THROWS_AS(Curve::build("(x-1)^2*(x^3+2)"), InvalidArgument);
  CHECK_THROWS_AS(Curve::build("x^5 - 1", CurveOptions{0, 0.2L}), InvalidArgument);
}

TEST_CASE("branch points of the default curves") {
  const auto c = Curve::build("x^5 - 1");
  CHECK(c->genus() == 2);
  CHECK_FALSE(c->uses_mobius());
  for (cplx r : c->original_roots()) CHECK(std::abs(std::pow(r, 5) - cplx(1)) < 1e-17L);

  const auto d = Curve::build("x*(x-1)*(x-2)*(x-3)*(x-4)");
  CHECK(d->genus() == 2);
  CHECK(match_distance(d->original_roots(), {0, 1, 2, 3, 4}) < 1e-17L);
}

TEST_CASE("root finder agrees with the companion-matrix oracle") {
  for (const char* text : {"x^7 - x - 1", "x^8 + 3*x - 2", "x^5 - 3*x^2 + (1/2)*i*x + 7", "x^9 - 2*x^4 + x - 5"}) {
    const auto f = ExactPolynomial::parse(text);
    const auto coeffs = f.complex_coefficients();
    const auto ours = polynomial_roots(coeffs);
    CHECK(ours.size() == coeffs.size() - 1);
    CHECK(match_distance(ours, companion_roots(coeffs)) < 1e-12L);
    for (cplx r : ours) CHECK(std::abs(f(r)) < 1e-15L);
  }
  const auto c = Curve::build("x^7 - x - 1");
  CHECK(c->genus() == 3);
  CHECK(c->branch_points().size() == 7);
}

TEST_CASE("even degree goes through the odd model") {
  const auto c = Curve::build("x^6 - 1");
  CHECK(c->genus() == 2);
  CHECK(c->uses_mobius());
  CHECK(c->branch_points().size() == 5);
  const SheetPoint p = c->point(cplx(0.3L, 0.7L), 1);
  CHECK(c->residual(p) < 1e-17L);
  CHECK_THROWS_AS(c->point(c->mobius_center(), 1), InvalidArgument);
}

TEST_CASE("sheet points and the involution") {
  const auto c = Curve::build("x^5 - 1");
  const SheetPoint p = c->point(2, 1);
  CHECK(std::abs(p.y - std::sqrt(cplx(31))) < 1e-17L);
  const SheetPoint q = involution_conjugate(p);
  CHECK(q.x == p.x);
  CHECK(q.y == -p.y);
  const SheetPoint back = involution_conjugate(q);
  CHECK(back.x == p.x);
  CHECK(back.y == p.y);
  for (int k = 0; k < 5; ++k) {
    const SheetPoint w = c->weierstrass(k);
    const SheetPoint iw = involution_conjugate(w);
    CHECK(iw.x == w.x);
    CHECK(std::abs(iw.y) == 0);
    CHECK(iw.branch == k);
  }
  CHECK(std::abs(c->point(2, -1).y + p.y) < 1e-17L);
  CHECK(std::abs(c->hub_y() * c->hub_y() - c->f_odd(c->hub())) < 1e-15L * std::abs(c->f_odd(c->hub())));
}

TEST_CASE("monodromy of small loops") {
  for (const char* text : {"x^5 - 1", "x*(x-1)*(x-2)*(x-3)*(x-4)", "x^7 - x - 1", "x^6 - 1"}) {
    const auto c = Curve::build(text);
    const real h = 0.45L * min_gap(*c);
    for (int k = 0; k < static_cast<int>(c->branch_points().size()); ++k) {
      const Path around = square(c, c->branch_points()[k], h, 1);
      CHECK(std::abs(around.end_x() - around.start_x()) < 1e-18L);
      CHECK(std::abs(around.end_y() + around.start_y()) < 1e-12L * std::abs(around.start_y()));
    }
    // far from every branch point
    const Path none = square(c, c->hub(), c->clearance() / 2, 1);
    CHECK(std::abs(none.end_y() - none.start_y()) < 1e-12L * std::abs(none.start_y()));
  }
}

TEST_CASE("lassos flip the sheet, pairs of lassos do not") {
  const auto c = Curve::build("x^5 - 1");
  const int n = static_cast<int>(c->branch_points().size());
  for (int k = 0; k < n; ++k) {
    const Path one = lasso_word_path(c, {k});
    CHECK(std::abs(one.end_y() + c->hub_y()) < 1e-12L);
    for (int m = 0; m < n; ++m) {
      const Path two = lasso_word_path(c, {k, m});
      CHECK(two.is_closed());
      CHECK(std::abs(two.end_y() - c->hub_y()) < 1e-12L);
    }
  }
}

TEST_CASE("a loop around all finite branch points flips the sheet for odd degree") {
  const auto c = Curve::build("x^5 - 1");
  const Path big = square(c, 0, 3, 1);
  CHECK(std::abs(big.end_y() + big.start_y()) < 1e-12L * std::abs(big.start_y()));
  const auto d = Curve::build("x^7 - x - 1");
  const Path big7 = square(d, 0, 4, 1);
  CHECK(std::abs(big7.end_y() + big7.start_y()) < 1e-12L * std::abs(big7.start_y()));
}

TEST_CASE("continued y satisfies the curve equation along a path") {
  const auto c = Curve::build("x^7 - x - 1");
  const Path p = route(c, c->point(cplx(0.3L, 2), 1), c->point(cplx(-1.7L, -0.4L), -1));
  for (const auto& s : p.segments())
    for (real t : {0.0L, 0.13L, 0.5L, 0.77L, 1.0L}) {
      const real u = s.t0() + t * (s.t1() - s.t0());
      const cplx x = s.x(u), y = s.y(u);
      CHECK(std::abs(y * y - c->f_odd(x)) <= 1e-15L * std::max<real>(1, std::abs(c->f_odd(x))));
    }
  CHECK(std::abs(p.end_y() - c->point(cplx(-1.7L, -0.4L), -1).y) < 1e-12L);
}

TEST_CASE("routes keep the clearance") {
  const auto c = Curve::build("x*(x-1)*(x-2)*(x-3)*(x-4)");
  const auto pts = plan_route(*c, c->point(-0.5L, 1).x, c->point(4.5L, 1).x);
  for (std::size_t i = 0; i + 1 < pts.size(); ++i)
    for (cplx e : c->branch_points()) CHECK(segment_point_distance(pts[i], pts[i + 1], e) >= c->clearance() * 0.999L);
}

TEST_CASE("path reversal and splitting") {
  const auto c = Curve::build("x^5 - 1");
  const QuadratureOptions q;
  const Path p = route(c, c->point(2, 1), c->point(cplx(-1, 1.5L), -1));
  const CVector full = integrate_raw(p, 2, q);
  CHECK((integrate_raw(p.reversed(), 2, q) + full).norm() < 1e-15L);
  for (real u : {0.5L, 1.25L, static_cast<real>(p.segments().size()) - 0.3L}) {
    const auto [a, b] = p.split(u);
    CHECK(std::abs(a.end_x() - b.start_x()) < 1e-18L);
    CHECK((integrate_raw(a, 2, q) + integrate_raw(b, 2, q) - full).norm() < 1e-15L);
  }
  CHECK_THROWS_AS(p.split(-1), InvalidArgument);
}

TEST_CASE("gauss-legendre rule and spectral integration matrix") {
  for (int n : {8, 16, 24}) {
    const GaussLegendre r(n);
    for (int d = 0; d < 2 * n; ++d) {
      real s = 0;
      for (int i = 0; i < n; ++i) s += r.weights[i] * std::pow(r.nodes[i], d);
      CHECK(std::abs(s - 1.0L / (d + 1)) < 1e-17L);
    }
    for (int d = 0; d < n; ++d)
      for (int i = 0; i < n; ++i) {
        real s = 0;
        for (int j = 0; j < n; ++j) s += r.integration(i, j) * std::pow(r.nodes[j], d);
        CHECK(std::abs(s - std::pow(r.nodes[i], d + 1) / (d + 1)) < 1e-16L);
      }
  }
}
