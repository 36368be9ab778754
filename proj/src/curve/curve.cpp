#include "cwb/curve/curve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace cwb::curve {

SheetPoint involution_conjugate(const SheetPoint& p) { return {p.x, -p.y, p.branch}; }

real segment_point_distance(cplx a, cplx b, cplx p) {
  const cplx d = b - a;
  const real len2 = std::norm(d);
  if (len2 == 0) return std::abs(p - a);
  real t = ((p - a) * std::conj(d)).real() / len2;
  t = std::clamp<real>(t, 0, 1);
  return std::abs(a + t * d - p);
}

std::shared_ptr<const Curve> Curve::build(const std::string& text, const CurveOptions& options) {
  return build(ExactPolynomial::parse(text), options);
}

std::shared_ptr<const Curve> Curve::build(const ExactPolynomial& f, const CurveOptions& options) {
  if (f.degree() < 5) throw InvalidArgument("curve polynomial must have degree >= 5");
  if (!is_squarefree(f)) throw InvalidArgument("curve polynomial is not squarefree: " + f.str());
  if (!(options.tolerance > 0)) throw InvalidArgument("tolerance must be positive");

  std::shared_ptr<Curve> c(new Curve());
  c->f_ = f;
  c->options_ = options;
  c->g_ = (f.degree() - 1) / 2;
  c->roots_ = polynomial_roots(f.complex_coefficients());
  for (const auto& r : c->roots_) {
    real scale = 0;
    for (const auto& a : f.complex_coefficients()) scale = std::max(scale, std::abs(a));
    if (std::abs(f(r)) > 1e-12L * scale * std::pow(std::max<real>(1, std::abs(r)), f.degree()))
      throw NumericalError("root refinement failed");
  }

  if (f.degree() % 2 == 1) {
    c->e_ = c->roots_;
    c->lead_ = f.leading().to_complex();
  } else {
    // Send the root of largest modulus to infinity.
    auto it = std::max_element(c->roots_.begin(), c->roots_.end(),
                               [](cplx a, cplx b) { return std::abs(a) < std::abs(b); });
    c->mobius_ = true;
    c->e0_ = *it;
    c->lead_ = f.derivative()(c->e0_);
    for (const auto& r : c->roots_)
      if (&r != &*it) c->e_.push_back(1.0L / (r - c->e0_));
  }

  real gap = std::numeric_limits<real>::max();
  cplx mean = 0;
  real min_im = std::numeric_limits<real>::max();
  for (std::size_t i = 0; i < c->e_.size(); ++i) {
    mean += c->e_[i];
    min_im = std::min(min_im, c->e_[i].imag());
    for (std::size_t j = i + 1; j < c->e_.size(); ++j) gap = std::min(gap, std::abs(c->e_[i] - c->e_[j]));
  }
  mean /= static_cast<real>(c->e_.size());
  real spread = 1;
  for (const auto& e : c->e_) spread = std::max(spread, std::abs(e - mean));
  c->clearance_ = options.clearance_factor * gap;

  // Hub below all branch points, chosen so that the rays to the branch points stay clear of the others.
  real best = -1;
  for (real h : {1.0L, 1.6L, 2.5L})
    for (real off : {0.137L, -0.213L, 0.311L, -0.389L, 0.05L}) {
      const cplx x0(mean.real() + off * spread, min_im - h * spread);
      real worst = std::numeric_limits<real>::max();
      for (std::size_t k = 0; k < c->e_.size(); ++k)
        for (std::size_t m = 0; m < c->e_.size(); ++m)
          if (m != k) worst = std::min(worst, segment_point_distance(x0, c->e_[k], c->e_[m]));
      if (worst > best + 1e-12L) {
        best = worst;
        c->hub_ = x0;
      }
    }
  if (best < c->clearance_) c->clearance_ = best / 2;

  const cplx hub = c->hub_;
  std::sort(c->e_.begin(), c->e_.end(), [&](cplx a, cplx b) { return std::arg(a - hub) < std::arg(b - hub); });
  c->hub_y_ = std::sqrt(c->f_odd(hub));
  return c;
}

cplx Curve::f_odd(cplx X) const {
  cplx v = lead_;
  for (const auto& e : e_) v *= (X - e);
  return v;
}

cplx Curve::f_except(int k, cplx X) const {
  cplx v = lead_;
  for (int m = 0; m < static_cast<int>(e_.size()); ++m)
    if (m != k) v *= (X - e_[m]);
  return v;
}

real Curve::branch_distance(cplx X) const {
  real d = std::numeric_limits<real>::max();
  for (const auto& e : e_) d = std::min(d, std::abs(X - e));
  return d;
}

SheetPoint Curve::weierstrass(int k) const {
  if (k < 0 || k >= static_cast<int>(e_.size())) throw InvalidArgument("branch index out of range");
  return {e_[k], 0, k};
}

SheetPoint Curve::point_odd(cplx X, int sign) const {
  if (sign != 1 && sign != -1) throw InvalidArgument("sheet sign must be +1 or -1");
  for (int k = 0; k < static_cast<int>(e_.size()); ++k)
    if (std::abs(X - e_[k]) < 1e-14L * std::max<real>(1, std::abs(X))) return weierstrass(k);
  return {X, static_cast<real>(sign) * std::sqrt(f_odd(X)), -1};
}

SheetPoint Curve::point(cplx x, int sign) const {
  if (!mobius_) return point_odd(x, sign);
  if (sign != 1 && sign != -1) throw InvalidArgument("sheet sign must be +1 or -1");
  if (std::abs(x - e0_) < 1e-14L) throw InvalidArgument("point maps to infinity of the odd model");
  const cplx X = 1.0L / (x - e0_);
  for (int k = 0; k < static_cast<int>(e_.size()); ++k)
    if (std::abs(X - e_[k]) < 1e-14L * std::max<real>(1, std::abs(X))) return weierstrass(k);
  const cplx y = static_cast<real>(sign) * std::sqrt(f_(x));
  return {X, y * std::pow(X, g_ + 1), -1};
}

real Curve::residual(const SheetPoint& p) const {
  const cplx v = f_odd(p.x);
  return std::abs(p.y * p.y - v) / std::max<real>(1, std::abs(v));
}

}  // namespace cwb::curve
