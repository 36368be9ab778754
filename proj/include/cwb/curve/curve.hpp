#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cwb/common.hpp"
#include "cwb/curve/polynomial.hpp"

namespace cwb::curve {

struct CurveOptions {
  real tolerance = 1e-13L;       // quadrature target
  real clearance_factor = 0.2L;  // fraction of the smallest branch-point gap kept free around branch points
};

// A point of the odd model Y^2 = lead * prod (X - e_k). `branch` is the branch-point index or -1.
struct SheetPoint {
  cplx x;
  cplx y;
  int branch = -1;

  bool is_branch() const { return branch >= 0; }
};

SheetPoint involution_conjugate(const SheetPoint& p);

// y^2 = f(x) with f squarefree of degree 2g+1 or 2g+2. Even degree is moved to the odd model
// by X = 1/(x - e0), Y = y X^{g+1}, which sends the root e0 to infinity.
class Curve {
 public:
  static std::shared_ptr<const Curve> build(const std::string& text, const CurveOptions& options = {});
  static std::shared_ptr<const Curve> build(const ExactPolynomial& f, const CurveOptions& options = {});

  const ExactPolynomial& polynomial() const { return f_; }
  std::string text() const { return f_.str(); }
  int genus() const { return g_; }
  const CurveOptions& options() const { return options_; }

  const std::vector<cplx>& original_roots() const { return roots_; }
  bool uses_mobius() const { return mobius_; }
  cplx mobius_center() const { return e0_; }

  // Odd model data. Branch points are ordered by increasing argument seen from the hub.
  const std::vector<cplx>& branch_points() const { return e_; }
  cplx lead() const { return lead_; }
  cplx hub() const { return hub_; }
  cplx hub_y() const { return hub_y_; }
  real clearance() const { return clearance_; }

  cplx f_odd(cplx X) const;
  cplx f_except(int k, cplx X) const;  // lead * prod_{m != k} (X - e_m)

  // Point with original coordinate x and y = sign * principal sqrt(f(x)).
  SheetPoint point(cplx x, int sign) const;
  SheetPoint point_odd(cplx X, int sign) const;  // directly in the odd model
  SheetPoint weierstrass(int k) const;

  real branch_distance(cplx X) const;  // distance to the nearest finite branch point
  real residual(const SheetPoint& p) const;  // |y^2 - f(x)| relative

 private:
  Curve() = default;

  ExactPolynomial f_;
  int g_ = 0;
  CurveOptions options_;
  std::vector<cplx> roots_;
  bool mobius_ = false;
  cplx e0_;
  std::vector<cplx> e_;
  cplx lead_;
  cplx hub_;
  cplx hub_y_;
  real clearance_ = 0;
};

using CurvePtr = std::shared_ptr<const Curve>;

real segment_point_distance(cplx a, cplx b, cplx p);

}  // namespace cwb::curve
