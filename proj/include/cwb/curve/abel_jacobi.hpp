#pragma once

#include <random>
#include <utility>
#include <vector>

#include "cwb/curve/periods.hpp"

namespace cwb::curve {

struct LatticeReduction {
  RVector t;      // v = Omega t
  real residual;  // |Omega (t - round t)|
};

LatticeReduction reduce_mod_lattice(const CVector& v, const CMatrix& Omega);

struct JacobianPoint {
  CVector v;
  LatticeReduction reduction;

  bool is_zero(real tol) const { return reduction.residual < tol; }
};

JacobianPoint make_jacobian_point(const CVector& v, const PeriodData& pd);

// Normalized integrals of w_1..w_g.
CVector integrate_normalized(const PeriodData& pd, const Path& p);
// Routed via the hub; `fix_branch` selects the lasso used to change sheets there.
CVector abel_jacobi_integral(const PeriodData& pd, const SheetPoint& from, const SheetPoint& to, int fix_branch = 0);

using Divisor = std::vector<std::pair<SheetPoint, int>>;

// sum_k n_k * integral from `base` to p_k
JacobianPoint abel_jacobi(const PeriodData& pd, const Divisor& divisor, const SheetPoint& base);

// 2 kappa_p = u((2g - 2) p - K_C) with K_C = (g - 1)(t + iota t).
JacobianPoint riemann_constant_twice(const PeriodData& pd, const SheetPoint& p, const SheetPoint& t);

// A point with original x-coordinate away from the branch points, for randomized trials.
SheetPoint random_point(const Curve& c, std::mt19937_64& rng);

// Default auxiliary point for K_C.
SheetPoint default_auxiliary_point(const Curve& c);

// Abel-Jacobi suite for one curve and the configured points p, q, b.
std::vector<CheckResult> abel_jacobi_checks(const PeriodData& pd, const SheetPoint& p, const SheetPoint& q,
                                            std::uint64_t seed, const std::string& subject, int principal_trials = 20);

}  // namespace cwb::curve
