#pragma once

#include <vector>

#include <Eigen/Dense>

#include "cwb/check.hpp"
#include "cwb/curve/homology.hpp"
#include "cwb/curve/polynomial.hpp"

namespace cwb::curve {

using CMatrix = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic>;
using CVector = Eigen::Matrix<cplx, Eigen::Dynamic, 1>;
using RMatrix = Eigen::Matrix<real, Eigen::Dynamic, Eigen::Dynamic>;
using RVector = Eigen::Matrix<real, Eigen::Dynamic, 1>;

struct QuadratureOptions {
  real tolerance = 1e-13L;
  int kronrod_points = 61;  // 31 or 61
  unsigned max_depth = 20;
};

// Integrals of the raw differentials X^j dX / Y, j = 0..g-1, over one segment or path.
CVector integrate_raw(const Segment& s, int g, const QuadratureOptions& q, real* error = nullptr);
CVector integrate_raw(const Path& p, int g, const QuadratureOptions& q, real* error = nullptr);

struct PeriodData {
  HomologyBasis basis;
  QuadratureOptions quadrature;
  CMatrix lasso;   // g x (#branch points): integral from the hub into e_k on the hub sheet
  CMatrix raw;     // g x 2g
  CMatrix A;       // g x g, a-periods
  CMatrix A_inv;
  CMatrix Omega;   // g x 2g = (I, Z)
  CMatrix Z;
  CMatrix a;       // (conj(Z) - Z)^{-1}
  CMatrix D;       // 2g x 2g: x_k = sum_j D(k, j) w_j + D(k, g + j) conj(w_j)
  real error_estimate = 0;
  real condition_A = 0;

  int genus() const { return basis.genus(); }
  CVector normalize(const CVector& raw_values) const { return A_inv * raw_values; }
  CMatrix period_frame() const;  // rows: periods of w_1..w_g then conj(w_1)..conj(w_g)
};

PeriodData compute_periods(const HomologyBasis& basis, const QuadratureOptions& q = {});
// Everything downstream of the lasso integrals (used when loading cached values).
PeriodData assemble_periods(const HomologyBasis& basis, const QuadratureOptions& q, const CMatrix& lasso, real error_estimate);

// Periods of the real dual basis, D * period_frame(); identity when consistent.
CMatrix dual_basis_periods(const PeriodData& pd);
// D from the closed form in terms of Z and a.
CMatrix dual_basis_closed_form(const PeriodData& pd);
// max |sum_i (x_i (x) x_{g+i} - x_{g+i} (x) x_i) - sum (a_jk w_j (x) conj w_k + conj a_jk conj w_j (x) w_k)|
real v0_decomposition_defect(const PeriodData& pd);

struct TraceIdentity {
  GaussianRational value;  // sum_{jk} a_jk X_jk with X = sym(conj Z - Z) rationalized, a = X^{-1} exactly
  int genus = 0;
  bool exact() const { return value == GaussianRational(Rational(genus)); }
};
TraceIdentity exact_trace_identity(const PeriodData& pd);

real max_abs(const CMatrix& m);
real min_eigenvalue_im(const CMatrix& Z);

// The period suite for one curve: symmetry, positivity, dual basis, v0 decomposition,
// self-convergence against `refined` and the exact trace identity.
std::vector<CheckResult> period_checks(const PeriodData& pd, const PeriodData& refined, const std::string& subject);

}  // namespace cwb::curve
