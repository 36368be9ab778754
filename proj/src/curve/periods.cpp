#include "cwb/curve/periods.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace cwb::curve {

namespace {

template <unsigned N>
cplx gk(const std::function<cplx(real)>& f, real a, real b, const QuadratureOptions& q, real* err) {
  real e = 0;
  cplx v = boost::math::quadrature::gauss_kronrod<real, N>::integrate(f, a, b, q.max_depth, q.tolerance, &e);
  if (err) *err += e;
  return v;
}

cplx integrate(const std::function<cplx(real)>& f, real a, real b, const QuadratureOptions& q, real* err) {
  if (q.kronrod_points == 31) return gk<31>(f, a, b, q, err);
  if (q.kronrod_points == 61) return gk<61>(f, a, b, q, err);
  throw InvalidArgument("kronrod_points must be 31 or 61");
}

}  // namespace

CVector integrate_raw(const Segment& s, int g, const QuadratureOptions& q, real* error) {
  CVector out(g);
  for (int j = 0; j < g; ++j) {
    auto f = [&](real t) { return std::pow(s.x(t), j) * s.dx_over_y(t); };
    out(j) = integrate(f, s.t0(), s.t1(), q, error);
  }
  return out;
}

CVector integrate_raw(const Path& p, int g, const QuadratureOptions& q, real* error) {
  CVector out = CVector::Zero(g);
  for (const auto& s : p.segments()) out += integrate_raw(s, g, q, error);
  return out;
}

CMatrix PeriodData::period_frame() const {
  const int g = genus();
  CMatrix P(2 * g, 2 * g);
  P.topRows(g) = Omega;
  P.bottomRows(g) = Omega.conjugate();
  return P;
}

PeriodData compute_periods(const HomologyBasis& basis, const QuadratureOptions& q) {
  if (!(q.tolerance > 0)) throw InvalidArgument("quadrature tolerance must be positive");
  const auto& c = basis.curve();
  const int g = c->genus();
  const int nb = static_cast<int>(c->branch_points().size());
  CMatrix lasso(g, nb);
  real error = 0;
  for (int k = 0; k < nb; ++k) {
    Segment in(c, SegmentKind::into_branch, c->hub(), c->branch_points()[k], k, c->hub_y());
    lasso.col(k) = integrate_raw(in, g, q, &error);
  }
  return assemble_periods(basis, q, lasso, error);
}

PeriodData assemble_periods(const HomologyBasis& basis, const QuadratureOptions& q, const CMatrix& lasso, real error_estimate) {
  const int g = basis.genus();
  PeriodData pd{basis, q, lasso, {}, {}, {}, {}, {}, {}, {}, error_estimate, 0};
  pd.raw = CMatrix::Zero(g, 2 * g);
  for (int nu = 0; nu < 2 * g; ++nu) {
    real sign = 2;
    for (int k : basis.words()[nu]) {
      pd.raw.col(nu) += sign * pd.lasso.col(k);
      sign = -sign;
    }
    pd.raw.col(nu) *= static_cast<real>(basis.orientation()[nu]);
  }

  pd.A = pd.raw.leftCols(g);
  Eigen::JacobiSVD<CMatrix> svd(pd.A);
  const auto sv = svd.singularValues();
  pd.condition_A = sv(0) / sv(g - 1);
  if (!(pd.condition_A < 1e12L)) throw NumericalError("a-period matrix is ill-conditioned");
  pd.A_inv = pd.A.inverse();
  pd.Omega = pd.A_inv * pd.raw;
  pd.Z = pd.Omega.rightCols(g);
  pd.a = (pd.Z.conjugate() - pd.Z).inverse();
  pd.D = pd.period_frame().inverse();
  return pd;
}

CMatrix dual_basis_periods(const PeriodData& pd) { return pd.D * pd.period_frame(); }

CMatrix dual_basis_closed_form(const PeriodData& pd) {
  const int g = pd.genus();
  const CMatrix I = CMatrix::Identity(g, g);
  const CMatrix Za = pd.Z * pd.a;
  CMatrix D(2 * g, 2 * g);
  D.topLeftCorner(g, g) = I + Za;
  D.topRightCorner(g, g) = -Za;
  D.bottomLeftCorner(g, g) = -pd.a;
  D.bottomRightCorner(g, g) = pd.a;
  return D;
}

real v0_decomposition_defect(const PeriodData& pd) {
  const int g = pd.genus();
  CMatrix T = CMatrix::Zero(2 * g, 2 * g);
  for (int i = 0; i < g; ++i)
    T += pd.D.row(i).transpose() * pd.D.row(g + i) - pd.D.row(g + i).transpose() * pd.D.row(i);
  CMatrix R = CMatrix::Zero(2 * g, 2 * g);
  R.topRightCorner(g, g) = pd.a;
  R.bottomLeftCorner(g, g) = pd.a.conjugate();
  return max_abs(T - R);
}

TraceIdentity exact_trace_identity(const PeriodData& pd) {
  const int g = pd.genus();
  using GR = GaussianRational;
  std::vector<std::vector<GR>> X(g, std::vector<GR>(g));
  const CMatrix Xn = pd.Z.conjugate() - pd.Z;
  for (int j = 0; j < g; ++j)
    for (int k = 0; k < g; ++k) X[j][k] = GR::from_long_double(Xn(j, k).real(), Xn(j, k).imag());
  for (int j = 0; j < g; ++j)
    for (int k = j + 1; k < g; ++k) {
      GR m = (X[j][k] + X[k][j]) * GR(Rational(1, 2));
      X[j][k] = m;
      X[k][j] = m;
    }
  // Gauss-Jordan on [X | I]
  std::vector<std::vector<GR>> M(g, std::vector<GR>(2 * g));
  for (int j = 0; j < g; ++j) {
    for (int k = 0; k < g; ++k) M[j][k] = X[j][k];
    M[j][g + j] = GR(Rational(1));
  }
  for (int col = 0; col < g; ++col) {
    int piv = col;
    while (piv < g && M[piv][col].is_zero()) ++piv;
    if (piv == g) throw NumericalError("conj(Z) - Z is singular");
    std::swap(M[piv], M[col]);
    const GR inv = GR(Rational(1)) / M[col][col];
    for (auto& v : M[col]) v = v * inv;
    for (int r = 0; r < g; ++r) {
      if (r == col || M[r][col].is_zero()) continue;
      const GR f = M[r][col];
      for (int k = 0; k < 2 * g; ++k) M[r][k] = M[r][k] - f * M[col][k];
    }
  }
  TraceIdentity t;
  t.genus = g;
  for (int j = 0; j < g; ++j)
    for (int k = 0; k < g; ++k) t.value = t.value + M[j][g + k] * X[j][k];
  return t;
}

real max_abs(const CMatrix& m) {
  real r = 0;
  for (Eigen::Index i = 0; i < m.size(); ++i) r = std::max(r, std::abs(m.data()[i]));
  return r;
}

real min_eigenvalue_im(const CMatrix& Z) {
  const RMatrix Y = Z.imag();
  const RMatrix S = (Y + Y.transpose()) / 2;
  Eigen::SelfAdjointEigenSolver<RMatrix> es(S);
  return es.eigenvalues().minCoeff();
}

namespace {

nlohmann::json to_json(const CMatrix& m) {
  auto out = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    auto row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      row.push_back({static_cast<double>(m(i, j).real()), static_cast<double>(m(i, j).imag())});
    out.push_back(row);
  }
  return out;
}

}  // namespace

std::vector<CheckResult> period_checks(const PeriodData& pd, const PeriodData& refined, const std::string& subject) {
  const int g = pd.genus();
  std::vector<CheckResult> out;
  const real sym = max_abs(pd.Z - pd.Z.transpose());
  out.push_back(make_check("periods.symmetry", g, sym < 1e-8L,
                           {{"max_abs_Z_minus_Zt", static_cast<double>(sym)}, {"Z", to_json(pd.Z)}}, subject));
  const real ev = min_eigenvalue_im(pd.Z);
  out.push_back(make_check("periods.im_positive", g, ev > 0, {{"min_eigenvalue_ImZ", static_cast<double>(ev)}}, subject));
  const real dual = max_abs(dual_basis_periods(pd) - CMatrix::Identity(2 * g, 2 * g));
  const real closed = max_abs(dual_basis_closed_form(pd) - pd.D);
  out.push_back(make_check("periods.dual_basis", g, dual < 1e-8L && closed < 1e-8L,
                           {{"max_abs_periods_minus_identity", static_cast<double>(dual)},
                            {"max_abs_closed_form_minus_solved", static_cast<double>(closed)}},
                           subject));
  const real v0 = v0_decomposition_defect(pd);
  out.push_back(make_check("periods.v0_decomp", g, v0 < 1e-8L, {{"max_abs_defect", static_cast<double>(v0)}}, subject));
  const real conv = max_abs(pd.Z - refined.Z);
  const real conv_raw = max_abs(pd.raw - refined.raw);
  out.push_back(make_check("periods.self_convergence", g, conv < 1e-9L,
                           {{"max_abs_Z_difference", static_cast<double>(conv)},
                            {"max_abs_raw_difference", static_cast<double>(conv_raw)},
                            {"tolerance", static_cast<double>(pd.quadrature.tolerance)},
                            {"refined_tolerance", static_cast<double>(refined.quadrature.tolerance)}},
                           subject));
  const auto tr = exact_trace_identity(pd);
  out.push_back(make_check("periods.trace_identity", g, tr.exact(), {{"value", tr.value.str()}, {"expected", g}}, subject));
  return out;
}

}  // namespace cwb::curve
