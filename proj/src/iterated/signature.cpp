#include "cwb/iterated/signature.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cwb::iterated {

Signature Signature::zero(int n, int depth) {
  Signature s;
  s.n = n;
  s.depth = depth;
  s.l1.assign(n, 0);
  if (depth >= 2) s.l2.assign(static_cast<std::size_t>(n) * n, 0);
  if (depth >= 3) s.l3.assign(static_cast<std::size_t>(n) * n * n, 0);
  return s;
}

real Signature::distance(const Signature& o) const {
  real d = 0;
  for (std::size_t i = 0; i < l1.size(); ++i) d = std::max(d, std::abs(l1[i] - o.l1[i]));
  for (std::size_t i = 0; i < l2.size(); ++i) d = std::max(d, std::abs(l2[i] - o.l2[i]));
  for (std::size_t i = 0; i < l3.size(); ++i) d = std::max(d, std::abs(l3[i] - o.l3[i]));
  return d;
}

Signature chen_product(const Signature& x, const Signature& y) {
  const int n = x.n;
  Signature z = x;
  for (int a = 0; a < n; ++a) z.l1[a] += y.l1[a];
  if (x.depth >= 3)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          z.l3[(a * n + b) * n + c] += x.l2[a * n + b] * y.l1[c] + x.l1[a] * y.l2[b * n + c] + y.l3[(a * n + b) * n + c];
  if (x.depth >= 2)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) z.l2[a * n + b] += x.l1[a] * y.l1[b] + y.l2[a * n + b];
  return z;
}

PanelValues panel_values(const curve::PeriodData& pd, const curve::Path& path, const std::vector<OneForm>& forms,
                         const curve::GaussLegendre& rule, int base_panels) {
  const int g = pd.genus(), N = rule.n, n = static_cast<int>(forms.size());
  const auto panels = path.panels(rule, base_panels);
  PanelValues out(panels.size(), std::vector<cplx>(static_cast<std::size_t>(n) * N));
#pragma omp parallel for schedule(static)
  for (std::size_t p = 0; p < panels.size(); ++p) {
    CVector rho(g);
    for (int i = 0; i < N; ++i) {
      cplx xm = 1;
      for (int m = 0; m < g; ++m) {
        rho(m) = xm;
        xm *= panels[p].x[i];
      }
      const CVector w = pd.A_inv * rho * panels[p].dxy[i];
      const CVector wc = w.conjugate();
      for (int a = 0; a < n; ++a)
        out[p][a * N + i] = (forms[a].c.transpose() * w)(0) + (forms[a].cbar.transpose() * wc)(0);
    }
  }
  return out;
}

namespace {

// Advances `s` across one panel with node values h (n x N).
void sweep(Signature& s, const std::vector<cplx>& h, const curve::GaussLegendre& rule) {
  const int n = s.n, N = rule.n, depth = s.depth;
  std::vector<cplx> J1(static_cast<std::size_t>(n) * N), J2;
  for (int a = 0; a < n; ++a)
    for (int i = 0; i < N; ++i) {
      cplx acc = s.l1[a];
      for (int j = 0; j < N; ++j) acc += rule.integration(i, j) * h[a * N + j];
      J1[a * N + i] = acc;
    }
  if (depth >= 3) {
    J2.resize(static_cast<std::size_t>(n) * n * N);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int i = 0; i < N; ++i) {
          cplx acc = s.l2[a * n + b];
          for (int j = 0; j < N; ++j) acc += rule.integration(i, j) * J1[a * N + j] * h[b * N + j];
          J2[(a * n + b) * N + i] = acc;
        }
    for (int ab = 0; ab < n * n; ++ab)
      for (int c = 0; c < n; ++c) {
        cplx acc = 0;
        for (int j = 0; j < N; ++j) acc += rule.weights[j] * J2[ab * N + j] * h[c * N + j];
        s.l3[ab * n + c] += acc;
      }
  }
  if (depth >= 2)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        cplx acc = 0;
        for (int j = 0; j < N; ++j) acc += rule.weights[j] * J1[a * N + j] * h[b * N + j];
        s.l2[a * n + b] += acc;
      }
  for (int a = 0; a < n; ++a) {
    cplx acc = 0;
    for (int j = 0; j < N; ++j) acc += rule.weights[j] * h[a * N + j];
    s.l1[a] += acc;
  }
}

}  // namespace

Signature signature_serial(const PanelValues& v, int n, int depth, const curve::GaussLegendre& rule) {
  Signature s = Signature::zero(n, depth);
  for (const auto& h : v) sweep(s, h, rule);
  return s;
}

Signature signature_parallel(const PanelValues& v, int n, int depth, const curve::GaussLegendre& rule) {
  std::vector<Signature> local(v.size(), Signature::zero(n, depth));
#pragma omp parallel for schedule(static)
  for (std::size_t p = 0; p < v.size(); ++p) sweep(local[p], v[p], rule);
  Signature s = Signature::zero(n, depth);
  for (const auto& l : local) s = chen_product(s, l);
  return s;
}

SignatureResult path_signature(const curve::PeriodData& pd, const curve::Path& path, const std::vector<OneForm>& forms,
                               int depth, const KernelOptions& opt, Kernel kernel) {
  if (depth < 1 || depth > 3) throw InvalidArgument("signature depth must be 1..3");
  const int n = static_cast<int>(forms.size());
  if (path.empty()) return {Signature::zero(n, depth), 0, 0};
  const curve::GaussLegendre rule(opt.nodes);
  auto run = [&](int base) {
    const auto v = panel_values(pd, path, forms, rule, base);
    SignatureResult r;
    r.value = kernel == Kernel::serial ? signature_serial(v, n, depth, rule) : signature_parallel(v, n, depth, rule);
    r.panels = static_cast<int>(v.size());
    return r;
  };
  SignatureResult prev = run(opt.base_panels);
  int base = opt.base_panels;
  for (int k = 0; k < opt.max_refinements; ++k) {
    base *= 2;
    SignatureResult next = run(base);
    next.error_estimate = next.value.distance(prev.value);
    if (next.error_estimate < opt.tolerance) return next;
    prev = std::move(next);
  }
  return prev;
}

IterIntegralValue iterint(const curve::PeriodData& pd, const curve::Path& path, const std::vector<OneForm>& word,
                          const KernelOptions& opt) {
  const int r = static_cast<int>(word.size());
  if (r < 1 || r > 3) throw InvalidArgument("iterated integral words have length 1..3");
  const auto res = path_signature(pd, path, word, r, opt);
  std::string label;
  for (const auto& f : word) label += (label.empty() ? "" : " ") + f.label;
  const cplx v = r == 1 ? res.value.at(0) : r == 2 ? res.value.at(0, 1) : res.value.at(0, 1, 2);
  return {v, res.error_estimate, label};
}

}  // namespace cwb::iterated
