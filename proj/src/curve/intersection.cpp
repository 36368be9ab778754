#include "cwb/curve/intersection.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <unordered_map>

namespace cwb::curve {

namespace {

class Lifter {
 public:
  Lifter(const Curve& c, cplx x0, cplx y0) : c_(c) {
    out_.x.push_back(x0);
    out_.y.push_back(y0);
  }

  void to(cplx x, int depth = 0) {
    cplx s = std::sqrt(c_.f_odd(x));
    const cplx prev = out_.y.back();
    if (std::abs(s - prev) > std::abs(s + prev)) s = -s;
    if (std::abs(s - prev) > 0.2L * std::abs(prev)) {
      if (depth > 30) throw NumericalError("intersection oracle: sheet tracking step underflow");
      const cplx mid = 0.5L * (out_.x.back() + x);
      to(mid, depth + 1);
      to(x, depth + 1);
      return;
    }
    out_.x.push_back(x);
    out_.y.push_back(s);
  }

  void line(cplx b, real step) {
    const cplx a = out_.x.back();
    const int n = std::max(1, static_cast<int>(std::ceil(std::abs(b - a) / step)));
    for (int i = 1; i <= n; ++i) to(a + (b - a) * (static_cast<real>(i) / n));
  }

  void circle(cplx center, int n) {
    const cplx start = out_.x.back() - center;
    for (int i = 1; i <= n; ++i) {
      const real th = 2 * std::numbers::pi_v<real> * i / n;
      to(center + start * std::polar<real>(1, th));
    }
  }

  LiftedPolyline take() { return std::move(out_); }

 private:
  const Curve& c_;
  LiftedPolyline out_;
};

real cross(cplx a, cplx b) { return (std::conj(a) * b).imag(); }

}  // namespace

LiftedPolyline lift_word(const Curve& c, const LassoWord& word, cplx hub_offset, real radius) {
  const cplx h = c.hub() + hub_offset;
  cplx yh = std::sqrt(c.f_odd(h));
  if (std::abs(yh - c.hub_y()) > std::abs(yh + c.hub_y())) yh = -yh;
  Lifter L(c, h, yh);
  const real step = c.clearance();
  for (int k : word) {
    const cplx e = c.branch_points().at(k);
    const cplx u = (e - h) / std::abs(e - h);
    L.line(e - radius * u, step);
    L.circle(e, 48);
    L.line(h, step);
  }
  return L.take();
}

LiftedPolyline reversed(const LiftedPolyline& p) {
  LiftedPolyline r{{p.x.rbegin(), p.x.rend()}, {p.y.rbegin(), p.y.rend()}};
  return r;
}

int intersection_number(const Curve& c, const LiftedPolyline& gamma, const LiftedPolyline& delta) {
  const real cell = c.clearance();
  std::unordered_map<long long, std::vector<std::size_t>> grid;
  auto key = [](long long a, long long b) { return a * 1000003LL + b; };
  auto idx = [cell](real v) { return static_cast<long long>(std::floor(v / cell)); };
  for (std::size_t j = 0; j + 1 < delta.x.size(); ++j) {
    const cplx a = delta.x[j], b = delta.x[j + 1];
    for (long long u = idx(std::min(a.real(), b.real())); u <= idx(std::max(a.real(), b.real())); ++u)
      for (long long v = idx(std::min(a.imag(), b.imag())); v <= idx(std::max(a.imag(), b.imag())); ++v)
        grid[key(u, v)].push_back(j);
  }
  int total = 0;
  std::vector<std::size_t> cand;
  for (std::size_t i = 0; i + 1 < gamma.x.size(); ++i) {
    const cplx p = gamma.x[i], dp = gamma.x[i + 1] - p;
    cand.clear();
    for (long long u = idx(std::min(p.real(), gamma.x[i + 1].real())); u <= idx(std::max(p.real(), gamma.x[i + 1].real())); ++u)
      for (long long v = idx(std::min(p.imag(), gamma.x[i + 1].imag())); v <= idx(std::max(p.imag(), gamma.x[i + 1].imag())); ++v) {
        auto it = grid.find(key(u, v));
        if (it != grid.end()) cand.insert(cand.end(), it->second.begin(), it->second.end());
      }
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    for (std::size_t j : cand) {
      const cplx q = delta.x[j], dq = delta.x[j + 1] - q;
      const real den = cross(dp, dq);
      if (den == 0) continue;
      const real s = cross(q - p, dq) / den;
      const real t = cross(q - p, dp) / den;
      if (s < 0 || s >= 1 || t < 0 || t >= 1) continue;
      const cplx yg = gamma.y[i] + s * (gamma.y[i + 1] - gamma.y[i]);
      const cplx yd = delta.y[j] + t * (delta.y[j + 1] - delta.y[j]);
      if (std::abs(yg - yd) >= std::abs(yg + yd)) continue;
      total += den > 0 ? 1 : -1;
    }
  }
  return total;
}

IntersectionMatrix intersection_matrix(const Curve& c, const std::vector<LassoWord>& words,
                                       const std::vector<int>& orientation) {
  const int n = static_cast<int>(words.size());
  std::vector<LiftedPolyline> loops;
  for (int l = 0; l < n; ++l) {
    const cplx offset = 0.15L * c.clearance() * std::polar<real>(1, 0.7L + 1.3L * l);
    const real radius = c.clearance() * (0.35L + 0.5L * l / n);
    auto p = lift_word(c, words[l], offset, radius);
    loops.push_back(orientation[l] < 0 ? reversed(p) : p);
  }
  IntersectionMatrix m(n, std::vector<int>(n, 0));
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      m[a][b] = intersection_number(c, loops[a], loops[b]);
      m[b][a] = -m[a][b];
    }
  return m;
}

IntersectionMatrix intersection_matrix(const HomologyBasis& basis) {
  return intersection_matrix(*basis.curve(), basis.words(), basis.orientation());
}

IntersectionMatrix standard_symplectic(int g) {
  IntersectionMatrix J(2 * g, std::vector<int>(2 * g, 0));
  for (int i = 0; i < g; ++i) {
    J[i][g + i] = 1;
    J[g + i][i] = -1;
  }
  return J;
}

CheckResult certify_basis(const HomologyBasis& basis) {
  const auto m = intersection_matrix(basis);
  const auto J = standard_symplectic(basis.genus());
  return make_check("homology.intersection", basis.genus(), m == J,
                    {{"intersection_matrix", m}, {"expected", J}, {"basis", basis.describe()}});
}

}  // namespace cwb::curve
