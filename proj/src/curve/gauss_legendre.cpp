#include "cwb/curve/gauss_legendre.hpp"

#include <algorithm>

#include <boost/math/special_functions/legendre.hpp>

namespace cwb::curve {

GaussLegendre::GaussLegendre(int points) : n(points) {
  if (points < 2 || points > 80) throw InvalidArgument("Gauss-Legendre order must be in 2..80");
  const auto zeros = boost::math::legendre_p_zeros<real>(n);  // nonnegative zeros, ascending
  std::vector<real> x;
  for (auto z : zeros) {
    x.push_back(z);
    if (z != 0) x.push_back(-z);
  }
  std::sort(x.begin(), x.end());
  std::vector<real> w;
  for (real xi : x) {
    const real dp = boost::math::legendre_p_prime<real>(n, xi);
    w.push_back(2 / ((1 - xi * xi) * dp * dp));
  }
  for (int i = 0; i < n; ++i) {
    nodes.push_back((x[i] + 1) / 2);
    weights.push_back(w[i] / 2);
  }

  // Interpolant coefficients c_k = (2k+1)/2 sum_j w_j P_k(x_j) f_j, and
  // int_{-1}^{x} P_k = (P_{k+1}(x) - P_{k-1}(x)) / (2k+1), int P_0 = x + 1.
  S.assign(static_cast<std::size_t>(n * n), 0);
  std::vector<std::vector<real>> P(n + 1, std::vector<real>(n));
  for (int k = 0; k <= n; ++k)
    for (int i = 0; i < n; ++i) P[k][i] = boost::math::legendre_p<real>(k, x[i]);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const real integral = k == 0 ? x[i] + 1 : (P[k + 1][i] - P[k - 1][i]) / (2 * k + 1);
      for (int j = 0; j < n; ++j) S[static_cast<std::size_t>(i * n + j)] += integral * (2 * k + 1) / 2 * w[j] * P[k][j] / 2;
    }
}

}  // namespace cwb::curve
