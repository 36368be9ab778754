#pragma once

#include <vector>

#include "cwb/common.hpp"

namespace cwb::curve {

// n-point Gauss-Legendre rule mapped to [0, 1], plus the spectral integration matrix
// S(i, j) = integral over [0, t_i] of the j-th Lagrange basis polynomial on the nodes.
struct GaussLegendre {
  int n = 0;
  std::vector<real> nodes;
  std::vector<real> weights;
  std::vector<real> S;  // row-major n x n

  explicit GaussLegendre(int points);
  real integration(int i, int j) const { return S[static_cast<std::size_t>(i * n + j)]; }
};

}  // namespace cwb::curve
