#pragma once

#include <string>

#include "cwb/curve/periods.hpp"

namespace cwb::iterated {

using curve::CMatrix;
using curve::CVector;

// sum_j c_j w_j + cbar_j conj(w_j) in terms of the normalized holomorphic differentials.
struct OneForm {
  CVector c;
  CVector cbar;
  std::string label;

  int genus() const { return static_cast<int>(c.size()); }
  OneForm conjugate() const;
};

OneForm omega(int g, int i);      // w_{i+1}
OneForm omega_bar(int g, int i);  // conj(w_{i+1})
// Real dual basis x_{k+1}: periods over gamma_l are delta_kl.
OneForm dual_form(const curve::PeriodData& pd, int k);
std::vector<OneForm> dual_basis_forms(const curve::PeriodData& pd);

OneForm operator+(const OneForm& a, const OneForm& b);
OneForm operator*(cplx s, const OneForm& a);

}  // namespace cwb::iterated
