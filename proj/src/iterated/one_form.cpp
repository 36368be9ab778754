#include "cwb/iterated/one_form.hpp"

namespace cwb::iterated {

OneForm OneForm::conjugate() const { return {cbar.conjugate(), c.conjugate(), "conj(" + label + ")"}; }

OneForm omega(int g, int i) {
  OneForm f{CVector::Zero(g), CVector::Zero(g), "w" + std::to_string(i + 1)};
  f.c(i) = 1;
  return f;
}

OneForm omega_bar(int g, int i) {
  OneForm f{CVector::Zero(g), CVector::Zero(g), "wb" + std::to_string(i + 1)};
  f.cbar(i) = 1;
  return f;
}

OneForm dual_form(const curve::PeriodData& pd, int k) {
  const int g = pd.genus();
  return {pd.D.row(k).head(g).transpose(), pd.D.row(k).tail(g).transpose(), "x" + std::to_string(k + 1)};
}

std::vector<OneForm> dual_basis_forms(const curve::PeriodData& pd) {
  std::vector<OneForm> out;
  for (int k = 0; k < 2 * pd.genus(); ++k) out.push_back(dual_form(pd, k));
  return out;
}

OneForm operator+(const OneForm& a, const OneForm& b) { return {a.c + b.c, a.cbar + b.cbar, a.label + "+" + b.label}; }

OneForm operator*(cplx s, const OneForm& a) { return {s * a.c, s * a.cbar, "s*" + a.label}; }

}  // namespace cwb::iterated
