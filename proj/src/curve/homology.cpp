#include "cwb/curve/homology.hpp"

#include <sstream>

#include "cwb/curve/intersection.hpp"

namespace cwb::curve {

std::vector<LassoWord> candidate_words(int g) {
  std::vector<LassoWord> w;
  w.push_back({0, 1});
  for (int m = 1; m < g; ++m) {
    LassoWord a;
    for (int k = 2 * m; k >= 0; --k) a.push_back(k);
    a.push_back(2 * m + 1);
    w.push_back(a);
  }
  w.push_back({2, 1});
  for (int m = 1; m < g; ++m) w.push_back({2 * m + 2, 2 * m + 1});
  return w;
}

HomologyBasis HomologyBasis::build(const CurvePtr& c) {
  const int g = c->genus();
  HomologyBasis b;
  b.curve_ = c;
  b.words_ = candidate_words(g);
  b.orientation_.assign(2 * g, 1);
  const auto m = intersection_matrix(b);
  auto J = standard_symplectic(g);
  if (m == J) return b;
  for (auto& row : J)
    for (int& v : row) v = -v;
  if (m != J) {
    std::ostringstream os;
    for (const auto& row : m) {
      for (int v : row) os << ' ' << v;
      os << ';';
    }
    throw NumericalError("homology basis certification failed; intersection matrix:" + os.str());
  }
  // (alpha, beta) has the opposite orientation; (beta reversed in order, alpha reversed in order) is standard
  std::vector<LassoWord> w(2 * g);
  for (int i = 0; i < g; ++i) {
    w[i] = b.words_[g + (g - 1 - i)];
    w[g + i] = b.words_[g - 1 - i];
  }
  b.words_ = w;
  b.swapped_ = true;
  return b;
}

Path HomologyBasis::cycle(int nu) const {
  Path p = lasso_word_path(curve_, words_.at(nu));
  return orientation_[nu] > 0 ? p : p.reversed();
}

HomologyBasis HomologyBasis::with_reversed(int nu) const {
  HomologyBasis b = *this;
  b.orientation_.at(nu) = -b.orientation_[nu];
  return b;
}

std::string HomologyBasis::describe() const {
  std::ostringstream os;
  os << "lasso-words hub=" << curve_->hub().real() << "," << curve_->hub().imag()
     << " clearance_factor=" << curve_->options().clearance_factor << " swapped=" << swapped_ << " words=";
  for (std::size_t i = 0; i < words_.size(); ++i) {
    os << (i ? "|" : "") << (orientation_[i] < 0 ? "-" : "");
    for (std::size_t j = 0; j < words_[i].size(); ++j) os << (j ? "," : "") << words_[i][j];
  }
  return os.str();
}

}  // namespace cwb::curve
