#pragma once

#include <string>
#include <vector>

#include "cwb/curve/path.hpp"

namespace cwb::curve {

// A lasso word [k1, k2, ...] is the loop hub -> e_k1 -> hub -> e_k2 -> ... with the sheet
// flipping at each branch point; words of even length close up.
using LassoWord = std::vector<int>;

// Cycles gamma_1..gamma_2g as lasso words from the hub, with per-cycle orientation.
class HomologyBasis {
 public:
  static HomologyBasis build(const CurvePtr& c);

  const CurvePtr& curve() const { return curve_; }
  int genus() const { return curve_->genus(); }
  const std::vector<LassoWord>& words() const { return words_; }
  const std::vector<int>& orientation() const { return orientation_; }
  bool swapped() const { return swapped_; }

  Path cycle(int nu) const;  // 0-based
  HomologyBasis with_reversed(int nu) const;
  std::string describe() const;  // construction parameters, e.g. for cache keys and reports

 private:
  CurvePtr curve_;
  std::vector<LassoWord> words_;
  std::vector<int> orientation_;
  bool swapped_ = false;
};

// Candidate words before orientation fixing: alphas then betas.
std::vector<LassoWord> candidate_words(int g);

}  // namespace cwb::curve
