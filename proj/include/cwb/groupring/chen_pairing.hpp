#pragma once

#include <functional>
#include <map>

#include "cwb/groupring/ncseries.hpp"
#include "cwb/groupring/sympoly.hpp"

namespace cwb::groupring {

// Linear combination of words (length <= 3) in form symbols with polynomial coefficients.
class FormalIterint {
 public:
  static constexpr std::size_t max_length = 3;

  void add(FormWord w, const SymPoly& coeff);
  const std::map<FormWord, SymPoly>& terms() const { return terms_; }

 private:
  std::map<FormWord, SymPoly> terms_;
};

// <w1..wr, s1..sm> = sum over splittings of the word into m consecutive nonempty blocks
// of prod_i P(s_i; block_i); the first letter goes with the earliest path factor.
SymPoly chen_pair(const FormalIterint& I, const NCSeries& s);
SymPoly chen_pair(const FormWord& w, const Monomial& m);

// Pi(F; G) = sum_nu F(nu) G(g+nu) - F(g+nu) G(nu), loops indexed from 1.
using LoopFunctional = std::function<SymPoly(int)>;
SymPoly Pi(Genus g, const LoopFunctional& F, const LoopFunctional& G);

}  // namespace cwb::groupring
