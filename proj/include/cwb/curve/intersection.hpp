#pragma once

#include <vector>

#include "cwb/check.hpp"
#include "cwb/curve/homology.hpp"

namespace cwb::curve {

// A closed loop on the curve as a dense polyline in the x-plane with continued y values.
struct LiftedPolyline {
  std::vector<cplx> x;
  std::vector<cplx> y;
};

// Deformed copy of a lasso word: hub shifted by `hub_offset`, each branch point encircled
// counterclockwise at radius `radius` instead of touched.
LiftedPolyline lift_word(const Curve& c, const LassoWord& word, cplx hub_offset, real radius);
LiftedPolyline reversed(const LiftedPolyline& p);

// Signed count of transversal crossings on the same sheet; +1 when (gamma', delta') is positively oriented.
int intersection_number(const Curve& c, const LiftedPolyline& gamma, const LiftedPolyline& delta);

using IntersectionMatrix = std::vector<std::vector<int>>;

IntersectionMatrix intersection_matrix(const Curve& c, const std::vector<LassoWord>& words,
                                       const std::vector<int>& orientation);
IntersectionMatrix intersection_matrix(const HomologyBasis& basis);
IntersectionMatrix standard_symplectic(int g);

CheckResult certify_basis(const HomologyBasis& basis);

}  // namespace cwb::curve
