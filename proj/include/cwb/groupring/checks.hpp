#pragma once

#include <cstdint>
#include <map>

#include "cwb/check.hpp"
#include "cwb/groupring/chen_pairing.hpp"
#include "cwb/groupring/heisenberg.hpp"
#include "cwb/groupring/magnus.hpp"
#include "cwb/lattice/cohomology.hpp"

namespace cwb::groupring {

// Magnus(surface relator) - 1 minus the written-out degree <= 3 expansion, both at `cap`.
NCSeries modJ4_defect(Genus g, int cap);
CheckResult verify_modJ4(Genus g);

CheckResult verify_heisenberg(Genus g, std::uint64_t seed);

struct J2J3Result {
  std::size_t rank = 0;
  std::size_t relation_rank = 0;     // rank of the degree-2 part of relations with zero linear part
  std::size_t relations_tried = 0;
};

// Brute force over u r v with |u| + |r| + |v| <= max_length; resource cap g <= 2.
J2J3Result j2j3_rank(Genus g, int max_length = 6);
CheckResult verify_j2j3_rank(Genus g);

// Magnus(sigma_L^{g-1}) - 1 - (g-1)(sigma_L - 1) with sigma_L = [gamma_1, gamma_{g+1}], at cap 4.
NCSeries collino_defect(Genus g);
int collino_coefficient(Genus g);  // coefficient of c_1 c_{g+1} in Magnus(sigma_L^{g-1}) - 1
CheckResult verify_collino(Genus g);

// The integrand sum_jk 2 a(j,k) w wj wbk + w xi.
FormalIterint kaenders_integrand(Genus g, const FormAlphabet& forms, bool with_length3 = true, bool with_xi = true);

// Right-hand side of the LHS lemma, before normalization.
SymPoly lhs_lemma_expected(Genus g, const SurfaceAlphabet& loops, const FormAlphabet& forms);

// normalize(<I, LHS of the mod J^4 identity> - expected).
SymPoly lhs_lemma_remainder(Genus g, bool include_cubic = true);

// sum_jk 2 a(j,k) (Pi(w.wbk; wj) + Pi(w; wj.wbk)), the value of minus the cubic pairing.
SymPoly lhs_cubic_block(Genus g, const SurfaceAlphabet& loops, const FormAlphabet& forms);

CheckResult verify_lhs_lemma(Genus g);

// Meridian zero declarations: Rb and Rq' of w, wj, wbk.
std::set<Atom> meridian_zeros(Genus g, const SurfaceAlphabet& loops, const FormAlphabet& forms);
SymPoly dbdq_pairing(Genus g, bool declare_zeros, bool with_length3 = true, bool with_xi = true);
CheckResult verify_dbdq_vanish(Genus g);

}  // namespace cwb::groupring
