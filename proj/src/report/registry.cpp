#include "cwb/report/registry.hpp"

#include <sstream>

namespace cwb::report {

const std::vector<CheckInfo>& registry() {
  static const std::vector<CheckInfo> r{
      {"lemma_cal_of_cup.phi_v0", Suite::lattice, "Lemma cal-of-cup",
       "pi^* phi(v0') = pi^*((2g-2)[C] + 2[L]) in H^2(C^2), coordinate by coordinate",
       "exact integer arithmetic; [L] and [C] independent", true},
      {"prop_gr2.index", Suite::lattice, "Prop. gr2",
       "K0 = Sym^2 H + Z v0 has index 2 in K; Smith invariants (1,...,1,2); both summands primitive",
       "exact Smith normal form of the inclusion", true},
      {"thm_main.theta", Suite::lattice, "Theorem main' (1)",
       "theta is a well-defined F2-linear map with theta(v (x) v) = v",
       "exhaustive over F2^{2g} for g <= 2, 1000 seeded trials otherwise", true},
      {"lemma_modJ4", Suite::groupring, "eq. modJ4",
       "surface relation: Magnus(prod [gamma_i, gamma_{g+i}]) - 1 equals the written degree <= 3 expansion; "
       "Magnus(delta_b delta_q') - 1 = d_b + d_q' + d_b d_q'",
       "exact noncommutative series at cap 3, degree-4 defect only", true},
      {"heisenberg.presentation", Suite::groupring, "plumbing",
       "normal-form Heisenberg group satisfies the surface relation and [a_i, b_i] = delta central",
       "exact integer normal forms, seeded random words", true},
      {"sandling_tahara.j2j3_rank", Suite::groupring, "Prop. gr2 (Sandling-Tahara rank)",
       "rank J^2/J^3 of the surface group ring = g(2g+1) + 1 = rank K",
       "brute-force relation enumeration, stable between word-length bounds 6 and 7; g <= 2", true},
      {"collino.congruence", Suite::groupring, "eq. Collinoeq",
       "sigma_{C_b} - 1 = (g-1)(sigma_L - 1) mod J^3 with sigma_L a commutator",
       "exact Magnus expansion at cap 4", true},
      {"lemma_lhs_modJ4", Suite::groupring, "Lemma LHSofmodJ^4",
       "pairing of the length <= 3 integrand with the LHS of eq. modJ4 equals the Kaenders symbol combination",
       "symbolic normalization (shuffle, conjugation and symmetry rules), zero remainder", true},
      {"lemma_dbdq_vanish", Suite::groupring, "Lemma dbdq-I-vanish",
       "pairing with d_b + d_q' + d_b d_q' vanishes once meridian integrals of closed forms vanish",
       "symbolic normalization, zero remainder", true},
      {"homology.intersection", Suite::periods, "plumbing",
       "intersection matrix of the constructed cycles is the standard symplectic matrix",
       "signed same-sheet crossings of deformed lifted polylines", false},
      {"periods.symmetry", Suite::periods, "Riemann bilinear relations", "|Z - Z^T| < 1e-8",
       "adaptive Gauss-Kronrod periods", false},
      {"periods.im_positive", Suite::periods, "Riemann bilinear relations", "Im Z positive definite",
       "smallest eigenvalue of the symmetrized Im Z", false},
      {"periods.dual_basis", Suite::periods, "Prop. rec.law",
       "periods of the real dual basis x_k form the identity; closed form in Z and a = (conj Z - Z)^{-1} agrees",
       "within 1e-8", false},
      {"periods.v0_decomp", Suite::periods, "eq. v0-decomp",
       "sum_i (x_i (x) x_{g+i} - x_{g+i} (x) x_i) = sum (a_jk w_j (x) conj w_k + conj a_jk conj w_j (x) w_k)",
       "entrywise within 1e-8", false},
      {"periods.self_convergence", Suite::periods, "plumbing",
       "Z unchanged under a tighter tolerance with a different Kronrod rule", "within 1e-9", false},
      {"periods.trace_identity", Suite::periods, "Prop. rec.law",
       "sum_jk a_jk (conj Z - Z)_jk = g", "exact Gaussian-rational post-processing", false},
      {"abel.principal", Suite::abel_jacobi, "eq. AJmap-u",
       "u(alpha + iota alpha - beta - iota beta) = 0 in Jac(C)",
       "20 seeded random divisors, each point reached through a different sheet lasso; residual < 1e-6", false},
      {"riemann_constant.t_independence", Suite::abel_jacobi, "eq. riemann-constant",
       "2 kappa_p independent of the auxiliary point t in K_C = (g-1)(t + iota t)", "residual < 1e-6", false},
      {"abel.pq_relation", Suite::abel_jacobi, "Theorem main' (2)",
       "u(p' + q' - p - q) = 2 u(q' - p)", "residual < 1e-6", false},
      {"riemann_constant.weierstrass", Suite::abel_jacobi, "eq. riemann-constant",
       "2 kappa_p is a lattice point when p is a Weierstrass point", "residual < 1e-6", false},
      {"riemann_constant.shift", Suite::abel_jacobi, "eq. riemann-constant",
       "2 kappa_p~ - 2 kappa_p = (2g-2) u(p~ - p)", "residual < 1e-6", false},
      {"iterated.kernel_agreement", Suite::iterated, "plumbing",
       "OpenMP panel kernel with Chen folding agrees with the serial augmented-state sweep", "length <= 3, within 1e-10",
       false},
      {"iterated.shuffle", Suite::iterated, "shuffle relation",
       "int ww' + int w'w = int w int w' on all basis loops and dual forms, and on 50 random loops and forms",
       "residual < 1e-8", false},
      {"iterated.composition", Suite::iterated, "Lemma dbdq-I-vanish (path composition)",
       "int_{ab} w1 w2 = int_a w1 w2 + int_a w1 int_b w2 + int_b w1 w2", "20 seeded random splits, residual < 1e-8",
       false},
      {"iterated.homotopy", Suite::iterated, "plumbing",
       "length-1 integrals agree on homotopic paths with different decompositions", "within 1e-9", false},
      {"thm_main1.psi1", Suite::iterated, "eq. psi1-basis",
       "int_{gamma_k}(x_i x_j + x_j x_i) = delta_ik delta_jk, so psi_1(x_i (x) x_i) = x_i / 2; mod 2 this is theta",
       "full (2g)^3 tensor within 1e-7", false},
      {"thm_main2.kaenders", Suite::iterated, "eq. high.pr.rel",
       "sum a_jk{-2 Pi(w_i w_j; conj w_k) + 2 Pi(w_i conj w_k; w_j) + Pi(w_i; w_j conj w_k)} = 2 kappa_p mod lattice",
       "iterated quadrature against Abel-Jacobi integrals of divisors, two base points; residual < kaenders tolerance",
       false},
      {"iterated.conjugation_symmetry", Suite::iterated, "plumbing",
       "swapping w and conj w in the Pi-combination conjugates it", "independent discretization, within 1e-8", false},
      {"thm_main2.arithmetic", Suite::main, "Theorem main''",
       "u(p' + q' - p - q + (2g-2) b - K_C) = 2 int_p^{q'} w + (2g-2) int_p^b w + 2 kappa_p",
       "different base points and K_C representatives on the two sides, 5 random b; residual < 1e-6", false},
      {"lemma_res.explicit", Suite::main, "eq. res_sum, eq. res_rel",
       "2 pi i (Res_b + Res_q') = 2g and Res_b = (g-1) Res_q', hence (2g-2, 2)",
       "derived from collino.congruence and the exact trace identity", false},
  };
  return r;
}

const CheckInfo& find_check(const std::string& id) {
  for (const auto& c : registry())
    if (c.id == id) return c;
  std::string valid;
  for (const auto& c : registry()) valid += "\n  " + c.id;
  throw InvalidArgument("unknown check id '" + id + "'; valid ids:" + valid);
}

std::string explain(const std::string& id) {
  const auto& c = find_check(id);
  std::ostringstream os;
  os << c.id << "\n"
     << "  suite:     " << to_string(c.suite) << "\n"
     << "  anchor:    " << c.anchor << "\n"
     << "  statement: " << c.statement << "\n"
     << "  oracle:    " << c.oracle << "\n";
  return os.str();
}

}  // namespace cwb::report
