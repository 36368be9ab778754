#pragma once

#include <cstdint>
#include <vector>

#include "cwb/curve/abel_jacobi.hpp"
#include "cwb/iterated/signature.hpp"

namespace cwb::iterated {

using curve::SheetPoint;

// tau gamma_nu tau^{-1} for each basis loop, with tau the path from p to the hub.
std::vector<curve::Path> based_loops(const curve::PeriodData& pd, const SheetPoint& p);

struct KaendersResult {
  CVector lhs;                 // the Pi-combination
  curve::JacobianPoint kappa;  // 2 kappa_p
  curve::LatticeReduction difference;
  real conjugation_defect = 0;  // |Pi-combination with w <-> conj(w) - conj(lhs)|
  real quadrature_error = 0;
};

KaendersResult kaenders(const curve::PeriodData& pd, const SheetPoint& p, const SheetPoint& t,
                        const KernelOptions& opt = {});

struct MainArithmeticResult {
  real residual = 0;        // LHS - RHS reduced
  real fibre_residual = 0;  // u(q + q' - t - iota t)
};

MainArithmeticResult main_theorem_arithmetic(const curve::PeriodData& pd, const SheetPoint& p, const SheetPoint& q,
                                             const SheetPoint& b, const SheetPoint& t1, const SheetPoint& t2);

// T_ijk = integral over gamma_k of (x_i x_j + x_j x_i), shape (2g)^3 flattened as (i * 2g + j) * 2g + k.
std::vector<cplx> psi1_tensor(const curve::PeriodData& pd, const KernelOptions& opt = {});

CheckResult shuffle_check(const curve::PeriodData& pd, std::uint64_t seed, const std::string& subject,
                          int random_trials = 50, const KernelOptions& opt = {});
CheckResult composition_check(const curve::PeriodData& pd, std::uint64_t seed, const std::string& subject,
                              int trials = 20, const KernelOptions& opt = {});
CheckResult homotopy_check(const curve::PeriodData& pd, std::uint64_t seed, const std::string& subject);
CheckResult kernel_agreement_check(const curve::PeriodData& pd, const std::string& subject);
CheckResult psi1_check(const curve::PeriodData& pd, const std::string& subject, const KernelOptions& opt = {});
// Returns the relation check and the conjugation-symmetry check.
std::vector<CheckResult> kaenders_checks(const curve::PeriodData& pd, const SheetPoint& p, std::uint64_t seed,
                                         const std::string& subject, real tolerance = 1e-5L,
                                         const KernelOptions& opt = {});
CheckResult main_theorem_check(const curve::PeriodData& pd, const SheetPoint& p, const SheetPoint& q,
                               const SheetPoint& b, std::uint64_t seed, const std::string& subject,
                               int random_b = 5);
// Residues from the trace identity and the Collino coefficient.
CheckResult residue_check(const curve::PeriodData& pd, const std::string& subject);

}  // namespace cwb::iterated
