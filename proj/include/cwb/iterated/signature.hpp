#pragma once

#include <vector>

#include "cwb/curve/gauss_legendre.hpp"
#include "cwb/iterated/one_form.hpp"

namespace cwb::iterated {

// Truncated path signature over a list of n one-forms: all iterated integrals of length
// 1..depth, first letter integrated earliest. Entries are row-major in the word letters.
struct Signature {
  int n = 0;
  int depth = 0;
  std::vector<cplx> l1, l2, l3;

  static Signature zero(int n, int depth);
  cplx at(int a) const { return l1[a]; }
  cplx at(int a, int b) const { return l2[a * n + b]; }
  cplx at(int a, int b, int c) const { return l3[(a * n + b) * n + c]; }
  real distance(const Signature& o) const;  // max abs entry difference
};

// Chen's identity: signature of the concatenation x then y.
Signature chen_product(const Signature& x, const Signature& y);

struct KernelOptions {
  int nodes = 16;        // Gauss-Legendre points per panel
  int base_panels = 2;   // per segment, scaled by length / clearance
  real tolerance = 1e-12L;
  int max_refinements = 4;
};

// Form values times dt at the panel nodes: values[p][a * N + i].
using PanelValues = std::vector<std::vector<cplx>>;
PanelValues panel_values(const curve::PeriodData& pd, const curve::Path& path, const std::vector<OneForm>& forms,
                         const curve::GaussLegendre& rule, int base_panels);

// Serial reference: one augmented-state sweep along the path.
Signature signature_serial(const PanelValues& v, int n, int depth, const curve::GaussLegendre& rule);
// Per-panel signatures (OpenMP) folded with chen_product in path order.
Signature signature_parallel(const PanelValues& v, int n, int depth, const curve::GaussLegendre& rule);

struct SignatureResult {
  Signature value;
  real error_estimate = 0;  // change under panel doubling
  int panels = 0;
};

enum class Kernel { serial, parallel };

// Refines panels until successive results agree within the tolerance.
SignatureResult path_signature(const curve::PeriodData& pd, const curve::Path& path, const std::vector<OneForm>& forms,
                               int depth, const KernelOptions& opt = {}, Kernel kernel = Kernel::parallel);

struct IterIntegralValue {
  cplx value;
  real error_estimate;
  std::string word;
};

// iterated integral of the word (length 1..3) along the path
IterIntegralValue iterint(const curve::PeriodData& pd, const curve::Path& path, const std::vector<OneForm>& word,
                          const KernelOptions& opt = {});

}  // namespace cwb::iterated
