#pragma once

#include <cstdint>
#include <vector>

#include "cwb/check.hpp"
#include "cwb/common.hpp"
#include "cwb/lattice/f2_matrix.hpp"
#include "cwb/lattice/int_matrix.hpp"

namespace cwb::lattice {

// H^1(C) has the symplectic basis x_0..x_{2g-1}; (x_i, x_{g+i}) = 1.
IntMatrix symplectic_form(Genus g);

// Coordinates on H^1 (x) H^1: x_i (x) x_j sits at i*2g + j.
std::size_t tensor_index(Genus g, int i, int j);
IntVector tensor(Genus g, const IntVector& a, const IntVector& b);
IntVector basis_vector(std::size_t n, std::size_t k);

std::vector<IntVector> sym2_basis(Genus g);
std::vector<IntVector> wedge2_basis(Genus g);

// Coordinates on H^2(C^2): p1*[pt], p2*[pt], then e_ij = p1*x_i u p2*x_j at 2 + i*2g + j.
struct H2Layout {
  static constexpr std::size_t p1_point = 0;
  static constexpr std::size_t p2_point = 1;
  static std::size_t dim(Genus g) { return 2 + static_cast<std::size_t>(g.twice() * g.twice()); }
  static std::size_t cross(Genus g, int i, int j) { return 2 + tensor_index(g, i, j); }
};

// A class in H^1(C^2): coefficients of p1*x_i (first 2g) and p2*x_i (last 2g).
IntVector cup(Genus g, const IntVector& a, const IntVector& b);
Int cup_pairing(Genus g, const IntVector& a, const IntVector& b);

IntVector point_classes(Genus g);  // p1*[pt] + p2*[pt] = pi*[C]
IntVector diagonal_class(Genus g);
IntVector graph_class(Genus g);    // [Gamma_iota] = pi*[L]

IntVector cup_pullback(Genus g, const IntVector& t);

IntVector v0(Genus g);
IntVector u_element(Genus g);

struct KLattice {
  Genus g{2};
  IntMatrix K;   // columns: Z-basis of K inside H^1 (x) H^1
  IntMatrix K0;  // columns: Sym^2 basis followed by v0
  IntVector u;
};

KLattice compute_K(Genus g);  // also defined for g = 1
bool in_lattice(const IntMatrix& basis, const IntVector& v);

// Elementary divisors of the sublattice spanned by `sub` inside the lattice with basis `lattice`.
std::vector<Int> relative_invariants(const IntMatrix& lattice, const IntMatrix& sub);

F2Matrix theta_map(Genus g);  // acts on Sym^2 mod 2 in sym2_basis coordinates
F2Vector square_class(Genus g, const F2Vector& v);  // v (x) v in sym2_basis coordinates mod 2

CheckResult verify_phi_v0(Genus g, int l_coefficient = 2);
CheckResult index_and_primitivity(Genus g);
CheckResult verify_theta(Genus g, std::uint64_t seed);

}  // namespace cwb::lattice
