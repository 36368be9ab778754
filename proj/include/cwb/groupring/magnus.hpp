#pragma once

#include <vector>

#include "cwb/groupring/ncseries.hpp"

namespace cwb::groupring {

struct Letter {
  int gen;
  int exp;  // +1 or -1
  friend bool operator==(Letter, Letter) = default;
};

using Word = std::vector<Letter>;

Word generator(int gen);
Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);
Word commutator(const Word& a, const Word& b);  // a b a^-1 b^-1
Word power(const Word& w, int n);
Word freely_reduced(const Word& w);

// gen -> 1 + x_gen, gen^-1 -> 1 - x + x^2 - ..., truncated at cap.
NCSeries magnus_expand(const Word& w, int cap);

// prod_nu [gamma_nu, gamma_{g+nu}] in the surface alphabet.
Word surface_relator(const SurfaceAlphabet& alphabet);

// The degree <= 3 expansion of the surface relator minus 1, written out term by term.
NCSeries modJ4_lhs(const SurfaceAlphabet& alphabet, bool include_cubic = true);
NCSeries modJ4_rhs(const SurfaceAlphabet& alphabet);  // d_b + d_q' + d_b d_q'

}  // namespace cwb::groupring
