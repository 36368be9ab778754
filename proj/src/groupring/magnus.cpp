#include "cwb/groupring/magnus.hpp"

#include <algorithm>

namespace cwb::groupring {

Word generator(int gen) { return {Letter{gen, 1}}; }

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (auto& l : out) l.exp = -l.exp;
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Word commutator(const Word& a, const Word& b) {
  return concat(concat(a, b), concat(inverse(a), inverse(b)));
}

Word power(const Word& w, int n) {
  Word base = n < 0 ? inverse(w) : w;
  Word out;
  for (int i = 0; i < std::abs(n); ++i) out = concat(out, base);
  return out;
}

Word freely_reduced(const Word& w) {
  Word out;
  for (const auto& l : w) {
    if (!out.empty() && out.back().gen == l.gen && out.back().exp == -l.exp)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

NCSeries magnus_expand(const Word& w, int cap) {
  if (cap < 1) throw InvalidArgument("cap must be >= 1");
  NCSeries acc = NCSeries::one(cap);
  for (const auto& l : w) {
    if (l.exp != 1 && l.exp != -1) throw InvalidArgument("letter exponent must be +-1");
    // acc * (1 + x) or acc * (1 - x + x^2 - ...), done by appending powers of x to each monomial.
    NCSeries next(cap);
    for (const auto& [m, c] : acc.terms()) {
      Monomial mm = m;
      Int coeff = c;
      next.add_term(mm, coeff);
      for (int k = 1; static_cast<int>(m.size()) + k <= cap; ++k) {
        mm.push_back(l.gen);
        if (l.exp < 0) coeff = -coeff;
        next.add_term(mm, coeff);
        if (l.exp > 0) break;
      }
    }
    acc = std::move(next);
  }
  return acc;
}

Word surface_relator(const SurfaceAlphabet& alphabet) {
  const int g = alphabet.genus().value;
  Word out;
  for (int nu = 1; nu <= g; ++nu)
    out = concat(out, commutator(generator(alphabet.c(nu)), generator(alphabet.c(g + nu))));
  return out;
}

NCSeries modJ4_lhs(const SurfaceAlphabet& alphabet, bool include_cubic) {
  const int g = alphabet.genus().value;
  NCSeries s(3);
  for (int nu = 1; nu <= g; ++nu) {
    const int x = alphabet.c(nu), y = alphabet.c(g + nu);
    s.add_term({x, y}, 1);
    s.add_term({y, x}, -1);
    if (!include_cubic) continue;
    s.add_term({y, x, y}, 1);
    s.add_term({x, y, x}, -1);
    s.add_term({x, y, y}, -1);
    s.add_term({y, x, x}, 1);
  }
  return s;
}

NCSeries modJ4_rhs(const SurfaceAlphabet& alphabet) {
  NCSeries s(3);
  s.add_term({alphabet.d_b()}, 1);
  s.add_term({alphabet.d_q()}, 1);
  s.add_term({alphabet.d_b(), alphabet.d_q()}, 1);
  return s;
}

}  // namespace cwb::groupring
