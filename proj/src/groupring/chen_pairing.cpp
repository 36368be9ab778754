#include "cwb/groupring/chen_pairing.hpp"

namespace cwb::groupring {

void FormalIterint::add(FormWord w, const SymPoly& coeff) {
  if (w.empty() || w.size() > max_length) throw InvalidArgument("iterated integral word length must be 1..3");
  terms_[std::move(w)] += coeff;
}

namespace {

void split(const FormWord& w, std::size_t pos, const Monomial& m, std::size_t block, SymPoly acc, SymPoly& out) {
  const std::size_t remaining_blocks = m.size() - block;
  if (remaining_blocks == 0) {
    if (pos == w.size()) out += acc;
    return;
  }
  // Leave at least one letter for every later block.
  for (std::size_t end = pos + 1; end + (remaining_blocks - 1) <= w.size(); ++end) {
    FormWord piece(w.begin() + static_cast<std::ptrdiff_t>(pos), w.begin() + static_cast<std::ptrdiff_t>(end));
    split(w, end, m, block + 1, acc * SymPoly::period(m[block], std::move(piece)), out);
  }
}

}  // namespace

SymPoly chen_pair(const FormWord& w, const Monomial& m) {
  if (w.size() > FormalIterint::max_length) throw InvalidArgument("iterated integral word longer than 3");
  SymPoly out;
  if (m.empty() || m.size() > w.size()) return out;
  split(w, 0, m, 0, SymPoly::scalar(1), out);
  return out;
}

SymPoly chen_pair(const FormalIterint& I, const NCSeries& s) {
  SymPoly out;
  for (const auto& [w, coeff] : I.terms())
    for (const auto& [m, c] : s.terms()) {
      SymPoly v = chen_pair(w, m);
      if (!v.is_zero()) out += Rational(c) * (coeff * v);
    }
  return out;
}

SymPoly Pi(Genus g, const LoopFunctional& F, const LoopFunctional& G) {
  SymPoly out;
  for (int nu = 1; nu <= g.value; ++nu) {
    out += F(nu) * G(g.value + nu);
    out -= F(g.value + nu) * G(nu);
  }
  return out;
}

}  // namespace cwb::groupring
