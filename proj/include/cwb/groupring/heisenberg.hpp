#pragma once

#include <string>
#include <vector>

#include "cwb/common.hpp"
#include "cwb/groupring/magnus.hpp"

namespace cwb::groupring {

// a_1^{m_1}..a_g^{m_g} b_1^{n_1}..b_g^{n_g} delta^k, with [a_i, b_i] = delta.
struct HeisenbergElement {
  std::vector<long long> m;
  std::vector<long long> n;
  long long k = 0;

  friend bool operator==(const HeisenbergElement&, const HeisenbergElement&) = default;
};

class Heisenberg {
 public:
  explicit Heisenberg(Genus g);

  Genus genus() const { return g_; }
  HeisenbergElement identity() const;
  HeisenbergElement a(int i) const;  // 1-based
  HeisenbergElement b(int i) const;
  HeisenbergElement delta() const;

  HeisenbergElement multiply(const HeisenbergElement& x, const HeisenbergElement& y) const;
  HeisenbergElement inverse(const HeisenbergElement& x) const;
  HeisenbergElement commutator(const HeisenbergElement& x, const HeisenbergElement& y) const;
  HeisenbergElement power(const HeisenbergElement& x, long long e) const;

  // Generator indices for words: a_i -> i-1, b_i -> g+i-1, delta -> 2g.
  HeisenbergElement evaluate(const Word& w) const;
  int a_gen(int i) const { return i - 1; }
  int b_gen(int i) const { return g_.value + i - 1; }
  int delta_gen() const { return g_.twice(); }

  bool is_central(const HeisenbergElement& x) const;  // only delta powers
  std::vector<long long> abelianization(const HeisenbergElement& x) const;

  // Defining relators: [a_i,b_i] delta^-1, [a_i,b_j] (i != j), [a_i,a_j], [b_i,b_j], [a_i,delta], [b_i,delta].
  std::vector<Word> relators() const;

  std::string render(const HeisenbergElement& x) const;

 private:
  Genus g_;
};

}  // namespace cwb::groupring
