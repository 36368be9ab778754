#pragma once

#include <map>
#include <string>
#include <vector>

#include "cwb/common.hpp"
#include "cwb/lattice/int_matrix.hpp"

namespace cwb::groupring {

using lattice::Int;
using Monomial = std::vector<int>;  // indices of series symbols, left to right

// Length first, then lexicographic on symbol indices.
struct LengthLex {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

// Generators gamma_1..gamma_2g, delta_b, delta_q' and their series symbols c_k, d_b, d_q'.
class SurfaceAlphabet {
 public:
  explicit SurfaceAlphabet(Genus g);

  Genus genus() const { return g_; }
  int size() const { return g_.twice() + 2; }
  int c(int k) const;  // 1-based loop index
  int d_b() const { return g_.twice(); }
  int d_q() const { return g_.twice() + 1; }
  bool is_meridian(int s) const { return s >= g_.twice(); }

  const std::string& series_name(int s) const { return series_.at(s); }
  const std::string& generator_name(int s) const { return generators_.at(s); }

 private:
  Genus g_;
  std::vector<std::string> series_;
  std::vector<std::string> generators_;
};

// Truncated noncommutative polynomial with integer coefficients; monomials above the cap are dropped.
class NCSeries {
 public:
  using Terms = std::map<Monomial, Int, LengthLex>;

  explicit NCSeries(int cap);

  static NCSeries one(int cap);
  static NCSeries symbol(int s, int cap);
  static NCSeries monomial(Monomial m, Int coeff, int cap);

  int cap() const { return cap_; }
  const Terms& terms() const { return terms_; }
  Int coefficient(const Monomial& m) const;
  bool is_zero() const { return terms_.empty(); }
  int min_degree() const;  // -1 for the zero series
  int max_degree() const;

  void add_term(const Monomial& m, const Int& c);
  NCSeries degree_part(int d) const;
  NCSeries truncated(int cap) const;

  NCSeries& operator+=(const NCSeries& o);
  NCSeries& operator-=(const NCSeries& o);
  friend NCSeries operator+(NCSeries a, const NCSeries& b) { return a += b; }
  friend NCSeries operator-(NCSeries a, const NCSeries& b) { return a -= b; }
  friend NCSeries operator*(const NCSeries& a, const NCSeries& b);
  friend NCSeries operator*(const Int& k, const NCSeries& a);
  friend bool operator==(const NCSeries& a, const NCSeries& b) { return a.terms_ == b.terms_; }

  // Plain-text form: "c1 c2 - c2 c1"; zero renders as "0".
  std::string render(const SurfaceAlphabet& alphabet) const;

 private:
  int cap_;
  Terms terms_;
};

std::string render_monomial(const Monomial& m, const SurfaceAlphabet& alphabet);

}  // namespace cwb::groupring
