#pragma once

#include <compare>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cwb/groupring/ncseries.hpp"

namespace cwb::groupring {

using Rational = boost::multiprecision::cpp_rational;
using FormWord = std::vector<int>;

// Closed 1-form symbols; the index order is the order used by the shuffle normal form.
class FormAlphabet {
 public:
  int add(const std::string& name);
  int index(const std::string& name) const;
  const std::string& name(int i) const { return names_.at(i); }
  int size() const { return static_cast<int>(names_.size()); }

  // w < w1..wg < wb1..wbg < xi
  static FormAlphabet standard(Genus g);

 private:
  std::vector<std::string> names_;
};

// Either a named constant c(i,j) or a period symbol: the integral of a word over a loop symbol.
struct Atom {
  enum class Kind { constant, period };
  Kind kind = Kind::constant;
  std::string name;
  int i = 0;
  int j = 0;
  int loop = -1;
  FormWord word;

  static Atom constant(std::string name, int i, int j) { return {Kind::constant, std::move(name), i, j, -1, {}}; }
  static Atom period(int loop, FormWord word) { return {Kind::period, {}, 0, 0, loop, std::move(word)}; }

  auto operator<=>(const Atom&) const = default;
};

using AtomMonomial = std::vector<Atom>;  // sorted, repeated atoms allowed

class SymPoly {
 public:
  using Terms = std::map<AtomMonomial, Rational>;

  SymPoly() = default;
  static SymPoly scalar(const Rational& c);
  static SymPoly atom(const Atom& a);
  static SymPoly constant(const std::string& name, int i, int j) { return atom(Atom::constant(name, i, j)); }
  static SymPoly period(int loop, FormWord word) { return atom(Atom::period(loop, std::move(word))); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(AtomMonomial m, const Rational& c);

  SymPoly& operator+=(const SymPoly& o);
  SymPoly& operator-=(const SymPoly& o);
  friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
  friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
  friend SymPoly operator*(const SymPoly& a, const SymPoly& b);
  friend SymPoly operator*(const Rational& k, const SymPoly& a);
  friend bool operator==(const SymPoly& a, const SymPoly& b) { return a.terms_ == b.terms_; }

  std::string render(const SurfaceAlphabet& loops, const FormAlphabet& forms) const;

 private:
  Terms terms_;
};

std::string render_atom(const Atom& a, const SurfaceAlphabet& loops, const FormAlphabet& forms);

// Declared inputs of the normalization: nothing here is inferred.
struct NormalizationRules {
  std::set<Atom> zeros;
  bool shuffle = true;
  std::map<std::string, std::pair<std::string, int>> conjugates;  // "abar" -> ("a", -1)
  std::set<std::string> symmetric;                                 // c(i,j) = c(j,i)

  // abar_jk = -a_jk and a symmetric; no zeros.
  static NormalizationRules kaenders();
};

SymPoly normalize(const SymPoly& p, const NormalizationRules& rules);

// Shuffle algebra helpers on words of form indices.
bool is_lyndon(const FormWord& w);
std::vector<FormWord> lyndon_factorization(const FormWord& w);  // nonincreasing factors
std::map<FormWord, long long> shuffle(const FormWord& a, const FormWord& b);

}  // namespace cwb::groupring
