#include "cwb/groupring/sympoly.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace cwb::groupring {

int FormAlphabet::add(const std::string& name) {
  if (std::find(names_.begin(), names_.end(), name) != names_.end())
    throw InvalidArgument("duplicate form symbol " + name);
  names_.push_back(name);
  return size() - 1;
}

int FormAlphabet::index(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw InvalidArgument("unknown form symbol " + name);
  return static_cast<int>(it - names_.begin());
}

FormAlphabet FormAlphabet::standard(Genus g) {
  FormAlphabet f;
  f.add("w");
  for (int j = 1; j <= g.value; ++j) f.add("w" + std::to_string(j));
  for (int k = 1; k <= g.value; ++k) f.add("wb" + std::to_string(k));
  f.add("xi");
  return f;
}

SymPoly SymPoly::scalar(const Rational& c) {
  SymPoly p;
  p.add_term({}, c);
  return p;
}

SymPoly SymPoly::atom(const Atom& a) {
  SymPoly p;
  p.add_term({a}, 1);
  return p;
}

void SymPoly::add_term(AtomMonomial m, const Rational& c) {
  if (c == 0) return;
  std::sort(m.begin(), m.end());
  auto [it, inserted] = terms_.try_emplace(std::move(m), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SymPoly& SymPoly::operator+=(const SymPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

SymPoly operator*(const SymPoly& a, const SymPoly& b) {
  SymPoly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      AtomMonomial m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      out.add_term(std::move(m), ca * cb);
    }
  return out;
}

SymPoly operator*(const Rational& k, const SymPoly& a) {
  SymPoly out;
  for (const auto& [m, c] : a.terms_) out.add_term(m, k * c);
  return out;
}

std::string render_atom(const Atom& a, const SurfaceAlphabet& loops, const FormAlphabet& forms) {
  std::ostringstream os;
  if (a.kind == Atom::Kind::constant) {
    os << a.name << '(' << a.i << ',' << a.j << ')';
    return os.str();
  }
  if (a.loop == loops.d_b())
    os << "Rb(";
  else if (a.loop == loops.d_q())
    os << "Rq'(";
  else
    os << "P(" << (a.loop + 1) << ';';
  for (std::size_t i = 0; i < a.word.size(); ++i) os << (i ? " " : "") << forms.name(a.word[i]);
  os << ')';
  return os.str();
}

std::string SymPoly::render(const SurfaceAlphabet& loops, const FormAlphabet& forms) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool neg = c < 0;
    const Rational mag = neg ? Rational(-c) : c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    bool sep = false;
    if (mag != 1 || m.empty()) {
      os << mag;
      sep = true;
    }
    for (const auto& a : m) {
      if (sep) os << ' ';
      os << render_atom(a, loops, forms);
      sep = true;
    }
  }
  return os.str();
}

NormalizationRules NormalizationRules::kaenders() {
  NormalizationRules r;
  r.conjugates["abar"] = {"a", -1};
  r.symmetric.insert("a");
  return r;
}

bool is_lyndon(const FormWord& w) {
  if (w.empty()) return false;
  for (std::size_t k = 1; k < w.size(); ++k)
    if (!std::lexicographical_compare(w.begin(), w.end(), w.begin() + static_cast<std::ptrdiff_t>(k), w.end()))
      return false;
  return true;
}

std::vector<FormWord> lyndon_factorization(const FormWord& w) {
  // Duval's algorithm.
  std::vector<FormWord> out;
  std::size_t i = 0;
  const std::size_t n = w.size();
  while (i < n) {
    std::size_t j = i + 1, k = i;
    while (j < n && w[k] <= w[j]) {
      k = (w[k] < w[j]) ? i : k + 1;
      ++j;
    }
    while (i <= k) {
      out.emplace_back(w.begin() + static_cast<std::ptrdiff_t>(i), w.begin() + static_cast<std::ptrdiff_t>(i + j - k));
      i += j - k;
    }
  }
  return out;
}

std::map<FormWord, long long> shuffle(const FormWord& a, const FormWord& b) {
  std::map<FormWord, long long> out;
  if (a.empty()) {
    out[b] = 1;
    return out;
  }
  if (b.empty()) {
    out[a] = 1;
    return out;
  }
  const FormWord a_rest(a.begin() + 1, a.end()), b_rest(b.begin() + 1, b.end());
  for (const auto& [tail, c] : shuffle(a_rest, b)) {
    FormWord w{a.front()};
    w.insert(w.end(), tail.begin(), tail.end());
    out[w] += c;
  }
  for (const auto& [tail, c] : shuffle(a, b_rest)) {
    FormWord w{b.front()};
    w.insert(w.end(), tail.begin(), tail.end());
    out[w] += c;
  }
  return out;
}

namespace {

class Normalizer {
 public:
  explicit Normalizer(const NormalizationRules& rules) : rules_(rules) {}

  SymPoly run(const SymPoly& p) {
    SymPoly out;
    for (const auto& [m, c] : p.terms()) {
      SymPoly term = SymPoly::scalar(c);
      for (const auto& a : m) {
        term = term * atom_form(a);
        if (term.is_zero()) break;
      }
      out += term;
    }
    return out;
  }

 private:
  const SymPoly& atom_form(const Atom& a) {
    auto it = memo_.find(a);
    if (it != memo_.end()) return it->second;
    SymPoly result = compute(a);
    return memo_.emplace(a, std::move(result)).first->second;
  }

  SymPoly compute(const Atom& a) {
    if (rules_.zeros.count(a)) return {};
    if (a.kind == Atom::Kind::constant) {
      Atom b = a;
      Rational sign = 1;
      if (auto c = rules_.conjugates.find(b.name); c != rules_.conjugates.end()) {
        b.name = c->second.first;
        sign = c->second.second;
      }
      if (rules_.symmetric.count(b.name) && b.i > b.j) std::swap(b.i, b.j);
      if (rules_.zeros.count(b)) return {};
      return sign * SymPoly::atom(b);
    }
    if (!rules_.shuffle || a.word.size() < 2 || is_lyndon(a.word)) return SymPoly::atom(a);

    // w = l1 l2 ... lk with l1 >= ... >= lk; the shuffle of the factors is mult * w plus smaller words.
    const auto factors = lyndon_factorization(a.word);
    std::map<FormWord, long long> prod{{FormWord{}, 1}};
    SymPoly factor_product = SymPoly::scalar(1);
    for (const auto& l : factors) {
      std::map<FormWord, long long> next;
      for (const auto& [w, c] : prod)
        for (const auto& [w2, c2] : shuffle(w, l)) next[w2] += c * c2;
      prod = std::move(next);
      factor_product = factor_product * atom_form(Atom::period(a.loop, l));
    }
    const long long mult = prod.at(a.word);
    SymPoly rest;
    for (const auto& [w, c] : prod) {
      if (w == a.word) continue;
      if (!(w < a.word)) throw std::logic_error("shuffle leading term is not maximal");
      rest += Rational(c) * atom_form(Atom::period(a.loop, w));
    }
    return Rational(1, mult) * (factor_product - rest);
  }

  const NormalizationRules& rules_;
  std::map<Atom, SymPoly> memo_;
};

}  // namespace

SymPoly normalize(const SymPoly& p, const NormalizationRules& rules) {
  return Normalizer(rules).run(p);
}

}  // namespace cwb::groupring
