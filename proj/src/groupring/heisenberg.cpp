#include "cwb/groupring/heisenberg.hpp"

#include <sstream>

namespace cwb::groupring {

Heisenberg::Heisenberg(Genus g) : g_(g) { require_genus(g, 1); }

HeisenbergElement Heisenberg::identity() const {
  return {std::vector<long long>(g_.value, 0), std::vector<long long>(g_.value, 0), 0};
}

HeisenbergElement Heisenberg::a(int i) const {
  auto x = identity();
  x.m.at(i - 1) = 1;
  return x;
}

HeisenbergElement Heisenberg::b(int i) const {
  auto x = identity();
  x.n.at(i - 1) = 1;
  return x;
}

HeisenbergElement Heisenberg::delta() const {
  auto x = identity();
  x.k = 1;
  return x;
}

HeisenbergElement Heisenberg::multiply(const HeisenbergElement& x, const HeisenbergElement& y) const {
  // Moving b^n of x past a^m' of y costs delta^{-n m'} since b a = delta^-1 a b.
  HeisenbergElement out = identity();
  out.k = x.k + y.k;
  for (int i = 0; i < g_.value; ++i) {
    out.m[i] = x.m[i] + y.m[i];
    out.n[i] = x.n[i] + y.n[i];
    out.k -= x.n[i] * y.m[i];
  }
  return out;
}

HeisenbergElement Heisenberg::inverse(const HeisenbergElement& x) const {
  HeisenbergElement out = identity();
  out.k = -x.k;
  for (int i = 0; i < g_.value; ++i) {
    out.m[i] = -x.m[i];
    out.n[i] = -x.n[i];
    out.k -= x.m[i] * x.n[i];
  }
  return out;
}

HeisenbergElement Heisenberg::commutator(const HeisenbergElement& x, const HeisenbergElement& y) const {
  return multiply(multiply(x, y), multiply(inverse(x), inverse(y)));
}

HeisenbergElement Heisenberg::power(const HeisenbergElement& x, long long e) const {
  HeisenbergElement base = e < 0 ? inverse(x) : x;
  HeisenbergElement out = identity();
  for (long long i = 0; i < (e < 0 ? -e : e); ++i) out = multiply(out, base);
  return out;
}

HeisenbergElement Heisenberg::evaluate(const Word& w) const {
  HeisenbergElement out = identity();
  for (const auto& l : w) {
    HeisenbergElement gen;
    if (l.gen < g_.value)
      gen = a(l.gen + 1);
    else if (l.gen < g_.twice())
      gen = b(l.gen - g_.value + 1);
    else if (l.gen == g_.twice())
      gen = delta();
    else
      throw InvalidArgument("generator index out of range");
    out = multiply(out, l.exp > 0 ? gen : inverse(gen));
  }
  return out;
}

bool Heisenberg::is_central(const HeisenbergElement& x) const {
  for (int i = 0; i < g_.value; ++i)
    if (x.m[i] != 0 || x.n[i] != 0) return false;
  return true;
}

std::vector<long long> Heisenberg::abelianization(const HeisenbergElement& x) const {
  std::vector<long long> out = x.m;
  out.insert(out.end(), x.n.begin(), x.n.end());
  return out;
}

std::vector<Word> Heisenberg::relators() const {
  const int g = g_.value;
  std::vector<Word> out;
  const Word d = generator(delta_gen());
  for (int i = 1; i <= g; ++i)
    for (int j = 1; j <= g; ++j) {
      Word c = groupring::commutator(generator(a_gen(i)), generator(b_gen(j)));
      out.push_back(i == j ? concat(c, groupring::inverse(d)) : c);
    }
  for (int i = 1; i <= g; ++i)
    for (int j = i + 1; j <= g; ++j) {
      out.push_back(groupring::commutator(generator(a_gen(i)), generator(a_gen(j))));
      out.push_back(groupring::commutator(generator(b_gen(i)), generator(b_gen(j))));
    }
  for (int i = 1; i <= g; ++i) {
    out.push_back(groupring::commutator(generator(a_gen(i)), d));
    out.push_back(groupring::commutator(generator(b_gen(i)), d));
  }
  return out;
}

std::string Heisenberg::render(const HeisenbergElement& x) const {
  std::ostringstream os;
  bool any = false;
  auto put = [&](const std::string& name, long long e) {
    if (e == 0) return;
    if (any) os << ' ';
    os << name;
    if (e != 1) os << '^' << e;
    any = true;
  };
  for (int i = 0; i < g_.value; ++i) put("a" + std::to_string(i + 1), x.m[i]);
  for (int i = 0; i < g_.value; ++i) put("b" + std::to_string(i + 1), x.n[i]);
  put("delta", x.k);
  return any ? os.str() : "1";
}

}  // namespace cwb::groupring
