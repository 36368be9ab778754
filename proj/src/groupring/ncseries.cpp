#include "cwb/groupring/ncseries.hpp"

#include <sstream>
#include <stdexcept>

namespace cwb::groupring {

SurfaceAlphabet::SurfaceAlphabet(Genus g) : g_(g) {
  require_genus(g, 1);
  for (int k = 1; k <= g.twice(); ++k) {
    series_.push_back("c" + std::to_string(k));
    generators_.push_back("g" + std::to_string(k));
  }
  series_.push_back("db");
  series_.push_back("dq'");
  generators_.push_back("delta_b");
  generators_.push_back("delta_q'");
}

int SurfaceAlphabet::c(int k) const {
  if (k < 1 || k > g_.twice()) throw InvalidArgument("loop index out of range");
  return k - 1;
}

NCSeries::NCSeries(int cap) : cap_(cap) {
  if (cap < 0) throw InvalidArgument("negative truncation degree");
}

NCSeries NCSeries::one(int cap) { return monomial({}, 1, cap); }

NCSeries NCSeries::symbol(int s, int cap) { return monomial({s}, 1, cap); }

NCSeries NCSeries::monomial(Monomial m, Int coeff, int cap) {
  NCSeries out(cap);
  out.add_term(m, coeff);
  return out;
}

Int NCSeries::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Int(0) : it->second;
}

int NCSeries::min_degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.size());
}

int NCSeries::max_degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.size());
}

void NCSeries::add_term(const Monomial& m, const Int& c) {
  if (static_cast<int>(m.size()) > cap_ || c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

NCSeries NCSeries::degree_part(int d) const {
  NCSeries out(cap_);
  for (const auto& [m, c] : terms_)
    if (static_cast<int>(m.size()) == d) out.terms_.emplace(m, c);
  return out;
}

NCSeries NCSeries::truncated(int cap) const {
  NCSeries out(cap);
  for (const auto& [m, c] : terms_) out.add_term(m, c);
  return out;
}

NCSeries& NCSeries::operator+=(const NCSeries& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

NCSeries& NCSeries::operator-=(const NCSeries& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

NCSeries operator*(const NCSeries& a, const NCSeries& b) {
  NCSeries out(std::min(a.cap_, b.cap_));
  for (const auto& [ma, ca] : a.terms_) {
    if (static_cast<int>(ma.size()) > out.cap_) break;
    for (const auto& [mb, cb] : b.terms_) {
      if (static_cast<int>(ma.size() + mb.size()) > out.cap_) break;
      Monomial m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

NCSeries operator*(const Int& k, const NCSeries& a) {
  NCSeries out(a.cap_);
  for (const auto& [m, c] : a.terms_) out.add_term(m, k * c);
  return out;
}

std::string render_monomial(const Monomial& m, const SurfaceAlphabet& alphabet) {
  if (m.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) s += ' ';
    s += alphabet.series_name(m[i]);
  }
  return s;
}

std::string NCSeries::render(const SurfaceAlphabet& alphabet) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool neg = c < 0;
    const Int mag = neg ? Int(-c) : c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    if (mag != 1 || m.empty()) {
      os << mag;
      if (!m.empty()) os << ' ';
    }
    if (!m.empty()) os << render_monomial(m, alphabet);
  }
  return os.str();
}

}  // namespace cwb::groupring
