#include "cwb/curve/polynomial.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

namespace cwb::curve {

GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
  const Rational den = b.re * b.re + b.im * b.im;
  if (den == 0) throw InvalidArgument("division by zero");
  return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
}

namespace {

Rational exact_rational(real v) {
  if (!std::isfinite(v)) throw InvalidArgument("non-finite value");
  if (v == 0) return 0;
  int e = 0;
  const real m = std::frexp(std::fabs(v), &e);  // m in [0.5, 1)
  const auto mant = static_cast<unsigned long long>(std::ldexp(m, 64));
  Rational r = Rational(boost::multiprecision::cpp_int(mant));
  const int shift = e - 64;
  boost::multiprecision::cpp_int p = 1;
  p <<= std::abs(shift);
  r = shift >= 0 ? r * Rational(p) : r / Rational(p);
  return v < 0 ? Rational(-r) : r;
}

real to_real(const Rational& r) { return r.convert_to<real>(); }

std::string rational_text(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

}  // namespace

GaussianRational GaussianRational::from_long_double(real re, real im) {
  return {exact_rational(re), exact_rational(im)};
}

cplx GaussianRational::to_complex() const { return {to_real(re), to_real(im)}; }

std::string GaussianRational::str() const {
  if (im == 0) return rational_text(re);
  const std::string ipart = (im == 1) ? "i" : (im == -1 ? "-i" : rational_text(im) + "*i");
  if (re == 0) return ipart;
  const std::string sign = im < 0 ? "" : "+";
  return "(" + rational_text(re) + sign + ipart + ")";
}

ExactPolynomial::ExactPolynomial(std::vector<GaussianRational> coeffs) : c_(std::move(coeffs)) { trim(); }

void ExactPolynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

ExactPolynomial ExactPolynomial::x() { return ExactPolynomial({GaussianRational(0), GaussianRational(1)}); }

ExactPolynomial ExactPolynomial::constant(const GaussianRational& c) { return ExactPolynomial({c}); }

ExactPolynomial operator+(const ExactPolynomial& a, const ExactPolynomial& b) {
  std::vector<GaussianRational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = c[i] + a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] = c[i] + b.c_[i];
  return ExactPolynomial(std::move(c));
}

ExactPolynomial operator-(const ExactPolynomial& a, const ExactPolynomial& b) {
  std::vector<GaussianRational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = c[i] + a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] = c[i] - b.c_[i];
  return ExactPolynomial(std::move(c));
}

ExactPolynomial operator*(const ExactPolynomial& a, const ExactPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<GaussianRational> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
  return ExactPolynomial(std::move(c));
}

void ExactPolynomial::divmod(const ExactPolynomial& a, const ExactPolynomial& b, ExactPolynomial& q,
                             ExactPolynomial& r) {
  if (b.is_zero()) throw InvalidArgument("polynomial division by zero");
  std::vector<GaussianRational> rem = a.c_;
  std::vector<GaussianRational> quo(a.degree() >= b.degree() ? a.degree() - b.degree() + 1 : 0);
  for (int d = a.degree(); d >= b.degree(); --d) {
    const GaussianRational f = rem[d] / b.leading();
    quo[d - b.degree()] = f;
    for (int j = 0; j <= b.degree(); ++j) rem[d - b.degree() + j] = rem[d - b.degree() + j] - f * b.c_[j];
  }
  q = ExactPolynomial(std::move(quo));
  r = ExactPolynomial(std::move(rem));
}

ExactPolynomial ExactPolynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<GaussianRational> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * GaussianRational(Rational(static_cast<long long>(i)));
  return ExactPolynomial(std::move(d));
}

ExactPolynomial ExactPolynomial::monic() const {
  if (is_zero()) return {};
  std::vector<GaussianRational> c = c_;
  const GaussianRational lead = leading();
  for (auto& v : c) v = v / lead;
  return ExactPolynomial(std::move(c));
}

std::vector<cplx> ExactPolynomial::complex_coefficients() const {
  std::vector<cplx> out;
  for (const auto& c : c_) out.push_back(c.to_complex());
  return out;
}

cplx ExactPolynomial::operator()(cplx x) const {
  cplx acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->to_complex();
  return acc;
}

GaussianRational ExactPolynomial::operator()(const GaussianRational& x) const {
  GaussianRational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string ExactPolynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int d = degree(); d >= 0; --d) {
    GaussianRational c = c_[d];
    if (c.is_zero()) continue;
    bool negative = c.im == 0 && c.re < 0;
    if (negative) c = -c;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    const bool unit = c.im == 0 && c.re == 1;
    if (d == 0) {
      os << c.str();
      continue;
    }
    if (!unit) os << c.str() << '*';
    os << 'x';
    if (d > 1) os << '^' << d;
  }
  return os.str();
}

namespace {

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  ExactPolynomial run() {
    ExactPolynomial p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InvalidArgument("polynomial parse error at " + std::to_string(pos_) + ": " + what + " in '" + s_ + "'");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  bool starts_factor() {
    const char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == 'x' || c == 'i' || c == '(';
  }

  ExactPolynomial expr() {
    ExactPolynomial acc;
    bool first = true;
    for (;;) {
      char c = peek();
      int sign = 1;
      if (c == '+' || c == '-') {
        sign = c == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        break;
      }
      ExactPolynomial t = term();
      acc = sign > 0 ? acc + t : acc - t;
      first = false;
    }
    return acc;
  }

  ExactPolynomial term() {
    ExactPolynomial acc = power();
    for (;;) {
      const char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * power();
      } else if (c == '/') {
        ++pos_;
        ExactPolynomial d = power();
        if (d.degree() != 0) fail("division by a non-constant or zero");
        acc = acc * ExactPolynomial::constant(GaussianRational(1) / d.coefficients()[0]);
      } else if (starts_factor()) {
        acc = acc * power();
      } else {
        break;
      }
    }
    return acc;
  }

  ExactPolynomial power() {
    ExactPolynomial base = primary();
    if (peek() == '^') {
      ++pos_;
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      const int e = std::stoi(s_.substr(start, pos_ - start));
      if (e > 64) fail("exponent too large");
      ExactPolynomial out = ExactPolynomial::constant(GaussianRational(1));
      for (int k = 0; k < e; ++k) out = out * base;
      return out;
    }
    return base;
  }

  ExactPolynomial primary() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      ExactPolynomial inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (c == 'x') {
      ++pos_;
      return ExactPolynomial::x();
    }
    if (c == 'i') {
      ++pos_;
      return ExactPolynomial::constant(GaussianRational(0, 1));
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return ExactPolynomial::constant(number());
    fail("expected a number, x, i or '('");
  }

  GaussianRational number() {
    std::size_t start = pos_;
    boost::multiprecision::cpp_int digits = 0, scale = 1;
    bool dot = false;
    while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) {
      if (s_[pos_] == '.') {
        if (dot) fail("malformed number");
        dot = true;
      } else {
        digits = digits * 10 + (s_[pos_] - '0');
        if (dot) scale *= 10;
      }
      ++pos_;
    }
    if (pos_ == start + (dot ? 1 : 0)) fail("malformed number");
    return GaussianRational(Rational(digits, scale));
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

ExactPolynomial ExactPolynomial::parse(const std::string& text) {
  return Parser(text).run();
}

ExactPolynomial gcd(ExactPolynomial a, ExactPolynomial b) {
  while (!b.is_zero()) {
    ExactPolynomial q, r;
    ExactPolynomial::divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

bool is_squarefree(const ExactPolynomial& f) {
  if (f.degree() < 1) return false;
  return gcd(f, f.derivative()).degree() == 0;
}

std::vector<cplx> polynomial_roots(const std::vector<cplx>& c, real tolerance) {
  std::size_t n = c.size();
  while (n > 0 && c[n - 1] == cplx(0)) --n;
  if (n < 2) return {};
  const int deg = static_cast<int>(n) - 1;
  auto eval = [&](cplx z, cplx& dp) {
    cplx p = c[deg];
    dp = 0;
    for (int k = deg - 1; k >= 0; --k) {
      dp = dp * z + p;
      p = p * z + c[k];
    }
    return p;
  };
  // Cauchy bound for the initial circle.
  real bound = 0;
  for (int k = 0; k < deg; ++k) bound = std::max(bound, std::abs(c[k] / c[deg]));
  const real radius = 1 + bound;
  std::vector<cplx> z(deg);
  for (int k = 0; k < deg; ++k)
    z[k] = std::polar(radius * 0.5L, 2 * std::acos(-1.0L) * k / deg + 0.4L);

  bool converged = false;
  for (int iter = 0; iter < 1000 && !converged; ++iter) {
    real worst = 0;
    for (int k = 0; k < deg; ++k) {
      cplx dp;
      const cplx p = eval(z[k], dp);
      if (p == cplx(0)) continue;
      const cplx ratio = p / dp;
      cplx s = 0;
      for (int j = 0; j < deg; ++j)
        if (j != k) s += 1.0L / (z[k] - z[j]);
      const cplx w = ratio / (1.0L - ratio * s);
      z[k] -= w;
      worst = std::max(worst, std::abs(w) / std::max<real>(1, std::abs(z[k])));
    }
    converged = worst < tolerance;
  }
  if (!converged) throw NumericalError("root-finding did not converge");
  for (auto& r : z)
    for (int k = 0; k < 3; ++k) {
      cplx dp;
      const cplx p = eval(r, dp);
      if (dp != cplx(0)) r -= p / dp;
    }
  return z;
}

}  // namespace cwb::curve
