#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cwb/common.hpp"

namespace cwb::curve {

using Rational = boost::multiprecision::cpp_rational;

// Exact complex rational re + i*im.
struct GaussianRational {
  Rational re = 0;
  Rational im = 0;

  GaussianRational() = default;
  GaussianRational(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {}
  static GaussianRational from_long_double(real re, real im = 0);

  bool is_zero() const { return re == 0 && im == 0; }
  GaussianRational conj() const { return {re, -im}; }
  cplx to_complex() const;
  std::string str() const;  // "3/2", "-1/3*i", "(1+2*i)"

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) { return {a.re + b.re, a.im + b.im}; }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) { return {a.re - b.re, a.im - b.im}; }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b);
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) { return a.re == b.re && a.im == b.im; }
};

// Polynomial in x with Gaussian rational coefficients, lowest degree first.
class ExactPolynomial {
 public:
  ExactPolynomial() = default;
  explicit ExactPolynomial(std::vector<GaussianRational> coeffs);

  static ExactPolynomial parse(const std::string& text);
  static ExactPolynomial x();
  static ExactPolynomial constant(const GaussianRational& c);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const std::vector<GaussianRational>& coefficients() const { return c_; }
  const GaussianRational& leading() const { return c_.back(); }

  ExactPolynomial derivative() const;
  ExactPolynomial monic() const;
  std::vector<cplx> complex_coefficients() const;
  cplx operator()(cplx x) const;
  GaussianRational operator()(const GaussianRational& x) const;

  // Canonical exact text, e.g. "x^5 - 1" or "(1/2+i)*x^2 + 3".
  std::string str() const;

  friend ExactPolynomial operator+(const ExactPolynomial& a, const ExactPolynomial& b);
  friend ExactPolynomial operator-(const ExactPolynomial& a, const ExactPolynomial& b);
  friend ExactPolynomial operator*(const ExactPolynomial& a, const ExactPolynomial& b);
  friend bool operator==(const ExactPolynomial& a, const ExactPolynomial& b) { return a.c_ == b.c_; }

  // Quotient and remainder; throws on division by zero.
  static void divmod(const ExactPolynomial& a, const ExactPolynomial& b, ExactPolynomial& q, ExactPolynomial& r);

 private:
  void trim();
  std::vector<GaussianRational> c_;
};

ExactPolynomial gcd(ExactPolynomial a, ExactPolynomial b);  // monic, zero if both zero
bool is_squarefree(const ExactPolynomial& f);

// All complex roots by Aberth-Ehrlich iteration followed by Newton polishing.
std::vector<cplx> polynomial_roots(const std::vector<cplx>& coeffs_low_first, real tolerance = 1e-15L);

}  // namespace cwb::curve
