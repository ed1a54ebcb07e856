#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace toric {

using Int = mpz_class;
using Rat = mpq_class;

/// binom(n, k) with the convention binom(n, k) = 0 for k < 0 or k > n.
/// Negative n never occurs in the formulas implemented here and is rejected.
Int binomial(long n, long k);

/// Catalan number C_n = binom(2n, n) / (n + 1).
Int catalan(unsigned long n);

/// Dense univariate polynomial with exact integer coefficients.
///
/// Coefficients are stored in ascending degree with trailing zeros stripped;
/// the zero polynomial is the empty coefficient vector, so degree() is only
/// meaningful on nonzero values.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(long c) : Polynomial(Int(c)) {}
  Polynomial(Int c);
  explicit Polynomial(std::vector<Int> coeffs);
  Polynomial(std::initializer_list<long> coeffs)
      : coeffs_(coeffs.begin(), coeffs.end()) {
    normalize();
  }

  static Polynomial x() { return monomial(1, 1); }
  static Polynomial monomial(Int c, std::size_t deg);

  bool is_zero() const { return coeffs_.empty(); }
  std::size_t degree() const;  // throws std::logic_error on the zero polynomial
  Int coeff(std::size_t i) const;
  const std::vector<Int>& coeffs() const { return coeffs_; }

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;
  bool operator==(const Polynomial&) const = default;

  /// Exact Horner evaluation at a rational point.
  Rat eval(const Rat& t) const;

  /// p(a*x + b), expanded exactly.
  Polynomial substitute_affine(const Int& a, const Int& b) const;

  /// x^d * p(1/x): coefficient i of the result is coefficient d-i of p.
  /// Throws std::invalid_argument if degree(p) > d.
  Polynomial reverse(std::size_t d) const;

  /// Canonical text form "c0 + c1*x + c2*x^2" (dense, ascending).
  std::string str() const;

 private:
  void normalize();

  std::vector<Int> coeffs_;
};

Polynomial pow(const Polynomial& base, unsigned long e);

}  // namespace toric
