#include "toric/polynomial.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace toric {

Int binomial(long n, long k) {
  if (n < 0) throw std::invalid_argument("binomial: negative upper index");
  if (k < 0 || k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

Int catalan(unsigned long n) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), 2 * n, n);
  mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), n + 1);
  return r;
}

Polynomial::Polynomial(Int c) {
  if (c != 0) coeffs_.push_back(std::move(c));
}

Polynomial::Polynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

Polynomial Polynomial::monomial(Int c, std::size_t deg) {
  Polynomial p;
  if (c != 0) {
    p.coeffs_.assign(deg + 1, 0);
    p.coeffs_[deg] = std::move(c);
  }
  return p;
}

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::size_t Polynomial::degree() const {
  if (is_zero()) throw std::logic_error("degree of the zero polynomial");
  return coeffs_.size() - 1;
}

Int Polynomial::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Int(0);
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  Polynomial r;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  r.normalize();
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Rat Polynomial::eval(const Rat& t) const {
  Rat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Polynomial Polynomial::substitute_affine(const Int& a, const Int& b) const {
  Polynomial acc;
  Polynomial lin({b, a});
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * lin + Polynomial(*it);
  return acc;
}

Polynomial Polynomial::reverse(std::size_t d) const {
  if (is_zero()) return {};
  if (degree() > d)
    throw std::invalid_argument("reverse: degree exceeds reversal bound");
  std::vector<Int> rev(d + 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) rev[d - i] = coeffs_[i];
  return Polynomial(std::move(rev));
}

std::string Polynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i > 0) out << " + ";
    if (i == 0) {
      out << coeffs_[0];
    } else if (i == 1) {
      out << coeffs_[1] << "*x";
    } else {
      out << coeffs_[i] << "*x^" << i;
    }
  }
  return out.str();
}

Polynomial pow(const Polynomial& base, unsigned long e) {
  Polynomial r(1);
  for (unsigned long i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace toric
