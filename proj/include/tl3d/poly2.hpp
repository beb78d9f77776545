#pragma once

#include <map>
#include <string>
#include <utility>

#include "tl3d/rational.hpp"

namespace tl3d {

// Sparse bivariate polynomial in q (bubble weight) and k (handle weight
// kappa) with exact rational coefficients.  Invariants: no zero coefficient
// is stored; exponents are non-negative.
class Poly2 {
public:
  using Key = std::pair<int, int>;  // (q exponent, k exponent)

  Poly2() = default;  // zero polynomial
  static Poly2 constant(const Rational& c);
  static Poly2 one() { return constant(1); }
  static Poly2 monomial(int q_exp, int k_exp, const Rational& coeff = 1);
  static Poly2 var_q() { return monomial(1, 0); }
  static Poly2 var_k() { return monomial(0, 1); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  const std::map<Key, Rational>& terms() const { return terms_; }
  Rational coefficient(int q_exp, int k_exp) const;
  int min_q_exponent() const;  // 0 on the zero polynomial
  int min_k_exponent() const;

  Poly2& operator+=(const Poly2& rhs);
  Poly2& operator-=(const Poly2& rhs);
  Poly2& operator*=(const Poly2& rhs);
  friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
  friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
  friend Poly2 operator*(const Poly2& a, const Poly2& b);
  Poly2 operator-() const;
  Poly2 scaled(const Rational& c) const;

  // Exact division; throws CheckViolation if `divisor` does not divide
  // exactly (used by the fraction-free determinant, where it always does).
  Poly2 divided_exact(const Poly2& divisor) const;

  Rational evaluate(const Rational& q_value, const Rational& k_value) const;

  // "1 - 1/2*q + 2*q^2*k", terms ascending by (q exponent, k exponent).
  std::string to_string() const;

  friend bool operator==(const Poly2&, const Poly2&) = default;

private:
  void insert(int q_exp, int k_exp, const Rational& coeff);
  std::map<Key, Rational> terms_;
};

}  // namespace tl3d
