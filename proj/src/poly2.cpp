#include "tl3d/poly2.hpp"

#include <sstream>

#include "tl3d/errors.hpp"

namespace tl3d {

void Poly2::insert(int q_exp, int k_exp, const Rational& coeff) {
  if (coeff == 0) return;
  if (q_exp < 0 || k_exp < 0) {
    throw CheckViolation("negative exponent in Poly2");
  }
  auto [it, fresh] = terms_.try_emplace({q_exp, k_exp}, coeff);
  if (!fresh) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly2 Poly2::constant(const Rational& c) { return monomial(0, 0, c); }

Poly2 Poly2::monomial(int q_exp, int k_exp, const Rational& coeff) {
  Poly2 p;
  p.insert(q_exp, k_exp, coeff);
  return p;
}

bool Poly2::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first == Key{0, 0});
}

bool Poly2::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == Key{0, 0} &&
         terms_.begin()->second == 1;
}

Rational Poly2::coefficient(int q_exp, int k_exp) const {
  auto it = terms_.find({q_exp, k_exp});
  return it == terms_.end() ? Rational(0) : it->second;
}

int Poly2::min_q_exponent() const {
  int m = 0;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    if (first || key.first < m) m = key.first;
    first = false;
  }
  return m;
}

int Poly2::min_k_exponent() const {
  int m = 0;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    if (first || key.second < m) m = key.second;
    first = false;
  }
  return m;
}

Poly2& Poly2::operator+=(const Poly2& rhs) {
  for (const auto& [key, c] : rhs.terms_) insert(key.first, key.second, c);
  return *this;
}

Poly2& Poly2::operator-=(const Poly2& rhs) {
  for (const auto& [key, c] : rhs.terms_) insert(key.first, key.second, -c);
  return *this;
}

Poly2 operator*(const Poly2& a, const Poly2& b) {
  Poly2 out;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      out.insert(ka.first + kb.first, ka.second + kb.second, ca * cb);
    }
  }
  return out;
}

Poly2& Poly2::operator*=(const Poly2& rhs) { return *this = *this * rhs; }

Poly2 Poly2::operator-() const {
  Poly2 out;
  for (const auto& [key, c] : terms_) out.terms_.emplace(key, -c);
  return out;
}

Poly2 Poly2::scaled(const Rational& c) const {
  Poly2 out;
  if (c == 0) return out;
  for (const auto& [key, v] : terms_) out.terms_.emplace(key, v * c);
  return out;
}

Poly2 Poly2::divided_exact(const Poly2& divisor) const {
  if (divisor.is_zero()) throw CheckViolation("Poly2 division by zero");
  Poly2 rem = *this;
  Poly2 quot;
  // Leading term under (q, k)-lex order is the last map entry.
  const auto& [dkey, dcoef] = *divisor.terms_.rbegin();
  while (!rem.is_zero()) {
    const auto& [rkey, rcoef] = *rem.terms_.rbegin();
    int dq = rkey.first - dkey.first;
    int dk = rkey.second - dkey.second;
    if (dq < 0 || dk < 0) {
      throw CheckViolation("inexact Poly2 division");
    }
    Poly2 t = monomial(dq, dk, rcoef / dcoef);
    quot += t;
    rem -= t * divisor;
  }
  return quot;
}

Rational Poly2::evaluate(const Rational& q_value,
                         const Rational& k_value) const {
  Rational total = 0;
  for (const auto& [key, c] : terms_) {
    Rational term = c;
    for (int i = 0; i < key.first; ++i) term *= q_value;
    for (int i = 0; i < key.second; ++i) term *= k_value;
    total += term;
  }
  return total;
}

std::string Poly2::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool has_vars = key.first > 0 || key.second > 0;
    bool wrote_coeff = false;
    if (!has_vars || mag != 1) {
      out << tl3d::to_string(mag);
      wrote_coeff = true;
    }
    if (key.first > 0) {
      if (wrote_coeff) out << "*";
      out << "q";
      if (key.first > 1) out << "^" << key.first;
      wrote_coeff = true;
    }
    if (key.second > 0) {
      if (wrote_coeff) out << "*";
      out << "k";
      if (key.second > 1) out << "^" << key.second;
    }
  }
  return out.str();
}

}  // namespace tl3d
