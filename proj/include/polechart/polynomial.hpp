#pragma once

#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace polechart {

// Univariate polynomial in s over Q, coefficients stored low degree first.
class Poly {
 public:
  Poly() = default;
  Poly(int c) : Poly(Rational(c)) {}
  Poly(Rational c) {
    if (!polechart::is_zero(c)) c_.push_back(std::move(c));
  }
  explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly s() { return Poly(std::vector<Rational>{0, 1}); }
  static Poly monomial(Rational c, int k) {
    std::vector<Rational> v(k + 1, Rational(0));
    v[k] = std::move(c);
    return Poly(std::move(v));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int k) const { return k < static_cast<int>(c_.size()) && k >= 0 ? c_[k] : Rational(0); }
  const Rational& lead() const { return c_.back(); }

  Poly monic() const {
    if (c_.empty()) return *this;
    Poly p = *this;
    Rational l = lead();
    for (auto& v : p.c_) v /= l;
    return p;
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
  }
  Poly operator-() const {
    Poly p = *this;
    for (auto& v : p.c_) v = -v;
    return p;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(v));
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  // Quotient and remainder with deg(rem) < deg(d).
  friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& d) {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    Poly rem = a;
    if (rem.degree() < d.degree()) return {Poly(), rem};
    std::vector<Rational> q(rem.degree() - d.degree() + 1, Rational(0));
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
      int shift = rem.degree() - d.degree();
      Rational f = rem.lead() / d.lead();
      q[shift] = f;
      for (int k = 0; k <= d.degree(); ++k) rem.c_[k + shift] -= f * d.c_[k];
      rem.trim();
    }
    return {Poly(std::move(q)), rem};
  }
  friend Poly operator/(const Poly& a, const Poly& d) { return divmod(a, d).first; }
  friend Poly operator%(const Poly& a, const Poly& d) { return divmod(a, d).second; }

  Rational eval(const Rational& x) const {
    Rational acc(0);
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
    return acc;
  }

  std::string str() const {
    if (c_.empty()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
      const Rational& v = c_[k];
      if (polechart::is_zero(v)) continue;
      Rational mag = abs(v);
      if (out.empty()) out = sgn(v) < 0 ? "-" : "";
      else out += sgn(v) < 0 ? " - " : " + ";
      bool unit = mag == 1 && k > 0;
      if (!unit) out += to_string(mag);
      if (k > 0) {
        if (!unit) out += "*";
        out += "s";
        if (k > 1) out += "^" + std::to_string(k);
      }
    }
    return out;
  }
  friend std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

 private:
  void trim() {
    while (!c_.empty() && polechart::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<Rational> c_;
};

inline bool is_zero(const Poly& p) { return p.is_zero(); }

// Monic gcd; gcd(0, 0) = 0.
inline Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

inline Poly power(const Poly& p, int k) {
  Poly out(1);
  for (int i = 0; i < k; ++i) out *= p;
  return out;
}

}  // namespace polechart
