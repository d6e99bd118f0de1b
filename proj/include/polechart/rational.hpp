#pragma once

#include <gmpxx.h>

#include <cctype>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace polechart {

// mpq_class keeps lowest terms with a positive denominator after every operation.
using Rational = mpq_class;
using Integer = mpz_class;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

// Accepts "p" or "p/q" with optional sign; no decimals, no exponents, q != 0.
inline Rational parse_rational(std::string_view s) {
  auto digits = [](std::string_view t) {
    if (t.empty()) return false;
    for (char c : t)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  std::string_view body = s;
  bool neg = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    neg = body.front() == '-';
    body.remove_prefix(1);
  }
  std::string_view num = body, den = "1";
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
  }
  if (!digits(num) || !digits(den))
    throw ParseError("malformed rational '" + std::string(s) + "'");
  Integer p{std::string(num)}, q{std::string(den)};
  if (q == 0) throw ParseError("zero denominator in '" + std::string(s) + "'");
  Rational r(neg ? Integer(-p) : p, q);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

// Element of Q(i); the complex Weyr blocks reduce over this field.
struct Gaussian {
  Rational re, im;

  Gaussian() = default;
  Gaussian(int v) : re(v), im(0) {}
  Gaussian(Rational a) : re(std::move(a)), im(0) {}
  Gaussian(Rational a, Rational b) : re(std::move(a)), im(std::move(b)) {}

  Gaussian operator-() const { return {Rational(-re), Rational(-im)}; }
  Gaussian& operator+=(const Gaussian& o) { re += o.re; im += o.im; return *this; }
  Gaussian& operator-=(const Gaussian& o) { re -= o.re; im -= o.im; return *this; }
  Gaussian& operator*=(const Gaussian& o) {
    Rational a = re * o.re - im * o.im;
    Rational b = re * o.im + im * o.re;
    re = std::move(a);
    im = std::move(b);
    return *this;
  }
  Gaussian& operator/=(const Gaussian& o) {
    Rational n = o.re * o.re + o.im * o.im;
    if (sgn(n) == 0) throw std::domain_error("division by zero");
    Rational a = (re * o.re + im * o.im) / n;
    Rational b = (im * o.re - re * o.im) / n;
    re = std::move(a);
    im = std::move(b);
    return *this;
  }
  friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
  friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
  friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
  friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
  friend bool operator==(const Gaussian& a, const Gaussian& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend std::ostream& operator<<(std::ostream& os, const Gaussian& g) {
    return os << g.re << (sgn(g.im) < 0 ? "" : "+") << g.im << "i";
  }
};

inline bool is_zero(const Gaussian& g) { return sgn(g.re) == 0 && sgn(g.im) == 0; }

}  // namespace polechart
