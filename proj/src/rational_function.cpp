#include "bdcoh/rational_function.hpp"

#include <ostream>

#include "bdcoh/errors.hpp"

namespace bdcoh {

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(const Rational& c) {
  if (!c.is_zero()) c_.push_back(c);
}

Polynomial Polynomial::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(degree + 1, Rational(0));
  v[degree] = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& c : p.c_) c = -c;
  return p;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
  return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  return Polynomial(std::move(v));
}

void Polynomial::divmod(const Polynomial& a, const Polynomial& b, Polynomial& q, Polynomial& r) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  std::vector<Rational> quot(std::max(a.degree() - b.degree() + 1, 0), Rational(0));
  r = a;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int shift = r.degree() - b.degree();
    Rational c = r.leading() / b.leading();
    quot[shift] = c;
    r = r - monomial(c, shift) * b;
  }
  q = Polynomial(std::move(quot));
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  Rational lead = a.leading();
  for (auto& c : a.c_) c /= lead;
  return a;
}

Polynomial Polynomial::reflect() const {
  Polynomial p = *this;
  for (size_t i = 1; i < p.c_.size(); i += 2) p.c_[i] = -p.c_[i];
  return p;
}

int Polynomial::low_order() const {
  for (size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return static_cast<int>(i);
  throw Error(ErrorKind::ZeroInput, "valuation of the zero polynomial");
}

std::string Polynomial::str() const {
  if (c_.empty()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = c_[k];
    if (c.is_zero()) continue;
    std::string mag = (c.sign() < 0 ? -c : c).str();
    if (!out.empty()) out += c.sign() < 0 ? " - " : " + ";
    else if (c.sign() < 0) out += "-";
    if (k == 0) {
      out += mag;
    } else {
      if (mag != "1") out += mag + "*";
      out += k == 1 ? "u" : "u^" + std::to_string(k);
    }
  }
  return out;
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational function with zero denominator");
  normalize();
}

RationalFunction RationalFunction::generator() {
  return RationalFunction(Polynomial::monomial(Rational(1), 1), Polynomial(Rational(1)));
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial(Rational(1));
    return;
  }
  Polynomial g = Polynomial::gcd(num_, den_);
  Polynomial r;
  if (g.degree() > 0) {
    Polynomial q;
    Polynomial::divmod(num_, g, q, r);
    num_ = q;
    Polynomial::divmod(den_, g, q, r);
    den_ = q;
  }
  Rational lead = den_.leading();
  if (!(lead == Rational(1))) {
    Polynomial inv(lead.inverse());
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(-num_, den_); }

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) { return a * b.inverse(); }

RationalFunction RationalFunction::inverse() const {
  if (num_.is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of the zero function");
  return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::conj() const { return RationalFunction(num_.reflect(), den_.reflect()); }

int RationalFunction::valuation() const { return num_.low_order() - den_.low_order(); }

std::string RationalFunction::str() const {
  if (den_ == Polynomial(Rational(1))) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& x) { return os << x.str(); }

}  // namespace bdcoh
