#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "bdcoh/rational.hpp"

namespace bdcoh {

/// Dense univariate polynomial over Q in the variable u, coefficients stored
/// lowest degree first with no trailing zeros.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(const Rational& c);  // NOLINT(google-explicit-constructor)
  static Polynomial monomial(const Rational& c, int degree);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& leading() const { return c_.back(); }
  Rational coeff(int k) const { return k < static_cast<int>(c_.size()) ? c_[k] : Rational(0); }

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  /// Euclidean division; divisor must be nonzero.
  static void divmod(const Polynomial& a, const Polynomial& b, Polynomial& q, Polynomial& r);
  static Polynomial gcd(Polynomial a, Polynomial b);

  /// p(u) -> p(-u)
  Polynomial reflect() const;
  /// Multiplicity of the root u = 0.
  int low_order() const;

  std::string str() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Element of Q(u) with u^2 = hbar: a finite exact model of the quadratic
/// extension F(sqrt d) for F = C((hbar)) and d = hbar. The base field is the
/// set of even functions, conjugation is u -> -u, and u itself is sqrt(d).
class RationalFunction {
 public:
  RationalFunction() : den_(Rational(1)) {}
  RationalFunction(long v) : num_(Rational(v)), den_(Rational(1)) {}  // NOLINT
  RationalFunction(int v) : num_(Rational(v)), den_(Rational(1)) {}   // NOLINT
  RationalFunction(const Rational& v) : num_(v), den_(Rational(1)) {} // NOLINT
  RationalFunction(Polynomial num, Polynomial den);

  /// The generator u = sqrt(hbar).
  static RationalFunction generator();

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero_value() const { return num_.is_zero(); }

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  RationalFunction inverse() const;
  RationalFunction conj() const;
  /// Fixed by conjugation, i.e. an element of Q(hbar).
  bool is_base() const { return *this == conj(); }
  /// u-adic valuation (twice the hbar-adic valuation on base elements).
  int valuation() const;

  std::string str() const;

 private:
  void normalize();
  Polynomial num_;
  Polynomial den_;
};

inline RationalFunction conjugate(const RationalFunction& x) { return x.conj(); }
inline bool is_zero(const RationalFunction& x) { return x.is_zero_value(); }
std::ostream& operator<<(std::ostream& os, const RationalFunction& x);

}  // namespace bdcoh
