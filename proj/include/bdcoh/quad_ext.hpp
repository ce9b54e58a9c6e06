#pragma once

#include <ostream>
#include <string>

#include "bdcoh/errors.hpp"
#include "bdcoh/rational.hpp"

namespace bdcoh {

bool is_squarefree(long d);

/// Element a + b*sqrt(d) of the quadratic extension Base(sqrt d).
///
/// The discriminant travels with the value. d == 0 marks an element of the
/// base field that has not been pinned to an extension yet (b is then zero);
/// such values combine freely with any extension. Two pinned values with
/// different d never combine.
template <class Base>
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(long v) : a_(v) {}           // NOLINT(google-explicit-constructor)
  QuadExt(int v) : a_(v) {}            // NOLINT(google-explicit-constructor)
  QuadExt(const Base& a) : a_(a) {}    // NOLINT(google-explicit-constructor)
  QuadExt(const Base& a, const Base& b, long d) : a_(a), b_(b), d_(d) {
    if (d_ == 0 && !is_zero(b_)) {
      throw Error(ErrorKind::IncompatibleExtension, "irrational part without a discriminant");
    }
  }

  /// sqrt(d) itself; d must be squarefree and different from 1.
  static QuadExt sqrt_of(long d) {
    if (d == 0 || d == 1 || !is_squarefree(d)) {
      throw Error(ErrorKind::NotAnExtension, "discriminant " + std::to_string(d) + " is not a squarefree non-unit");
    }
    return QuadExt(Base(0), Base(1), d);
  }

  const Base& a() const { return a_; }
  const Base& b() const { return b_; }
  long d() const { return d_; }

  bool is_zero_value() const { return is_zero(a_) && is_zero(b_); }
  /// True when the value lies in the base field.
  bool is_base() const { return is_zero(b_); }

  QuadExt operator-() const { return QuadExt(-a_, -b_, d_); }

  QuadExt& operator+=(const QuadExt& o) {
    d_ = join(o);
    a_ += o.a_;
    b_ += o.b_;
    return *this;
  }
  QuadExt& operator-=(const QuadExt& o) {
    d_ = join(o);
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
  }
  QuadExt& operator*=(const QuadExt& o) {
    long d = join(o);
    Base a = a_ * o.a_ + Base(d) * b_ * o.b_;
    Base b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    d_ = d;
    return *this;
  }
  QuadExt& operator/=(const QuadExt& o) { return *this *= o.inverse(); }

  friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
  friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
  friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
  friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }

  friend bool operator==(const QuadExt& x, const QuadExt& y) {
    if (x.d_ != 0 && y.d_ != 0 && x.d_ != y.d_) {
      throw Error(ErrorKind::IncompatibleExtension, "comparing elements of different extensions");
    }
    return x.a_ == y.a_ && x.b_ == y.b_;
  }

  /// The nontrivial automorphism a + b sqrt(d) -> a - b sqrt(d).
  QuadExt conj() const { return QuadExt(a_, -b_, d_); }

  /// x * conj(x), an element of the base field.
  Base norm() const { return a_ * a_ - Base(d_) * b_ * b_; }

  QuadExt inverse() const {
    Base n = norm();
    if (is_zero(n)) throw Error(ErrorKind::DivisionByZero, "inverse of zero in quadratic extension");
    return QuadExt(a_ / n, -b_ / n, d_);
  }

  std::string str() const {
    if (is_zero(b_)) return a_.str();
    std::string s = is_zero(a_) ? "" : a_.str() + (b_ < Base(0) ? "" : "+");
    return s + b_.str() + "*sqrt(" + std::to_string(d_) + ")";
  }

 private:
  long join(const QuadExt& o) const {
    if (d_ == 0) return o.d_;
    if (o.d_ == 0 || o.d_ == d_) return d_;
    throw Error(ErrorKind::IncompatibleExtension,
                "mixing sqrt(" + std::to_string(d_) + ") and sqrt(" + std::to_string(o.d_) + ")");
  }

  Base a_{};
  Base b_{};
  long d_ = 0;
};

template <class Base>
QuadExt<Base> conjugate(const QuadExt<Base>& x) { return x.conj(); }

template <class Base>
Base norm(const QuadExt<Base>& x) { return x.norm(); }

template <class Base>
bool is_zero(const QuadExt<Base>& x) { return x.is_zero_value(); }

template <class Base>
std::ostream& operator<<(std::ostream& os, const QuadExt<Base>& x) { return os << x.str(); }

using QuadRational = QuadExt<Rational>;

}  // namespace bdcoh
