#include "bdcoh/rational.hpp"

#include <ostream>

#include "bdcoh/errors.hpp"

namespace bdcoh {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::IncompatibleExtension: return "IncompatibleExtension";
    case ErrorKind::ZeroInput: return "ZeroInput";
    case ErrorKind::NotAnExtension: return "NotAnExtension";
    case ErrorKind::FactorizationBound: return "FactorizationBound";
    case ErrorKind::RankMismatch: return "RankMismatch";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::MalformedTriple: return "MalformedTriple";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::NoContinuousParameter: return "NoContinuousParameter";
    case ErrorKind::BadContinuousParameter: return "BadContinuousParameter";
    case ErrorKind::EmptyCohomology: return "EmptyCohomology";
    case ErrorKind::WrongAssignmentLength: return "WrongAssignmentLength";
    case ErrorKind::Unfactored: return "Unfactored";
    case ErrorKind::NotACocycleShape: return "NotACocycleShape";
    case ErrorKind::DegeneratePivot: return "DegeneratePivot";
    case ErrorKind::ReductionFailed: return "ReductionFailed";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UsageError: return "UsageError";
  }
  return "Unknown";
}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
  mpq_class q;
  if (text.empty() || q.set_str(text, 10) != 0) {
    throw Error(ErrorKind::ParseError, "not a rational number: '" + text + "'");
  }
  if (q.get_den() == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator in '" + text + "'");
  q.canonicalize();
  return Rational(q);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational division by zero");
  q_ /= o.q_;
  return *this;
}

Rational Rational::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  return Rational(mpq_class(1 / q_));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace bdcoh
