#include "bdcoh/field_preset.hpp"

#include <regex>

#include "bdcoh/errors.hpp"
#include "bdcoh/quad_ext.hpp"

namespace bdcoh {

namespace {

const Rational& as_rational(const FieldElement& x) {
  if (auto* r = std::get_if<Rational>(&x)) return *r;
  throw Error(ErrorKind::UsageError, "expected a rational field element");
}

const LaurentElement& as_laurent(const FieldElement& x) {
  if (auto* l = std::get_if<LaurentElement>(&x)) return *l;
  throw Error(ErrorKind::UsageError, "expected a Laurent field element");
}

void require_nonzero(const FieldElement& x) {
  if (auto* r = std::get_if<Rational>(&x); r && r->is_zero()) throw Error(ErrorKind::ZeroInput, "zero field element");
}

long parity(long v) { return ((v % 2) + 2) % 2; }

}  // namespace

std::string SquareClass::label() const {
  if (field == FieldKind::Laurent) return rep == 0 ? "1" : "hbar";
  return rep.get_str();
}

FieldPreset FieldPreset::parse(const std::string& name) {
  if (name == "Q") return rationals();
  if (name == "R") return reals();
  if (name == "Laurent") return laurent();
  throw Error(ErrorKind::UsageError, "unknown field preset '" + name + "' (expected Q, R or Laurent)");
}

std::string FieldPreset::name() const {
  switch (kind_) {
    case FieldKind::Rationals: return "Q";
    case FieldKind::Reals: return "R";
    case FieldKind::Laurent: return "Laurent";
  }
  return "?";
}

FieldElement FieldPreset::parse_element(const std::string& text) const {
  if (kind_ != FieldKind::Laurent) return Rational::parse(text);
  static const std::regex re(R"(^\s*(?:([+-]?\d+(?:/\d+)?)\*?)?(hbar)?(?:\^([+-]?\d+))?\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, re) || (m[1].length() == 0 && m[2].length() == 0)) {
    throw Error(ErrorKind::ParseError, "not a Laurent element: '" + text + "'");
  }
  if (m[1].length() > 0 && Rational::parse(m[1].str()).is_zero()) throw Error(ErrorKind::ZeroInput, "zero Laurent element");
  long v = 0;
  if (m[2].length() > 0) v = m[3].length() > 0 ? std::stol(m[3].str()) : 1;
  else if (m[3].length() > 0) throw Error(ErrorKind::ParseError, "exponent without hbar in '" + text + "'");
  return LaurentElement{v};
}

bool FieldPreset::is_square(const FieldElement& x) const {
  require_nonzero(x);
  switch (kind_) {
    case FieldKind::Rationals: return squarefree_part(as_rational(x)) == 1;
    case FieldKind::Reals: return as_rational(x).sign() > 0;
    case FieldKind::Laurent: return parity(as_laurent(x).valuation) == 0;
  }
  return false;
}

SquareClass FieldPreset::canonicalize(const FieldElement& x) const {
  require_nonzero(x);
  switch (kind_) {
    case FieldKind::Rationals: return {kind_, squarefree_part(as_rational(x))};
    case FieldKind::Reals: return {kind_, BigInt(as_rational(x).sign())};
    case FieldKind::Laurent: return {kind_, BigInt(parity(as_laurent(x).valuation))};
  }
  return {};
}

FieldElement FieldPreset::element_of(const SquareClass& c) const {
  if (kind_ == FieldKind::Laurent) return LaurentElement{c.rep.get_si()};
  return Rational(c.rep);
}

void FieldPreset::require_extension(const SquareClass& d) const {
  if (d.field != kind_) throw Error(ErrorKind::UsageError, "square class belongs to another field preset");
  if (d.is_trivial()) throw Error(ErrorKind::NotAnExtension, "d = " + d.label() + " is a square");
}

bool FieldPreset::is_norm(const SquareClass& d, const FieldElement& x) const {
  require_extension(d);
  require_nonzero(x);
  switch (kind_) {
    case FieldKind::Rationals: return hilbert_symbol_global(Rational(d.rep), as_rational(x)) == 1;
    case FieldKind::Reals: return as_rational(x).sign() > 0;  // d < 0 here
    case FieldKind::Laurent: as_laurent(x); return true;
  }
  return false;
}

std::vector<BigInt> squarefree_sequence(long max_abs) {
  std::vector<BigInt> out{BigInt(1), BigInt(-1)};
  for (long m = 2; m <= max_abs; ++m) {
    if (!is_squarefree(m)) continue;
    out.emplace_back(m);
    out.emplace_back(-m);
  }
  return out;
}

BigInt FieldPreset::norm_class(const SquareClass& d, const FieldElement& x) const {
  require_extension(d);
  require_nonzero(x);
  switch (kind_) {
    case FieldKind::Laurent: as_laurent(x); return 1;
    case FieldKind::Reals: return as_rational(x).sign();
    case FieldKind::Rationals: break;
  }
  const Rational& q = as_rational(x);
  BigInt bound = abs(squarefree_part(q));
  // x/m is a norm iff x*m is, since m^2 is one.
  for (long m = 1; m <= bound; ++m) {
    if (!is_squarefree(m)) continue;
    for (long sm : {m, -m}) {
      if (hilbert_symbol_global(Rational(d.rep), q * Rational(sm)) == 1) return BigInt(sm);
    }
  }
  throw Error(ErrorKind::ReductionFailed, "no norm-class representative found for " + q.str());
}

NormQuotient FieldPreset::norm_quotient(const SquareClass& d, int stream_count) const {
  require_extension(d);
  switch (kind_) {
    case FieldKind::Reals: return {2, {BigInt(1), BigInt(-1)}, "R*/N(C*) = {+1,-1}"};
    case FieldKind::Laurent: return {1, {BigInt(1)}, "every element of C((hbar)) is a norm from C((hbar))(sqrt(hbar))"};
    case FieldKind::Rationals: break;
  }
  NormQuotient out{std::nullopt, {}, "Q*/N(Q(sqrt(" + d.rep.get_str() + "))*), infinite; representatives are the first squarefree integers in their own norm class"};
  for (long m = 1; static_cast<int>(out.representatives.size()) < stream_count; ++m) {
    if (!is_squarefree(m)) continue;
    for (long sm : {m, -m}) {
      if (static_cast<int>(out.representatives.size()) >= stream_count) break;
      if (norm_class(d, Rational(sm)) == sm) out.representatives.emplace_back(sm);
    }
  }
  return out;
}

std::vector<SquareClass> FieldPreset::nontrivial_square_classes(long bound) const {
  switch (kind_) {
    case FieldKind::Reals: return {{kind_, BigInt(-1)}};
    case FieldKind::Laurent: return {{kind_, BigInt(1)}};
    case FieldKind::Rationals: break;
  }
  std::vector<SquareClass> out;
  for (const BigInt& m : squarefree_sequence(bound)) {
    if (m != 1) out.push_back({kind_, m});
  }
  return out;
}

}  // namespace bdcoh
