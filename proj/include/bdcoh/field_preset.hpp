#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bdcoh/number_theory.hpp"
#include "bdcoh/rational.hpp"

namespace bdcoh {

enum class FieldKind { Rationals, Reals, Laurent };

/// Element of C((hbar))* up to the data that square and norm classes see.
/// Leading coefficients are complex, hence squares, so only the hbar-adic
/// valuation is kept.
struct LaurentElement {
  long valuation = 0;
  friend bool operator==(const LaurentElement&, const LaurentElement&) = default;
};

/// Rationals stand for elements of Q and, through their sign, of R.
using FieldElement = std::variant<Rational, LaurentElement>;

/// Canonical representative of x (F*)^2. For Q a signed squarefree integer,
/// for R the sign, for C((hbar)) the valuation parity (0 -> "1", 1 -> "hbar").
struct SquareClass {
  FieldKind field = FieldKind::Rationals;
  BigInt rep = 1;

  bool is_trivial() const { return field == FieldKind::Laurent ? rep == 0 : rep == 1; }
  std::string label() const;
  friend bool operator==(const SquareClass& a, const SquareClass& b) { return a.field == b.field && a.rep == b.rep; }
};

/// Description of F*/N(F(sqrt d)*).
struct NormQuotient {
  std::optional<long> order;          // empty when infinite
  std::vector<BigInt> representatives;  // all of them when finite, a prefix of the stream otherwise
  std::string description;
};

/// Square and norm decision procedures for one of the three base fields.
class FieldPreset {
 public:
  explicit FieldPreset(FieldKind kind) : kind_(kind) {}
  static FieldPreset rationals() { return FieldPreset(FieldKind::Rationals); }
  static FieldPreset reals() { return FieldPreset(FieldKind::Reals); }
  static FieldPreset laurent() { return FieldPreset(FieldKind::Laurent); }
  /// "Q", "R" or "Laurent".
  static FieldPreset parse(const std::string& name);
  /// Accepts rationals for Q/R; "1", "hbar", "hbar^k", "c*hbar^k" for Laurent.
  FieldElement parse_element(const std::string& text) const;

  FieldKind kind() const { return kind_; }
  std::string name() const;

  bool is_square(const FieldElement& x) const;
  SquareClass canonicalize(const FieldElement& x) const;
  /// True iff x = a^2 - d b^2 for some a, b in F.
  bool is_norm(const SquareClass& d, const FieldElement& x) const;
  /// Canonical integer representative of x modulo norms from F(sqrt d):
  /// the first of 1, -1, 2, -2, 3, ... (squarefree) in the class of x.
  BigInt norm_class(const SquareClass& d, const FieldElement& x) const;
  NormQuotient norm_quotient(const SquareClass& d, int stream_count) const;
  /// Nontrivial square classes; for Q those of squarefree d with |d| <= bound.
  std::vector<SquareClass> nontrivial_square_classes(long bound) const;

  /// Element of F standing for a square class representative.
  FieldElement element_of(const SquareClass& c) const;

 private:
  void require_extension(const SquareClass& d) const;
  FieldKind kind_;
};

/// Squarefree integers in presentation order 1, -1, 2, -2, 3, -3, 5, ...
std::vector<BigInt> squarefree_sequence(long max_abs);

}  // namespace bdcoh
