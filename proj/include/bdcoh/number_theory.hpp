#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bdcoh/rational.hpp"

namespace bdcoh {

/// Trial-division limit used when factoring integers for square-class and
/// Hilbert-symbol computations.
inline constexpr long kDefaultFactorBound = 1'000'000;

/// Prime factorization of |n| (n != 0) as (prime, exponent) pairs in
/// increasing order. Throws FactorizationBound when a cofactor cannot be
/// certified prime using trial division up to `bound`.
std::vector<std::pair<BigInt, unsigned>> factorize(BigInt n, long bound = kDefaultFactorBound);

/// Signed squarefree integer in the square class of x != 0.
BigInt squarefree_part(const Rational& x, long bound = kDefaultFactorBound);

/// p-adic valuation of a nonzero integer.
unsigned valuation(BigInt n, const BigInt& p);

/// A place of Q: a prime, or the real place (prime == 0).
struct Place {
  BigInt prime;  // 0 encodes the infinite place

  static Place infinity() { return Place{BigInt(0)}; }
  bool is_infinite() const { return prime == 0; }
  std::string str() const { return is_infinite() ? "inf" : prime.get_str(); }
  friend bool operator==(const Place& a, const Place& b) { return a.prime == b.prime; }
};

/// Local Hilbert symbol (a,b)_v in {+1,-1}; a, b nonzero.
int hilbert_symbol_local(const Rational& a, const Rational& b, const Place& v);

/// Places where (a,b)_v could be -1: infinity, 2 and odd primes dividing
/// a numerator or denominator. Sorted with infinity last.
std::vector<Place> relevant_places(const Rational& a, const Rational& b);

/// +1 iff every local symbol is +1, i.e. iff b is a norm from Q(sqrt a).
int hilbert_symbol_global(const Rational& a, const Rational& b);

/// Places with local symbol -1 (always of even cardinality).
std::vector<Place> ramified_places(const Rational& a, const Rational& b);

}  // namespace bdcoh
