#pragma once

#include <random>

#include "bdcoh/matrix.hpp"
#include "bdcoh/rational.hpp"

namespace bdcoh {

using Rng = std::mt19937_64;

/// Nonzero rational p/q with |p| <= span, 1 <= q <= span.
inline Rational random_nonzero_rational(Rng& rng, long span = 5) {
  std::uniform_int_distribution<long> num(-span, span), den(1, span);
  long p = 0;
  while (p == 0) p = num(rng);
  return Rational(p, den(rng));
}

inline Rational random_rational(Rng& rng, long span = 5) {
  std::uniform_int_distribution<long> num(-span, span), den(1, span);
  return Rational(num(rng), den(rng));
}

/// Invertible n x n matrix with small rational entries.
template <class Scalar = Rational>
Matrix<Scalar> random_invertible(Rng& rng, int n, long span = 3) {
  for (;;) {
    Matrix<Scalar> m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = Scalar(random_rational(rng, span));
    if (is_invertible(m)) return m;
  }
}

}  // namespace bdcoh
