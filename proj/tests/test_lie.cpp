#include "doctest.h"

#include "bdcoh/lie.hpp"
#include "bdcoh/random.hpp"
#include "bdcoh/rmatrix.hpp"
#include "oracles.hpp"

using namespace bdcoh;

namespace {
using E = LieElement<Rational>;
using T2 = Tensor2<Rational>;

E random_element(Rng& rng, int n, int terms = 4) {
  std::uniform_int_distribution<int> idx(1, n);
  E x(n);
  for (int k = 0; k < terms; ++k) x.add({idx(rng), idx(rng)}, random_rational(rng));
  return x;
}

T2 random_tensor(Rng& rng, int n, int terms = 5) {
  std::uniform_int_distribution<int> idx(1, n);
  T2 r(n);
  for (int k = 0; k < terms; ++k) r.add({idx(rng), idx(rng), idx(rng), idx(rng)}, random_rational(rng));
  return r;
}

E h(int n) { return unit<Rational>(n, 1, 1) - unit<Rational>(n, 2, 2); }
}  // namespace

TEST_CASE("brackets of matrix units") {
  CHECK(bracket(unit<Rational>(2, 1, 2), unit<Rational>(2, 2, 1)) == h(2));
  CHECK(bracket(unit<Rational>(3, 1, 2), unit<Rational>(3, 2, 3)) == unit<Rational>(3, 1, 3));
  const E x = unit<Rational>(3, 1, 2) + Rational(3) * unit<Rational>(3, 3, 1);
  CHECK(bracket(x, x).is_zero());
  CHECK_THROWS_AS(unit<Rational>(2, 1, 3), Error);
  CHECK_THROWS_AS(unit<Rational>(2, 1, 2) + unit<Rational>(3, 1, 2), Error);
}

TEST_CASE("trace form") {
  CHECK(trace_form(unit<Rational>(2, 1, 2), unit<Rational>(2, 2, 1)) == Rational(1));
  CHECK(trace_form(unit<Rational>(2, 1, 2), unit<Rational>(2, 1, 2)) == Rational(0));
  CHECK(trace_form(h(2), h(2)) == Rational(2));
}

TEST_CASE("Jacobi identity and invariance of the trace form") {
  Rng rng(3);
  for (int it = 0; it < 200; ++it) {
    const int n = 2 + it % 3;
    const E a = random_element(rng, n), b = random_element(rng, n), c = random_element(rng, n);
    REQUIRE((bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) + bracket(c, bracket(a, b))).is_zero());
    REQUIRE(trace_form(bracket(a, b), c) == trace_form(a, bracket(b, c)));
  }
}

TEST_CASE("Casimir tensors") {
  CHECK(cartan_casimir<Rational>(2) == Rational(1, 2) * outer(h(2), h(2)));
  for (int n = 2; n <= 4; ++n) {
    CHECK(swap(casimir<Rational>(n)) == casimir<Rational>(n));
    CHECK(partial_traces_vanish(casimir<Rational>(n)));
    CHECK(partial_traces_vanish(cartan_casimir<Rational>(n)));
  }
  Matrix<Rational> X(2, 2);
  X << 1, 1, 0, 1;
  CHECK(gauge_transform(X, casimir<Rational>(2)) == casimir<Rational>(2));
}

TEST_CASE("swap and gauge") {
  const T2 r = outer(unit<Rational>(2, 1, 2), unit<Rational>(2, 2, 1));
  CHECK(swap(r) == outer(unit<Rational>(2, 2, 1), unit<Rational>(2, 1, 2)));
  Rng rng(8);
  const T2 s = random_tensor(rng, 3);
  CHECK(swap(swap(s)) == s);
  CHECK(gauge_transform(Matrix<Rational>(Matrix<Rational>::Identity(3, 3)), s) == s);
  CHECK_THROWS_AS(gauge_transform(Matrix<Rational>(Matrix<Rational>::Zero(3, 3)), s), Error);
  for (int n = 2; n <= 3; ++n) {
    const RMatrix dj = drinfeld_jimbo(n);
    CHECK(gauge_transform(anti_diagonal<Rational>(n), dj.tensor) == swap(dj.tensor));
  }
}

TEST_CASE("CYB") {
  CHECK(cyb(T2(3)).is_zero());
  CHECK(cyb(drinfeld_jimbo(2).tensor).is_zero());
  const T2 e = outer(unit<Rational>(2, 1, 2), unit<Rational>(2, 1, 2));
  CHECK(exactly_equal(oracle::dense(cyb(e)), oracle::dense_cyb(e)));

  SUBCASE("matches the dense operator oracle") {
    Rng rng(21);
    for (int it = 0; it < 30; ++it) {
      const int n = 2 + it % 2;
      const T2 r = random_tensor(rng, n);
      REQUIRE(exactly_equal(oracle::dense(cyb(r)), oracle::dense_cyb(r)));
    }
  }

  SUBCASE("gauge covariance") {
    Rng rng(22);
    for (int it = 0; it < 10; ++it) {
      const int n = 2 + it % 2;
      const T2 r = random_tensor(rng, n);
      const auto X = random_invertible(rng, n);
      REQUIRE(cyb(gauge_transform(X, r)) == gauge_transform(X, cyb(r)));
    }
  }
}

TEST_CASE("root datum") {
  const RootDatum A3(4);
  CHECK(A3.positive_roots.size() == 6);
  CHECK(A3.cartan_entry(1, 2) == -1);
  CHECK(A3.cartan_entry(1, 3) == 0);
  CHECK(A3.cartan_entry(2, 2) == 2);
}
