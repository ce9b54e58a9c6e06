#include "doctest.h"

#include "bdcoh/random.hpp"
#include "bdcoh/rmatrix.hpp"
#include "oracles.hpp"

using namespace bdcoh;

namespace {
using T2 = Tensor2<Rational>;

LieElement<Rational> h(int n, int i) { return unit<Rational>(n, i, i) - unit<Rational>(n, i + 1, i + 1); }

Matrix<QuadRational> random_diagonal(Rng& rng, int n, long d) {
  std::vector<QuadRational> v;
  for (int i = 0; i < n; ++i) {
    QuadRational x;
    do x = QuadRational(random_rational(rng, 3), random_rational(rng, 3), d);
    while (is_zero(x));
    v.push_back(x);
  }
  return diagonal_matrix(v);
}
}  // namespace

TEST_CASE("Drinfeld-Jimbo") {
  const T2 expected = outer(unit<Rational>(2, 1, 2), unit<Rational>(2, 2, 1)) + Rational(1, 4) * outer(h(2, 1), h(2, 1));
  CHECK(drinfeld_jimbo(2).tensor == expected);
  for (int n = 2; n <= 5; ++n) {
    const RMatrix r = drinfeld_jimbo(n);
    CHECK(r.tensor + swap(r.tensor) == casimir<Rational>(n));
    CHECK(cyb(r.tensor).is_zero());
    CHECK(exactly_equal(oracle::dense_cyb(r.tensor), Matrix<Rational>(Matrix<Rational>::Zero(n * n * n, n * n * n))));
    CHECK(build_bd_rmatrix(AdmissibleTriple::empty(n)).tensor == r.tensor);
    CHECK(solve_r0(AdmissibleTriple::empty(n)) == Rational(1, 2) * cartan_casimir<Rational>(n));
  }
}

TEST_CASE("continuous parameter") {
  const auto cg = AdmissibleTriple::cremmer_gervais(3);
  const T2 r0 = solve_r0(cg);
  // (alpha_2 (x) 1 + 1 (x) alpha_1)(r0) = 0
  const auto left = apply_root_functional(r0, 0, 2, 3);
  const auto right = apply_root_functional(r0, 1, 1, 2);
  CHECK((left + right).is_zero());
  CHECK(r0 + swap(r0) == cartan_casimir<Rational>(3));
  CHECK(is_valid_r0(cg, r0));
  CHECK(solve_r0(cg) == r0);
  CHECK(!is_valid_r0(cg, Rational(1, 2) * cartan_casimir<Rational>(3)));
  try {
    build_bd_rmatrix(cg, Rational(1, 2) * cartan_casimir<Rational>(3));
    FAIL("expected BadContinuousParameter");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BadContinuousParameter);
  }
}

TEST_CASE("Cremmer-Gervais wedge term") {
  const auto w = wedge_terms(AdmissibleTriple::cremmer_gervais(3));
  REQUIRE(w.size() == 1);
  CHECK(w[0].alpha == std::make_pair(1, 2));
  CHECK(w[0].image == std::make_pair(2, 3));
  CHECK(w[0].k == 1);
  CHECK(verify_rmatrix(build_bd_rmatrix(AdmissibleTriple::cremmer_gervais(3))).passed());
}

TEST_CASE("every triple with n <= 5 yields an r-matrix") {
  for (int n = 2; n <= 5; ++n)
    for (const auto& t : enumerate_triples(n)) {
      const RMatrix r = build_bd_rmatrix(t);
      const auto v = verify_rmatrix(r);
      REQUIRE_MESSAGE(v.passed(), format_triple(t) << ": " << v.failure);
      REQUIRE(partial_traces_vanish(r.tensor));
      for (const auto& w : wedge_terms(t)) REQUIRE((w.tensor + swap(w.tensor)).is_zero());
      if (twistability_check(t)) REQUIRE(gauge_transform(anti_diagonal<Rational>(n), r.tensor) == swap(r.tensor));
    }
}

TEST_CASE("verification localizes failures") {
  RMatrix r = drinfeld_jimbo(2);
  r.tensor += outer(unit<Rational>(2, 1, 2), unit<Rational>(2, 1, 2));
  const auto v = verify_rmatrix(r);
  CHECK(!v.symmetric_part_ok);
  CHECK(v.failure.find("e_12") != std::string::npos);

  Rng rng(4);
  const RMatrix cg = build_bd_rmatrix(AdmissibleTriple::cremmer_gervais(3));
  for (int it = 0; it < 5; ++it) CHECK(verify_tensor(gauge_transform(random_invertible(rng, 3), cg.tensor)).passed());
}

TEST_CASE("centralizer") {
  const RMatrix cg = build_bd_rmatrix(AdmissibleTriple::cremmer_gervais(3));
  const Rational t(3);
  CHECK(centralizer_contains(cg, diagonal_matrix<Rational>({t * t, t, 1})));
  CHECK(!centralizer_contains(cg, diagonal_matrix<Rational>({t, 1, 1})));
  CHECK(centralizer_contains(cg, diagonal_matrix<Rational>({5, 5, 5})));
  CHECK(centralizer_contains(drinfeld_jimbo(3), diagonal_matrix<Rational>({2, -7, 3})));

  Rng rng(17);
  for (int n = 3; n <= 4; ++n)
    for (const auto& t3 : enumerate_triples(n)) {
      const RMatrix r = build_bd_rmatrix(t3);
      const auto R = oracle::dense(tensor_cast<QuadRational>(r.tensor));
      for (int it = 0; it < 40; ++it) {
        Matrix<QuadRational> D = random_diagonal(rng, n, 2);
        if (it % 2 == 0) {
          // force membership by copying s along each string
          auto s = s_coordinates(D);
          for (const auto& cls : centralizer_description(r).classes)
            for (int i : cls) s[i - 1] = s[cls[0] - 1];
          D = phi(s);
        }
        const bool direct = exactly_equal(oracle::dense_conjugate(D, R), R);
        REQUIRE(centralizer_contains(r, D) == direct);
        REQUIRE(centralizer_contains_direct(r, D) == direct);
      }
    }
}

TEST_CASE("phi inverts s-coordinates") {
  const std::vector<Rational> s{2, Rational(1, 3), -5};
  const auto D = phi(s);
  CHECK(exactly_equal(D, diagonal_matrix<Rational>({Rational(-10, 3), Rational(-5, 3), -5})));
  CHECK(s_coordinates(D) == s);
}
