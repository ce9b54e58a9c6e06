#include "doctest.h"

#include "bdcoh/brauer.hpp"
#include "bdcoh/random.hpp"

using namespace bdcoh;

namespace {
const FieldPreset kQ = FieldPreset::rationals();

Quaternion basis(int k) {
  Quaternion e{0, 0, 0, 0};
  e[k] = 1;
  return e;
}

std::vector<std::string> places(const BrauerClassDescriptor& d) {
  std::vector<std::string> out;
  for (const auto& p : d.bad_places) out.push_back(p.str());
  return out;
}
}  // namespace

TEST_CASE("quaternion multiplication") {
  const QuaternionAlgebra A{Rational(-1), Rational(-1)};
  CHECK(quaternion_multiply(A, basis(1), basis(2)) == basis(3));
  CHECK(quaternion_multiply(A, basis(2), basis(1)) == Quaternion{0, 0, 0, -1});
  const QuaternionAlgebra B{Rational(3), Rational(-5)};
  CHECK(quaternion_multiply(B, basis(3), basis(3)) == Quaternion{15, 0, 0, 0});
  CHECK(quaternion_multiply(B, basis(1), basis(1)) == Quaternion{3, 0, 0, 0});
  CHECK(quaternion_multiply(A, {1, 1, 0, 0}, {1, -1, 0, 0}) == Quaternion{2, 0, 0, 0});

  Rng rng(30);
  for (int it = 0; it < 20; ++it) {
    const QuaternionAlgebra C{random_nonzero_rational(rng), random_nonzero_rational(rng)};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k) {
          const auto l = quaternion_multiply(C, quaternion_multiply(C, basis(i), basis(j)), basis(k));
          const auto r = quaternion_multiply(C, basis(i), quaternion_multiply(C, basis(j), basis(k)));
          REQUIRE(l == r);
        }
    Quaternion u, v;
    for (int k = 0; k < 4; ++k) u[k] = random_rational(rng), v[k] = random_rational(rng);
    REQUIRE(reduced_norm(C, quaternion_multiply(C, u, v)) == reduced_norm(C, u) * reduced_norm(C, v));
  }
}

TEST_CASE("splitting") {
  CHECK(!is_split(Rational(-1), Rational(-1), FieldPreset::reals()).split);
  CHECK(is_split(Rational(4), Rational(-1), kQ).split);
  CHECK(is_split(Rational(-1), Rational(5), kQ).split);
  CHECK(is_split(LaurentElement{1}, LaurentElement{1}, FieldPreset::laurent()).split);
}

TEST_CASE("Brauer map") {
  const auto hamilton = brauer_map(Rational(-1), Rational(-1), kQ);
  CHECK(!hamilton.split);
  CHECK(places(hamilton) == std::vector<std::string>{"2", "inf"});
  CHECK(brauer_map(Rational(-1), Rational(5), kQ).split);
  const auto two_three = brauer_map(Rational(2), Rational(3), kQ);
  CHECK(places(two_three) == std::vector<std::string>{"2", "3"});
  CHECK_THROWS_AS(brauer_map(Rational(9), Rational(2), kQ), Error);

  for (long d : {-7L, -3L, -1L, 2L, 3L, 5L, 6L, 10L})
    for (long b : {-5L, -2L, -1L, 2L, 3L, 7L, 11L}) {
      const auto x = brauer_map(Rational(d), Rational(b), kQ);
      REQUIRE(x.bad_places.size() % 2 == 0);
      REQUIRE(x.split == x.bad_places.empty());
      if (!kQ.canonicalize(Rational(b)).is_trivial()) {
        REQUIRE(brauer_equal({Rational(d), Rational(b)}, {Rational(b), Rational(d)}, kQ));
      }
      REQUIRE(brauer_equal({Rational(d), Rational(b)}, {Rational(d), Rational(b * 9)}, kQ));
      REQUIRE(brauer_equal({Rational(d), Rational(b)}, {Rational(d), Rational(b, 4)}, kQ));
      // the class is 2-torsion: (d,b) (d,b) = (d,b^2) is split
      REQUIRE(brauer_map(Rational(d), Rational(b * b), kQ).split);
    }
  CHECK(brauer_equal({Rational(-1), Rational(-1)}, {Rational(-1), Rational(-1)}, kQ));
  CHECK(brauer_equal({Rational(2), Rational(3)}, {Rational(3), Rational(2)}, kQ));
  CHECK(!brauer_equal({Rational(-1), Rational(-1)}, {Rational(-1), Rational(5)}, kQ));
}

TEST_CASE("zero-divisor search") {
  const auto w = zero_divisor_search(1, 7, 3);
  REQUIRE(w);
  CHECK(*w == std::array<long, 4>{1, 1, 0, 0});
  CHECK(!zero_divisor_search(-1, -1, 20));
  CHECK(zero_divisor_search(-1, 5, 20));

  for (long d = -10; d <= 10; ++d)
    for (long b = -10; b <= 10; ++b) {
      if (d == 0 || b == 0) continue;
      const auto found = zero_divisor_search(d, b, 12);
      const bool split = is_split(Rational(d), Rational(b), kQ).split;
      if (found) {
        const QuaternionAlgebra A{Rational(d), Rational(b)};
        REQUIRE(reduced_norm(A, {(*found)[0], (*found)[1], (*found)[2], (*found)[3]}) == Rational(0));
        REQUIRE(split);
      }
      if (!split) REQUIRE(!found);
    }
}

TEST_CASE("total twisted cohomology") {
  const auto cg = AdmissibleTriple::cremmer_gervais(3);
  const auto real = total_twisted_cohomology(cg, FieldPreset::reals());
  REQUIRE(real.size() == 1);
  CHECK(real[0].report.class_count == 2);

  const auto rat = total_twisted_cohomology(cg, kQ, 3);
  std::vector<long> ds;
  for (const auto& e : rat) ds.push_back(e.d.rep.get_si());
  CHECK(ds == std::vector<long>{-1, 2, -2, 3, -3});
  for (const auto& e : rat) {
    CHECK(e.report.str == 1);
    CHECK(!e.report.group.order);
    CHECK(e.report.verified());
  }
  for (const auto& e : total_twisted_cohomology(AdmissibleTriple{4, {1}, {2}, {{1, 2}}}, kQ, 5)) CHECK(!e.report.twistable);
}
