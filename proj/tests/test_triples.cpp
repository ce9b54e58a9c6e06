#include "doctest.h"

#include "bdcoh/triples.hpp"
#include "oracles.hpp"

using namespace bdcoh;

namespace {
std::string oracle_key(const AdmissibleTriple& t) {
  std::string key = "n=" + std::to_string(t.n) + ":";
  for (const auto& [a, b] : t.tau) key += std::to_string(a) + ">" + std::to_string(b) + ",";
  return key;
}
}  // namespace

TEST_CASE("validation") {
  CHECK(validate_triple(AdmissibleTriple::cremmer_gervais(3)).valid);
  const auto cycle = AdmissibleTriple{3, {1}, {1}, {{1, 1}}};
  const auto v = validate_triple(cycle);
  CHECK(!v.valid);
  CHECK(v.diagnostic.find("nilpotency") != std::string::npos);
  CHECK(!validate_triple(AdmissibleTriple{4, {1, 2}, {2, 3}, {{1, 3}, {2, 2}}}).valid);
  CHECK(!validate_triple(AdmissibleTriple{4, {1, 2}, {1, 3}, {{1, 1}, {2, 3}}}).valid);
  CHECK_THROWS_AS(validate_triple(AdmissibleTriple{3, {5}, {1}, {{5, 1}}}), Error);
}

TEST_CASE("enumeration agrees with brute force") {
  CHECK(enumerate_triples(2).size() == 1);
  CHECK(enumerate_triples(3).size() == 3);
  for (int n = 2; n <= 6; ++n) {
    std::set<std::string> ours;
    for (const auto& t : enumerate_triples(n)) ours.insert(oracle_key(t));
    CHECK_MESSAGE(ours == oracle::brute_force_triples(n), "n = " << n);
  }
  CHECK_THROWS_AS(enumerate_triples(9), Error);
}

TEST_CASE("mirror closure") {
  for (int n = 2; n <= 6; ++n) {
    const auto all = enumerate_triples(n);
    std::set<std::string> keys;
    for (const auto& t : all) keys.insert(format_triple(t));
    for (const auto& t : all) {
      REQUIRE(keys.count(format_triple(mirror(t))));
      if (twistability_check(t)) REQUIRE(string_decomposition(mirror(t)).str_count == string_decomposition(t).str_count);
    }
  }
}

TEST_CASE("diagram involution and twistability") {
  CHECK(s_involution(3, 1) == 2);
  CHECK(s_involution(4, 2) == 2);
  for (int n = 2; n <= 8; ++n)
    for (int i = 1; i < n; ++i) CHECK(s_involution(n, s_involution(n, i)) == i);
  CHECK(twistability_check(AdmissibleTriple::cremmer_gervais(3)));
  CHECK(twistability_check(AdmissibleTriple::empty(5)));
  CHECK(!twistability_check(AdmissibleTriple{4, {1}, {2}, {{1, 2}}}));
}

TEST_CASE("strings") {
  const auto cg = string_decomposition(AdmissibleTriple::cremmer_gervais(3));
  REQUIRE(cg.strings.size() == 1);
  CHECK(cg.strings[0].roots == std::vector<int>{1, 2});
  CHECK(cg.strings[0].symmetric);
  CHECK(!cg.strings[0].has_middlepoint);
  CHECK(cg.str_count == 1);

  const auto e3 = string_decomposition(AdmissibleTriple::empty(3));
  CHECK(e3.strings.size() == 2);
  CHECK(e3.str_count == 0);
  CHECK(!e3.strings[0].symmetric);

  const auto e4 = string_decomposition(AdmissibleTriple::empty(4));
  REQUIRE(e4.strings.size() == 3);
  CHECK(e4.strings[1].symmetric);
  CHECK(e4.strings[1].has_middlepoint);
  CHECK(e4.str_count == 0);

  for (int n = 2; n <= 8; ++n)
    for (const auto& t : enumerate_triples(n)) {
      const auto dec = string_decomposition(t);
      std::vector<int> seen;
      for (const auto& s : dec.strings) {
        seen.insert(seen.end(), s.roots.begin(), s.roots.end());
        if (s.roots.size() == 1) REQUIRE(s.symmetric == (2 * s.roots[0] == n));
        if (twistability_check(t)) {
          std::vector<int> image;
          for (int r : s.roots) image.push_back(s_involution(n, r));
          std::sort(image.begin(), image.end());
          bool found = false;
          for (const auto& o : dec.strings) {
            auto sorted = o.roots;
            std::sort(sorted.begin(), sorted.end());
            found = found || sorted == image;
          }
          REQUIRE(found);
        }
      }
      std::sort(seen.begin(), seen.end());
      REQUIRE(seen.size() == static_cast<size_t>(n - 1));
      REQUIRE(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
    }
}

TEST_CASE("text format") {
  const auto cg = parse_triple("n=3;g1=1;g2=2;tau=1>2");
  CHECK(format_triple(cg) == "n=3;g1=1;g2=2;tau=1>2");
  CHECK(parse_triple("n=4").gamma1.empty());
  for (int n = 2; n <= 6; ++n)
    for (const auto& t : enumerate_triples(n)) {
      const auto back = parse_triple(format_triple(t));
      REQUIRE(format_triple(back) == format_triple(t));
      REQUIRE(back.tau == t.tau);
    }
  try {
    parse_triple("n=3;g1=1;g2=1;tau=1>1");
    FAIL("expected a semantic error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MalformedTriple);
  }
  try {
    parse_triple("n=3;g1=x");
    FAIL("expected a syntax error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ParseError);
    CHECK(std::string(e.what()).find("column 8") != std::string::npos);
  }
}
