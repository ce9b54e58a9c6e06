#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

namespace bdcoh {

/// Belavin-Drinfeld discrete datum for A_{n-1}. Simple roots are indexed
/// 1..n-1 with alpha_i = (i, i+1).
struct AdmissibleTriple {
  int n = 2;
  std::set<int> gamma1;
  std::set<int> gamma2;
  std::map<int, int> tau;  // gamma1 -> gamma2

  static AdmissibleTriple empty(int n) { return AdmissibleTriple{n, {}, {}, {}}; }
  /// Gamma1 = {1}, Gamma2 = {2}, tau(1) = 2 for n = 3; for larger n the
  /// shift alpha_i -> alpha_{i+1} on Gamma1 = {1..n-2}.
  static AdmissibleTriple cremmer_gervais(int n);

  bool is_empty() const { return tau.empty(); }
  friend bool operator==(const AdmissibleTriple&, const AdmissibleTriple&) = default;
};

/// Lexicographic on (gamma1, gamma2, tau).
bool triple_less(const AdmissibleTriple& a, const AdmissibleTriple& b);

struct TripleValidation {
  bool valid = true;
  std::string diagnostic;  // names the first violated condition
};

/// Checks bijectivity, size, isometry and nilpotency in that order.
/// Throws MalformedTriple for indices outside 1..n-1.
TripleValidation validate_triple(const AdmissibleTriple& t);

inline constexpr int kDefaultEnumerationBound = 8;

/// Every admissible triple for A_{n-1}, including the empty one, sorted.
std::vector<AdmissibleTriple> enumerate_triples(int n, int bound = kDefaultEnumerationBound);

/// Diagram involution alpha_i -> alpha_{n-i}.
int s_involution(int n, int i);

/// s(Gamma1) = Gamma2 and s tau = tau^{-1} s.
bool twistability_check(const AdmissibleTriple& t);

/// (s(Gamma1), s(Gamma2), s tau s).
AdmissibleTriple mirror(const AdmissibleTriple& t);

/// A maximal tau-chain beta_1 -> ... -> beta_k ending at the first root
/// outside Gamma1. Roots outside Gamma1 and Gamma2 form singleton strings.
struct RootString {
  std::vector<int> roots;
  bool symmetric = false;        // s maps the string onto itself
  bool has_middlepoint = false;  // contains alpha_{n/2}, n even
};

struct StringDecomposition {
  std::vector<RootString> strings;  // ordered by first root
  int str_count = 0;                // symmetric strings without middlepoint
};

StringDecomposition string_decomposition(const AdmissibleTriple& t);

/// "n=3;g1=1;g2=2;tau=1>2"; empty sets are omitted.
std::string format_triple(const AdmissibleTriple& t);

/// Inverse of format_triple. Syntax errors report the 1-based column;
/// semantic errors carry the validate_triple diagnostic.
AdmissibleTriple parse_triple(const std::string& spec);

}  // namespace bdcoh
