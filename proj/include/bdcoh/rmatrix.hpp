#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bdcoh/lie.hpp"
#include "bdcoh/triples.hpp"

namespace bdcoh {

/// Belavin-Drinfeld r-matrix over Q together with the data it was built from.
struct RMatrix {
  int n = 0;
  Tensor2<Rational> tensor;
  AdmissibleTriple triple;
  Tensor2<Rational> r0;  // Cartan part actually used
};

/// Continuous parameter r0 = Omega_0/2 + lambda, lambda in h ^ h, solving
/// (tau(alpha) (x) 1 + 1 (x) alpha)(r0) = 0 for alpha in Gamma1. Free
/// variables of the echelon form (lexicographic in the coroot pairs) are
/// set to zero. For twistable triples the S-compatibility equations
/// Ad_S(r0) = r0^21 are imposed as well.
Tensor2<Rational> solve_r0(const AdmissibleTriple& t);

/// Checks the linear conditions on a candidate continuous parameter.
bool is_valid_r0(const AdmissibleTriple& t, const Tensor2<Rational>& r0);

RMatrix drinfeld_jimbo(int n);

/// r = r0 + sum_{alpha>0} e_alpha (x) e_-alpha
///        + sum_{alpha in (Span Gamma1)+, k>=1} e_alpha ^ e_-tau^k(alpha).
RMatrix build_bd_rmatrix(const AdmissibleTriple& t, const std::optional<Tensor2<Rational>>& r0 = std::nullopt);

/// The wedge terms alone, one per (alpha, k).
struct WedgeTerm {
  std::pair<int, int> alpha;
  std::pair<int, int> image;  // tau^k(alpha)
  int k = 1;
  int sign = 1;               // e_alpha is sent to sign * e_image
  Tensor2<Rational> tensor;
};
std::vector<WedgeTerm> wedge_terms(const AdmissibleTriple& t);

struct VerificationReport {
  bool symmetric_part_ok = false;  // r + r^21 == Omega
  bool cyb_ok = false;             // CYB(r) == 0
  std::string failure;             // first nonzero coefficient, if any
  bool passed() const { return symmetric_part_ok && cyb_ok; }
};

template <class Scalar>
VerificationReport verify_tensor(const Tensor2<Scalar>& r) {
  VerificationReport rep;
  const Tensor2<Scalar> defect = r + swap(r) - casimir<Scalar>(r.n());
  rep.symmetric_part_ok = defect.is_zero();
  if (!rep.symmetric_part_ok) {
    const auto& [k, c] = *defect.terms().begin();
    rep.failure = "r + r21 - Omega has coefficient " + c.str() + " at e_" + std::to_string(k[0]) + std::to_string(k[1]) +
                  " (x) e_" + std::to_string(k[2]) + std::to_string(k[3]);
  }
  const Tensor3<Scalar> c3 = cyb(r);
  rep.cyb_ok = c3.is_zero();
  if (!rep.cyb_ok && rep.failure.empty()) {
    const auto& [k, c] = *c3.terms().begin();
    rep.failure = "CYB(r) has coefficient " + c.str() + " at e_" + std::to_string(k[0]) + std::to_string(k[1]) + " (x) e_" +
                  std::to_string(k[2]) + std::to_string(k[3]) + " (x) e_" + std::to_string(k[4]) + std::to_string(k[5]);
  }
  return rep;
}

VerificationReport verify_rmatrix(const RMatrix& r);

/// Description of the diagonal part of the centralizer: with
/// s_i = d_i / d_{i+1} (i < n) and s_n = d_n, D commutes with r iff s is
/// constant along every string. `classes` lists the s-coordinates that
/// must agree; coordinate n is always free.
struct CentralizerDescription {
  AdmissibleTriple triple;
  std::vector<std::vector<int>> classes;
};

CentralizerDescription centralizer_description(const RMatrix& r);

/// s-coordinates of a diagonal matrix: s_i = d_i/d_{i+1}, s_n = d_n.
template <class Scalar>
std::vector<Scalar> s_coordinates(const Matrix<Scalar>& D) {
  if (!is_diagonal(D)) throw Error(ErrorKind::SingularMatrix, "expected a diagonal matrix");
  const int n = static_cast<int>(D.rows());
  std::vector<Scalar> s(n);
  for (int i = 0; i < n; ++i)
    if (is_zero(D(i, i))) throw Error(ErrorKind::SingularMatrix, "diagonal matrix is singular");
  for (int i = 0; i + 1 < n; ++i) s[i] = D(i, i) / D(i + 1, i + 1);
  s[n - 1] = D(n - 1, n - 1);
  return s;
}

/// phi(s_1..s_n) = diag(s_1...s_n, s_2...s_n, ..., s_n).
template <class Scalar>
Matrix<Scalar> phi(const std::vector<Scalar>& s) {
  const int n = static_cast<int>(s.size());
  std::vector<Scalar> d(n);
  Scalar acc(1);
  for (int i = n - 1; i >= 0; --i) {
    acc *= s[i];
    d[i] = acc;
  }
  return diagonal_matrix(d);
}

/// Membership of a diagonal matrix in C(r) via the string condition.
template <class Scalar>
bool centralizer_contains(const CentralizerDescription& desc, const Matrix<Scalar>& D) {
  const auto s = s_coordinates(D);
  for (const auto& cls : desc.classes)
    for (size_t k = 1; k < cls.size(); ++k)
      if (!(s[cls[k] - 1] == s[cls[0] - 1])) return false;
  return true;
}

template <class Scalar>
bool centralizer_contains(const RMatrix& r, const Matrix<Scalar>& D) {
  return centralizer_contains(centralizer_description(r), D);
}

/// Direct definition: (Ad_D (x) Ad_D)(r) == r.
template <class Scalar>
bool centralizer_contains_direct(const RMatrix& r, const Matrix<Scalar>& D) {
  const auto rs = tensor_cast<Scalar>(r.tensor);
  return gauge_transform(D, rs) == rs;
}

}  // namespace bdcoh
