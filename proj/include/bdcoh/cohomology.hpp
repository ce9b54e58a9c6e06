#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bdcoh/field_preset.hpp"
#include "bdcoh/matrix.hpp"
#include "bdcoh/rmatrix.hpp"

namespace bdcoh {

// ---------------------------------------------------------------------------
// Extension contexts: how a scalar type realises F(sqrt d).

/// Q(sqrt d) (also used for R with d = -1).
struct QuadContext {
  using Scalar = QuadRational;
  long d;

  Scalar sqrt_d() const { return Scalar::sqrt_of(d); }
  static FieldElement to_base(const Scalar& x) {
    if (!x.is_base()) throw Error(ErrorKind::NotACocycleShape, "value " + x.str() + " is not in the base field");
    return x.a();
  }
};

/// Q(u), u^2 = hbar, standing in for C((hbar))(sqrt hbar).
struct LaurentContext {
  using Scalar = RationalFunction;

  Scalar sqrt_d() const { return Scalar::generator(); }
  static FieldElement to_base(const Scalar& x) {
    if (!x.is_base()) throw Error(ErrorKind::NotACocycleShape, "value " + x.str() + " is not in the base field");
    return LaurentElement{x.valuation() / 2};
  }
};

/// x = a + b sqrt(d) with a, b fixed by conjugation.
template <class Ctx>
std::pair<typename Ctx::Scalar, typename Ctx::Scalar> split(const Ctx& ctx, const typename Ctx::Scalar& x) {
  using S = typename Ctx::Scalar;
  const S xb = conjugate(x);
  const S half = S(1) / S(2);
  return {(x + xb) * half, (x - xb) * half / ctx.sqrt_d()};
}

template <class Scalar>
bool is_base_matrix(const Matrix<Scalar>& m) {
  return exactly_equal(m, conjugate(m));
}

// ---------------------------------------------------------------------------
// J, S and T.

/// a_kk = 1 (k <= m), a_kk = -sqrt d (k > m), a_{k,n+1-k} = 1 (k <= m),
/// a_{k,n+1-k} = sqrt d (k > m), with m = floor((n+1)/2).
template <class Ctx>
Matrix<typename Ctx::Scalar> build_J(int n, const Ctx& ctx) {
  using S = typename Ctx::Scalar;
  if (n < 1) throw Error(ErrorKind::RankMismatch, "J needs n >= 1");
  const S r = ctx.sqrt_d();
  const int m = (n + 1) / 2;
  Matrix<S> J = Matrix<S>::Zero(n, n);
  for (int k = 1; k <= n; ++k) {
    J(k - 1, k - 1) = k <= m ? S(1) : -r;
    J(k - 1, n - k) = k <= m ? S(1) : r;
  }
  return J;
}

/// T(D) = S D^{-1} S conj(D).
template <class Scalar>
Matrix<Scalar> t_map(const Matrix<Scalar>& D) {
  if (!is_diagonal(D)) throw Error(ErrorKind::SingularMatrix, "T is defined on diagonal matrices");
  const Eigen::Index n = D.rows();
  const Matrix<Scalar> S = anti_diagonal<Scalar>(n);
  return S * inverse(D) * S * conjugate(D);
}

/// (Ad_M (x) Ad_M)(r) == r^21 for M = X^{-1} conj(X).
template <class Scalar>
bool is_twisted_cocycle(const Matrix<Scalar>& X, const RMatrix& r) {
  const Matrix<Scalar> M = inverse(X) * conjugate(X);
  const auto rs = tensor_cast<Scalar>(r.tensor);
  return gauge_transform(M, rs) == swap(rs);
}

// ---------------------------------------------------------------------------
// Cocycles and classes.

template <class Scalar>
struct TwistedCocycle {
  Matrix<Scalar> X;
  // X = R J D when known
  std::optional<Matrix<Scalar>> R;
  std::optional<Matrix<Scalar>> D;
};

/// Symmetric strings without middlepoint, in string order.
std::vector<RootString> class_strings(const AdmissibleTriple& t);

/// X = J phi(s) with s equal to the assigned value on the first half of each
/// symmetric string without middlepoint and 1 elsewhere.
template <class Ctx>
TwistedCocycle<typename Ctx::Scalar> representative_cocycle(const AdmissibleTriple& t, const Ctx& ctx,
                                                          const std::vector<typename Ctx::Scalar>& assignment) {
  using S = typename Ctx::Scalar;
  if (!twistability_check(t)) throw Error(ErrorKind::EmptyCohomology, format_triple(t) + " admits no twisted cocycles");
  const auto strings = class_strings(t);
  if (assignment.size() != strings.size()) {
    throw Error(ErrorKind::WrongAssignmentLength, "expected " + std::to_string(strings.size()) + " values, got " + std::to_string(assignment.size()));
  }
  std::vector<S> s(t.n, S(1));
  for (size_t k = 0; k < strings.size(); ++k) {
    const S& value = assignment[k];
    if (is_zero(value) || !(value == conjugate(value))) throw Error(ErrorKind::NotACocycleShape, "assignment values must be nonzero base-field elements");
    const auto& roots = strings[k].roots;
    for (size_t l = 0; l < roots.size() / 2; ++l) s[roots[l] - 1] = value;
  }
  const Matrix<S> D = phi(s);
  const Matrix<S> J = build_J(t.n, ctx);
  return {J * D, Matrix<S>::Identity(t.n, t.n), D};
}

struct CohomologyClass {
  AdmissibleTriple triple;
  SquareClass d;
  std::vector<BigInt> vector;  // one norm-class representative per string
  friend bool operator==(const CohomologyClass& a, const CohomologyClass& b) { return a.vector == b.vector; }
};

/// Per string: t = conj(s_{i1}) s_{n-i1} reduced modulo norms.
template <class Ctx>
CohomologyClass cocycle_class(const AdmissibleTriple& t, const Ctx& ctx, const FieldPreset& preset, const SquareClass& d,
                              const TwistedCocycle<typename Ctx::Scalar>& X) {
  (void)ctx;
  if (!X.D) throw Error(ErrorKind::Unfactored, "cocycle has no R J D factorization");
  const auto s = s_coordinates(*X.D);
  CohomologyClass out{t, d, {}};
  for (const auto& str : class_strings(t)) {
    const int i1 = str.roots.front();
    const auto value = conjugate(s[i1 - 1]) * s[t.n - i1 - 1];
    out.vector.push_back(preset.norm_class(d, Ctx::to_base(value)));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Reduction to J.

template <class Scalar>
struct JFactorization {
  Matrix<Scalar> Q;  // conj(Q) == Q
  Matrix<Scalar> D;  // diagonal
};

namespace detail {

template <class Scalar>
Matrix<Scalar> embed(const Matrix<Scalar>& m) {
  const Eigen::Index k = m.rows();
  Matrix<Scalar> g = Matrix<Scalar>::Identity(k + 2, k + 2);
  g.block(1, 1, k, k) = m;
  return g;
}

/// Q = X D'^{-1} J^{-1} for D' read off pivot rows; pivot[k] is the row used
/// for column k (and its partner n-1-k).
template <class Ctx>
std::optional<JFactorization<typename Ctx::Scalar>> factor_with_pivots(const Matrix<typename Ctx::Scalar>& X, const Ctx& ctx,
                                                                       const std::vector<int>& pivot) {
  using S = typename Ctx::Scalar;
  const int n = static_cast<int>(X.rows());
  std::vector<S> dp(n);
  for (int k = 0; k < n; ++k) {
    dp[k] = X(pivot[k], k);
    if (is_zero(dp[k])) return std::nullopt;
  }
  const Matrix<S> D = diagonal_matrix(dp);
  const Matrix<S> Q = X * inverse(D) * inverse(build_J(n, ctx));
  if (!is_base_matrix(Q)) return std::nullopt;
  return JFactorization<S>{Q, D};
}

/// Closed forms of the n = 2, 3 base cases: pivot row 2 first, then the
/// other rows, then independent pivot rows per column pair.
template <class Ctx>
JFactorization<typename Ctx::Scalar> reduce_small(const Matrix<typename Ctx::Scalar>& X, const Ctx& ctx) {
  const int n = static_cast<int>(X.rows());
  std::vector<int> rows;
  if (n >= 2) rows.push_back(1);
  for (int p = 0; p < n; ++p)
    if (p != 1 || n < 2) rows.push_back(p);
  for (int p : rows) {
    if (auto f = factor_with_pivots(X, ctx, std::vector<int>(n, p))) return *f;
  }
  // DegeneratePivot: no single row has all entries nonzero.
  std::vector<int> pivot(n, -1);
  for (int k = 0; k < n; ++k) {
    if (pivot[k] >= 0) continue;
    int p = 0;
    while (p < n && is_zero(X(p, k))) ++p;
    if (p == n) throw Error(ErrorKind::SingularMatrix, "zero column");
    pivot[k] = pivot[n - 1 - k] = p;
  }
  if (auto f = factor_with_pivots(X, ctx, pivot)) return *f;
  throw Error(ErrorKind::ReductionFailed, "no pivot choice yields a matrix over the base field");
}

template <class Ctx>
JFactorization<typename Ctx::Scalar> reduce(const Matrix<typename Ctx::Scalar>& X, const Ctx& ctx) {
  using S = typename Ctx::Scalar;
  const int n = static_cast<int>(X.rows());
  if (n <= 3) return reduce_small(X, ctx);

  Matrix<S> Y = X;
  Matrix<S> Qacc = Matrix<S>::Identity(n, n);  // Y = Qacc X Dacc
  Matrix<S> Dacc = Matrix<S>::Identity(n, n);
  auto row_op = [&](const Matrix<S>& E) {
    Y = E * Y;
    Qacc = E * Qacc;
  };
  auto col_scale = [&](const Matrix<S>& E) {
    Y = Y * E;
    Dacc = Dacc * E;
  };

  // Rows whose restriction to the central columns is invertible go to 2..n-1.
  std::vector<int> chosen;
  {
    Matrix<S> basis(0, n - 2);
    auto try_row = [&](int p) {
      Matrix<S> cand(basis.rows() + 1, n - 2);
      cand << basis, Y.block(p, 1, 1, n - 2);
      Matrix<S> tmp = cand;
      if (static_cast<Eigen::Index>(rref(tmp).size()) == cand.rows()) {
        basis = cand;
        chosen.push_back(p);
      }
    };
    for (int p = 1; p <= n - 2; ++p) try_row(p);
    for (int p : {0, n - 1})
      if (static_cast<int>(chosen.size()) < n - 2) try_row(p);
    if (static_cast<int>(chosen.size()) != n - 2) throw Error(ErrorKind::SingularMatrix, "matrix is not invertible");
  }
  std::vector<int> order;
  for (int p = 0; p < n; ++p)
    if (std::find(chosen.begin(), chosen.end(), p) == chosen.end()) order.push_back(p);
  order.insert(order.begin() + 1, chosen.begin(), chosen.end());
  Matrix<S> P = Matrix<S>::Zero(n, n);
  for (int k = 0; k < n; ++k) P(k, order[k]) = S(1);
  row_op(P);

  // Induction on the central block.
  const Matrix<S> u = Y.block(1, 1, n - 2, n - 2);
  const JFactorization<S> inner = reduce(u, ctx);
  row_op(embed<S>(inverse(inner.Q)));
  col_scale(embed<S>(inverse(inner.D)));

  // Clear the central part of the first and last rows with F-row operations.
  const Matrix<S> Jinner_inv = inverse(build_J(n - 2, ctx));
  for (int edge : {0, n - 1}) {
    const Matrix<S> c = Y.block(edge, 1, 1, n - 2) * Jinner_inv;
    if (!is_base_matrix(c)) throw Error(ErrorKind::NotACocycleShape, "edge row is not an F-combination of the central rows");
    Matrix<S> E = Matrix<S>::Identity(n, n);
    for (int k = 0; k < n - 2; ++k) E(edge, k + 1) = -c(0, k);
    row_op(E);
  }

  // y_11 = y_1n = 1.
  if (is_zero(Y(0, 0)) || is_zero(Y(0, n - 1))) throw Error(ErrorKind::ReductionFailed, "first row vanished");
  {
    Matrix<S> E = Matrix<S>::Identity(n, n);
    E(0, 0) = Y(0, 0).inverse();
    E(n - 1, n - 1) = Y(0, n - 1).inverse();
    col_scale(E);
  }

  // y_n1 = -y_nn = sqrt d using the first row.
  {
    const auto [a, b] = split(ctx, Y(n - 1, 0));
    if (is_zero(b)) throw Error(ErrorKind::ReductionFailed, "last row is proportional to the first");
    Matrix<S> E = Matrix<S>::Identity(n, n);
    E(n - 1, 0) = -a;
    row_op(E);
    Matrix<S> F = Matrix<S>::Identity(n, n);
    F(n - 1, n - 1) = b.inverse();
    row_op(F);
  }

  // Kill the first column of the central rows; the last column follows.
  {
    Matrix<S> E = Matrix<S>::Identity(n, n);
    for (int k = 1; k <= n - 2; ++k) {
      const auto [a, b] = split(ctx, Y(k, 0));
      E(k, 0) = -a;
      E(k, n - 1) = -b;
    }
    row_op(E);
  }

  if (!exactly_equal(Y, build_J(n, ctx)) || !is_base_matrix(Qacc)) {
    throw Error(ErrorKind::ReductionFailed, "elimination did not reach J");
  }
  return {inverse(Qacc), inverse(Dacc)};
}

}  // namespace detail

/// Writes X with conj(X) = X S D (D diagonal) as Q J D' with Q over F and D'
/// diagonal, following the inductive elimination on central blocks.
template <class Ctx>
JFactorization<typename Ctx::Scalar> reduce_to_J(const Matrix<typename Ctx::Scalar>& X, const Ctx& ctx) {
  using S = typename Ctx::Scalar;
  const Eigen::Index n = X.rows();
  if (X.cols() != n) throw Error(ErrorKind::NotACocycleShape, "matrix must be square");
  const Matrix<S> D = anti_diagonal<S>(n) * inverse(X) * conjugate(X);
  if (!is_diagonal(D)) throw Error(ErrorKind::NotACocycleShape, "conj(X) != X S D for every diagonal D");
  const Matrix<S> I = Matrix<S>::Identity(n, n);
  if (exactly_equal(X, build_J(static_cast<int>(n), ctx))) return {I, I};
  JFactorization<S> f = detail::reduce(X, ctx);
  if (!is_base_matrix(f.Q) || !is_diagonal(f.D) || !exactly_equal(Matrix<S>(f.Q * build_J(static_cast<int>(n), ctx) * f.D), X)) {
    throw Error(ErrorKind::ReductionFailed, "factorization does not reproduce X");
  }
  return f;
}

/// Attaches an R J D factorization computed by reduce_to_J.
template <class Ctx>
TwistedCocycle<typename Ctx::Scalar> factored(const Matrix<typename Ctx::Scalar>& X, const Ctx& ctx) {
  auto f = reduce_to_J(X, ctx);
  return {X, std::move(f.Q), std::move(f.D)};
}

/// Equality of class vectors (both cocycles must be factored).
template <class Ctx>
bool are_equivalent(const TwistedCocycle<typename Ctx::Scalar>& X1, const TwistedCocycle<typename Ctx::Scalar>& X2,
                    const RMatrix& r, const Ctx& ctx, const FieldPreset& preset, const SquareClass& d) {
  return cocycle_class(r.triple, ctx, preset, d, X1) == cocycle_class(r.triple, ctx, preset, d, X2);
}

// ---------------------------------------------------------------------------
// Reports.

/// Entry a + b sqrt(d) of a representative, printed exactly.
struct ScalarRecord {
  std::string a, b, d;
};

struct CohomologyClassReport {
  std::vector<BigInt> vector;
  std::vector<std::vector<ScalarRecord>> representative_matrix;
  bool cocycle_verified = false;   // direct twisted-cocycle identity
  bool class_rederived = false;    // reduce_to_J + cocycle_class recovers the vector
};

struct CohomologyReport {
  AdmissibleTriple triple;
  std::string field;
  SquareClass d;
  bool twistable = false;
  int str = 0;
  NormQuotient group;
  std::optional<long> class_count;  // empty when infinite
  std::vector<CohomologyClassReport> classes;
  bool distinct_classes_verified = false;  // pairwise inequivalent via are_equivalent
  std::string summary;
  bool verified() const;
};

/// Twisted cohomology of the BD r-matrix of t over F(sqrt d). For Q the
/// first `requested_classes` classes of the infinite set are built.
CohomologyReport twisted_cohomology(const AdmissibleTriple& t, const FieldPreset& preset, const FieldElement& d,
                                    int requested_classes = 3);

struct UntwistedReport {
  AdmissibleTriple triple;
  bool trivial = true;
  std::string representative = "identity";
  bool identity_cocycle_ok = false;
  bool sampled_gauge_ok = false;  // Q in GL(n,F): Q is a cocycle equivalent to I and r_Q is an r-matrix
  std::string statement;
  bool verified() const { return identity_cocycle_ok && sampled_gauge_ok; }
};

UntwistedReport untwisted_report(const AdmissibleTriple& t, unsigned seed = 1);

}  // namespace bdcoh
