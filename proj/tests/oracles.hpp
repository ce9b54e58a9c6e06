// Brute-force reference computations used to cross-check the library.
// Nothing here calls into the number-theory, enumeration or CYB code paths.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "bdcoh/lie.hpp"
#include "bdcoh/matrix.hpp"

namespace oracle {

using bdcoh::Matrix;
using bdcoh::Rational;

inline long mod(long a, long m) { return ((a % m) + m) % m; }

/// Local solvability of z^2 = a x^2 + b y^2 over Q_p for squarefree a, b:
/// a primitive solution mod p^3 (p odd) or mod 2^5 lifts by Hensel.
inline int hilbert_local(long a, long b, long p) {
  if (p == 0) return (a < 0 && b < 0) ? -1 : 1;
  const long m = p == 2 ? 32 : p * p * p;
  std::vector<char> is_sq_unit(m, 0), is_sq_any(m, 0);
  for (long z = 0; z < m; ++z) {
    is_sq_any[z * z % m] = 1;
    if (z % p != 0) is_sq_unit[z * z % m] = 1;
  }
  for (long x = 0; x < m; ++x)
    for (long y = 0; y < m; ++y) {
      const long v = mod(mod(a, m) * (x * x % m) + mod(b, m) * (y * y % m), m);
      const bool xy_primitive = x % p != 0 || y % p != 0;
      if (xy_primitive ? is_sq_any[v] : is_sq_unit[v]) return 1;
    }
  return -1;
}

/// Global solvability of z^2 = a x^2 + b y^2 by direct search (Holzer bounds
/// make |x|,|y| <= sqrt(max(|a|,|b|)) sufficient).
inline bool ternary_solvable(long a, long b, long bound) {
  for (long x = 0; x <= bound; ++x)
    for (long y = 0; y <= bound; ++y) {
      if (x == 0 && y == 0) continue;
      const long v = a * x * x + b * y * y;
      if (v < 0) continue;
      const long z = std::lround(std::sqrt(static_cast<double>(v)));
      for (long c = std::max(0L, z - 1); c <= z + 1; ++c)
        if (c * c == v) return true;
    }
  return false;
}

/// b = x^2 + y^2 with integers x, y.
inline bool two_squares(long b) {
  if (b < 0) return false;
  for (long x = 0; x * x <= b; ++x)
    for (long y = 0; x * x + y * y <= b; ++y)
      if (x * x + y * y == b) return true;
  return false;
}

/// Admissible triples of sl(n): all subset pairs and bijections, filtered by
/// adjacency preservation and absence of tau-cycles. Keys are readable strings.
inline std::set<std::string> brute_force_triples(int n) {
  std::set<std::string> out;
  const int r = n - 1;
  for (int m1 = 0; m1 < (1 << r); ++m1)
    for (int m2 = 0; m2 < (1 << r); ++m2) {
      std::vector<int> g1, g2;
      for (int i = 0; i < r; ++i) {
        if (m1 >> i & 1) g1.push_back(i + 1);
        if (m2 >> i & 1) g2.push_back(i + 1);
      }
      if (g1.size() != g2.size() || static_cast<int>(g1.size()) == r) continue;
      std::vector<int> img = g2;
      do {
        std::map<int, int> tau;
        for (size_t k = 0; k < g1.size(); ++k) tau[g1[k]] = img[k];
        bool ok = true;
        for (int a : g1)
          for (int b : g1)
            if ((std::abs(a - b) == 1) != (std::abs(tau[a] - tau[b]) == 1)) ok = false;
        for (int a : g1) {
          int x = a;
          for (int step = 0; step <= r && tau.count(x); ++step) x = tau[x];
          if (tau.count(x)) ok = false;
        }
        if (!ok) continue;
        std::string key = "n=" + std::to_string(n) + ":";
        for (const auto& [a, b] : tau) key += std::to_string(a) + ">" + std::to_string(b) + ",";
        out.insert(key);
      } while (std::next_permutation(img.begin(), img.end()));
    }
  return out;
}

/// Dense image of a tensor in End(V^{(x)Legs}), V = F^n.
template <class Scalar, int Legs>
Matrix<Scalar> dense(const bdcoh::Tensor<Scalar, Legs>& t) {
  const int n = t.n();
  int dim = 1;
  for (int l = 0; l < Legs; ++l) dim *= n;
  Matrix<Scalar> m = Matrix<Scalar>::Zero(dim, dim);
  for (const auto& [k, c] : t.terms()) {
    int row = 0, col = 0;
    for (int l = 0; l < Legs; ++l) {
      row = row * n + (k[2 * l] - 1);
      col = col * n + (k[2 * l + 1] - 1);
    }
    m(row, col) += c;
  }
  return m;
}

/// r placed on legs (p,q) of V^{(x)3}.
template <class Scalar>
Matrix<Scalar> embed3(const bdcoh::Tensor2<Scalar>& r, int p, int q) {
  const int n = r.n();
  Matrix<Scalar> m = Matrix<Scalar>::Zero(n * n * n, n * n * n);
  for (const auto& [k, c] : r.terms())
    for (int free = 0; free < n; ++free) {
      int row[3], col[3];
      row[p] = k[0] - 1, col[p] = k[1] - 1;
      row[q] = k[2] - 1, col[q] = k[3] - 1;
      const int o = 3 - p - q;
      row[o] = col[o] = free;
      m((row[0] * n + row[1]) * n + row[2], (col[0] * n + col[1]) * n + col[2]) += c;
    }
  return m;
}

/// [r12,r13] + [r12,r23] + [r13,r23] as a dense operator.
template <class Scalar>
Matrix<Scalar> dense_cyb(const bdcoh::Tensor2<Scalar>& r) {
  const Matrix<Scalar> a = embed3(r, 0, 1), b = embed3(r, 0, 2), c = embed3(r, 1, 2);
  return Matrix<Scalar>(a * b - b * a + a * c - c * a + b * c - c * b);
}

/// (X (x) X) R (X (x) X)^{-1} on V (x) V.
template <class Scalar>
Matrix<Scalar> dense_conjugate(const Matrix<Scalar>& X, const Matrix<Scalar>& R) {
  const Eigen::Index n = X.rows();
  Matrix<Scalar> XX(n * n, n * n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) XX.block(i * n, j * n, n, n) = X(i, j) * X;
  return XX * R * bdcoh::inverse(XX);
}

}  // namespace oracle
