#pragma once

#include <Eigen/Core>

#include <array>
#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bdcoh/errors.hpp"
#include "bdcoh/matrix.hpp"

namespace bdcoh {

/// Element of gl(n)^{(x)Legs} stored sparsely in the matrix-unit basis.
/// A key lists (row, col) of each leg, 1-based: {i1, j1, i2, j2, ...}.
/// Zero coefficients are never stored, so structural equality is equality.
template <class Scalar, int Legs>
class Tensor {
 public:
  using Key = std::array<int, 2 * Legs>;
  using Terms = std::map<Key, Scalar>;

  Tensor() = default;
  explicit Tensor(int n) : n_(n) {}

  int n() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  Scalar coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  void add(const Key& k, const Scalar& c) {
    if (is_zero_scalar(c)) return;
    for (int v : k) {
      if (v < 1 || v > n_) throw Error(ErrorKind::RankMismatch, "matrix-unit index out of range");
    }
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (inserted) return;
    it->second += c;
    if (is_zero_scalar(it->second)) terms_.erase(it);
  }

  Tensor& operator+=(const Tensor& o) {
    check_rank(o);
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  Tensor& operator-=(const Tensor& o) {
    check_rank(o);
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  Tensor& operator*=(const Scalar& s) {
    if (is_zero_scalar(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }

  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator*(const Scalar& s, Tensor a) { return a *= s; }
  Tensor operator-() const { return Scalar(-1) * *this; }

  friend bool operator==(const Tensor& a, const Tensor& b) {
    if (a.n_ != b.n_ || a.terms_.size() != b.terms_.size()) return false;
    auto it = b.terms_.begin();
    for (const auto& [k, c] : a.terms_) {
      if (k != it->first || !(c == it->second)) return false;
      ++it;
    }
    return true;
  }

  void check_rank(const Tensor& o) const {
    if (n_ != o.n_) throw Error(ErrorKind::RankMismatch, "tensors over sl(" + std::to_string(n_) + ") and sl(" + std::to_string(o.n_) + ")");
  }

 private:
  static bool is_zero_scalar(const Scalar& s) { return bdcoh::is_zero(s); }

  int n_ = 0;
  Terms terms_;
};

template <class Scalar>
using LieElement = Tensor<Scalar, 1>;
template <class Scalar>
using Tensor2 = Tensor<Scalar, 2>;
template <class Scalar>
using Tensor3 = Tensor<Scalar, 3>;

/// Matrix unit e_ij.
template <class Scalar>
LieElement<Scalar> unit(int n, int i, int j, const Scalar& c = Scalar(1)) {
  LieElement<Scalar> e(n);
  e.add({i, j}, c);
  return e;
}

/// Elementary tensor a (x) b.
template <class Scalar, int L1, int L2>
Tensor<Scalar, L1 + L2> outer(const Tensor<Scalar, L1>& a, const Tensor<Scalar, L2>& b) {
  if (a.n() != b.n()) throw Error(ErrorKind::RankMismatch, "outer product of different ranks");
  Tensor<Scalar, L1 + L2> out(a.n());
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      typename Tensor<Scalar, L1 + L2>::Key k{};
      std::copy(ka.begin(), ka.end(), k.begin());
      std::copy(kb.begin(), kb.end(), k.begin() + 2 * L1);
      out.add(k, ca * cb);
    }
  return out;
}

template <class Target, class Source, int Legs>
Tensor<Target, Legs> tensor_cast(const Tensor<Source, Legs>& t) {
  Tensor<Target, Legs> out(t.n());
  for (const auto& [k, c] : t.terms()) out.add(k, Target(c));
  return out;
}

/// Commutator ab - ba of two gl(n) elements.
template <class Scalar>
LieElement<Scalar> bracket(const LieElement<Scalar>& a, const LieElement<Scalar>& b) {
  a.check_rank(b);
  LieElement<Scalar> out(a.n());
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      // [e_ij, e_kl] = delta_jk e_il - delta_li e_kj
      const Scalar c = ca * cb;
      if (ka[1] == kb[0]) out.add({ka[0], kb[1]}, c);
      if (kb[1] == ka[0]) out.add({kb[0], ka[1]}, -c);
    }
  return out;
}

/// tr(ab); realizes the invariant form with <e_ij, e_ji> = 1.
template <class Scalar>
Scalar trace_form(const LieElement<Scalar>& a, const LieElement<Scalar>& b) {
  a.check_rank(b);
  Scalar out(0);
  for (const auto& [k, c] : a.terms()) {
    auto it = b.terms().find({k[1], k[0]});
    if (it != b.terms().end()) out += c * it->second;
  }
  return out;
}

template <class Scalar>
Scalar trace(const LieElement<Scalar>& a) {
  Scalar out(0);
  for (const auto& [k, c] : a.terms())
    if (k[0] == k[1]) out += c;
  return out;
}

/// True when every leg is traceless, i.e. the tensor lies in sl(n)^{(x)Legs}.
template <class Scalar, int Legs>
bool partial_traces_vanish(const Tensor<Scalar, Legs>& t) {
  for (int leg = 0; leg < Legs; ++leg) {
    std::map<std::array<int, 2 * Legs>, Scalar> traced;
    for (const auto& [k, c] : t.terms()) {
      if (k[2 * leg] != k[2 * leg + 1]) continue;
      auto rest = k;
      rest[2 * leg] = rest[2 * leg + 1] = 0;
      traced[rest] += c;
    }
    for (const auto& [k, c] : traced)
      if (!is_zero(c)) return false;
  }
  return true;
}

/// Applies x -> x - tr(x)/n * I on every leg.
template <class Scalar, int Legs>
Tensor<Scalar, Legs> project_sl(const Tensor<Scalar, Legs>& t) {
  Tensor<Scalar, Legs> cur = t;
  const Scalar inv_n = Scalar(1) / Scalar(t.n());
  for (int leg = 0; leg < Legs; ++leg) {
    Tensor<Scalar, Legs> next = cur;
    for (const auto& [k, c] : cur.terms()) {
      if (k[2 * leg] != k[2 * leg + 1]) continue;
      for (int p = 1; p <= t.n(); ++p) {
        auto kk = k;
        kk[2 * leg] = kk[2 * leg + 1] = p;
        next.add(kk, -(c * inv_n));
      }
    }
    cur = std::move(next);
  }
  return cur;
}

/// The flip a (x) b -> b (x) a.
template <class Scalar>
Tensor2<Scalar> swap(const Tensor2<Scalar>& r) {
  Tensor2<Scalar> out(r.n());
  for (const auto& [k, c] : r.terms()) out.add({k[2], k[3], k[0], k[1]}, c);
  return out;
}

/// Quadratic Casimir of sl(n) dual to the trace form:
/// sum_{i,j} e_ij (x) e_ji - (1/n) I (x) I.
template <class Scalar>
Tensor2<Scalar> casimir(int n) {
  Tensor2<Scalar> out(n);
  const Scalar inv_n = Scalar(1) / Scalar(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i != j) out.add({i, j, j, i}, Scalar(1));
      out.add({i, i, j, j}, (i == j ? Scalar(1) : Scalar(0)) - inv_n);
    }
  return out;
}

/// Cartan part of the Casimir: sum_i e_ii (x) e_ii - (1/n) I (x) I.
template <class Scalar>
Tensor2<Scalar> cartan_casimir(int n) {
  Tensor2<Scalar> out(n);
  const Scalar inv_n = Scalar(1) / Scalar(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) out.add({i, i, j, j}, (i == j ? Scalar(1) : Scalar(0)) - inv_n);
  return out;
}

/// CYB(r) = [r12, r13] + [r12, r23] + [r13, r23].
template <class Scalar>
Tensor3<Scalar> cyb(const Tensor2<Scalar>& r) {
  Tensor3<Scalar> out(r.n());
  // Sparse structure constants of gl(n): [e_ij, e_kl] = d_jk e_il - d_li e_kj.
  auto bracket_units = [](int i, int j, int k, int l, auto&& emit) {
    if (j == k) emit(i, l, 1);
    if (l == i) emit(k, j, -1);
  };
  for (const auto& [ka, ca] : r.terms())
    for (const auto& [kb, cb] : r.terms()) {
      const Scalar c = ca * cb;
      // a_i = (ka0,ka1), b_i = (ka2,ka3); a_j = (kb0,kb1), b_j = (kb2,kb3)
      bracket_units(ka[0], ka[1], kb[0], kb[1], [&](int p, int q, int s) {
        out.add({p, q, ka[2], ka[3], kb[2], kb[3]}, s > 0 ? c : -c);
      });
      bracket_units(ka[2], ka[3], kb[0], kb[1], [&](int p, int q, int s) {
        out.add({ka[0], ka[1], p, q, kb[2], kb[3]}, s > 0 ? c : -c);
      });
      bracket_units(ka[2], ka[3], kb[2], kb[3], [&](int p, int q, int s) {
        out.add({ka[0], ka[1], kb[0], kb[1], p, q}, s > 0 ? c : -c);
      });
    }
  return out;
}

/// Applies Ad_X (a -> X a X^{-1}) to every leg.
template <class Scalar, int Legs>
Tensor<Scalar, Legs> gauge_transform(const Matrix<Scalar>& X, const Tensor<Scalar, Legs>& t) {
  const int n = t.n();
  if (X.rows() != n || X.cols() != n) throw Error(ErrorKind::RankMismatch, "gauge matrix has the wrong size");
  const Matrix<Scalar> Xinv = inverse(X);
  Tensor<Scalar, Legs> cur = t;
  for (int leg = 0; leg < Legs; ++leg) {
    Tensor<Scalar, Legs> next(n);
    for (const auto& [k, c] : cur.terms()) {
      const int i = k[2 * leg] - 1, j = k[2 * leg + 1] - 1;
      for (int p = 0; p < n; ++p) {
        if (is_zero(X(p, i))) continue;
        const Scalar cp = c * X(p, i);
        for (int q = 0; q < n; ++q) {
          if (is_zero(Xinv(j, q))) continue;
          auto kk = k;
          kk[2 * leg] = p + 1;
          kk[2 * leg + 1] = q + 1;
          next.add(kk, cp * Xinv(j, q));
        }
      }
    }
    cur = std::move(next);
  }
  return cur;
}

/// Root datum of type A_{n-1}: positive roots (i,j), i<j, simple roots
/// alpha_k = (k,k+1) and the Cartan matrix.
struct RootDatum {
  int n = 0;
  std::vector<std::pair<int, int>> positive_roots;
  Eigen::MatrixXi cartan;

  explicit RootDatum(int rank_n) : n(rank_n), cartan(Eigen::MatrixXi::Zero(rank_n - 1, rank_n - 1)) {
    if (n < 2) throw Error(ErrorKind::RankMismatch, "sl(n) needs n >= 2");
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) positive_roots.emplace_back(i, j);
    for (int a = 0; a < n - 1; ++a)
      for (int b = 0; b < n - 1; ++b) cartan(a, b) = a == b ? 2 : (std::abs(a - b) == 1 ? -1 : 0);
  }

  /// Cartan entry A(alpha_a, alpha_b), 1-based simple-root indices.
  int cartan_entry(int a, int b) const { return cartan(a - 1, b - 1); }
};

/// Applies the root functional (i,j): h -> h_ii - h_jj to one leg of a tensor
/// whose terms on that leg are diagonal; returns the remaining leg.
template <class Scalar>
LieElement<Scalar> apply_root_functional(const Tensor2<Scalar>& r, int leg, int i, int j) {
  LieElement<Scalar> out(r.n());
  for (const auto& [k, c] : r.terms()) {
    const int p = k[2 * leg], q = k[2 * leg + 1];
    if (p != q) continue;
    const int value = (p == i ? 1 : 0) - (p == j ? 1 : 0);
    if (value == 0) continue;
    const int o = 1 - leg;
    out.add({k[2 * o], k[2 * o + 1]}, value == 1 ? c : -c);
  }
  return out;
}

}  // namespace bdcoh
