#include "bdcoh/rmatrix.hpp"

#include <map>

namespace bdcoh {

namespace {

using Q = Rational;

LieElement<Q> coroot(int n, int p) {
  LieElement<Q> h(n);
  h.add({p, p}, Q(1));
  h.add({p + 1, p + 1}, Q(-1));
  return h;
}

/// lambda for the unit vector on the pair (p,q): h_p (x) h_q - h_q (x) h_p.
Tensor2<Q> wedge_coroots(int n, int p, int q) {
  return outer(coroot(n, p), coroot(n, q)) - outer(coroot(n, q), coroot(n, p));
}

/// Stacks the constraint values of r0 into one coordinate vector, keyed so
/// that every evaluation uses the same row layout.
using Coordinates = std::map<std::vector<int>, Q>;

Coordinates constraint_values(const AdmissibleTriple& t, const Tensor2<Q>& r0, bool with_s) {
  Coordinates out;
  for (const auto& [a, ta] : t.tau) {
    // (tau(alpha) (x) 1 + 1 (x) alpha)(r0)
    LieElement<Q> v = apply_root_functional(r0, 0, ta, ta + 1) + apply_root_functional(r0, 1, a, a + 1);
    for (const auto& [k, c] : v.terms()) out[{0, a, k[0], k[1]}] += c;
  }
  if (with_s) {
    const Tensor2<Q> defect = gauge_transform(anti_diagonal<Q>(t.n), r0) - swap(r0);
    for (const auto& [k, c] : defect.terms()) out[{1, k[0], k[1], k[2], k[3]}] += c;
  }
  return out;
}

Tensor2<Q> solve_r0_impl(const AdmissibleTriple& t, bool with_s, bool& ok) {
  const int n = t.n;
  const Tensor2<Q> base = Q(1, 2) * cartan_casimir<Q>(n);
  std::vector<std::pair<int, int>> vars;
  for (int p = 1; p <= n - 1; ++p)
    for (int q = p + 1; q <= n - 1; ++q) vars.emplace_back(p, q);

  ok = true;
  if (vars.empty() || (t.tau.empty() && !with_s)) return base;

  const Coordinates b0 = constraint_values(t, base, with_s);
  std::vector<Coordinates> cols;
  std::map<std::vector<int>, int> rows;
  for (const auto& [k, c] : b0) rows.emplace(k, 0);
  for (const auto& [p, q] : vars) {
    cols.push_back(constraint_values(t, wedge_coroots(n, p, q), with_s));
    for (const auto& [k, c] : cols.back()) rows.emplace(k, 0);
  }
  if (rows.empty()) return base;
  int idx = 0;
  for (auto& [k, r] : rows) r = idx++;

  Matrix<Q> A = Matrix<Q>::Zero(idx, static_cast<Eigen::Index>(vars.size()));
  Vector<Q> b = Vector<Q>::Zero(idx);
  for (size_t j = 0; j < cols.size(); ++j)
    for (const auto& [k, c] : cols[j]) A(rows[k], static_cast<Eigen::Index>(j)) = c;
  for (const auto& [k, c] : b0) b(rows[k]) = -c;

  const auto x = solve_canonical(A, b);
  if (!x) {
    ok = false;
    return base;
  }
  Tensor2<Q> r0 = base;
  for (size_t j = 0; j < vars.size(); ++j) {
    if (!(*x)(static_cast<Eigen::Index>(j)).is_zero()) r0 += (*x)(static_cast<Eigen::Index>(j)) * wedge_coroots(n, vars[j].first, vars[j].second);
  }
  return r0;
}

/// theta(e_{i,j}) for the Lie algebra map extending e_{alpha_l} -> e_{alpha_tau(l)}.
/// Requires all simple constituents of (i,j) in Gamma1.
LieElement<Q> theta_root_vector(const AdmissibleTriple& t, int i, int j) {
  const int n = t.n;
  auto image = [&](int l) {
    const int m = t.tau.at(l);
    return unit<Q>(n, m, m + 1);
  };
  LieElement<Q> acc = image(i);
  for (int l = i + 1; l < j; ++l) acc = bracket(acc, image(l));
  return acc;
}

bool in_span_gamma1(const AdmissibleTriple& t, int i, int j) {
  for (int l = i; l < j; ++l)
    if (!t.gamma1.count(l)) return false;
  return true;
}

}  // namespace

Tensor2<Rational> solve_r0(const AdmissibleTriple& t) {
  const auto v = validate_triple(t);
  if (!v.valid) throw Error(ErrorKind::MalformedTriple, v.diagnostic);
  bool ok = false;
  if (twistability_check(t)) {
    Tensor2<Q> r0 = solve_r0_impl(t, true, ok);
    if (ok) return r0;
  }
  Tensor2<Q> r0 = solve_r0_impl(t, false, ok);
  if (!ok) throw Error(ErrorKind::NoContinuousParameter, "no continuous parameter for " + format_triple(t));
  return r0;
}

bool is_valid_r0(const AdmissibleTriple& t, const Tensor2<Rational>& r0) {
  if (r0.n() != t.n) return false;
  for (const auto& [k, c] : r0.terms())
    if (k[0] != k[1] || k[2] != k[3]) return false;  // must lie in h (x) h
  if (!partial_traces_vanish(r0)) return false;
  if (!(r0 + swap(r0) == cartan_casimir<Q>(t.n))) return false;
  for (const auto& [k, c] : constraint_values(t, r0, false))
    if (!c.is_zero()) return false;
  return true;
}

std::vector<WedgeTerm> wedge_terms(const AdmissibleTriple& t) {
  std::vector<WedgeTerm> out;
  const int n = t.n;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      if (!in_span_gamma1(t, i, j)) continue;
      LieElement<Q> cur = unit<Q>(n, i, j);
      int ci = i, cj = j;
      Q sign(1);
      for (int k = 1; in_span_gamma1(t, ci, cj); ++k) {
        const LieElement<Q> img = theta_root_vector(t, ci, cj);
        const auto& [key, c] = *img.terms().begin();
        sign *= c;
        ci = key[0];
        cj = key[1];
        WedgeTerm w;
        w.alpha = {i, j};
        w.image = {ci, cj};
        w.k = k;
        w.sign = sign.sign();
        w.tensor = Tensor2<Q>(n);
        // e_alpha ^ e_{-beta} with e_beta normalized through theta
        w.tensor.add({i, j, cj, ci}, sign);
        w.tensor.add({cj, ci, i, j}, -sign);
        out.push_back(std::move(w));
      }
    }
  return out;
}

RMatrix build_bd_rmatrix(const AdmissibleTriple& t, const std::optional<Tensor2<Rational>>& r0_in) {
  const auto v = validate_triple(t);
  if (!v.valid) throw Error(ErrorKind::MalformedTriple, v.diagnostic);
  Tensor2<Q> r0(t.n);
  if (r0_in) {
    if (!is_valid_r0(t, *r0_in)) throw Error(ErrorKind::BadContinuousParameter, "r0 violates the continuous-parameter equations for " + format_triple(t));
    r0 = *r0_in;
  } else {
    r0 = solve_r0(t);
  }
  RMatrix r{t.n, r0, t, r0};
  for (int i = 1; i <= t.n; ++i)
    for (int j = i + 1; j <= t.n; ++j) r.tensor.add({i, j, j, i}, Q(1));
  for (const auto& w : wedge_terms(t)) r.tensor += w.tensor;
  return r;
}

RMatrix drinfeld_jimbo(int n) { return build_bd_rmatrix(AdmissibleTriple::empty(n)); }

VerificationReport verify_rmatrix(const RMatrix& r) { return verify_tensor(r.tensor); }

CentralizerDescription centralizer_description(const RMatrix& r) {
  CentralizerDescription desc{r.triple, {}};
  for (const auto& str : string_decomposition(r.triple).strings)
    if (str.roots.size() > 1) desc.classes.push_back(str.roots);
  return desc;
}

}  // namespace bdcoh
