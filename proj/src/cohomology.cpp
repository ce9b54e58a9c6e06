#include "bdcoh/cohomology.hpp"

#include <sstream>

#include "bdcoh/parallel.hpp"
#include "bdcoh/random.hpp"

namespace bdcoh {

std::vector<RootString> class_strings(const AdmissibleTriple& t) {
  std::vector<RootString> out;
  for (const auto& s : string_decomposition(t).strings)
    if (s.symmetric && !s.has_middlepoint) out.push_back(s);
  return out;
}

bool CohomologyReport::verified() const {
  if (!twistable) return classes.empty();
  for (const auto& c : classes)
    if (!c.cocycle_verified || !c.class_rederived) return false;
  return distinct_classes_verified;
}

namespace {

/// First `limit` class vectors: the full product when the group is finite,
/// otherwise tuples over the streamed representatives in lexicographic order.
std::vector<std::vector<BigInt>> class_vectors(const NormQuotient& group, int str, long limit) {
  std::vector<std::vector<BigInt>> out{{}};
  for (int k = 0; k < str; ++k) {
    std::vector<std::vector<BigInt>> next;
    for (const auto& prefix : out) {
      for (const auto& rep : group.representatives) {
        auto v = prefix;
        v.push_back(rep);
        next.push_back(std::move(v));
      }
    }
    out = std::move(next);
  }
  if (!group.order && static_cast<long>(out.size()) > limit) out.resize(limit);
  return out;
}

std::string d_label(const QuadContext& ctx) { return std::to_string(ctx.d); }
std::string d_label(const LaurentContext&) { return "hbar"; }

template <class Ctx>
std::vector<std::vector<ScalarRecord>> matrix_records(const Matrix<typename Ctx::Scalar>& m, const Ctx& ctx) {
  std::vector<std::vector<ScalarRecord>> rows(m.rows());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const auto [a, b] = split(ctx, m(i, j));
      rows[i].push_back({a.str(), b.str(), d_label(ctx)});
    }
  return rows;
}

template <class Ctx>
void build_classes(CohomologyReport& report, const RMatrix& r, const Ctx& ctx, const FieldPreset& preset,
                   const std::vector<std::vector<BigInt>>& vectors) {
  using S = typename Ctx::Scalar;
  const auto& t = report.triple;
  auto assignment_of = [](const std::vector<BigInt>& v) {
    std::vector<S> a;
    for (const auto& x : v) a.emplace_back(Rational(x));
    return a;
  };

  struct Built {
    CohomologyClassReport report;
    TwistedCocycle<S> cocycle;
  };
  auto built = parallel_map<Built>(vectors.size(), [&](size_t i) {
    Built b;
    b.report.vector = vectors[i];
    b.cocycle = representative_cocycle(t, ctx, assignment_of(vectors[i]));
    b.report.representative_matrix = matrix_records(b.cocycle.X, ctx);
    b.report.cocycle_verified = is_twisted_cocycle(b.cocycle.X, r);
    try {
      const auto refactored = factored(b.cocycle.X, ctx);
      b.report.class_rederived = cocycle_class(t, ctx, preset, report.d, refactored).vector == vectors[i];
    } catch (const Error&) {
      b.report.class_rederived = false;
    }
    return b;
  });

  bool distinct = true;
  for (size_t i = 0; i < built.size(); ++i) {
    for (size_t j = i; j < built.size(); ++j) {
      const bool eq = are_equivalent(built[i].cocycle, built[j].cocycle, r, ctx, preset, report.d);
      if (eq != (i == j)) distinct = false;
    }
    report.classes.push_back(std::move(built[i].report));
  }
  report.distinct_classes_verified = distinct;
}

}  // namespace

CohomologyReport twisted_cohomology(const AdmissibleTriple& t, const FieldPreset& preset, const FieldElement& d,
                                    int requested_classes) {
  CohomologyReport report;
  report.triple = t;
  report.field = preset.name();
  report.d = preset.canonicalize(d);
  if (report.d.is_trivial()) throw Error(ErrorKind::NotAnExtension, "d = " + report.d.label() + " is a square");
  report.twistable = twistability_check(t);
  report.group = preset.norm_quotient(report.d, std::max(requested_classes, 1));
  if (!report.twistable) {
    report.class_count = 0;
    report.distinct_classes_verified = true;
    report.summary = "empty: s(Gamma1) != Gamma2 or s tau != tau^-1 s; no twisted cocycles";
    return report;
  }
  const auto strings = class_strings(t);
  report.str = static_cast<int>(strings.size());
  if (report.group.order) {
    long count = 1;
    for (int k = 0; k < report.str; ++k) count *= *report.group.order;
    report.class_count = count;
  } else if (report.str == 0) {
    report.class_count = 1;
  }

  const auto vectors = class_vectors(report.group, report.str, requested_classes);
  const RMatrix r = build_bd_rmatrix(t);
  if (preset.kind() == FieldKind::Laurent) {
    build_classes(report, r, LaurentContext{}, preset, vectors);
  } else {
    build_classes(report, r, QuadContext{report.d.rep.get_si()}, preset, vectors);
  }

  std::ostringstream os;
  os << "(" << report.group.description << ")^" << report.str;
  if (report.class_count) {
    os << ", " << *report.class_count << " class" << (*report.class_count == 1 ? "" : "es");
  } else {
    os << ", infinitely many classes; " << report.classes.size() << " constructed";
  }
  report.summary = os.str();
  return report;
}

UntwistedReport untwisted_report(const AdmissibleTriple& t, unsigned seed) {
  UntwistedReport out;
  out.triple = t;
  const RMatrix r = build_bd_rmatrix(t);
  const int n = t.n;

  // For X over F, X^-1 conj(X) = I, so X is a twisted-free cocycle of the
  // identity class exactly when gauge by I fixes r.
  const Matrix<Rational> I = Matrix<Rational>::Identity(n, n);
  out.identity_cocycle_ok = gauge_transform(Matrix<Rational>(inverse(I) * I), r.tensor) == r.tensor;

  Rng rng(seed);
  const Matrix<Rational> Q = random_invertible(rng, n);
  const Matrix<Rational> M = inverse(Q) * Q;
  const auto rq = gauge_transform(Q, r.tensor);
  const auto check = verify_tensor(rq);
  out.sampled_gauge_ok = exactly_equal(M, I) && check.symmetric_part_ok && check.cyb_ok;
  out.statement = "H^1_BD(sl(" + std::to_string(n) + ",F), r) is trivial; every Lie bialgebra with classical double sl(n,F) x sl(n,F) is gauge equivalent to r, representative = identity";
  return out;
}

}  // namespace bdcoh
