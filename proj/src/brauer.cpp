#include "bdcoh/brauer.hpp"

#include <algorithm>

namespace bdcoh {

Quaternion quaternion_multiply(const QuaternionAlgebra& A, const Quaternion& u, const Quaternion& v) {
  const Rational& d = A.d;
  const Rational& b = A.b;
  return {
      u[0] * v[0] + d * u[1] * v[1] + b * u[2] * v[2] - d * b * u[3] * v[3],
      u[0] * v[1] + u[1] * v[0] - b * u[2] * v[3] + b * u[3] * v[2],
      u[0] * v[2] + u[2] * v[0] + d * u[1] * v[3] - d * u[3] * v[1],
      u[0] * v[3] + u[3] * v[0] + u[1] * v[2] - u[2] * v[1],
  };
}

Rational reduced_norm(const QuaternionAlgebra& A, const Quaternion& u) {
  return u[0] * u[0] - A.d * u[1] * u[1] - A.b * u[2] * u[2] + A.d * A.b * u[3] * u[3];
}

namespace {

std::vector<Place> bad_places_of(const SquareClass& d, const SquareClass& b, const FieldPreset& preset) {
  switch (preset.kind()) {
    case FieldKind::Rationals: return ramified_places(Rational(d.rep), Rational(b.rep));
    case FieldKind::Reals:
      if (d.rep < 0 && b.rep < 0) return {Place::infinity()};
      return {};
    case FieldKind::Laurent: return {};
  }
  return {};
}

}  // namespace

BrauerClassDescriptor is_split(const FieldElement& d, const FieldElement& b, const FieldPreset& preset) {
  BrauerClassDescriptor out;
  out.d = preset.canonicalize(d);
  out.b = preset.canonicalize(b);
  if (out.d.is_trivial()) return out;
  out.split = preset.is_norm(out.d, b);
  out.bad_places = bad_places_of(out.d, out.b, preset);
  return out;
}

BrauerClassDescriptor brauer_map(const FieldElement& d, const FieldElement& b, const FieldPreset& preset) {
  if (preset.canonicalize(d).is_trivial()) throw Error(ErrorKind::NotAnExtension, "d is a square");
  return is_split(d, b, preset);
}

bool brauer_equal(const std::pair<FieldElement, FieldElement>& p1, const std::pair<FieldElement, FieldElement>& p2,
                  const FieldPreset& preset) {
  const auto a = is_split(p1.first, p1.second, preset);
  const auto c = is_split(p2.first, p2.second, preset);
  if (preset.kind() != FieldKind::Rationals) return a.split == c.split;
  auto key = [](std::vector<Place> v) {
    std::vector<BigInt> out;
    for (const auto& p : v) out.push_back(p.prime);
    std::sort(out.begin(), out.end());
    return out;
  };
  return key(a.bad_places) == key(c.bad_places);
}

std::optional<std::array<long, 4>> zero_divisor_search(long d, long b, long bound) {
  std::vector<long> order{0};
  for (long k = 1; k <= bound; ++k) {
    order.push_back(k);
    order.push_back(-k);
  }
  const BigInt D(d), B(b);
  for (long w : order)
    for (long y : order)
      for (long x : order) {
        const BigInt z2 = D * x * x + B * y * y - D * B * w * w;
        if (z2 < 0 || z2 > BigInt(bound) * bound) continue;
        if (!mpz_perfect_square_p(z2.get_mpz_t())) continue;
        BigInt z;
        mpz_sqrt(z.get_mpz_t(), z2.get_mpz_t());
        if (z == 0 && x == 0 && y == 0 && w == 0) continue;
        return std::array<long, 4>{z.get_si(), x, y, w};
      }
  return std::nullopt;
}

std::vector<TotalEntry> total_twisted_cohomology(const AdmissibleTriple& t, const FieldPreset& preset, long d_bound,
                                                 int requested_classes) {
  std::vector<TotalEntry> out;
  for (const auto& d : preset.nontrivial_square_classes(d_bound)) {
    out.push_back({d, twisted_cohomology(t, preset, preset.element_of(d), requested_classes)});
  }
  return out;
}

}  // namespace bdcoh
