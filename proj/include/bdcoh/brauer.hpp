#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "bdcoh/cohomology.hpp"
#include "bdcoh/field_preset.hpp"
#include "bdcoh/number_theory.hpp"

namespace bdcoh {

/// Quaternion algebra (d,b) with basis 1, x, y, xy and x^2 = d, y^2 = b, xy = -yx.
struct QuaternionAlgebra {
  Rational d;
  Rational b;
};

using Quaternion = std::array<Rational, 4>;

Quaternion quaternion_multiply(const QuaternionAlgebra& A, const Quaternion& u, const Quaternion& v);

/// z^2 - d x^2 - b y^2 + d b w^2 for z + x*x + y*y + w*xy.
Rational reduced_norm(const QuaternionAlgebra& A, const Quaternion& u);

struct BrauerClassDescriptor {
  SquareClass d;
  SquareClass b;
  bool split = true;
  std::vector<Place> bad_places;  // places with local symbol -1 (Q and R only)
};

/// Split iff b is a norm from F(sqrt d); a square d always splits.
BrauerClassDescriptor is_split(const FieldElement& d, const FieldElement& b, const FieldPreset& preset);

/// Class of (d,b) in the 2-torsion of Br(F); d must be a nonsquare.
BrauerClassDescriptor brauer_map(const FieldElement& d, const FieldElement& b, const FieldPreset& preset);

/// Equality of the classes of (d,b) and (m,k), decided by local symbols.
bool brauer_equal(const std::pair<FieldElement, FieldElement>& p1, const std::pair<FieldElement, FieldElement>& p2,
                  const FieldPreset& preset);

/// Nonzero integer (z,x,y,w) with entries in [-bound,bound] and zero reduced
/// norm. A witness proves the algebra split; absence proves nothing.
std::optional<std::array<long, 4>> zero_divisor_search(long d, long b, long bound);

struct TotalEntry {
  SquareClass d;
  CohomologyReport report;
};

/// Twisted cohomology for every nontrivial square class d (|d| <= d_bound over Q).
std::vector<TotalEntry> total_twisted_cohomology(const AdmissibleTriple& t, const FieldPreset& preset, long d_bound = 10,
                                                 int requested_classes = 3);

}  // namespace bdcoh
