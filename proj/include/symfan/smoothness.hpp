// Smoothness of a simple symmetric variety with projective closed orbit,
// decided two independent ways:
//
//  * the exceptional-coroot obstruction followed by the three combinatorial
//    conditions (the Levi restricted system is a product of A's, the cone is
//    generated by a lattice basis, and the dual basis admits the fundamental
//    weight indexing);
//  * the toric slice: dualize the cone, saturate under the Weyl group of the
//    Levi restricted system, dualize back, and test whether the primitive
//    generators extend to a lattice basis.
//
// The two verdicts agree on every valid colored cone; crossCheck mode runs
// both and throws on disagreement.

#pragma once

#include "symfan/colored.hpp"

#include <optional>
#include <string>
#include <vector>

namespace symfan {

enum class FailedCondition { none, exceptional, i, ii, iii };

std::string failedConditionName(FailedCondition f);

struct IndexedBasis {
  // groups[j] = the dual-basis vectors lambda_1^j .. lambda_{l_j+1}^j; the
  // first l_j pair with the oriented simple coroots of component j, the last
  // is the closing vector (for trivial groups it is the only entry).
  std::vector<std::vector<QVector>> groups;
  bool unique = true;  // whether exactly one admissible indexing was found
};

struct SmoothnessReport {
  bool smooth = false;
  FailedCondition failed = FailedCondition::none;
  std::string witness;
  std::optional<IndexedBasis> indexing;
};

// fail(coroot index) when a declared color of cc maps to an exceptional
// coroot.  Requires dim C(X) = rank (projective closed orbit).
struct ExceptionalCheck {
  bool pass = true;
  int corootIndex = -1;
};
ExceptionalCheck exceptionalObstruction(const SphericalDatum& datum, const ColoredCone& cc);

// Subsystem generated by the simple restricted roots whose whole color fiber
// belongs to cc.
ParabolicSubsystem leviRestrictedSystem(const SphericalDatum& datum, const ColoredCone& cc);

SmoothnessReport smoothnessConditions(const SphericalDatum& datum, const ColoredCone& cc);

struct ToricSlice {
  Cone sigmaDual;  // W_{L,theta} . C(X)^v
  Cone sigma;
};

ToricSlice toricSlice(const SphericalDatum& datum, const ColoredCone& cc);

bool toricIsSmooth(const SphericalDatum& datum, const ToricSlice& slice);

enum class CrossCheck { off, on };

SmoothnessReport isSmooth(const SphericalDatum& datum, const ColoredCone& cc,
                          CrossCheck mode = CrossCheck::off);

}  // namespace symfan
