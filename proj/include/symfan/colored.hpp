// Colored cones and colored fans over a spherical datum: the two colored-cone
// axioms, fan validation, completeness, Picard rank and strict-convexity
// ampleness for the two-orbit case.

#pragma once

#include "symfan/datum.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace symfan {

struct ColoredCone {
  Cone cone;
  std::set<ColorId> colors;

  bool operator==(const ColoredCone& o) const { return cone == o.cone && colors == o.colors; }
  bool operator<(const ColoredCone& o) const {
    if (!(cone == o.cone)) return cone < o.cone;
    return colors < o.colors;
  }
  std::string toString() const;
};

ColoredCone makeColoredCone(const SphericalDatum& datum, const std::vector<QVector>& generators,
                            const std::set<ColorId>& colors);

struct Violation {
  std::string axiom;    // "colors", "(i)", "(ii)", "fan(i)", "fan(ii)"
  std::string detail;
};

// Axioms of a colored cone:
//  (i)  the cone is generated by rho(colors) and vectors of N, and contains
//       the image of every declared color;
//  (ii) the relative interior meets the valuation cone -C+.
std::optional<Violation> validateColoredCone(const SphericalDatum& datum, const ColoredCone& cc);

class ColoredFan {
 public:
  // Family given by its maximal colored cones; the colored faces that are
  // themselves colored cones are materialized.
  static ColoredFan fromMaximal(const SphericalDatum& datum, std::vector<ColoredCone> maximal);

  const std::vector<ColoredCone>& maximalCones() const { return maximal_; }
  const std::vector<ColoredCone>& allCones() const { return all_; }

  std::set<ColorId> colors() const;  // union over the family

  // Distinct one-dimensional faces across the fan, including color rays that
  // miss the valuation cone.
  std::vector<QVector> raysIncludingColors(const SphericalDatum& datum) const;

  // Primitive generators of one-dimensional faces meeting the valuation
  // cone: the invariant valuations N(X) of the fan.
  std::vector<QVector> invariantRays(const SphericalDatum& datum) const;

  bool operator==(const ColoredFan& o) const { return maximal_ == o.maximal_; }
  bool operator<(const ColoredFan& o) const { return maximal_ < o.maximal_; }

 private:
  std::vector<ColoredCone> maximal_;
  std::vector<ColoredCone> all_;
};

std::optional<Violation> validateColoredFan(const SphericalDatum& datum, const ColoredFan& fan);

bool isComplete(const SphericalDatum& datum, const ColoredFan& fan);

// r + m - l for complete fans with simplicial full-dimensional maximal
// cones; otherwise the rank of the piecewise-linear function group is
// computed by solving the gluing system exactly.
int picardRank(const SphericalDatum& datum, const ColoredFan& fan);

// Rank of continuous functions on the fan support that are linear on each
// maximal cone (exact solve; cross-check for the r + m - l formula).
int piecewiseLinearRank(const SphericalDatum& datum, const ColoredFan& fan);

// Divisor key: a color, or the k-th invariant ray (canonical order).
struct DivisorKey {
  std::optional<ColorId> color;
  int invariantRay = -1;
  auto operator<=>(const DivisorKey&) const = default;
};

struct AmpleCheck {
  bool ample = false;
  std::string detail;  // the verified strict inequalities, deterministic
};

// Brion's criterion for the two-orbit fans of this classification: the
// divisor's piecewise-linear function must be strictly convex across the two
// maximal cones and all colors must belong to the fan.
AmpleCheck isAmpleTwoOrbit(const SphericalDatum& datum, const ColoredFan& fan,
                           const std::map<DivisorKey, Rational>& coefficients);

}  // namespace symfan
