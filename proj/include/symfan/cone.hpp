// Exact rational polyhedral convex cones.
//
// A cone is stored in canonical form: the lineality space as the HNF basis of
// its saturated integer lattice, and the extreme rays reduced modulo the
// lineality, scaled to primitive integer vectors and sorted.  Equal cones are
// structurally equal.  Both the generator and the inequality description are
// kept; the inequality side is the polar cone, computed once by the double
// description method.

#pragma once

#include "symfan/linalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace symfan {

class Cone {
 public:
  Cone() : dim_(0) {}

  static Cone fromGenerators(const std::vector<QVector>& gens, Eigen::Index dim);
  // {x : a.x >= 0 for all a} (standard dot product).
  static Cone fromInequalities(const std::vector<QVector>& normals, Eigen::Index dim);
  static Cone zero(Eigen::Index dim) { return fromGenerators({}, dim); }

  Eigen::Index ambientDim() const { return dim_; }
  Eigen::Index dim() const;  // dimension of the linear span
  bool isTrivial() const { return rays_.empty() && lin_.empty(); }
  bool isPointed() const { return lin_.empty(); }
  bool isSimplicial() const;  // pointed with linearly independent rays

  const std::vector<QVector>& rays() const { return rays_; }
  const std::vector<QVector>& linealityBasis() const { return lin_; }
  const std::vector<QVector>& facetNormals() const { return dualRays_; }
  const std::vector<QVector>& spanNormals() const { return dualLin_; }

  bool contains(const QVector& v) const;
  bool contains(const Cone& other) const;
  bool relintContains(const QVector& v) const;

  // A specific point of the relative interior (sum of the canonical rays).
  QVector relintPoint() const;

  Cone intersect(const Cone& other) const;
  Cone intersectHalfspace(const QVector& normal) const;

  // Polar with respect to the standard dot product: {y : y.g >= 0 on C}.
  // The stored dual pair makes this a constant-time swap.
  Cone polar() const;

  // Builds a cone from a known generator/polar pair (canonicalizing both);
  // the caller asserts that the two sides are genuinely polar to each other.
  static Cone fromDualPair(Eigen::Index dim, std::vector<QVector> rays, std::vector<QVector> lin,
                           std::vector<QVector> polarRays, std::vector<QVector> polarLin);

  // All faces, including {0} and the cone itself.  Requires a pointed cone.
  std::vector<Cone> faces() const;

  bool operator==(const Cone& other) const;
  bool operator!=(const Cone& other) const { return !(*this == other); }
  bool operator<(const Cone& other) const;

  std::string toString() const;

 private:
  Eigen::Index dim_;
  std::vector<QVector> rays_;
  std::vector<QVector> lin_;
  std::vector<QVector> dualRays_;  // facet normals
  std::vector<QVector> dualLin_;   // orthogonal complement of the span
};

// Cone generated by the given vectors under the bilinear form:
// {w : w^T form g >= 0 for all generators g of c}.
Cone dualCone(const Cone& c, const QMatrix& form);

// Do the relative interiors of a and b intersect?
bool relintMeets(const Cone& a, const Cone& b);

// Is relint(a) disjoint from relint(b) on the region `within`?
// (Exactly the pairwise condition of a colored fan with `within` = -C+.)
bool relintsMeetWithin(const Cone& a, const Cone& b, const Cone& within);

// Does relint(c) intersect the closed cone `region`?
bool relintMeetsRegion(const Cone& c, const Cone& region);

struct CoverResult {
  bool covered = false;
  std::optional<QVector> witness;  // a point of target outside every piece
};
CoverResult coneCovers(const Cone& target, const std::vector<Cone>& pieces);

}  // namespace symfan
