// Lattices in an ambient rational space: canonical Hermite-normal-form bases,
// exact membership, primitivity, bases, index and duals.
//
// A lattice may have rank below the ambient dimension (intermediate results
// often do); the dual is computed within the span and needs the inner product
// to be nondegenerate there.

#pragma once

#include "symfan/linalg.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace symfan {

class Lattice {
 public:
  Lattice() : ambient_(0) {}

  // Canonical lattice spanned by integer combinations of the generators.
  static Lattice fromGenerators(const std::vector<QVector>& gens, Eigen::Index ambientDim);
  static Lattice standard(Eigen::Index dim);

  Eigen::Index ambientDim() const { return ambient_; }
  Eigen::Index rank() const { return static_cast<Eigen::Index>(basis_.size()); }
  const std::vector<QVector>& basis() const { return basis_; }

  bool contains(const QVector& v) const;

  // Exact integer coordinates of v in the canonical basis; nullopt if v is
  // not a lattice point.
  std::optional<ZVector> coordinates(const QVector& v) const;

  // Rational coordinates of v in the canonical basis; nullopt if v is outside
  // the rational span.
  std::optional<QVector> spanCoordinates(const QVector& v) const;

  bool isPrimitive(const QVector& v) const;  // pre: v in lattice, v != 0

  // True iff vs is a Z-basis of this lattice (wrong cardinality gives false).
  bool isBasis(const std::vector<QVector>& vs) const;

  // Smallest positive multiple of the nonzero direction v lying in the
  // lattice; the direction must meet the lattice (true whenever v is in the
  // rational span of a full-rank lattice).
  QVector primitiveInLattice(const QVector& direction) const;

  // [sup : sub]; nullopt encodes an infinite index (rank drop).
  // Throws std::domain_error when sub is not contained in sup.
  static std::optional<Integer> index(const Lattice& sub, const Lattice& sup);

  // {w in span(L) : (w, b) in Z for every basis vector b}.
  Lattice dual(const QMatrix& innerProduct) const;

  bool operator==(const Lattice& other) const;
  bool operator!=(const Lattice& other) const { return !(*this == other); }
  bool operator<(const Lattice& other) const;  // canonical total order

  std::string toString() const;

 private:
  Eigen::Index ambient_;
  std::vector<QVector> basis_;  // canonical: scaled row-HNF, see fromGenerators
  // solver state shared by copies: basis matrix and its pseudo-inverse
  struct Solver {
    QMatrix basis;
    QMatrix pseudo;  // (B^T B)^{-1} B^T
  };
  std::shared_ptr<const Solver> solver_;
  void buildSolver();
};

}  // namespace symfan
