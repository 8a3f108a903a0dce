// Restricted root systems over exact rationals.
//
// Classical families use the coordinate realizations whose simple roots are
//   A_l : e_i - e_{i+1}                       in Q^{l+1}
//   B_l : e_i - e_{i+1}, e_l                  in Q^l
//   C_l : e_i - e_{i+1}, 2 e_l                in Q^l
//   D_l : e_i - e_{i+1}, e_{l-1} + e_l        in Q^l
//   BC_l: e_i - e_{i+1}, e_l  (non-reduced)   in Q^l
// with the standard inner product.  E/F/G live in simple-root coordinates
// with the symmetrized Cartan matrix as inner product (short roots of each
// component have squared length 2; the paper's BC realization fixes lengths
// 1 / 2 / sqrt(2) instead, which is what the e_i model above gives).  Any
// positive rescaling yields the same Cartan numbers and lattices, which is
// all the downstream criteria consume.
//
// Simple-root numbering follows Humphreys (Bourbaki) within each component;
// for A-type chains adjacent indices are the only non-orthogonal pairs.

#pragma once

#include "symfan/cone.hpp"
#include "symfan/lattice.hpp"

#include <string>
#include <vector>

namespace symfan {

enum class Family { A, B, C, D, E, F, G, BC };

struct TypeComponent {
  Family family;
  int rank;
  bool operator==(const TypeComponent&) const = default;
};

using TypeLabel = std::vector<TypeComponent>;

TypeLabel parseTypeLabel(const std::string& text);  // "A2", "BC3", "A1xA1"
std::string formatTypeLabel(const TypeLabel& label);

struct SubsystemComponent {
  TypeComponent type;
  // Simple-root indices of the parent system, in canonical diagram order
  // (for chains: path order starting at the smaller parent index).
  std::vector<int> nodes;
};

struct ParabolicSubsystem {
  std::vector<int> nodes;  // the chosen simple-root subset, sorted
  std::vector<QVector> roots;
  std::vector<SubsystemComponent> components;
  bool typeIsProductOfA() const;
  int rank() const { return static_cast<int>(nodes.size()); }
};

class RootSystem {
 public:
  static RootSystem build(const TypeLabel& label);
  static RootSystem build(const std::string& label) { return build(parseTypeLabel(label)); }

  const TypeLabel& label() const { return label_; }
  Eigen::Index ambientDim() const { return dim_; }
  int rank() const { return static_cast<int>(simple_.size()); }
  const std::vector<QVector>& simpleRoots() const { return simple_; }
  const std::vector<QVector>& roots() const { return roots_; }
  const QMatrix& form() const { return form_; }
  bool reduced() const { return reduced_; }

  bool isRoot(const QVector& v) const;

  // 2b/(a,a) * a with b = 1/2 when 2a is also a root.
  QVector coroot(const QVector& root) const;
  const std::vector<QVector>& simpleCoroots() const { return simpleCoroots_; }

  // Cartan number <a_i, a_j^v>.
  Rational cartan(int i, int j) const;

  const std::vector<QVector>& fundamentalWeights() const { return weights_; }
  const std::vector<QVector>& fundamentalCoweights() const { return coweights_; }

  const Lattice& rootLattice() const { return rootLattice_; }
  const Lattice& weightLattice() const { return weightLattice_; }
  const Lattice& corootLattice() const { return corootLattice_; }
  const Lattice& coweightLattice() const { return coweightLattice_; }

  // cone(fundamental (co)weights); as a set this is the dominant chamber.
  const Cone& dominantChamber() const { return dominant_; }
  // -C+ , the valuation cone.
  const Cone& valuationCone() const { return valuation_; }

  QVector reflect(const QVector& root, const QVector& v) const;

  ParabolicSubsystem parabolicSubsystem(const std::vector<int>& simpleIndices) const;

  // Nodes of degree <= 1 in the Dynkin diagram.
  std::vector<int> diagramEndpoints() const;

  // All simple-root permutations preserving the Cartan matrix.
  std::vector<std::vector<int>> diagramAutomorphisms() const;
  // The linear extension of an automorphism (identity on the orthogonal
  // complement of the root span).
  QMatrix automorphismMatrix(const std::vector<int>& perm) const;

  // Inner-product pairing in this realization.
  Rational pair(const QVector& a, const QVector& b) const { return pairing(form_, a, b); }

 private:
  TypeLabel label_;
  Eigen::Index dim_ = 0;
  bool reduced_ = true;
  std::vector<QVector> simple_;
  std::vector<QVector> roots_;
  std::vector<QVector> simpleCoroots_;
  std::vector<QVector> weights_;
  std::vector<QVector> coweights_;
  QMatrix form_;
  Lattice rootLattice_, weightLattice_, corootLattice_, coweightLattice_;
  Cone dominant_, valuation_;
};

// Smallest cone containing `c` stable under the reflections of the given
// roots; computed by closing the generator set to a fixed point.
Cone weylSaturateCone(const RootSystem& rs, const std::vector<QVector>& reflectionRoots,
                      const Cone& c);

}  // namespace symfan
