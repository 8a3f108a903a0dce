// The combinatorial stand-in for a symmetric homogeneous space G/H:
// restricted root system, the one-parameter lattice chi_*(S), the color
// fibers over the simple restricted coroots, the exceptional coroots and the
// Hermitian flag.

#pragma once

#include "symfan/root_system.hpp"

#include <memory>
#include <set>
#include <string>
#include <vector>

namespace symfan {

// A color is identified by the simple restricted coroot it maps to under rho
// and a slot inside the (at most two element) fiber.
struct ColorId {
  int corootIndex = 0;  // 0-based
  int slot = 1;         // 1 or 2
  auto operator<=>(const ColorId&) const = default;
};

std::string colorName(const ColorId& c);

class SphericalDatum {
 public:
  // fiberSizes: one entry per simple restricted root (1 or 2).  The
  // invariants tying fibers to the Hermitian/exceptional flags are checked;
  // set `requireAdmissibleLattice` to false for diagnostic data whose lattice
  // is taken from an explicit cone basis rather than an intermediate lattice.
  SphericalDatum(std::shared_ptr<const RootSystem> rs, Lattice chiStar,
                 std::vector<int> fiberSizes, std::set<int> exceptionalCoroots,
                 bool hermitian, bool requireAdmissibleLattice = true);

  // Convenience: all fibers of size one, nothing exceptional, non-Hermitian.
  static SphericalDatum plain(std::shared_ptr<const RootSystem> rs, Lattice chiStar);

  const RootSystem& rootSystem() const { return *rs_; }
  std::shared_ptr<const RootSystem> rootSystemPtr() const { return rs_; }
  const Lattice& chiStar() const { return chiStar_; }
  // chi(S): the dual of chi_*(S) under the realization's inner product.
  const Lattice& chi() const { return chi_; }
  int rank() const { return rs_->rank(); }

  const std::vector<int>& fiberSizes() const { return fibers_; }
  int fiberSize(int corootIndex) const { return fibers_[static_cast<std::size_t>(corootIndex)]; }
  const std::set<int>& exceptionalCoroots() const { return exceptional_; }
  bool hermitian() const { return hermitian_; }
  // H = G^theta corresponds to the smallest chi_*(S), the coroot lattice.
  bool hIsFixedGroup() const { return hIsFixedGroup_; }

  const std::vector<ColorId>& colors() const { return colors_; }
  QVector rho(const ColorId& c) const;  // the simple coroot of the fiber

  // coroot lattice <= chi_* <= coweight lattice
  bool latticeAdmissible() const { return admissible_; }

  // N = -C+ cap chi_*(S) is the set of invariant valuations; this returns
  // the primitive lattice generator of a ray of the valuation cone.
  QVector primitiveValuation(const QVector& direction) const;

  bool hasColor(const ColorId& c) const;

 private:
  std::shared_ptr<const RootSystem> rs_;
  Lattice chiStar_, chi_;
  std::vector<int> fibers_;
  std::set<int> exceptional_;
  bool hermitian_ = false;
  bool hIsFixedGroup_ = false;
  bool admissible_ = true;
  std::vector<ColorId> colors_;
};

}  // namespace symfan
