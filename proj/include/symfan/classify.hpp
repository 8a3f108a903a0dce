// Exhaustive enumeration of the smooth complete symmetric varieties with
// Picard number one per restricted type, the built-in reference catalog, and
// the comparator between the two.

#pragma once

#include "symfan/smoothness.hpp"

#include <string>
#include <vector>

namespace symfan {

struct ClassifiedVariety {
  SphericalDatum datum;
  ColoredFan fan;
  int orbitCount = 1;  // closed orbits = maximal cones
  std::string label;

  // Canonical identity: type, lattice, fiber structure, flags and the sorted
  // maximal colored cones, with the slots of doubled fibers relabeled to the
  // lexicographically smallest choice.
  std::string canonicalKey() const;
};

// All lattices between the coroot and the coweight lattice, enumerated via
// the subgroups of the finite quotient; deterministic order.
std::vector<Lattice> enumerateIntermediateLattices(const RootSystem& rs);

// Candidate simple colored cones for Picard-number-one embeddings: for every
// diagram endpoint (the omitted color) and every primitive v in the bounded
// coefficient grid of -C+ cap chi_*(S), the cone on the remaining coroots
// and v, carrying the full fibers of the kept coroots.  Rank-one data yield
// the single valuation ray.  The default coefficient bound is rank + 2; for
// rank >= 5 the stream is anchored to the coefficient patterns forced on any
// smooth candidate (zero on interior chain nodes, one at a chain end).
std::vector<ColoredCone> candidateColoredCones(const SphericalDatum& datum, int bound = -1);

// Singleton fans of the given smooth simple cones plus all valid two-orbit
// pairs sharing the invariant ray and jointly using every color.
std::vector<ColoredFan> assembleFans(const SphericalDatum& datum,
                                     const std::vector<ColoredCone>& smoothSimple);

struct EnumerateOptions {
  int bound = -1;                 // v-coefficient bound; -1 = rank + 2
  CrossCheck crossCheck = CrossCheck::off;
};

// Every admissible datum of the type (intermediate lattices, Hermitian
// fiber variants) is swept; entries are the fans that validate, are smooth
// on all maximal cones, complete, and have Picard rank one.
std::vector<ClassifiedVariety> enumeratePicardOne(const TypeLabel& type,
                                                  const EnumerateOptions& opts = {});

// The classification catalog, hard-coded per type.
std::vector<ClassifiedVariety> referenceCatalog(const TypeLabel& type);

// Types covered by the catalog: A1..A8, A1xA1, B2.., C3.., BC1.., D4..
// (classical ranks up to maxRank), G2, F4, E6, E7, E8.
std::vector<TypeLabel> supportedTypes(int maxRank);

struct MatchReport {
  bool match = false;
  int entries = 0;  // enumerated entries
  int orbits = 0;   // classes under diagram automorphisms and slot swaps
  std::vector<std::string> missing;  // catalog keys the enumeration lacks
  std::vector<std::string> extra;    // enumerated keys the catalog lacks
};

MatchReport verifyAgainstCatalog(const TypeLabel& type, const EnumerateOptions& opts = {});

// Number of equivalence classes of the entries under the Dynkin-diagram
// automorphisms of the restricted root system (datum-preserving ones).
int countOrbits(const std::vector<ClassifiedVariety>& entries);

}  // namespace symfan
