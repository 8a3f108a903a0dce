// The .scf file format: a line-oriented description of a spherical datum and
// the maximal colored cones of a fan.
//
//   # comment
//   rootsystem B2
//   lattice root|weight|basis     # chi(S) named, or explicit chi_*(S) basis
//   row <rationals>               # basis rows (ambient coordinates)
//   hermitian true|false
//   exceptional <1-based indices>
//   fiber <1-based index> 1|2
//   cone
//   ray coroot <1-based index>
//   ray vec <rationals>
//   colors <i[:slot]> ...
//   end
//
// `lattice root` declares chi(S) to be the restricted root lattice (so
// chi_*(S) is the coweight lattice), `lattice weight` the spherical weight
// lattice (chi_*(S) the coroot lattice); `lattice basis` lists a chi_*(S)
// basis explicitly, one `row` per vector, and is also accepted for
// diagnostic lattices that are not sandwiched between the coroot and
// coweight lattices.  Coordinates are exact rationals `p/q` in the ambient
// realization of the declared type (note A_l lives in Q^{l+1}).

#pragma once

#include "symfan/classify.hpp"

#include <string>
#include <variant>
#include <vector>

namespace symfan {

struct ScfError : std::runtime_error {
  int line;  // 0 when the error is not tied to a source line
  ScfError(int line_, const std::string& msg)
      : std::runtime_error(line_ > 0 ? "line " + std::to_string(line_) + ": " + msg : msg),
        line(line_) {}
};

enum class LatticeKind { root, weight, basis };

struct RaySpec {
  bool isCoroot = false;
  int corootIndex = 0;  // 1-based, when isCoroot
  QVector coords;       // when !isCoroot
};

struct ConeSpec {
  std::vector<RaySpec> rays;
  std::vector<ColorId> colors;  // corootIndex 0-based after parsing
};

struct ScfDocument {
  TypeLabel type;
  LatticeKind latticeKind = LatticeKind::root;
  std::vector<QVector> basisRows;
  bool hermitian = false;
  std::vector<int> exceptional;  // 0-based
  std::vector<std::pair<int, int>> fiberOverrides;  // (0-based index, size)
  std::vector<ConeSpec> cones;
};

ScfDocument parseScf(const std::string& text);
std::string printScf(const ScfDocument& doc);

struct ResolvedScf {
  SphericalDatum datum;
  std::vector<ColoredCone> maximalCones;
};

// Builds the datum and maximal cones; throws ScfError on inconsistent
// dimensions or unknown colors.
ResolvedScf resolveScf(const ScfDocument& doc);

// Canonical document for a classified variety (used by the catalog export).
ScfDocument documentFor(const ClassifiedVariety& cv);

}  // namespace symfan
