#include "symfan/colored.hpp"

#include <algorithm>
#include <sstream>

namespace symfan {

std::string ColoredCone::toString() const {
  std::ostringstream os;
  os << cone.toString() << " colors{";
  bool first = true;
  for (const auto& c : colors) {
    if (!first) os << ",";
    os << colorName(c);
    first = false;
  }
  os << "}";
  return os.str();
}

ColoredCone makeColoredCone(const SphericalDatum& datum, const std::vector<QVector>& generators,
                            const std::set<ColorId>& colors) {
  ColoredCone cc;
  cc.cone = Cone::fromGenerators(generators, datum.rootSystem().ambientDim());
  cc.colors = colors;
  return cc;
}

std::optional<Violation> validateColoredCone(const SphericalDatum& datum, const ColoredCone& cc) {
  for (const auto& c : cc.colors)
    if (!datum.hasColor(c)) return Violation{"colors", "color " + colorName(c) + " not in datum"};

  const Cone& val = datum.rootSystem().valuationCone();

  // (i): every extreme ray is a color image or an invariant valuation, and
  // every declared color maps into the cone.
  for (const auto& r : cc.cone.rays()) {
    bool isColorRay = false;
    for (const auto& c : cc.colors)
      if (equal(primitiveDirection(datum.rho(c)), r)) isColorRay = true;
    if (!isColorRay && !val.contains(r))
      return Violation{"(i)", "ray " + toString(r) + " is neither a color image nor in -C+"};
  }
  for (const auto& c : cc.colors)
    if (!cc.cone.contains(datum.rho(c)))
      return Violation{"(i)", "image of " + colorName(c) + " outside the cone"};

  // (ii): relint(C) meets -C+.
  if (!relintMeetsRegion(cc.cone, val))
    return Violation{"(ii)", "relative interior misses the valuation cone"};
  return std::nullopt;
}

namespace {

// Colors induced on a face: those of the parent whose image lies in it.
std::set<ColorId> inducedColors(const SphericalDatum& datum, const ColoredCone& parent,
                                const Cone& face) {
  std::set<ColorId> out;
  for (const auto& c : parent.colors)
    if (face.contains(datum.rho(c))) out.insert(c);
  return out;
}

}  // namespace

ColoredFan ColoredFan::fromMaximal(const SphericalDatum& datum, std::vector<ColoredCone> maximal) {
  ColoredFan fan;
  std::sort(maximal.begin(), maximal.end());
  maximal.erase(std::unique(maximal.begin(), maximal.end()), maximal.end());
  fan.maximal_ = maximal;
  std::set<ColoredCone> family(maximal.begin(), maximal.end());
  for (const auto& m : maximal) {
    if (!m.cone.isPointed()) continue;  // validation will reject
    for (const auto& f : m.cone.faces()) {
      ColoredCone cc{f, inducedColors(datum, m, f)};
      if (!validateColoredCone(datum, cc)) family.insert(cc);
    }
  }
  fan.all_.assign(family.begin(), family.end());
  return fan;
}

std::set<ColorId> ColoredFan::colors() const {
  std::set<ColorId> out;
  for (const auto& m : maximal_) out.insert(m.colors.begin(), m.colors.end());
  return out;
}

std::vector<QVector> ColoredFan::raysIncludingColors(const SphericalDatum& datum) const {
  std::vector<QVector> rays;
  auto add = [&](const QVector& r) {
    for (const auto& k : rays)
      if (equal(k, r)) return;
    rays.push_back(r);
  };
  for (const auto& m : maximal_)
    for (const auto& r : m.cone.rays()) add(r);
  (void)datum;
  std::sort(rays.begin(), rays.end(), lexLess);
  return rays;
}

std::vector<QVector> ColoredFan::invariantRays(const SphericalDatum& datum) const {
  const Cone& val = datum.rootSystem().valuationCone();
  std::vector<QVector> out;
  for (const auto& r : raysIncludingColors(datum))
    if (val.contains(r)) out.push_back(datum.primitiveValuation(r));
  return out;
}

std::optional<Violation> validateColoredFan(const SphericalDatum& datum, const ColoredFan& fan) {
  for (const auto& m : fan.maximalCones()) {
    if (auto v = validateColoredCone(datum, m)) return v;
    if (!m.cone.isPointed())
      return Violation{"(i)", "maximal cone is not pointed"};
  }
  // fan axiom (i): every colored face of a member that is itself a colored
  // cone must belong to the family.
  std::set<ColoredCone> family(fan.allCones().begin(), fan.allCones().end());
  for (const auto& m : fan.maximalCones()) {
    for (const auto& f : m.cone.faces()) {
      ColoredCone cc{f, inducedColors(datum, m, f)};
      if (validateColoredCone(datum, cc)) continue;  // not a colored cone
      if (!family.count(cc))
        return Violation{"fan(i)", "missing colored face " + cc.toString()};
    }
  }
  // fan axiom (ii): relative interiors meet -C+ in pairwise disjoint sets.
  const Cone& val = datum.rootSystem().valuationCone();
  const auto& cones = fan.allCones();
  for (std::size_t i = 0; i < cones.size(); ++i)
    for (std::size_t j = i + 1; j < cones.size(); ++j) {
      if (cones[i].cone == cones[j].cone) {
        // same underlying cone with different colors: both relints meet -C+
        return Violation{"fan(ii)", "duplicate cone with different colors: " + cones[i].toString()};
      }
      if (relintsMeetWithin(cones[i].cone, cones[j].cone, val))
        return Violation{"fan(ii)", "relative interiors of " + cones[i].toString() + " and " +
                                         cones[j].toString() + " meet inside -C+"};
    }
  return std::nullopt;
}

bool isComplete(const SphericalDatum& datum, const ColoredFan& fan) {
  std::vector<Cone> pieces;
  for (const auto& m : fan.maximalCones()) pieces.push_back(m.cone);
  return coneCovers(datum.rootSystem().valuationCone(), pieces).covered;
}

int piecewiseLinearRank(const SphericalDatum& datum, const ColoredFan& fan) {
  const auto& maximal = fan.maximalCones();
  const Eigen::Index d = datum.rootSystem().ambientDim();
  const std::size_t k = maximal.size();
  // unknowns: one linear functional per maximal cone, constrained to agree on
  // pairwise intersections; the function only matters on the span of each
  // cone, so functionals are taken modulo the span-annihilator.
  std::vector<QVector> rows;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      Cone common = maximal[i].cone.intersect(maximal[j].cone);
      for (const auto& r : common.rays()) {
        QVector row = QVector::Zero(static_cast<Eigen::Index>(k) * d);
        row.segment(static_cast<Eigen::Index>(i) * d, d) = r;
        row.segment(static_cast<Eigen::Index>(j) * d, d) = -r;
        rows.push_back(row);
      }
    }
  // dimension of functional tuples = sum of span dimensions
  Eigen::Index total = 0;
  for (const auto& m : maximal) total += m.cone.dim();
  if (rows.empty()) return static_cast<int>(total);
  QMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(k) * d);
  for (std::size_t i = 0; i < rows.size(); ++i) m.row(static_cast<Eigen::Index>(i)) = rows[i].transpose();
  // restrict each block to the span of its cone: substitute l_i = sum of span
  // basis functionals.  Build the substitution matrix.
  std::vector<std::vector<QVector>> spanBases(k);
  Eigen::Index cols = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const auto& c = maximal[i].cone;
    std::vector<QVector> basis;
    for (const auto& r : c.rays()) basis.push_back(r);
    for (const auto& l : c.linealityBasis()) basis.push_back(l);
    QMatrix bm(d, static_cast<Eigen::Index>(basis.size()));
    for (std::size_t t = 0; t < basis.size(); ++t) bm.col(static_cast<Eigen::Index>(t)) = basis[t];
    Eigen::FullPivLU<QMatrix> lu(bm);
    lu.setThreshold(Rational(0));
    QMatrix im = lu.image(bm);
    for (Eigen::Index t = 0; t < im.cols(); ++t) spanBases[i].push_back(im.col(t));
    cols += im.cols();
  }
  // The agreement constraint row acting on functional tuples: a functional on
  // span(C_i) is determined by values on the span basis; the row entry for
  // basis vector b of block i is (row restricted to block i) . b.
  QMatrix sys(static_cast<Eigen::Index>(rows.size()), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    Eigen::Index colOff = 0;
    for (std::size_t i = 0; i < k; ++i) {
      QVector blockVec = rows[r].segment(static_cast<Eigen::Index>(i) * d, d);
      for (std::size_t t = 0; t < spanBases[i].size(); ++t)
        sys(static_cast<Eigen::Index>(r), colOff + static_cast<Eigen::Index>(t)) =
            dot(blockVec, spanBases[i][t]);
      colOff += static_cast<Eigen::Index>(spanBases[i].size());
    }
  }
  return static_cast<int>(cols - rankOf(sys));
}

int picardRank(const SphericalDatum& datum, const ColoredFan& fan) {
  if (!isComplete(datum, fan)) throw std::domain_error("picardRank: fan is not complete");
  const int l = datum.rank();
  const int r = static_cast<int>(datum.colors().size()) - static_cast<int>(fan.colors().size());
  bool simplicialFullDim = true;
  for (const auto& m : fan.maximalCones())
    if (!m.cone.isSimplicial() || m.cone.dim() != l) simplicialFullDim = false;
  if (simplicialFullDim) {
    const int m = static_cast<int>(fan.raysIncludingColors(datum).size());
    return r + m - l;
  }
  return r - l + piecewiseLinearRank(datum, fan);
}

AmpleCheck isAmpleTwoOrbit(const SphericalDatum& datum, const ColoredFan& fan,
                           const std::map<DivisorKey, Rational>& coefficients) {
  AmpleCheck out;
  std::ostringstream detail;

  // all colors must belong to the fan (Brion's criterion side condition)
  if (fan.colors() != std::set<ColorId>(datum.colors().begin(), datum.colors().end())) {
    out.detail = "D(X) != D(G/H)";
    return out;
  }

  auto invariant = fan.invariantRays(datum);
  // the divisor map: primitive ray in chi_* -> coefficient
  struct RayCoeff {
    QVector ray;
    Rational value;
  };
  std::vector<RayCoeff> assignments;
  for (const auto& c : fan.colors()) {
    auto it = coefficients.find(DivisorKey{c, -1});
    if (it == coefficients.end())
      throw std::domain_error("isAmpleTwoOrbit: missing coefficient for " + colorName(c));
    assignments.push_back({datum.chiStar().primitiveInLattice(datum.rho(c)), it->second});
  }
  for (std::size_t i = 0; i < invariant.size(); ++i) {
    auto it = coefficients.find(DivisorKey{std::nullopt, static_cast<int>(i)});
    if (it == coefficients.end())
      throw std::domain_error("isAmpleTwoOrbit: missing coefficient for invariant ray " +
                              std::to_string(i));
    assignments.push_back({invariant[i], it->second});
  }

  // linear part on each maximal cone, determined by the values on its rays
  const Eigen::Index d = datum.rootSystem().ambientDim();
  std::vector<QVector> linearPart;
  for (const auto& m : fan.maximalCones()) {
    std::vector<QVector> pts;
    std::vector<Rational> vals;
    for (const auto& a : assignments)
      if (m.cone.contains(a.ray)) {
        pts.push_back(a.ray);
        vals.push_back(a.value);
      }
    QMatrix A(static_cast<Eigen::Index>(pts.size()), d);
    QVector b(static_cast<Eigen::Index>(pts.size()));
    for (std::size_t i = 0; i < pts.size(); ++i) {
      A.row(static_cast<Eigen::Index>(i)) = pts[i].transpose();
      b[static_cast<Eigen::Index>(i)] = vals[i];
    }
    auto sol = solve(A, b);
    if (!sol) throw std::domain_error("isAmpleTwoOrbit: no linear function matches the coefficients");
    linearPart.push_back(*sol);
  }

  // strict convexity: for each pair, each generator of one cone outside the
  // other must evaluate strictly below its own cone's value.
  const auto& maximal = fan.maximalCones();
  bool strict = true;
  for (std::size_t i = 0; i < maximal.size(); ++i)
    for (std::size_t j = 0; j < maximal.size(); ++j) {
      if (i == j) continue;
      for (const auto& g : maximal[j].cone.rays()) {
        if (maximal[i].cone.contains(g)) continue;
        QVector gl = datum.chiStar().primitiveInLattice(g);
        Rational mine = dot(linearPart[i], gl);
        Rational there = dot(linearPart[j], gl);
        detail << "l" << i + 1 << "(" << toString(gl) << ") = " << toString(mine)
               << (mine < there ? " < " : " >= ") << toString(there) << "; ";
        if (!(mine < there)) strict = false;
      }
    }
  if (maximal.size() < 2) strict = false;  // nothing to be strictly convex across
  out.ample = strict;
  out.detail = detail.str();
  return out;
}

}  // namespace symfan
