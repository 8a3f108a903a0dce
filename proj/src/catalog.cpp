#include "symfan/classify.hpp"

#include <array>
#include <sstream>

namespace symfan {

namespace {

struct Builder {
  std::shared_ptr<const RootSystem> rs;
  std::vector<ClassifiedVariety> entries;

  QVector cw(int i) const { return rs->fundamentalCoweights()[static_cast<std::size_t>(i - 1)]; }
  QVector cr(int i) const { return rs->simpleCoroots()[static_cast<std::size_t>(i - 1)]; }

  // a simple entry: cone on the coroots `colors` (1-based) plus the ray v
  void simple(const Lattice& chiStar, const std::vector<int>& colorIdx, const QVector& v,
              const std::string& label) {
    SphericalDatum datum = SphericalDatum::plain(rs, chiStar);
    std::set<ColorId> colors;
    std::vector<QVector> gens;
    for (int i : colorIdx) {
      colors.insert({i - 1, 1});
      gens.push_back(cr(i));
    }
    gens.push_back(v);
    ColoredCone cc = makeColoredCone(datum, gens, colors);
    ClassifiedVariety cv{datum, ColoredFan::fromMaximal(datum, {cc}), 1, label};
    entries.push_back(cv);
  }

  // a two-orbit entry with maximal cones on `colorsA` resp. `colorsB` plus v
  void twoOrbit(const Lattice& chiStar, const std::vector<int>& colorsA,
                const std::vector<int>& colorsB, const QVector& v, const std::string& label) {
    SphericalDatum datum = SphericalDatum::plain(rs, chiStar);
    auto mk = [&](const std::vector<int>& idx) {
      std::set<ColorId> colors;
      std::vector<QVector> gens;
      for (int i : idx) {
        colors.insert({i - 1, 1});
        gens.push_back(cr(i));
      }
      gens.push_back(v);
      return makeColoredCone(datum, gens, colors);
    };
    ClassifiedVariety cv{datum, ColoredFan::fromMaximal(datum, {mk(colorsA), mk(colorsB)}), 2,
                         label};
    entries.push_back(cv);
  }

  Lattice span(const std::vector<QVector>& gens) const {
    return Lattice::fromGenerators(gens, rs->ambientDim());
  }
};

std::vector<int> range(int a, int b) {  // inclusive
  std::vector<int> out;
  for (int i = a; i <= b; ++i) out.push_back(i);
  return out;
}

}  // namespace

std::vector<ClassifiedVariety> referenceCatalog(const TypeLabel& type) {
  Builder b;
  b.rs = std::make_shared<const RootSystem>(RootSystem::build(type));
  const RootSystem& rs = *b.rs;
  const std::string name = formatTypeLabel(type);

  if (type.size() == 2) {
    // the only reducible case: A1 x A1, one two-orbit entry on the lattice
    // spanned by 2w1^v = a1^v and w1^v + w2^v
    if (!(type[0] == TypeComponent{Family::A, 1} && type[1] == TypeComponent{Family::A, 1}))
      throw std::domain_error("catalog: unsupported product type " + name);
    Lattice l = b.span({b.cr(1), b.cw(1) + b.cw(2)});
    b.twoOrbit(l, {1}, {2}, QVector(-b.cw(1) - b.cw(2)), name + " two-orbit");
    return b.entries;
  }
  if (type.size() != 1) throw std::domain_error("catalog: unsupported product type " + name);

  const Family fam = type[0].family;
  const int l = type[0].rank;

  auto rank1Entry = [&](const Lattice& chiStar, const std::string& label) {
    SphericalDatum datum = SphericalDatum::plain(b.rs, chiStar);
    QVector ray = datum.primitiveValuation(QVector(-b.cw(1)));
    ColoredCone cc = makeColoredCone(datum, {ray}, {});
    ClassifiedVariety cv{datum, ColoredFan::fromMaximal(datum, {cc}), 1, label};
    b.entries.push_back(cv);
  };

  switch (fam) {
    case Family::A:
      if (l == 1) {
        // every H gives the unique nontrivial embedding; the Hermitian
        // H = G^theta datum (two colors) is excluded by Picard rank two
        rank1Entry(rs.coweightLattice(), "A1 simple");
        rank1Entry(rs.corootLattice(), "A1 simple #2");
      } else {
        b.simple(rs.coweightLattice(), range(1, l - 1), QVector(-b.cw(1)), name + " simple left");
        b.simple(rs.coweightLattice(), range(2, l), QVector(-b.cw(l)), name + " simple right");
        if (l == 2)
          b.twoOrbit(rs.corootLattice(), {1}, {2}, QVector(-b.cw(1) - b.cw(2)),
                     name + " two-orbit");
      }
      break;
    case Family::B:
      if (l == 2) {
        b.simple(rs.coweightLattice(), {1}, QVector(-b.cw(1)), name + " simple (a)");
        b.simple(rs.corootLattice(), {2}, QVector(-b.cw(2)), name + " simple (b)");
      } else {
        b.simple(rs.coweightLattice(), range(1, l - 1), QVector(-b.cw(1)), name + " simple");
      }
      break;
    case Family::C:
      if (l < 3) throw std::domain_error("catalog: unsupported type " + name);
      b.simple(rs.corootLattice(), range(1, l - 1), QVector(-b.cw(1)), name + " simple");
      break;
    case Family::BC:
      if (l == 1) {
        rank1Entry(rs.corootLattice(), "BC1 simple");
      } else {
        b.simple(rs.corootLattice(), range(1, l - 1), QVector(-b.cw(1)), name + " simple");
      }
      break;
    case Family::D: {
      if (l < 4) throw std::domain_error("catalog: unsupported type " + name);
      if (l == 4) {
        // the triality family: for each choice of i among the outer nodes,
        // chi_* = Z w_i + Z w_2 + Z (w_j + w_k) + Z 2 w_k
        const std::vector<std::array<int, 3>> picks = {{1, 3, 4}, {3, 1, 4}, {4, 1, 3}};
        for (auto [i, j, k] : picks) {
          Lattice lat = b.span({b.cw(i), b.cw(2), b.cw(j) + b.cw(k), 2 * b.cw(k)});
          b.twoOrbit(lat, {i, 2, j}, {i, 2, k}, QVector(-b.cw(i)), name + " two-orbit");
        }
      } else {
        std::vector<QVector> gens;
        for (int i = 1; i <= l - 2; ++i) gens.push_back(b.cw(i));
        gens.push_back(b.cw(l - 1) + b.cw(l));
        gens.push_back(2 * b.cw(l));
        Lattice lat = b.span(gens);
        std::vector<int> left = range(1, l - 1);
        std::vector<int> right = range(1, l - 2);
        right.push_back(l);
        b.twoOrbit(lat, left, right, QVector(-b.cw(1)), name + " two-orbit");
      }
      break;
    }
    case Family::G:
      b.simple(rs.corootLattice(), {2}, QVector(-b.cw(2)), name + " simple");
      break;
    case Family::E:
    case Family::F:
      break;  // empty by the classification
  }
  return b.entries;
}

}  // namespace symfan
