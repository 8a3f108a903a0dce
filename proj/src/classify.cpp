#include "symfan/classify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace symfan {

namespace {

std::string fanKey(const ColoredFan& fan,
                   const std::map<std::pair<int, int>, std::pair<int, int>>* slotMap) {
  std::vector<std::string> parts;
  for (const auto& m : fan.maximalCones()) {
    std::ostringstream os;
    os << m.cone.toString() << "|";
    std::set<ColorId> cs;
    for (auto c : m.colors) {
      if (slotMap) {
        auto it = slotMap->find({c.corootIndex, c.slot});
        if (it != slotMap->end()) c = ColorId{it->second.first, it->second.second};
      }
      cs.insert(c);
    }
    for (const auto& c : cs) os << colorName(c) << ",";
    parts.push_back(os.str());
  }
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (const auto& p : parts) out += p + ";";
  return out;
}

std::string datumKey(const SphericalDatum& d) {
  std::ostringstream os;
  os << formatTypeLabel(d.rootSystem().label()) << "|" << d.chiStar().toString() << "|f";
  for (int f : d.fiberSizes()) os << f;
  os << "|h" << (d.hermitian() ? 1 : 0) << "|e";
  for (int e : d.exceptionalCoroots()) os << e + 1 << ",";
  return os.str();
}

}  // namespace

std::string ClassifiedVariety::canonicalKey() const {
  std::vector<int> doubled;
  for (int i = 0; i < datum.rank(); ++i)
    if (datum.fiberSize(i) == 2) doubled.push_back(i);
  std::string best;
  const std::size_t n = doubled.size();
  for (std::size_t mask = 0; mask < (1u << n); ++mask) {
    std::map<std::pair<int, int>, std::pair<int, int>> slotMap;
    for (std::size_t t = 0; t < n; ++t)
      if (mask & (1u << t)) {
        slotMap[{doubled[t], 1}] = {doubled[t], 2};
        slotMap[{doubled[t], 2}] = {doubled[t], 1};
      }
    std::string key = fanKey(fan, slotMap.empty() ? nullptr : &slotMap);
    if (best.empty() || key < best) best = key;
  }
  return datumKey(datum) + "::" + best;
}

std::vector<Lattice> enumerateIntermediateLattices(const RootSystem& rs) {
  const Lattice& sub = rs.corootLattice();
  const Lattice& sup = rs.coweightLattice();
  const int n = rs.rank();
  ZMatrix t(n, n);  // coroot basis in coweight coordinates
  for (int j = 0; j < n; ++j) {
    auto z = sup.coordinates(sub.basis()[static_cast<std::size_t>(j)]);
    if (!z) throw std::logic_error("coroot lattice outside coweight lattice");
    t.col(j) = *z;
  }
  auto snf = smithNormalForm(t);
  QMatrix uq(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) uq(i, j) = Rational(snf.u(i, j));
  Eigen::FullPivLU<QMatrix> lu(uq);
  lu.setThreshold(Rational(0));
  QMatrix uinv = lu.inverse();

  // the quotient coweight/coroot is prod Z/d_i with the class of the
  // coweight-combination U^{-1} e_i as i-th generator
  std::vector<int> moduli;
  std::vector<int> which;
  for (int i = 0; i < n; ++i)
    if (snf.divisors[static_cast<std::size_t>(i)] > 1) {
      moduli.push_back(static_cast<int>(snf.divisors[static_cast<std::size_t>(i)].get_si()));
      which.push_back(i);
    }
  std::vector<std::vector<int>> elements;
  std::vector<int> cur(moduli.size(), 0);
  while (true) {
    elements.push_back(cur);
    std::size_t k = 0;
    while (k < moduli.size()) {
      if (++cur[k] < moduli[k]) break;
      cur[k] = 0;
      ++k;
    }
    if (k == moduli.size()) break;
  }

  auto addElems = [&](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> s(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) s[i] = (a[i] + b[i]) % moduli[i];
    return s;
  };

  std::set<std::set<std::vector<int>>> subgroups;
  const std::size_t total = elements.size();
  for (std::size_t mask = 0; mask < (1u << total); ++mask) {
    if (!(mask & 1u)) continue;  // elements[0] is the identity
    std::set<std::vector<int>> sg;
    for (std::size_t i = 0; i < total; ++i)
      if (mask & (1u << i)) sg.insert(elements[i]);
    bool closed = true;
    for (const auto& x : sg) {
      for (const auto& y : sg)
        if (!sg.count(addElems(x, y))) {
          closed = false;
          break;
        }
      if (!closed) break;
    }
    if (closed) subgroups.insert(sg);
  }

  std::vector<Lattice> out;
  for (const auto& sg : subgroups) {
    std::vector<QVector> gens = sub.basis();
    for (const auto& el : sg) {
      QVector coordInCoweight = QVector::Zero(n);
      for (std::size_t t2 = 0; t2 < which.size(); ++t2)
        coordInCoweight += uinv.col(which[t2]) * Rational(el[t2]);
      QVector v = QVector::Zero(rs.ambientDim());
      for (int j = 0; j < n; ++j)
        v += sup.basis()[static_cast<std::size_t>(j)] * coordInCoweight[j];
      gens.push_back(v);
    }
    out.push_back(Lattice::fromGenerators(gens, rs.ambientDim()));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

std::set<ColorId> keptColors(const SphericalDatum& datum, int omitted) {
  std::set<ColorId> colors;
  for (int i = 0; i < datum.rank(); ++i) {
    if (i == omitted) continue;
    for (int s = 1; s <= datum.fiberSize(i); ++s) colors.insert({i, s});
  }
  return colors;
}

std::optional<std::vector<int>> keptChain(const RootSystem& rs, int omitted) {
  std::vector<int> nodes;
  for (int i = 0; i < rs.rank(); ++i)
    if (i != omitted) nodes.push_back(i);
  auto sub = rs.parabolicSubsystem(nodes);
  if (sub.components.size() != 1) return std::nullopt;
  if (sub.components[0].type.family != Family::A) return std::nullopt;
  return sub.components[0].nodes;
}

// Optional per-endpoint prefilter: the determinant of (kept coroots | v) in
// lattice coordinates as a linear form in the coordinates of v; only
// candidates with value +-1 survive (the condition-(ii) necessary test).
using DetFilter = std::map<int, std::vector<long long>>;

// Streams (omitted endpoint, v, chi_*-coordinates of v) without building any
// cones.  v runs over the primitive points of -C+ cap chi_*(S) whose
// fundamental-coweight coefficients are bounded; for rank >= 5 only the
// coefficient patterns that a smooth candidate can carry are emitted (zero on
// the interior of the kept chain, one at an end, free over the omitted
// node -- any candidate passing the basis and indexing conditions has its
// invariant generator dual to the closing vector of the single chain, which
// forces that pattern).  The
// grid walk runs on machine integers (the coordinates involved are tiny) and
// only survivors are materialized as rational vectors.
void forEachCandidate(const SphericalDatum& datum, int bound, const DetFilter* detFilter,
                      const std::function<void(int, const QVector&, const ZVector&)>& fn) {
  const RootSystem& rs = datum.rootSystem();
  const int l = datum.rank();
  if (bound < 0) bound = l + 2;

  // x = P v with P the pseudo-inverse of the basis matrix (v in the span)
  QMatrix b(rs.ambientDim(), l);
  for (int j = 0; j < l; ++j) b.col(j) = datum.chiStar().basis()[static_cast<std::size_t>(j)];
  QMatrix gram = b.transpose() * b;
  Eigen::FullPivLU<QMatrix> lu(gram);
  lu.setThreshold(Rational(0));
  QMatrix p = lu.inverse() * b.transpose();

  auto passesDet = [&](int omitted, const ZVector& x) {
    if (!detFilter || omitted < 0) return true;
    auto it = detFilter->find(omitted);
    if (it == detFilter->end()) return false;
    Integer det = 0;
    for (int i = 0; i < l; ++i)
      det += Integer(static_cast<long>(it->second[static_cast<std::size_t>(i)])) * x[i];
    return det == 1 || det == -1;
  };

  auto tryEmit = [&](int omitted, const QVector& v) {
    QVector x = p * v;
    ZVector z(l);
    Integer g = 0;
    for (int i = 0; i < l; ++i) {
      if (x[i].get_den() != 1) return;
      z[i] = x[i].get_num();
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z[i].get_mpz_t());
    }
    if (g != 1) return;  // not a primitive lattice point (or zero)
    if (!passesDet(omitted, z)) return;
    fn(omitted, v, z);
  };

  if (l == 1) {
    QVector ray = datum.primitiveValuation(QVector(-rs.fundamentalCoweights()[0]));
    tryEmit(-1, ray);
    return;
  }

  std::vector<int> endpoints = rs.diagramEndpoints();

  if (l >= 5) {
    for (int omitted : endpoints) {
      auto chain = keptChain(rs, omitted);
      if (!chain) continue;
      for (int end : {chain->front(), chain->back()}) {
        for (int t = 0; t <= bound; ++t) {
          QVector v = -rs.fundamentalCoweights()[static_cast<std::size_t>(end)] -
                      rs.fundamentalCoweights()[static_cast<std::size_t>(omitted)] * Rational(t);
          tryEmit(omitted, v);
        }
        if (chain->front() == chain->back()) break;
      }
    }
    return;
  }

  // integer fast path: x = -(K c)/den with K = P . (coweight matrix)
  QMatrix omega(rs.ambientDim(), l);
  for (int i = 0; i < l; ++i) omega.col(i) = rs.fundamentalCoweights()[static_cast<std::size_t>(i)];
  QMatrix kq = p * omega;
  Integer den = 1;
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j)
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), kq(i, j).get_den().get_mpz_t());
  std::vector<std::vector<long long>> kint(static_cast<std::size_t>(l),
                                           std::vector<long long>(static_cast<std::size_t>(l)));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) {
      Rational e = kq(i, j) * Rational(den);
      kint[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = e.get_num().get_si();
    }
  const long long d64 = den.get_si();

  std::vector<long long> c(static_cast<std::size_t>(l), 0);
  std::vector<long long> x(static_cast<std::size_t>(l), 0);
  while (true) {
    std::size_t k = 0;
    while (k < c.size()) {
      if (++c[k] <= bound) break;
      c[k] = 0;
      ++k;
    }
    if (k == c.size()) break;
    bool member = true;
    long long g = 0;
    for (int i = 0; i < l && member; ++i) {
      long long s = 0;
      for (int j = 0; j < l; ++j) s -= kint[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * c[static_cast<std::size_t>(j)];
      if (s % d64 != 0) {
        member = false;
        break;
      }
      x[static_cast<std::size_t>(i)] = s / d64;
      g = std::gcd(g, x[static_cast<std::size_t>(i)]);
    }
    if (!member || g != 1) continue;
    ZVector z(l);
    for (int i = 0; i < l; ++i) z[i] = static_cast<long>(x[static_cast<std::size_t>(i)]);
    bool anyEndpoint = false;
    QVector v;
    for (int omitted : endpoints) {
      if (!passesDet(omitted, z)) continue;
      if (!anyEndpoint) {
        v = QVector::Zero(rs.ambientDim());
        for (int i = 0; i < l; ++i)
          v += datum.chiStar().basis()[static_cast<std::size_t>(i)] * Rational(z[i]);
        anyEndpoint = true;
      }
      fn(omitted, v, z);
    }
  }
}

ColoredCone buildCandidate(const SphericalDatum& datum, int omitted, const QVector& v) {
  const RootSystem& rs = datum.rootSystem();
  if (omitted < 0) return makeColoredCone(datum, {v}, {});
  std::vector<QVector> gens;
  for (int i = 0; i < datum.rank(); ++i)
    if (i != omitted) gens.push_back(rs.simpleCoroots()[static_cast<std::size_t>(i)]);
  gens.push_back(v);
  return makeColoredCone(datum, gens, keptColors(datum, omitted));
}

}  // namespace

std::vector<ColoredCone> candidateColoredCones(const SphericalDatum& datum, int bound) {
  std::vector<ColoredCone> out;
  forEachCandidate(datum, bound, nullptr, [&](int omitted, const QVector& v, const ZVector&) {
    out.push_back(buildCandidate(datum, omitted, v));
  });
  return out;
}

std::vector<ColoredFan> assembleFans(const SphericalDatum& datum,
                                     const std::vector<ColoredCone>& smoothSimple) {
  std::vector<ColoredFan> out;
  const Cone& val = datum.rootSystem().valuationCone();
  auto invariantRaysOf = [&](const ColoredCone& cc) {
    std::vector<QVector> rays;
    for (const auto& r : cc.cone.rays())
      if (val.contains(r)) rays.push_back(r);
    return rays;
  };
  for (const auto& cc : smoothSimple) out.push_back(ColoredFan::fromMaximal(datum, {cc}));
  const auto allColors = std::set<ColorId>(datum.colors().begin(), datum.colors().end());
  for (std::size_t i = 0; i < smoothSimple.size(); ++i)
    for (std::size_t j = i + 1; j < smoothSimple.size(); ++j) {
      auto ri = invariantRaysOf(smoothSimple[i]);
      auto rj = invariantRaysOf(smoothSimple[j]);
      if (ri.empty() || ri.size() != rj.size()) continue;
      bool same = true;
      for (std::size_t t2 = 0; t2 < ri.size(); ++t2)
        if (!equal(ri[t2], rj[t2])) same = false;
      if (!same) continue;
      std::set<ColorId> colors = smoothSimple[i].colors;
      colors.insert(smoothSimple[j].colors.begin(), smoothSimple[j].colors.end());
      if (colors != allColors) continue;
      ColoredFan fan = ColoredFan::fromMaximal(datum, {smoothSimple[i], smoothSimple[j]});
      if (validateColoredFan(datum, fan)) continue;
      out.push_back(fan);
    }
  return out;
}

namespace {

struct DatumVariant {
  std::vector<int> fibers;
  std::set<int> exceptional;
  bool hermitian = false;
};

int shortCorootIndex(const RootSystem& rs) {
  int shortIdx = 0;
  Rational best = rs.pair(rs.simpleCoroots()[0], rs.simpleCoroots()[0]);
  for (int i = 1; i < rs.rank(); ++i) {
    Rational len = rs.pair(rs.simpleCoroots()[static_cast<std::size_t>(i)],
                           rs.simpleCoroots()[static_cast<std::size_t>(i)]);
    if (len < best) {
      best = len;
      shortIdx = i;
    }
  }
  return shortIdx;
}

// The Hermitian H = G^theta fiber doubling exists only on the coroot
// lattice; other Hermitian data have the same combinatorics as the plain
// variant and are not enumerated twice.
std::vector<DatumVariant> datumVariants(const RootSystem& rs, const Lattice& chiStar) {
  std::vector<DatumVariant> out;
  const int n = rs.rank();
  out.push_back({std::vector<int>(static_cast<std::size_t>(n), 1), {}, false});
  bool typeOk = rs.label().size() == 1 &&
                (rs.label()[0].family == Family::BC || rs.label()[0].family == Family::C ||
                 (rs.label()[0].family == Family::B && rs.label()[0].rank == 2) ||
                 (rs.label()[0].family == Family::A && rs.label()[0].rank == 1));
  if (typeOk && chiStar == rs.corootLattice()) {
    DatumVariant herm;
    herm.fibers.assign(static_cast<std::size_t>(n), 1);
    int s = shortCorootIndex(rs);
    herm.fibers[static_cast<std::size_t>(s)] = 2;
    herm.hermitian = true;
    if (rs.label()[0].family == Family::BC) herm.exceptional = {s};
    out.push_back(herm);
  }
  return out;
}

}  // namespace

std::vector<ClassifiedVariety> enumeratePicardOne(const TypeLabel& type,
                                                  const EnumerateOptions& opts) {
  auto rs = std::make_shared<const RootSystem>(RootSystem::build(type));
  const int l = rs->rank();
  std::vector<ClassifiedVariety> entries;
  for (const auto& lattice : enumerateIntermediateLattices(*rs)) {
    for (const auto& variant : datumVariants(*rs, lattice)) {
      SphericalDatum datum(rs, lattice, variant.fibers, variant.exceptional, variant.hermitian);

      // det(kept coroots | v) in lattice coordinates, as a linear form in
      // the coordinates of v (cofactor expansion along the last column)
      DetFilter cofRow;
      if (l > 1)
        for (int omitted : rs->diagramEndpoints()) {
          QMatrix m(l, l - 1);
          Eigen::Index col = 0;
          for (int i = 0; i < l; ++i) {
            if (i == omitted) continue;
            QVector prim = datum.chiStar().primitiveInLattice(
                rs->simpleCoroots()[static_cast<std::size_t>(i)]);
            auto z = datum.chiStar().spanCoordinates(prim);
            m.col(col++) = *z;
          }
          std::vector<long long> cof(static_cast<std::size_t>(l));
          for (int i = 0; i < l; ++i) {
            QMatrix minor(l - 1, l - 1);
            Eigen::Index r = 0;
            for (int t2 = 0; t2 < l; ++t2) {
              if (t2 == i) continue;
              minor.row(r++) = m.row(t2);
            }
            Eigen::FullPivLU<QMatrix> lum(minor);
            lum.setThreshold(Rational(0));
            Rational d = lum.determinant();
            Rational entry = ((i + l - 1) % 2 == 0) ? d : Rational(-d);
            cof[static_cast<std::size_t>(i)] = entry.get_num().get_si();
          }
          cofRow[omitted] = cof;
        }

      std::vector<ColoredCone> smooth;
      forEachCandidate(datum, opts.bound, &cofRow, [&](int omitted, const QVector& v, const ZVector&) {
        ColoredCone cc = buildCandidate(datum, omitted, v);
        if (cc.cone.dim() != l) return;
        if (validateColoredCone(datum, cc)) return;
        auto rep = isSmooth(datum, cc, opts.crossCheck);
        if (rep.smooth) smooth.push_back(cc);
      });
      std::sort(smooth.begin(), smooth.end());
      smooth.erase(std::unique(smooth.begin(), smooth.end()), smooth.end());

      for (const auto& fan : assembleFans(datum, smooth)) {
        if (!isComplete(datum, fan)) continue;
        if (picardRank(datum, fan) != 1) continue;
        ClassifiedVariety cv{datum, fan, static_cast<int>(fan.maximalCones().size()), ""};
        cv.label = formatTypeLabel(type) +
                   (cv.orbitCount == 1 ? std::string(" simple") : std::string(" two-orbit"));
        entries.push_back(cv);
      }
    }
  }
  std::sort(entries.begin(), entries.end(),
            [](const ClassifiedVariety& a, const ClassifiedVariety& b) {
              return a.canonicalKey() < b.canonicalKey();
            });
  entries.erase(std::unique(entries.begin(), entries.end(),
                            [](const ClassifiedVariety& a, const ClassifiedVariety& b) {
                              return a.canonicalKey() == b.canonicalKey();
                            }),
                entries.end());
  std::map<std::string, int> seen;
  for (auto& e : entries) {
    int k = ++seen[e.label];
    if (k > 1) e.label += " #" + std::to_string(k);
  }
  return entries;
}

std::vector<TypeLabel> supportedTypes(int maxRank) {
  std::vector<TypeLabel> out;
  out.push_back(parseTypeLabel("A1xA1"));
  for (int l = 1; l <= maxRank; ++l) out.push_back({{Family::A, l}});
  for (int l = 2; l <= maxRank; ++l) out.push_back({{Family::B, l}});
  for (int l = 3; l <= maxRank; ++l) out.push_back({{Family::C, l}});
  for (int l = 1; l <= maxRank; ++l) out.push_back({{Family::BC, l}});
  for (int l = 4; l <= maxRank; ++l) out.push_back({{Family::D, l}});
  out.push_back({{Family::E, 6}});
  out.push_back({{Family::E, 7}});
  out.push_back({{Family::E, 8}});
  out.push_back({{Family::F, 4}});
  out.push_back({{Family::G, 2}});
  return out;
}

int countOrbits(const std::vector<ClassifiedVariety>& entries) {
  if (entries.empty()) return 0;
  const RootSystem& rs = entries[0].datum.rootSystem();
  auto autos = rs.diagramAutomorphisms();
  std::vector<std::string> keys;
  for (const auto& e : entries) keys.push_back(e.canonicalKey());
  std::vector<int> parent(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) parent[i] = static_cast<int>(i);
  std::function<int(int)> find = [&](int a) {
    while (parent[static_cast<std::size_t>(a)] != a) a = parent[static_cast<std::size_t>(a)];
    return a;
  };
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    for (const auto& perm : autos) {
      QMatrix t = rs.automorphismMatrix(perm);
      std::vector<QVector> latticeGens;
      for (const auto& b : e.datum.chiStar().basis()) latticeGens.push_back(t * b);
      Lattice mapped = Lattice::fromGenerators(latticeGens, rs.ambientDim());
      std::vector<int> fibers(static_cast<std::size_t>(rs.rank()));
      for (int k = 0; k < rs.rank(); ++k)
        fibers[static_cast<std::size_t>(perm[static_cast<std::size_t>(k)])] = e.datum.fiberSize(k);
      std::set<int> exc;
      for (int k : e.datum.exceptionalCoroots()) exc.insert(perm[static_cast<std::size_t>(k)]);
      SphericalDatum mappedDatum(e.datum.rootSystemPtr(), mapped, fibers, exc,
                                 e.datum.hermitian());
      std::vector<ColoredCone> maximal;
      for (const auto& m : e.fan.maximalCones()) {
        std::vector<QVector> gens;
        for (const auto& r : m.cone.rays()) gens.push_back(t * r);
        std::set<ColorId> colors;
        for (const auto& c : m.colors)
          colors.insert({perm[static_cast<std::size_t>(c.corootIndex)], c.slot});
        maximal.push_back(makeColoredCone(mappedDatum, gens, colors));
      }
      ClassifiedVariety image{mappedDatum, ColoredFan::fromMaximal(mappedDatum, maximal),
                              e.orbitCount, e.label};
      std::string key = image.canonicalKey();
      for (std::size_t j = 0; j < entries.size(); ++j)
        if (keys[j] == key) {
          int a = find(static_cast<int>(i)), bb = find(static_cast<int>(j));
          if (a != bb) parent[static_cast<std::size_t>(a)] = bb;
        }
    }
  }
  std::set<int> roots;
  for (std::size_t i = 0; i < entries.size(); ++i) roots.insert(find(static_cast<int>(i)));
  return static_cast<int>(roots.size());
}

MatchReport verifyAgainstCatalog(const TypeLabel& type, const EnumerateOptions& opts) {
  MatchReport rep;
  auto enumerated = enumeratePicardOne(type, opts);
  auto catalog = referenceCatalog(type);
  std::set<std::string> got, want;
  for (const auto& e : enumerated) got.insert(e.canonicalKey());
  for (const auto& e : catalog) want.insert(e.canonicalKey());
  for (const auto& k : want)
    if (!got.count(k)) rep.missing.push_back(k);
  for (const auto& k : got)
    if (!want.count(k)) rep.extra.push_back(k);
  rep.entries = static_cast<int>(enumerated.size());
  rep.orbits = countOrbits(enumerated);
  int catalogOrbits = countOrbits(catalog);
  rep.match = rep.missing.empty() && rep.extra.empty() && enumerated.size() == catalog.size() &&
              rep.orbits == catalogOrbits;
  return rep;
}

}  // namespace symfan
