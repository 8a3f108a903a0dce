#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symfan/cone.hpp"
#include "symfan/root_system.hpp"

#include <random>

using namespace symfan;

namespace {

QVector qv(std::initializer_list<Rational> xs) { return qvec(xs); }

std::mt19937 rng(77031);

Cone randomCone(Eigen::Index dim, int gens) {
  std::uniform_int_distribution<int> d(-3, 3);
  std::vector<QVector> vs;
  for (int i = 0; i < gens; ++i) {
    QVector v(dim);
    for (Eigen::Index j = 0; j < dim; ++j) v[j] = d(rng);
    vs.push_back(v);
  }
  return Cone::fromGenerators(vs, dim);
}

}  // namespace

TEST_CASE("generator canonicalization") {
  Cone c = Cone::fromGenerators({qv({1, 0}), qv({0, 1}), qv({1, 1})}, 2);
  REQUIRE(c.rays().size() == 2);
  CHECK(equal(c.rays()[0], qv({0, 1})));
  CHECK(equal(c.rays()[1], qv({1, 0})));

  Cone zero = Cone::fromGenerators({}, 2);
  CHECK(zero.isTrivial());
  CHECK(zero.dim() == 0);

  // A2: cone(a1, -w1-w2) has exactly those two rays
  RootSystem a2 = RootSystem::build("A2");
  QVector v = -a2.fundamentalWeights()[0] - a2.fundamentalWeights()[1];
  Cone cc = Cone::fromGenerators({a2.simpleRoots()[0], v}, 3);
  CHECK(cc.rays().size() == 2);
  CHECK(cc.dim() == 2);

  // scaling generators does not change the cone
  Cone scaled = Cone::fromGenerators({qv({2, 0}), qv({0, 3}), qv({5, 7})}, 2);
  Cone plain = Cone::fromGenerators({qv({1, 0}), qv({0, 1})}, 2);
  CHECK(scaled == plain);
}

TEST_CASE("lineality") {
  Cone half = Cone::fromGenerators({qv({1, 0}), qv({-1, 0}), qv({0, 1})}, 2);
  CHECK(half.linealityBasis().size() == 1);
  CHECK(half.rays().size() == 1);
  CHECK(half.contains(qv({-5, 0})));
  CHECK_FALSE(half.contains(qv({0, -1})));
  CHECK_THROWS_AS(half.faces(), std::domain_error);

  Cone full = Cone::fromGenerators({qv({1, 0}), qv({-1, 0}), qv({0, 1}), qv({0, -1})}, 2);
  CHECK(full.linealityBasis().size() == 2);
  CHECK(full.rays().empty());
  CHECK(full.relintContains(qv({0, 0})));
}

TEST_CASE("dual cones") {
  // the first orthant is self-dual
  Cone orth = Cone::fromGenerators({qv({1, 0, 0}), qv({0, 1, 0}), qv({0, 0, 1})}, 3);
  QMatrix id = QMatrix::Identity(3, 3);
  CHECK(dualCone(orth, id) == orth);

  // G2: the dual basis of {a2^v, -w2^v} is {-a1, -a2-2a1}
  RootSystem g2 = RootSystem::build("G2");
  QVector a1 = g2.simpleRoots()[0], a2v = g2.simpleCoroots()[1];
  QVector mw2v = -g2.fundamentalCoweights()[1];
  Cone c = Cone::fromGenerators({a2v, mw2v}, 2);
  Cone dual = dualCone(c, g2.form());
  QVector d1 = -a1;
  QVector d2 = -g2.simpleRoots()[1] - 2 * a1;
  CHECK(dual == Cone::fromGenerators({d1, d2}, 2));
  CHECK(g2.pair(d1, a2v) == 1);
  CHECK(g2.pair(d1, mw2v) == 0);
  CHECK(g2.pair(d2, a2v) == 0);
  CHECK(g2.pair(d2, mw2v) == 1);

  // duality is an involution on random cones (acceptance runs 500; a smaller
  // sample here keeps the unit suite quick)
  for (int trial = 0; trial < 120; ++trial) {
    Eigen::Index dim = 2 + trial % 4;
    Cone r = randomCone(dim, 2 + trial % 5);
    QMatrix idd = QMatrix::Identity(dim, dim);
    CHECK(dualCone(dualCone(r, idd), idd) == r);
    CHECK(r.polar().polar() == r);
  }
}

TEST_CASE("faces") {
  Cone simp = Cone::fromGenerators({qv({1, 0}), qv({1, 2})}, 2);
  CHECK(simp.faces().size() == 4);

  Cone ray = Cone::fromGenerators({qv({1, 1, 0})}, 3);
  CHECK(ray.faces().size() == 2);

  // simplicial cones on a basis have 2^l faces
  RootSystem b3 = RootSystem::build("B3");
  std::vector<QVector> gens = {b3.simpleCoroots()[0], b3.simpleCoroots()[1],
                               QVector(-b3.fundamentalCoweights()[0])};
  Cone c = Cone::fromGenerators(gens, 3);
  REQUIRE(c.isSimplicial());
  auto fs = c.faces();
  CHECK(fs.size() == 8);
  // closed under intersection, every face of a face is a face
  for (const auto& f : fs)
    for (const auto& g : fs) {
      Cone meet = f.intersect(g);
      CHECK(std::find(fs.begin(), fs.end(), meet) != fs.end());
      if (f.isPointed())
        for (const auto& sub : f.faces())
          CHECK(std::find(fs.begin(), fs.end(), sub) != fs.end());
    }

  // a non-simplicial pointed cone still enumerates correctly: square cone
  Cone square = Cone::fromGenerators(
      {qv({1, 1, 1}), qv({-1, 1, 1}), qv({1, -1, 1}), qv({-1, -1, 1})}, 3);
  CHECK_FALSE(square.isSimplicial());
  CHECK(square.faces().size() == 10);  // 1 + 4 + 4 + 1
}

TEST_CASE("membership and relative interiors") {
  RootSystem a2 = RootSystem::build("A2");
  // relint of the coroot ray misses -C+
  Cone ray = Cone::fromGenerators({a2.simpleCoroots()[0]}, 3);
  CHECK_FALSE(relintMeetsRegion(ray, a2.valuationCone()));

  // relint_meets(C, C) for C != 0
  Cone c = Cone::fromGenerators({qv({1, 0}), qv({1, 1})}, 2);
  CHECK(relintMeets(c, c));
  CHECK_FALSE(relintMeets(c, Cone::fromGenerators({qv({-1, 0})}, 2)));

  // -a1 and -a1-a2 lie in cone(a2, -w1-w2)
  QVector v = -a2.fundamentalWeights()[0] - a2.fundamentalWeights()[1];
  Cone big = Cone::fromGenerators({a2.simpleRoots()[1], v}, 3);
  CHECK(big.contains(QVector(-a2.simpleRoots()[0])));
  CHECK(big.contains(QVector(-a2.simpleRoots()[0] - a2.simpleRoots()[1])));

  // additivity of membership
  for (int trial = 0; trial < 40; ++trial) {
    Cone r = randomCone(3, 4);
    std::uniform_int_distribution<int> d(-2, 2);
    QVector x(3), y(3);
    for (int i = 0; i < 3; ++i) {
      x[i] = d(rng);
      y[i] = d(rng);
    }
    if (r.contains(x) && r.contains(y)) CHECK(r.contains(QVector(x + y)));
  }
}

TEST_CASE("covering") {
  RootSystem a2 = RootSystem::build("A2");
  QVector v = -a2.fundamentalCoweights()[0] - a2.fundamentalCoweights()[1];
  Cone c1 = Cone::fromGenerators({a2.simpleCoroots()[0], v}, 3);
  Cone c2 = Cone::fromGenerators({a2.simpleCoroots()[1], v}, 3);
  auto res = coneCovers(a2.valuationCone(), {c1, c2});
  CHECK(res.covered);

  // E6 single candidate cone does not cover; -3 w1 is the classical witness
  RootSystem e6 = RootSystem::build("E6");
  std::vector<QVector> gens;
  for (int i : {0, 2, 3, 4, 5}) gens.push_back(e6.simpleCoroots()[static_cast<std::size_t>(i)]);
  gens.push_back(-e6.fundamentalCoweights()[5]);
  Cone cand = Cone::fromGenerators(gens, 6);
  auto res6 = coneCovers(e6.valuationCone(), {cand});
  CHECK_FALSE(res6.covered);
  QVector witness = -3 * e6.fundamentalCoweights()[0];
  CHECK(e6.valuationCone().contains(witness));
  CHECK_FALSE(cand.contains(witness));

  // target inside the first piece
  Cone small = Cone::fromGenerators({qv({1, 0}), qv({1, 1})}, 2);
  Cone bigger = Cone::fromGenerators({qv({1, 0}), qv({0, 1})}, 2);
  CHECK(coneCovers(small, {bigger}).covered);
  auto bad = coneCovers(bigger, {small});
  CHECK_FALSE(bad.covered);
  REQUIRE(bad.witness.has_value());
  CHECK(bigger.contains(*bad.witness));
  CHECK_FALSE(small.contains(*bad.witness));

  // brute-force cross-check on a planar split: two halves cover the quadrant
  Cone quad = Cone::fromGenerators({qv({1, 0}), qv({0, 1})}, 2);
  Cone left = Cone::fromGenerators({qv({1, 1}), qv({0, 1})}, 2);
  Cone right = Cone::fromGenerators({qv({1, 0}), qv({1, 1})}, 2);
  CHECK(coneCovers(quad, {left, right}).covered);
  CHECK_FALSE(coneCovers(quad, {left}).covered);
  // dense rational sampling can only confirm "false" witnesses; check that
  // every sampled point of the target lies in some piece when covered
  for (int x = 0; x <= 6; ++x)
    for (int y = 0; y <= 6; ++y) {
      QVector p = qv({frac(x, 3), frac(y, 2)});
      if (!quad.contains(p)) continue;
      CHECK((left.contains(p) || right.contains(p)));
    }
}
