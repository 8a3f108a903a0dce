#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symfan/lattice.hpp"
#include "symfan/root_system.hpp"

#include <random>

using namespace symfan;

namespace {

// Independent membership oracle: v is in the Z-span of gens iff some integer
// combination with coefficients in [-bound, bound] hits it (valid whenever
// the witness coefficients are small, which the tests arrange).
bool bruteForceContains(const std::vector<QVector>& gens, const QVector& v, int bound) {
  std::vector<int> c(gens.size(), -bound);
  if (gens.empty()) return isZero(v);
  while (true) {
    QVector sum = QVector::Zero(v.size());
    for (std::size_t i = 0; i < gens.size(); ++i) sum += gens[i] * Rational(c[i]);
    if (equal(sum, v)) return true;
    std::size_t k = 0;
    while (k < c.size()) {
      if (++c[k] <= bound) break;
      c[k] = -bound;
      ++k;
    }
    if (k == c.size()) return false;
  }
}

QVector qv(std::initializer_list<int> xs) {
  QVector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (int x : xs) v[i++] = x;
  return v;
}

std::mt19937 rng(20240817);

QVector randomVector(Eigen::Index dim, int lo = -4, int hi = 4) {
  std::uniform_int_distribution<int> d(lo, hi);
  QVector v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) v[i] = d(rng);
  return v;
}

}  // namespace

TEST_CASE("hnf basis canonicalization") {
  // frozen via the brute-force membership oracle: the lattice spanned by
  // (2,0),(0,2),(1,1) is the index-2 sublattice {x+y even}
  std::vector<QVector> gens = {qv({2, 0}), qv({0, 2}), qv({1, 1})};
  Lattice l = Lattice::fromGenerators(gens, 2);
  REQUIRE(l.rank() == 2);
  CHECK(equal(l.basis()[0], qv({1, 1})));
  CHECK(equal(l.basis()[1], qv({0, 2})));
  for (int x = -3; x <= 3; ++x)
    for (int y = -3; y <= 3; ++y) {
      QVector v = qv({x, y});
      CHECK(l.contains(v) == bruteForceContains(gens, v, 4));
    }

  Lattice single = Lattice::fromGenerators({qv({1, 0})}, 2);
  REQUIRE(single.rank() == 1);
  CHECK(equal(single.basis()[0], qv({1, 0})));

  Lattice zero = Lattice::fromGenerators({qv({0, 0})}, 2);
  CHECK(zero.rank() == 0);
}

TEST_CASE("hnf idempotence and generator-order independence") {
  std::uniform_int_distribution<int> nd(1, 5);
  for (int trial = 0; trial < 60; ++trial) {
    Eigen::Index dim = 2 + trial % 4;
    std::vector<QVector> gens;
    int n = nd(rng);
    for (int i = 0; i < n; ++i) gens.push_back(randomVector(dim));
    Lattice l1 = Lattice::fromGenerators(gens, dim);
    Lattice l2 = Lattice::fromGenerators(l1.basis(), dim);
    CHECK(l1 == l2);
    std::shuffle(gens.begin(), gens.end(), rng);
    CHECK(Lattice::fromGenerators(gens, dim) == l1);
  }
}

TEST_CASE("lattice membership") {
  // root lattice of A2 does not contain the first fundamental weight
  RootSystem a2 = RootSystem::build("A2");
  const Lattice& root = a2.rootLattice();
  QVector w1 = a2.fundamentalWeights()[0];
  CHECK_FALSE(root.contains(w1));
  CHECK(bruteForceContains(a2.simpleRoots(), w1, 4) == false);
  CHECK(root.contains(QVector(3 * w1)));  // index of root in weight is 3

  Lattice z2 = Lattice::standard(2);
  CHECK(z2.contains(qv({0, 0})));

  Lattice even = Lattice::fromGenerators({qv({1, -1}), qv({0, 2})}, 2);
  CHECK(even.contains(qv({1, 1})));
}

TEST_CASE("primitivity") {
  Lattice z2 = Lattice::standard(2);
  CHECK_FALSE(z2.isPrimitive(qv({2, 2})));
  CHECK(z2.isPrimitive(qv({2, 3})));
  CHECK_THROWS_AS(z2.isPrimitive(qv({0, 0})), std::domain_error);
  CHECK_THROWS_AS(z2.isPrimitive(QVector(qv({1, 1}) / Rational(2))), std::domain_error);

  // -w1^v - w2^v is primitive in the coweight lattice of A1 x A1
  RootSystem prod = RootSystem::build("A1xA1");
  QVector v = -prod.fundamentalCoweights()[0] - prod.fundamentalCoweights()[1];
  CHECK(prod.coweightLattice().isPrimitive(v));
}

TEST_CASE("lattice bases") {
  Lattice z2 = Lattice::standard(2);
  // B2 coweight lattice is Z^2; {a1^v, -w1^v} is a basis
  RootSystem b2 = RootSystem::build("B2");
  std::vector<QVector> vs = {b2.simpleCoroots()[0], QVector(-b2.fundamentalCoweights()[0])};
  CHECK(b2.coweightLattice().isBasis(vs));
  CHECK_FALSE(z2.isBasis({qv({1, 0}), qv({2, 0})}));
  CHECK_FALSE(z2.isBasis({qv({1, 0}), qv({1, 2})}));
  CHECK_FALSE(z2.isBasis({qv({1, 0})}));  // wrong cardinality

  // every member of a basis is primitive
  for (int trial = 0; trial < 40; ++trial) {
    QVector a = randomVector(3), b = randomVector(3), c = randomVector(3);
    Lattice l = Lattice::fromGenerators({a, b, c}, 3);
    if (l.rank() != 3) continue;
    CHECK(l.isBasis(l.basis()));
    for (const auto& v : l.basis()) CHECK(l.isPrimitive(v));
  }
}

TEST_CASE("lattice index") {
  RootSystem a2 = RootSystem::build("A2");
  auto idx = Lattice::index(a2.rootLattice(), a2.weightLattice());
  REQUIRE(idx.has_value());
  CHECK(*idx == 3);
  // oracle: count cosets of the root lattice among weight-lattice points
  {
    const auto& wb = a2.weightLattice().basis();
    std::vector<QVector> pts;
    for (int x = 0; x < 4; ++x)
      for (int y = 0; y < 4; ++y) pts.push_back(wb[0] * Rational(x) + wb[1] * Rational(y));
    std::vector<QVector> reps;
    for (const auto& v : pts) {
      bool found = false;
      for (const auto& r : reps)
        if (a2.rootLattice().contains(QVector(v - r))) found = true;
      if (!found) reps.push_back(v);
    }
    CHECK(reps.size() == 3);
  }

  CHECK(*Lattice::index(a2.rootLattice(), a2.rootLattice()) == 1);

  RootSystem bc3 = RootSystem::build("BC3");
  CHECK(*Lattice::index(bc3.rootLattice(), bc3.weightLattice()) == 1);

  // containment violations are domain errors
  Lattice z2 = Lattice::standard(2);
  Lattice shifted = Lattice::fromGenerators({QVector(qv({1, 1}) / Rational(2))}, 2);
  CHECK_THROWS_AS(Lattice::index(shifted, z2), std::domain_error);

  // rank drop: infinite index
  Lattice line = Lattice::fromGenerators({qv({1, 0})}, 2);
  CHECK_FALSE(Lattice::index(line, z2).has_value());
}

TEST_CASE("index multiplicativity on random chains") {
  for (int trial = 0; trial < 30; ++trial) {
    Eigen::Index dim = 2 + trial % 4;  // rank up to 5
    Lattice sup = Lattice::standard(dim);
    // sub-chain: scale some basis vectors
    std::uniform_int_distribution<int> sc(1, 3);
    std::vector<QVector> mid, sub;
    for (Eigen::Index i = 0; i < dim; ++i) {
      int a = sc(rng);
      mid.push_back(sup.basis()[static_cast<std::size_t>(i)] * Rational(a));
    }
    Lattice midL = Lattice::fromGenerators(mid, dim);
    for (const auto& b : midL.basis()) sub.push_back(b * Rational(sc(rng)));
    Lattice subL = Lattice::fromGenerators(sub, dim);
    auto i1 = Lattice::index(subL, midL);
    auto i2 = Lattice::index(midL, sup);
    auto i3 = Lattice::index(subL, sup);
    REQUIRE(i1.has_value());
    REQUIRE(i2.has_value());
    REQUIRE(i3.has_value());
    CHECK(*i1 * *i2 == *i3);
  }
}

TEST_CASE("dual lattice") {
  RootSystem a2 = RootSystem::build("A2");
  QMatrix id3 = QMatrix::Identity(3, 3);
  // oracle: dual basis = B (B^T B)^{-1} computed right here
  {
    const auto& wb = a2.weightLattice().basis();
    QMatrix b(3, 2);
    b.col(0) = wb[0];
    b.col(1) = wb[1];
    QMatrix gram = b.transpose() * b;
    Eigen::FullPivLU<QMatrix> lu(gram);
    lu.setThreshold(Rational(0));
    QMatrix dual = b * lu.inverse();
    Lattice oracle = Lattice::fromGenerators({QVector(dual.col(0)), QVector(dual.col(1))}, 3);
    CHECK(a2.weightLattice().dual(id3) == oracle);
  }
  CHECK(a2.weightLattice().dual(id3) == a2.corootLattice());

  Lattice z3 = Lattice::standard(3);
  CHECK(z3.dual(id3) == z3);

  for (int trial = 0; trial < 40; ++trial) {
    Eigen::Index dim = 2 + trial % 3;
    std::vector<QVector> gens;
    for (Eigen::Index i = 0; i < dim; ++i) gens.push_back(randomVector(dim));
    Lattice l = Lattice::fromGenerators(gens, dim);
    if (l.rank() != dim) continue;
    QMatrix id = QMatrix::Identity(dim, dim);
    CHECK(l.dual(id).dual(id) == l);
  }
}
