#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symfan/root_system.hpp"

using namespace symfan;

namespace {

QVector qv(std::initializer_list<Rational> xs) { return qvec(xs); }

bool containsVector(const std::vector<QVector>& vs, const QVector& v) {
  for (const auto& w : vs)
    if (equal(w, v)) return true;
  return false;
}

}  // namespace

TEST_CASE("realizations") {
  RootSystem a2 = RootSystem::build("A2");
  CHECK(a2.roots().size() == 6);
  CHECK(a2.ambientDim() == 3);
  CHECK(equal(a2.simpleRoots()[0], qv({1, -1, 0})));

  RootSystem bc2 = RootSystem::build("BC2");
  CHECK(bc2.roots().size() == 12);  // 2l^2 + 2l distinct vectors
  CHECK_FALSE(bc2.reduced());
  CHECK(containsVector(bc2.roots(), qv({0, 1})));
  CHECK(containsVector(bc2.roots(), qv({0, 2})));

  RootSystem b2 = RootSystem::build("B2");
  CHECK(equal(b2.simpleRoots()[0], qv({1, -1})));
  CHECK(equal(b2.simpleRoots()[1], qv({0, 1})));

  CHECK(RootSystem::build("D4").roots().size() == 24);
  CHECK(RootSystem::build("G2").roots().size() == 12);
  CHECK(RootSystem::build("F4").roots().size() == 48);
  CHECK(RootSystem::build("E6").roots().size() == 72);
  CHECK(RootSystem::build("E7").roots().size() == 126);
  CHECK(RootSystem::build("E8").roots().size() == 240);
  CHECK(RootSystem::build("A1xA1").roots().size() == 4);

  CHECK_THROWS_AS(RootSystem::build("E9"), std::domain_error);
  CHECK_THROWS_AS(RootSystem::build("F3"), std::domain_error);
}

TEST_CASE("coroots") {
  RootSystem a2 = RootSystem::build("A2");
  CHECK(equal(a2.coroot(a2.simpleRoots()[0]), a2.simpleRoots()[0]));

  RootSystem b2 = RootSystem::build("B2");
  CHECK(equal(b2.coroot(qv({0, 1})), qv({0, 2})));

  // BC: b = 1/2 on the doubled roots makes the coroot set equal the root set
  for (int l = 1; l <= 4; ++l) {
    RootSystem bc = RootSystem::build("BC" + std::to_string(l));
    QVector el = QVector::Zero(l);
    el[l - 1] = 1;
    CHECK(equal(bc.coroot(el), el));
    CHECK(equal(bc.coroot(QVector(2 * el)), el));
    for (const auto& r : bc.roots()) CHECK(bc.isRoot(bc.coroot(r)));
  }

  CHECK_THROWS_AS(b2.coroot(qv({2, 1})), std::domain_error);
}

TEST_CASE("fundamental weights and coweights") {
  // (w_i, a_j^v) = delta and (w_i^v, a_j) = delta for every built system
  for (const char* label : {"A1", "A3", "B2", "B4", "C3", "BC1", "BC3", "D4", "D5", "E6", "E7",
                            "E8", "F4", "G2", "A1xA1"}) {
    RootSystem rs = RootSystem::build(label);
    for (int i = 0; i < rs.rank(); ++i)
      for (int j = 0; j < rs.rank(); ++j) {
        Rational wij = rs.pair(rs.fundamentalWeights()[static_cast<std::size_t>(i)],
                               rs.simpleCoroots()[static_cast<std::size_t>(j)]);
        Rational cij = rs.pair(rs.fundamentalCoweights()[static_cast<std::size_t>(i)],
                               rs.simpleRoots()[static_cast<std::size_t>(j)]);
        CHECK(wij == (i == j ? 1 : 0));
        CHECK(cij == (i == j ? 1 : 0));
      }
  }

  RootSystem b2 = RootSystem::build("B2");
  CHECK(equal(b2.fundamentalCoweights()[0], qv({1, 0})));
  CHECK(equal(b2.fundamentalCoweights()[1], qv({1, 1})));
  // -w2^v = -2 w1^v + a1^v
  CHECK(equal(QVector(-b2.fundamentalCoweights()[1]),
              QVector(-2 * b2.fundamentalCoweights()[0] + b2.simpleCoroots()[0])));

  RootSystem a1 = RootSystem::build("A1");
  CHECK(equal(a1.fundamentalCoweights()[0], QVector(a1.simpleCoroots()[0] / Rational(2))));
}

TEST_CASE("weyl reflections") {
  RootSystem a2 = RootSystem::build("A2");
  const QVector& a1 = a2.simpleRoots()[0];
  CHECK(equal(a2.reflect(a1, a1), QVector(-a1)));
  QVector orth = a2.fundamentalWeights()[1];  // (w2, a1^v) = 0
  CHECK(equal(a2.reflect(a1, orth), orth));
  CHECK(equal(a2.reflect(a1, a2.fundamentalWeights()[0]),
              QVector(a2.fundamentalWeights()[0] - a1)));
}

TEST_CASE("simple reflections permute the roots and close into W") {
  for (const char* label : {"A3", "B3", "C3", "BC2", "D4", "G2", "F4", "E6"}) {
    RootSystem rs = RootSystem::build(label);
    for (const auto& r : rs.roots())
      for (const auto& s : rs.simpleRoots()) CHECK(rs.isRoot(rs.reflect(s, r)));
    // orbit closure of each simple root stays inside the root set and is
    // finite; with the doubled roots excluded the orbit count is bounded by
    // the number of roots
    for (const auto& s : rs.simpleRoots()) {
      std::vector<QVector> orbit = {s};
      for (std::size_t i = 0; i < orbit.size(); ++i)
        for (const auto& t : rs.simpleRoots()) {
          QVector w = rs.reflect(t, orbit[i]);
          if (!containsVector(orbit, w)) orbit.push_back(w);
        }
      CHECK(orbit.size() <= rs.roots().size());
    }
  }
}

TEST_CASE("parabolic subsystems") {
  RootSystem b3 = RootSystem::build("B3");
  auto sub = b3.parabolicSubsystem({0, 1});
  REQUIRE(sub.components.size() == 1);
  CHECK(sub.components[0].type == TypeComponent{Family::A, 2});
  CHECK(sub.roots.size() == 6);

  auto empty = b3.parabolicSubsystem({});
  CHECK(empty.components.empty());
  CHECK(empty.roots.empty());

  RootSystem d4 = RootSystem::build("D4");
  auto a3 = d4.parabolicSubsystem({0, 1, 2});
  REQUIRE(a3.components.size() == 1);
  CHECK(a3.components[0].type == TypeComponent{Family::A, 3});

  // the branch plus outer nodes of D4 is again D-type, not A
  auto d4sub = d4.parabolicSubsystem({0, 1, 2, 3});
  REQUIRE(d4sub.components.size() == 1);
  CHECK(d4sub.components[0].type == TypeComponent{Family::D, 4});

  // non-reduced piece: the short end of BC_l
  RootSystem bc2 = RootSystem::build("BC2");
  auto bc1 = bc2.parabolicSubsystem({1});
  REQUIRE(bc1.components.size() == 1);
  CHECK(bc1.components[0].type == TypeComponent{Family::BC, 1});
  CHECK_FALSE(bc1.typeIsProductOfA());
  auto a1 = bc2.parabolicSubsystem({0});
  CHECK(a1.components[0].type == TypeComponent{Family::A, 1});

  // disconnected choice splits into components
  RootSystem a4 = RootSystem::build("A4");
  auto two = a4.parabolicSubsystem({0, 2, 3});
  CHECK(two.components.size() == 2);
  CHECK(two.typeIsProductOfA());

  RootSystem f4 = RootSystem::build("F4");
  // lengths (long, short, short) give C3; (long, long, short) give B3
  auto c3sub = f4.parabolicSubsystem({1, 2, 3});
  REQUIRE(c3sub.components.size() == 1);
  CHECK(c3sub.components[0].type.family == Family::C);
  auto b3sub = f4.parabolicSubsystem({0, 1, 2});
  REQUIRE(b3sub.components.size() == 1);
  CHECK(b3sub.components[0].type.family == Family::B);
}

TEST_CASE("diagram endpoints and automorphisms") {
  CHECK(RootSystem::build("A4").diagramEndpoints() == std::vector<int>{0, 3});
  CHECK(RootSystem::build("D4").diagramEndpoints() == std::vector<int>{0, 2, 3});
  CHECK(RootSystem::build("E6").diagramEndpoints() == std::vector<int>{0, 1, 5});
  CHECK(RootSystem::build("A1xA1").diagramEndpoints() == std::vector<int>{0, 1});

  CHECK(RootSystem::build("A3").diagramAutomorphisms().size() == 2);
  CHECK(RootSystem::build("B3").diagramAutomorphisms().size() == 1);
  CHECK(RootSystem::build("D4").diagramAutomorphisms().size() == 6);  // triality
  CHECK(RootSystem::build("D5").diagramAutomorphisms().size() == 2);
  CHECK(RootSystem::build("E6").diagramAutomorphisms().size() == 2);
  CHECK(RootSystem::build("A1xA1").diagramAutomorphisms().size() == 2);
  CHECK(RootSystem::build("BC2").diagramAutomorphisms().size() == 1);

  // the automorphism matrix permutes the roots and fixes the form
  RootSystem d4 = RootSystem::build("D4");
  for (const auto& perm : d4.diagramAutomorphisms()) {
    QMatrix t = d4.automorphismMatrix(perm);
    for (const auto& r : d4.roots()) CHECK(d4.isRoot(QVector(t * r)));
    for (int i = 0; i < d4.rank(); ++i)
      for (int j = 0; j < d4.rank(); ++j) {
        Rational lhs = d4.pair(QVector(t * d4.simpleRoots()[static_cast<std::size_t>(i)]),
                               QVector(t * d4.simpleRoots()[static_cast<std::size_t>(j)]));
        CHECK(lhs == d4.pair(d4.simpleRoots()[static_cast<std::size_t>(i)],
                             d4.simpleRoots()[static_cast<std::size_t>(j)]));
      }
  }
}

TEST_CASE("weyl saturation") {
  RootSystem a2 = RootSystem::build("A2");
  Cone c = Cone::fromGenerators({a2.fundamentalWeights()[0]}, 3);

  // empty reflection set: unchanged
  CHECK(weylSaturateCone(a2, {}, c) == c);

  // saturating a W-stable cone is the identity; saturation is idempotent
  Cone dom = a2.dominantChamber();
  std::vector<QVector> simple = a2.simpleRoots();
  Cone sat = weylSaturateCone(a2, simple, dom);
  CHECK(sat.contains(dom));
  Cone sat2 = weylSaturateCone(a2, simple, sat);
  CHECK(sat == sat2);

  // monotonicity
  CHECK(weylSaturateCone(a2, simple, c).contains(c));

  // the slice shape: saturating cone(lambda_1, lambda_2) for the A2 chain
  // with lambda_i the partial sums gives cone(e_1, e_2, e_3)-style vectors
  // e_{i+1} = lambda_{i+1} - lambda_i
  QVector l1 = qv({1, 0, 0});
  QVector l2 = qv({1, 1, 0});
  QVector l3 = qv({1, 1, 1});
  Cone lam = Cone::fromGenerators({l1, l2, l3}, 3);
  Cone slice = weylSaturateCone(a2, simple, lam);
  Cone expected = Cone::fromGenerators({l1, QVector(l2 - l1), QVector(l3 - l2)}, 3);
  CHECK(slice == expected);
}
