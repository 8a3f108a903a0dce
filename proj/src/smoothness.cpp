#include "symfan/smoothness.hpp"

#include <algorithm>
#include <sstream>

namespace symfan {

std::string failedConditionName(FailedCondition f) {
  switch (f) {
    case FailedCondition::none: return "none";
    case FailedCondition::exceptional: return "exceptional";
    case FailedCondition::i: return "(i)";
    case FailedCondition::ii: return "(ii)";
    case FailedCondition::iii: return "(iii)";
  }
  return "?";
}

ExceptionalCheck exceptionalObstruction(const SphericalDatum& datum, const ColoredCone& cc) {
  if (cc.cone.dim() != datum.rank())
    throw std::domain_error("exceptionalObstruction: closed orbit is not projective "
                            "(dim C(X) < rank)");
  for (const auto& c : cc.colors)
    if (datum.exceptionalCoroots().count(c.corootIndex))
      return {false, c.corootIndex};
  return {true, -1};
}

ParabolicSubsystem leviRestrictedSystem(const SphericalDatum& datum, const ColoredCone& cc) {
  std::vector<int> full;
  for (int i = 0; i < datum.rank(); ++i) {
    bool wholeFiber = true;
    for (int s = 1; s <= datum.fiberSize(i); ++s)
      if (!cc.colors.count(ColorId{i, s})) wholeFiber = false;
    if (wholeFiber) full.push_back(i);
  }
  return datum.rootSystem().parabolicSubsystem(full);
}

namespace {

// Fundamental weights of an A-type component, inside its span, with respect
// to the given node order (one solve for the whole dual family).
std::vector<QVector> componentFundamentalWeights(const RootSystem& rs,
                                                 const std::vector<int>& nodes) {
  const std::size_t k = nodes.size();
  QMatrix p(k, k);  // (a_t, a_s^v) over the component
  for (std::size_t s = 0; s < k; ++s)
    for (std::size_t t = 0; t < k; ++t)
      p(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(t)) =
          rs.pair(rs.simpleRoots()[static_cast<std::size_t>(nodes[t])],
                  rs.simpleCoroots()[static_cast<std::size_t>(nodes[s])]);
  Eigen::FullPivLU<QMatrix> lu(p);
  lu.setThreshold(Rational(0));
  QMatrix coeff = lu.inverse();
  std::vector<QVector> out;
  for (std::size_t i = 0; i < k; ++i) {
    QVector w = QVector::Zero(rs.ambientDim());
    for (std::size_t t = 0; t < k; ++t)
      w += rs.simpleRoots()[static_cast<std::size_t>(nodes[t])] *
           coeff(static_cast<Eigen::Index>(t), static_cast<Eigen::Index>(i));
    out.push_back(w);
  }
  return out;
}

}  // namespace

SmoothnessReport smoothnessConditions(const SphericalDatum& datum, const ColoredCone& cc) {
  SmoothnessReport rep;
  const RootSystem& rs = datum.rootSystem();
  const int l = datum.rank();
  if (cc.cone.dim() != l)
    throw std::domain_error("smoothnessConditions: closed orbit is not projective");

  ParabolicSubsystem levi = leviRestrictedSystem(datum, cc);

  // (i): every component of type A, and rank >= sum (l_i + 1)
  int sum = 0;
  for (const auto& comp : levi.components) {
    if (comp.type.family != Family::A) {
      rep.failed = FailedCondition::i;
      rep.witness = "Levi restricted system has a component of type " +
                    formatTypeLabel({comp.type});
      return rep;
    }
    sum += comp.type.rank + 1;
  }
  if (sum > l) {
    rep.failed = FailedCondition::i;
    rep.witness = "rank " + std::to_string(l) + " < sum of (l_i + 1) = " + std::to_string(sum);
    return rep;
  }

  // (ii): the primitive generators (in chi_*) form a basis of chi_*(S)
  std::vector<QVector> gens;
  for (const auto& r : cc.cone.rays()) gens.push_back(datum.chiStar().primitiveInLattice(r));
  if (static_cast<int>(gens.size()) != l || !datum.chiStar().isBasis(gens)) {
    rep.failed = FailedCondition::ii;
    rep.witness = "cone generators are not a lattice basis of chi_*(S)";
    return rep;
  }

  // dual basis of chi(S) inside the root span
  QMatrix a(rs.ambientDim(), l);
  for (int j = 0; j < l; ++j) a.col(j) = gens[static_cast<std::size_t>(j)];
  QMatrix gram = a.transpose() * rs.form() * a;
  Eigen::FullPivLU<QMatrix> lu(gram);
  lu.setThreshold(Rational(0));
  QMatrix lambda = a * lu.inverse();  // columns: (lambda_i, gen_j) = delta_ij

  // locate each Levi simple coroot among the generators
  std::vector<int> corootAt;  // per component, per node: generator index
  std::vector<std::vector<int>> componentGen(levi.components.size());
  std::vector<bool> used(static_cast<std::size_t>(l), false);
  for (std::size_t cidx = 0; cidx < levi.components.size(); ++cidx) {
    for (int node : levi.components[cidx].nodes) {
      const QVector& cr = rs.simpleCoroots()[static_cast<std::size_t>(node)];
      int found = -1;
      for (int j = 0; j < l; ++j)
        if (equal(gens[static_cast<std::size_t>(j)], cr)) found = j;
      if (found < 0) {
        rep.failed = FailedCondition::iii;
        rep.witness = "simple coroot " + toString(cr) + " of the Levi system is not a primitive generator";
        return rep;
      }
      componentGen[cidx].push_back(found);
      used[static_cast<std::size_t>(found)] = true;
    }
  }
  std::vector<int> closing;  // generator indices available as lambda^j_{l_j+1}
  for (int j = 0; j < l; ++j)
    if (!used[static_cast<std::size_t>(j)]) closing.push_back(j);

  // all lambda must be spherical weights (chi(S) inside the weight lattice);
  // automatic for admissible data, the decisive step for diagnostic lattices
  for (int j = 0; j < l; ++j)
    if (!rs.weightLattice().contains(QVector(lambda.col(j)))) {
      rep.failed = FailedCondition::iii;
      rep.witness = "dual basis vector " + toString(QVector(lambda.col(j))) +
                    " is not a spherical weight";
      return rep;
    }

  // (iii): search orientations of each A-chain and assignments of closing
  // vectors so that the fundamental-weight identity holds.
  const std::size_t p = levi.components.size();
  std::vector<int> assign(p, -1);
  std::vector<bool> closingUsed(closing.size(), false);
  int accepted = 0;
  IndexedBasis bestIndexing;

  auto tryAll = [&](auto&& self, std::size_t comp) -> void {
    if (comp == p) {
      ++accepted;
      if (accepted == 1) {
        IndexedBasis ib;
        std::vector<bool> taken(closing.size(), false);
        for (std::size_t c = 0; c < p; ++c) {
          std::vector<QVector> group;
          for (int g : componentGen[c]) group.push_back(lambda.col(g));
          group.push_back(lambda.col(closing[static_cast<std::size_t>(assign[c])]));
          taken[static_cast<std::size_t>(assign[c])] = true;
          ib.groups.push_back(group);
        }
        for (std::size_t t = 0; t < closing.size(); ++t)
          if (!taken[t]) ib.groups.push_back({lambda.col(closing[t])});
        bestIndexing = ib;
      }
      return;
    }
    const auto& nodes = levi.components[comp].nodes;
    const int lj = static_cast<int>(nodes.size());
    for (int orient = 0; orient < (lj > 1 ? 2 : 1); ++orient) {
      std::vector<int> order = nodes;
      std::vector<int> genOrder = componentGen[comp];
      if (orient) {
        std::reverse(order.begin(), order.end());
        std::reverse(genOrder.begin(), genOrder.end());
      }
      std::vector<QVector> weights = componentFundamentalWeights(rs, order);
      for (std::size_t t = 0; t < closing.size(); ++t) {
        if (closingUsed[t]) continue;
        // check the identity: omega_i^j = lambda_i^j - (i/(l_j+1)) lambda^j_{l_j+1}
        bool ok = true;
        for (int i = 1; i <= lj && ok; ++i) {
          const QVector& w = weights[static_cast<std::size_t>(i - 1)];
          QVector rhsv = lambda.col(genOrder[static_cast<std::size_t>(i - 1)]) -
                         lambda.col(closing[t]) * frac(i, lj + 1);
          if (!equal(w, rhsv)) ok = false;
        }
        if (!ok) continue;
        closingUsed[t] = true;
        assign[comp] = static_cast<int>(t);
        // commit this orientation for the recorded indexing
        auto saved = componentGen[comp];
        componentGen[comp] = genOrder;
        self(self, comp + 1);
        componentGen[comp] = saved;
        closingUsed[t] = false;
        assign[comp] = -1;
        if (accepted > 1) return;  // uniqueness already settled
      }
    }
  };
  tryAll(tryAll, 0);

  if (accepted == 0) {
    rep.failed = FailedCondition::iii;
    rep.witness = "no indexing of the dual basis matches the fundamental weights";
    return rep;
  }
  rep.smooth = true;
  bestIndexing.unique = accepted == 1;
  rep.indexing = bestIndexing;
  return rep;
}

ToricSlice toricSlice(const SphericalDatum& datum, const ColoredCone& cc) {
  const RootSystem& rs = datum.rootSystem();
  ParabolicSubsystem levi = leviRestrictedSystem(datum, cc);
  std::vector<QVector> reflections;
  for (int node : levi.nodes) reflections.push_back(rs.simpleRoots()[static_cast<std::size_t>(node)]);
  ToricSlice slice;
  Cone cdual = dualCone(cc.cone, rs.form());
  slice.sigmaDual = weylSaturateCone(rs, reflections, cdual);
  slice.sigma = dualCone(slice.sigmaDual, rs.form());
  return slice;
}

bool toricIsSmooth(const SphericalDatum& datum, const ToricSlice& slice) {
  // smooth iff the primitive generators of sigma are part of a basis of
  // chi_*(S): all elementary divisors of their coordinate matrix are 1.
  if (!slice.sigma.isPointed()) return false;
  const auto& rays = slice.sigma.rays();
  if (rays.empty()) return true;
  ZMatrix coords(datum.chiStar().rank(), static_cast<Eigen::Index>(rays.size()));
  for (std::size_t j = 0; j < rays.size(); ++j) {
    QVector prim = datum.chiStar().primitiveInLattice(rays[j]);
    auto z = datum.chiStar().coordinates(prim);
    if (!z) return false;
    coords.col(static_cast<Eigen::Index>(j)) = *z;
  }
  auto s = smithNormalForm(coords);
  Eigen::Index nonzero = 0;
  for (const auto& d : s.divisors)
    if (d != 0) ++nonzero;
  if (nonzero != static_cast<Eigen::Index>(rays.size())) return false;  // dependent rays
  for (const auto& d : s.divisors)
    if (d != 0 && d != 1) return false;
  return true;
}

SmoothnessReport isSmooth(const SphericalDatum& datum, const ColoredCone& cc, CrossCheck mode) {
  SmoothnessReport rep;
  auto exc = exceptionalObstruction(datum, cc);
  if (!exc.pass) {
    rep.failed = FailedCondition::exceptional;
    rep.witness = "color over exceptional coroot " + std::to_string(exc.corootIndex + 1);
  } else {
    rep = smoothnessConditions(datum, cc);
  }
  if (mode == CrossCheck::on) {
    bool toric = toricIsSmooth(datum, toricSlice(datum, cc));
    bool conditions = exc.pass ? rep.smooth : smoothnessConditions(datum, cc).smooth;
    if (toric != conditions)
      throw std::logic_error("smoothness engines disagree on " + cc.toString());
  }
  return rep;
}

}  // namespace symfan
