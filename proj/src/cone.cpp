#include "symfan/cone.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>

namespace symfan {

namespace {

struct VRep {
  std::vector<QVector> rays;
  std::vector<QVector> lin;
};

// Active-constraint sets as bitmasks over the processed constraints.
struct Mask {
  std::array<std::uint64_t, 4> w{};  // up to 256 constraints
  void set(std::size_t i) { w[i >> 6] |= std::uint64_t(1) << (i & 63); }
  bool subsetOf(const Mask& o) const {
    for (int i = 0; i < 4; ++i)
      if (w[i] & ~o.w[i]) return false;
    return true;
  }
  Mask intersect(const Mask& o) const {
    Mask r;
    for (int i = 0; i < 4; ++i) r.w[i] = w[i] & o.w[i];
    return r;
  }
};

// Double description: intersect the full space with halfspaces {a.x >= 0}.
// The minimal V-representation is maintained inductively: rays on the kept
// side stay extreme, and a positive/negative pair combines into an extreme
// ray iff no third ray's active set contains the pair's common active set
// (exact for minimal representations).
VRep ddm(const std::vector<QVector>& constraints, Eigen::Index dim,
         std::optional<VRep> start = std::nullopt) {
  VRep v;
  std::vector<Mask> masks;  // active sets of v.rays, aligned
  std::size_t processed = 0;
  if (constraints.size() > 250) throw std::logic_error("ddm: too many constraints");
  if (start) {
    v = *start;
    // start must be a full space (the only use); active sets empty
    masks.assign(v.rays.size(), Mask{});
  } else {
    for (Eigen::Index i = 0; i < dim; ++i) {
      QVector e = QVector::Zero(dim);
      e[i] = 1;
      v.lin.push_back(e);
    }
  }

  for (const auto& a : constraints) {
    if (isZero(a)) continue;
    // stage 1: remove a lineality direction that sees the constraint
    Eigen::Index hit = -1;
    for (std::size_t i = 0; i < v.lin.size(); ++i)
      if (dot(a, v.lin[i]) != 0) {
        hit = static_cast<Eigen::Index>(i);
        break;
      }
    if (hit >= 0) {
      QVector v0 = v.lin[static_cast<std::size_t>(hit)];
      Rational av0 = dot(a, v0);
      if (av0 < 0) {
        v0 = -v0;
        av0 = -av0;
      }
      std::vector<QVector> newLin;
      for (std::size_t i = 0; i < v.lin.size(); ++i) {
        if (static_cast<Eigen::Index>(i) == hit) continue;
        newLin.push_back(v.lin[i] - v0 * (dot(a, v.lin[i]) / av0));
      }
      std::vector<QVector> newRays;
      std::vector<Mask> newMasks;
      for (std::size_t i = 0; i < v.rays.size(); ++i) {
        QVector rr = v.rays[i] - v0 * (dot(a, v.rays[i]) / av0);
        if (isZero(rr)) continue;
        newRays.push_back(primitiveDirection(rr));
        Mask m = masks[i];
        m.set(processed);  // the adjusted ray is active on a
        newMasks.push_back(m);
      }
      newRays.push_back(primitiveDirection(v0));
      // a former lineality vector is active on every processed constraint
      Mask full;
      for (std::size_t i = 0; i < processed; ++i) full.set(i);
      newMasks.push_back(full);
      v.lin = std::move(newLin);
      v.rays = std::move(newRays);
      masks = std::move(newMasks);
      ++processed;
      continue;
    }
    // stage 2: split rays
    std::vector<std::size_t> pos, zer, neg;
    std::vector<Rational> vals(v.rays.size());
    for (std::size_t i = 0; i < v.rays.size(); ++i) {
      vals[i] = dot(a, v.rays[i]);
      if (vals[i] > 0)
        pos.push_back(i);
      else if (vals[i] < 0)
        neg.push_back(i);
      else
        zer.push_back(i);
    }
    if (neg.empty()) {
      for (std::size_t i : zer) masks[i].set(processed);
      ++processed;
      continue;
    }
    std::vector<QVector> keep;
    std::vector<Mask> keepMasks;
    for (std::size_t i : pos) {
      keep.push_back(v.rays[i]);
      keepMasks.push_back(masks[i]);
    }
    for (std::size_t i : zer) {
      Mask m = masks[i];
      m.set(processed);
      keep.push_back(v.rays[i]);
      keepMasks.push_back(m);
    }
    for (std::size_t p : pos)
      for (std::size_t n : neg) {
        // adjacency: no third ray's active set contains the common one
        Mask common = masks[p].intersect(masks[n]);
        bool adjacent = true;
        for (std::size_t r = 0; r < v.rays.size() && adjacent; ++r)
          if (r != p && r != n && common.subsetOf(masks[r])) adjacent = false;
        if (!adjacent) continue;
        QVector c = v.rays[n] * vals[p] - v.rays[p] * vals[n];
        if (isZero(c)) continue;
        Mask m = common;
        m.set(processed);
        keep.push_back(primitiveDirection(c));
        keepMasks.push_back(m);
      }
    v.rays = std::move(keep);
    masks = std::move(keepMasks);
    ++processed;
  }
  return v;
}

// Canonical basis of the saturated integer lattice of the span of `vecs`.
std::vector<QVector> saturatedBasis(const std::vector<QVector>& vecs, Eigen::Index dim) {
  if (vecs.empty()) return {};
  QMatrix m(dim, static_cast<Eigen::Index>(vecs.size()));
  for (std::size_t j = 0; j < vecs.size(); ++j) m.col(static_cast<Eigen::Index>(j)) = vecs[j];
  // annihilator rows: kernel of m^T
  auto ann = kernelBasis(m.transpose());
  ZMatrix c;
  if (ann.empty()) {
    c = ZMatrix::Zero(0, dim);
  } else {
    QMatrix cq(static_cast<Eigen::Index>(ann.size()), dim);
    for (std::size_t i = 0; i < ann.size(); ++i) cq.row(static_cast<Eigen::Index>(i)) = ann[i].transpose();
    c = clearDenominators(cq).first;
  }
  // integer kernel of c via SNF
  if (c.rows() == 0) {
    std::vector<QVector> out;
    for (Eigen::Index i = 0; i < dim; ++i) {
      QVector e = QVector::Zero(dim);
      e[i] = 1;
      out.push_back(e);
    }
    return out;
  }
  auto s = smithNormalForm(c);
  Eigen::Index r = 0;
  for (const auto& d : s.divisors)
    if (d != 0) ++r;
  std::vector<QVector> gens;
  for (Eigen::Index j = r; j < dim; ++j) {
    QVector g(dim);
    for (Eigen::Index i = 0; i < dim; ++i) g[i] = Rational(s.v(i, j));
    gens.push_back(g);
  }
  // HNF rows for canonical order/shape
  if (gens.empty()) return {};
  QMatrix rowsQ(static_cast<Eigen::Index>(gens.size()), dim);
  for (std::size_t i = 0; i < gens.size(); ++i) rowsQ.row(static_cast<Eigen::Index>(i)) = gens[i].transpose();
  ZMatrix h = hermiteNormalForm(clearDenominators(rowsQ).first);
  std::vector<QVector> out;
  for (Eigen::Index i = 0; i < h.rows(); ++i) {
    QVector b(dim);
    for (Eigen::Index j = 0; j < dim; ++j) b[j] = Rational(h(i, j));
    out.push_back(b);
  }
  return out;
}

// Zero the pivot coordinates of `r` against canonical lineality rows.
QVector reduceModLineality(QVector r, const std::vector<QVector>& lin) {
  for (const auto& b : lin) {
    Eigen::Index p = 0;
    while (p < b.size() && b[p] == 0) ++p;
    if (p == b.size()) continue;
    if (r[p] != 0) r -= b * (r[p] / b[p]);
  }
  return r;
}

std::vector<QVector> canonicalRays(const std::vector<QVector>& rays, const std::vector<QVector>& lin) {
  std::vector<QVector> out;
  for (const auto& r : rays) {
    QVector rr = reduceModLineality(r, lin);
    if (isZero(rr)) continue;
    rr = primitiveDirection(rr);
    bool dup = false;
    for (const auto& k : out)
      if (equal(k, rr)) {
        dup = true;
        break;
      }
    if (!dup) out.push_back(rr);
  }
  std::sort(out.begin(), out.end(), lexLess);
  return out;
}

}  // namespace

Cone Cone::fromGenerators(const std::vector<QVector>& gens, Eigen::Index dim) {
  for (const auto& g : gens)
    if (g.size() != dim) throw std::domain_error("cone generator has wrong dimension");
  Cone c;
  c.dim_ = dim;
  std::vector<QVector> nz;
  for (const auto& g : gens)
    if (!isZero(g)) nz.push_back(g);

  VRep pol = ddm(nz, dim);
  c.dualLin_ = saturatedBasis(pol.lin, dim);
  c.dualRays_ = canonicalRays(pol.rays, c.dualLin_);

  // the minimal V-representation of the cone itself: a second pass over its
  // inequality system (the bipolar)
  std::vector<QVector> constraints = c.dualRays_;
  for (const auto& l : c.dualLin_) {
    constraints.push_back(l);
    constraints.push_back(-l);
  }
  VRep prim = ddm(constraints, dim);
  c.lin_ = saturatedBasis(prim.lin, dim);
  c.rays_ = canonicalRays(prim.rays, c.lin_);
  return c;
}

Cone Cone::fromInequalities(const std::vector<QVector>& normals, Eigen::Index dim) {
  VRep v = ddm(normals, dim);
  std::vector<QVector> gens = v.rays;
  for (const auto& l : v.lin) {
    gens.push_back(l);
    gens.push_back(-l);
  }
  return fromGenerators(gens, dim);
}

Eigen::Index Cone::dim() const {
  return dim_ - static_cast<Eigen::Index>(dualLin_.size());
}

bool Cone::isSimplicial() const {
  if (!lin_.empty()) return false;
  return static_cast<Eigen::Index>(rays_.size()) == dim();
}

bool Cone::contains(const QVector& v) const {
  if (v.size() != dim_) throw std::domain_error("dimension mismatch");
  for (const auto& l : dualLin_)
    if (dot(l, v) != 0) return false;
  for (const auto& n : dualRays_)
    if (dot(n, v) < 0) return false;
  return true;
}

bool Cone::contains(const Cone& other) const {
  for (const auto& r : other.rays_)
    if (!contains(r)) return false;
  for (const auto& l : other.lin_)
    if (!contains(l) || !contains(QVector(-l))) return false;
  return true;
}

bool Cone::relintContains(const QVector& v) const {
  if (v.size() != dim_) throw std::domain_error("dimension mismatch");
  for (const auto& l : dualLin_)
    if (dot(l, v) != 0) return false;
  for (const auto& n : dualRays_)
    if (dot(n, v) <= 0) return false;
  return true;
}

QVector Cone::relintPoint() const {
  QVector p = QVector::Zero(dim_);
  for (const auto& r : rays_) p += r;
  return p;
}

Cone Cone::intersect(const Cone& other) const {
  if (dim_ != other.dim_) throw std::domain_error("dimension mismatch");
  std::vector<QVector> normals;
  auto push = [&](const std::vector<QVector>& ns, bool equality) {
    for (const auto& n : ns) {
      normals.push_back(n);
      if (equality) normals.push_back(-n);
    }
  };
  push(dualRays_, false);
  push(dualLin_, true);
  push(other.dualRays_, false);
  push(other.dualLin_, true);
  return fromInequalities(normals, dim_);
}

Cone Cone::intersectHalfspace(const QVector& normal) const {
  std::vector<QVector> normals;
  for (const auto& n : dualRays_) normals.push_back(n);
  for (const auto& l : dualLin_) {
    normals.push_back(l);
    normals.push_back(-l);
  }
  normals.push_back(normal);
  return fromInequalities(normals, dim_);
}

Cone Cone::polar() const {
  Cone p;
  p.dim_ = dim_;
  p.rays_ = dualRays_;
  p.lin_ = dualLin_;
  p.dualRays_ = rays_;
  p.dualLin_ = lin_;
  return p;
}

Cone Cone::fromDualPair(Eigen::Index dim, std::vector<QVector> rays, std::vector<QVector> lin,
                        std::vector<QVector> polarRays, std::vector<QVector> polarLin) {
  Cone c;
  c.dim_ = dim;
  c.lin_ = saturatedBasis(lin, dim);
  c.rays_ = canonicalRays(rays, c.lin_);
  c.dualLin_ = saturatedBasis(polarLin, dim);
  c.dualRays_ = canonicalRays(polarRays, c.dualLin_);
  return c;
}

std::vector<Cone> Cone::faces() const {
  if (!lin_.empty()) throw std::domain_error("faces: cone is not pointed");
  std::set<Cone> seen;
  if (isSimplicial()) {
    const std::size_t k = rays_.size();
    for (std::size_t mask = 0; mask < (1u << k); ++mask) {
      std::vector<QVector> sub;
      for (std::size_t i = 0; i < k; ++i)
        if (mask & (1u << i)) sub.push_back(rays_[i]);
      seen.insert(fromGenerators(sub, dim_));
    }
  } else {
    std::vector<Cone> queue = {*this};
    seen.insert(*this);
    while (!queue.empty()) {
      Cone f = queue.back();
      queue.pop_back();
      for (const auto& n : f.dualRays_) {
        std::vector<QVector> sub;
        for (const auto& r : f.rays_)
          if (dot(n, r) == 0) sub.push_back(r);
        Cone child = fromGenerators(sub, dim_);
        if (seen.insert(child).second) queue.push_back(child);
      }
      if (!f.rays_.empty()) seen.insert(zero(dim_));
    }
  }
  return std::vector<Cone>(seen.begin(), seen.end());
}

bool Cone::operator==(const Cone& other) const {
  if (dim_ != other.dim_ || rays_.size() != other.rays_.size() || lin_.size() != other.lin_.size())
    return false;
  for (std::size_t i = 0; i < rays_.size(); ++i)
    if (!equal(rays_[i], other.rays_[i])) return false;
  for (std::size_t i = 0; i < lin_.size(); ++i)
    if (!equal(lin_[i], other.lin_[i])) return false;
  return true;
}

bool Cone::operator<(const Cone& other) const {
  auto cmp = [](const std::vector<QVector>& a, const std::vector<QVector>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (equal(a[i], b[i])) continue;
      return lexLess(a[i], b[i]) ? -1 : 1;
    }
    return 0;
  };
  int c = cmp(rays_, other.rays_);
  if (c != 0) return c < 0;
  return cmp(lin_, other.lin_) < 0;
}

std::string Cone::toString() const {
  std::ostringstream os;
  os << "cone{";
  for (std::size_t i = 0; i < rays_.size(); ++i) {
    if (i) os << " ";
    os << symfan::toString(rays_[i]);
  }
  if (!lin_.empty()) {
    os << " lin:";
    for (const auto& l : lin_) os << symfan::toString(l);
  }
  os << "}";
  return os.str();
}

Cone dualCone(const Cone& c, const QMatrix& form) {
  // dual_M(C) = M^{-1} polar(C) and its polar is M C; linear isomorphisms
  // preserve extremality, so the stored pair maps across directly.
  bool identity = true;
  for (Eigen::Index i = 0; i < form.rows() && identity; ++i)
    for (Eigen::Index j = 0; j < form.cols() && identity; ++j)
      if (form(i, j) != (i == j ? 1 : 0)) identity = false;
  if (identity) return c.polar();
  Eigen::FullPivLU<QMatrix> lu(form);
  lu.setThreshold(Rational(0));
  QMatrix inv = lu.inverse();
  std::vector<QVector> rays, lin, prays, plin;
  for (const auto& r : c.facetNormals()) rays.push_back(inv * r);
  for (const auto& l : c.spanNormals()) lin.push_back(inv * l);
  for (const auto& r : c.rays()) prays.push_back(form * r);
  for (const auto& l : c.linealityBasis()) plin.push_back(form * l);
  return Cone::fromDualPair(c.ambientDim(), rays, lin, prays, plin);
}

namespace {

// A relative-interior point of the intersection of the given cones, computed
// from one double-description pass over the pooled inequality systems.
QVector intersectionRelintPoint(std::initializer_list<const Cone*> cones, Eigen::Index dim) {
  std::vector<QVector> normals;
  for (const Cone* c : cones) {
    for (const auto& n : c->facetNormals()) normals.push_back(n);
    for (const auto& l : c->spanNormals()) {
      normals.push_back(l);
      normals.push_back(-l);
    }
  }
  VRep v = ddm(normals, dim);
  QVector p = QVector::Zero(dim);
  for (const auto& r : v.rays) p += r;
  return p;
}

}  // namespace

bool relintMeets(const Cone& a, const Cone& b) {
  QVector p = intersectionRelintPoint({&a, &b}, a.ambientDim());
  return a.relintContains(p) && b.relintContains(p);
}

bool relintsMeetWithin(const Cone& a, const Cone& b, const Cone& within) {
  QVector p = intersectionRelintPoint({&a, &b, &within}, a.ambientDim());
  return a.relintContains(p) && b.relintContains(p) && within.contains(p);
}

bool relintMeetsRegion(const Cone& c, const Cone& region) {
  QVector p = intersectionRelintPoint({&c, &region}, c.ambientDim());
  return c.relintContains(p) && region.contains(p);
}

namespace {

bool coverRecurse(const Cone& region, const std::vector<Cone>& pieces,
                  const std::vector<QVector>& normals, std::size_t idx, CoverResult& out) {
  if (region.isTrivial()) return true;
  for (const auto& p : pieces)
    if (p.contains(region)) return true;
  for (std::size_t i = idx; i < normals.size(); ++i) {
    const QVector& n = normals[i];
    bool pos = false, neg = false;
    for (const auto& r : region.rays()) {
      Rational s = dot(n, r);
      if (s > 0) pos = true;
      if (s < 0) neg = true;
    }
    for (const auto& l : region.linealityBasis())
      if (dot(n, l) != 0) pos = neg = true;
    if (pos && neg) {
      return coverRecurse(region.intersectHalfspace(n), pieces, normals, i + 1, out) &&
             coverRecurse(region.intersectHalfspace(QVector(-n)), pieces, normals, i + 1, out);
    }
  }
  // leaf: one definite side of every normal, and no piece contains it
  out.witness = region.relintPoint();
  return false;
}

}  // namespace

CoverResult coneCovers(const Cone& target, const std::vector<Cone>& pieces) {
  std::vector<QVector> normals;
  for (const auto& p : pieces) {
    for (const auto& n : p.facetNormals()) normals.push_back(n);
    for (const auto& l : p.spanNormals()) normals.push_back(l);
  }
  CoverResult res;
  res.covered = coverRecurse(target, pieces, normals, 0, res);
  return res;
}

}  // namespace symfan
