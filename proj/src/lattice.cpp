#include "symfan/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace symfan {

namespace {

// Rows of the returned matrix are the canonical basis of the lattice spanned
// by the rows of `rows` scaled by 1/den.
std::vector<QVector> canonicalBasis(const std::vector<QVector>& gens, Eigen::Index dim) {
  if (gens.empty()) return {};
  QMatrix rowsQ(static_cast<Eigen::Index>(gens.size()), dim);
  for (std::size_t i = 0; i < gens.size(); ++i) rowsQ.row(static_cast<Eigen::Index>(i)) = gens[i].transpose();
  auto [z, den] = clearDenominators(rowsQ);
  ZMatrix h = hermiteNormalForm(z);
  // The intrinsic denominator of the lattice is the lcm of the denominators
  // of any basis; recompute the HNF at that scale so equal lattices get
  // byte-identical bases.
  Integer intrinsic = 1;
  for (Eigen::Index i = 0; i < h.rows(); ++i)
    for (Eigen::Index j = 0; j < h.cols(); ++j) {
      Rational q = Rational(h(i, j)) / Rational(den);
      q.canonicalize();
      mpz_lcm(intrinsic.get_mpz_t(), intrinsic.get_mpz_t(), q.get_den().get_mpz_t());
    }
  if (intrinsic != den) {
    ZMatrix z2(h.rows(), h.cols());
    for (Eigen::Index i = 0; i < h.rows(); ++i)
      for (Eigen::Index j = 0; j < h.cols(); ++j) {
        Rational q = Rational(h(i, j)) * Rational(intrinsic) / Rational(den);
        q.canonicalize();
        z2(i, j) = q.get_num();  // exact by choice of intrinsic
      }
    h = hermiteNormalForm(z2);
    den = intrinsic;
  }
  std::vector<QVector> basis;
  for (Eigen::Index i = 0; i < h.rows(); ++i) {
    QVector b(dim);
    for (Eigen::Index j = 0; j < dim; ++j) {
      b[j] = Rational(h(i, j)) / Rational(den);
      b[j].canonicalize();
    }
    basis.push_back(b);
  }
  return basis;
}

}  // namespace

Lattice Lattice::fromGenerators(const std::vector<QVector>& gens, Eigen::Index ambientDim) {
  Lattice l;
  l.ambient_ = ambientDim;
  std::vector<QVector> nonzero;
  for (const auto& g : gens) {
    if (g.size() != ambientDim) throw std::domain_error("lattice generator has wrong dimension");
    if (!isZero(g)) nonzero.push_back(g);
  }
  l.basis_ = canonicalBasis(nonzero, ambientDim);
  l.buildSolver();
  return l;
}

void Lattice::buildSolver() {
  if (basis_.empty()) {
    solver_.reset();
    return;
  }
  auto s = std::make_shared<Solver>();
  s->basis = QMatrix(ambient_, rank());
  for (Eigen::Index j = 0; j < rank(); ++j) s->basis.col(j) = basis_[static_cast<std::size_t>(j)];
  QMatrix gram = s->basis.transpose() * s->basis;
  Eigen::FullPivLU<QMatrix> lu(gram);
  lu.setThreshold(Rational(0));
  s->pseudo = lu.inverse() * s->basis.transpose();
  solver_ = std::move(s);
}

Lattice Lattice::standard(Eigen::Index dim) {
  std::vector<QVector> gens;
  for (Eigen::Index i = 0; i < dim; ++i) {
    QVector e = QVector::Zero(dim);
    e[i] = 1;
    gens.push_back(e);
  }
  return fromGenerators(gens, dim);
}

std::optional<QVector> Lattice::spanCoordinates(const QVector& v) const {
  if (v.size() != ambient_) throw std::domain_error("dimension mismatch");
  if (!solver_) return isZero(v) ? std::optional<QVector>(QVector::Zero(0)) : std::nullopt;
  QVector x = solver_->pseudo * v;
  QVector back = solver_->basis * x;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (back[i] != v[i]) return std::nullopt;
  return x;
}

std::optional<ZVector> Lattice::coordinates(const QVector& v) const {
  auto x = spanCoordinates(v);
  if (!x) return std::nullopt;
  ZVector z(x->size());
  for (Eigen::Index i = 0; i < x->size(); ++i) {
    if ((*x)[i].get_den() != 1) return std::nullopt;
    z[i] = (*x)[i].get_num();
  }
  return z;
}

bool Lattice::contains(const QVector& v) const {
  if (isZero(v)) return true;
  return coordinates(v).has_value();
}

bool Lattice::isPrimitive(const QVector& v) const {
  if (isZero(v)) throw std::domain_error("isPrimitive: zero vector");
  auto z = coordinates(v);
  if (!z) throw std::domain_error("isPrimitive: vector not in lattice");
  Integer g = 0;
  for (Eigen::Index i = 0; i < z->size(); ++i)
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), (*z)[i].get_mpz_t());
  return g == 1;
}

bool Lattice::isBasis(const std::vector<QVector>& vs) const {
  if (static_cast<Eigen::Index>(vs.size()) != rank()) return false;
  ZMatrix coords(rank(), rank());
  for (std::size_t j = 0; j < vs.size(); ++j) {
    auto z = coordinates(vs[j]);
    if (!z) throw std::domain_error("isBasis: vector not in lattice");
    coords.col(static_cast<Eigen::Index>(j)) = *z;
  }
  auto s = smithNormalForm(coords);
  Integer det = 1;
  for (const auto& d : s.divisors) det *= d;
  return det == 1 || det == -1;
}

QVector Lattice::primitiveInLattice(const QVector& direction) const {
  QVector d = primitiveDirection(direction);
  auto x = spanCoordinates(d);
  if (!x) throw std::domain_error("primitiveInLattice: direction outside lattice span");
  // scale so that all coordinates become integers with gcd 1
  Integer den = 1, num = 0;
  for (Eigen::Index i = 0; i < x->size(); ++i)
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), (*x)[i].get_den().get_mpz_t());
  for (Eigen::Index i = 0; i < x->size(); ++i) {
    Integer scaled = (*x)[i].get_num() * (den / (*x)[i].get_den());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), scaled.get_mpz_t());
  }
  QVector out = d;
  Rational scale = Rational(den) / Rational(num);
  if (scale < 0) scale = -scale;
  for (Eigen::Index i = 0; i < out.size(); ++i) out[i] *= scale;
  return out;
}

std::optional<Integer> Lattice::index(const Lattice& sub, const Lattice& sup) {
  ZMatrix coords(sup.rank(), sub.rank());
  for (Eigen::Index j = 0; j < sub.rank(); ++j) {
    auto z = sup.coordinates(sub.basis_[static_cast<std::size_t>(j)]);
    if (!z) throw std::domain_error("lattice index: sub is not contained in sup");
    coords.col(j) = *z;
  }
  if (sub.rank() < sup.rank()) return std::nullopt;
  auto s = smithNormalForm(coords);
  Integer det = 1;
  for (const auto& d : s.divisors) det *= d;
  if (det < 0) det = -det;
  return det;
}

Lattice Lattice::dual(const QMatrix& innerProduct) const {
  QMatrix b(ambient_, rank());
  for (Eigen::Index j = 0; j < rank(); ++j) b.col(j) = basis_[static_cast<std::size_t>(j)];
  QMatrix gram = b.transpose() * innerProduct * b;
  Eigen::FullPivLU<QMatrix> lu(gram);
  lu.setThreshold(Rational(0));
  if (lu.rank() < rank()) throw std::domain_error("dual: inner product degenerate on span");
  QMatrix dualBasis = b * lu.inverse();
  return fromGenerators(matrixToColumns(dualBasis), ambient_);
}

bool Lattice::operator==(const Lattice& other) const {
  if (ambient_ != other.ambient_ || basis_.size() != other.basis_.size()) return false;
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (!equal(basis_[i], other.basis_[i])) return false;
  return true;
}

bool Lattice::operator<(const Lattice& other) const {
  if (basis_.size() != other.basis_.size()) return basis_.size() < other.basis_.size();
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (equal(basis_[i], other.basis_[i])) continue;
    return lexLess(basis_[i], other.basis_[i]);
  }
  return false;
}

std::string Lattice::toString() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (i) os << " ";
    os << symfan::toString(basis_[i]);
  }
  os << "]";
  return os.str();
}

}  // namespace symfan
