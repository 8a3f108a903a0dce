// Exact scalar types and Eigen bindings used throughout the library.
//
// Every quantity in this library is an exact rational (GMP mpq) or an exact
// arbitrary-precision integer (GMP mpz).  No floating point anywhere: the
// verdicts computed downstream are exact equalities and lattice memberships,
// which rounding would falsify.

#pragma once

#include <gmpxx.h>

#include <Eigen/Dense>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  typedef mpz_class Real;
  typedef mpq_class NonInteger;
  typedef mpz_class Nested;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

}  // namespace Eigen

namespace symfan {

using Rational = mpq_class;
using Integer = mpz_class;

using QVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using QMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using ZVector = Eigen::Matrix<Integer, Eigen::Dynamic, 1>;
using ZMatrix = Eigen::Matrix<Integer, Eigen::Dynamic, Eigen::Dynamic>;

// mpq_class(p, q) does not canonicalize; GMP comparisons assume canonical
// form, so every fraction goes through here.
inline Rational frac(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline QVector qvec(std::initializer_list<Rational> xs) {
  QVector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (const auto& x : xs) v[i++] = x;
  return v;
}

inline bool isZero(const QVector& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (v[i] != 0) return false;
  return true;
}

inline bool equal(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) return false;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

// Strict lexicographic order on coordinate vectors; total, used for canonical
// sorting of ray lists and lattice bases.
inline bool lexLess(const QVector& a, const QVector& b) {
  for (Eigen::Index i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] < b[i]) return true;
    if (a[i] > b[i]) return false;
  }
  return a.size() < b.size();
}

// Smallest positive rational multiple of v with integer coprime coordinates.
// Direction is preserved (the scale factor is positive).  v must be nonzero.
QVector primitiveDirection(const QVector& v);

// Standard dot product (exact).
inline Rational dot(const QVector& a, const QVector& b) {
  Rational s = 0;
  for (Eigen::Index i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Bilinear pairing a^T M b for a symmetric form M.
inline Rational pairing(const QMatrix& form, const QVector& a, const QVector& b) {
  Rational s = 0;
  for (Eigen::Index i = 0; i < form.rows(); ++i) {
    if (a[i] == 0) continue;
    Rational row = 0;
    for (Eigen::Index j = 0; j < form.cols(); ++j) row += form(i, j) * b[j];
    s += a[i] * row;
  }
  return s;
}

// Parses "p", "-p", "p/q" with q > 0 implied by canonicalization; rejects
// zero denominators and malformed text.
Rational parseRational(const std::string& text);

std::string toString(const Rational& x);
std::string toString(const QVector& v);

}  // namespace symfan
