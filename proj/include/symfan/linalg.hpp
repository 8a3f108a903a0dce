// Exact linear algebra helpers: rational solves/kernels via full-pivot LU,
// integer Hermite and Smith normal forms for lattice arithmetic.

#pragma once

#include "symfan/arith.hpp"

#include <optional>
#include <vector>

namespace symfan {

// Columns of `mat` are the vectors of interest.
QMatrix columnsToMatrix(const std::vector<QVector>& cols, Eigen::Index dim);
std::vector<QVector> matrixToColumns(const QMatrix& m);

Eigen::Index rankOf(const QMatrix& m);

// Exact solution of A x = b; nullopt when inconsistent.  When the system is
// underdetermined an arbitrary solution is returned.
std::optional<QVector> solve(const QMatrix& a, const QVector& b);

// Basis of the kernel {x : A x = 0}.
std::vector<QVector> kernelBasis(const QMatrix& a);

// Row-style Hermite normal form of an integer matrix.  Returns the canonical
// basis-in-rows matrix with zero rows dropped: pivot columns strictly
// increase, pivots are positive, entries above each pivot are reduced into
// [0, pivot).  The result is the unique HNF basis of the row lattice.
ZMatrix hermiteNormalForm(ZMatrix m);

// Smith normal form: returns diag entries d_1 | d_2 | ... (nonnegative) and
// unimodular U, V with U * M * V = S.
struct SmithResult {
  std::vector<Integer> divisors;  // length min(rows, cols)
  ZMatrix u;                      // rows x rows, unimodular
  ZMatrix v;                      // cols x cols, unimodular
};
SmithResult smithNormalForm(ZMatrix m);

// Scales rational columns by the least common denominator D and returns the
// integer matrix together with D.
std::pair<ZMatrix, Integer> clearDenominators(const QMatrix& m);

inline Rational toRational(const Integer& z) { return Rational(z); }

}  // namespace symfan
