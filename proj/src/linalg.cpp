#include "symfan/linalg.hpp"

#include <algorithm>

namespace symfan {

QVector primitiveDirection(const QVector& v) {
  Integer den = 1;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v[i].get_den().get_mpz_t());
  Integer num = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    Integer scaled = v[i].get_num() * (den / v[i].get_den());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), scaled.get_mpz_t());
  }
  if (num == 0) throw std::domain_error("primitiveDirection: zero vector");
  QVector out(v.size());
  Rational scale = Rational(den) / Rational(num);
  for (Eigen::Index i = 0; i < v.size(); ++i) out[i] = v[i] * scale;
  return out;
}

Rational parseRational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  auto slash = text.find('/');
  auto digits = [](const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  std::string num = slash == std::string::npos ? text : text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!digits(num) || !digits(den))
    throw std::invalid_argument("malformed rational '" + text + "'");
  Rational q(num + "/" + den);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

std::string toString(const Rational& x) { return x.get_str(); }

std::string toString(const QVector& v) {
  std::string s = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].get_str();
  }
  return s + ")";
}

QMatrix columnsToMatrix(const std::vector<QVector>& cols, Eigen::Index dim) {
  QMatrix m(dim, static_cast<Eigen::Index>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) m.col(static_cast<Eigen::Index>(j)) = cols[j];
  return m;
}

std::vector<QVector> matrixToColumns(const QMatrix& m) {
  std::vector<QVector> cols;
  cols.reserve(static_cast<std::size_t>(m.cols()));
  for (Eigen::Index j = 0; j < m.cols(); ++j) cols.push_back(m.col(j));
  return cols;
}

Eigen::Index rankOf(const QMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  Eigen::FullPivLU<QMatrix> lu(m);
  lu.setThreshold(Rational(0));
  return lu.rank();
}

std::optional<QVector> solve(const QMatrix& a, const QVector& b) {
  if (a.cols() == 0) return isZero(b) ? std::optional<QVector>(QVector::Zero(0)) : std::nullopt;
  Eigen::FullPivLU<QMatrix> lu(a);
  lu.setThreshold(Rational(0));
  QVector x = lu.solve(b);
  QVector check = a * x;
  for (Eigen::Index i = 0; i < b.size(); ++i)
    if (check[i] != b[i]) return std::nullopt;
  return x;
}

std::vector<QVector> kernelBasis(const QMatrix& a) {
  if (a.cols() == 0) return {};
  if (a.rows() == 0) {
    std::vector<QVector> out;
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      QVector e = QVector::Zero(a.cols());
      e[j] = 1;
      out.push_back(e);
    }
    return out;
  }
  Eigen::FullPivLU<QMatrix> lu(a);
  lu.setThreshold(Rational(0));
  QMatrix k = lu.kernel();
  std::vector<QVector> out;
  if (lu.rank() == a.cols()) return out;  // kernel() returns a zero column then
  for (Eigen::Index j = 0; j < k.cols(); ++j) out.push_back(k.col(j));
  return out;
}

namespace {

// In-place row reduction step: make m(r, c) the gcd of column c at rows >= r.
void reduceColumn(ZMatrix& m, Eigen::Index r, Eigen::Index c) {
  const Eigen::Index rows = m.rows();
  while (true) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = r; i < rows; ++i)
      if (m(i, c) != 0 && (piv < 0 || abs(m(i, c)) < abs(m(piv, c)))) piv = i;
    if (piv < 0) return;
    if (piv != r) m.row(piv).swap(m.row(r));
    bool clean = true;
    for (Eigen::Index i = r + 1; i < rows; ++i) {
      if (m(i, c) == 0) continue;
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), m(i, c).get_mpz_t(), m(r, c).get_mpz_t());
      if (q != 0) m.row(i) -= m.row(r) * q;
      if (m(i, c) != 0) clean = false;
    }
    if (clean) return;
  }
}

}  // namespace

ZMatrix hermiteNormalForm(ZMatrix m) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  Eigen::Index r = 0;
  std::vector<Eigen::Index> pivots;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    reduceColumn(m, r, c);
    if (m(r, c) == 0) continue;
    if (m(r, c) < 0) m.row(r) = -m.row(r);
    // reduce entries above the pivot into [0, pivot)
    for (Eigen::Index i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), m(i, c).get_mpz_t(), m(r, c).get_mpz_t());
      if (q != 0) m.row(i) -= m.row(r) * q;
    }
    pivots.push_back(c);
    ++r;
  }
  ZMatrix out(r, cols);
  for (Eigen::Index i = 0; i < r; ++i) out.row(i) = m.row(i);
  return out;
}

SmithResult smithNormalForm(ZMatrix m) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  SmithResult res;
  res.u = ZMatrix::Identity(rows, rows);
  res.v = ZMatrix::Identity(cols, cols);
  const Eigen::Index n = std::min(rows, cols);
  for (Eigen::Index t = 0; t < n; ++t) {
    while (true) {
      // smallest nonzero entry of the trailing block as pivot
      Eigen::Index pi = -1, pj = -1;
      for (Eigen::Index i = t; i < rows; ++i)
        for (Eigen::Index j = t; j < cols; ++j)
          if (m(i, j) != 0 && (pi < 0 || abs(m(i, j)) < abs(m(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi < 0) break;  // block is zero
      if (pi != t) {
        m.row(pi).swap(m.row(t));
        res.u.row(pi).swap(res.u.row(t));
      }
      if (pj != t) {
        m.col(pj).swap(m.col(t));
        res.v.col(pj).swap(res.v.col(t));
      }
      bool clean = true;
      for (Eigen::Index i = t + 1; i < rows; ++i) {
        if (m(i, t) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), m(i, t).get_mpz_t(), m(t, t).get_mpz_t());
        m.row(i) -= m.row(t) * q;
        res.u.row(i) -= res.u.row(t) * q;
        if (m(i, t) != 0) clean = false;
      }
      for (Eigen::Index j = t + 1; j < cols; ++j) {
        if (m(t, j) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), m(t, j).get_mpz_t(), m(t, t).get_mpz_t());
        m.col(j) -= m.col(t) * q;
        res.v.col(j) -= res.v.col(t) * q;
        if (m(t, j) != 0) clean = false;
      }
      if (!clean) continue;  // remainders shrink the minimum; iterate
      // pivot divides its cleared row/column; enforce divisibility of the block
      bool fixed = false;
      for (Eigen::Index i = t + 1; i < rows && !fixed; ++i)
        for (Eigen::Index j = t + 1; j < cols && !fixed; ++j)
          if (m(i, j) % m(t, t) != 0) {
            m.row(t) += m.row(i);
            res.u.row(t) += res.u.row(i);
            fixed = true;
          }
      if (!fixed) break;
    }
    if (t < n && m(t, t) < 0) {
      m.row(t) = -m.row(t);
      res.u.row(t) = -res.u.row(t);
    }
  }
  for (Eigen::Index t = 0; t < n; ++t) res.divisors.push_back(m(t, t));
  return res;
}

std::pair<ZMatrix, Integer> clearDenominators(const QMatrix& m) {
  Integer den = 1;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), m(i, j).get_den().get_mpz_t());
  ZMatrix z(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      z(i, j) = m(i, j).get_num() * (den / m(i, j).get_den());
  return {z, den};
}

}  // namespace symfan
