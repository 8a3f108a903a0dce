#include "symfan/root_system.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace symfan {

namespace {

const char* familyName(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::E: return "E";
    case Family::F: return "F";
    case Family::G: return "G";
    case Family::BC: return "BC";
  }
  return "?";
}

void checkAdmissible(Family f, int rank) {
  bool ok = rank >= 1;
  switch (f) {
    case Family::A: ok = rank >= 1; break;
    case Family::B: ok = rank >= 2; break;
    case Family::C: ok = rank >= 2; break;
    case Family::D: ok = rank >= 3; break;
    case Family::BC: ok = rank >= 1; break;
    case Family::E: ok = rank >= 6 && rank <= 8; break;
    case Family::F: ok = rank == 4; break;
    case Family::G: ok = rank == 2; break;
  }
  if (!ok) {
    std::ostringstream os;
    os << "invalid root system type " << familyName(f) << rank;
    throw std::domain_error(os.str());
  }
}

QVector unit(Eigen::Index dim, Eigen::Index i) {
  QVector e = QVector::Zero(dim);
  e[i] = 1;
  return e;
}

struct Realization {
  Eigen::Index dim;
  std::vector<QVector> simple;
  std::vector<QVector> roots;
  QMatrix form;
};

// Cartan matrices of the exceptional types (Bourbaki numbering; node 2 is
// the branch node for E, alpha_1 is short for G2 as in the source text).
ZMatrix exceptionalCartan(Family f, int rank) {
  auto edges = [&]() -> std::vector<std::pair<int, int>> {
    if (f == Family::E) {
      std::vector<std::pair<int, int>> e = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 4}};
      for (int k = 7; k <= rank; ++k) e.push_back({k - 1, k});
      return e;
    }
    return {};
  }();
  ZMatrix a = ZMatrix::Zero(rank, rank);
  for (int i = 0; i < rank; ++i) a(i, i) = 2;
  if (f == Family::E) {
    for (auto [i, j] : edges) {
      a(i - 1, j - 1) = -1;
      a(j - 1, i - 1) = -1;
    }
  } else if (f == Family::F) {
    a(0, 1) = a(1, 0) = -1;
    a(2, 3) = a(3, 2) = -1;
    a(1, 2) = -2;  // <a2, a3^v>
    a(2, 1) = -1;
  } else if (f == Family::G) {
    a(0, 1) = -1;  // <a1, a2^v>
    a(1, 0) = -3;
  }
  return a;
}

Realization realizeComponent(Family f, int rank) {
  checkAdmissible(f, rank);
  Realization r;
  if (f == Family::A) {
    r.dim = rank + 1;
    r.form = QMatrix::Identity(r.dim, r.dim);
    for (int i = 0; i < rank; ++i) r.simple.push_back(unit(r.dim, i) - unit(r.dim, i + 1));
    for (int i = 0; i <= rank; ++i)
      for (int j = 0; j <= rank; ++j)
        if (i != j) r.roots.push_back(unit(r.dim, i) - unit(r.dim, j));
    return r;
  }
  if (f == Family::B || f == Family::C || f == Family::D || f == Family::BC) {
    r.dim = rank;
    r.form = QMatrix::Identity(r.dim, r.dim);
    for (int i = 0; i + 1 < rank; ++i) r.simple.push_back(unit(r.dim, i) - unit(r.dim, i + 1));
    if (f == Family::B || f == Family::BC)
      r.simple.push_back(unit(r.dim, rank - 1));
    else if (f == Family::C)
      r.simple.push_back(2 * unit(r.dim, rank - 1));
    else
      r.simple.push_back(unit(r.dim, rank - 2) + unit(r.dim, rank - 1));
    for (int i = 0; i < rank; ++i)
      for (int j = i + 1; j < rank; ++j)
        for (int si : {1, -1})
          for (int sj : {1, -1}) {
            QVector v = unit(r.dim, i) * si + unit(r.dim, j) * sj;
            r.roots.push_back(v);
          }
    if (f == Family::B || f == Family::BC)
      for (int i = 0; i < rank; ++i) {
        r.roots.push_back(unit(r.dim, i));
        r.roots.push_back(-unit(r.dim, i));
      }
    if (f == Family::C || f == Family::BC)
      for (int i = 0; i < rank; ++i) {
        r.roots.push_back(2 * unit(r.dim, i));
        r.roots.push_back(-2 * unit(r.dim, i));
      }
    return r;
  }
  // E/F/G: simple-root coordinates, symmetrized Cartan matrix as form
  r.dim = rank;
  ZMatrix a = exceptionalCartan(f, rank);
  // d_i = (a_i, a_i)/2, short roots normalized to squared length 2
  std::vector<Rational> d(rank, 1);
  if (f == Family::F) d = {2, 2, 1, 1};
  if (f == Family::G) d = {1, 3};
  r.form = QMatrix(rank, rank);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) r.form(i, j) = Rational(a(i, j)) * d[j];  // (a_i, a_j) = a_ij d_j = a_ji d_i
  // symmetrize sanity: (a_i, a_j) = a_ji * d_j = a_ij * d_i
  for (int i = 0; i < rank; ++i) r.simple.push_back(unit(rank, i));
  // close the simple roots under simple reflections
  std::set<std::vector<std::string>> seen;
  auto key = [&](const QVector& v) {
    std::vector<std::string> k;
    for (Eigen::Index i = 0; i < v.size(); ++i) k.push_back(v[i].get_str());
    return k;
  };
  std::vector<QVector> queue;
  for (const auto& s : r.simple)
    for (int sign : {1, -1}) {
      QVector v = s * sign;
      if (seen.insert(key(v)).second) queue.push_back(v);
    }
  while (!queue.empty()) {
    QVector v = queue.back();
    queue.pop_back();
    r.roots.push_back(v);
    for (const auto& s : r.simple) {
      Rational num = 2 * pairing(r.form, v, s);
      Rational den = pairing(r.form, s, s);
      QVector w = v - s * (num / den);
      if (seen.insert(key(w)).second) queue.push_back(w);
    }
  }
  return r;
}

}  // namespace

TypeLabel parseTypeLabel(const std::string& text) {
  TypeLabel label;
  std::size_t i = 0;
  while (i < text.size()) {
    std::string fam;
    while (i < text.size() && std::isalpha(static_cast<unsigned char>(text[i])))
      fam += static_cast<char>(std::toupper(static_cast<unsigned char>(text[i++])));
    std::string num;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) num += text[i++];
    if (fam.empty() || num.empty()) throw std::invalid_argument("bad type label '" + text + "'");
    Family f;
    if (fam == "A")
      f = Family::A;
    else if (fam == "B")
      f = Family::B;
    else if (fam == "C")
      f = Family::C;
    else if (fam == "D")
      f = Family::D;
    else if (fam == "E")
      f = Family::E;
    else if (fam == "F")
      f = Family::F;
    else if (fam == "G")
      f = Family::G;
    else if (fam == "BC")
      f = Family::BC;
    else
      throw std::invalid_argument("unknown family '" + fam + "'");
    label.push_back({f, std::stoi(num)});
    if (i < text.size()) {
      if (text[i] != 'x' && text[i] != 'X') throw std::invalid_argument("bad type label '" + text + "'");
      ++i;
      if (i == text.size()) throw std::invalid_argument("bad type label '" + text + "'");
    }
  }
  if (label.empty()) throw std::invalid_argument("empty type label");
  return label;
}

std::string formatTypeLabel(const TypeLabel& label) {
  std::string s;
  for (std::size_t i = 0; i < label.size(); ++i) {
    if (i) s += "x";
    s += familyName(label[i].family);
    s += std::to_string(label[i].rank);
  }
  return s;
}

RootSystem RootSystem::build(const TypeLabel& label) {
  if (label.empty()) throw std::domain_error("empty type label");
  RootSystem rs;
  rs.label_ = label;
  std::vector<Realization> parts;
  Eigen::Index dim = 0;
  for (const auto& tc : label) {
    parts.push_back(realizeComponent(tc.family, tc.rank));
    dim += parts.back().dim;
  }
  rs.dim_ = dim;
  rs.form_ = QMatrix::Zero(dim, dim);
  Eigen::Index off = 0;
  for (const auto& p : parts) {
    rs.form_.block(off, off, p.dim, p.dim) = p.form;
    auto lift = [&](const QVector& v) {
      QVector w = QVector::Zero(dim);
      w.segment(off, p.dim) = v;
      return w;
    };
    for (const auto& s : p.simple) rs.simple_.push_back(lift(s));
    for (const auto& root : p.roots) rs.roots_.push_back(lift(root));
    off += p.dim;
  }
  rs.reduced_ = true;
  for (const auto& tc : label)
    if (tc.family == Family::BC) rs.reduced_ = false;

  for (const auto& s : rs.simple_) rs.simpleCoroots_.push_back(rs.coroot(s));

  // fundamental (co)weights inside the root span:
  // w_i = sum_k c_k a_k with (w_i, a_j^v) = delta_ij.
  const int n = rs.rank();
  QMatrix pairRootCoroot(n, n);  // (a_k, a_j^v)
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j)
      pairRootCoroot(j, k) = pairing(rs.form_, rs.simple_[static_cast<std::size_t>(k)],
                                     rs.simpleCoroots_[static_cast<std::size_t>(j)]);
  Eigen::FullPivLU<QMatrix> luW(pairRootCoroot);
  luW.setThreshold(Rational(0));
  QMatrix coeffW = luW.inverse();
  QMatrix pairRootRoot(n, n);  // (a_k, a_j)
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j)
      pairRootRoot(j, k) = pairing(rs.form_, rs.simple_[static_cast<std::size_t>(k)],
                                   rs.simple_[static_cast<std::size_t>(j)]);
  Eigen::FullPivLU<QMatrix> luCW(pairRootRoot);
  luCW.setThreshold(Rational(0));
  QMatrix coeffCW = luCW.inverse();
  for (int i = 0; i < n; ++i) {
    QVector w = QVector::Zero(dim), cw = QVector::Zero(dim);
    for (int k = 0; k < n; ++k) {
      w += rs.simple_[static_cast<std::size_t>(k)] * coeffW(k, i);
      cw += rs.simple_[static_cast<std::size_t>(k)] * coeffCW(k, i);
    }
    rs.weights_.push_back(w);
    rs.coweights_.push_back(cw);
  }

  rs.rootLattice_ = Lattice::fromGenerators(rs.simple_, dim);
  rs.weightLattice_ = Lattice::fromGenerators(rs.weights_, dim);
  rs.corootLattice_ = Lattice::fromGenerators(rs.simpleCoroots_, dim);
  rs.coweightLattice_ = Lattice::fromGenerators(rs.coweights_, dim);

  rs.dominant_ = Cone::fromGenerators(rs.coweights_, dim);
  std::vector<QVector> neg;
  for (const auto& w : rs.coweights_) neg.push_back(-w);
  rs.valuation_ = Cone::fromGenerators(neg, dim);
  return rs;
}

bool RootSystem::isRoot(const QVector& v) const {
  for (const auto& r : roots_)
    if (equal(r, v)) return true;
  return false;
}

QVector RootSystem::coroot(const QVector& root) const {
  if (!isRoot(root)) throw std::domain_error("coroot: not a root");
  Rational b = isRoot(QVector(2 * root)) ? frac(1, 2) : Rational(1);
  Rational len = pairing(form_, root, root);
  return root * (2 * b / len);
}

Rational RootSystem::cartan(int i, int j) const {
  return pairing(form_, simple_[static_cast<std::size_t>(i)],
                 simpleCoroots_[static_cast<std::size_t>(j)]);
}

QVector RootSystem::reflect(const QVector& root, const QVector& v) const {
  Rational num = 2 * pairing(form_, v, root);
  Rational den = pairing(form_, root, root);
  return v - root * (num / den);
}

bool ParabolicSubsystem::typeIsProductOfA() const {
  for (const auto& c : components)
    if (c.type.family != Family::A) return false;
  return true;
}

ParabolicSubsystem RootSystem::parabolicSubsystem(const std::vector<int>& simpleIndices) const {
  ParabolicSubsystem sub;
  sub.nodes = simpleIndices;
  std::sort(sub.nodes.begin(), sub.nodes.end());
  if (sub.nodes.empty()) return sub;
  for (int i : sub.nodes)
    if (i < 0 || i >= rank()) throw std::domain_error("parabolicSubsystem: bad index");

  // roots lying in the span of the chosen simple roots
  QMatrix span(dim_, static_cast<Eigen::Index>(sub.nodes.size()));
  for (std::size_t j = 0; j < sub.nodes.size(); ++j)
    span.col(static_cast<Eigen::Index>(j)) = simple_[static_cast<std::size_t>(sub.nodes[j])];
  for (const auto& r : roots_)
    if (solve(span, r)) sub.roots.push_back(r);

  // connected components of the induced Dynkin diagram
  std::map<int, int> comp;
  int nComp = 0;
  for (int i : sub.nodes) {
    if (comp.count(i)) continue;
    std::vector<int> stack = {i};
    comp[i] = nComp;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : sub.nodes)
        if (!comp.count(v) && cartan(u, v) != 0) {
          comp[v] = nComp;
          stack.push_back(v);
        }
    }
    ++nComp;
  }
  for (int c = 0; c < nComp; ++c) {
    std::vector<int> nodes;
    for (int i : sub.nodes)
      if (comp[i] == c) nodes.push_back(i);
    SubsystemComponent sc;
    sc.nodes = nodes;
    const int k = static_cast<int>(nodes.size());
    auto adj = [&](int u, int v) { return cartan(u, v) != 0; };
    auto degree = [&](int u) {
      int d = 0;
      for (int v : nodes)
        if (v != u && adj(u, v)) ++d;
      return d;
    };
    bool doubled = false;
    for (int u : nodes)
      if (isRoot(QVector(2 * simple_[static_cast<std::size_t>(u)]))) doubled = true;
    int maxBond = 1;
    for (int u : nodes)
      for (int v : nodes)
        if (u != v && adj(u, v)) {
          Rational b = cartan(u, v) * cartan(v, u);
          if (b == 2) maxBond = std::max(maxBond, 2);
          if (b == 3) maxBond = std::max(maxBond, 3);
        }
    int branches = 0;
    for (int u : nodes)
      if (degree(u) >= 3) ++branches;

    // canonical node order: path order for chains, as-is otherwise
    bool isChain = branches == 0;
    if (isChain && k > 1) {
      int start = -1;
      for (int u : nodes)
        if (degree(u) <= 1) {
          start = u;
          break;
        }
      std::vector<int> order = {start};
      std::set<int> used = {start};
      while (static_cast<int>(order.size()) < k) {
        int last = order.back();
        for (int v : nodes)
          if (!used.count(v) && adj(last, v)) {
            order.push_back(v);
            used.insert(v);
            break;
          }
      }
      sc.nodes = order;
    }

    Family fam;
    if (doubled) {
      fam = Family::BC;
    } else if (k == 1) {
      fam = Family::A;
    } else if (maxBond == 3) {
      fam = Family::G;
    } else if (maxBond == 2) {
      if (!isChain) throw std::logic_error("unrecognized subsystem");
      int a = sc.nodes[0], b = sc.nodes[k - 1];
      bool doubleAtEnd = cartan(sc.nodes[k - 2], b) * cartan(b, sc.nodes[k - 2]) == 2 ||
                         cartan(sc.nodes[1], a) * cartan(a, sc.nodes[1]) == 2;
      if (!doubleAtEnd) {
        fam = Family::F;
      } else {
        // orient the chain so the double edge sits at the far end
        if (cartan(sc.nodes[1], a) * cartan(a, sc.nodes[1]) == 2)
          std::reverse(sc.nodes.begin(), sc.nodes.end());
        int endNode = sc.nodes[k - 1];
        Rational endLen = pair(simple_[static_cast<std::size_t>(endNode)],
                               simple_[static_cast<std::size_t>(endNode)]);
        Rational prevLen = pair(simple_[static_cast<std::size_t>(sc.nodes[k - 2])],
                                simple_[static_cast<std::size_t>(sc.nodes[k - 2])]);
        fam = endLen < prevLen ? Family::B : Family::C;
      }
    } else if (isChain) {
      fam = Family::A;
    } else {
      // one branch node, all simple bonds: D or E by arm lengths
      std::vector<int> arms;
      int center = -1;
      for (int u : nodes)
        if (degree(u) == 3) center = u;
      for (int v : nodes)
        if (v != center && adj(center, v)) {
          int len = 1, prev = center, cur = v;
          while (true) {
            int next = -1;
            for (int w : nodes)
              if (w != prev && w != cur && adj(cur, w)) next = w;
            if (next < 0) break;
            prev = cur;
            cur = next;
            ++len;
          }
          arms.push_back(len);
        }
      std::sort(arms.begin(), arms.end());
      if (arms.size() != 3) throw std::logic_error("unrecognized subsystem");
      if (arms[0] == 1 && arms[1] == 1)
        fam = Family::D;
      else
        fam = Family::E;
    }
    sc.type = {fam, k};
    sub.components.push_back(sc);
  }
  return sub;
}

std::vector<int> RootSystem::diagramEndpoints() const {
  std::vector<int> out;
  for (int i = 0; i < rank(); ++i) {
    int deg = 0;
    for (int j = 0; j < rank(); ++j)
      if (i != j && cartan(i, j) != 0) ++deg;
    if (deg <= 1) out.push_back(i);
  }
  return out;
}

std::vector<std::vector<int>> RootSystem::diagramAutomorphisms() const {
  const int n = rank();
  std::vector<std::vector<int>> result;
  std::vector<int> perm(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  auto consistent = [&](int pos) {
    for (int j = 0; j <= pos; ++j) {
      if (cartan(pos, j) != cartan(perm[static_cast<std::size_t>(pos)], perm[static_cast<std::size_t>(j)]))
        return false;
      if (cartan(j, pos) != cartan(perm[static_cast<std::size_t>(j)], perm[static_cast<std::size_t>(pos)]))
        return false;
    }
    return true;
  };
  std::function<void(int)> rec = [&](int pos) {
    if (pos == n) {
      result.push_back(perm);
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      perm[static_cast<std::size_t>(pos)] = v;
      used[static_cast<std::size_t>(v)] = true;
      if (consistent(pos)) rec(pos + 1);
      used[static_cast<std::size_t>(v)] = false;
    }
    perm[static_cast<std::size_t>(pos)] = -1;
  };
  rec(0);
  return result;
}

QMatrix RootSystem::automorphismMatrix(const std::vector<int>& perm) const {
  const int n = rank();
  // basis: simple roots plus a basis of the form-orthogonal complement
  QMatrix pairings(n, dim_);
  for (int i = 0; i < n; ++i)
    pairings.row(i) = (form_ * simple_[static_cast<std::size_t>(i)]).transpose();
  auto compl_ = kernelBasis(pairings);
  QMatrix src(dim_, dim_), dst(dim_, dim_);
  for (int i = 0; i < n; ++i) {
    src.col(i) = simple_[static_cast<std::size_t>(i)];
    dst.col(i) = simple_[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
  }
  for (std::size_t k = 0; k < compl_.size(); ++k) {
    src.col(n + static_cast<Eigen::Index>(k)) = compl_[k];
    dst.col(n + static_cast<Eigen::Index>(k)) = compl_[k];
  }
  Eigen::FullPivLU<QMatrix> lu(src);
  lu.setThreshold(Rational(0));
  return dst * lu.inverse();
}

Cone weylSaturateCone(const RootSystem& rs, const std::vector<QVector>& reflectionRoots,
                      const Cone& c) {
  std::vector<QVector> gens;
  for (const auto& r : c.rays()) gens.push_back(r);
  for (const auto& l : c.linealityBasis()) {
    gens.push_back(l);
    gens.push_back(-l);
  }
  struct LexCmp {
    bool operator()(const QVector& a, const QVector& b) const { return lexLess(a, b); }
  };
  std::set<QVector, LexCmp> seen;
  std::vector<QVector> queue;
  for (auto& g : gens) {
    if (isZero(g)) continue;
    g = primitiveDirection(g);
    if (seen.insert(g).second) queue.push_back(g);
  }
  std::vector<QVector> closure(queue);
  constexpr std::size_t kOrbitBound = 200000;
  while (!queue.empty()) {
    QVector v = queue.back();
    queue.pop_back();
    for (const auto& root : reflectionRoots) {
      QVector w = primitiveDirection(rs.reflect(root, v));
      if (seen.insert(w).second) {
        queue.push_back(w);
        closure.push_back(w);
        if (closure.size() > kOrbitBound)
          throw std::logic_error("weylSaturateCone: orbit bound exceeded");
      }
    }
  }
  return Cone::fromGenerators(closure, c.ambientDim());
}

}  // namespace symfan
