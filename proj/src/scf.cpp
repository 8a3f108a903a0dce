#include "symfan/scf.hpp"

#include <algorithm>
#include <sstream>

namespace symfan {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> toks;
  std::istringstream is(line);
  std::string t;
  while (is >> t) toks.push_back(t);
  return toks;
}

QVector parseCoords(const std::vector<std::string>& toks, std::size_t from, int lineNo) {
  QVector v(static_cast<Eigen::Index>(toks.size() - from));
  for (std::size_t i = from; i < toks.size(); ++i) {
    try {
      v[static_cast<Eigen::Index>(i - from)] = parseRational(toks[i]);
    } catch (const std::exception& e) {
      throw ScfError(lineNo, e.what());
    }
  }
  return v;
}

}  // namespace

ScfDocument parseScf(const std::string& text) {
  ScfDocument doc;
  std::istringstream is(text);
  std::string raw;
  int lineNo = 0;
  bool sawType = false;
  ConeSpec* openCone = nullptr;
  while (std::getline(is, raw)) {
    ++lineNo;
    auto hash = raw.find('#');
    std::string line = hash == std::string::npos ? raw : raw.substr(0, hash);
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    const std::string& cmd = toks[0];
    if (cmd == "rootsystem") {
      if (toks.size() != 2) throw ScfError(lineNo, "rootsystem expects one type label");
      try {
        doc.type = parseTypeLabel(toks[1]);
      } catch (const std::exception& e) {
        throw ScfError(lineNo, e.what());
      }
      sawType = true;
    } else if (cmd == "lattice") {
      if (toks.size() != 2) throw ScfError(lineNo, "lattice expects root|weight|basis");
      if (toks[1] == "root")
        doc.latticeKind = LatticeKind::root;
      else if (toks[1] == "weight")
        doc.latticeKind = LatticeKind::weight;
      else if (toks[1] == "basis")
        doc.latticeKind = LatticeKind::basis;
      else
        throw ScfError(lineNo, "lattice expects root|weight|basis");
    } else if (cmd == "row") {
      if (toks.size() < 2) throw ScfError(lineNo, "row expects coordinates");
      doc.basisRows.push_back(parseCoords(toks, 1, lineNo));
    } else if (cmd == "hermitian") {
      if (toks.size() != 2 || (toks[1] != "true" && toks[1] != "false"))
        throw ScfError(lineNo, "hermitian expects true|false");
      doc.hermitian = toks[1] == "true";
    } else if (cmd == "exceptional") {
      for (std::size_t i = 1; i < toks.size(); ++i) {
        try {
          doc.exceptional.push_back(std::stoi(toks[i]) - 1);
        } catch (const std::exception&) {
          throw ScfError(lineNo, "bad exceptional index '" + toks[i] + "'");
        }
      }
    } else if (cmd == "fiber") {
      if (toks.size() != 3) throw ScfError(lineNo, "fiber expects <index> <1|2>");
      try {
        doc.fiberOverrides.push_back({std::stoi(toks[1]) - 1, std::stoi(toks[2])});
      } catch (const std::exception&) {
        throw ScfError(lineNo, "bad fiber line");
      }
    } else if (cmd == "cone") {
      if (openCone) throw ScfError(lineNo, "nested cone block");
      doc.cones.emplace_back();
      openCone = &doc.cones.back();
    } else if (cmd == "ray") {
      if (!openCone) throw ScfError(lineNo, "ray outside a cone block");
      if (toks.size() < 2) throw ScfError(lineNo, "ray expects coroot|vec");
      RaySpec spec;
      if (toks[1] == "coroot") {
        if (toks.size() != 3) throw ScfError(lineNo, "ray coroot expects one index");
        spec.isCoroot = true;
        try {
          spec.corootIndex = std::stoi(toks[2]);
        } catch (const std::exception&) {
          throw ScfError(lineNo, "bad coroot index");
        }
      } else if (toks[1] == "vec") {
        if (toks.size() < 3) throw ScfError(lineNo, "ray vec expects coordinates");
        spec.coords = parseCoords(toks, 2, lineNo);
      } else {
        throw ScfError(lineNo, "ray expects coroot|vec");
      }
      openCone->rays.push_back(spec);
    } else if (cmd == "colors") {
      if (!openCone) throw ScfError(lineNo, "colors outside a cone block");
      for (std::size_t i = 1; i < toks.size(); ++i) {
        const std::string& t = toks[i];
        auto colon = t.find(':');
        try {
          int idx = std::stoi(colon == std::string::npos ? t : t.substr(0, colon));
          int slot = colon == std::string::npos ? 1 : std::stoi(t.substr(colon + 1));
          openCone->colors.push_back({idx - 1, slot});
        } catch (const std::exception&) {
          throw ScfError(lineNo, "bad color '" + t + "'");
        }
      }
    } else if (cmd == "end") {
      if (!openCone) throw ScfError(lineNo, "end outside a cone block");
      openCone = nullptr;
    } else {
      throw ScfError(lineNo, "unknown directive '" + cmd + "'");
    }
  }
  if (openCone) throw ScfError(lineNo, "unterminated cone block");
  if (!sawType) throw ScfError(lineNo, "missing rootsystem line");
  return doc;
}

std::string printScf(const ScfDocument& doc) {
  std::ostringstream os;
  os << "rootsystem " << formatTypeLabel(doc.type) << "\n";
  os << "lattice ";
  switch (doc.latticeKind) {
    case LatticeKind::root: os << "root\n"; break;
    case LatticeKind::weight: os << "weight\n"; break;
    case LatticeKind::basis: os << "basis\n"; break;
  }
  for (const auto& r : doc.basisRows) {
    os << "row";
    for (Eigen::Index i = 0; i < r.size(); ++i) os << " " << toString(r[i]);
    os << "\n";
  }
  if (doc.hermitian) os << "hermitian true\n";
  if (!doc.exceptional.empty()) {
    os << "exceptional";
    for (int e : doc.exceptional) os << " " << e + 1;
    os << "\n";
  }
  for (const auto& [idx, size] : doc.fiberOverrides) os << "fiber " << idx + 1 << " " << size << "\n";
  for (const auto& cone : doc.cones) {
    os << "cone\n";
    for (const auto& ray : cone.rays) {
      if (ray.isCoroot) {
        os << "ray coroot " << ray.corootIndex << "\n";
      } else {
        os << "ray vec";
        for (Eigen::Index i = 0; i < ray.coords.size(); ++i) os << " " << toString(ray.coords[i]);
        os << "\n";
      }
    }
    os << "colors";
    for (const auto& c : cone.colors) {
      os << " " << c.corootIndex + 1;
      if (c.slot != 1) os << ":" << c.slot;
    }
    os << "\n";
    os << "end\n";
  }
  return os.str();
}

ResolvedScf resolveScf(const ScfDocument& doc) {
  auto rs = std::make_shared<const RootSystem>(RootSystem::build(doc.type));
  Lattice chiStar;
  bool admissibleRequired = true;
  switch (doc.latticeKind) {
    case LatticeKind::root:
      chiStar = rs->coweightLattice();
      break;
    case LatticeKind::weight:
      chiStar = rs->corootLattice();
      break;
    case LatticeKind::basis: {
      if (doc.basisRows.empty()) throw ScfError(0, "lattice basis needs row lines");
      for (const auto& r : doc.basisRows)
        if (r.size() != rs->ambientDim())
          throw ScfError(0, "lattice row has dimension " + std::to_string(r.size()) +
                                ", ambient space has " + std::to_string(rs->ambientDim()));
      chiStar = Lattice::fromGenerators(doc.basisRows, rs->ambientDim());
      admissibleRequired = false;
      break;
    }
  }
  std::vector<int> fibers(static_cast<std::size_t>(rs->rank()), 1);
  for (auto [idx, size] : doc.fiberOverrides) {
    if (idx < 0 || idx >= rs->rank()) throw ScfError(0, "fiber index out of range");
    fibers[static_cast<std::size_t>(idx)] = size;
  }
  std::set<int> exceptional(doc.exceptional.begin(), doc.exceptional.end());
  for (int e : exceptional)
    if (e < 0 || e >= rs->rank()) throw ScfError(0, "exceptional index out of range");
  SphericalDatum datum(rs, chiStar, fibers, exceptional, doc.hermitian, admissibleRequired);

  ResolvedScf out{datum, {}};
  for (const auto& spec : doc.cones) {
    std::vector<QVector> gens;
    for (const auto& ray : spec.rays) {
      if (ray.isCoroot) {
        if (ray.corootIndex < 1 || ray.corootIndex > rs->rank())
          throw ScfError(0, "coroot index out of range");
        gens.push_back(rs->simpleCoroots()[static_cast<std::size_t>(ray.corootIndex - 1)]);
      } else {
        if (ray.coords.size() != rs->ambientDim())
          throw ScfError(0, "ray has dimension " + std::to_string(ray.coords.size()) +
                                ", ambient space has " + std::to_string(rs->ambientDim()));
        gens.push_back(ray.coords);
      }
    }
    std::set<ColorId> colors;
    for (const auto& c : spec.colors) {
      if (!datum.hasColor(c)) throw ScfError(0, "unknown color " + colorName(c));
      colors.insert(c);
    }
    out.maximalCones.push_back(makeColoredCone(datum, gens, colors));
  }
  return out;
}

ScfDocument documentFor(const ClassifiedVariety& cv) {
  ScfDocument doc;
  const SphericalDatum& d = cv.datum;
  const RootSystem& rs = d.rootSystem();
  doc.type = rs.label();
  if (d.chiStar() == rs.coweightLattice()) {
    doc.latticeKind = LatticeKind::root;
  } else if (d.chiStar() == rs.corootLattice()) {
    doc.latticeKind = LatticeKind::weight;
  } else {
    doc.latticeKind = LatticeKind::basis;
    doc.basisRows = d.chiStar().basis();
  }
  doc.hermitian = d.hermitian();
  for (int e : d.exceptionalCoroots()) doc.exceptional.push_back(e);
  for (int i = 0; i < d.rank(); ++i)
    if (d.fiberSize(i) != 1) doc.fiberOverrides.push_back({i, d.fiberSize(i)});
  for (const auto& m : cv.fan.maximalCones()) {
    ConeSpec spec;
    for (const auto& r : m.cone.rays()) {
      RaySpec ray;
      int corootIdx = -1;
      for (int i = 0; i < rs.rank(); ++i)
        if (equal(primitiveDirection(rs.simpleCoroots()[static_cast<std::size_t>(i)]), r))
          corootIdx = i;
      if (corootIdx >= 0) {
        ray.isCoroot = true;
        ray.corootIndex = corootIdx + 1;
      } else {
        ray.coords = r;
      }
      spec.rays.push_back(ray);
    }
    for (const auto& c : m.colors) spec.colors.push_back(c);
    std::sort(spec.colors.begin(), spec.colors.end());
    doc.cones.push_back(spec);
  }
  return doc;
}

}  // namespace symfan
