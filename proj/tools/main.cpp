// symfan: exact checks and classification for the colored-cone combinatorics
// of symmetric varieties.

#include "symfan/scf.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace symfan;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ScfError(0, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

ResolvedScf load(const std::string& path) { return resolveScf(parseScf(slurp(path))); }

void printEntry(std::ostream& os, const ClassifiedVariety& e) {
  os << "  entry: " << e.label << "\n";
  os << "    chi_*(S) basis: " << e.datum.chiStar().toString() << "\n";
  std::ostringstream fibers;
  bool anyDouble = false;
  for (int i = 0; i < e.datum.rank(); ++i)
    if (e.datum.fiberSize(i) == 2) {
      anyDouble = true;
      fibers << " " << i + 1;
    }
  if (anyDouble) os << "    doubled fibers:" << fibers.str() << "\n";
  if (e.datum.hermitian()) os << "    hermitian\n";
  for (const auto& m : e.fan.maximalCones()) os << "    " << m.toString() << "\n";
}

int cmdCheck(const std::string& path) {
  auto res = load(path);
  const auto& datum = res.datum;
  std::cout << "datum: " << formatTypeLabel(datum.rootSystem().label()) << ", rank "
            << datum.rank() << ", chi_*(S) "
            << (datum.latticeAdmissible() ? "admissible" : "non-admissible (diagnostic)") << "\n";
  bool ok = true;
  ColoredFan fan = ColoredFan::fromMaximal(datum, res.maximalCones);
  if (auto v = validateColoredFan(datum, fan)) {
    std::cout << "fan: invalid, axiom " << v->axiom << ": " << v->detail << "\n";
    ok = false;
  } else {
    std::cout << "fan: valid\n";
  }
  int idx = 0;
  for (const auto& cc : res.maximalCones) {
    ++idx;
    std::cout << "cone " << idx << ": ";
    try {
      auto rep = isSmooth(datum, cc);
      if (rep.smooth) {
        std::cout << "smooth";
        if (rep.indexing && !rep.indexing->unique) std::cout << " (indexing not unique)";
        std::cout << "\n";
      } else {
        std::cout << "not smooth, condition " << failedConditionName(rep.failed)
                  << " fails: " << rep.witness << "\n";
        ok = false;
      }
    } catch (const std::domain_error& e) {
      std::cout << "error: " << e.what() << "\n";
      ok = false;
    }
  }
  return ok ? 0 : 1;
}

int cmdComplete(const std::string& path) {
  auto res = load(path);
  ColoredFan fan = ColoredFan::fromMaximal(res.datum, res.maximalCones);
  std::vector<Cone> pieces;
  for (const auto& m : fan.maximalCones()) pieces.push_back(m.cone);
  auto cover = coneCovers(res.datum.rootSystem().valuationCone(), pieces);
  if (cover.covered) {
    std::cout << "complete\n";
    return 0;
  }
  std::cout << "not complete";
  if (cover.witness) std::cout << ", witness " << toString(*cover.witness);
  std::cout << "\n";
  return 1;
}

int cmdPicard(const std::string& path) {
  auto res = load(path);
  ColoredFan fan = ColoredFan::fromMaximal(res.datum, res.maximalCones);
  if (auto v = validateColoredFan(res.datum, fan)) {
    std::cout << "invalid fan, axiom " << v->axiom << ": " << v->detail << "\n";
    return 1;
  }
  try {
    std::cout << "picard rank = " << picardRank(res.datum, fan) << "\n";
  } catch (const std::domain_error& e) {
    std::cout << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

int cmdAmple(const std::string& path, const std::vector<std::string>& coeffs) {
  auto res = load(path);
  ColoredFan fan = ColoredFan::fromMaximal(res.datum, res.maximalCones);
  if (auto v = validateColoredFan(res.datum, fan)) {
    std::cout << "invalid fan, axiom " << v->axiom << ": " << v->detail << "\n";
    return 1;
  }
  std::map<DivisorKey, Rational> map;
  for (const auto& c : coeffs) {
    auto eq = c.find('=');
    if (eq == std::string::npos) throw std::runtime_error("bad --coeff '" + c + "'");
    std::string name = c.substr(0, eq);
    Rational value = parseRational(c.substr(eq + 1));
    if (name.size() >= 2 && name[0] == 'D') {
      auto colon = name.find(':');
      int idx = std::stoi(colon == std::string::npos ? name.substr(1)
                                                     : name.substr(1, colon - 1));
      int slot = colon == std::string::npos ? 1 : std::stoi(name.substr(colon + 1));
      map[DivisorKey{ColorId{idx - 1, slot}, -1}] = value;
    } else if (name.size() >= 2 && name[0] == 'v') {
      map[DivisorKey{std::nullopt, std::stoi(name.substr(1)) - 1}] = value;
    } else {
      throw std::runtime_error("bad divisor name '" + name + "' (use D<i>[:slot] or v<k>)");
    }
  }
  auto check = isAmpleTwoOrbit(res.datum, fan, map);
  std::cout << (check.ample ? "ample" : "not ample") << "\n";
  if (!check.detail.empty()) std::cout << check.detail << "\n";
  return check.ample ? 0 : 1;
}

int cmdEnumerate(const std::string& type, int bound, bool scf) {
  EnumerateOptions opts;
  opts.bound = bound;
  auto entries = enumeratePicardOne(parseTypeLabel(type), opts);
  std::cout << formatTypeLabel(parseTypeLabel(type)) << ": " << entries.size() << " entr"
            << (entries.size() == 1 ? "y" : "ies") << "\n";
  for (const auto& e : entries) {
    if (scf) {
      std::cout << "# " << e.label << "\n" << printScf(documentFor(e)) << "\n";
    } else {
      printEntry(std::cout, e);
    }
  }
  return 0;
}

int cmdCatalog(const std::string& type, bool scf) {
  auto entries = referenceCatalog(parseTypeLabel(type));
  std::cout << formatTypeLabel(parseTypeLabel(type)) << ": " << entries.size() << " entr"
            << (entries.size() == 1 ? "y" : "ies") << "\n";
  for (const auto& e : entries) {
    if (scf) {
      std::cout << "# " << e.label << "\n" << printScf(documentFor(e)) << "\n";
    } else {
      printEntry(std::cout, e);
    }
  }
  return 0;
}

int verifyOne(const TypeLabel& type, int bound) {
  EnumerateOptions opts;
  opts.bound = bound;
  auto rep = verifyAgainstCatalog(type, opts);
  std::cout << formatTypeLabel(type) << ": " << rep.entries << " entr"
            << (rep.entries == 1 ? "y" : "ies") << " (" << rep.orbits << " class"
            << (rep.orbits == 1 ? "" : "es") << "), " << (rep.match ? "match" : "MISMATCH")
            << "\n";
  for (const auto& k : rep.missing) std::cout << "  missing: " << k << "\n";
  for (const auto& k : rep.extra) std::cout << "  extra:   " << k << "\n";
  return rep.match ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact colored-cone computations for symmetric varieties"};
  app.require_subcommand(1);

  std::string file, type;
  int bound = -1, maxRank = 6;
  bool all = false, scf = false;
  std::vector<std::string> coeffs;

  auto* check = app.add_subcommand("check", "validate a fan and test smoothness per cone");
  check->add_option("file", file)->required();

  auto* complete = app.add_subcommand("complete", "test completeness of the fan");
  complete->add_option("file", file)->required();

  auto* picard = app.add_subcommand("picard", "Picard rank of a valid complete fan");
  picard->add_option("file", file)->required();

  auto* ample = app.add_subcommand("ample", "strict-convexity ampleness test");
  ample->add_option("file", file)->required();
  ample->add_option("--coeff", coeffs, "divisor coefficient, e.g. D1=1 or v1=0");

  auto* enumerate = app.add_subcommand("enumerate", "enumerate Picard-rank-one varieties");
  enumerate->add_option("--type", type)->required();
  enumerate->add_option("--bound", bound, "v-coefficient bound (default rank+2)");
  enumerate->add_flag("--scf", scf, "print entries as .scf documents");

  auto* catalog = app.add_subcommand("catalog", "print the built-in classification catalog");
  catalog->add_option("--type", type)->required();
  catalog->add_flag("--scf", scf, "print entries as .scf documents");

  auto* verify = app.add_subcommand("verify", "compare enumeration against the catalog");
  verify->add_option("--type", type);
  verify->add_flag("--all", all);
  verify->add_option("--max-rank", maxRank);
  verify->add_option("--bound", bound);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (check->parsed()) return cmdCheck(file);
    if (complete->parsed()) return cmdComplete(file);
    if (picard->parsed()) return cmdPicard(file);
    if (ample->parsed()) return cmdAmple(file, coeffs);
    if (enumerate->parsed()) return cmdEnumerate(type, bound, scf);
    if (catalog->parsed()) return cmdCatalog(type, scf);
    if (verify->parsed()) {
      if (all == !type.empty()) {
        std::cerr << "verify needs exactly one of --type or --all\n";
        return 2;
      }
      if (!all) return verifyOne(parseTypeLabel(type), bound);
      int bad = 0;
      auto types = supportedTypes(maxRank);
      std::sort(types.begin(), types.end(), [](const TypeLabel& a, const TypeLabel& b) {
        return formatTypeLabel(a) < formatTypeLabel(b);
      });
      for (const auto& t : types) bad += verifyOne(t, bound);
      std::cout << (bad == 0 ? "all types match" : "MISMATCHES FOUND") << "\n";
      return bad == 0 ? 0 : 1;
    }
  } catch (const ScfError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
