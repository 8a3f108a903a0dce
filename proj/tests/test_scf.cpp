#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symfan/scf.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace symfan;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string dataDir() {
  for (const char* p : {"data", "../data", "../../data"})
    if (std::filesystem::exists(std::string(p) + "/g2.scf")) return p;
  return "data";
}

}  // namespace

TEST_CASE("g2.scf parses to the catalog entry") {
  std::string text = slurp(dataDir() + "/g2.scf");
  auto doc = parseScf(text);
  auto res = resolveScf(doc);
  REQUIRE(res.maximalCones.size() == 1);
  auto catalog = referenceCatalog(parseTypeLabel("G2"));
  REQUIRE(catalog.size() == 1);
  ClassifiedVariety parsed{res.datum, ColoredFan::fromMaximal(res.datum, res.maximalCones), 1, ""};
  CHECK(parsed.canonicalKey() == catalog[0].canonicalKey());
}

TEST_CASE("round-trip on the shipped files") {
  for (const char* name : {"g2.scf", "b2_bad.scf", "a2_two_orbit.scf", "d5.scf", "p1xp1.scf"}) {
    std::string text = slurp(dataDir() + "/" + name);
    INFO(name);
    CHECK(printScf(parseScf(text)) == text);
  }
}

TEST_CASE("catalog documents round-trip through parse") {
  for (const char* t : {"A2", "B2", "D5", "G2", "A1xA1"}) {
    for (const auto& e : referenceCatalog(parseTypeLabel(t))) {
      ScfDocument doc = documentFor(e);
      std::string text = printScf(doc);
      CHECK(printScf(parseScf(text)) == text);
      auto res = resolveScf(parseScf(text));
      ClassifiedVariety back{res.datum, ColoredFan::fromMaximal(res.datum, res.maximalCones),
                             static_cast<int>(res.maximalCones.size()), e.label};
      CHECK(back.canonicalKey() == e.canonicalKey());
    }
  }
}

TEST_CASE("parse errors carry line numbers") {
  CHECK_THROWS_AS(parseScf("rootsystem Q7\n"), ScfError);
  try {
    parseScf("rootsystem B2\ncone\nray vec 1 2 3\ncolors 1\nend\n");
    // dimensions are checked at resolve time
    auto doc = parseScf("rootsystem B2\ncone\nray vec 1 2 3\ncolors 1\nend\n");
    CHECK_THROWS_AS(resolveScf(doc), ScfError);
  } catch (const ScfError&) {
    CHECK(false);
  }
  try {
    parseScf("rootsystem B2\nray vec 1 2\n");
    CHECK(false);
  } catch (const ScfError& e) {
    CHECK(e.line == 2);
  }
  // ray vec 1/2 1/3 against a 3-dimensional realization: dimension error
  auto doc = parseScf("rootsystem A2\ncone\nray vec 1/2 1/3\ncolors 1\nend\n");
  CHECK_THROWS_AS(resolveScf(doc), ScfError);
  // unknown color slot
  auto doc2 = parseScf("rootsystem B2\ncone\nray coroot 1\nray vec -1 0\ncolors 1:2\nend\n");
  CHECK_THROWS_AS(resolveScf(doc2), ScfError);
}

TEST_CASE("empty cone list is a valid parse") {
  auto doc = parseScf("rootsystem B2\nlattice root\n");
  auto res = resolveScf(doc);
  CHECK(res.maximalCones.empty());
}

TEST_CASE("comments and rational coordinates") {
  auto doc = parseScf(
      "# a diagnostic lattice\n"
      "rootsystem B2\n"
      "lattice basis\n"
      "row 1/2 -1/2\n"
      "row 0 1\n"
      "cone\n"
      "ray vec 1/2 -1/2   # a half-integral ray\n"
      "colors\n"
      "end\n");
  CHECK(doc.basisRows.size() == 2);
  CHECK(doc.basisRows[0][0] == frac(1, 2));
  auto res = resolveScf(doc);
  CHECK_FALSE(res.datum.latticeAdmissible());
}
