#include "support.hpp"

#include "toricstab/report.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

using namespace ts_test;

namespace {

ErrorKind load_error(const std::string& text) {
  try {
    polytope_from_json(Json::parse(text));
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("accepted: " << text);
  return ErrorKind::Io;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("toricstab_test_" + name);
}

}  // namespace

TEST_CASE("parse and validation errors") {
  CHECK(load_error(R"({"dim": 1, "halfspaces": [{"normal": [1], "rhs": "1/0"}, {"normal": [-1], "rhs": 1}]})") ==
        ErrorKind::Parse);
  CHECK(load_error(R"({"dim": 1, "halfspaces": [{"normal": [1], "rhs": "x"}]})") == ErrorKind::Parse);
  CHECK(load_error(R"({"dim": "3", "vertices": []})") == ErrorKind::Parse);
  CHECK(load_error(R"({"dim": 2})") == ErrorKind::Parse);
  CHECK(load_error(R"({"dim": 2, "halfspaces": [{"normal": [1], "rhs": 1}]})") == ErrorKind::Parse);
  CHECK(load_error(R"({"dim": 2, "halfspaces": [{"normal": [1.5, 0], "rhs": 1}]})") == ErrorKind::Parse);
  CHECK(load_error(R"({"dim": 1, "halfspaces": [{"normal": [2], "rhs": 1}, {"normal": [-1], "rhs": 1}]})") ==
        ErrorKind::Validation);
  CHECK(load_error(R"({"dim": 1, "halfspaces": [{"normal": [0], "rhs": 1}, {"normal": [-1], "rhs": 1}]})") ==
        ErrorKind::Validation);
  CHECK(load_error(R"({"dim": 2, "halfspaces": [{"normal": [1, 0], "rhs": 1}, {"normal": [-1, 0], "rhs": 1}]})") ==
        ErrorKind::Validation);
  CHECK(load_error(R"({"dim": 2, "vertices": [["0", "0"], ["1", "1"], ["2", "2"]]})") == ErrorKind::Validation);
  CHECK(load_error(R"({"dim": 1, "halfspaces": [{"normal": [1], "rhs": 1}, {"normal": [-1], "rhs": 1}],
                       "vertices": [["-1"], ["2"]]})") == ErrorKind::Validation);
}

TEST_CASE("error messages name the field") {
  try {
    polytope_from_json(Json::parse(R"({"name": "P", "dim": 1, "halfspaces": [{"normal": [1], "rhs": "1/0"}]})"));
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("P.halfspaces[0].rhs") != std::string::npos);
  }
}

TEST_CASE("rationals are strings in JSON") {
  const Json j = polytope_to_json(b2());
  CHECK(j["halfspaces"][0]["rhs"].is_string());
  CHECK(j["vertices"][0][0].is_string());
}

TEST_CASE("every corpus entry round-trips") {
  const auto names = corpus_names();
  CHECK(names.size() == 19);
  const auto path = temp_file("roundtrip.json");
  for (const auto& e : load_corpus()) {
    CAPTURE(e.name);
    save_polytope(path, e.polytope);
    const Polytope q = load_polytope(path);
    CHECK(q.name() == e.polytope.name());
    CHECK(q.halfspaces() == e.polytope.halfspaces());
    CHECK(q.vertices() == e.polytope.vertices());
    CHECK(polytope_from_json(polytope_to_json(e.polytope)).vertices() == e.polytope.vertices());
  }
  std::filesystem::remove(path);
}

TEST_CASE("B2 half-space file matches the stored vertices") {
  Json j = polytope_to_json(load_corpus_entry("B2").polytope);
  const Json cached = j["vertices"];
  j.erase("vertices");
  const Polytope p = polytope_from_json(j);
  CHECK(polytope_to_json(p)["vertices"] == cached);
  CHECK(sorted(brute_vertices(hrep(p))) == p.vertices());
}

TEST_CASE("vertex-only input") {
  const Polytope p = polytope_from_json(Json::parse(R"({"dim": 2, "vertices": [["0","0"],["2","0"],["0","2"],["1","1/2"]]})"));
  CHECK(p.vertices().size() == 3);
  CHECK(p.volume() == 2);
}

TEST_CASE("PL function JSON") {
  const PLFn u{{affine({Rat(1, 2), Rat(-1)}, Rat(3)), AffineFn::zero(2)}, PLMode::Concave};
  const PLFn v = plfn_from_json(plfn_to_json(u));
  CHECK(v.mode == PLMode::Concave);
  CHECK(v.pieces == u.pieces);
  try {
    plfn_from_json(Json::parse(R"({"mode": "weird", "pieces": []})"));
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Parse);
  }
}

TEST_CASE("corpus lookup") {
  CHECK(resolve_input("corpus:CP3").vertices().size() == 4);
  try {
    resolve_input("corpus:NOPE");
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Io);
  }
  const auto e4 = load_corpus_entry("E4");
  CHECK(e4.provenance == Provenance::DatabaseDerived);
  CHECK_FALSE(e4.citation.empty());
  CHECK(load_corpus_entry("B2").provenance == Provenance::Explicit);
}

TEST_CASE("report JSON carries exact values") {
  AnalyzeOptions o;
  o.i_max = 2;
  const Json j = report_json(analyze(load_corpus_entry("B2").polytope, o));
  CHECK(j["extremal"]["theta"]["text"] == "-70/97*x3 - 15/97");
  const std::string dumped = j.dump();
  CHECK(Json::parse(dumped) == j);
}

TEST_CASE("tables output is deterministic") {
  AnalyzeOptions o;
  o.i_max = 1;
  const auto entries = load_corpus();
  std::vector<StabilityReport> a, b;
  for (const auto& e : entries) a.push_back(analyze(e.polytope, o));
  for (const auto& e : entries) b.push_back(analyze(e.polytope, o));
  CHECK(tables_text(entries, a) == tables_text(entries, b));
  CHECK(tables_json(entries, a).dump() == tables_json(entries, b).dump());
}
