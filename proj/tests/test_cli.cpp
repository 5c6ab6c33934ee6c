#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "golden_support.hpp"

using netclosure::cli::run;
using testing::data_path;
using testing::golden;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return data_path("fixtures/" + name + ".edges"); }

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("netclosure_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST_CASE("exit codes") {
  CHECK(call({"analyze", fixture("f1")}).code == 0);
  CHECK(call({"analyze", temp_file("empty.edges", "")}).code == 2);
  CHECK(call({"analyze", "/nonexistent/graph.edges"}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({}).code == 2);
  CHECK(call({"closure", fixture("f1"), "--set", "q"}).code == 2);
  CHECK(call({"--max-n", "5", "closed-sets", fixture("f1")}).code == 3);
  CHECK(call({"--max-n", "7", "audit"}).code == 3);
  CHECK(call({"check-del", fixture("f1"), "--edge", "a,b"}).code == 1);
  CHECK(call({"check-del", fixture("f1"), "--edge", "a,c"}).code == 2);
  CHECK(call({"check-del", fixture("c4"), "--edge", "a,b", "--oracle"}).code == 1);
  CHECK(call({"check-add", fixture("gt"), "--edge", "x,z", "--oracle"}).code == 1);
  CHECK(call({"check-add", fixture("gt"), "--edge", "x,z"}).code == 0);
  CHECK(call({"check-map", fixture("cx1_source"), fixture("cx1_target"), "--map", data_path("fixtures/cx1.map")})
            .code == 0);
  CHECK(call({"reduce", fixture("c4")}).code == 0);
  CHECK(call({"--help"}).code == 0);
}

TEST_CASE("stdout and stderr are kept apart") {
  const auto bad = call({"analyze", "/nonexistent/graph.edges"});
  CHECK(bad.out.empty());
  CHECK(bad.err.rfind("netclosure: ", 0) == 0);
  const auto ok = call({"closure", fixture("f1"), "--set", "b"});
  CHECK(ok.err.empty());
  CHECK(ok.out.find("closure: {a,b}") != std::string::npos);
}

TEST_CASE("cycles on F1") {
  const auto r = call({"cycles", fixture("f1")});
  CHECK(r.code == 0);
  CHECK(r.out.find("[b, d, g, e]") != std::string::npos);
}

TEST_CASE("deleting b-c from F1: fast path and oracle disagree") {
  const auto r = call({"--json", "check-del", fixture("f1"), "--edge", "b,c", "--oracle"});
  CHECK(r.code == 1);
  const auto doc = nlohmann::ordered_json::parse(r.out);
  CHECK(doc["results"]["verdict"] == "CONTINUOUS");
  CHECK(doc["results"]["oracle"]["continuous"] == false);
  CHECK(doc["results"]["oracle"]["witness"] == "{b}");
  CHECK(doc["results"]["agreement"] == "MISMATCH");
  REQUIRE(doc["findings"].size() == 1);
}

TEST_CASE("unknown labels are named") {
  const auto r = call({"closure", fixture("f1"), "--set", "b,q"});
  CHECK(r.code == 2);
  CHECK(r.err.find("'q'") != std::string::npos);
}

TEST_CASE("json and text carry the same report") {
  const auto j = call({"--json", "check-del", fixture("f1"), "--edge", "d,g", "--oracle"});
  const auto doc = nlohmann::ordered_json::parse(j.out);
  CHECK(doc["report"] == "netclosure v1");
  CHECK(doc["command"] == "check-del");
  CHECK(doc["results"]["verdict"] == "DISCONTINUOUS_B");
  CHECK(netclosure::cli::render_text(doc) ==
        call({"check-del", fixture("f1"), "--edge", "d,g", "--oracle"}).out);
}

TEST_CASE("golden reports") {
  CHECK(call({"analyze", fixture("f1")}).out == golden("f1.analyze.txt"));
  CHECK(call({"--json", "analyze", fixture("f1")}).out == golden("f1.analyze.json"));
  CHECK(call({"reduce", "--trace", fixture("f1")}).out == golden("f1.reduce.txt"));
  CHECK(call({"export-dot", fixture("f1")}).out == golden("f1.dot"));
  CHECK(call({"simulate", fixture("c4")}).out == golden("c4.trace"));
  CHECK(call({"export", fixture("f1"), "--to", "matrix"}).out == golden("f1.matrix"));
}

TEST_CASE("matrix input") {
  const auto m = temp_file("f1.matrix", golden("f1.matrix"));
  const auto r = call({"--format", "matrix", "export", m, "--to", "matrix"});
  CHECK(r.code == 0);
  CHECK(r.out == golden("f1.matrix"));
  CHECK(call({"--format", "matrix", "analyze", fixture("f1")}).code == 2);
}

TEST_CASE("simulate writes a trace file and a report") {
  const auto path = (std::filesystem::temp_directory_path() / "netclosure_test_sim.trace").string();
  const auto r = call({"--json", "simulate", fixture("f1"), "--seed", "7", "--out", path});
  CHECK(r.code == 0);
  const auto doc = nlohmann::ordered_json::parse(r.out);
  CHECK(doc["results"]["halt"] == "FIXPOINT");
  CHECK(netclosure::read_text_file(path) == golden("f1_seed7.trace"));
}
