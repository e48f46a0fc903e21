#include <doctest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "gm/commands.hpp"
#include "gm/digest.hpp"
#include "gm/io_util.hpp"
#include "gm/manifest.hpp"
#include "gm/version.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

// Redirects std::cout and std::cerr for the lifetime of the object.
struct Capture {
  std::ostringstream out, err;
  std::streambuf* old_out;
  std::streambuf* old_err;
  Capture()
      : old_out(std::cout.rdbuf(out.rdbuf())),
        old_err(std::cerr.rdbuf(err.rdbuf())) {}
  ~Capture() {
    std::cout.rdbuf(old_out);
    std::cerr.rdbuf(old_err);
  }
};

fs::path fresh_dir(const char* tag) {
  auto p = fs::temp_directory_path() /
           (std::string("gmcheck_test_") + tag + "_" +
            std::to_string(::getpid()));
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

void write_text(const fs::path& p, const std::string& text) {
  std::ofstream f(p);
  f << text;
}

const char* kManifest = R"({
  "vertices": [{"id": "v0", "charge": 0}],
  "edges": [{"id": "e0", "ends": ["v0", "v0"], "b": 1}]
})";

}  // namespace

TEST_CASE("cmd_generate emits a valid manifest") {
  gm::GenerateArgs args;
  args.vertices = 3;
  args.edges = 4;
  args.seed = 11;
  Capture cap;
  const int rc = cmd_generate(args);
  REQUIRE(rc == 0);
  const auto m = gm::parse_manifest(cap.out.str());
  CHECK(gm::validate(gm::to_reduced(m)).ok());
}

TEST_CASE("cmd_generate rejects bad ranges") {
  gm::GenerateArgs args;
  args.b_range = "3..1";
  Capture cap;
  CHECK(cmd_generate(args) == 2);
  CHECK(cap.err.str().find("INFEASIBLE_SHAPE") != std::string::npos);
}

TEST_CASE("cmd_analyze writes a stable envelope") {
  const auto dir = fresh_dir("analyze");
  const auto in = dir / "m.json";
  write_text(in, kManifest);

  gm::AnalyzeArgs args;
  args.input = in.string();
  args.output = (dir / "m.report.json").string();

  json first;
  {
    Capture cap;
    REQUIRE(cmd_analyze(args) == 0);
    first = json::parse(gm::read_file(*args.output));
  }
  CHECK(first.at("schema_version") == 1);
  CHECK(first.at("tool").at("name") == "gmcheck");
  CHECK(first.at("tool").at("version") == gm::kToolVersion);
  CHECK(first.at("input_digest") == gm::sha256_digest(gm::read_file(in.string())));
  CHECK(first.at("timing_ms").is_number());
  const auto& rep = first.at("report");
  CHECK(rep.at("verdicts").at("npc") == true);
  CHECK(rep.at("verdicts").at("virtually_fibered") == true);
  CHECK(rep.at("certificate").at("strictness") == "strict");

  json second;
  {
    Capture cap;
    REQUIRE(cmd_analyze(args) == 0);
    second = json::parse(gm::read_file(*args.output));
  }
  first.erase("timing_ms");
  second.erase("timing_ms");
  CHECK(first == second);
  fs::remove_all(dir);
}

TEST_CASE("cmd_analyze without output prints json and a summary") {
  const auto dir = fresh_dir("analyze_stdout");
  const auto in = dir / "m.json";
  write_text(in, kManifest);
  gm::AnalyzeArgs args;
  args.input = in.string();
  Capture cap;
  REQUIRE(cmd_analyze(args) == 0);
  const json env = json::parse(cap.out.str());
  CHECK(env.contains("report"));
  CHECK(cap.err.str().find("npc") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("cmd_analyze reports missing files as errors") {
  gm::AnalyzeArgs args;
  args.input = "/nonexistent/nowhere.json";
  Capture cap;
  CHECK(cmd_analyze(args) == 2);
  const json err = json::parse(cap.err.str());
  CHECK(err.at("error").at("code") == "IO_ERROR");
}

TEST_CASE("cmd_analyze over a directory keeps going past bad entries") {
  const auto dir = fresh_dir("batch");
  const auto out = dir / "reports";
  write_text(dir / "a.json", kManifest);
  write_text(dir / "b.json", R"({
    "vertices": [{"id": "x", "charge": 1}, {"id": "y", "charge": 1}],
    "edges": [{"id": "e", "ends": ["x", "y"], "b": 1}]
  })");
  write_text(dir / "c.json", "{broken");

  gm::AnalyzeArgs args;
  args.input = dir.string();
  args.output = out.string();
  Capture cap;
  CHECK(cmd_analyze(args) == 1);  // one entry failed
  CHECK(fs::exists(out / "a.report.json"));
  CHECK(fs::exists(out / "b.report.json"));
  CHECK(!fs::exists(out / "c.report.json"));
  CHECK(cap.err.str().find("c.json") != std::string::npos);
  CHECK(cap.out.str().find("analyzed 2/3") != std::string::npos);

  const json rep = json::parse(gm::read_file((out / "b.report.json").string()));
  CHECK(rep.at("report").at("verdicts").at("virtually_fibered") == true);
  fs::remove_all(dir);
}

TEST_CASE("cmd_analyze batch requires an output directory") {
  const auto dir = fresh_dir("batch_noout");
  write_text(dir / "a.json", kManifest);
  gm::AnalyzeArgs args;
  args.input = dir.string();
  Capture cap;
  CHECK(cmd_analyze(args) == 2);
  CHECK(json::parse(cap.err.str()).at("error").at("code") == "IO_ERROR");
  fs::remove_all(dir);
}

TEST_CASE("cmd_ingest reduces gluing manifests") {
  const auto dir = fresh_dir("ingest");
  const auto in = dir / "g.json";
  write_text(in, R"({
    "vertices": [{"id": "a"}, {"id": "b"}],
    "edges": [{"id": "e", "ends": ["a", "b"], "gluing": [[1, 1], [0, -1]]}]
  })");

  SUBCASE("to stdout") {
    gm::IngestArgs args;
    args.input = in.string();
    Capture cap;
    REQUIRE(cmd_ingest(args) == 0);
    const auto m = gm::parse_manifest(cap.out.str());
    CHECK(!m.is_gluing());
    CHECK(std::get<gm::GraphManifoldData>(m.payload).vertices[0].charge == 1);
  }
  SUBCASE("already-reduced input is refused") {
    const auto r = dir / "r.json";
    write_text(r, kManifest);
    gm::IngestArgs args;
    args.input = r.string();
    Capture cap;
    CHECK(cmd_ingest(args) == 2);
    CHECK(json::parse(cap.err.str()).at("error").at("code") == "BAD_MANIFEST");
  }
  fs::remove_all(dir);
}

TEST_CASE("cmd_selftest breadth 0 runs the worked examples") {
  gm::SelftestArgs args;
  args.breadth = 0;
  Capture cap;
  CHECK(cmd_selftest(args) == 0);
  CHECK(cap.out.str().find("[PASS] worked_examples") != std::string::npos);
  CHECK(cap.out.str().find("selftest passed") != std::string::npos);
}
