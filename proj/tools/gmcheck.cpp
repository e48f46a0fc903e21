#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

#include "gm/commands.hpp"
#include "gm/version.hpp"

int main(int argc, char** argv) {
  CLI::App app{"analyzer for decorated graph-manifold descriptions"};
  app.set_version_flag("--version", std::string(gm::kToolName) + " " +
                                        gm::kToolVersion);
  app.require_subcommand(1);

  gm::AnalyzeArgs analyze_args;
  CLI::App* analyze = app.add_subcommand(
      "analyze", "analyze a manifest file, or every *.json in a directory");
  analyze->add_option("-i,--input", analyze_args.input,
                      "manifest file or directory")
      ->required();
  std::string analyze_output;
  CLI::Option* analyze_output_opt = analyze->add_option(
      "-o,--output", analyze_output,
      "report file (directory input: directory for <name>.report.json)");
  analyze->add_flag("--certify,!--no-certify", analyze_args.certify,
                    "search for a compatibility certificate (default on)");
  analyze->add_option("--max-iters", analyze_args.max_iters,
                      "strict-search budget in LP solves")
      ->check(CLI::PositiveNumber);

  gm::GenerateArgs generate_args;
  CLI::App* generate = app.add_subcommand(
      "generate", "write a random connected instance to stdout");
  generate->add_option("-n,--vertices", generate_args.vertices,
                       "number of vertices")
      ->check(CLI::PositiveNumber);
  generate->add_option("-m,--edges", generate_args.edges, "number of edges");
  generate->add_option("-s,--seed", generate_args.seed, "random seed");
  generate->add_option("--charge-range", generate_args.charge_range,
                       "charge grid bounds LO..HI (half-integer steps)");
  generate->add_option("--b-range", generate_args.b_range,
                       "intersection number bounds LO..HI");

  gm::IngestArgs ingest_args;
  CLI::App* ingest = app.add_subcommand(
      "ingest", "derive charges and intersection numbers from gluing data");
  ingest->add_option("-i,--input", ingest_args.input, "gluing-form manifest")
      ->required();
  std::string ingest_output;
  CLI::Option* ingest_output_opt = ingest->add_option(
      "-o,--output", ingest_output, "reduced manifest target (default stdout)");

  gm::SelftestArgs selftest_args;
  CLI::App* selftest =
      app.add_subcommand("selftest", "run the built-in verification suites");
  selftest->add_option("--breadth", selftest_args.breadth,
                       "0 = worked examples only, larger = more samples")
      ->check(CLI::Range(0, 1000));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;  // help and version are successes; misuse is 2
  }

  try {
    if (*analyze) {
      if (*analyze_output_opt) analyze_args.output = analyze_output;
      return gm::cmd_analyze(analyze_args);
    }
    if (*generate) return gm::cmd_generate(generate_args);
    if (*ingest) {
      if (*ingest_output_opt) ingest_args.output = ingest_output;
      return gm::cmd_ingest(ingest_args);
    }
    if (*selftest) return gm::cmd_selftest(selftest_args);
  } catch (const std::exception& e) {
    std::cerr << "{\n  \"error\": {\n    \"code\": \"INTERNAL\",\n"
              << "    \"message\": " << nlohmann::json(e.what()).dump()
              << "\n  }\n}\n";
    return 2;
  }
  return 2;
}
