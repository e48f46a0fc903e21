#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace gm {

// Exit codes across all commands: 0 success; 1 a check or a batch entry
// failed; 2 unusable input or usage. Failures print {"error":{code,message}}
// to stderr.

struct AnalyzeArgs {
  std::string input;  // manifest file, or a directory of *.json manifests
  std::optional<std::string> output;
  bool certify = true;
  int max_iters = 200;
};

struct GenerateArgs {
  std::size_t vertices = 3;
  std::size_t edges = 3;
  std::uint64_t seed = 0;
  std::string charge_range = "-2..2";  // LO..HI, half-integer grid
  std::string b_range = "1..3";        // LO..HI, integers >= 1
};

struct IngestArgs {
  std::string input;
  std::optional<std::string> output;
};

struct SelftestArgs {
  int breadth = 1;  // 0 = worked examples only; >1 scales randomized counts
};

int cmd_analyze(const AnalyzeArgs& args);
int cmd_generate(const GenerateArgs& args);
int cmd_ingest(const IngestArgs& args);
int cmd_selftest(const SelftestArgs& args);

}  // namespace gm
