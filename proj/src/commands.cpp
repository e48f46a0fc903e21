#include "gm/commands.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <future>
#include <iostream>
#include <thread>
#include <vector>

#include "gm/generate.hpp"
#include "gm/io_util.hpp"
#include "gm/manifest.hpp"
#include "gm/report.hpp"
#include "gm/selftest.hpp"

namespace gm {

namespace {

namespace fs = std::filesystem;

int fail_json(const Error& e) {
  nlohmann::ordered_json j;
  j["error"] = {{"code", e.code()}, {"message", e.what()}};
  std::cerr << j.dump(2) << "\n";
  return 2;
}

std::pair<long long, long long> parse_range(const std::string& text) {
  auto pos = text.find("..");
  auto bad = [&] {
    return Error("INFEASIBLE_SHAPE", "range must be LO..HI, got '" + text + "'");
  };
  if (pos == std::string::npos) throw bad();
  try {
    std::size_t used = 0;
    long long lo = std::stoll(text.substr(0, pos), &used);
    if (used != pos) throw bad();
    std::string hi_text = text.substr(pos + 2);
    long long hi = std::stoll(hi_text, &used);
    if (used != hi_text.size()) throw bad();
    return {lo, hi};
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw bad();
  }
}

struct OneResult {
  std::string json_text;
  std::string summary;
};

OneResult analyze_bytes(const std::string& bytes, const DecideOptions& opts) {
  auto t0 = std::chrono::steady_clock::now();
  Manifest m = parse_manifest(bytes);
  GraphManifoldData data = to_reduced(m);
  AnalysisReport rep = decide(data, opts);
  auto payload = report_to_json(data, rep);
  long long ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - t0)
                     .count();
  auto env = build_envelope(bytes, std::move(payload), ms);
  return {env.dump(2) + "\n", summary_text(data, rep)};
}

int analyze_batch(const fs::path& in_dir, const AnalyzeArgs& args,
                  const DecideOptions& opts) {
  if (!args.output)
    throw Error("IO_ERROR",
                "analyzing a directory needs --output, a directory for the "
                "<name>.report.json files");
  fs::path out_dir = *args.output;
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec || !fs::is_directory(out_dir))
    throw Error("IO_ERROR", "cannot create output directory " +
                                out_dir.string());

  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(in_dir))
    if (entry.is_regular_file() && entry.path().extension() == ".json")
      files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  if (files.empty())
    throw Error("IO_ERROR", "no *.json manifests in " + in_dir.string());

  // Waves of hardware-width parallelism; every worker writes its own target
  // atomically, so a crash mid-batch never leaves a half-written report.
  std::size_t width = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::string> errors(files.size());
  for (std::size_t base = 0; base < files.size(); base += width) {
    std::size_t limit = std::min(files.size(), base + width);
    std::vector<std::future<void>> wave;
    for (std::size_t i = base; i < limit; ++i) {
      wave.push_back(std::async(std::launch::async, [&, i] {
        fs::path target =
            out_dir / (files[i].stem().string() + ".report.json");
        try {
          OneResult r = analyze_bytes(read_file(files[i].string()), opts);
          write_file_atomic(target.string(), r.json_text);
        } catch (const Error& e) {
          errors[i] = e.code() + std::string(": ") + e.what();
        } catch (const std::exception& e) {
          errors[i] = std::string("INTERNAL: ") + e.what();
        }
      }));
    }
    for (auto& f : wave) f.get();
  }

  std::size_t failed = 0;
  for (std::size_t i = 0; i < files.size(); ++i)
    if (!errors[i].empty()) {
      ++failed;
      std::cerr << files[i].string() << ": " << errors[i] << "\n";
    }
  std::cout << "analyzed " << files.size() - failed << "/" << files.size()
            << " manifests into " << out_dir.string() << "\n";
  return failed == 0 ? 0 : 1;
}

}  // namespace

int cmd_analyze(const AnalyzeArgs& args) {
  DecideOptions opts;
  opts.certify = args.certify;
  opts.max_iters = args.max_iters;
  try {
    if (fs::is_directory(args.input)) return analyze_batch(args.input, args, opts);
    OneResult r = analyze_bytes(read_file(args.input), opts);
    if (args.output) {
      write_file_atomic(*args.output, r.json_text);
      std::cout << r.summary;
    } else {
      std::cout << r.json_text;
      std::cerr << r.summary;
    }
    return 0;
  } catch (const Error& e) {
    return fail_json(e);
  }
}

int cmd_generate(const GenerateArgs& args) {
  try {
    auto [charge_lo, charge_hi] = parse_range(args.charge_range);
    auto [b_lo, b_hi] = parse_range(args.b_range);
    GenerateOptions o{args.vertices, args.edges, args.seed,
                      charge_lo,     charge_hi, b_lo,
                      b_hi};
    std::cout << serialize_manifest(generate_instance(o));
    return 0;
  } catch (const Error& e) {
    return fail_json(e);
  }
}

int cmd_ingest(const IngestArgs& args) {
  try {
    Manifest m = load_manifest(args.input);
    if (!m.is_gluing())
      throw Error("BAD_MANIFEST",
                  "input already carries charges and intersection numbers; "
                  "nothing to ingest");
    std::string text = serialize_manifest(to_reduced(m));
    if (args.output) {
      write_file_atomic(*args.output, text);
      std::cout << "wrote " << *args.output << "\n";
    } else {
      std::cout << text;
    }
    return 0;
  } catch (const Error& e) {
    return fail_json(e);
  }
}

int cmd_selftest(const SelftestArgs& args) {
  std::vector<CheckResult> results = run_selftest(args.breadth, &std::cerr);
  bool all = true;
  for (const CheckResult& r : results) {
    std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.name;
    if (!r.detail.empty()) std::cout << " -- " << r.detail;
    std::cout << "\n";
    all = all && r.passed;
  }
  std::cout << (all ? "selftest passed" : "selftest FAILED") << "\n";
  return all ? 0 : 1;
}

}  // namespace gm
