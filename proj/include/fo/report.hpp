#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

#include "fo/instance_io.hpp"
#include "fo/rational.hpp"

namespace fo {

enum class Command { kPipeline, kMinSumRate, kFairRates, kShapley, kCheck };
enum class OutputFormat { kJson, kText };

// Throws ConfigurationError for unknown names. "" and "all" map to kPipeline.
Command parse_command(std::string_view name);

struct RunConfig {
  std::filesystem::path instance_path;
  Command command = Command::kPipeline;
  std::optional<Rational> alpha;
  std::optional<std::string> weights;  // "1=4,2=2,3=1"; unspecified users get weight 1
  std::optional<std::string> rates;    // for kCheck, same syntax; unspecified users get 0
  OutputFormat format = OutputFormat::kJson;
  bool parallel_blocks = true;
};

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kError = 1;
inline constexpr int kInfeasible = 2;
inline constexpr int kParse = 3;
inline constexpr int kCapacity = 4;  // also ambiguity
}  // namespace exit_code

// Reports use insertion-ordered keys so the JSON output is byte-stable.
using Report = nlohmann::ordered_json;

Report min_sum_rate_report(const Instance& instance);
Report fair_rates_report(const Instance& instance, const RunConfig& config);
Report shapley_report(const Instance& instance, const RunConfig& config);
Report check_report(const Instance& instance, const RunConfig& config);
// min-sum-rate + fair-rates + shapley (when |V| <= 12) in one document.
Report pipeline_report(const Instance& instance, const RunConfig& config);

Report build_report(const Instance& instance, const RunConfig& config);
std::string render(const Report& report, OutputFormat format);

struct RunResult {
  int exit_code = exit_code::kOk;
  std::string output;  // stdout
  std::string error;   // stderr
};

// Loads the instance, runs the command and maps failures to exit codes.
RunResult run(const RunConfig& config);

}  // namespace fo
