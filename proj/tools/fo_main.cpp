// fo: minimum sum-rate, fundamental partition and fair rate allocation for
// communication-for-omniscience instances.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "fo/errors.hpp"
#include "fo/report.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Fair rate allocation for communication for omniscience"};
  app.name("fo");

  std::string command;
  std::string instance;
  std::string alpha;
  std::string weights;
  std::string rates;
  std::string format = "json";
  bool no_parallel = false;

  app.add_option("command", command,
                 "min-sum-rate | fair-rates | shapley | check (default: full pipeline)");
  app.add_option("--instance,-i", instance, "Instance file (JSON)")->required();
  app.add_option("--alpha", alpha, "Sum-rate p/q; must not be below the minimum sum-rate");
  app.add_option("--weights", weights, "Per-user weights, e.g. 1=4,2=2,3=1 (default 1)");
  app.add_option("--rates", rates, "Rate vector for check, e.g. 1=2,2=1,3=1 (default 0)");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--no-parallel", no_parallel, "Solve fundamental blocks sequentially");

  CLI11_PARSE(app, argc, argv);

  fo::RunConfig config;
  config.instance_path = instance;
  config.format = format == "text" ? fo::OutputFormat::kText : fo::OutputFormat::kJson;
  config.parallel_blocks = !no_parallel;
  try {
    config.command = fo::parse_command(command);
    if (!alpha.empty()) config.alpha = fo::parse_rational(alpha);
  } catch (const fo::ParseError& e) {
    std::cerr << "error: --alpha: " << e.what() << "\n";
    return fo::exit_code::kParse;
  } catch (const fo::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return fo::exit_code::kError;
  }
  if (!weights.empty()) config.weights = weights;
  if (!rates.empty()) config.rates = rates;

  const fo::RunResult result = fo::run(config);
  std::cout << result.output;
  std::cerr << result.error;
  return result.exit_code;
}
