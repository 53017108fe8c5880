#include "fo/report.hpp"

#include <sstream>

#include "fo/errors.hpp"
#include "fo/fairness.hpp"
#include "fo/omniscience.hpp"

namespace fo {
namespace {

Report users_json(const GroundSet& ground, Subset x) {
  Report out = Report::array();
  for (int u : ground.user_ids(x)) out.push_back(u);
  return out;
}

Report partition_json(const GroundSet& ground, const Partition& p) {
  Report out = Report::array();
  for (Subset block : p.blocks) out.push_back(users_json(ground, block));
  return out;
}

Report rates_json(const RateVector& r) {
  Report out = Report::object();
  for (int p = 0; p < r.size(); ++p) out[std::to_string(r.ground().user(p))] = to_string(r[p]);
  return out;
}

Report chain_json(const GroundSet& ground, const Chain& chain) {
  Report out = Report::array();
  for (const ChainLevel& level : chain.levels) {
    out.push_back({{"set", users_json(ground, level.set)}, {"lambda", to_string(level.lambda)}});
  }
  return out;
}

Report jain_json(const RateVector& r) {
  const bool all_zero = std::all_of(r.values().begin(), r.values().end(),
                                    [](const Rational& v) { return v == 0; });
  return all_zero ? Report(nullptr) : Report(to_string(jain_index(r)));
}

Report lemma1_json(const Lemma1Certificate& cert) {
  Report out = {{"pass", cert.pass}};
  if (cert.witness) out["witness"] = {cert.witness->first, cert.witness->second};
  return out;
}

WeightVector weights_of(const Instance& instance, const RunConfig& config) {
  if (!config.weights) return WeightVector::uniform(instance.ground());
  return WeightVector(instance.ground(),
                      parse_user_values(*config.weights, instance.ground(), Rational(1)));
}

// The sum-rate the fairness commands work at: alpha if given (and feasible), else R_CO.
Rational working_alpha(const RunConfig& config, const OmniscienceSolution& solution) {
  if (!config.alpha) return solution.min_sum_rate;
  if (*config.alpha < solution.min_sum_rate) {
    throw InfeasibleError("infeasible sum-rate: alpha = " + to_string(*config.alpha) +
                              " is below the minimum sum-rate R_CO = " +
                              to_string(solution.min_sum_rate),
                          solution.min_sum_rate);
  }
  return *config.alpha;
}

void add_omniscience(Report& out, const GroundSet& ground, const OmniscienceSolution& solution) {
  out["min_sum_rate"] = to_string(solution.min_sum_rate);
  out["fundamental_partition"] = partition_json(ground, solution.fundamental_partition);
  Report quotas = Report::array();
  for (std::size_t m = 0; m < solution.per_block_quota.size(); ++m) {
    quotas.push_back({{"block", users_json(ground, solution.fundamental_partition.blocks[m])},
                      {"quota", to_string(solution.per_block_quota[m])}});
  }
  out["block_quotas"] = std::move(quotas);
}

void add_fair_rates(Report& out, const Instance& instance, const RunConfig& config,
                    const OmniscienceSolution& solution) {
  const GroundSet& ground = instance.ground();
  const WeightVector w = weights_of(instance, config);
  const Rational alpha = working_alpha(config, solution);
  const SetFunction f_hat = truncated_dual(instance.oracle, alpha);

  out["alpha"] = to_string(alpha);
  Report weights = Report::object();
  for (int p = 0; p < ground.size(); ++p) weights[std::to_string(ground.user(p))] = to_string(w[p]);
  out["weights"] = std::move(weights);

  if (config.alpha) {
    const LexOptimalBase lex = lex_optimal_base(f_hat, w);
    out["rates"] = rates_json(lex.rates);
    out["chain"] = chain_json(ground, lex.chain);
    out["jain"] = jain_json(lex.rates);
    out["lemma1"] = lemma1_json(verify_lemma1(lex.rates, w, f_hat));
    return;
  }
  const FairAllocation alloc = lex_optimal_min_sum_rate(instance.oracle, w, config.parallel_blocks);
  out["rates"] = rates_json(alloc.rates);
  out["chain"] = chain_json(ground, chain_from_rates(alloc.rates, w));
  Report blocks = Report::array();
  for (const BlockAllocation& b : alloc.blocks) {
    blocks.push_back({{"block", users_json(ground, b.block)},
                      {"quota", to_string(b.quota)},
                      {"chain", chain_json(b.result.rates.ground(), b.result.chain)}});
  }
  out["blocks"] = std::move(blocks);
  out["jain"] = jain_json(alloc.rates);
  out["lemma1"] = lemma1_json(verify_lemma1(alloc.rates, w, f_hat));
}

void add_shapley(Report& out, const Instance& instance, const RunConfig& config,
                 const OmniscienceSolution& solution) {
  const Rational alpha = working_alpha(config, solution);
  const SetFunction f_hat = truncated_dual(instance.oracle, alpha);
  const RateVector value = shapley(f_hat);
  const RateVector lex = lex_optimal_base(f_hat, WeightVector::uniform(instance.ground())).rates;
  out["shapley"] = rates_json(value);
  out["jain_shapley"] = jain_json(value);
  out["lex_optimal"] = rates_json(lex);
  out["jain_lex_optimal"] = jain_json(lex);
}

std::string text_value(const Report& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_object()) {
    std::string out;
    for (const auto& [key, v] : value.items()) {
      if (!out.empty()) out += " ";
      out += key + "=" + text_value(v);
    }
    return out;
  }
  std::string dumped = value.dump();
  dumped.erase(std::remove(dumped.begin(), dumped.end(), '"'), dumped.end());
  return dumped;
}

}  // namespace

Command parse_command(std::string_view name) {
  if (name.empty() || name == "all") return Command::kPipeline;
  if (name == "min-sum-rate") return Command::kMinSumRate;
  if (name == "fair-rates") return Command::kFairRates;
  if (name == "shapley") return Command::kShapley;
  if (name == "check") return Command::kCheck;
  throw ConfigurationError("unknown command \"" + std::string(name) +
                           "\" (expected min-sum-rate, fair-rates, shapley or check)");
}

Report min_sum_rate_report(const Instance& instance) {
  Report out = Report::object();
  add_omniscience(out, instance.ground(), solve_omniscience(instance.oracle));
  return out;
}

Report fair_rates_report(const Instance& instance, const RunConfig& config) {
  const OmniscienceSolution solution = solve_omniscience(instance.oracle);
  Report out = Report::object();
  out["min_sum_rate"] = to_string(solution.min_sum_rate);
  out["fundamental_partition"] = partition_json(instance.ground(), solution.fundamental_partition);
  add_fair_rates(out, instance, config, solution);
  return out;
}

Report shapley_report(const Instance& instance, const RunConfig& config) {
  const OmniscienceSolution solution = solve_omniscience(instance.oracle);
  Report out = Report::object();
  out["min_sum_rate"] = to_string(solution.min_sum_rate);
  out["alpha"] = to_string(working_alpha(config, solution));
  add_shapley(out, instance, config, solution);
  return out;
}

Report check_report(const Instance& instance, const RunConfig& config) {
  if (!config.rates) throw ConfigurationError("check needs --rates");
  const GroundSet& ground = instance.ground();
  const OmniscienceSolution solution = solve_omniscience(instance.oracle);
  const Rational alpha = working_alpha(config, solution);
  const SetFunction f_hat = truncated_dual(instance.oracle, alpha);
  const WeightVector w = weights_of(instance, config);
  const RateVector r(ground, parse_user_values(*config.rates, ground, Rational(0)));

  Report out = Report::object();
  out["min_sum_rate"] = to_string(solution.min_sum_rate);
  out["alpha"] = to_string(alpha);
  out["rates"] = rates_json(r);
  const Membership member = in_polyhedron(r, f_hat);
  out["in_polyhedron"] = member.member;
  out["is_base"] = member.member && r.total() == f_hat(ground.full());
  if (!member) {
    out["violated_set"] = users_json(ground, *member.violated);
    return out;
  }
  Report tight = Report::array();
  for (Subset t : tight_sets(r, f_hat)) tight.push_back(users_json(ground, t));
  out["tight_sets"] = std::move(tight);
  if (!out["is_base"].get<bool>()) return out;
  Report deps = Report::object();
  for (int user : ground.users()) deps[std::to_string(user)] = users_json(ground, dep(r, user, f_hat));
  out["dep"] = std::move(deps);
  out["lemma1"] = lemma1_json(verify_lemma1(r, w, f_hat));
  return out;
}

Report pipeline_report(const Instance& instance, const RunConfig& config) {
  const OmniscienceSolution solution = solve_omniscience(instance.oracle);
  Report out = Report::object();
  add_omniscience(out, instance.ground(), solution);
  add_fair_rates(out, instance, config, solution);
  if (instance.ground().size() <= kMaxShapleyUsers) add_shapley(out, instance, config, solution);
  return out;
}

Report build_report(const Instance& instance, const RunConfig& config) {
  switch (config.command) {
    case Command::kPipeline:
      return pipeline_report(instance, config);
    case Command::kMinSumRate:
      return min_sum_rate_report(instance);
    case Command::kFairRates:
      return fair_rates_report(instance, config);
    case Command::kShapley:
      return shapley_report(instance, config);
    case Command::kCheck:
      return check_report(instance, config);
  }
  throw ConfigurationError("unhandled command");
}

std::string render(const Report& report, OutputFormat format) {
  if (format == OutputFormat::kJson) return report.dump(2) + "\n";
  std::ostringstream out;
  for (const auto& [key, value] : report.items()) {
    if (key == "blocks" || key == "block_quotas") {
      for (const auto& entry : value) {
        out << key << ": " << text_value(entry) << "\n";
      }
      continue;
    }
    out << key << ": " << text_value(value) << "\n";
  }
  return out.str();
}

RunResult run(const RunConfig& config) {
  RunResult result;
  try {
    const Instance instance = load_instance(config.instance_path);
    result.output = render(build_report(instance, config), config.format);
  } catch (const InfeasibleError& e) {
    result = {exit_code::kInfeasible, "", std::string("error: ") + e.what() + "\n"};
  } catch (const ParseError& e) {
    result = {exit_code::kParse, "", std::string("error: ") + e.what() + "\n"};
  } catch (const CapacityError& e) {
    result = {exit_code::kCapacity, "", std::string("error: ") + e.what() + "\n"};
  } catch (const AmbiguityError& e) {
    result = {exit_code::kCapacity, "", std::string("error: ") + e.what() + "\n"};
  } catch (const Error& e) {
    result = {exit_code::kError, "", std::string("error: ") + e.what() + "\n"};
  }
  return result;
}

}  // namespace fo
