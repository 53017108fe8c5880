#include "fo/sfm.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>

#include "fo/errors.hpp"

namespace fo {
namespace {

struct Registry {
  std::shared_mutex mutex;
  std::map<std::string, std::shared_ptr<const SfmSolver>, std::less<>> solvers;

  Registry() {
    solvers.emplace(std::string(kBruteForceSolver), std::make_shared<BruteForceSolver>());
    solvers.emplace(std::string(kMinNormPointSolver), std::make_shared<MinNormPointSolver>());
  }
};

Registry& registry() {
  static Registry instance;
  return instance;
}

}  // namespace

SfmResult BruteForceSolver::minimize(const SetFunction& g) const {
  std::optional<Rational> best;
  std::vector<Subset> minimizers;
  for_each_subset(g.ground().full(), [&](Subset x) {
    Rational value = g(x);
    if (!best || value < *best) {
      best = std::move(value);
      minimizers.assign(1, x);
    } else if (value == *best) {
      minimizers.push_back(x);
    }
  });
  Subset maximal;
  for (Subset m : minimizers) maximal = maximal | m;
  if (g(maximal) != *best) {
    throw InternalError("non-lattice minimizer set: union " + g.ground().format(maximal) +
                        " of the minimizers is not a minimizer");
  }
  return SfmResult{*best, maximal, std::move(minimizers)};
}

SfmResult minimize(const SetFunction& g) { return BruteForceSolver{}.minimize(g); }

std::shared_ptr<const SfmSolver> find_solver(std::string_view name) {
  Registry& r = registry();
  std::shared_lock lock(r.mutex);
  auto it = r.solvers.find(name);
  if (it == r.solvers.end()) {
    throw ConfigurationError("unknown SFM solver \"" + std::string(name) + "\"");
  }
  return it->second;
}

SfmResult minimize_with_solver(const SetFunction& g, std::string_view solver) {
  return find_solver(solver)->minimize(g);
}

void register_solver(std::shared_ptr<const SfmSolver> solver) {
  Registry& r = registry();
  std::unique_lock lock(r.mutex);
  std::string name(solver->name());
  r.solvers[name] = std::move(solver);
}

std::vector<std::string> registered_solvers() {
  Registry& r = registry();
  std::shared_lock lock(r.mutex);
  std::vector<std::string> names;
  for (const auto& [name, solver] : r.solvers) names.push_back(name);
  return names;
}

}  // namespace fo
