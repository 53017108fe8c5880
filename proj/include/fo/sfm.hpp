#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fo/rational.hpp"
#include "fo/set_function.hpp"
#include "fo/subset.hpp"

namespace fo {

struct SfmResult {
  Rational min_value;
  // Union of all minimizers; for submodular input it is itself a minimizer
  // and contains every other minimizer.
  Subset maximal_minimizer;
  // Every minimizer, in ascending mask order. Only the reference solver fills this.
  std::optional<std::vector<Subset>> all_minimizers;
};

// Pluggable submodular function minimization engine. Minimization ranges over
// all subsets of the ground set, the empty set included.
class SfmSolver {
 public:
  virtual ~SfmSolver() = default;
  virtual std::string_view name() const = 0;
  virtual SfmResult minimize(const SetFunction& g) const = 0;
};

// Exhaustive scan over all 2^|V| subsets. Correct for any input; throws
// InternalError ("non-lattice minimizer set") when the union of the
// minimizers is not a minimizer, which can only happen for non-submodular g.
class BruteForceSolver final : public SfmSolver {
 public:
  std::string_view name() const override { return "brute-force"; }
  SfmResult minimize(const SetFunction& g) const override;
};

// Fujishige-Wolfe minimum-norm-point algorithm in exact arithmetic. The
// maximal minimizer is {i : x*_i <= 0} for the min-norm base x* of g - g({}).
class MinNormPointSolver final : public SfmSolver {
 public:
  std::string_view name() const override { return "min-norm-point"; }
  SfmResult minimize(const SetFunction& g) const override;
};

inline constexpr std::string_view kBruteForceSolver = "brute-force";
inline constexpr std::string_view kMinNormPointSolver = "min-norm-point";

SfmResult minimize(const SetFunction& g);
// Throws ConfigurationError for an unregistered solver name.
SfmResult minimize_with_solver(const SetFunction& g, std::string_view solver);

std::shared_ptr<const SfmSolver> find_solver(std::string_view name);
// Registers (or replaces) a solver under solver->name().
void register_solver(std::shared_ptr<const SfmSolver> solver);
std::vector<std::string> registered_solvers();

}  // namespace fo
