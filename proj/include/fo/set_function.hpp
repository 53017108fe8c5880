#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "fo/rational.hpp"
#include "fo/source_model.hpp"
#include "fo/subset.hpp"

namespace fo {

// A total, pure map from subsets of a ground set to exact rationals.
//
// Values are memoized in a cache shared by all copies of the function. The
// cache is internally synchronized, so concurrent callers see plain
// pure-function semantics.
class SetFunction {
 public:
  using Evaluator = std::function<Rational(Subset)>;

  SetFunction(GroundSet ground, Evaluator eval);

  const GroundSet& ground() const { return *ground_; }
  // Throws DomainError if x is not a subset of the ground set.
  Rational operator()(Subset x) const;

 private:
  struct Cache;

  std::shared_ptr<const GroundSet> ground_;
  std::shared_ptr<const Evaluator> eval_;
  std::shared_ptr<Cache> cache_;
};

// f_alpha(X) = H(Z_X | Z_{V-X}) for X a proper subset, f_alpha(V) = alpha.
SetFunction co_function(std::shared_ptr<const EntropyOracle> oracle, const Rational& alpha);

// f#(X) = f(V) - f(V - X).
SetFunction dual(const SetFunction& f);

// f restricted to the subsets of `domain`, re-indexed over the sub-ground set.
SetFunction restrict_to(const SetFunction& f, Subset domain);

// X -> sum of coefficients[k] over positions k in X.
SetFunction modular_function(GroundSet ground, std::vector<Rational> coefficients);

// X -> f(X) - lambda * w(X), the SFM objective of the decomposition algorithm.
SetFunction minus_scaled_modular(const SetFunction& f, const Rational& lambda,
                                 const std::vector<Rational>& weights);

// Disjoint nonempty blocks. Blocks are kept in the order the enumerator
// produced them (by lowest element).
struct Partition {
  std::vector<Subset> blocks;

  Subset support() const;
  int size() const { return static_cast<int>(blocks.size()); }
  friend bool operator==(const Partition&, const Partition&) = default;
};

// Visits every partition of x with at least min_blocks blocks exactly once,
// in restricted-growth-string order. Throws DomainError for empty x or
// min_blocks outside [1, |x|].
void for_each_partition(Subset x, int min_blocks, const std::function<void(const Partition&)>& fn);
std::vector<Partition> enumerate_partitions(Subset x, int min_blocks = 1);

struct SubmodularityCheck {
  bool submodular = true;
  // On failure, (X, Y) with f(X) + f(Y) < f(X | Y) + f(X & Y).
  std::optional<std::pair<Subset, Subset>> witness;

  explicit operator bool() const { return submodular; }
};

// Exhaustive check via the local form f(X+i) + f(X+j) >= f(X+i+j) + f(X);
// the first violation in (X ascending, i < j) order is returned as witness
// (X+i, X+j).
SubmodularityCheck is_submodular(const SetFunction& f);

}  // namespace fo
