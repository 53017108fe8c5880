#pragma once

#include <memory>
#include <vector>

#include "fo/rational.hpp"
#include "fo/set_function.hpp"
#include "fo/source_model.hpp"
#include "fo/subset.hpp"

namespace fo {

struct OmniscienceSolution {
  Rational min_sum_rate;
  Partition fundamental_partition;
  // per_block_quota[m] is the truncated dual at alpha = min_sum_rate evaluated
  // on block m; the quotas sum to min_sum_rate.
  std::vector<Rational> per_block_quota;

  // Throws DomainError if `block` is not a block of the fundamental partition.
  const Rational& quota(Subset block) const;
  int block_index(Subset block) const;
};

// Objective of the partition maximization for one partition with at least two
// blocks: sum over blocks C of H(Z_{V-C} | Z_C), divided by |P| - 1.
Rational partition_rate(const EntropyOracle& oracle, const Partition& partition);

// Minimum sum-rate for omniscience: the maximum of partition_rate over all
// partitions of V with at least two blocks. Throws DomainError if |V| < 2.
Rational min_sum_rate(const EntropyOracle& oracle);

// The finest maximizing partition. Throws AmbiguityError if two distinct
// maximizers share the largest block count.
Partition fundamental_partition(const EntropyOracle& oracle);

// One pass over the partitions computing all of the above, plus block quotas.
OmniscienceSolution solve_omniscience(const std::shared_ptr<const EntropyOracle>& oracle);

// Truncated dual function f^#_alpha with its Dilworth truncation applied.
SetFunction truncated_dual(const std::shared_ptr<const EntropyOracle>& oracle, const Rational& alpha);

// h_C: the truncated dual at alpha = R_CO(V), restricted to subsets of block C
// (re-indexed over the users of C). For |C| >= 2 asserts h_C(C) >= R_CO(C) of
// the sub-source on C. Throws DomainError if C is not a fundamental block.
SetFunction block_function(const std::shared_ptr<const EntropyOracle>& oracle,
                           const OmniscienceSolution& solution, Subset block);
SetFunction block_function(const std::shared_ptr<const EntropyOracle>& oracle, Subset block);

// True iff alpha >= R_CO(V).
bool is_achievable(const EntropyOracle& oracle, const Rational& alpha);

}  // namespace fo
