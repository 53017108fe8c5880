#include "fo/omniscience.hpp"

#include <optional>

#include "fo/dilworth.hpp"
#include "fo/errors.hpp"

namespace fo {
namespace {

void require_two_users(const EntropyOracle& oracle) {
  if (oracle.ground().size() < 2) {
    throw DomainError("need at least 2 users for a minimum sum-rate");
  }
}

struct Maximizers {
  Rational value;
  std::vector<Partition> finest;  // maximizers with the largest block count
};

Maximizers scan_partitions(const EntropyOracle& oracle) {
  require_two_users(oracle);
  const Subset full = oracle.ground().full();
  const Rational joint = oracle.entropy(full);
  std::vector<Rational> entropy(std::size_t{1} << oracle.ground().size());
  for_each_subset(full, [&](Subset x) { entropy[x.mask()] = oracle.entropy(x); });

  std::optional<Maximizers> best;
  for_each_partition(full, 2, [&](const Partition& p) {
    Rational sum = 0;
    for (Subset c : p.blocks) sum += joint - entropy[c.mask()];
    Rational value = sum / (p.size() - 1);
    if (!best || value > best->value) {
      best = Maximizers{std::move(value), {p}};
    } else if (value == best->value) {
      const int count = best->finest.front().size();
      if (p.size() > count) {
        best->finest.assign(1, p);
      } else if (p.size() == count) {
        best->finest.push_back(p);
      }
    }
  });
  return std::move(*best);
}

Partition unique_finest(const Maximizers& m, const GroundSet& ground) {
  if (m.finest.size() > 1) {
    std::string listing;
    for (const Partition& p : m.finest) {
      listing += " [";
      for (Subset b : p.blocks) listing += ground.format(b);
      listing += "]";
    }
    throw AmbiguityError("ambiguous fundamental partition: " + std::to_string(m.finest.size()) +
                         " finest maximizers with " + std::to_string(m.finest.front().size()) +
                         " blocks:" + listing);
  }
  return m.finest.front();
}

}  // namespace

const Rational& OmniscienceSolution::quota(Subset block) const {
  return per_block_quota[static_cast<std::size_t>(block_index(block))];
}

int OmniscienceSolution::block_index(Subset block) const {
  const auto& blocks = fundamental_partition.blocks;
  for (std::size_t m = 0; m < blocks.size(); ++m) {
    if (blocks[m] == block) return static_cast<int>(m);
  }
  throw DomainError("subset is not a block of the fundamental partition");
}

Rational partition_rate(const EntropyOracle& oracle, const Partition& partition) {
  if (partition.size() < 2) throw DomainError("partition_rate needs at least two blocks");
  const Subset full = oracle.ground().full();
  if (partition.support() != full) throw DomainError("partition does not cover the ground set");
  Rational sum = 0;
  for (Subset c : partition.blocks) sum += oracle.conditional_entropy(full - c, c);
  return sum / (partition.size() - 1);
}

Rational min_sum_rate(const EntropyOracle& oracle) { return scan_partitions(oracle).value; }

Partition fundamental_partition(const EntropyOracle& oracle) {
  return unique_finest(scan_partitions(oracle), oracle.ground());
}

SetFunction truncated_dual(const std::shared_ptr<const EntropyOracle>& oracle,
                           const Rational& alpha) {
  return truncated_function(dual(co_function(oracle, alpha)));
}

OmniscienceSolution solve_omniscience(const std::shared_ptr<const EntropyOracle>& oracle) {
  Maximizers m = scan_partitions(*oracle);
  OmniscienceSolution solution{m.value, unique_finest(m, oracle->ground()), {}};
  const SetFunction f_hat = truncated_dual(oracle, solution.min_sum_rate);
  Rational total = 0;
  for (Subset c : solution.fundamental_partition.blocks) {
    solution.per_block_quota.push_back(f_hat(c));
    total += solution.per_block_quota.back();
  }
  if (total != solution.min_sum_rate) {
    throw InternalError("block quotas sum to " + to_string(total) + " instead of R_CO = " +
                        to_string(solution.min_sum_rate));
  }
  return solution;
}

SetFunction block_function(const std::shared_ptr<const EntropyOracle>& oracle,
                           const OmniscienceSolution& solution, Subset block) {
  const Rational& quota = solution.quota(block);
  if (block.size() >= 2) {
    const RestrictedOracle sub(oracle, block);
    const Rational sub_rate = min_sum_rate(sub);
    if (quota < sub_rate) {
      throw InternalError("block " + oracle->ground().format(block) + " has quota " +
                          to_string(quota) + " below its own minimum sum-rate " +
                          to_string(sub_rate));
    }
  }
  return restrict_to(truncated_dual(oracle, solution.min_sum_rate), block);
}

SetFunction block_function(const std::shared_ptr<const EntropyOracle>& oracle, Subset block) {
  return block_function(oracle, solve_omniscience(oracle), block);
}

bool is_achievable(const EntropyOracle& oracle, const Rational& alpha) {
  return alpha >= min_sum_rate(oracle);
}

}  // namespace fo
