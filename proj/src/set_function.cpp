#include "fo/set_function.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "fo/errors.hpp"

namespace fo {

struct SetFunction::Cache {
  std::shared_mutex mutex;
  std::unordered_map<Subset::Mask, Rational> values;
};

SetFunction::SetFunction(GroundSet ground, Evaluator eval)
    : ground_(std::make_shared<const GroundSet>(std::move(ground))),
      eval_(std::make_shared<const Evaluator>(std::move(eval))),
      cache_(std::make_shared<Cache>()) {}

Rational SetFunction::operator()(Subset x) const {
  ground_->check(x);
  {
    std::shared_lock lock(cache_->mutex);
    auto it = cache_->values.find(x.mask());
    if (it != cache_->values.end()) return it->second;
  }
  // Evaluated outside the lock: evaluators may recursively query this function.
  Rational value = (*eval_)(x);
  std::unique_lock lock(cache_->mutex);
  return cache_->values.try_emplace(x.mask(), std::move(value)).first->second;
}

SetFunction co_function(std::shared_ptr<const EntropyOracle> oracle, const Rational& alpha) {
  if (alpha < 0) throw DomainError("alpha must be nonnegative, got " + to_string(alpha));
  GroundSet ground = oracle->ground();
  const Subset full = ground.full();
  return SetFunction(std::move(ground), [oracle = std::move(oracle), alpha, full](Subset x) {
    if (x == full) return alpha;
    return oracle->conditional_entropy(x, full - x);
  });
}

SetFunction dual(const SetFunction& f) {
  const Subset full = f.ground().full();
  return SetFunction(f.ground(), [f, full](Subset x) { return f(full) - f(full - x); });
}

SetFunction restrict_to(const SetFunction& f, Subset domain) {
  std::vector<int> parent_positions = domain.positions();
  return SetFunction(f.ground().restrict(domain),
                     [f, parent_positions = std::move(parent_positions)](Subset x) {
                       return f(lift(x, parent_positions));
                     });
}

SetFunction modular_function(GroundSet ground, std::vector<Rational> coefficients) {
  if (static_cast<int>(coefficients.size()) != ground.size()) {
    throw DomainError("modular function needs one coefficient per user");
  }
  return SetFunction(std::move(ground), [c = std::move(coefficients)](Subset x) {
    Rational sum = 0;
    x.for_each([&](int p) { sum += c[static_cast<std::size_t>(p)]; });
    return sum;
  });
}

SetFunction minus_scaled_modular(const SetFunction& f, const Rational& lambda,
                                 const std::vector<Rational>& weights) {
  if (static_cast<int>(weights.size()) != f.ground().size()) {
    throw DomainError("weight vector does not match the ground set");
  }
  return SetFunction(f.ground(), [f, lambda, weights](Subset x) {
    Rational w = 0;
    x.for_each([&](int p) { w += weights[static_cast<std::size_t>(p)]; });
    return f(x) - lambda * w;
  });
}

Subset Partition::support() const {
  Subset out;
  for (Subset b : blocks) out = out | b;
  return out;
}

void for_each_partition(Subset x, int min_blocks, const std::function<void(const Partition&)>& fn) {
  if (x.empty()) throw DomainError("cannot partition the empty set");
  const int n = x.size();
  if (min_blocks < 1 || min_blocks > n) {
    throw DomainError("min_blocks must lie in [1, " + std::to_string(n) + "]");
  }
  const std::vector<int> elems = x.positions();
  // Restricted growth string: code[0] = 0, code[k] <= 1 + max(code[0..k-1]).
  std::vector<int> code(static_cast<std::size_t>(n), 0);
  std::vector<int> prefix_max(static_cast<std::size_t>(n), 0);
  Partition partition;
  while (true) {
    const int blocks = prefix_max.back() + 1;
    if (blocks >= min_blocks) {
      partition.blocks.assign(static_cast<std::size_t>(blocks), Subset{});
      for (int k = 0; k < n; ++k) {
        auto& b = partition.blocks[static_cast<std::size_t>(code[static_cast<std::size_t>(k)])];
        b = b.with(elems[static_cast<std::size_t>(k)]);
      }
      fn(partition);
    }
    // Advance to the next string in lexicographic order.
    int k = n - 1;
    while (k > 0 && code[static_cast<std::size_t>(k)] > prefix_max[static_cast<std::size_t>(k - 1)]) --k;
    if (k == 0) return;
    ++code[static_cast<std::size_t>(k)];
    prefix_max[static_cast<std::size_t>(k)] =
        std::max(prefix_max[static_cast<std::size_t>(k - 1)], code[static_cast<std::size_t>(k)]);
    for (int j = k + 1; j < n; ++j) {
      code[static_cast<std::size_t>(j)] = 0;
      prefix_max[static_cast<std::size_t>(j)] = prefix_max[static_cast<std::size_t>(k)];
    }
  }
}

std::vector<Partition> enumerate_partitions(Subset x, int min_blocks) {
  std::vector<Partition> out;
  for_each_partition(x, min_blocks, [&](const Partition& p) { out.push_back(p); });
  return out;
}

SubmodularityCheck is_submodular(const SetFunction& f) {
  const int n = f.ground().size();
  SubmodularityCheck result;
  for_each_subset(f.ground().full(), [&](Subset x) {
    if (!result.submodular) return;
    const Rational fx = f(x);
    for (int i = 0; i < n && result.submodular; ++i) {
      if (x.contains(i)) continue;
      const Rational fxi = f(x.with(i));
      for (int j = i + 1; j < n; ++j) {
        if (x.contains(j)) continue;
        if (fxi + f(x.with(j)) < f(x.with(i).with(j)) + fx) {
          result.submodular = false;
          result.witness = std::make_pair(x.with(i), x.with(j));
          break;
        }
      }
    }
  });
  return result;
}

}  // namespace fo
