#include "fo/dilworth.hpp"

#include <mutex>
#include <optional>
#include <shared_mutex>
#include <unordered_map>

#include "fo/errors.hpp"

namespace fo {

Rational truncate(const SetFunction& f_sharp, Subset x) {
  f_sharp.ground().check(x);
  if (x.empty()) throw DomainError("Dilworth truncation is evaluated on nonempty sets only");
  std::optional<Rational> best;
  for_each_partition(x, 1, [&](const Partition& p) {
    Rational sum = 0;
    for (Subset block : p.blocks) sum += f_sharp(block);
    if (!best || sum < *best) best = std::move(sum);
  });
  return *best;
}

namespace {

// Memo table for the first-block recursion, shared by all copies of the
// truncated function.
class TruncationTable {
 public:
  explicit TruncationTable(SetFunction f_sharp) : f_sharp_(std::move(f_sharp)) {}

  Rational value(Subset x) {
    if (x.empty()) return 0;
    {
      std::shared_lock lock(mutex_);
      auto it = values_.find(x.mask());
      if (it != values_.end()) return it->second;
    }
    const int first = x.first();
    std::optional<Rational> best;
    for_each_subset(x.without(first), [&](Subset others) {
      const Subset block = others.with(first);
      Rational v = f_sharp_(block) + value(x - block);
      if (!best || v < *best) best = std::move(v);
    });
    std::unique_lock lock(mutex_);
    return values_.try_emplace(x.mask(), std::move(*best)).first->second;
  }

 private:
  SetFunction f_sharp_;
  std::shared_mutex mutex_;
  std::unordered_map<Subset::Mask, Rational> values_;
};

}  // namespace

SetFunction truncated_function(const SetFunction& f_sharp) {
  auto table = std::make_shared<TruncationTable>(f_sharp);
  return SetFunction(f_sharp.ground(), [table](Subset x) { return table->value(x); });
}

Rational truncate_via_sfm(const SetFunction& f_sharp, Subset x, std::string_view solver) {
  const GroundSet& ground = f_sharp.ground();
  ground.check(x);
  if (x.empty()) throw DomainError("Dilworth truncation is evaluated on nonempty sets only");

  const std::vector<int> elems = x.positions();
  // y indexed by position in `elems`.
  std::vector<Rational> y;
  y.reserve(elems.size());
  y.push_back(f_sharp(Subset::singleton(elems.front())));
  for (std::size_t j = 1; j < elems.size(); ++j) {
    const std::vector<int> prefix(elems.begin(), elems.begin() + static_cast<long>(j));
    const int current = elems[j];
    std::vector<int> prefix_users;
    for (int p : prefix) prefix_users.push_back(ground.user(p));
    SetFunction slack(GroundSet(prefix_users), [&](Subset local) {
      Rational value = f_sharp(lift(local, prefix).with(current));
      local.for_each([&](int k) { value -= y[static_cast<std::size_t>(k)]; });
      return value;
    });
    y.push_back(minimize_with_solver(slack, solver).min_value);
  }
  Rational total = 0;
  for (const Rational& v : y) total += v;

#ifndef NDEBUG
  if (total != truncate(f_sharp, x)) {
    throw InternalError("truncate_via_sfm disagrees with partition enumeration on " +
                        ground.format(x));
  }
#endif
  return total;
}

}  // namespace fo
