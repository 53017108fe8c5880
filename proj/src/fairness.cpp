#include "fo/fairness.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <numeric>

#include "fo/dilworth.hpp"
#include "fo/errors.hpp"

namespace fo {
namespace {

void require_same_ground(const GroundSet& a, const GroundSet& b) {
  if (!(a == b)) throw DomainError("rate vector and set function live on different ground sets");
}

void require_base(const RateVector& r, const SetFunction& f_hat) {
  if (!is_base(r, f_hat)) throw DomainError("rate vector is not a base of B(f, <=)");
}

Rational ratio(const RateVector& r, const WeightVector& w, int position) {
  return r[position] / w[position];
}

}  // namespace

RateVector::RateVector(GroundSet ground, std::vector<Rational> rates)
    : ground_(std::move(ground)), rates_(std::move(rates)) {
  if (static_cast<int>(rates_.size()) != ground_.size()) {
    throw DomainError("rate vector needs one entry per user");
  }
}

RateVector RateVector::zero(GroundSet ground) {
  const auto n = static_cast<std::size_t>(ground.size());
  return RateVector(std::move(ground), std::vector<Rational>(n));
}

Rational RateVector::sum(Subset x) const {
  ground_.check(x);
  Rational total = 0;
  x.for_each([&](int p) { total += rates_[static_cast<std::size_t>(p)]; });
  return total;
}

WeightVector::WeightVector(GroundSet ground, std::vector<Rational> weights)
    : ground_(std::move(ground)), weights_(std::move(weights)) {
  if (static_cast<int>(weights_.size()) != ground_.size()) {
    throw DomainError("weight vector needs one entry per user");
  }
  for (std::size_t k = 0; k < weights_.size(); ++k) {
    if (weights_[k] <= 0) {
      throw DomainError("weight of user " + std::to_string(ground_.user(static_cast<int>(k))) +
                        " must be positive, got " + to_string(weights_[k]));
    }
  }
}

WeightVector WeightVector::uniform(GroundSet ground) {
  const auto n = static_cast<std::size_t>(ground.size());
  return WeightVector(std::move(ground), std::vector<Rational>(n, Rational(1)));
}

Rational WeightVector::sum(Subset x) const {
  ground_.check(x);
  Rational total = 0;
  x.for_each([&](int p) { total += weights_[static_cast<std::size_t>(p)]; });
  return total;
}

WeightVector WeightVector::restrict(Subset x) const {
  std::vector<Rational> out;
  x.for_each([&](int p) { out.push_back(weights_[static_cast<std::size_t>(p)]); });
  return WeightVector(ground_.restrict(x), std::move(out));
}

Membership in_polyhedron(const RateVector& r, const SetFunction& f_hat) {
  require_same_ground(r.ground(), f_hat.ground());
  Membership result;
  Rational worst = 0;
  for_each_subset(f_hat.ground().full(), [&](Subset x) {
    Rational excess = r.sum(x) - f_hat(x);
    if (excess > worst) {
      worst = std::move(excess);
      result.member = false;
      result.violated = x;
    }
  });
  return result;
}

bool is_base(const RateVector& r, const SetFunction& f_hat) {
  return in_polyhedron(r, f_hat).member && r.total() == f_hat(f_hat.ground().full());
}

std::vector<Subset> tight_sets(const RateVector& r, const SetFunction& f_hat) {
  if (!in_polyhedron(r, f_hat)) throw DomainError("rate vector is outside the polyhedron");
  std::vector<Subset> out;
  for_each_subset(f_hat.ground().full(), [&](Subset x) {
    if (r.sum(x) == f_hat(x)) out.push_back(x);
  });
  return out;
}

namespace {

Subset dep_from_tight(const std::vector<Subset>& tight, int position, const RateVector& r,
                      const SetFunction& f_hat) {
  Subset result = f_hat.ground().full();
  for (Subset t : tight) {
    if (t.contains(position)) result = result & t;
  }
  // Tight sets of a base are closed under intersection when f_hat is submodular.
  if (r.sum(result) != f_hat(result)) {
    throw InternalError("tight sets are not closed under intersection: " +
                        f_hat.ground().format(result) + " is not tight");
  }
  return result;
}

}  // namespace

Subset dep(const RateVector& r, int user, const SetFunction& f_hat) {
  require_same_ground(r.ground(), f_hat.ground());
  require_base(r, f_hat);
  return dep_from_tight(tight_sets(r, f_hat), f_hat.ground().position(user), r, f_hat);
}

Rational jain_index(const RateVector& r) {
  Rational sum = 0;
  Rational squares = 0;
  for (const Rational& v : r.values()) {
    sum += v;
    squares += v * v;
  }
  if (squares == 0) throw DomainError("Jain's index is undefined for the all-zero vector");
  return sum * sum / (r.size() * squares);
}

std::vector<Rational> sorted_ratio_vector(const RateVector& r, const WeightVector& w) {
  if (!(r.ground() == w.ground())) throw DomainError("rates and weights differ in ground set");
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(r.size()));
  for (int p = 0; p < r.size(); ++p) out.push_back(ratio(r, w, p));
  std::sort(out.begin(), out.end());
  return out;
}

LexOrder lex_compare(const RateVector& a, const RateVector& b, const WeightVector& w) {
  const auto ta = sorted_ratio_vector(a, w);
  const auto tb = sorted_ratio_vector(b, w);
  for (std::size_t k = 0; k < ta.size(); ++k) {
    if (ta[k] > tb[k]) return LexOrder::kDominates;
    if (ta[k] < tb[k]) return LexOrder::kDominatedBy;
  }
  return LexOrder::kEqual;
}

const char* to_string(LexOrder order) {
  switch (order) {
    case LexOrder::kDominates:
      return "dominates";
    case LexOrder::kDominatedBy:
      return "dominated-by";
    case LexOrder::kEqual:
      return "equal";
  }
  return "unknown";
}

namespace {

class Decomposition {
 public:
  Decomposition(const SetFunction& f_hat, const WeightVector& w, std::string_view solver)
      : f_hat_(f_hat), w_(w), solver_(find_solver(solver)) {}

  void run(Subset lower, Subset upper) {
    const GroundSet& ground = f_hat_.ground();
    Rational lambda = (f_hat_(upper) - f_hat_(lower)) / w_.sum(upper - lower);
    const SfmResult min = solver_->minimize(minus_scaled_modular(f_hat_, lambda, w_.values()));
    const Subset s = min.maximal_minimizer;
    trace_.push_back({lower, upper, lambda, s});
    if (!lower.is_subset_of(s) || !s.is_subset_of(upper) || s == lower) {
      throw InternalError("decomposition step between " + ground.format(lower) + " and " +
                          ground.format(upper) + " produced non-nested minimizer " +
                          ground.format(s));
    }
    if (s == upper) {
      sets_.push_back(lower);
      sets_.push_back(upper);
      return;
    }
    run(lower, s);
    run(s, upper);
  }

  std::vector<DecompositionStep> take_trace() { return std::move(trace_); }

  std::vector<Subset> chain_sets() {
    std::sort(sets_.begin(), sets_.end(),
              [](Subset a, Subset b) { return a.size() < b.size() || (a.size() == b.size() && a < b); });
    sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
    return sets_;
  }

 private:
  const SetFunction& f_hat_;
  const WeightVector& w_;
  std::shared_ptr<const SfmSolver> solver_;
  std::vector<DecompositionStep> trace_;
  std::vector<Subset> sets_;
};

}  // namespace

LexOptimalBase lex_optimal_base(const SetFunction& f_hat, const WeightVector& w,
                                std::string_view solver) {
  const GroundSet& ground = f_hat.ground();
  if (!(ground == w.ground())) throw DomainError("weights and set function differ in ground set");
  if (f_hat(Subset{}) != 0) throw DomainError("lex-optimal base needs f({}) = 0");

  Decomposition da(f_hat, w, solver);
  da.run(Subset{}, ground.full());
  const std::vector<Subset> sets = da.chain_sets();

  LexOptimalBase result{RateVector::zero(ground), {}, da.take_trace()};
  for (std::size_t n = 1; n < sets.size(); ++n) {
    const Subset prev = sets[n - 1];
    const Subset cur = sets[n];
    if (!prev.is_subset_of(cur) || prev == cur) {
      throw InternalError("decomposition sets do not form a chain");
    }
    Rational lambda = (f_hat(cur) - f_hat(prev)) / w.sum(cur - prev);
    if (!result.chain.levels.empty() && lambda <= result.chain.levels.back().lambda) {
      throw InternalError("chain levels are not strictly increasing");
    }
    (cur - prev).for_each([&](int p) { result.rates[p] = lambda * w[p]; });
    result.chain.levels.push_back({cur, std::move(lambda)});
  }
  return result;
}

Chain chain_from_rates(const RateVector& r, const WeightVector& w) {
  std::vector<Rational> levels = sorted_ratio_vector(r, w);
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  Chain chain;
  for (Rational& lambda : levels) {
    Subset s;
    for (int p = 0; p < r.size(); ++p) {
      if (ratio(r, w, p) <= lambda) s = s.with(p);
    }
    chain.levels.push_back({s, std::move(lambda)});
  }
  return chain;
}

Lemma1Certificate verify_lemma1(const RateVector& r, const WeightVector& w, const SetFunction& f_hat) {
  require_same_ground(r.ground(), f_hat.ground());
  require_base(r, f_hat);
  const GroundSet& ground = f_hat.ground();
  const std::vector<Subset> tight = tight_sets(r, f_hat);
  for (int i = 0; i < ground.size(); ++i) {
    const Subset d = dep_from_tight(tight, i, r, f_hat);
    const Rational ri = ratio(r, w, i);
    for (int j : d.without(i).positions()) {
      if (ri < ratio(r, w, j)) {
        return Lemma1Certificate{false, std::make_pair(ground.user(i), ground.user(j))};
      }
    }
  }
  return Lemma1Certificate{};
}

RateVector direct_merge(std::span<const RateVector> parts) {
  std::map<int, Rational> by_user;
  for (const RateVector& part : parts) {
    for (int p = 0; p < part.size(); ++p) {
      if (!by_user.emplace(part.ground().user(p), part[p]).second) {
        throw DomainError("direct merge of overlapping rate vectors (user " +
                          std::to_string(part.ground().user(p)) + ")");
      }
    }
  }
  std::vector<int> users;
  std::vector<Rational> rates;
  for (auto& [user, rate] : by_user) {
    users.push_back(user);
    rates.push_back(std::move(rate));
  }
  return RateVector(GroundSet(std::move(users)), std::move(rates));
}

FairAllocation lex_optimal_min_sum_rate(const std::shared_ptr<const EntropyOracle>& oracle,
                                        const WeightVector& w, bool parallel) {
  const GroundSet& ground = oracle->ground();
  if (!(ground == w.ground())) throw DomainError("weights and instance differ in ground set");
  OmniscienceSolution solution = solve_omniscience(oracle);

  const auto& blocks = solution.fundamental_partition.blocks;
  auto solve_block = [&](std::size_t m) {
    const Subset block = blocks[m];
    return lex_optimal_base(block_function(oracle, solution, block), w.restrict(block));
  };

  std::vector<LexOptimalBase> per_block;
  if (parallel && blocks.size() > 1) {
    std::vector<std::future<LexOptimalBase>> jobs;
    for (std::size_t m = 0; m < blocks.size(); ++m) {
      jobs.push_back(std::async(std::launch::async, solve_block, m));
    }
    for (auto& job : jobs) per_block.push_back(job.get());
  } else {
    for (std::size_t m = 0; m < blocks.size(); ++m) per_block.push_back(solve_block(m));
  }

  std::vector<RateVector> parts;
  for (const auto& b : per_block) parts.push_back(b.rates);
  const RateVector merged = direct_merge(parts);
  std::vector<Rational> rates;
  for (int user : ground.users()) rates.push_back(merged.at_user(user));

  FairAllocation out{RateVector(ground, std::move(rates)), std::move(solution), {}};
  const auto& final_blocks = out.omniscience.fundamental_partition.blocks;
  for (std::size_t m = 0; m < final_blocks.size(); ++m) {
    out.blocks.push_back(
        {final_blocks[m], out.omniscience.per_block_quota[m], std::move(per_block[m])});
  }
  return out;
}

CappedMaximum max_rate_under_cap(const SetFunction& f_hat, const WeightVector& w,
                                 const Rational& lambda) {
  if (lambda < 0) throw DomainError("cap level must be nonnegative");
  const GroundSet& ground = f_hat.ground();
  const Subset full = ground.full();
  // min_X f(X) + lambda w(V - X) = lambda w(V) + min_X f(X) - lambda w(X).
  const Rational dual =
      lambda * w.sum(full) + minimize(minus_scaled_modular(f_hat, lambda, w.values())).min_value;

  const LexOptimalBase lex = lex_optimal_base(f_hat, w);
  RateVector capped = lex.rates;
  for (int p = 0; p < ground.size(); ++p) {
    Rational cap = lambda * w[p];
    if (cap < capped[p]) capped[p] = std::move(cap);
  }
  if (!in_polyhedron(capped, f_hat) || capped.total() != dual) {
    throw InternalError("capped lex-optimal vector does not attain the min-max value " +
                        to_string(dual));
  }
  return CappedMaximum{std::move(capped), dual};
}

RateVector greedy_vertex(const SetFunction& f_hat, std::span<const int> order) {
  const GroundSet& ground = f_hat.ground();
  std::vector<int> sorted(order.begin(), order.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> expected(static_cast<std::size_t>(ground.size()));
  std::iota(expected.begin(), expected.end(), 0);
  if (sorted != expected) throw DomainError("greedy order must be a permutation of the ground set");

  RateVector r = RateVector::zero(ground);
  Subset prefix;
  Rational prev = f_hat(prefix);
  for (int p : order) {
    prefix = prefix.with(p);
    Rational cur = f_hat(prefix);
    r[p] = cur - prev;
    prev = std::move(cur);
  }
  return r;
}

RateVector shapley(const SetFunction& f_hat) {
  const GroundSet& ground = f_hat.ground();
  const int n = ground.size();
  if (n > kMaxShapleyUsers) {
    throw CapacityError("Shapley value is limited to " + std::to_string(kMaxShapleyUsers) +
                        " users, instance has " + std::to_string(n));
  }
  // coefficient[k] = k! (n - k - 1)! / n!
  std::vector<Integer> factorial(static_cast<std::size_t>(n) + 1, Integer(1));
  for (int k = 1; k <= n; ++k) factorial[static_cast<std::size_t>(k)] = factorial[static_cast<std::size_t>(k - 1)] * k;
  std::vector<Rational> coefficient(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    coefficient[static_cast<std::size_t>(k)] =
        Rational(factorial[static_cast<std::size_t>(k)] * factorial[static_cast<std::size_t>(n - k - 1)],
                 factorial[static_cast<std::size_t>(n)]);
  }
  RateVector r = RateVector::zero(ground);
  for_each_subset(ground.full(), [&](Subset x) {
    const Rational fx = f_hat(x);
    const Rational& c = coefficient[static_cast<std::size_t>(std::min(x.size(), n - 1))];
    for (int i = 0; i < n; ++i) {
      if (x.contains(i)) continue;
      r[i] += c * (f_hat(x.with(i)) - fx);
    }
  });
  return r;
}

}  // namespace fo
