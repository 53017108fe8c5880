#pragma once

// Fixtures, random generators and brute-force oracles shared by the tests.
// The oracles here deliberately avoid the library's own algorithms.

#include <algorithm>
#include <functional>
#include <memory>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "fo/fairness.hpp"
#include "fo/omniscience.hpp"
#include "fo/rational.hpp"
#include "fo/set_function.hpp"
#include "fo/source_model.hpp"
#include "fo/subset.hpp"

namespace fo::testing {

inline Rational Q(long num, long den = 1) { return Rational(num, den); }
inline Rational R(const std::string& text) { return parse_rational(text); }

inline std::vector<Rational> Qs(std::initializer_list<Rational> values) { return values; }

// Users 1, 2, 3 observing (a..e), (a,b,f), (c,d,f).
inline std::shared_ptr<const EntropyOracle> example1() {
  return std::make_shared<BitPoolSource>(
      GroundSet::range(3),
      std::vector<std::vector<std::string>>{{"a", "b", "c", "d", "e"}, {"a", "b", "f"}, {"c", "d", "f"}});
}

// Users 1..4 with minimum sum-rate 6 and fundamental partition {{1,2,3},{4}}.
inline std::shared_ptr<const EntropyOracle> example4() {
  return std::make_shared<BitPoolSource>(
      GroundSet::range(4), std::vector<std::vector<std::string>>{{"c", "d", "f", "g", "h"},
                                                                  {"a", "d", "g", "h"},
                                                                  {"c", "d", "e", "f", "g", "h"},
                                                                  {"a", "b", "f"}});
}

// Subset from 1-based user ids over GroundSet::range(n).
inline Subset S(std::initializer_list<int> users) {
  Subset x;
  for (int u : users) x = x.with(u - 1);
  return x;
}

inline RateVector rates(std::initializer_list<Rational> values) {
  return RateVector(GroundSet::range(static_cast<int>(values.size())), values);
}

inline WeightVector weights(std::initializer_list<Rational> values) {
  return WeightVector(GroundSet::range(static_cast<int>(values.size())), values);
}

// Random bit pool over users 1..n drawing from `symbols` labels; each user
// sees each label independently with probability `density`.
inline std::shared_ptr<const BitPoolSource> random_bit_pool(std::mt19937& rng, int n, int symbols,
                                                            double density = 0.45) {
  std::bernoulli_distribution seen(density);
  std::vector<std::vector<std::string>> obs(static_cast<std::size_t>(n));
  for (int s = 0; s < symbols; ++s) {
    for (auto& user : obs) {
      if (seen(rng)) user.push_back("s" + std::to_string(s));
    }
  }
  return std::make_shared<BitPoolSource>(GroundSet::range(n), obs);
}

inline WeightVector random_weights(std::mt19937& rng, const GroundSet& ground) {
  std::uniform_int_distribution<int> num(1, 9);
  std::uniform_int_distribution<int> den(1, 4);
  std::vector<Rational> w;
  for (int p = 0; p < ground.size(); ++p) w.emplace_back(num(rng), den(rng));
  return WeightVector(ground, w);
}

// Partitions of a position list by plain recursion (first element joins one
// of the blocks of a partition of the rest, or stands alone).
inline void recursive_partitions(const std::vector<int>& elems, std::size_t from,
                                 std::vector<Subset>& blocks,
                                 const std::function<void(const std::vector<Subset>&)>& fn) {
  if (from == elems.size()) {
    fn(blocks);
    return;
  }
  const int e = elems[from];
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    blocks[b] = blocks[b].with(e);
    recursive_partitions(elems, from + 1, blocks, fn);
    blocks[b] = blocks[b].without(e);
  }
  blocks.push_back(Subset::singleton(e));
  recursive_partitions(elems, from + 1, blocks, fn);
  blocks.pop_back();
}

// Dilworth truncation by exhaustive partition listing.
inline Rational oracle_truncation(const SetFunction& f, Subset x) {
  if (x.empty()) return 0;
  std::optional<Rational> best;
  std::vector<Subset> blocks;
  recursive_partitions(x.positions(), 0, blocks, [&](const std::vector<Subset>& p) {
    Rational sum = 0;
    for (Subset b : p) sum += f(b);
    if (!best || sum < *best) best = sum;
  });
  return *best;
}

// Minimum sum-rate straight from the partition formula.
inline Rational oracle_min_sum_rate(const EntropyOracle& h) {
  const Subset full = h.ground().full();
  std::optional<Rational> best;
  std::vector<Subset> blocks;
  recursive_partitions(full.positions(), 0, blocks, [&](const std::vector<Subset>& p) {
    if (p.size() < 2) return;
    Rational sum = 0;
    for (Subset c : p) sum += h.entropy(full) - h.entropy(c);
    sum /= static_cast<long>(p.size() - 1);
    if (!best || sum > *best) best = sum;
  });
  return *best;
}

// max { r(V) : r in P(f), r <= cap } by the polymatroid greedy: raise each
// coordinate in turn as far as every constraint through it allows.
inline RateVector oracle_capped_greedy(const SetFunction& f, const std::vector<Rational>& cap) {
  const GroundSet& ground = f.ground();
  RateVector r = RateVector::zero(ground);
  for (int i = 0; i < ground.size(); ++i) {
    Rational limit = cap[static_cast<std::size_t>(i)];
    for_each_subset(ground.full(), [&](Subset x) {
      if (!x.contains(i)) return;
      Rational slack = f(x) - r.sum(x);
      if (slack < limit) limit = slack;
    });
    r[i] = limit;
  }
  return r;
}

// Membership by scanning every constraint.
inline bool oracle_is_base(const RateVector& r, const SetFunction& f) {
  bool ok = true;
  for_each_subset(f.ground().full(), [&](Subset x) {
    if (r.sum(x) > f(x)) ok = false;
  });
  return ok && r.sum(f.ground().full()) == f(f.ground().full());
}

// Random point of B(f): a convex combination of greedy vertices for random
// permutations with random rational coefficients.
inline RateVector sample_base(const SetFunction& f, std::mt19937& rng, int vertices = 3) {
  const GroundSet& ground = f.ground();
  std::vector<int> order(static_cast<std::size_t>(ground.size()));
  std::iota(order.begin(), order.end(), 0);
  std::uniform_int_distribution<int> coef(0, 6);
  std::vector<RateVector> points;
  std::vector<int> coeffs;
  int total = 0;
  for (int k = 0; k < vertices; ++k) {
    std::shuffle(order.begin(), order.end(), rng);
    RateVector v = RateVector::zero(ground);
    Subset prefix;
    Rational prev = 0;
    for (int p : order) {
      prefix = prefix.with(p);
      Rational cur = f(prefix);
      v[p] = cur - prev;
      prev = cur;
    }
    points.push_back(v);
    coeffs.push_back(coef(rng));
    total += coeffs.back();
  }
  if (total == 0) {
    coeffs[0] = 1;
    total = 1;
  }
  RateVector out = RateVector::zero(ground);
  for (std::size_t k = 0; k < points.size(); ++k) {
    for (int p = 0; p < ground.size(); ++p) out[p] += Rational(coeffs[k], total) * points[k][p];
  }
  return out;
}

inline Rational weighted_square_sum(const RateVector& r, const WeightVector& w) {
  Rational sum = 0;
  for (int p = 0; p < r.size(); ++p) sum += r[p] * r[p] / w[p];
  return sum;
}

}  // namespace fo::testing
