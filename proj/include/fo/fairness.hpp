#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "fo/omniscience.hpp"
#include "fo/rational.hpp"
#include "fo/set_function.hpp"
#include "fo/sfm.hpp"
#include "fo/source_model.hpp"
#include "fo/subset.hpp"

namespace fo {

// Per-user rates, indexed by ground position.
class RateVector {
 public:
  RateVector(GroundSet ground, std::vector<Rational> rates);
  static RateVector zero(GroundSet ground);

  const GroundSet& ground() const { return ground_; }
  const std::vector<Rational>& values() const { return rates_; }
  int size() const { return ground_.size(); }
  const Rational& operator[](int position) const { return rates_[static_cast<std::size_t>(position)]; }
  Rational& operator[](int position) { return rates_[static_cast<std::size_t>(position)]; }
  const Rational& at_user(int user) const { return (*this)[ground_.position(user)]; }
  // r(X).
  Rational sum(Subset x) const;
  Rational total() const { return sum(ground_.full()); }

  friend bool operator==(const RateVector&, const RateVector&) = default;

 private:
  GroundSet ground_;
  std::vector<Rational> rates_;
};

// Strictly positive per-user weights.
class WeightVector {
 public:
  // Throws DomainError unless every weight is > 0.
  WeightVector(GroundSet ground, std::vector<Rational> weights);
  static WeightVector uniform(GroundSet ground);

  const GroundSet& ground() const { return ground_; }
  const std::vector<Rational>& values() const { return weights_; }
  const Rational& operator[](int position) const { return weights_[static_cast<std::size_t>(position)]; }
  Rational sum(Subset x) const;
  // Weights of the users in x, over the restricted ground set.
  WeightVector restrict(Subset x) const;

 private:
  GroundSet ground_;
  std::vector<Rational> weights_;
};

struct ChainLevel {
  Subset set;
  Rational lambda;
};

// Nested sets {} = S_0 < S_1 < ... < S_N = V (S_0 implicit) with strictly
// increasing levels; r_i = lambda_n * w_i on S_n - S_{n-1}.
struct Chain {
  std::vector<ChainLevel> levels;
};

// One recursive call of the decomposition algorithm.
struct DecompositionStep {
  Subset lower;
  Subset upper;
  Rational lambda;
  Subset minimizer;
};

struct LexOptimalBase {
  RateVector rates;
  Chain chain;
  std::vector<DecompositionStep> trace;  // calls in invocation order
};

struct Membership {
  bool member = true;
  // On failure, the X with the largest violation r(X) - f(X) (lowest mask on ties).
  std::optional<Subset> violated;

  explicit operator bool() const { return member; }
};

struct Lemma1Certificate {
  bool pass = true;
  // On failure, user ids (i, j) with j in DEP(r, i) and r_i / w_i < r_j / w_j.
  std::optional<std::pair<int, int>> witness;

  explicit operator bool() const { return pass; }
};

enum class LexOrder { kDominates, kDominatedBy, kEqual };

struct CappedMaximum {
  RateVector maximizer;
  Rational value;
};

struct BlockAllocation {
  Subset block;  // positions in the full ground set
  Rational quota;
  LexOptimalBase result;  // over the block's own ground set
};

struct FairAllocation {
  RateVector rates;
  OmniscienceSolution omniscience;
  std::vector<BlockAllocation> blocks;
};

// r in P(f, <=): r(X) <= f(X) for every X. Throws DomainError on a ground-set mismatch.
Membership in_polyhedron(const RateVector& r, const SetFunction& f_hat);
// r in B(f, <=): in the polyhedron and r(V) = f(V).
bool is_base(const RateVector& r, const SetFunction& f_hat);

// Every X (the empty set included) with r(X) = f(X), ascending by mask.
// Throws DomainError if r is outside the polyhedron.
std::vector<Subset> tight_sets(const RateVector& r, const SetFunction& f_hat);

// Smallest r-tight set containing `user`: the intersection of all tight sets
// containing it. Throws DomainError unless r is a base, InternalError if the
// intersection is not itself tight.
Subset dep(const RateVector& r, int user, const SetFunction& f_hat);

// (sum r)^2 / (|V| sum r^2). Throws DomainError for the all-zero vector.
Rational jain_index(const RateVector& r);

// The multiset { r_i / w_i } in nondecreasing order.
std::vector<Rational> sorted_ratio_vector(const RateVector& r, const WeightVector& w);

// Compares the sorted ratio vectors entrywise from the smallest entry.
LexOrder lex_compare(const RateVector& a, const RateVector& b, const WeightVector& w);
const char* to_string(LexOrder order);

// Lexicographically optimal base of B(f_hat, <=) w.r.t. w, by the recursive
// decomposition algorithm starting from DA({}, V). Each call sets
//   lambda = (f(upper) - f(lower)) / w(upper - lower)
// and takes S as the maximal minimizer of f(X) - lambda w(X) over all X;
// S == upper ends the branch, otherwise it splits into DA(lower, S), DA(S, upper).
// Throws InternalError if S is not nested between lower and upper.
LexOptimalBase lex_optimal_base(const SetFunction& f_hat, const WeightVector& w,
                                std::string_view solver = kBruteForceSolver);

// The chain implied by a rate vector: S_n = { i : r_i / w_i <= lambda_n } over
// the distinct ratios lambda_1 < ... < lambda_N.
Chain chain_from_rates(const RateVector& r, const WeightVector& w);

// Checks r_i / w_i >= r_j / w_j for every i and j in DEP(r, i) - {i}.
// Throws DomainError unless r is a base.
Lemma1Certificate verify_lemma1(const RateVector& r, const WeightVector& w, const SetFunction& f_hat);

// Concatenates rate vectors over disjoint ground sets; the result is ordered
// by ascending user id.
RateVector direct_merge(std::span<const RateVector> parts);

// Lex-optimal minimum sum-rate strategy: solves the omniscience problem, runs
// the decomposition algorithm on each fundamental block's h_C with the block's
// weights (concurrently when `parallel`), and direct-merges the results back
// into ground order.
FairAllocation lex_optimal_min_sum_rate(const std::shared_ptr<const EntropyOracle>& oracle,
                                        const WeightVector& w, bool parallel = true);

// max { r(V) : r in P(f_hat), r <= lambda w }. The value is the dual minimum
// min_X f(X) + lambda w(V - X); the maximizer is r* ^ lambda w for the
// lex-optimal base r*. Throws InternalError if primal and dual disagree.
CappedMaximum max_rate_under_cap(const SetFunction& f_hat, const WeightVector& w,
                                 const Rational& lambda);

// Vertex of B(f_hat, <=) produced by Edmonds' greedy algorithm along `order`
// (a permutation of ground positions).
RateVector greedy_vertex(const SetFunction& f_hat, std::span<const int> order);

inline constexpr int kMaxShapleyUsers = 12;

// Shapley value of the game f_hat by subset-weight summation. Throws
// CapacityError above kMaxShapleyUsers users.
RateVector shapley(const SetFunction& f_hat);

}  // namespace fo
