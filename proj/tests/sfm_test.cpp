#include <gtest/gtest.h>

#include <random>

#include "fo/dilworth.hpp"
#include "fo/errors.hpp"
#include "fo/omniscience.hpp"
#include "fo/sfm.hpp"
#include "test_support.hpp"

namespace fo {
namespace {

using testing::Q;
using testing::S;

SetFunction example1_truncation() { return truncated_dual(testing::example1(), Q(4)); }

TEST(MinimizeTest, FirstDecompositionStepOfExample1) {
  const SetFunction g = minus_scaled_modular(example1_truncation(), Q(4, 7), {Q(4), Q(2), Q(1)});
  const SfmResult r = minimize(g);
  EXPECT_EQ(r.min_value, Q(-1, 7));
  EXPECT_EQ(r.maximal_minimizer, S({2}));
  ASSERT_TRUE(r.all_minimizers);
  EXPECT_EQ(*r.all_minimizers, (std::vector<Subset>{S({2})}));
}

TEST(MinimizeTest, WholeSetAtFinalLevel) {
  const SetFunction g = minus_scaled_modular(example1_truncation(), Q(3, 5), {Q(4), Q(2), Q(1)});
  const SfmResult r = minimize(g);
  EXPECT_EQ(r.maximal_minimizer, S({1, 2, 3}));
  EXPECT_EQ(r.min_value, Q(-1, 5));
}

TEST(MinimizeTest, ZeroFunctionHasFullMaximalMinimizer) {
  const SetFunction zero(GroundSet::range(4), [](Subset) { return Rational(0); });
  const SfmResult r = minimize(zero);
  EXPECT_EQ(r.min_value, 0);
  EXPECT_EQ(r.maximal_minimizer, Subset::full(4));
  EXPECT_EQ(r.all_minimizers->size(), 16U);
}

TEST(MinimizeWithSolverTest, BruteForceMatchesMinimize) {
  const SetFunction g = minus_scaled_modular(example1_truncation(), Q(4, 7), {Q(4), Q(2), Q(1)});
  const SfmResult a = minimize(g);
  const SfmResult b = minimize_with_solver(g, "brute-force");
  EXPECT_EQ(a.min_value, b.min_value);
  EXPECT_EQ(a.maximal_minimizer, b.maximal_minimizer);
}

TEST(MinimizeWithSolverTest, ModularFunction) {
  const SetFunction g = modular_function(GroundSet::range(3), {Q(1), Q(-1), Q(2)});
  const SfmResult r = minimize_with_solver(g, "brute-force");
  EXPECT_EQ(r.maximal_minimizer, S({2}));
  EXPECT_EQ(r.min_value, -1);
}

TEST(MinimizeWithSolverTest, UniformWeightsAtLevelOne) {
  const SetFunction g = minus_scaled_modular(example1_truncation(), Q(1), {Q(1), Q(1), Q(1)});
  const SfmResult r = minimize_with_solver(g, "brute-force");
  EXPECT_EQ(r.maximal_minimizer, S({2, 3}));
  EXPECT_EQ(r.min_value, 0);
  EXPECT_EQ(*r.all_minimizers, (std::vector<Subset>{Subset{}, S({2}), S({3}), S({2, 3})}));
}

TEST(MinimizeWithSolverTest, UnknownSolverIsAConfigurationError) {
  const SetFunction g = modular_function(GroundSet::range(2), {Q(1), Q(1)});
  EXPECT_THROW(minimize_with_solver(g, "simplex"), ConfigurationError);
}

TEST(MinimizeWithSolverTest, RegistryListsBuiltins) {
  const auto names = registered_solvers();
  EXPECT_NE(std::find(names.begin(), names.end(), "brute-force"), names.end());
  EXPECT_NE(std::find(names.begin(), names.end(), "min-norm-point"), names.end());
}

class ConstantSolver final : public SfmSolver {
 public:
  std::string_view name() const override { return "test-empty-set"; }
  SfmResult minimize(const SetFunction& g) const override { return {g(Subset{}), Subset{}, {}}; }
};

TEST(MinimizeWithSolverTest, CustomSolversCanBeRegistered) {
  register_solver(std::make_shared<ConstantSolver>());
  const SetFunction g = modular_function(GroundSet::range(2), {Q(-1), Q(1)});
  EXPECT_EQ(minimize_with_solver(g, "test-empty-set").maximal_minimizer, Subset{});
}

TEST(MinimizeTest, NonLatticeMinimizersAreRejected) {
  // Minimizers {1} and {2} but not {1,2}: not submodular.
  const SetFunction g(GroundSet::range(2), [](Subset x) { return x.size() == 1 ? Rational(-1) : Rational(0); });
  EXPECT_THROW(minimize(g), InternalError);
}

// Random submodular functions: truncated duals, and coverage minus modular.
std::vector<SetFunction> random_submodular(std::mt19937& rng, int n) {
  std::vector<SetFunction> out;
  auto pool = testing::random_bit_pool(rng, n, 2 * n);
  // H(V) never falls below the minimum sum-rate.
  const Rational alpha = pool->entropy(Subset::full(n)) + Rational(static_cast<long>(rng() % 3), 2);
  const SetFunction f_hat = truncated_dual(pool, alpha);
  std::vector<Rational> w;
  std::uniform_int_distribution<int> num(1, 6);
  for (int i = 0; i < n; ++i) w.emplace_back(num(rng), num(rng));
  out.push_back(minus_scaled_modular(f_hat, Rational(num(rng), 4), w));
  std::vector<Rational> c;
  std::uniform_int_distribution<int> coef(-6, 2);
  for (int i = 0; i < n; ++i) c.emplace_back(coef(rng), 2);
  auto coverage = testing::random_bit_pool(rng, n, 3 * n, 0.3);
  out.push_back(SetFunction(GroundSet::range(n), [coverage, c](Subset x) {
    Rational v = coverage->entropy(x) + 7;  // g({}) != 0 on purpose
    x.for_each([&](int p) { v += c[static_cast<std::size_t>(p)]; });
    return v;
  }));
  return out;
}

TEST(SfmPropertyTest, MinimumIsALowerBoundAndMaximalMinimizerContainsAll) {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + trial % 8;
    for (const SetFunction& g : random_submodular(rng, n)) {
      const SfmResult r = minimize(g);
      for_each_subset(g.ground().full(), [&](Subset x) { EXPECT_LE(r.min_value, g(x)); });
      EXPECT_EQ(g(r.maximal_minimizer), r.min_value);
      for (Subset m : *r.all_minimizers) EXPECT_TRUE(m.is_subset_of(r.maximal_minimizer));
    }
  }
}

TEST(SfmPropertyTest, ConstantShift) {
  std::mt19937 rng(22);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + trial % 6;
    for (const SetFunction& g : random_submodular(rng, n)) {
      const Rational c(static_cast<long>(trial) - 15, 7);
      const SetFunction shifted(g.ground(), [g, c](Subset x) { return g(x) + c; });
      const SfmResult a = minimize(g);
      const SfmResult b = minimize(shifted);
      EXPECT_EQ(b.min_value, a.min_value + c);
      EXPECT_EQ(b.maximal_minimizer, a.maximal_minimizer);
    }
  }
}

TEST(MinNormPointTest, MatchesReferenceUpToTwelveUsers) {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 48; ++trial) {
    const int n = 1 + trial % 12;
    for (const SetFunction& g : random_submodular(rng, n)) {
      const SfmResult ref = minimize(g);
      const SfmResult mnp = minimize_with_solver(g, "min-norm-point");
      EXPECT_EQ(mnp.min_value, ref.min_value) << "n=" << n << " trial=" << trial;
      EXPECT_EQ(mnp.maximal_minimizer, ref.maximal_minimizer) << "n=" << n << " trial=" << trial;
      EXPECT_FALSE(mnp.all_minimizers);
    }
  }
}

TEST(MinNormPointTest, Example1Steps) {
  const SetFunction f_hat = example1_truncation();
  EXPECT_EQ(minimize_with_solver(minus_scaled_modular(f_hat, Q(4, 7), {Q(4), Q(2), Q(1)}), "min-norm-point")
                .maximal_minimizer,
            S({2}));
  EXPECT_EQ(minimize_with_solver(minus_scaled_modular(f_hat, Q(1), {Q(1), Q(1), Q(1)}), "min-norm-point")
                .maximal_minimizer,
            S({2, 3}));
}

}  // namespace
}  // namespace fo
