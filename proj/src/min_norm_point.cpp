// Fujishige-Wolfe minimum-norm-point SFM engine.
//
// Runs Wolfe's algorithm on the base polytope of the normalized function
// f(X) = g(X) - g({}); linear optimization over the base polytope is Edmonds'
// greedy. All arithmetic is exact, so the optimality test <x, x> <= <x, q>
// is decided without tolerance and the maximal minimizer is read off as
// {i : x*_i <= 0}.

#include <algorithm>
#include <numeric>

#include "fo/errors.hpp"
#include "fo/sfm.hpp"

namespace fo {
namespace {

using Point = std::vector<Rational>;

Rational dot(const Point& a, const Point& b) {
  Rational sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

// Vertex of the base polytope minimizing <x, .>: greedy along ascending x.
Point greedy_vertex(const SetFunction& g, const Rational& offset, const Point& x) {
  const std::size_t n = x.size();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return x[static_cast<std::size_t>(a)] < x[static_cast<std::size_t>(b)];
  });
  Point q(n);
  Subset prefix;
  Rational prev = 0;
  for (int p : order) {
    prefix = prefix.with(p);
    Rational cur = g(prefix) - offset;
    q[static_cast<std::size_t>(p)] = cur - prev;
    prev = std::move(cur);
  }
  return q;
}

// Solves a square system by Gauss-Jordan elimination; throws if singular.
std::vector<Rational> solve(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw InternalError("min-norm-point: affinely dependent corral");
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      const Rational factor = a[row][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[row][k] -= factor * a[col][k];
      b[row] -= factor * b[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
  return b;
}

// Affine combination of the corral points with minimum norm.
std::vector<Rational> affine_minimizer(const std::vector<Point>& corral) {
  const std::size_t m = corral.size();
  // [G  -1] [mu]   [0]
  // [1^T 0] [nu] = [1]
  std::vector<std::vector<Rational>> a(m + 1, std::vector<Rational>(m + 1));
  std::vector<Rational> b(m + 1);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) {
      a[i][j] = dot(corral[i], corral[j]);
      a[j][i] = a[i][j];
    }
    a[i][m] = -1;
    a[m][i] = 1;
  }
  b[m] = 1;
  std::vector<Rational> sol = solve(std::move(a), std::move(b));
  sol.pop_back();
  return sol;
}

Point combine(const std::vector<Point>& corral, const std::vector<Rational>& coeffs) {
  Point x(corral.front().size());
  for (std::size_t k = 0; k < corral.size(); ++k) {
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += coeffs[k] * corral[k][i];
  }
  return x;
}

}  // namespace

SfmResult MinNormPointSolver::minimize(const SetFunction& g) const {
  const std::size_t n = static_cast<std::size_t>(g.ground().size());
  const Rational offset = g(Subset{});

  std::vector<Point> corral{greedy_vertex(g, offset, Point(n))};
  std::vector<Rational> coeffs{Rational(1)};
  Point x = corral.front();

  while (true) {
    Point q = greedy_vertex(g, offset, x);
    if (dot(x, x) <= dot(x, q)) break;
    corral.push_back(std::move(q));
    coeffs.emplace_back(0);

    while (true) {
      std::vector<Rational> alpha = affine_minimizer(corral);
      if (std::all_of(alpha.begin(), alpha.end(), [](const Rational& a) { return a > 0; })) {
        coeffs = std::move(alpha);
        x = combine(corral, coeffs);
        break;
      }
      // Step from x towards the affine minimizer until a coefficient hits zero.
      std::optional<Rational> theta;
      for (std::size_t k = 0; k < alpha.size(); ++k) {
        if (alpha[k] > 0) continue;
        if (coeffs[k] == alpha[k]) throw InternalError("min-norm-point: degenerate minor cycle");
        Rational t = coeffs[k] / (coeffs[k] - alpha[k]);
        if (!theta || t < *theta) theta = std::move(t);
      }
      for (std::size_t k = 0; k < coeffs.size(); ++k) {
        coeffs[k] = *theta * alpha[k] + (1 - *theta) * coeffs[k];
      }
      std::size_t keep = 0;
      for (std::size_t k = 0; k < corral.size(); ++k) {
        if (coeffs[k] == 0) continue;
        if (keep != k) {
          corral[keep] = std::move(corral[k]);
          coeffs[keep] = std::move(coeffs[k]);
        }
        ++keep;
      }
      corral.resize(keep);
      coeffs.resize(keep);
      x = combine(corral, coeffs);
    }
  }

  Subset maximal;
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] <= 0) maximal = maximal.with(static_cast<int>(i));
  }
  return SfmResult{g(maximal), maximal, std::nullopt};
}

}  // namespace fo
