#pragma once

#include <string_view>

#include "fo/rational.hpp"
#include "fo/set_function.hpp"
#include "fo/sfm.hpp"
#include "fo/subset.hpp"

namespace fo {

// Dilworth truncation of f at a nonempty X: the minimum block-sum of f over
// all partitions of X. Reference route, enumerates all Bell(|X|) partitions.
// Throws DomainError for empty X.
Rational truncate(const SetFunction& f_sharp, Subset x);

// The truncation as a set function, with value 0 at the empty set. Values are
// memoized and computed by the first-block recursion
//   f^(X) = min { f(B) + f^(X - B) : first(X) in B, B subset of X },
// which ranges over the same partitions as `truncate`.
//
// The result is submodular whenever f_sharp is intersecting submodular;
// behaviour for other inputs is unspecified.
SetFunction truncated_function(const SetFunction& f_sharp);

// Same value as truncate(f_sharp, X), computed with |X| - 1 SFM calls: for the
// elements x_1 < ... < x_k of X,
//   y_j = min { f(Y + x_j) - y(Y) : Y subset of {x_1..x_{j-1}} },
// and f^(X) = y_1 + ... + y_k. In debug builds the result is cross-checked
// against `truncate` and a mismatch raises InternalError.
Rational truncate_via_sfm(const SetFunction& f_sharp, Subset x,
                          std::string_view solver = kBruteForceSolver);

}  // namespace fo
