#!/usr/bin/env python3
"""Independent brute-force oracle for frozen expected values in the C++ tests.

Uses exact fractions and direct enumeration only: partitions for the sum-rate
maximization and Dilworth truncation, all-subset scans for minimization,
polymatroid greedy for the capped maximization.
"""
from fractions import Fraction as F
from itertools import combinations, permutations

EX1 = {1: set("abcde"), 2: set("abf"), 3: set("cdf")}
EX4 = {1: set("cdfgh"), 2: set("adgh"), 3: set("cdefgh"), 4: set("abf")}


def subsets(users):
    for k in range(len(users) + 1):
        for c in combinations(users, k):
            yield frozenset(c)


def partitions(items):
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for p in partitions(rest):
        yield [frozenset([first])] + p
        for i in range(len(p)):
            yield p[:i] + [p[i] | {first}] + p[i + 1:]


def H(pool, X):
    s = set()
    for i in X:
        s |= pool[i]
    return F(len(s))


def rco(pool):
    V = frozenset(pool)
    best = None
    for p in partitions(V):
        if len(p) < 2:
            continue
        val = sum(H(pool, V) - H(pool, C) for C in p) / (len(p) - 1)
        if best is None or val > best[0]:
            best = (val, [p])
        elif val == best[0]:
            best[1].append(p)
    return best


def fsharp(pool, alpha):
    V = frozenset(pool)
    def f(X):
        X = frozenset(X)
        if not X:
            return F(0)
        if X == V:
            return F(alpha)
        return F(alpha) - (H(pool, V) - H(pool, X))
    return f


def trunc(fs):
    def g(X):
        X = frozenset(X)
        if not X:
            return F(0)
        return min(sum(fs(C) for C in p) for p in partitions(X))
    return g


def capped_greedy(fh, V, cap):
    r = {i: F(0) for i in V}
    for i in sorted(V):
        slack = min(fh(X) - sum(r[j] for j in X) for X in subsets(V) if i in X)
        r[i] = min(cap[i], slack)
    return r


def main():
    V1 = frozenset(EX1)
    f4 = fsharp(EX1, 4)
    fh4 = trunc(f4)
    print("ex1 R_CO", rco(EX1))
    print("ex1 fsharp4", [(sorted(X), f4(X)) for X in subsets(V1)])
    print("ex1 fhat4", [(sorted(X), fh4(X)) for X in subsets(V1)])
    w = {1: 4, 2: 2, 3: 1}
    g = lambda X: fh4(X) - F(4, 7) * sum(w[i] for i in X)
    vals = [(g(X), sorted(X)) for X in subsets(V1)]
    m = min(v for v, _ in vals)
    print("sfm 4/7", m, [X for v, X in vals if v == m])
    g1 = lambda X: fh4(X) - len(X)
    vals = [(g1(X), sorted(X)) for X in subsets(V1)]
    m = min(v for v, _ in vals)
    print("sfm w=1 lambda=1", m, [X for v, X in vals if v == m])
    for wv in ({1: 1, 2: 1, 3: 1}, {1: 4, 2: 2, 3: 1}):
        for lam in [F(0), F(1, 2), F(4, 7), F(3, 5), F(1), F(2), F(3)]:
            dual = min(fh4(X) + lam * sum(wv[i] for i in V1 - X) for X in subsets(V1))
            r = capped_greedy(fh4, V1, {i: lam * wv[i] for i in V1})
            print("minmax", wv, lam, "dual", dual, "primal", sum(r.values()), [str(r[i]) for i in sorted(V1)])
    # tight sets / DEP for (2,1,1)
    for r in ({1: F(2), 2: F(1), 3: F(1)}, {1: F(3), 2: F(0), 3: F(1)}, {1: F(12, 5), 2: F(1), 3: F(3, 5)}):
        tight = [sorted(X) for X in subsets(V1) if sum(r[i] for i in X) == fh4(X)]
        deps = {}
        for i in V1:
            d = set(V1)
            for X in subsets(V1):
                if i in X and sum(r[j] for j in X) == fh4(X):
                    d &= X
            deps[i] = sorted(d)
        print("tight", {k: str(v) for k, v in r.items()}, tight, deps)
    # shapley
    n = 3
    from math import factorial
    sh = {}
    for i in V1:
        s = F(0)
        for X in subsets(V1 - {i}):
            s += F(factorial(len(X)) * factorial(n - len(X) - 1), factorial(n)) * (fh4(X | {i}) - fh4(X))
        sh[i] = s
    print("shapley", {k: str(v) for k, v in sh.items()})
    rs = [sh[i] for i in sorted(sh)]
    print("jain shapley", sum(rs) ** 2 / (n * sum(x * x for x in rs)))
    # Example 1 at 3.5: greedy vertices
    fh35 = trunc(fsharp(EX1, F(7, 2)))
    verts = set()
    for perm in permutations(sorted(V1)):
        prev = F(0); acc = set(); v = {}
        for i in perm:
            acc.add(i); cur = fh35(acc); v[i] = cur - prev; prev = cur
        verts.add(tuple(v[i] for i in sorted(V1)))
    print("ex1 3.5 vertices", verts)
    # Example 4
    V4 = frozenset(EX4)
    print("ex4 R_CO", rco(EX4))
    fh6 = trunc(fsharp(EX4, 6))
    print("ex4 fhat6", [(sorted(X), str(fh6(X))) for X in subsets(V4)])
    print("ex4 entropies", [(sorted(X), H(EX4, X)) for X in subsets(V4)])
    print("ex4 R_CO(C1)", rco({k: EX4[k] for k in (1, 2, 3)}))
    # shapley example 4 at 6
    n = 4
    sh = {}
    for i in V4:
        s = F(0)
        for X in subsets(V4 - {i}):
            s += F(factorial(len(X)) * factorial(n - len(X) - 1), factorial(n)) * (fh6(X | {i}) - fh6(X))
        sh[i] = str(s)
    print("ex4 shapley 6", sh)


if __name__ == "__main__":
    main()
