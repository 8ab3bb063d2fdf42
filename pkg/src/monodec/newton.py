"""Exact Newton-polyhedron membership by Fourier-Motzkin elimination.

The Newton polyhedron of generators g_1..g_n is conv(g_i) + R^d_{>=0}. A
point e lies in it iff the system

    lam >= 0,  sum(lam) = 1,  sum(lam_i * g_i) <= e

is feasible. Eliminating the n multipliers directly blows up quickly, so
membership is decided on the alternative system instead: e is outside the
polyhedron iff some mu >= 0 in R^d satisfies mu . (g_i - e) >= 1 for every i
(a separating hyperplane with nonnegative normal). That system has only d
variables. All arithmetic is on Python integers, so answers are exact.
"""
from __future__ import annotations

from math import gcd
from typing import Iterable, Sequence

Constraint = tuple  # (coeffs: tuple[int, ...], rhs: int) meaning coeffs . x >= rhs


def _normalize(coeffs: tuple, rhs: int) -> Constraint:
    g = 0
    for c in coeffs:
        g = gcd(g, c)
    g = gcd(g, rhs)
    if g > 1:
        coeffs = tuple(c // g for c in coeffs)
        rhs //= g
    return coeffs, rhs


def _prune(constraints: Iterable[Constraint]) -> list | None:
    """Drop trivial and dominated rows; ``None`` signals a contradiction.

    Dominance assumes every remaining variable is nonnegative: a row with
    coefficients >= another's and a rhs <= the other's is implied by it.
    """
    best: dict = {}
    for coeffs, rhs in constraints:
        if not any(coeffs):
            if rhs > 0:
                return None
            continue
        coeffs, rhs = _normalize(coeffs, rhs)
        if rhs <= 0 and all(c >= 0 for c in coeffs):
            continue  # satisfied by every nonnegative point
        if coeffs not in best or best[coeffs] < rhs:
            best[coeffs] = rhs
    rows = list(best.items())
    # coefficient vectors are distinct here, so dominance has no cycles
    return [(a, b) for i, (a, b) in enumerate(rows)
            if not any(i != j and b2 >= b and all(x >= y for x, y in zip(a, a2))
                       for j, (a2, b2) in enumerate(rows))]


def feasible_nonnegative(constraints: Sequence[Constraint], nvars: int) -> bool:
    """Is ``{x >= 0 : a . x >= b for every (a, b)}`` nonempty over the rationals?"""
    rows = _prune(constraints)
    if rows is None:
        return False
    live = set(range(nvars))
    while rows:
        live = {j for j in live if any(a[j] for a, _ in rows)}
        if not live:
            break
        # eliminate the variable producing the fewest combined rows
        def cost(j):
            pos = sum(1 for a, _ in rows if a[j] > 0)
            neg = sum(1 for a, _ in rows if a[j] < 0)
            return pos * neg - pos - neg

        j = min(sorted(live), key=cost)
        lower = [(a, b) for a, b in rows if a[j] > 0]
        upper = [(a, b) for a, b in rows if a[j] < 0]
        new_rows = [(a, b) for a, b in rows if a[j] == 0]
        # x_j >= 0 is an implicit lower bound: an upper bound on x_j then
        # leaves "rest >= rhs", obtained by zeroing the x_j coefficient
        for a, b in upper:
            new_rows.append((a[:j] + (0,) + a[j + 1:], b))
        for al, bl in lower:
            pl = al[j]
            for au, bu in upper:
                pu = -au[j]
                coeffs = tuple(pu * x + pl * y for x, y in zip(al, au))
                new_rows.append((coeffs, pu * bl + pl * bu))
        # rows with a positive x_j coefficient and no upper bound are always
        # satisfiable by taking x_j large, so they simply disappear
        rows = _prune(new_rows)
        if rows is None:
            return False
        live.discard(j)
    return True


def in_newton_polyhedron(gens: Sequence[Sequence[int]], point: Sequence[int]) -> bool:
    """Exact test: does ``point`` lie in conv(gens) + nonnegative orthant?"""
    if not gens:
        return False
    point = tuple(point)
    d = len(point)
    rows = []
    for g in gens:
        diff = tuple(gi - pi for gi, pi in zip(g, point))
        if all(x <= 0 for x in diff):
            return True  # point dominates a generator
        rows.append((diff, 1))
    return not feasible_nonnegative(rows, d)


def primal_constraints(gens: Sequence[Sequence[int]], point: Sequence[int]) -> list:
    """The direct multiplier system, for callers wanting to check a certificate.

    Returns rows over ``len(gens)`` nonnegative multipliers, equality
    ``sum = 1`` split into two inequalities.
    """
    n = len(gens)
    rows = [(tuple([1] * n), 1), (tuple([-1] * n), -1)]
    for j in range(len(point)):
        rows.append((tuple(-g[j] for g in gens), -point[j]))
    return rows
