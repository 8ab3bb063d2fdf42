"""Brute-force verifiers over bounded exponent grids.

Nothing here calls the compiled kernels or the production ideal arithmetic;
membership is re-derived from divisibility so the checks stay independent
of the code they certify. Everything is exponential in the dimension and is
meant for small instances only.

Exactness of grid comparison: if every generator of I and J has all
exponents <= E, then for any exponent vector p the clipped vector
min(p, E) is divisible by exactly the same generators as p. So the two
ideals agree everywhere iff they agree on {0..E}^d.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, Optional

from .ideal import MonomialIdeal
from .monomial import Monomial


def _member(gens, p) -> bool:
    for g in gens:
        ok = True
        for a, b in zip(g, p):
            if a > b:
                ok = False
                break
        if ok:
            return True
    return False


@dataclass(frozen=True)
class GridBox:
    dim: int
    bound: int

    @classmethod
    def covering(cls, *ideals: MonomialIdeal) -> GridBox:
        dims = {I.dim for I in ideals}
        if len(dims) != 1:
            raise ValueError("ideals of different dimensions")
        return cls(dims.pop(), max(I.max_exponent() for I in ideals))

    def covers(self, I: MonomialIdeal) -> bool:
        return I.dim == self.dim and I.max_exponent() <= self.bound

    def points(self) -> Iterator[tuple]:
        return product(range(self.bound + 1), repeat=self.dim)


def grid_equal(I: MonomialIdeal, J: MonomialIdeal, box: Optional[GridBox] = None) -> bool:
    if box is None:
        box = GridBox.covering(I, J)
    if not (box.covers(I) and box.covers(J)):
        raise ValueError("grid bound too small for an exact comparison")
    a, b = I.exponent_vectors, J.exponent_vectors
    return all(_member(a, p) == _member(b, p) for p in box.points())


def _power_contains(gens, l: int, target) -> bool:
    """Is ``target`` in the l-th power of the ideal generated by ``gens``?

    Grows the set of sums of j generators that still fit under ``target``;
    sums only increase, so anything that overflows can be dropped.
    """
    frontier = {tuple(0 for _ in target)}
    for _ in range(l):
        nxt = set()
        for s in frontier:
            for g in gens:
                t = tuple(x + y for x, y in zip(s, g))
                if all(x <= y for x, y in zip(t, target)):
                    nxt.add(t)
        if not nxt:
            return False
        frontier = nxt
    return True


def closure_witness(I: MonomialIdeal, m, L: int = 6) -> Optional[int]:
    """Smallest l <= L with m^l in I^l, or None (inconclusive, not a refusal)."""
    if L < 1:
        raise ValueError("L must be at least 1")
    exps = m.exponents if isinstance(m, Monomial) else tuple(m)
    gens = I.exponent_vectors
    for l in range(1, L + 1):
        if _power_contains(gens, l, tuple(e * l for e in exps)):
            return l
    return None


def verify_decomposition(I: MonomialIdeal, D) -> bool:
    """Pointwise: p in I iff p lies in every component of D."""
    if I.is_zero() or not D.components:
        return False
    vecs = [c.vector for c in D.components]
    E = max(I.max_exponent(), max(max(v) for v in vecs))
    gens = I.exponent_vectors
    for p in GridBox(I.dim, E).points():
        in_all = all(any(e and x >= e for x, e in zip(p, v)) for v in vecs)
        if _member(gens, p) != in_all:
            return False
    return True


def _minimal_points(points) -> list:
    ordered = sorted(set(points), key=lambda p: (sum(p), p))
    kept = []
    for p in ordered:
        if not _member(kept, p):
            kept.append(p)
    return kept


def grid_radical(I: MonomialIdeal) -> MonomialIdeal:
    """Radical from its definition: m with m^t in I for some t <= E*d.

    Membership of m^t only grows with t, so testing t = E*d is enough.
    """
    E, d = I.max_exponent(), I.dim
    t = max(E * d, 1)
    gens = I.exponent_vectors
    pts = [p for p in GridBox(d, E).points()
           if any(p) and _member(gens, tuple(x * t for x in p))]
    return MonomialIdeal(d, _minimal_points(pts))


def grid_power(I: MonomialIdeal, k: int) -> MonomialIdeal:
    """I^k by scanning the box for points in the k-th power."""
    E = I.max_exponent() * k
    gens = I.exponent_vectors
    pts = [p for p in GridBox(I.dim, E).points() if any(p) and _power_contains(gens, k, p)]
    return MonomialIdeal(I.dim, _minimal_points(pts))


def grid_closure(I: MonomialIdeal, L: int = 6) -> MonomialIdeal:
    """Points of the generator box having a power witness with l <= L."""
    gens = I.exponent_vectors
    bounds = [max(g[j] for g in gens) for j in range(I.dim)]
    pts = [p for p in product(*(range(b + 1) for b in bounds))
           if any(p) and closure_witness(I, p, L) is not None]
    return MonomialIdeal(I.dim, _minimal_points(pts))
