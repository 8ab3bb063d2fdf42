"""Ordinary vs. symbolic powers, integral closure and normality checks."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as _cartesian
from typing import NamedTuple, Optional

from . import kernels
from .decomp import ass, decompose, min_ass, primary_merge
from .errors import NotSquarefreeError, ZeroIdealError
from .ideal import MonomialIdeal, intersect_all, is_squarefree_ideal, power
from .newton import in_newton_polyhedron

SYMBOLIC_METHODS = ("auto", "general", "squarefree")


def _check(I: MonomialIdeal, k: int, name: str = "k") -> None:
    if I.is_zero():
        raise ZeroIdealError("operation undefined for the zero ideal")
    if k < 1:
        raise ValueError(f"{name} must be at least 1")


def symbolic_power(I: MonomialIdeal, k: int, method: str = "auto") -> MonomialIdeal:
    """k-th symbolic power: the part of I^k primary to the minimal primes of I.

    ``general`` decomposes I^k, merges components per support and keeps the
    minimal supports of I. ``squarefree`` intersects p^k over the minimal
    primes p of a squarefree I. ``auto`` takes the squarefree route when it
    applies.
    """
    _check(I, k)
    if method not in SYMBOLIC_METHODS:
        raise ValueError(f"unknown method {method!r}")
    sqfree = is_squarefree_ideal(I)
    if method == "squarefree" and not sqfree:
        raise NotSquarefreeError("the squarefree route needs a squarefree ideal")
    minimal = min_ass(I)
    if method == "squarefree" or (method == "auto" and sqfree):
        return intersect_all(power(p.ideal(), k) for p in minimal)
    merged = primary_merge(decompose(power(I, k)))
    return intersect_all(Q for p, Q in merged if p in minimal)


def _supports_json(supports) -> list:
    return [p.one_based() for p in sorted(supports)]


def ideal_json(I: MonomialIdeal) -> dict:
    return {"dim": I.dim, "generators": [list(g) for g in I.exponent_vectors], "text": str(I)}


@dataclass(frozen=True)
class PowerReport:
    k: int
    ordinary: MonomialIdeal
    symbolic: MonomialIdeal
    equal: bool
    ass_ordinary: frozenset
    min_ass_base: frozenset
    ass_condition: bool

    def to_json_obj(self) -> dict:
        return {
            "k": self.k,
            "ordinary": ideal_json(self.ordinary),
            "symbolic": ideal_json(self.symbolic),
            "equal": self.equal,
            "ass_ordinary": _supports_json(self.ass_ordinary),
            "min_ass_base": _supports_json(self.min_ass_base),
            "ass_condition": self.ass_condition,
        }


def powers_equal(I: MonomialIdeal, k: int) -> PowerReport:
    """Compare I^k with its symbolic power and test Ass(R/I^k) against mAss(R/I).

    The two booleans come from separate computations: ``equal`` from the
    symbolic power, ``ass_condition`` from decomposing I^k. They are only
    expected to agree when I is squarefree.
    """
    _check(I, k)
    ordinary = power(I, k)
    symbolic = symbolic_power(I, k)
    ass_ord = ass(ordinary)
    base = min_ass(I)
    return PowerReport(k, ordinary, symbolic, ordinary == symbolic,
                       ass_ord, base, ass_ord <= base)


def integral_closure(I: MonomialIdeal) -> MonomialIdeal:
    """Monomial ideal of the integer points of the Newton polyhedron of I.

    Minimal points never exceed the coordinatewise maximum of the
    generators, so only that box is scanned. Points above one already
    accepted are skipped.
    """
    if I.is_zero():
        raise ZeroIdealError("operation undefined for the zero ideal")
    gens = I.exponent_vectors
    bound = [max(g[j] for g in gens) for j in range(I.dim)]
    points = sorted(_cartesian(*(range(b + 1) for b in bound)), key=kernels.canonical_key)
    accepted = []
    for p in points:
        if not any(p):
            continue
        if kernels.divisible_by_any(gens, p) or kernels.divisible_by_any(accepted, p):
            continue
        if in_newton_polyhedron(gens, p):
            accepted.append(p)
    if not accepted:
        return I
    return MonomialIdeal._from_raw(I.dim, gens + tuple(accepted))


def is_integrally_closed(I: MonomialIdeal) -> bool:
    return integral_closure(I) == I


class NormalityResult(NamedTuple):
    """Bounded certificate: powers 1..K checked, nothing claimed beyond K."""

    normal: bool
    first_failure: Optional[int]
    checked_up_to: int


def is_normal_up_to(I: MonomialIdeal, K: int) -> NormalityResult:
    _check(I, K, "K")
    for k in range(1, K + 1):
        if not is_integrally_closed(power(I, k)):
            return NormalityResult(False, k, k)
    return NormalityResult(True, None, K)


@dataclass(frozen=True)
class CriterionRow:
    k: int
    equal: bool
    ass_condition: bool
    normal_at_k: bool
    general_route_equal: bool

    @property
    def agrees(self) -> bool:
        return self.equal == self.ass_condition


@dataclass(frozen=True)
class CriterionReport:
    """Per-k comparison of I^(k) == I^k with Ass(R/I^k) inside mAss(R/I).

    ``ok`` is False only when the equivalence fails at some k, or when the
    condition holds for every k <= K but some I^k is not integrally closed
    or differs from the symbolic power built from its own primary
    components. Any of these would be a bug.
    """

    ideal: MonomialIdeal
    K: int
    rows: tuple = field(default_factory=tuple)

    @property
    def equivalence_holds(self) -> bool:
        return all(r.agrees for r in self.rows)

    @property
    def condition_holds_all(self) -> bool:
        return all(r.equal and r.ass_condition for r in self.rows)

    @property
    def normal_up_to_K(self) -> bool:
        return all(r.normal_at_k for r in self.rows)

    @property
    def ok(self) -> bool:
        if not self.equivalence_holds:
            return False
        if self.condition_holds_all:
            return all(r.normal_at_k and r.general_route_equal for r in self.rows)
        return True

    def to_json_obj(self) -> dict:
        return {
            "ideal": ideal_json(self.ideal),
            "K": self.K,
            "rows": [{"k": r.k, "equal": r.equal, "ass_condition": r.ass_condition,
                      "normal_at_k": r.normal_at_k,
                      "general_route_equal": r.general_route_equal} for r in self.rows],
            "equivalence_holds": self.equivalence_holds,
            "condition_holds_all": self.condition_holds_all,
            "normal_up_to_K": self.normal_up_to_K,
            "ok": self.ok,
        }


def check_power_criterion(I: MonomialIdeal, K: int) -> CriterionReport:
    """For squarefree I and k = 1..K, evaluate both sides of the equivalence.

    ``equal`` compares I^k with the intersection of p^k over minimal primes
    and never decomposes I^k; ``ass_condition`` does. ``general_route_equal``
    compares I^k with the symbolic power built from the primary components of
    I^k, so when the condition holds it also confirms I^k is that
    intersection of prime powers. Normality of each power is checked through
    the Newton polyhedron regardless of the outcome.
    """
    _check(I, K, "K")
    if not is_squarefree_ideal(I):
        raise NotSquarefreeError("the criterion applies to squarefree ideals only")
    base = min_ass(I)
    rows = []
    for k in range(1, K + 1):
        ordinary = power(I, k)
        equal = ordinary == symbolic_power(I, k, method="squarefree")
        cond = ass(ordinary) <= base
        general = ordinary == symbolic_power(I, k, method="general")
        rows.append(CriterionRow(k, equal, cond, is_integrally_closed(ordinary), general))
    return CriterionReport(I, K, tuple(rows))
