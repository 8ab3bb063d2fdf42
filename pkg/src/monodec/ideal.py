"""Monomial ideals as canonical antichains of minimal generators."""
from __future__ import annotations

from itertools import combinations_with_replacement
from typing import Iterable

from . import kernels
from .errors import DimensionError, ExponentOverflowError, ImproperIdealError
from .monomial import Monomial, format_exponents


def _raw(dim: int, g) -> tuple:
    exps = g.exponents if isinstance(g, Monomial) else tuple(g)
    if len(exps) != dim:
        raise DimensionError(f"generator of dimension {len(exps)} in a dimension-{dim} ideal")
    if isinstance(g, Monomial):
        return exps
    return Monomial(exps).exponents


class MonomialIdeal:
    """A proper monomial ideal in ``dim`` variables.

    ``gens`` is always the minimal generating set in canonical order, so two
    ideals are equal exactly when their generator tuples are. The empty
    generating set is the zero ideal.
    """

    __slots__ = ("dim", "_gens", "_hash")

    def __init__(self, dim: int, gens: Iterable = ()):
        if dim < 1:
            raise DimensionError("dimension must be positive")
        raw = [_raw(dim, g) for g in gens]
        if any(not any(v) for v in raw):
            raise ImproperIdealError("ideal must be proper: generator 1 given")
        self.dim = dim
        self._gens = kernels.minimalize(raw)
        self._hash = None

    @classmethod
    def _canonical(cls, dim: int, raw: tuple) -> MonomialIdeal:
        # trusted constructor: raw is already minimal and sorted
        obj = cls.__new__(cls)
        obj.dim = dim
        obj._gens = raw
        obj._hash = None
        return obj

    @classmethod
    def _from_raw(cls, dim: int, raw) -> MonomialIdeal:
        return cls._canonical(dim, kernels.minimalize(raw))

    @classmethod
    def zero(cls, dim: int) -> MonomialIdeal:
        return cls._canonical(dim, ())

    @classmethod
    def prime(cls, dim: int, indices: Iterable[int]) -> MonomialIdeal:
        """The prime (x_i : i in indices) for 0-based ``indices``."""
        idx = sorted(set(indices))
        if not idx:
            raise ValueError("a monomial prime needs at least one variable")
        if idx[0] < 0 or idx[-1] >= dim:
            raise DimensionError("variable index outside the ambient dimension")
        return cls._from_raw(dim, [tuple(int(j == i) for j in range(dim)) for i in idx])

    @property
    def gens(self) -> tuple[Monomial, ...]:
        return tuple(Monomial(g) for g in self._gens)

    @property
    def exponent_vectors(self) -> tuple[tuple[int, ...], ...]:
        return self._gens

    def is_zero(self) -> bool:
        return not self._gens

    def max_exponent(self) -> int:
        return max((max(g) for g in self._gens), default=0)

    def __len__(self):
        return len(self._gens)

    def __iter__(self):
        return iter(self.gens)

    def __eq__(self, other):
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.dim == other.dim and self._gens == other._gens

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.dim, self._gens))
        return self._hash

    def __contains__(self, m) -> bool:
        return contains_monomial(self, m)

    def __le__(self, other: MonomialIdeal) -> bool:
        return is_subideal(self, other)

    def __and__(self, other: MonomialIdeal) -> MonomialIdeal:
        return intersect(self, other)

    def __add__(self, other: MonomialIdeal) -> MonomialIdeal:
        return sum_ideals(self, other)

    def __mul__(self, other: MonomialIdeal) -> MonomialIdeal:
        return product(self, other)

    def __pow__(self, k: int) -> MonomialIdeal:
        return power(self, k)

    def __repr__(self):
        return f"MonomialIdeal({self.dim}, {[list(g) for g in self._gens]!r})"

    def __str__(self):
        if not self._gens:
            return "(0)"
        return "(" + ", ".join(format_exponents(g) for g in self._gens) + ")"


def _same_dim(I: MonomialIdeal, J: MonomialIdeal) -> None:
    if I.dim != J.dim:
        raise DimensionError(f"dimension mismatch: {I.dim} vs {J.dim}")


def minimalize(dim: int, raw_gens: Iterable) -> MonomialIdeal:
    return MonomialIdeal(dim, raw_gens)


def contains_monomial(I: MonomialIdeal, m) -> bool:
    exps = m.exponents if isinstance(m, Monomial) else tuple(m)
    if len(exps) != I.dim:
        raise DimensionError(f"monomial of dimension {len(exps)} tested against dimension {I.dim}")
    return kernels.divisible_by_any(I._gens, exps)


def is_subideal(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    """True iff I is contained in J."""
    _same_dim(I, J)
    return all(kernels.members(J._gens, I._gens))


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_dim(I, J)
    if I._gens == J._gens:
        return I
    return MonomialIdeal._from_raw(I.dim, kernels.lcm_pairs(I._gens, J._gens))


def intersect_all(ideals: Iterable[MonomialIdeal]) -> MonomialIdeal:
    """Intersection of a nonempty family (smallest ideals first keeps lcm sets small)."""
    items = sorted(ideals, key=len)
    if not items:
        raise ValueError("empty intersection is the unit ideal, which is not representable")
    acc = items[0]
    for J in items[1:]:
        acc = intersect(acc, J)
    return acc


def sum_ideals(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_dim(I, J)
    return MonomialIdeal._from_raw(I.dim, I._gens + J._gens)


def product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_dim(I, J)
    try:
        raw = kernels.mul_pairs(I._gens, J._gens)
    except OverflowError as exc:
        raise ExponentOverflowError(str(exc)) from None
    return MonomialIdeal._from_raw(I.dim, raw)


def power(I: MonomialIdeal, k: int) -> MonomialIdeal:
    """I^k from all size-k multisets of generators."""
    if k < 1:
        raise ValueError("power must be at least 1")
    if k == 1 or not I._gens:
        return I
    if I.max_exponent() * k > kernels.MAX_EXPONENT:
        raise ExponentOverflowError("exponent exceeds 64-bit budget")
    d = I.dim
    raw = [tuple(sum(g[j] for g in combo) for j in range(d))
           for combo in combinations_with_replacement(I._gens, k)]
    return MonomialIdeal._from_raw(d, raw)


def radical(I: MonomialIdeal) -> MonomialIdeal:
    return MonomialIdeal._from_raw(I.dim, [tuple(1 if e else 0 for e in g) for g in I._gens])


def is_squarefree_ideal(I: MonomialIdeal) -> bool:
    return all(e <= 1 for g in I._gens for e in g)


def is_monomial_prime(I: MonomialIdeal):
    """The PrimeSupport of I when I is generated by distinct variables, else None."""
    from .decomp import PrimeSupport

    if not I._gens:
        return None
    idx = []
    for g in I._gens:
        if sum(g) != 1:
            return None
        idx.append(g.index(1))
    return PrimeSupport(I.dim, frozenset(idx))


def equals(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    _same_dim(I, J)
    return I._gens == J._gens
