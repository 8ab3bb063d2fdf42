"""Monomials x1^e1 * ... * xd^ed stored as exponent vectors.

Indices are 0-based in code; the text form uses 1-based names ``x1..xd``.
"""
from __future__ import annotations

from typing import Iterable

from .errors import DimensionError, ExponentOverflowError
from .kernels import MAX_EXPONENT, canonical_key


class Monomial:
    """Immutable exponent vector.

    Ordering follows the canonical comparator used everywhere in the
    package: total degree first, then graded reverse lexicographic.
    """

    __slots__ = ("exponents",)

    def __init__(self, exponents: Iterable[int]):
        exps = tuple(exponents)
        if not exps:
            raise DimensionError("a monomial needs at least one variable")
        for e in exps:
            if not isinstance(e, int) or isinstance(e, bool):
                raise TypeError(f"exponent {e!r} is not an integer")
            if e < 0:
                raise ValueError(f"negative exponent {e}")
            if e > MAX_EXPONENT:
                raise ExponentOverflowError(f"exponent {e} exceeds 64-bit budget")
        object.__setattr__(self, "exponents", exps)

    def __setattr__(self, name, value):
        raise AttributeError("Monomial is immutable")

    @classmethod
    def one(cls, dim: int) -> Monomial:
        return cls((0,) * dim)

    @classmethod
    def var(cls, dim: int, index: int, exponent: int = 1) -> Monomial:
        """x_{index+1}^exponent in ``dim`` variables (``index`` is 0-based)."""
        if not 0 <= index < dim:
            raise DimensionError(f"variable index {index} outside 0..{dim - 1}")
        exps = [0] * dim
        exps[index] = exponent
        return cls(exps)

    @property
    def dim(self) -> int:
        return len(self.exponents)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    def is_one(self) -> bool:
        return not any(self.exponents)

    def __eq__(self, other):
        if not isinstance(other, Monomial):
            return NotImplemented
        return self.exponents == other.exponents

    def __hash__(self):
        return hash(("Monomial", self.exponents))

    def __lt__(self, other: Monomial) -> bool:
        _check_dims(self, other)
        return canonical_key(self.exponents) < canonical_key(other.exponents)

    def __le__(self, other: Monomial) -> bool:
        return self == other or self < other

    def __mul__(self, other: Monomial) -> Monomial:
        return mul(self, other)

    def __pow__(self, k: int) -> Monomial:
        return mpow(self, k)

    def __iter__(self):
        return iter(self.exponents)

    def __len__(self):
        return len(self.exponents)

    def __getitem__(self, i):
        return self.exponents[i]

    def __repr__(self):
        return f"Monomial({list(self.exponents)!r})"

    def __str__(self):
        return format_exponents(self.exponents)


def format_exponents(exps) -> str:
    factors = []
    for i, e in enumerate(exps):
        if e == 1:
            factors.append(f"x{i + 1}")
        elif e > 1:
            factors.append(f"x{i + 1}^{e}")
    return "*".join(factors) if factors else "1"


def _check_dims(u: Monomial, v: Monomial) -> None:
    if len(u.exponents) != len(v.exponents):
        raise DimensionError(f"dimension mismatch: {u.dim} vs {v.dim}")


def mul(u: Monomial, v: Monomial) -> Monomial:
    _check_dims(u, v)
    exps = tuple(a + b for a, b in zip(u.exponents, v.exponents))
    if max(exps) > MAX_EXPONENT:
        raise ExponentOverflowError("exponent exceeds 64-bit budget")
    return Monomial(exps)


def mpow(u: Monomial, k: int) -> Monomial:
    if k < 0:
        raise ValueError("power must be non-negative")
    exps = tuple(e * k for e in u.exponents)
    if max(exps) > MAX_EXPONENT:
        raise ExponentOverflowError("exponent exceeds 64-bit budget")
    return Monomial(exps)


def divides(u: Monomial, v: Monomial) -> bool:
    _check_dims(u, v)
    return all(a <= b for a, b in zip(u.exponents, v.exponents))


def gcd(u: Monomial, v: Monomial) -> Monomial:
    _check_dims(u, v)
    return Monomial(map(min, u.exponents, v.exponents))


def lcm(u: Monomial, v: Monomial) -> Monomial:
    _check_dims(u, v)
    return Monomial(map(max, u.exponents, v.exponents))


def coprime(u: Monomial, v: Monomial) -> bool:
    _check_dims(u, v)
    return not any(a and b for a, b in zip(u.exponents, v.exponents))


def support(m: Monomial) -> frozenset[int]:
    """0-based indices of the variables occurring in ``m``."""
    return frozenset(i for i, e in enumerate(m.exponents) if e)


def rad_monomial(m: Monomial) -> Monomial:
    return Monomial(1 if e else 0 for e in m.exponents)


def is_squarefree_monomial(m: Monomial) -> bool:
    return all(e <= 1 for e in m.exponents)
