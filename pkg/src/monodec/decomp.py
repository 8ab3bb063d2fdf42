"""Irredundant decomposition into generalized-parametric ideals.

A generalized-parametric ideal is generated by pure powers of distinct
variables, ``(x_i1^e1, ..., x_ik^ek)``. Every nonzero monomial ideal is an
irredundant intersection of such ideals, and that presentation is unique;
the splitting below finds it, and canonical ordering makes the output
independent of how it was found.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping

from . import kernels
from .errors import DimensionError, ZeroIdealError
from .ideal import MonomialIdeal, intersect_all
from .monomial import Monomial, format_exponents

SPLIT_RULES = ("smallest", "largest")


@dataclass(frozen=True, order=False)
class PrimeSupport:
    """The monomial prime (x_i : i in indices); ``indices`` are 0-based."""

    dim: int
    indices: frozenset

    def __post_init__(self):
        object.__setattr__(self, "indices", frozenset(self.indices))
        if not self.indices:
            raise ValueError("a prime support must be nonempty")
        if min(self.indices) < 0 or max(self.indices) >= self.dim:
            raise DimensionError("prime support index outside the ambient dimension")

    @property
    def sorted_indices(self) -> tuple[int, ...]:
        return tuple(sorted(self.indices))

    def one_based(self) -> list[int]:
        return [i + 1 for i in self.sorted_indices]

    def ideal(self) -> MonomialIdeal:
        return MonomialIdeal.prime(self.dim, self.indices)

    def __lt__(self, other: PrimeSupport) -> bool:
        return self.sorted_indices < other.sorted_indices

    def __str__(self):
        return "{" + ", ".join(map(str, self.one_based())) + "}"


@dataclass(frozen=True)
class ParametricIdeal:
    """Ideal generated by pure powers of distinct variables.

    Stored as a dense vector: ``vector[i]`` is the exponent of x_{i+1}, or 0
    when that variable does not occur.
    """

    dim: int
    vector: tuple

    def __post_init__(self):
        vec = tuple(self.vector)
        object.__setattr__(self, "vector", vec)
        if len(vec) != self.dim:
            raise DimensionError("parametric vector length differs from dim")
        if any(e < 0 for e in vec) or not any(vec):
            raise ValueError("a parametric ideal needs at least one positive exponent")

    @classmethod
    def from_assignments(cls, dim: int, assignments: Mapping[int, int]) -> ParametricIdeal:
        """Build from a 0-based ``{index: exponent}`` map."""
        vec = [0] * dim
        for i, e in assignments.items():
            if not 0 <= i < dim:
                raise DimensionError(f"variable index {i} outside 0..{dim - 1}")
            if e < 1:
                raise ValueError("parametric exponents must be positive")
            vec[i] = e
        return cls(dim, tuple(vec))

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(i for i, e in enumerate(self.vector) if e)

    @property
    def exponents(self) -> tuple[int, ...]:
        return tuple(e for e in self.vector if e)

    @property
    def assignments(self) -> dict[int, int]:
        return {i: e for i, e in enumerate(self.vector) if e}

    @property
    def support(self) -> PrimeSupport:
        return PrimeSupport(self.dim, frozenset(self.indices))

    def sort_key(self):
        return (self.indices, self.exponents)

    def to_ideal(self) -> MonomialIdeal:
        return MonomialIdeal._from_raw(self.dim, _pure_powers(self.vector))

    def __lt__(self, other: ParametricIdeal) -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self):
        # index order, which matches how such ideals are usually written
        d = self.dim
        parts = []
        for i, e in enumerate(self.vector):
            if e:
                exps = [0] * d
                exps[i] = e
                parts.append(format_exponents(exps))
        return "(" + ", ".join(parts) + ")"


@dataclass(frozen=True)
class Decomposition:
    dim: int
    components: tuple

    def __iter__(self):
        return iter(self.components)

    def __len__(self):
        return len(self.components)

    def intersection(self) -> MonomialIdeal:
        return intersect_all(c.to_ideal() for c in self.components)

    def to_json_obj(self) -> dict:
        return {"components": [
            {"indices": [i + 1 for i in c.indices], "exponents": list(c.exponents)}
            for c in self.components]}

    def render(self, unicode: bool = False) -> str:
        sep = " ∩ " if unicode else " /\\ "
        return sep.join(str(c) for c in self.components)

    def __str__(self):
        return self.render()


def _pure_powers(vector) -> list[tuple]:
    d = len(vector)
    out = []
    for i, e in enumerate(vector):
        if e:
            v = [0] * d
            v[i] = e
            out.append(tuple(v))
    return out


def _is_pure_power(g) -> bool:
    return sum(1 for e in g if e) <= 1


def _split_raw(gens: tuple, i: int, rule: str):
    g = gens[i]
    supp = [j for j, e in enumerate(g) if e]
    if len(supp) < 2:
        raise ValueError("cannot split a pure power")
    if rule == "smallest":
        j = supp[0]
    elif rule == "largest":
        j = supp[-1]
    else:
        raise ValueError(f"unknown split rule {rule!r}")
    v = tuple(e if t == j else 0 for t, e in enumerate(g))
    w = tuple(0 if t == j else e for t, e in enumerate(g))
    return gens[:i] + (v,) + gens[i + 1:], gens[:i] + (w,) + gens[i + 1:]


def split(gens, i: int, rule: str = "smallest"):
    """Split generator ``i`` into coprime factors v*w.

    Returns the two generator lists obtained by replacing ``gens[i]`` with v
    and with w respectively; the ideal is the intersection of the two. v is
    the full power of the smallest (or, with ``rule="largest"``, the largest)
    variable of ``gens[i]``.
    """
    raw = tuple(g.exponents if isinstance(g, Monomial) else tuple(g) for g in gens)
    left, right = _split_raw(raw, i, rule)
    return [Monomial(g) for g in left], [Monomial(g) for g in right]


def _param_le(a, b) -> bool:
    """Parametric ideal with vector ``a`` is contained in the one with ``b``."""
    for x, y in zip(a, b):
        if x and (not y or y > x):
            return False
    return True


def _minimal_components(vectors) -> frozenset:
    # an irreducible component containing another one contains the
    # intersection of the rest, so keeping inclusion-minimal ones is exact
    vecs = list(set(vectors))
    keep = []
    for a in vecs:
        if not any(b != a and _param_le(b, a) for b in vecs):
            keep.append(a)
    return frozenset(keep)


@lru_cache(maxsize=1 << 16)
def _components(gens: tuple, rule: str) -> frozenset:
    for i, g in enumerate(gens):
        if not _is_pure_power(g):
            break
    else:
        vec = [0] * len(gens[0])
        for g in gens:
            for j, e in enumerate(g):
                if e:
                    vec[j] = e
        return frozenset([tuple(vec)])
    left, right = _split_raw(gens, i, rule)
    return _minimal_components(
        _components(kernels.minimalize(left), rule) | _components(kernels.minimalize(right), rule))


def _require_nonzero(I: MonomialIdeal) -> None:
    if I.is_zero():
        raise ZeroIdealError("the zero ideal has no parametric decomposition")


def decompose(I: MonomialIdeal, rule: str = "smallest") -> Decomposition:
    """Canonical irredundant parametric decomposition of a nonzero ideal."""
    _require_nonzero(I)
    if rule not in SPLIT_RULES:
        raise ValueError(f"unknown split rule {rule!r}")
    comps = sorted((ParametricIdeal(I.dim, v) for v in _components(I.exponent_vectors, rule)),
                   key=ParametricIdeal.sort_key)
    return Decomposition(I.dim, tuple(comps))


def is_irreducible(I: MonomialIdeal) -> bool:
    _require_nonzero(I)
    return all(_is_pure_power(g) for g in I.exponent_vectors)


def ass(I: MonomialIdeal) -> frozenset:
    """Associated primes: supports of the decomposition's components."""
    return frozenset(c.support for c in decompose(I))


def minimal_supports(supports: Iterable[PrimeSupport]) -> frozenset:
    items = list(set(supports))
    return frozenset(p for p in items
                     if not any(q.indices < p.indices for q in items))


def min_ass(I: MonomialIdeal) -> frozenset:
    return minimal_supports(ass(I))


def primary_merge(D: Decomposition) -> list:
    """Group components by support and intersect each group.

    Returns ``(PrimeSupport, MonomialIdeal)`` pairs sorted by support; each
    ideal is primary to its support.
    """
    groups: dict = {}
    for c in D.components:
        groups.setdefault(c.support, []).append(c.to_ideal())
    return [(p, intersect_all(groups[p])) for p in sorted(groups)]
