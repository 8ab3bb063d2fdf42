import random
from itertools import combinations, product

import pytest
from hypothesis import strategies as st

from monodec import MonomialIdeal
from monodec import _kernels_py

try:
    from monodec import _kernels as _kernels_c
except ImportError:  # extension not built
    _kernels_c = None

BACKENDS = [pytest.param(_kernels_py, id="python")]
if _kernels_c is not None:
    BACKENDS.append(pytest.param(_kernels_c, id="cython"))


@pytest.fixture(params=BACKENDS)
def backend(request):
    return request.param


def random_ideal(rng, max_dim=5, max_gens=6, max_exp=4, squarefree=False, dim=None):
    d = dim if dim is not None else rng.randint(1, max_dim)
    n = rng.randint(1, max_gens)
    top = 1 if squarefree else max_exp
    gens = []
    while len(gens) < n:
        v = tuple(rng.randint(0, top) for _ in range(d))
        if any(v):
            gens.append(v)
    return MonomialIdeal(d, gens)


def squarefree_antichains(d):
    """Every nonzero proper squarefree monomial ideal in d variables."""
    subsets = [frozenset(s) for r in range(1, d + 1) for s in combinations(range(d), r)]
    out = []

    def grow(start, chosen):
        if chosen:
            out.append(list(chosen))
        for j in range(start, len(subsets)):
            s = subsets[j]
            if any(c <= s or s <= c for c in chosen):
                continue
            chosen.append(s)
            grow(j + 1, chosen)
            chosen.pop()

    grow(0, [])
    return [MonomialIdeal(d, [tuple(int(i in s) for i in range(d)) for s in ac]) for ac in out]


def bounded_ideals(d, max_exp, max_gens):
    """All ideals whose minimal generators have entries <= max_exp, up to max_gens of them."""
    from monodec.kernels import minimalize

    pts = [p for p in product(range(max_exp + 1), repeat=d) if any(p)]
    for r in range(1, max_gens + 1):
        for combo in combinations(pts, r):
            if len(minimalize(combo)) == r:
                yield MonomialIdeal(d, combo)


@st.composite
def ideals(draw, max_dim=4, max_gens=5, max_exp=3, dim=None):
    d = dim if dim is not None else draw(st.integers(1, max_dim))
    vec = st.tuples(*[st.integers(0, max_exp)] * d).filter(any)
    gens = draw(st.lists(vec, min_size=1, max_size=max_gens))
    return MonomialIdeal(d, gens)


@st.composite
def ideal_pairs(draw, max_dim=3, max_gens=4, max_exp=3):
    d = draw(st.integers(1, max_dim))
    return (draw(ideals(max_gens=max_gens, max_exp=max_exp, dim=d)),
            draw(ideals(max_gens=max_gens, max_exp=max_exp, dim=d)))


@st.composite
def monomials(draw, dim, max_exp=4):
    from monodec import Monomial

    return Monomial(draw(st.tuples(*[st.integers(0, max_exp)] * dim)))


@pytest.fixture
def rng():
    return random.Random(20261016)
