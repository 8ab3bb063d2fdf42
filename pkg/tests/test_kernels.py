"""Both kernel backends must agree with each other and with the obvious definitions."""
import pytest
from hypothesis import given, strategies as st

from monodec import kernels, _kernels_py

from conftest import BACKENDS, _kernels_c


vectors = st.integers(1, 5).flatmap(
    lambda d: st.lists(st.tuples(*[st.integers(0, 5)] * d), min_size=0, max_size=25))


def test_backend_selected():
    assert kernels.BACKEND in ("cython", "python")
    if _kernels_c is not None:
        assert kernels.BACKEND == "cython"


def test_minimalize_examples(backend):
    assert backend.minimalize([(1, 0), (2, 0), (1, 1)]) == ((1, 0),)
    assert backend.minimalize([(2, 0), (0, 3)]) == ((2, 0), (0, 3))
    assert backend.minimalize([(1, 1, 0), (0, 1, 1), (1, 1, 1)]) == ((1, 1, 0), (0, 1, 1))
    assert backend.minimalize([]) == ()


def test_canonical_order(backend):
    # degree first, then smaller exponents in later variables first
    got = backend.minimalize([(0, 2, 2), (1, 1, 2), (2, 0, 2), (1, 2, 1), (2, 1, 1), (2, 2, 0)])
    assert got == ((2, 2, 0), (2, 1, 1), (1, 2, 1), (2, 0, 2), (1, 1, 2), (0, 2, 2))


def test_mul_pairs_overflow(backend):
    big = _kernels_py.MAX_EXPONENT
    with pytest.raises(OverflowError):
        backend.mul_pairs([(big, 0)], [(1, 0)])


@given(vectors)
def test_minimalize_is_antichain_and_generates_same_set(vecs):
    out = _kernels_py.minimalize(vecs)
    for a in out:
        for b in out:
            if a != b:
                assert not all(x <= y for x, y in zip(a, b))
    for v in vecs:
        assert _kernels_py.divisible_by_any(out, v)
    assert _kernels_py.minimalize(out) == out


@pytest.mark.skipif(_kernels_c is None, reason="compiled kernels not built")
@given(vectors, vectors)
def test_backends_agree(a, b):
    if a and b and len(a[0]) != len(b[0]):
        return
    assert _kernels_c.minimalize(a) == _kernels_py.minimalize(a)
    assert _kernels_c.lcm_pairs(a, b) == _kernels_py.lcm_pairs(a, b)
    assert _kernels_c.mul_pairs(a, b) == _kernels_py.mul_pairs(a, b)
    assert _kernels_c.members(a, b) == _kernels_py.members(a, b)
    for v in b:
        assert _kernels_c.divisible_by_any(a, v) == _kernels_py.divisible_by_any(a, v)


@pytest.mark.parametrize("mod", [p.values[0] for p in BACKENDS], ids=[p.id for p in BACKENDS])
def test_lcm_and_members(mod):
    assert mod.lcm_pairs([(2, 0)], [(1, 3), (0, 1)]) == [(2, 3), (2, 1)]
    assert mod.members([(1, 1)], [(2, 1), (0, 5)]) == [True, False]
    assert mod.members([], [(1,)]) == [False]
