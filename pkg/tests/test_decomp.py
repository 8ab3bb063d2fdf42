import random

import pytest
from hypothesis import given, settings

from monodec import (Decomposition, Monomial, MonomialIdeal, ParametricIdeal, PrimeSupport,
                     ZeroIdealError, ass, decompose, intersect_all, is_irreducible,
                     is_squarefree_ideal, min_ass, parse_ideal, primary_merge, radical, split)
from monodec.oracle import grid_equal, verify_decomposition

from conftest import ideals, random_ideal

P = parse_ideal


def supports(S):
    return sorted(p.one_based() for p in S)


def M(*e):
    return Monomial(e)


def test_split_examples():
    left, right = split([M(2, 1, 0), M(0, 0, 1)], 0)
    assert left == [M(2, 0, 0), M(0, 0, 1)]
    assert right == [M(0, 1, 0), M(0, 0, 1)]
    l, r = split([M(1, 1)], 0)
    assert intersect_all([MonomialIdeal(2, l), MonomialIdeal(2, r)]) == P("(x1*x2)")
    l, r = split([M(1, 1, 1)], 0)
    assert (l, r) == ([M(1, 0, 0)], [M(0, 1, 1)])
    l, r = split([M(1, 1, 1)], 0, rule="largest")
    assert (l, r) == ([M(0, 0, 1)], [M(1, 1, 0)])
    with pytest.raises(ValueError):
        split([M(3, 0)], 0)


def test_decompose_examples():
    I = P("(x1^2, x1*x2)")
    D = decompose(I)
    assert str(D) == "(x1) /\\ (x1^2, x2)"
    assert D.components == (ParametricIdeal(2, (1, 0)), ParametricIdeal(2, (2, 1)))
    assert verify_decomposition(I, D)

    tri = P("(x1*x2, x1*x3, x2*x3)")
    D = decompose(tri)
    assert str(D) == "(x1, x2) /\\ (x1, x3) /\\ (x2, x3)"
    assert verify_decomposition(tri, D)

    I = P("(x1^3, x2^2)")
    assert [c.to_ideal() for c in decompose(I)] == [I]
    with pytest.raises(ZeroIdealError):
        decompose(MonomialIdeal.zero(2))


def test_render_and_json():
    D = decompose(P("(x1^2, x1*x2)"))
    assert D.render(unicode=True) == "(x1) ∩ (x1^2, x2)"
    assert D.to_json_obj() == {"components": [{"indices": [1], "exponents": [1]},
                                              {"indices": [1, 2], "exponents": [2, 1]}]}


def test_is_irreducible_examples():
    assert is_irreducible(P("(x1^2, x3)"))
    assert not is_irreducible(P("(x1*x2)"))
    assert not is_irreducible(P("(x1^2, x1*x2)"))
    assert len(decompose(P("(x1^2, x1*x2)"))) == 2
    with pytest.raises(ZeroIdealError):
        is_irreducible(MonomialIdeal.zero(1))


def test_ass_examples():
    assert supports(ass(P("(x1^2, x1*x2)"))) == [[1], [1, 2]]
    assert supports(ass(P("(x1*x2, x1*x3, x2*x3)"))) == [[1, 2], [1, 3], [2, 3]]
    assert supports(ass(P("(x1^5)"))) == [[1]]


def test_min_ass_examples():
    assert supports(min_ass(P("(x1^2, x1*x2)"))) == [[1]]
    I = P("(x1*x2, x2*x3)")
    assert str(decompose(I)) == "(x1, x3) /\\ (x2)"
    assert supports(min_ass(I)) == [[1, 3], [2]]
    assert supports(min_ass(P("(x1)"))) == [[1]]


def test_primary_merge_examples():
    D = decompose(P("(x1^2, x1*x2)"))
    merged = primary_merge(D)
    assert [(p.one_based(), str(Q)) for p, Q in merged] == [([1], "(x1)"), ([1, 2], "(x2, x1^2)")]

    D = Decomposition(2, (ParametricIdeal(2, (1, 3)), ParametricIdeal(2, (2, 1))))
    merged = primary_merge(D)
    assert len(merged) == 1
    p, Q = merged[0]
    assert p == PrimeSupport(2, {0, 1})
    assert Q == intersect_all([P("(x1, x2^3)"), P("(x1^2, x2)")])
    assert radical(Q) == p.ideal()

    D = Decomposition(2, (ParametricIdeal(2, (2, 1)), ParametricIdeal(2, (1, 2))))
    (p, Q), = primary_merge(D)
    assert Q == P("(x1^2, x1*x2, x2^2)")
    assert radical(Q) == P("(x1, x2)")


def _literal_irredundant(I, D):
    comps = [c.to_ideal() for c in D]
    for i in range(len(comps)):
        rest = comps[:i] + comps[i + 1:]
        if rest and grid_equal(intersect_all(rest), I):
            return False
    return True


@settings(max_examples=200, deadline=None)
@given(ideals(max_dim=4, max_gens=5, max_exp=3))
def test_decompose_properties(I):
    D = decompose(I)
    assert verify_decomposition(I, D)
    assert D.intersection() == I
    assert _literal_irredundant(I, D)
    assert decompose(I, rule="largest") == D
    assert is_irreducible(I) == (len(D) == 1 and D.components[0].to_ideal() == I)
    A, mA = ass(I), min_ass(I)
    assert mA <= A
    assert not any(p.indices < q.indices for p in mA for q in mA)
    merged = primary_merge(D)
    assert intersect_all(Q for _, Q in merged) == I
    for p, Q in merged:
        assert radical(Q) == p.ideal()


def test_squarefree_components_are_primes(rng):
    for _ in range(200):
        I = random_ideal(rng, squarefree=True)
        D = decompose(I)
        assert all(set(c.exponents) == {1} for c in D)
        assert ass(I) == min_ass(I)
        assert is_squarefree_ideal(I)


def test_shuffled_generators_same_output(rng):
    for _ in range(100):
        I = random_ideal(rng)
        gens = list(I.gens)
        random.Random(len(gens)).shuffle(gens)
        assert decompose(MonomialIdeal(I.dim, gens)) == decompose(I)


def test_parametric_validation():
    with pytest.raises(ValueError):
        ParametricIdeal(2, (0, 0))
    q = ParametricIdeal.from_assignments(3, {2: 4, 0: 1})
    assert q.indices == (0, 2) and q.exponents == (1, 4)
    assert str(q) == "(x1, x3^4)"
    with pytest.raises(ValueError):
        PrimeSupport(3, set())
