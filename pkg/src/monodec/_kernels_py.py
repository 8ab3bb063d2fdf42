"""Pure-Python exponent-vector kernels.

Reference implementation of the routines in ``_kernels.pyx``; both modules
expose the same functions and must return identical values. Vectors are
plain tuples of non-negative ints.
"""
from itertools import product as _cartesian

MAX_EXPONENT = 2**63 - 1


def canonical_key(v):
    # degree first, then reverse-lexicographic on the reversed vector
    return (sum(v), v[::-1])


def minimalize(vectors):
    """Return the minimal elements of ``vectors`` under divisibility.

    Output is deduplicated and in canonical order. A vector can only be
    divided by one of no larger degree, so a single sorted sweep suffices.
    """
    ordered = sorted(set(vectors), key=canonical_key)
    kept = []
    for v in ordered:
        for g in kept:
            if all(a <= b for a, b in zip(g, v)):
                break
        else:
            kept.append(v)
    return tuple(kept)


def divisible_by_any(gens, v):
    for g in gens:
        if all(a <= b for a, b in zip(g, v)):
            return True
    return False


def members(gens, points):
    return [divisible_by_any(gens, p) for p in points]


def lcm_pairs(left, right):
    return [tuple(map(max, u, w)) for u, w in _cartesian(left, right)]


def mul_pairs(left, right):
    out = []
    for u, w in _cartesian(left, right):
        s = tuple(a + b for a, b in zip(u, w))
        if s and max(s) > MAX_EXPONENT:
            raise OverflowError("exponent exceeds 64-bit budget")
        out.append(s)
    return out
