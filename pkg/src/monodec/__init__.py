"""Monomial ideals in the exponent-vector model.

Canonical parametric (irreducible) decompositions, associated primes,
radicals, ordinary and symbolic powers, integral closure via the Newton
polyhedron, and brute-force oracles to check all of it on small inputs.
"""
from .decomp import (Decomposition, ParametricIdeal, PrimeSupport, ass, decompose,
                     is_irreducible, min_ass, primary_merge, split)
from .errors import (DimensionError, ExponentOverflowError, ImproperIdealError,
                     MonodecError, NotSquarefreeError, ParseError, ZeroIdealError)
from .ideal import (MonomialIdeal, contains_monomial, equals, intersect, intersect_all,
                    is_monomial_prime, is_squarefree_ideal, is_subideal, minimalize,
                    power, product, radical, sum_ideals)
from .kernels import BACKEND
from .monomial import (Monomial, coprime, divides, gcd, is_squarefree_monomial, lcm,
                       mpow, mul, rad_monomial, support)
from .parse import parse_ideal, parse_monomial
from .powers import (CriterionReport, NormalityResult, PowerReport, check_power_criterion,
                     integral_closure, is_integrally_closed, is_normal_up_to, powers_equal,
                     symbolic_power)

__version__ = "0.1.0"
