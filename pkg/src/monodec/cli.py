"""Command-line front end.

Exit codes: 0 success, 1 usage or parse error, 2 domain error (for example
the zero ideal given to ``decompose``), 3 an oracle disagreed under
``--verify``.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Optional, Sequence

from . import oracle
from .decomp import ass, decompose, is_irreducible, min_ass
from .errors import (DimensionError, ExponentOverflowError, ImproperIdealError,
                     NotSquarefreeError, ParseError, ZeroIdealError)
from .ideal import MonomialIdeal, contains_monomial, is_squarefree_ideal, power, radical
from .parse import parse_ideal, parse_monomial
from .powers import (check_power_criterion, ideal_json, integral_closure,
                     is_integrally_closed, is_normal_up_to, powers_equal, symbolic_power)

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_VERIFY = 0, 1, 2, 3
SCHEMA_VERSION = "1"


class UsageError(Exception):
    pass


class VerificationError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="monodec", allow_abbrev=False,
                     description="Compute with monomial ideals given as literals like \"(x1^2*x3, x2)\".")
    common = _Parser(add_help=False, allow_abbrev=False)
    common.add_argument("ideal", help="ideal literal, or '-' to read it from stdin")
    common.add_argument("--dim", type=_positive, help="ambient number of variables")
    common.add_argument("--json", action="store_true", help="emit JSON instead of text")
    common.add_argument("--verify", action="store_true", help="cross-check with a brute-force oracle")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    p = sub.add_parser("decompose", parents=[common], help="irredundant parametric decomposition")
    p.add_argument("--unicode", action="store_true", help="join components with ∩")
    sub.add_parser("radical", parents=[common], help="radical of the ideal")
    sub.add_parser("ass", parents=[common], help="associated primes as index sets")
    sub.add_parser("minass", parents=[common], help="minimal associated primes")
    sub.add_parser("irreducible", parents=[common], help="is the ideal irreducible")
    sub.add_parser("closure", parents=[common], help="integral closure")
    for name, text in (("power", "ordinary power I^k"), ("symbolic", "symbolic power I^(k)")):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("--k", type=_positive, required=True)
    p = sub.add_parser("eq-powers", parents=[common], help="compare I^k and I^(k) for one k or k=1..K")
    p.add_argument("--k", type=_positive)
    p.add_argument("--K", type=_positive)
    p.add_argument("--criterion", action="store_true",
                   help="squarefree inputs only: check the Ass/symbolic-power equivalence per k")
    p = sub.add_parser("normal", parents=[common], help="are I, I^2, ..., I^K integrally closed")
    p.add_argument("--K", type=_positive, required=True)
    p = sub.add_parser("member", parents=[common], help="is a monomial in the ideal")
    p.add_argument("monomial", help="monomial literal such as x1*x3^2")
    p = sub.add_parser("verify-variants", parents=[common],
                       help="decompose under shuffled generators and both split rules")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--shuffles", type=_positive, default=3)
    return parser


def _bool(b: bool) -> str:
    return "true" if b else "false"


def _require(ok: bool, what: str) -> None:
    if not ok:
        raise VerificationError(f"verification failed: {what}")


def _supports_text(supports) -> str:
    return "\n".join(str(p) for p in sorted(supports))


def _do_decompose(I, args):
    D = decompose(I)
    if args.verify:
        _require(oracle.verify_decomposition(I, D), "decomposition does not intersect to the input")
    return D.to_json_obj(), D.render(unicode=args.unicode)


def _do_radical(I, args):
    R = radical(I)
    if args.verify:
        _require(oracle.grid_equal(R, oracle.grid_radical(I)), "radical differs from grid radical")
    return {"ideal": ideal_json(R)}, str(R)


def _do_supports(I, args, minimal: bool):
    if args.verify:
        _require(oracle.verify_decomposition(I, decompose(I)), "decomposition check")
    S = min_ass(I) if minimal else ass(I)
    return {"supports": [p.one_based() for p in sorted(S)]}, _supports_text(S)


def _do_irreducible(I, args):
    r = is_irreducible(I)
    if args.verify:
        _require(r == (len(decompose(I)) == 1), "irreducibility disagrees with decomposition")
    return {"result": r}, _bool(r)


def _do_power(I, args):
    P = power(I, args.k)
    if args.verify:
        _require(oracle.grid_equal(P, oracle.grid_power(I, args.k)), "power differs from grid power")
    return {"ideal": ideal_json(P)}, str(P)


def _do_symbolic(I, args):
    S = symbolic_power(I, args.k)
    if args.verify:
        if is_squarefree_ideal(I):
            _require(S == symbolic_power(I, args.k, method="general"), "symbolic routes disagree")
        P = power(I, args.k)
        _require(oracle.verify_decomposition(P, decompose(P)), "decomposition of I^k")
    return {"ideal": ideal_json(S)}, str(S)


def _do_closure(I, args):
    C = integral_closure(I)
    if args.verify:
        witnessed = oracle.grid_closure(I, 6)
        _require(witnessed <= C, "a monomial with a power witness was rejected")
        _require(I <= C, "closure does not contain the ideal")
    return {"ideal": ideal_json(C)}, str(C)


def _do_normal(I, args):
    res = is_normal_up_to(I, args.K)
    if args.verify:
        last_closed = res.checked_up_to if res.normal else res.first_failure - 1
        for k in range(1, last_closed + 1):
            P = power(I, k)
            _require(oracle.grid_closure(P, 6) <= P,
                     f"power {k} has witnessed closure elements outside it")
    obj = {"normal": res.normal, "first_failure": res.first_failure,
           "checked_up_to": res.checked_up_to, "bounded": True}
    if res.normal:
        text = f"normal up to K={args.K}: true (bounded check, not a proof for larger powers)"
    else:
        text = f"normal up to K={args.K}: false (first failure at k={res.first_failure})"
    return obj, text


def _do_member(I, args):
    m = parse_monomial(args.monomial, dim=I.dim)
    r = contains_monomial(I, m)
    if args.verify:
        _require(r == oracle._member(I.exponent_vectors, m.exponents), "membership")
    return {"result": r}, _bool(r)


def _do_eq_powers(I, args):
    if args.k and args.K:
        raise UsageError("give either --k or --K, not both")
    ks = [args.k] if args.k else list(range(1, (args.K or 1) + 1))
    reports = [powers_equal(I, k) for k in ks]
    normal = [is_integrally_closed(r.ordinary) for r in reports]
    criterion = None
    if args.criterion:
        criterion = check_power_criterion(I, max(ks))
    if args.verify or args.criterion:
        if is_squarefree_ideal(I):
            for r in reports:
                _require(r.equal == r.ass_condition, f"equivalence fails at k={r.k}")
        if criterion is not None:
            _require(criterion.ok, "criterion report inconsistent")
    lines = ["k | equal | ass_condition | normal_at_k"]
    for r, n in zip(reports, normal):
        lines.append(f"{r.k} | {_bool(r.equal)} | {_bool(r.ass_condition)} | {_bool(n)}")
    if criterion is not None:
        lines.append(f"equivalence holds for k<={criterion.K}: {_bool(criterion.equivalence_holds)}")
        if criterion.condition_holds_all:
            lines.append("condition holds for every k checked; normality for all k follows "
                         "(derived, not computed)")
    obj = {"reports": [dict(r.to_json_obj(), normal_at_k=n) for r, n in zip(reports, normal)]}
    if criterion is not None:
        obj["criterion"] = criterion.to_json_obj()
    return obj, "\n".join(lines)


def _do_variants(I, args):
    rng = random.Random(args.seed)
    base = decompose(I)
    results = [base, decompose(I, rule="largest")]
    gens = list(I.gens)
    for _ in range(args.shuffles):
        rng.shuffle(gens)
        J = MonomialIdeal(I.dim, gens)
        results.append(decompose(J))
        results.append(decompose(J, rule="largest"))
    agree = all(D == base for D in results)
    _require(agree, "decomposition depends on generator order or split rule")
    if args.verify:
        _require(oracle.verify_decomposition(I, base), "decomposition check")
    obj = {"variants": len(results), "agree": agree, **base.to_json_obj()}
    return obj, f"ok: {len(results)} variants agree\n{base.render()}"


_HANDLERS = {
    "decompose": _do_decompose,
    "radical": _do_radical,
    "ass": lambda I, a: _do_supports(I, a, minimal=False),
    "minass": lambda I, a: _do_supports(I, a, minimal=True),
    "irreducible": _do_irreducible,
    "power": _do_power,
    "symbolic": _do_symbolic,
    "closure": _do_closure,
    "normal": _do_normal,
    "member": _do_member,
    "eq-powers": _do_eq_powers,
    "verify-variants": _do_variants,
}


def run(argv: Sequence[str], stdin=None) -> tuple[int, str, str]:
    """Execute one command; returns ``(exit_code, stdout_text, stderr_text)``."""
    try:
        args = build_parser().parse_args(list(argv))
        literal = args.ideal
        if literal == "-":
            literal = (stdin if stdin is not None else sys.stdin).read()
        I = parse_ideal(literal, dim=args.dim)
    except (UsageError, ParseError, ImproperIdealError, DimensionError) as exc:
        return EXIT_USAGE, "", f"error: {exc}\n"
    try:
        obj, text = _HANDLERS[args.verb](I, args)
    except UsageError as exc:
        return EXIT_USAGE, "", f"error: {exc}\n"
    except (ParseError, ImproperIdealError) as exc:
        return EXIT_USAGE, "", f"error: {exc}\n"
    except (ZeroIdealError, NotSquarefreeError, ExponentOverflowError, DimensionError) as exc:
        return EXIT_DOMAIN, "", f"error: {exc}\n"
    except VerificationError as exc:
        return EXIT_VERIFY, "", f"{exc}\n"
    if args.json:
        return EXIT_OK, json.dumps(obj, ensure_ascii=False) + "\n", ""
    return EXIT_OK, text + "\n", ""


def main(argv: Optional[Sequence[str]] = None) -> int:
    code, out, err = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code


if __name__ == "__main__":
    sys.exit(main())
