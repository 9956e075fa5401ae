"""Command line interface: ``wordhopf <command> ...``.

Exit codes: 0 success, 1 verification failure, 2 parse or usage error,
3 precondition violated (wrong kind of element, non-permutation, ...).
"""

from __future__ import annotations

import argparse
import sys
import time

from . import endo
from .base_algebras import NSYMM, SHUFFLE
from .dwha import (
    DWHA,
    DWHA_PAIRING,
    SupportMismatch,
    canonicalize,
    embed,
    format_substitution,
    subst_compose,
)
from .hopf import HopfStructure, antipode, check_selfdual, run_suite
from .lincomb import LinComb, Tensor, lift, lift2
from .mpr import MPR, MPR_PAIRING, mpr_compose
from .text import format_lincomb, format_word, lincomb_to_json, parse_raw, parse_word
from .wha import WHA, NotWHAForm, decode, encode
from .words import RepeatedLetters, is_permutation

ALGEBRAS: dict[str, HopfStructure] = {
    "shuffle": SHUFFLE,
    "nsymm": NSYMM,
    "mpr": MPR,
    "wha": WHA,
    "dwha": DWHA,
}

LITERAL_KIND = {"shuffle": "word", "nsymm": "nsymm", "mpr": "word", "wha": "word", "dwha": "subst"}

DEFAULT_BOUNDS = {
    "shuffle": {"max_weight": 5},
    "nsymm": {"max_weight": 4},
    "mpr": {"max_len": 4},
    "wha": {"max_len": 3, "max_height": 3},
    "dwha": {"max_support": 2, "max_top": 3, "max_bottom": 3},
}


class Precondition(Exception):
    """Input parsed but is not a valid operand (exit 3)."""


PRECONDITION_ERRORS = (
    Precondition,
    SupportMismatch,
    NotWHAForm,
    RepeatedLetters,
    endo.NotAGroup,
    endo.HopfAxiomError,
)


def _basis_element(algebra: str, kind: str, payload):
    if kind == "unit":
        return ALGEBRAS[algebra].unit
    if kind != LITERAL_KIND[algebra]:
        raise Precondition(f"{kind} literal is not an element of {algebra}")
    if algebra == "mpr" and not is_permutation(payload):
        raise Precondition(f"{format_word(payload)} is not a permutation word")
    if kind == "subst":
        try:
            return canonicalize(*payload)
        except SupportMismatch as exc:
            raise Precondition(str(exc)) from None
    return payload


def parse_element(algebra: str, text: str, tensors: bool = False) -> LinComb:
    """Parse a linear combination in ``algebra``; with ``tensors`` the terms
    must be two-fold tensors instead."""
    acc = LinComb()
    arity = 2 if tensors else 1
    for coeff, factors in parse_raw(text):
        if len(factors) != arity:
            raise Precondition(f"expected {arity}-fold terms, got {len(factors)}")
        parts = [_basis_element(algebra, kind, payload) for kind, payload in factors]
        b = Tensor(*parts) if tensors else parts[0]
        acc = acc + LinComb.basis(b, coeff)
    return acc


def _emit(args, x: LinComb, show) -> None:
    print(lincomb_to_json(x, show) if args.json else format_lincomb(x, show))


def cmd_mul(args):
    h = ALGEBRAS[args.algebra]
    _emit(args, h.mul(parse_element(args.algebra, args.lhs), parse_element(args.algebra, args.rhs)), h.show)


def cmd_comul(args):
    h = ALGEBRAS[args.algebra]
    _emit(args, h.comul(parse_element(args.algebra, args.x)), h.show)


def cmd_antipode(args):
    h = ALGEBRAS[args.algebra]
    _emit(args, lift(lambda b: antipode(h, b), parse_element(args.algebra, args.x)), h.show)


def cmd_pair(args):
    pairing = {"mpr": MPR_PAIRING, "dwha": DWHA_PAIRING}[args.algebra]
    print(pairing.pair_lin(parse_element(args.algebra, args.lhs), parse_element(args.algebra, args.rhs)))


def cmd_compose(args):
    op = {"mpr": mpr_compose, "dwha": subst_compose}[args.algebra]
    h = ALGEBRAS[args.algebra]
    x = lift2(op, parse_element(args.algebra, args.lhs), parse_element(args.algebra, args.rhs))
    _emit(args, x, h.fmt)


def cmd_embed(args):
    w = parse_word(args.perm)
    try:
        print(format_substitution(embed(w)))
    except RepeatedLetters as exc:
        raise Precondition(str(exc)) from None


def cmd_encode(args):
    print(format_substitution(encode(parse_word(args.word))))


def cmd_decode(args):
    x = parse_element("dwha", args.subst)
    if len(x) != 1:
        raise Precondition("decode takes a single substitution")
    (p,) = x
    try:
        print(format_word(decode(p)))
    except NotWHAForm as exc:
        raise Precondition(str(exc)) from None


def cmd_act(args):
    if args.kind == "subst":
        x = parse_element("dwha", args.element)
        if len(x) != 1:
            raise Precondition("act takes a single substitution")
        k = endo.SubstAction(next(iter(x)))
    else:
        w = parse_word(args.element)
        if args.kind == "perm":
            if not is_permutation(w):
                raise Precondition(f"{format_word(w)} is not a permutation word")
            k = endo.PermAction(w)
        else:
            k = endo.NaiveWordAction(w)
    _emit(args, endo.act(k, parse_word(args.word)), format_word)


def _bounds(args, algebra: str) -> dict:
    out = {}
    for key, default in DEFAULT_BOUNDS[algebra].items():
        value = getattr(args, key, None)
        out[key] = default if value is None else value
    return out


def _print_reports(reports) -> bool:
    ok = True
    for r in reports:
        for line in r.lines():
            print(line)
        ok &= r.passed
    return ok


def verify_algebra(name: str, bounds: dict, assoc: bool = False, selfdual_max_len: int = 3) -> bool:
    h = ALGEBRAS[name]
    reports = run_suite(h, bounds, assoc=assoc)
    if name == "mpr":
        reports.append(check_selfdual(h, MPR_PAIRING, {"max_len": min(bounds["max_len"], selfdual_max_len)}))
    elif name == "dwha":
        reports.append(check_selfdual(h, DWHA_PAIRING, bounds))
    return _print_reports(reports)


def verify_end(group: str) -> bool:
    H = endo.load_group(group)
    res = endo.end_hopf_check(H, name=f"End({group})")
    for line in res.lines():
        print(line)
    return res.passed


def verify_naive() -> bool:
    lhs, rhs = endo.naive_witness_sides()
    a, b = endo.NAIVE_FAILURE_WITNESS
    reproduced = lhs != rhs
    status = "REPRODUCED" if reproduced else "NOT-REPRODUCED"
    print(
        f"NAIVE-FAILURE {format_word(a)} {format_word(b)} {status} "
        f"lhs={endo.NAIVE.format(lhs)} rhs={endo.NAIVE.format(rhs)}"
    )
    return reproduced


def cmd_verify(args):
    for key in ("max_weight", "max_len", "max_height", "max_support", "max_top", "max_bottom"):
        value = getattr(args, key)
        if value is not None and value < 0:
            raise SystemExit(_usage_error(f"--{key.replace('_', '-')} must be nonnegative"))
    ok = True
    ran = False
    if args.all:
        for name in ALGEBRAS:
            ok &= verify_algebra(name, DEFAULT_BOUNDS[name], args.assoc)
        for g in ("c2", "c3", "s3"):
            ok &= verify_end(g)
        ok &= verify_naive()
        ran = True
    if args.algebra:
        ok &= verify_algebra(args.algebra, _bounds(args, args.algebra), args.assoc, args.selfdual_max_len)
        ran = True
    if args.end_h:
        ok &= verify_end(args.end_h)
        ran = True
    if args.naive_failure:
        ok &= verify_naive()
        ran = True
    if not ran:
        raise SystemExit(_usage_error("verify needs --algebra, --end-h, --naive-failure or --all"))
    return 0 if ok else 1


def _usage_error(msg: str) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return 2


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="wordhopf", description="Exact computations in word Hopf algebras.")
    sub = p.add_subparsers(dest="command", required=True)

    def algebra_opt(sp, choices=tuple(ALGEBRAS)):
        sp.add_argument("--algebra", "-a", choices=choices, required=True)

    def json_opt(sp):
        sp.add_argument("--json", action="store_true", help="emit JSON instead of text")

    sp = sub.add_parser("mul", help="product of two elements")
    algebra_opt(sp)
    sp.add_argument("lhs")
    sp.add_argument("rhs")
    json_opt(sp)
    sp.set_defaults(func=cmd_mul)

    sp = sub.add_parser("comul", help="coproduct of an element")
    algebra_opt(sp)
    sp.add_argument("x")
    json_opt(sp)
    sp.set_defaults(func=cmd_comul)

    sp = sub.add_parser("antipode", help="antipode of an element")
    algebra_opt(sp)
    sp.add_argument("x")
    json_opt(sp)
    sp.set_defaults(func=cmd_antipode)

    sp = sub.add_parser("pair", help="inner product (mpr or dwha)")
    algebra_opt(sp, ("mpr", "dwha"))
    sp.add_argument("lhs")
    sp.add_argument("rhs")
    sp.set_defaults(func=cmd_pair)

    sp = sub.add_parser("compose", help="second multiplication: composition (mpr or dwha)")
    algebra_opt(sp, ("mpr", "dwha"))
    sp.add_argument("lhs")
    sp.add_argument("rhs")
    json_opt(sp)
    sp.set_defaults(func=cmd_compose)

    sp = sub.add_parser("embed", help="permutation word to substitution")
    sp.add_argument("perm")
    sp.set_defaults(func=cmd_embed)

    sp = sub.add_parser("encode", help="integer word to WHA substitution")
    sp.add_argument("word")
    sp.set_defaults(func=cmd_encode)

    sp = sub.add_parser("decode", help="WHA substitution to integer word")
    sp.add_argument("subst")
    sp.set_defaults(func=cmd_decode)

    sp = sub.add_parser("act", help="apply an endomorphism of Shuffle to a word")
    sp.add_argument("--kind", choices=("perm", "subst", "naive"), required=True)
    sp.add_argument("element")
    sp.add_argument("word")
    json_opt(sp)
    sp.set_defaults(func=cmd_act)

    sp = sub.add_parser("verify", help="run exhaustive axiom checks")
    sp.add_argument("--algebra", "-a", choices=tuple(ALGEBRAS))
    sp.add_argument("--end-h", metavar="GROUP", help="c2, c3, c4, s3, trivial or a table file")
    sp.add_argument("--naive-failure", action="store_true", help="reproduce the naive-action Hopf failure")
    sp.add_argument("--all", action="store_true", help="everything at default bounds")
    sp.add_argument("--assoc", action="store_true", help="also check associativity (slow)")
    for flag in ("max-weight", "max-len", "max-height", "max-support", "max-top", "max-bottom"):
        sp.add_argument(f"--{flag}", type=int)
    sp.add_argument("--selfdual-max-len", type=int, default=3, help="MPR self-duality bound")
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    start = time.perf_counter()
    try:
        code = args.func(args)
    except PRECONDITION_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.command == "verify":
        print(f"elapsed {time.perf_counter() - start:.1f}s", file=sys.stderr)
    return code or 0


def main_exit() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_exit()
