"""Command-line front end.

Exit codes: 0 success, 1 an asserted check failed, 2 bad input.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .action import chain_set, parse_action
from .alphabet import clique_number, components, parse_alphabet, restrict, serialize_alphabet
from .battery import BATTERY, battery_alphabet
from .complex import dump_matrices, kset_complex, verify_dd_zero
from .errors import ThomError
from .intlinalg import FinAbGroup, homology
from .simplicial import (
    BUILTIN_NAMES,
    barycentric_subdivision,
    builtin,
    clique_complex,
    parse_complex,
    reduced_homology,
    serialize_complex,
    to_alphabet,
)
from . import verify as V


class InputError(ThomError):
    pass


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def load_alphabet(spec: str):
    """A path to an alphabet file, or the name of a battery alphabet."""
    p = Path(spec)
    if p.is_file():
        return parse_alphabet(_read(spec)), p.stem
    if spec in BATTERY or spec == "EMPTY":
        return battery_alphabet(spec), spec
    raise InputError(f"{spec!r} is neither a readable file nor a battery alphabet ({', '.join(BATTERY)})")


def _load_action(args, alpha):
    if args.action is not None:
        return parse_action(_read(args.action), alpha)
    return chain_set(alpha, args.chain)


def _emit(lines, out=None):
    text = "\n".join(lines) + "\n"
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _group_lines(groups: list[FinAbGroup], fmt: str, prefix: str) -> list[str]:
    if fmt == "machine":
        return [f"deg={k} group={g.render('+')}" for k, g in enumerate(groups)]
    return [f"{prefix}_{k} = {g}" for k, g in enumerate(groups)]


def cmd_homology(args) -> int:
    alpha, _ = load_alphabet(args.alphabet)
    action = _load_action(args, alpha)
    top = clique_number(alpha)
    kmax = top if args.max_dim is None else args.max_dim
    cc = kset_complex(action, max(kmax, top), variant=args.variant)
    groups = homology(cc)[: kmax + 1]
    groups += [FinAbGroup()] * (kmax + 1 - len(groups))
    _emit(_group_lines(groups, args.format, "H"))
    return 0


def cmd_clique_homology(args) -> int:
    alpha, _ = load_alphabet(args.alphabet)
    sc = clique_complex(alpha)
    kmax = max(sc.dimension, 0) if args.max_dim is None else args.max_dim
    _emit(_group_lines(reduced_homology(sc, kmax), args.format, "H~"))
    return 0


def cmd_dd_check(args) -> int:
    alpha, _ = load_alphabet(args.alphabet)
    action = _load_action(args, alpha)
    cc = kset_complex(action, args.max_dim, variant=args.variant)
    if args.dump:
        sys.stdout.write(dump_matrices(cc))
    rep = verify_dd_zero(cc)
    print(rep)
    return 0 if rep.passed else 1


def cmd_verify(args) -> int:
    thm = args.theorem
    reports = []
    if thm == "thm3":
        if args.component:
            parts = [parse_alphabet(_read(p)) for p in args.component]
            label = "+".join(Path(p).stem for p in args.component)
        else:
            if args.alphabet is None:
                raise InputError("thm3 needs --alphabet or --component")
            alpha, label = load_alphabet(args.alphabet)
            parts = [restrict(alpha, c) for c in components(alpha)]
        kmax = args.max_dim
        if kmax is None:
            kmax = max([clique_number(p) for p in parts] + [0]) + 1
        ns = [args.n] if args.n is not None else [0]
        reports = [V.check_thm3(parts, n, kmax, name=label) for n in ns]
    else:
        kmax = 3 if args.max_dim is None else args.max_dim
        ms = [args.m] if args.m is not None else [-1, 0, 1, 2]
        if args.battery:
            reports = V.run_battery(thm, ms=ms, kmax=kmax, mmax=args.mmax)
        else:
            if args.alphabet is None:
                raise InputError("give --alphabet or --battery")
            alpha, label = load_alphabet(args.alphabet)
            if thm == "thm1":
                reports = [V.check_thm1(alpha, m, kmax, name=label) for m in ms]
            elif thm == "corollary":
                reports = [V.check_corollary(alpha, m, kmax, name=label) for m in ms]
            elif thm == "thm2":
                reports = [V.check_thm2(alpha, args.mmax, name=label)]
            else:
                reports = [V.check_iterated_torsion(alpha, max(ms), kmax, name=label)]
    if args.format == "machine":
        _emit([line for r in reports for line in r.machine_lines()])
    else:
        _emit(["\n\n".join(r.text() for r in reports)])
    failed = any(r.asserted and not r.passed for r in reports)
    return 1 if failed else 0


def cmd_subdivide(args) -> int:
    sc = parse_complex(_read(args.complex))
    sd = barycentric_subdivision(sc)
    text = serialize_alphabet(to_alphabet(sd)) if args.as_alphabet else serialize_complex(sd)
    _emit([text.rstrip("\n")], args.out)
    return 0


def cmd_example(args) -> int:
    _emit([serialize_complex(builtin(args.name)).rstrip("\n")], args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="thom", description="Homology of pointed sets over free partially commutative monoids.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_action_args(p):
        p.add_argument("--alphabet", required=True, help="alphabet file or battery name")
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("--action", help="action file")
        src.add_argument("--chain", type=int, help="use the chain set X_n (n >= -1)")
        p.add_argument("--variant", choices=["unreduced", "reduced"], default="unreduced")
        p.add_argument("--max-dim", type=int, default=None)

    p = sub.add_parser("homology", help="homology groups H_0..H_k of a pointed M(E,I)-set")
    add_action_args(p)
    p.add_argument("--format", choices=["text", "machine"], default="text")
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser("clique-homology", help="reduced homology of the clique complex")
    p.add_argument("--alphabet", required=True)
    p.add_argument("--max-dim", type=int, default=None)
    p.add_argument("--format", choices=["text", "machine"], default="text")
    p.set_defaults(func=cmd_clique_homology)

    p = sub.add_parser("dd-check", help="check that consecutive boundaries compose to zero")
    add_action_args(p)
    p.add_argument("--dump", action="store_true", help="print the boundary matrices")
    p.set_defaults(func=cmd_dd_check)

    p = sub.add_parser("verify", help="check a decomposition statement on concrete instances")
    p.add_argument("theorem", choices=["thm1", "thm2", "thm3", "corollary", "iter"])
    p.add_argument("--alphabet", help="alphabet file or battery name")
    p.add_argument("--battery", action="store_true", help=f"run on {', '.join(BATTERY)}")
    p.add_argument("--component", action="append", help="component alphabet file (thm3)")
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--mmax", type=int, default=3)
    p.add_argument("--n", type=int, default=None, help="chain length for thm3")
    p.add_argument("--max-dim", type=int, default=None)
    p.add_argument("--format", choices=["text", "machine"], default="text")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("subdivide", help="barycentric subdivision of a complex file")
    p.add_argument("complex")
    p.add_argument("--out")
    p.add_argument("--as-alphabet", action="store_true",
                   help="write the result as an alphabet (its 1-skeleton)")
    p.set_defaults(func=cmd_subdivide)

    p = sub.add_parser("example", help="write a builtin complex")
    p.add_argument("name", choices=BUILTIN_NAMES)
    p.add_argument("--out")
    p.set_defaults(func=cmd_example)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ThomError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
