"""Command-line entry point.

Exit codes: 0 positive verdict / success, 1 negative verdict (a certificate
is printed), 2 parse or usage error, 3 size cap or budget exceeded.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import __version__
from .amplifier import DEFAULT_SIZE_CAP, amplify, build_hard_sequence
from .chordality import class_cl_violation, t_chordality_witness
from .dicoloring import dichromatic_number
from .digraph import underlying_clique_number
from .errors import (
    BudgetExceededError,
    ParseError,
    SizeCapExceededError,
    TChordalError,
)
from .formats import format_dgf, parse_dgf, parse_sets_file
from .reduction import build_reduction, parse_dimacs_cnf, verify_reduction

BUDGET_ENV = "TCHORDAL_BUDGET"
DEFAULT_BUDGET = 10**7

EXIT_OK, EXIT_NO, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: {message}")


def _budget(args) -> int:
    if args.budget is not None:
        return args.budget
    raw = os.environ.get(BUDGET_ENV)
    if raw is None:
        return DEFAULT_BUDGET
    try:
        return int(raw)
    except ValueError:
        raise _UsageError(f"{BUDGET_ENV} must be an integer, got {raw!r}") from None


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise _UsageError(f"cannot read {path}: {exc.strerror}") from None


def _write(path: str, text: str) -> None:
    try:
        Path(path).write_text(text)
    except OSError as exc:
        raise _UsageError(f"cannot write {path}: {exc.strerror}") from None


def _integer(raw):
    try:
        return int(raw)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {raw!r}") from None


def _cmd_chordal(args, out):
    d = parse_dgf(_read(args.file))
    witness = t_chordality_witness(d, args.t)
    if witness is None:
        print("t-chordal", file=out)
        return EXIT_OK
    print(witness, file=out)
    return EXIT_NO


def _cmd_dichi(args, out):
    d = parse_dgf(_read(args.file))
    chi, coloring = dichromatic_number(d)
    print(chi, file=out)
    print(coloring, file=out)
    return EXIT_OK


def _cmd_omega(args, out):
    print(underlying_clique_number(parse_dgf(_read(args.file))), file=out)
    return EXIT_OK


def _cmd_class_check(args, out):
    d = parse_dgf(_read(args.file))
    violation = class_cl_violation(d, args.l)
    if violation is None:
        print(f"in C_{args.l}", file=out)
        return EXIT_OK
    print(violation, file=out)
    return EXIT_NO


def _emit_digraph(d, args, out, comments=()):
    text = format_dgf(d, comments)
    if args.output:
        _write(args.output, text)
        print(f"wrote {d.vertex_count} vertices, {len(d.arcs)} arcs to {args.output}", file=out)
    else:
        out.write(text)


def _cmd_construct(args, out):
    d = build_hard_sequence(args.t, args.n, size_cap=args.cap)
    _emit_digraph(d, args, out, [f"hard sequence member n={args.n} t={args.t}"])
    return EXIT_OK


def _cmd_amplify(args, out):
    d = parse_dgf(_read(args.digraph))
    family = parse_sets_file(_read(args.sets), d)
    result = amplify(d, family, args.t, size_cap=args.cap)
    if args.map:
        _write(args.map, result.format_map())
    _emit_digraph(result.result, args, out, [f"amplified t={args.t}"])
    return EXIT_OK


def _cmd_reduce(args, out):
    phi = parse_dimacs_cnf(_read(args.cnf))
    art = build_reduction(phi, args.t)
    if args.map:
        _write(args.map, art.map.format())
    _emit_digraph(art.digraph, args, out, [f"3-SAT reduction t={args.t}"])
    return EXIT_OK


def _cmd_verify_reduction(args, out):
    phi = parse_dimacs_cnf(_read(args.cnf))
    check = verify_reduction(phi, args.t, budget=_budget(args))
    print(check, file=out)
    if check.certificate is not None:
        print(check.certificate, file=out)
    elif check.witness is not None:
        print(check.witness, file=out)
    return EXIT_OK if check.equivalent else EXIT_NO


def _cmd_bound_check(args, out):
    d = parse_dgf(_read(args.file))
    violation = class_cl_violation(d, args.l)
    if violation is not None:
        print(f"not in C_{args.l}: {violation}", file=out)
        return EXIT_NO
    chi, _ = dichromatic_number(d)
    omega = underlying_clique_number(d)
    bound = (args.l + 1) ** omega
    holds = chi <= bound
    verdict = "holds" if holds else "VIOLATED"
    print(f"chi_A={chi} omega={omega} bound={bound} {verdict}", file=out)
    return EXIT_OK if holds else EXIT_NO


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="tchordal", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    p = sub.add_parser("chordal", help="decide t-chordality, print a witness cycle if not")
    p.add_argument("--t", type=_integer, required=True)
    p.add_argument("file")
    p.set_defaults(func=_cmd_chordal)

    p = sub.add_parser("dichi", help="exact dichromatic number with a witness dicoloring")
    p.add_argument("file")
    p.set_defaults(func=_cmd_dichi)

    p = sub.add_parser("omega", help="clique number of the underlying graph")
    p.add_argument("file")
    p.set_defaults(func=_cmd_omega)

    p = sub.add_parser("class-check", help="membership in C_l (no short induced cycle, no induced l-path)")
    p.add_argument("--l", type=_integer, required=True)
    p.add_argument("file")
    p.set_defaults(func=_cmd_class_check)

    p = sub.add_parser("construct", help="member D_n of the hard sequence")
    p.add_argument("--t", type=_integer, required=True)
    p.add_argument("--n", type=_integer, required=True)
    p.add_argument("--cap", type=_integer, default=DEFAULT_SIZE_CAP)
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("amplify", help="amplify a digraph against a family of independent sets")
    p.add_argument("--t", type=_integer, required=True)
    p.add_argument("-d", "--digraph", required=True)
    p.add_argument("-s", "--sets", required=True)
    p.add_argument("--cap", type=_integer, default=DEFAULT_SIZE_CAP)
    p.add_argument("-o", "--output")
    p.add_argument("--map")
    p.set_defaults(func=_cmd_amplify)

    p = sub.add_parser("reduce", help="build the digraph D(phi, t) from a DIMACS CNF")
    p.add_argument("--t", type=_integer, required=True)
    p.add_argument("cnf")
    p.add_argument("-o", "--output")
    p.add_argument("--map")
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("verify-reduction", help="compare SAT brute force with the chordality search")
    p.add_argument("--t", type=_integer, required=True)
    p.add_argument("--budget", type=_integer, default=None, help=f"overrides ${BUDGET_ENV}")
    p.add_argument("cnf")
    p.set_defaults(func=_cmd_verify_reduction)

    p = sub.add_parser("bound-check", help="check chi_A <= (l+1)^omega for a member of C_l")
    p.add_argument("--l", type=_integer, required=True)
    p.add_argument("file")
    p.set_defaults(func=_cmd_bound_check)
    return parser


def main(argv=None, stdout=None, stderr=None) -> int:
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except _UsageError as exc:
        print(exc, file=err)
        return EXIT_USAGE
    except (SizeCapExceededError, BudgetExceededError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_CAP
    except ParseError as exc:
        print(f"parse error: {exc}", file=err)
        return EXIT_USAGE
    except TChordalError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE
    except SystemExit as exc:  # --help / --version
        return int(exc.code or 0)


if __name__ == "__main__":
    sys.exit(main())
