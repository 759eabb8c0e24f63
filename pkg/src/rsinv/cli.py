"""Command line front end.

Exit codes: 0 ok, 2 bad input (arguments, JSON, specs), 3 group not finite
within the cap, 4 a graded component exceeds ``--max-dim``.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .exact import as_matrix, format_rational, json_number, parse_rational
from .finite_generation import (
    algebra_generator_report,
    check_finite_group,
    check_metabelian,
    check_weitzenbock,
    module_generator_report,
    remark_generation_check,
)
from .invariants import (
    DEFAULT_CAP,
    DEFAULT_MAX_DIM,
    DimensionLimitError,
    GroupNotFiniteError,
    delta_constants,
    fixed_space,
    group_closure,
    molien_series,
    weitzenbock_from_blocks,
)
from .schur import GLMODULE_SERIES, weyl_dim

ALGEBRA_CHOICES = ("L", "metabelian", "poly")


class InputError(ValueError):
    pass


def load_group_spec(path: str):
    """Read ``{"d": int, "generators": [[["p/q", ...], ...], ...]}``."""
    try:
        with open(path) as fh:
            obj = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON in {path}: {exc}") from exc
    try:
        d = int(obj["d"])
        gens = [as_matrix([[parse_rational(x) for x in row] for row in g]) for g in obj["generators"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad group spec in {path}: {exc}") from exc
    if d < 1 or not gens or any(len(g) != d or len(g[0]) != d for g in gens):
        raise InputError(f"bad group spec in {path}: generators must be {d}x{d}")
    return d, gens


def load_blocks(args) -> list[int]:
    if args.blocks and args.derivation:
        raise InputError("give either --blocks or --derivation, not both")
    if args.blocks:
        try:
            blocks = [int(x) for x in args.blocks.split(",") if x.strip()]
        except ValueError as exc:
            raise InputError(f"bad --blocks: {args.blocks}") from exc
    elif args.derivation:
        try:
            with open(args.derivation) as fh:
                blocks = [int(b) for b in json.load(fh)["blocks"]]
        except OSError as exc:
            raise InputError(f"cannot read {args.derivation}: {exc}") from exc
        except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
            raise InputError(f"bad derivation spec in {args.derivation}: {exc}") from exc
    else:
        raise InputError("one of --blocks or --derivation is required")
    if not blocks or any(b < 1 for b in blocks):
        raise InputError("block sizes must be positive")
    return blocks


def _group(args):
    if not args.group:
        raise InputError("--group is required")
    _, gens = load_group_spec(args.group)
    return group_closure(gens, cap=args.cap)


def _start_degree(algebra: str) -> int:
    return 0 if algebra == "poly" else 1


def _need_d(args):
    if args.d is None:
        raise InputError("--d is required")
    min_d = 1 if args.algebra == "poly" else 2
    if args.d < min_d:
        raise InputError(f"--d must be at least {min_d} for {args.algebra}")
    return args.d


# --------------------------------------------------------------------------
# commands; each returns (json object, text)

def cmd_hilbert(args):
    d = _need_d(args)
    s = GLMODULE_SERIES[args.algebra](d, args.degree)
    lo = _start_degree(args.algebra)
    coeffs = s.dims()[lo:]
    return ({"algebra": args.algebra, "d": d, "start_degree": lo, "coefficients": coeffs},
            ", ".join(map(str, coeffs)))


def cmd_decompose(args):
    d = _need_d(args)
    s = GLMODULE_SERIES[args.algebra](d, args.degree)
    obj = dict(s.to_json(), algebra=args.algebra)
    for t in obj["terms"]:
        t["dim"] = weyl_dim(tuple(t["partition"]), d)
    return obj, s.to_text()


def cmd_molien(args):
    G = _group(args)
    if args.algebra != "poly" and G.d < 2:
        raise InputError(f"{args.algebra} needs d >= 2")
    s = GLMODULE_SERIES[args.algebra](G.d, args.degree)
    series = molien_series(s, G)
    lo = _start_degree(args.algebra)
    coeffs = series.coeffs[lo:]
    return ({"algebra": args.algebra, "d": G.d, "order": G.order, "start_degree": lo,
             "coefficients": [json_number(c) for c in coeffs]},
            ", ".join(format_rational(c) for c in coeffs))


def cmd_invariants(args):
    G = _group(args)
    degrees = []
    lines = []
    for n in range(_start_degree(args.algebra), args.degree + 1):
        inv = fixed_space(G, args.algebra, n, args.max_dim)
        basis = [str(e) for e in inv.basis]
        degrees.append({"n": n, "dim": inv.dim, "basis": basis})
        lines.append(f"degree {n}: dim {inv.dim}")
        lines.extend(f"  {b}" for b in basis)
    return {"algebra": args.algebra, "d": G.d, "order": G.order, "degrees": degrees}, "\n".join(lines)


def _report_text(rep):
    lines = [f"{rep.kind} generators, d={rep.d}, linear invariants: {rep.linear_invariant_dim}",
             "n  dim_invariants  dim_span  new_generators"]
    for r in rep.degrees:
        lines.append(f"{r.n}  {r.dim_invariants}  {r.dim_module_span}  {r.new_generators}")
    return lines


def cmd_modgen(args):
    G = _group(args)
    if G.d < 2:
        raise InputError("modgen needs d >= 2")
    if args.degree < 2:
        raise InputError("--degree must be at least 2 for modgen")
    rep = module_generator_report(G, args.degree, args.max_dim)
    verdict = check_finite_group(G)
    obj = dict(rep.to_json(), verdict=verdict.verdict.value, rule=verdict.rule)
    lines = _report_text(rep)
    if args.algebra_report:
        alg = algebra_generator_report(G, args.degree, args.max_dim)
        obj["algebra_report"] = alg.to_json()
        lines += [""] + _report_text(alg)
    lines.append(f"verdict: {verdict.verdict.value} ({verdict.rule})")
    return obj, "\n".join(lines)


def cmd_check(args):
    G = _group(args)
    fin = check_finite_group(G)
    obj = dict(fin.to_json(), order=G.order, d=G.d)
    lines = [f"verdict: {fin.verdict.value}", f"rule: {fin.rule}",
             f"witness: {json.dumps(fin.witness, sort_keys=True)}"]
    if args.metabelian:
        if G.d < 2:
            raise InputError("metabelian check needs d >= 2")
        met = check_metabelian(G, args.degree, args.max_dim)
        obj["metabelian"] = met.to_json()
        lines += [f"metabelian verdict: {met.verdict.value} ({met.rule}, {met.witness_kind})",
                  f"metabelian witness: {json.dumps(met.witness, sort_keys=True)}"]
    return obj, "\n".join(lines)


def cmd_weitzenbock(args):
    blocks = load_blocks(args)
    delta = weitzenbock_from_blocks(blocks)
    d = delta.d
    algebra = args.algebra
    if algebra != "poly" and d < 2:
        raise InputError(f"{algebra} needs d >= 2")
    constants = []
    lines = [f"blocks {blocks}, d={d}", f"constants of {algebra}:"]
    for n in range(_start_degree(algebra), args.degree + 1):
        c = delta_constants(delta, algebra, n, args.max_dim)
        constants.append({"n": n, "dim": c.dim, "basis": [str(e) for e in c.basis]})
        lines.append(f"  degree {n}: dim {c.dim}")
    verdict = check_weitzenbock(delta)
    obj = {"blocks": blocks, "d": d, "algebra": algebra, "constants": constants,
           "verdict": verdict.to_json()}
    lines.append(f"verdict: {verdict.verdict.value} ({verdict.rule})")
    if d >= 2 and tuple(sorted(blocks, reverse=True)) == (2,) + (1,) * (d - 2):
        table = remark_generation_check(d, args.degree, args.max_dim)
        obj["remark_generation_check"] = table
        lines.append("generated by x1x2-x2x1, x2..xd:")
        lines += [f"  degree {r['n']}: {r['equal']}" for r in table]
    return obj, "\n".join(lines)


def cmd_closure(args):
    G = _group(args)
    return ({"d": G.d, "order": G.order, "element_count": len(G.elements),
             "generator_count": len(G.generators)},
            f"order {G.order}\nelements {len(G.elements)}")


COMMANDS = {
    "hilbert": cmd_hilbert,
    "decompose": cmd_decompose,
    "molien": cmd_molien,
    "invariants": cmd_invariants,
    "modgen": cmd_modgen,
    "check": cmd_check,
    "weitzenbock": cmd_weitzenbock,
    "closure": cmd_closure,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(2)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--algebra", choices=ALGEBRA_CHOICES, default="L")
    common.add_argument("--d", type=int)
    common.add_argument("--degree", type=int, default=8, help="truncation degree N (default 8)")
    common.add_argument("--group", help="group spec JSON file")
    common.add_argument("--blocks", help="Jordan block sizes, e.g. 3,1")
    common.add_argument("--derivation", help='derivation spec JSON file {"blocks": [...]}')
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--cap", type=int, default=DEFAULT_CAP, help="group closure cap")
    common.add_argument("--max-dim", type=int, default=DEFAULT_MAX_DIM,
                        help="largest graded component handled")
    common.add_argument("--algebra-report", action="store_true",
                        help="modgen: also report algebra generators")
    common.add_argument("--metabelian", action="store_true",
                        help="check: add the metabelian evidence path")

    parser = _Parser(prog="rsinv", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in COMMANDS:
        sub.add_parser(name, parents=[common])
    return parser


def dump_json(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False)


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        if args.degree < 1:
            raise InputError("--degree must be at least 1")
        obj, text = COMMANDS[args.command](args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except GroupNotFiniteError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except DimensionLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(dump_json(obj) if args.format == "json" else text, file=out)
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
