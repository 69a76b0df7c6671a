"""Command-line front end.

    liecat [--json] [--kl-cache PATH] [--stabilize-extra N] COMMAND ...

Exit status is 0 on success, 1 on a domain error and 2 on a usage error.
With ``--json`` every run prints one JSON document
``{"status", "command", "payload", "diagnostics"}``; rationals are written
as "p/q" strings and polynomials as coefficient lists, constant term first.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .category_o import (
    classify,
    composition_series_window,
    multiplicity,
    same_block,
    strong_linkage_chain,
    verma_has_finite_length,
    verma_hom_dim,
    verma_is_simple,
)
from .errors import LiecatError, ParseError
from .kl import ENV_VAR, KLCache, kl_poly
from .rootdata import (
    RootLatticeElement,
    format_rational,
    interval,
    kostant_partition,
    leq,
    parse_kind,
    parse_weight,
    _parse_rational,
)
from .oracle import ORACLE_BOUND
from .selfcheck import bound_from_rank, run_all
from .truncation import injective_character_dim, truncated_reciprocity_table
from .weyl import format_word, from_word, parse_word, to_reduced_word

__all__ = ["main", "run", "build_parser", "CommandResult"]


def _jsonable(value):
    if isinstance(value, Fraction):
        return format_rational(value)
    raise TypeError(f"not serializable: {value!r}")


class CommandResult:
    def __init__(self, command: str, payload=None, text: str = "", status: str = "ok",
                 diagnostics: list | None = None):
        self.command = command
        self.payload = payload
        self.text = text
        self.status = status
        self.diagnostics = diagnostics or []

    def as_json(self) -> str:
        doc = {
            "status": self.status,
            "command": self.command,
            "payload": self.payload,
            "diagnostics": self.diagnostics,
        }
        return json.dumps(doc, sort_keys=True, default=_jsonable)


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(f"{self.prog}: error: {message}")


def _weight(text: str):
    try:
        return parse_weight(text)
    except ParseError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _kind(text: str):
    try:
        return parse_kind(text)
    except ParseError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _word(text: str):
    try:
        return parse_word(text)
    except LiecatError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _beta(text: str):
    try:
        return tuple(_parse_rational(part) for part in text.split(","))
    except ParseError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="print a single JSON document")
    common.add_argument("--kl-cache", metavar="PATH", default=argparse.SUPPRESS,
                        help=f"KL cache file (default: ${ENV_VAR})")
    common.add_argument("--stabilize-extra", metavar="N", type=int, default=argparse.SUPPRESS,
                        help="extra ranks used to confirm multiplicities (default 1)")

    parser = _Parser(prog="liecat", parents=[common],
                     description="Verma modules over root-reductive Lie algebras.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, help_text):
        return sub.add_parser(name, parents=[common], help=help_text)

    p = add("classify", "flags of a weight")
    p.add_argument("weight", type=_weight)
    p = add("order", "compare two weights in the dominance order")
    p.add_argument("lo", type=_weight)
    p.add_argument("hi", type=_weight)
    p = add("interval", "all weights between two weights")
    p.add_argument("lo", type=_weight)
    p.add_argument("hi", type=_weight)
    p = add("linkage", "strong-linkage witness from hi down to lo")
    p.add_argument("lo", type=_weight)
    p.add_argument("hi", type=_weight)
    p = add("homdim", "dim Hom(M(lo), M(hi))")
    p.add_argument("lo", type=_weight)
    p.add_argument("hi", type=_weight)
    p = add("simple", "whether M(weight) is simple")
    p.add_argument("weight", type=_weight)
    p = add("finlen", "whether M(weight) has finite length")
    p.add_argument("weight", type=_weight)
    p = add("block", "whether two weights lie in the same block")
    p.add_argument("first", type=_weight)
    p.add_argument("second", type=_weight)
    p = add("mult", "[M(lambda) : L(mu)]")
    p.add_argument("weight", type=_weight)
    p.add_argument("--mu", type=_weight, required=True)
    p = add("comp", "composition multiplicities of M(lambda) in a window")
    p.add_argument("weight", type=_weight)
    p.add_argument("--lo", type=_weight, required=True)
    p.add_argument("--hi", type=_weight, required=True)
    p = add("kl", "Kazhdan-Lusztig polynomial P_{x,y}")
    p.add_argument("kind", type=_kind)
    p.add_argument("x", type=_word)
    p.add_argument("y", type=_word)
    p = add("reciprocity", "truncated BGG reciprocity table")
    p.add_argument("top", type=_weight)
    p.add_argument("--mu", type=_weight, required=True)
    p = add("injchar", "weight-space dimension of a truncated injective")
    p.add_argument("top", type=_weight)
    p.add_argument("--mu", type=_weight, required=True)
    p.add_argument("--zeta", type=_weight, required=True)
    p = add("kostant", "Kostant partition count of a root-lattice vector")
    p.add_argument("kind", type=_kind)
    p.add_argument("beta", type=_beta, help="comma-separated epsilon coordinates")
    p = add("selfcheck", "compare the main code paths with the oracle")
    p.add_argument("--bound", type=int, default=None,
                   help="rank N for A and N-1 for B, C, D (default 4)")
    return parser


def _bool(x: bool) -> str:
    return "true" if x else "false"


def _cache(args) -> KLCache:
    path = getattr(args, "kl_cache", None)
    return KLCache(path) if path else KLCache.from_env()


def _dispatch(args) -> CommandResult:
    cmd = args.command
    extra = getattr(args, "stabilize_extra", 1)

    if cmd == "classify":
        flags = classify(args.weight).as_dict()
        text = "\n".join(f"{k}={_bool(v)}" for k, v in flags.items())
        return CommandResult(cmd, {"weight": str(args.weight), "flags": flags}, text)

    if cmd == "order":
        below, above = leq(args.lo, args.hi), leq(args.hi, args.lo)
        payload = {"lo": str(args.lo), "hi": str(args.hi), "leq": below, "geq": above}
        return CommandResult(cmd, payload, f"leq={_bool(below)}\ngeq={_bool(above)}")

    if cmd == "interval":
        members = [str(w) for w in interval(args.lo, args.hi)]
        return CommandResult(cmd, {"members": members, "size": len(members)}, "\n".join(members))

    if cmd == "linkage":
        chain = strong_linkage_chain(args.lo, args.hi)
        if chain is None:
            return CommandResult(cmd, None, "none")
        roots = [str(a) for a in chain.roots]
        payload = {"start": str(chain.start), "end": str(chain.end), "roots": roots}
        return CommandResult(cmd, payload, " ".join(roots) if roots else "(empty chain)")

    if cmd == "homdim":
        d = verma_hom_dim(args.lo, args.hi)
        return CommandResult(cmd, d, str(d))

    if cmd in ("simple", "finlen"):
        value = verma_is_simple(args.weight) if cmd == "simple" else verma_has_finite_length(args.weight)
        return CommandResult(cmd, value, _bool(value))

    if cmd == "block":
        value = same_block(args.first, args.second)
        return CommandResult(cmd, value, _bool(value))

    if cmd == "mult":
        m = multiplicity(args.weight, args.mu, _cache(args), extra)
        return CommandResult(cmd, m, str(m))

    if cmd == "comp":
        table = composition_series_window(args.weight, args.lo, args.hi, _cache(args), extra)
        rows = [{"weight": str(mu), "multiplicity": m} for mu, m in table.rows()]
        text = "\n".join(f"{r['weight']} {r['multiplicity']}" for r in rows)
        return CommandResult(cmd, {"base": str(args.weight), "entries": rows}, text)

    if cmd == "kl":
        x, y = from_word(args.kind, args.x), from_word(args.kind, args.y)
        poly = kl_poly(args.kind, x, y, _cache(args))
        payload = {
            "kind": args.kind.value,
            "x": format_word(to_reduced_word(x)),
            "y": format_word(to_reduced_word(y)),
            "coefficients": poly.coefficient_list(),
        }
        return CommandResult(cmd, payload, str(poly))

    if cmd == "reciprocity":
        rows = truncated_reciprocity_table(args.top, args.mu, _cache(args), extra)
        payload = [
            {"nu": str(r.nu), "verma_mult_in_P": r.verma_mult_in_P, "comp_mult_in_M": r.comp_mult_in_M}
            for r in rows
        ]
        text = "\n".join(f"{r.nu} {r.verma_mult_in_P} {r.comp_mult_in_M}" for r in rows)
        return CommandResult(cmd, payload, text)

    if cmd == "injchar":
        d = injective_character_dim(args.top, args.mu, args.zeta, _cache(args), extra)
        return CommandResult(cmd, d, str(d))

    if cmd == "kostant":
        beta = RootLatticeElement(args.kind, args.beta)
        k = kostant_partition(args.kind, beta)
        return CommandResult(cmd, k, str(k))

    if cmd == "selfcheck":
        bound = bound_from_rank(args.bound) if args.bound is not None else ORACLE_BOUND
        reports = run_all(bound)
        payload = {
            name: {
                "checked": rep.checked,
                "mismatches": [[repr(item), repr(main), repr(orc)] for item, main, orc in rep.mismatches],
            }
            for name, rep in sorted(reports.items())
        }
        lines = [f"{name}: checked={rep.checked} mismatches={len(rep.mismatches)}"
                 for name, rep in sorted(reports.items())]
        failed = any(rep.mismatches for rep in reports.values())
        return CommandResult(cmd, payload, "\n".join(lines), "error" if failed else "ok",
                             ["oracle mismatch"] if failed else [])

    raise AssertionError(f"unhandled command {cmd}")


def run(argv: list | None = None, stdout=None, stderr=None) -> int:
    """Run the CLI and return the process exit code."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    saved = sys.stderr
    sys.stderr = stderr
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(exc, file=stderr)
        return 2
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    finally:
        sys.stderr = saved
    as_json = getattr(args, "json", False)
    try:
        result = _dispatch(args)
    except LiecatError as exc:
        result = CommandResult(args.command, {"code": exc.code, "message": str(exc)},
                               status="error", diagnostics=[f"{exc.code}: {exc}"])
        if as_json:
            print(result.as_json(), file=stdout)
        else:
            print(f"error: {exc.code}: {exc}", file=stderr)
        return 1
    if as_json:
        print(result.as_json(), file=stdout)
    elif result.text:
        print(result.text, file=stdout)
    return 0 if result.status == "ok" else 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
