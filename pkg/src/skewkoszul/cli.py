"""Command-line front end.

Exit codes: 0 pass/ok, 1 fail (witness in the report), 2 inconclusive,
3 usage, parse or I/O error.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import catalog
from .errors import ParameterError, ParseError, PreconditionError, StructuralError
from .fileformat import parse_field, parse_file, render
from .koszul import FAIL, PASS, Bounds, koszul_report
from .presentation import Presentation, hilbert, quadratic_dual, validate
from .rewriting import pbw_check
from .skewpbw import ExtensionData, check_graded, classify, emit_presentation, validate_extension

EXIT_OK, EXIT_FAIL, EXIT_INCONCLUSIVE, EXIT_USAGE = 0, 1, 2, 3
VERBS = ("validate", "hilbert", "pbw", "dual", "extend", "classify", "koszul", "catalog")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="skewkoszul", description="Koszulity and PBW probes for graded algebras.")
    p.add_argument("verb", choices=VERBS)
    p.add_argument("inputs", nargs="*", help="input file, or list/show NAME for the catalog verb")
    p.add_argument("--catalog", metavar="NAME", help="use a built-in algebra instead of a file")
    p.add_argument("--param", action="append", default=[], metavar="NAME=VALUE", help="catalog or file parameter")
    p.add_argument("--field", help="Q, GF or GF<p>")
    p.add_argument("--order", help="comma-separated permutation of the generators")
    p.add_argument("--to", "--hilbert-to", dest="to", type=int, default=None, help="top degree for hilbert")
    p.add_argument("--smax", type=int, default=Bounds.s_max)
    p.add_argument("--pmax", type=int, default=Bounds.p_max)
    p.add_argument("--kmax", type=int, default=Bounds.k_max)
    p.add_argument("--cap", type=int, default=Bounds.cap)
    p.add_argument("--bound", type=int, default=4, help="degree bound for extension checks")
    p.add_argument("--oracle", choices=("auto", "rewriting", "linear"), default="auto")
    p.add_argument("--output", "-o", help="write the report here instead of stdout")
    return p


def _params(items) -> dict:
    out = {}
    for item in items:
        name, eq, value = item.partition("=")
        if not eq or not name.strip():
            raise UsageError(f"--param expects NAME=VALUE, got {item!r}")
        try:
            out[name.strip()] = Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"--param {name.strip()}: not a rational number") from None
    return out


def _resolve(name: str):
    return catalog.build(name)


def load(args):
    """The Presentation or ExtensionData named by the arguments."""
    params = _params(args.param)
    field = parse_field(args.field) if args.field else None
    if args.catalog:
        if args.inputs:
            raise UsageError("give either a file or --catalog, not both")
        return catalog.build(args.catalog, field, **params)
    if len(args.inputs) != 1:
        raise UsageError(f"{args.verb} needs exactly one input file or --catalog NAME")
    with open(args.inputs[0], encoding="utf-8") as fh:
        text = fh.read()
    obj = parse_file(text, resolve=_resolve, params=params)
    if field is not None:
        obj = obj.over(field)
    return obj


def _as_presentation(obj) -> Presentation:
    return emit_presentation(obj) if isinstance(obj, ExtensionData) else obj


def _order(P: Presentation, text):
    if not text:
        return None
    names = [n.strip() for n in text.split(",")]
    try:
        return P.ord.permuted(names)
    except StructuralError as exc:
        raise UsageError(str(exc)) from None


def run(argv=None):
    """Return ``(exit_code, report_text)``."""
    try:
        args = build_parser().parse_args(argv)
        if args.verb == "catalog":
            return _catalog(args)
        obj = load(args)
        return VERB_FUNCS[args.verb](obj, args)
    except UsageError as exc:
        return EXIT_USAGE, f"usage error: {exc}\n"
    except ParseError as exc:
        return EXIT_USAGE, f"parse error: {exc}\n"
    except OSError as exc:
        return EXIT_USAGE, f"io error: {exc}\n"
    except (ParameterError, PreconditionError, StructuralError) as exc:
        return EXIT_USAGE, f"error: {exc}\n"


def _catalog(args):
    if not args.inputs or args.inputs[0] not in ("list", "show"):
        raise UsageError("catalog list | catalog show NAME")
    if args.inputs[0] == "list":
        lines = []
        for name in catalog.names():
            e = catalog.entry(name)
            params = ",".join(f"{p}={d}" for p, d in e.params)
            lines.append(f"{name} kind={e.kind}" + (f" params={params}" if params else "") + f"  # {e.doc}")
        return EXIT_OK, "\n".join(lines) + "\n"
    if len(args.inputs) != 2:
        raise UsageError("catalog show NAME")
    field = parse_field(args.field) if args.field else None
    return EXIT_OK, render(catalog.build(args.inputs[1], field, **_params(args.param)))


def _validate(obj, args):
    if isinstance(obj, ExtensionData):
        report = validate_extension(obj, args.bound)
        report.extend(check_graded(obj), "graded: ")
    else:
        report = validate(obj)
    return (EXIT_OK if report.ok else EXIT_FAIL), report.render() + "\n"


def _hilbert(obj, args):
    N = 8 if args.to is None else args.to
    if N < 0:
        raise UsageError("--to must be nonnegative")
    return EXIT_OK, " ".join(str(h) for h in hilbert(_as_presentation(obj), N)) + "\n"


def _pbw(obj, args):
    P = _as_presentation(obj)
    v = pbw_check(P, _order(P, args.order))
    lines = [
        f"status={v.status}",
        f"order={'<'.join(v.order.names)}",
        f"S={v.format_pairs()}",
        f"witness={'-' if v.witness is None else v.witness}",
    ]
    if v.reason:
        lines.append(f"reason={v.reason}")
    code = {"IsPBW": EXIT_OK, "NotPBW": EXIT_FAIL}.get(v.status, EXIT_INCONCLUSIVE)
    return code, "\n".join(lines) + "\n"


def _dual(obj, args):
    return EXIT_OK, render(quadratic_dual(_as_presentation(obj)))


def _extend(obj, args):
    if not isinstance(obj, ExtensionData):
        raise UsageError("extend needs extension data")
    report = validate_extension(obj, args.bound)
    report.extend(check_graded(obj), "graded: ")
    if not report.ok:
        return EXIT_FAIL, report.render() + "\n"
    return EXIT_OK, render(emit_presentation(obj))


def _classify(obj, args):
    if not isinstance(obj, ExtensionData):
        raise UsageError("classify needs extension data")
    report = validate_extension(obj, args.bound)
    if not report.ok:
        return EXIT_FAIL, report.render() + "\n"
    return EXIT_OK, classify(obj, args.bound).render() + "\n"


def _koszul(obj, args):
    P = _as_presentation(obj)
    bounds = Bounds(args.smax, args.pmax, 8 if args.to is None else args.to, args.kmax, args.cap)
    report = koszul_report(P, _order(P, args.order), bounds, args.oracle)
    code = {PASS: EXIT_OK, FAIL: EXIT_FAIL}.get(report.overall, EXIT_INCONCLUSIVE)
    return code, report.render() + "\n"


VERB_FUNCS = {
    "validate": _validate,
    "hilbert": _hilbert,
    "pbw": _pbw,
    "dual": _dual,
    "extend": _extend,
    "classify": _classify,
    "koszul": _koszul,
}


def main(argv=None) -> int:
    code, text = run(argv)
    out = None
    try:
        args = build_parser().parse_args(argv)
        out = args.output
    except UsageError:
        pass
    if out and code != EXIT_USAGE:
        try:
            with open(out, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            sys.stderr.write(f"io error: {exc}\n")
            return EXIT_USAGE
    else:
        (sys.stderr if code == EXIT_USAGE else sys.stdout).write(text)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
