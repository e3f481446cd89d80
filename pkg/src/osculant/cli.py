"""Command-line entry point: ``analyze``, ``check`` and ``catalog list``."""

from __future__ import annotations

import argparse
import json
import os
import sys
import warnings

from .catalog import catalog_get, catalog_names
from .defects import THEOREMS
from .errors import OsculantError, ParseError, UnknownVariety
from .jets import MODES, SamplingConfig
from .parser import parse_parametrization
from .report import MAX_ORDER_CEILING, ReportOptions, run_report

EXIT_OK, EXIT_USAGE, EXIT_ENGINE, EXIT_FAIL = 0, 1, 2, 3

# flag name -> environment variable; flags take precedence
ENV_OVERRIDES = {
    "seed": "OSCULANT_SEED",
    "samples": "OSCULANT_SAMPLES",
    "coord_bound": "OSCULANT_COORD_BOUND",
}
DEFAULTS = {"seed": 0, "samples": 5, "coord_bound": 100}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def _add_source(p: argparse.ArgumentParser):
    p.add_argument("file", nargs="?", help="input document (JSON), or - for stdin")
    p.add_argument("--catalog", metavar="NAME", help="built-in variety instead of a file")


def _add_sampling(p: argparse.ArgumentParser):
    p.add_argument("--mode", choices=MODES, default="sampled")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--samples", type=_positive, default=None)
    p.add_argument("--coord-bound", dest="coord_bound", type=_positive, default=None)
    p.add_argument("--format", choices=("json", "text"), default="json")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="osculant", description="Osculating spaces, fundamental forms and defects.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    a = sub.add_parser("analyze", help="full per-order report")
    _add_source(a)
    a.add_argument("--max-order", dest="max_order", type=_positive, default=3)
    a.add_argument("--cross-check", dest="cross_check", action="store_true",
                   help="recompute in the other mode and compare every integer")
    _add_sampling(a)

    c = sub.add_parser("check", help="run one theorem checker")
    c.add_argument("--theorem", choices=sorted(THEOREMS), required=True)
    c.add_argument("--order", type=_positive, required=True)
    _add_source(c)
    _add_sampling(c)

    cat = sub.add_parser("catalog", help="built-in varieties")
    cat_sub = cat.add_subparsers(dest="action", required=True, parser_class=_Parser)
    ls = cat_sub.add_parser("list", help="list catalog names")
    ls.add_argument("--format", choices=("json", "text"), default="text")
    return parser


def _sampling_options(args, environ) -> dict:
    out = {}
    for key, var in ENV_OVERRIDES.items():
        value = getattr(args, key)
        if value is None and var in environ:
            try:
                value = int(environ[var])
            except ValueError:
                raise UsageError(f"{var} must be an integer, got {environ[var]!r}") from None
            if key != "seed" and value < 1:
                raise UsageError(f"{var} must be positive")
        out[key] = DEFAULTS[key] if value is None else value
    return out


def _load(args):
    if (args.file is None) == (args.catalog is None):
        raise UsageError("give exactly one of an input file or --catalog NAME")
    if args.catalog is not None:
        return catalog_get(args.catalog).parametrization
    if args.file == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(args.file, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {args.file}: {exc.strerror}") from None
    return parse_parametrization(text)


def _emit(text: str, out):
    out.write(text)
    if not text.endswith("\n"):
        out.write("\n")


def _cmd_analyze(args, environ, out) -> int:
    if args.max_order > MAX_ORDER_CEILING:
        raise UsageError(f"--max-order must be at most {MAX_ORDER_CEILING}")
    opts = ReportOptions(mode=args.mode, cross_check=args.cross_check, **_sampling_options(args, environ))
    p = _load(args)
    report = run_report(p, args.max_order, opts)
    _emit(report.to_json() if args.format == "json" else report.to_text(), out)
    if report.errors:
        return EXIT_ENGINE
    return EXIT_OK


def _cmd_check(args, environ, out) -> int:
    opts = _sampling_options(args, environ)
    p = _load(args)
    config = SamplingConfig(seed=opts["seed"], samples=opts["samples"], bound=opts["coord_bound"])
    verdict = THEOREMS[args.theorem](p, args.order, args.mode, config)
    if args.format == "json":
        _emit(json.dumps({"input": p.name, **verdict.to_dict()}, sort_keys=True, indent=2), out)
    else:
        notes = "; ".join(verdict.notes)
        _emit(f"{p.name}: {args.theorem} t={args.order} {verdict.status}" + (f" ({notes})" if notes else ""), out)
    return EXIT_FAIL if verdict.status == "fail" else EXIT_OK


def _cmd_catalog(args, environ, out) -> int:
    names = catalog_names()
    if args.format == "json":
        rows = []
        for n in names:
            p = catalog_get(n).parametrization
            rows.append({"name": n, "k": p.k, "N": p.N})
        _emit(json.dumps(rows, indent=2), out)
    else:
        for n in names:
            p = catalog_get(n).parametrization
            out.write(f"{n:<18} k={p.k} N={p.N}\n")
    return EXIT_OK


_COMMANDS = {"analyze": _cmd_analyze, "check": _cmd_check, "catalog": _cmd_catalog}


def main(argv=None, environ=None, out=None, err=None) -> int:
    environ = os.environ if environ is None else environ
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            return _COMMANDS[args.command](args, environ, out)
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    except (UsageError, ParseError, UnknownVariety) as exc:
        print(str(exc), file=err)
        return EXIT_USAGE
    except (OsculantError, ArithmeticError, ValueError) as exc:
        print(f"engine error: {type(exc).__name__}: {exc}", file=err)
        return EXIT_ENGINE


if __name__ == "__main__":
    sys.exit(main())
