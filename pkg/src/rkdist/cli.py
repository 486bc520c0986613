"""Command-line front end.

Exit codes: 0 success, 1 a validation or check failed, 2 usage/file/parse
errors.  All output is deterministic given the arguments and file contents.
"""

from __future__ import annotations

import argparse
import contextlib
import enum
import io as _io
import sys

from . import catalog, enumeration, io, product
from .core import (
    InvalidProfile,
    RkProfile,
    UnknownVertex,
    _require_admissible,
    counts,
    is_isomorphic,
    quotient,
    validate_profile,
)

__all__ = ["ExitStatus", "main", "run"]


class ExitStatus(enum.IntEnum):
    OK = 0
    CHECK_FAILED = 1
    USAGE = 2


class _Usage(Exception):
    """Wraps errors that should exit with the usage status."""


def _load(path: str, stdin: bytes) -> RkProfile:
    if path == "-":
        return io.parse(stdin)
    try:
        with open(path, "rb") as fh:
            data = fh.read()
    except OSError as exc:
        raise _Usage(f"cannot read {path}: {exc.strerror}") from exc
    return io.parse(data)


def _write_out(data: bytes, dest: str | None, out) -> None:
    if dest is None or dest == "-":
        out.write(data)
        return
    try:
        with open(dest, "wb") as fh:
            fh.write(data)
    except OSError as exc:
        raise _Usage(f"cannot write {dest}: {exc.strerror}") from exc


def _emit(out, text: str) -> None:
    out.write((text + "\n").encode("utf-8"))


def _equation(report) -> str:
    return f"{report.total} = {report.prime_count} + {report.limit_count}"


def _cmd_validate(args, stdin, out, err) -> int:
    report = validate_profile(_load(args.file, stdin))
    for c in report.conditions:
        suffix = " (informational)" if c.informational else ""
        _emit(out, f"{c.code} {'pass' if c.passed else 'fail'} {c.detail}{suffix}")
    return ExitStatus.OK if report.admissible else ExitStatus.CHECK_FAILED


def _cmd_report(args, stdin, out, err) -> int:
    profile = _load(args.file, stdin)
    if not args.factor:
        report = counts(profile)
        _emit(out, _equation(report))
        for c in report.classes:
            _emit(out, f"class {c.representative} size {c.size} il {c.limit_count}")
        return ExitStatus.OK
    factors = [_load(f, stdin) for f in args.factor]
    dec = product.decomposition(profile, factors)
    totals = "·".join(str(r.total) for r in dec.factor_reports)
    primes = "·".join(str(r.prime_count) for r in dec.factor_reports)
    limits = "+".join(str(v) for v in sorted(row[2] for row in dec.term_table))
    _emit(
        out,
        f"{totals}={dec.product_report.prime_count}+{dec.product_report.limit_count}"
        f"={primes}+({limits})",
    )
    for reps, size, lim in dec.term_table:
        _emit(out, f"term {','.join(reps)} size {size} il {lim}")
    return ExitStatus.OK


def _cmd_product(args, stdin, out, err) -> int:
    factors = [_load(f, stdin) for f in args.files]
    _write_out(io.serialize(product.product_many(factors)), args.output, out)
    return ExitStatus.OK


def _cmd_oracle(args, stdin, out, err) -> int:
    a = _load(args.file_a, stdin)
    b = _load(args.file_b, stdin)
    pareto = product.pareto_product(a, b)
    oracle = product.oracle_product(a, b)
    _emit(out, f"pareto {_equation(counts(pareto))}")
    _emit(out, f"oracle {_equation(counts(oracle))}")
    same = is_isomorphic(pareto, oracle)
    _emit(out, "isomorphic" if same else "not isomorphic")
    return ExitStatus.OK if same else ExitStatus.CHECK_FAILED


def _cmd_render(args, stdin, out, err) -> int:
    profile = _load(args.file, stdin)
    render = io.render_dot if args.format == "dot" else io.render_ascii
    out.write(render(profile))
    return ExitStatus.OK


def _cmd_catalog(args, stdin, out, err) -> int:
    if args.catalog_cmd == "list":
        for entry in catalog.entries():
            params = (" " + " ".join(entry.parameters)) if entry.parameters else ""
            _emit(out, f"{entry.name}{params}")
        return ExitStatus.OK
    params: dict[str, int] = {}
    for item in args.param or []:
        key, sep, value = item.partition("=")
        if not sep or not key or not value.lstrip("-").isdigit():
            raise _Usage(f"bad --param {item!r}, expected NAME=INTEGER")
        params[key] = int(value)
    profile = catalog.get(args.name, params)
    _write_out(io.serialize(profile), args.output, out)
    return ExitStatus.OK


def _cmd_enumerate(args, stdin, out, err) -> int:
    result = enumeration.enumerate_profiles(args.total, args.max_vertices)
    _emit(out, str(len(result.profiles)))
    for i, cf in enumerate(result.profiles):
        if i:
            _emit(out, "---")
        out.write(cf.canonical_text)
    return ExitStatus.OK


def _cmd_check(args, stdin, out, err) -> int:
    profile = _load(args.file, stdin)
    if args.monotone:
        size_flag, limit_flag = product.monotonicity(profile)
        _emit(out, f"size={size_flag} limit={limit_flag}")
        return ExitStatus.OK
    _require_admissible(profile)
    q = quotient(profile)
    if args.lattice:
        ok = product.is_lattice(q)
    else:
        try:
            ok = product.is_boolean_lattice(q)
        except product.NotALattice:
            _emit(err, "not a lattice")
            ok = False
    _emit(out, "true" if ok else "false")
    return ExitStatus.OK if ok else ExitStatus.CHECK_FAILED


def _cmd_iso(args, stdin, out, err) -> int:
    same = is_isomorphic(_load(args.file_a, stdin), _load(args.file_b, stdin))
    _emit(out, "isomorphic" if same else "not isomorphic")
    return ExitStatus.OK if same else ExitStatus.CHECK_FAILED


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rkdist",
        description="Countable-model distribution calculus over finite Rudin-Keisler preorders.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check admissibility conditions V1-V6")
    p.add_argument("file")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("report", help="decomposition counts (total = prime + limit)")
    p.add_argument("file")
    p.add_argument(
        "--factor",
        action="append",
        metavar="FILE",
        help="factor profile; repeat to print the factored decomposition",
    )
    p.set_defaults(func=_cmd_report)

    p = sub.add_parser("product", help="Pareto product of profiles")
    p.add_argument("files", nargs="+")
    p.add_argument("-o", "--output", metavar="OUT")
    p.set_defaults(func=_cmd_product)

    p = sub.add_parser("oracle", help="cross-check the product against token enumeration")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("render", help="draw the Hasse diagram")
    p.add_argument("file")
    p.add_argument("--format", choices=("dot", "ascii"), required=True)
    p.set_defaults(func=_cmd_render)

    p = sub.add_parser("catalog", help="built-in profiles")
    csub = p.add_subparsers(dest="catalog_cmd", required=True)
    c = csub.add_parser("list", help="list entry names")
    c.set_defaults(func=_cmd_catalog)
    c = csub.add_parser("show", help="serialize an entry")
    c.add_argument("name")
    c.add_argument("--param", action="append", metavar="NAME=VALUE")
    c.add_argument("-o", "--output", metavar="OUT")
    c.set_defaults(func=_cmd_catalog)

    p = sub.add_parser("enumerate", help="all admissible profiles with a given total")
    p.add_argument("--total", type=int, required=True)
    p.add_argument("--max-vertices", type=int, default=None)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("check", help="lattice and monotonicity predicates")
    p.add_argument("file")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--lattice", action="store_true")
    group.add_argument("--boolean", action="store_true")
    group.add_argument("--monotone", action="store_true")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("iso", help="test two profiles for isomorphism")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.set_defaults(func=_cmd_iso)

    return parser


def run(argv: list[str], stdin: bytes = b"") -> tuple[bytes, bytes, int]:
    """Run one command; returns (stdout, stderr, exit code).  "-" reads stdin."""
    out = _io.BytesIO()
    err_buffer = _io.BytesIO()
    err_text = _io.TextIOWrapper(err_buffer, encoding="utf-8", newline="\n")
    out_text = _io.TextIOWrapper(out, encoding="utf-8", newline="\n")
    code: int
    try:
        with contextlib.redirect_stdout(out_text), contextlib.redirect_stderr(err_text):
            try:
                args = _build_parser().parse_args(argv)
                code = int(args.func(args, stdin, out, err_buffer))
            except SystemExit as exc:  # argparse usage errors and --help
                code = int(exc.code or 0)
            except _Usage as exc:
                _emit(err_buffer, f"error: {exc}")
                code = ExitStatus.USAGE
            except (io.ParseError, UnknownVertex) as exc:
                _emit(err_buffer, f"error: {exc}")
                code = ExitStatus.USAGE
            except (
                catalog.UnknownEntry,
                catalog.MissingParameter,
                catalog.UnknownParameter,
                catalog.AdmissibilityViolation,
                enumeration.InvalidTotal,
            ) as exc:
                _emit(err_buffer, f"error: {exc}")
                code = ExitStatus.USAGE
            except (InvalidProfile, product.FactorMismatch) as exc:
                _emit(err_buffer, f"error: {exc}")
                code = ExitStatus.CHECK_FAILED
    finally:
        out_text.flush()
        err_text.flush()
    return out.getvalue(), err_buffer.getvalue(), code


def main() -> None:
    argv = sys.argv[1:]
    stdin = sys.stdin.buffer.read() if "-" in argv else b""
    out, err, code = run(argv, stdin)
    sys.stdout.buffer.write(out)
    sys.stderr.buffer.write(err)
    sys.exit(code)
