"""Command-line front end.

Subcommands: `idempotents` (emit every labeled idempotent), `verify` (run a
check suite), `pim-table` (per-label projective-cover verification rows),
`show` (print one idempotent).  Exit codes: 0 success, 1 verification
failure, 2 usage error.  Output is deterministic for a fixed configuration
including the seed.
"""

from __future__ import annotations

import argparse
import json
import sys

from .algebra import AlgebraCtx, element_to_json, format_element
from .idempotents import (
    LabelError,
    enumerate_labels,
    format_label,
    parse_label,
    tuple_idempotent,
)
from .modp import is_prime
from .pims import pim_rows
from .verify import DEFAULT_SEED, run_suite

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="sl2hyper",
        description="Primitive idempotent decompositions of SL(2) Frobenius-kernel "
        "hyperalgebras over F_p, with projective-cover identification.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def common(sp: argparse.ArgumentParser) -> None:
        sp.add_argument("--p", type=int, required=True, help="the prime characteristic")
        sp.add_argument("--r", type=int, default=1, help="divided-power depth (default 1)")
        sp.add_argument("--rprime", type=int, default=None, help="torus depth (default r)")
        sp.add_argument("--format", choices=("text", "json"), default="text")
        sp.add_argument("--out", default=None, help="write output to this path instead of stdout")
        sp.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed for randomized checks")

    sp = sub.add_parser("idempotents", help="emit every labeled idempotent")
    common(sp)
    sp = sub.add_parser("verify", help="run a verification suite")
    common(sp)
    sp.add_argument("--suite", choices=("basic", "full"), default="basic")
    sp = sub.add_parser("pim-table", help="emit the projective-cover table")
    common(sp)
    sp = sub.add_parser("show", help="print one idempotent by label")
    common(sp)
    sp.add_argument("--label", required=True, help="label string a:t[,a:t]*[;aprime] with t = 2j")
    return ap


def _context(args: argparse.Namespace) -> AlgebraCtx:
    if not is_prime(args.p):
        raise UsageError(f"p must be prime, got {args.p}")
    rprime = args.r if args.rprime is None else args.rprime
    if args.r < 1 or rprime < args.r:
        raise UsageError(f"need 1 <= r <= rprime, got r={args.r}, rprime={rprime}")
    return AlgebraCtx(args.p, args.r, rprime)


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _json_dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def _cmd_idempotents(args: argparse.Namespace) -> int:
    ctx = _context(args)
    labels = enumerate_labels(ctx)
    entries = [(format_label(lb), tuple_idempotent(lb, ctx)) for lb in labels]
    if args.format == "json":
        payload = {
            "p": ctx.p,
            "r": ctx.r,
            "rprime": ctx.rprime,
            "count": len(entries),
            "idempotents": [
                {"label": name, "element": element_to_json(e)} for name, e in entries
            ],
        }
        _emit(_json_dumps(payload), args.out)
    else:
        lines = []
        for name, e in entries:
            lines.append(f"label {name}:")
            lines.extend("  " + ln for ln in format_element(e).splitlines())
        lines.append(f"count: {len(entries)}")
        _emit("\n".join(lines) + "\n", args.out)
    if args.out is not None:
        print(f"{len(entries)} idempotents written to {args.out}")
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    ctx = _context(args)
    results = run_suite(ctx, args.suite, args.seed)
    failed = [c for c in results if not c.passed]
    if args.format == "json":
        payload = {
            "p": ctx.p,
            "r": ctx.r,
            "rprime": ctx.rprime,
            "suite": args.suite,
            "seed": args.seed,
            "checks": [
                {"name": c.name, "passed": c.passed, "detail": c.detail} for c in results
            ],
            "passed": not failed,
        }
        _emit(_json_dumps(payload), args.out)
    else:
        lines = [
            f"{'PASS' if c.passed else 'FAIL'} {c.name}" + (f" ({c.detail})" if c.detail else "")
            for c in results
        ]
        lines.append(
            f"{len(results) - len(failed)}/{len(results)} checks passed "
            f"[p={ctx.p} r={ctx.r} rprime={ctx.rprime} suite={args.suite} seed={args.seed}]"
        )
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_FAIL if failed else EXIT_OK


_TABLE_COLS = (
    "label",
    "weight",
    "top_x",
    "lambda_prime",
    "lambda_double_prime",
    "predicted_dim",
    "computed_dim",
    "status",
)


def _cmd_pim_table(args: argparse.Namespace) -> int:
    ctx = _context(args)
    rows = pim_rows(ctx)
    census = sum(row["computed_dim"] for row in rows)
    if args.format == "json":
        payload = {
            "p": ctx.p,
            "r": ctx.r,
            "rprime": ctx.rprime,
            "census": census,
            "rows": rows,
        }
        _emit(_json_dumps(payload), args.out)
    else:
        lines = ["\t".join(_TABLE_COLS)]
        lines.extend("\t".join(str(row[c]) for c in _TABLE_COLS) for row in rows)
        lines.append(f"census: {census} (ambient dimension {ctx.xy_range ** 2 * ctx.q})")
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK if all(row["status"] == "PASS" for row in rows) else EXIT_FAIL


def _cmd_show(args: argparse.Namespace) -> int:
    ctx = _context(args)
    label = parse_label(args.label, ctx)
    e = tuple_idempotent(label, ctx)
    if args.format == "json":
        payload = {"label": format_label(label), "element": element_to_json(e)}
        _emit(_json_dumps(payload), args.out)
    else:
        _emit(f"label {format_label(label)}:\n" + format_element(e) + "\n", args.out)
    return EXIT_OK


_COMMANDS = {
    "idempotents": _cmd_idempotents,
    "verify": _cmd_verify,
    "pim-table": _cmd_pim_table,
    "show": _cmd_show,
}


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (UsageError, LabelError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
