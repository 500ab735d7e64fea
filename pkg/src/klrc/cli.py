"""Command-line front end.

    klrc classify --ell 2 --k 1 --beta 1,2,1
    klrc dims --ell 2 --k 1 --beta 1,2,1 --format csv
    klrc crystal --ell 3 --charge 1 --nmax 4 --format dot
    klrc kleshchev --ell 3 --k 1 --partition 2,2
    klrc tables all

Exit status: 0 on success, 1 on a table mismatch or a zero block where a
nonzero one was needed, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Optional, Sequence

from . import tables
from .blocks import classify_record
from .cartan import cartan
from .fock import crystal, is_kleshchev
from .partitions import Charge, make_partition
from .qdim import dims_table, graded_dim, graded_dim_block, is_nonzero_block

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def parse_int_list(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def parse_sequence(text: str) -> tuple[int, ...]:
    """``1210`` (single digits) or ``1,2,1,0``."""
    text = text.strip()
    if "," in text:
        return parse_int_list(text)
    if not text.isdigit() and text:
        raise UsageError(f"bad residue sequence {text!r}")
    return tuple(int(ch) for ch in text)


def _charge(args) -> Charge:
    ell = args.ell
    if ell is None or ell < 2:
        raise UsageError("--ell must be an integer >= 2")
    if args.charge is not None:
        return Charge(args.charge, ell)
    if args.k is None:
        raise UsageError("one of --k or --charge is required")
    if not 0 <= args.k <= ell:
        raise UsageError(f"--k must lie in 0..{ell}")
    return Charge(args.k, ell)


def _beta(args) -> tuple[int, ...]:
    if args.beta is None:
        raise UsageError("--beta is required")
    beta = parse_int_list(args.beta)
    if len(beta) != args.ell + 1 or any(b < 0 for b in beta):
        raise UsageError(f"--beta needs {args.ell + 1} non-negative coefficients")
    return beta


def cmd_classify(args, out) -> int:
    charge = _charge(args)
    record = classify_record(cartan(charge.ell), charge.k, _beta(args))
    out.write(json.dumps(record) + "\n")
    return EXIT_OK


def cmd_dims(args, out) -> int:
    charge = _charge(args)
    beta = _beta(args)
    if not is_nonzero_block(charge, beta):
        sys.stderr.write(f"block {list(beta)} is zero for Lambda_{charge.k}\n")
        return EXIT_MISMATCH
    if args.nu is not None:
        nu = parse_sequence(args.nu)
        nu2 = parse_sequence(args.nu2) if args.nu2 is not None else nu
        try:
            seqs, matrix = [nu], [[graded_dim(charge, beta, nu, nu2)]]
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        cols = [nu2]
    else:
        seqs, matrix = dims_table(charge, beta)
        cols = seqs
    names = [tables.seq_str(s) for s in seqs]
    col_names = [tables.seq_str(s) for s in cols]
    fmt = args.format or "plain"
    if fmt == "json":
        out.write(
            json.dumps(
                {
                    "ell": charge.ell,
                    "k": charge.k,
                    "kappa": charge.kappa,
                    "beta": list(beta),
                    "rows": names,
                    "columns": col_names,
                    "table": [[str(p) for p in row] for row in matrix],
                    "block": str(graded_dim_block(charge, beta)),
                }
            )
            + "\n"
        )
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["nu"] + col_names)
        for name, row in zip(names, matrix):
            writer.writerow([name] + [str(p) for p in row])
        out.write(buf.getvalue())
    elif fmt == "plain":
        width = max(len(str(p)) for row in matrix for p in row)
        width = max(width, *(len(n) for n in names + col_names), 1)
        out.write(" " * width + " | " + " ".join(n.rjust(width) for n in col_names) + "\n")
        for name, row in zip(names, matrix):
            out.write(name.rjust(width) + " | " + " ".join(str(p).rjust(width) for p in row) + "\n")
    else:
        raise UsageError(f"dims does not support --format {fmt}")
    return EXIT_OK


def cmd_crystal(args, out) -> int:
    charge = _charge(args)
    if args.nmax is None or args.nmax < 0:
        raise UsageError("--nmax must be a non-negative integer")
    graph = crystal(charge, args.nmax)
    fmt = args.format or "dot"
    if fmt == "dot":
        out.write(graph.to_dot())
    elif fmt == "json":
        out.write(graph.to_json() + "\n")
    elif fmt == "plain":
        for n in range(args.nmax + 1):
            out.write(f"{n}: {len(graph.rank(n))}\n")
    else:
        raise UsageError(f"crystal does not support --format {fmt}")
    return EXIT_OK


def cmd_kleshchev(args, out) -> int:
    charge = _charge(args)
    if args.partition is None:
        raise UsageError("--partition is required")
    try:
        la = make_partition(parse_int_list(args.partition))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    result = is_kleshchev(charge, la)
    if args.format == "json":
        out.write(json.dumps({"ell": charge.ell, "kappa": charge.kappa, "partition": list(la), "kleshchev": result}) + "\n")
    else:
        out.write(("kleshchev" if result else "not kleshchev") + "\n")
    return EXIT_OK


def cmd_tables(args, out) -> int:
    selector = args.selector
    names = list(tables.SELECTORS) if selector == "all" else [selector]
    if any(n not in tables.SELECTORS for n in names):
        raise UsageError(f"unknown selector {selector!r}; choose from all, {', '.join(tables.SELECTORS)}")
    jobs = args.jobs or 1
    if jobs > 1 and len(names) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(tables.run, names))
    else:
        results = [tables.run(n) for n in names]
    failures = 0
    for checks in results:
        for check in checks:
            out.write(check.line() + "\n")
            failures += not check.ok
    total = sum(len(c) for c in results)
    out.write(f"{total - failures}/{total} checks passed\n")
    return EXIT_MISMATCH if failures else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="klrc", description="Level-one KLR algebras of type C_l^(1).")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, beta=True):
        p.add_argument("--ell", type=int, required=True)
        grp = p.add_mutually_exclusive_group()
        grp.add_argument("--k", type=int)
        grp.add_argument("--charge", type=int, help="charge kappa; Lambda_kappa = Lambda_{pi(kappa)}")
        if beta:
            p.add_argument("--beta", help="comma-separated coefficients of alpha_0..alpha_l")
        p.add_argument("--format", choices=["json", "csv", "dot", "plain"])
        p.add_argument("--jobs", type=int, default=_default_jobs())

    p = sub.add_parser("classify", help="representation type of a block")
    common(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("dims", help="graded dimensions of idempotent truncations")
    common(p)
    p.add_argument("--nu")
    p.add_argument("--nu2")
    p.set_defaults(func=cmd_dims)

    p = sub.add_parser("crystal", help="crystal graph of V(Lambda_k)")
    common(p, beta=False)
    p.add_argument("--nmax", type=int)
    p.set_defaults(func=cmd_crystal)

    p = sub.add_parser("kleshchev", help="is a partition Kleshchev")
    common(p, beta=False)
    p.add_argument("--partition")
    p.set_defaults(func=cmd_kleshchev)

    p = sub.add_parser("tables", help="recompute the reference dimension tables")
    p.add_argument("selector", help="all, " + ", ".join(tables.SELECTORS))
    p.add_argument("--jobs", type=int, default=_default_jobs())
    p.set_defaults(func=cmd_tables)
    return parser


def _default_jobs() -> int:
    try:
        return int(os.environ.get("KLR_JOBS", "1"))
    except ValueError:
        return 1


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except UsageError as exc:
        sys.stderr.write(f"klrc: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
