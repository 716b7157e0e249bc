"""Command-line interface over the whole library.

One subcommand per operation group: matrix construction, the total
nonnegativity scan, face-vector transforms, the M-sequence test, and the
lattice-path certificates. All output is deterministic. Exit codes are
part of the contract:

    0  success (including a computed "false"/"fail" verdict)
    1  domain error (bad values, unreadable file, budget exceeded)
    2  usage error (bad flags)
    3  a negative minor was found by the tnn scan
    4  internal cross-check failure (two independent routes disagreed)
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .errors import CrossCheckError
from .lgv import export_dot, graph_json_obj, lattice_graph, minor_via_lgv
from .macaulay import is_m_sequence, oracle_is_m_sequence
from .polyvec import FVector, GVector, euler_check, f_to_g, g_to_f, is_polytopal
from .tnn import as_matrix, determinant, is_totally_nonnegative
from .transfer import parse_matrix_csv, parse_matrix_json, path_matrix, transfer_matrix

__all__ = ["main", "run"]


class UsageError(Exception):
    """Flag combinations argparse alone cannot reject."""


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected comma-separated integers, got {text!r}"
        ) from None


def _render_entries(entries) -> str:
    cells = [[str(x) for x in row] for row in entries]
    width = max(len(c) for row in cells for c in row)
    return "\n".join(" ".join(c.rjust(width) for c in row) for row in cells)


def _index_set(indices) -> str:
    return "{" + ",".join(str(i) for i in indices) + "}"


def cmd_matrix(args) -> int:
    if args.augmented and args.d is None:
        raise UsageError("--augmented only applies to --d")
    if args.d is not None:
        if args.augmented:
            obj = path_matrix(args.d + 1)
            label = f"# path matrix n={args.d + 1} (augmented form for d={args.d})"
        else:
            obj = transfer_matrix(args.d)
            label = None
    else:
        obj = path_matrix(args.n)
        label = None
    if args.format == "csv":
        sys.stdout.write(obj.to_csv())
    elif args.format == "json":
        print(obj.to_json())
    else:
        if label is not None:
            print(label)
        print(_render_entries(obj.entries))
    return 0


def _load_matrix_file(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    if path.endswith(".json"):
        return parse_matrix_json(text)
    return parse_matrix_csv(text)


def cmd_tnn(args) -> int:
    if args.d is not None:
        mat = as_matrix(transfer_matrix(args.d))
    elif args.n is not None:
        mat = as_matrix(path_matrix(args.n))
    else:
        mat = as_matrix(_load_matrix_file(args.file))
    report = is_totally_nonnegative(mat, max_order=args.max_order, jobs=args.jobs)
    if args.format == "json":
        print(report.to_json())
    else:
        print(f"is_tnn: {'true' if report.is_tnn else 'false'}")
        print(f"minors_checked: {report.minors_checked}")
        print(f"min_minor: {report.min_minor}")
        if report.witness is not None:
            w = report.witness
            print(
                f"witness: rows={_index_set(w.rows)} cols={_index_set(w.cols)} "
                f"value={w.value}"
            )
    return 0 if report.is_tnn else 3


def _print_vector(values, key: str, d: int, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps({"d": d, key: list(values)}, sort_keys=True))
    else:
        print(",".join(str(v) for v in values))


def cmd_f2g(args) -> int:
    g = f_to_g(FVector(args.d, args.f))
    _print_vector(g.values, "g", args.d, args.format)
    return 0


def cmd_g2f(args) -> int:
    f = g_to_f(GVector(args.d, args.g))
    _print_vector(f.counts, "f", args.d, args.format)
    return 0


def cmd_euler(args) -> int:
    ok = euler_check(FVector(args.d, args.f))
    if args.format == "json":
        print(json.dumps({"d": args.d, "euler": ok}, sort_keys=True))
    else:
        print("true" if ok else "false")
    return 0


def cmd_feasible(args) -> int:
    verdict = is_polytopal(FVector(args.d, args.f))
    if args.format == "json":
        print(json.dumps(verdict.to_json_obj(), sort_keys=True))
    elif verdict.passed:
        print("pass")
    else:
        print(f"fail, condition={verdict.failed_condition}")
    return 0


def cmd_msequence(args) -> int:
    verdict = is_m_sequence(args.seq)
    if args.oracle:
        vars_hint = args.max_vars
        if vars_hint is None:
            vars_hint = args.seq[1] if len(args.seq) > 1 else 1
        agreed = oracle_is_m_sequence(args.seq, max(1, vars_hint))
        if agreed != verdict.ok:
            raise CrossCheckError(
                f"is_m_sequence says {verdict.ok} but the multicomplex oracle "
                f"says {agreed} for {','.join(map(str, args.seq))}"
            )
    if args.format == "json":
        obj = {
            "is_m_sequence": verdict.ok,
            "witness_k": verdict.k,
            "boundary_value": verdict.boundary_value,
        }
        print(json.dumps(obj, sort_keys=True))
    elif verdict.ok:
        print("true")
    elif verdict.boundary_value is None:
        print(f"false, k={verdict.k}")
    else:
        print(
            f"false, k={verdict.k}, boundary={verdict.boundary_value}, "
            f"bound={verdict.bound}"
        )
    return 0


def cmd_lgv(args) -> int:
    graph = lattice_graph(args.n)
    if args.dot is not None:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(export_dot(graph))
        return 0
    if args.verify:
        if args.rows is None or args.cols is None:
            raise UsageError("--verify requires --rows and --cols")
        total = minor_via_lgv(graph, args.rows, args.cols)
        w = path_matrix(args.n)
        sub = as_matrix(w).submatrix(args.rows, args.cols)
        det = determinant(sub)
        if total != det:
            raise CrossCheckError(
                f"minor mismatch on n={args.n}, rows={list(args.rows)}, "
                f"cols={list(args.cols)}: det={det}, lgv={total}"
            )
        print(f"det={det}, lgv={total}, equal")
        return 0
    if args.format == "json":
        print(json.dumps(graph_json_obj(graph), sort_keys=True))
    elif args.format == "dot":
        sys.stdout.write(export_dot(graph))
    else:
        print(
            f"n={graph.n}: {len(graph.vertices)} vertices, {len(graph.arcs)} arcs, "
            f"{len(graph.sources)} sources, {len(graph.sinks)} sinks"
        )
    return 0


def _add_format(parser, choices=("text", "csv", "json")) -> None:
    parser.add_argument("--format", choices=choices, default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polytnn",
        description="Exact transfer matrices, face-vector transforms, and "
        "total-nonnegativity certificates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("matrix", help="print a transfer or path matrix")
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--d", type=int, help="dimension of the transfer matrix")
    grp.add_argument("--n", type=int, help="order of the path matrix")
    p.add_argument(
        "--augmented",
        action="store_true",
        help="with --d, print the path matrix of order d+1 instead",
    )
    _add_format(p)
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("tnn", help="scan every minor for a negative value")
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--d", type=int, help="scan the transfer matrix of dimension d")
    grp.add_argument("--n", type=int, help="scan the path matrix of order n")
    grp.add_argument("--file", help="scan a matrix from a CSV or JSON file")
    p.add_argument("--max-order", type=int, default=None)
    p.add_argument("--jobs", type=int, default=1)
    _add_format(p, choices=("text", "json"))
    p.set_defaults(func=cmd_tnn)

    p = sub.add_parser("f2g", help="face counts to the g-vector")
    p.add_argument("--f", type=_int_list, required=True)
    p.add_argument("--d", type=int, required=True)
    _add_format(p)
    p.set_defaults(func=cmd_f2g)

    p = sub.add_parser("g2f", help="g-vector to face counts")
    p.add_argument("--g", type=_int_list, required=True)
    p.add_argument("--d", type=int, required=True)
    _add_format(p)
    p.set_defaults(func=cmd_g2f)

    p = sub.add_parser("euler", help="test the alternating face-count sum")
    p.add_argument("--f", type=_int_list, required=True)
    p.add_argument("--d", type=int, required=True)
    _add_format(p, choices=("text", "json"))
    p.set_defaults(func=cmd_euler)

    p = sub.add_parser("feasible", help="test whether f is a polytope f-vector")
    p.add_argument("--f", type=_int_list, required=True)
    p.add_argument("--d", type=int, required=True)
    _add_format(p, choices=("text", "json"))
    p.set_defaults(func=cmd_feasible)

    p = sub.add_parser("msequence", help="test a sequence for the M-property")
    p.add_argument("--seq", type=_int_list, required=True)
    p.add_argument(
        "--oracle",
        action="store_true",
        help="cross-check against exhaustive multicomplex search",
    )
    p.add_argument("--max-vars", type=int, default=None)
    _add_format(p, choices=("text", "json"))
    p.set_defaults(func=cmd_msequence)

    p = sub.add_parser("lgv", help="lattice graphs and disjoint-path certificates")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--verify", action="store_true")
    p.add_argument("--rows", type=_int_list, default=None)
    p.add_argument("--cols", type=_int_list, default=None)
    p.add_argument("--dot", default=None, metavar="FILE")
    _add_format(p, choices=("text", "json", "dot"))
    p.set_defaults(func=cmd_lgv)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except CrossCheckError as exc:
        print(f"cross-check failure: {exc}", file=sys.stderr)
        return 4
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def run() -> None:
    raise SystemExit(main())
