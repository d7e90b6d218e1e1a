"""Command-line interface: verify, induce, search, oracle-check.

Machine-readable results go to stdout with stable prefixes (VERDICT,
CLASS, CODE, residual lines); diagnostics go to stderr.  Exit status is 0
for pass/success, 1 for a verified failure, 2 for usage or parse errors.
Output is byte-identical across runs for fixed inputs and seed.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .code import CodeFileError, OcwsCode, parse_code_file, write_code_file
from .graph import Graph, from_adjacency, ring_graph
from .induction import enumerate_paulis, gauge_reduce, induce, induced_error_set
from .oracle import oqec_check
from .pauli import commutes, format_pauli, format_zstring
from .search import SearchConfig, SearchError, search_code
from .verify import certify_distance, corrects_weight, detects_set

__all__ = ["main"]


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ocws",
        description="Construct, verify and search operator codeword-stabilized codes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--format",
            choices=("text", "lines"),
            default="text",
            help="text adds '#' comment lines; lines is strictly machine output",
        )
        p.add_argument(
            "--threads",
            type=int,
            default=os.cpu_count() or 1,
            help="worker parallelism cap (kernels currently run single-process)",
        )

    p_verify = sub.add_parser("verify", help="check a code file against a distance")
    p_verify.add_argument("codefile")
    p_verify.add_argument(
        "--distance",
        type=int,
        default=None,
        help="distance to certify; defaults to the file's claim, else 1",
    )
    common(p_verify)

    p_induce = sub.add_parser("induce", help="print induced error classes")
    p_induce.add_argument("codefile")
    p_induce.add_argument("--weight", type=int, default=1, help="maximum error weight")
    common(p_induce)

    p_search = sub.add_parser("search", help="search word sets for a graph")
    p_search.add_argument(
        "--graph",
        required=True,
        help="'ring' (with --n) or 'file:<path>' to a 0/1 adjacency file",
    )
    p_search.add_argument("--n", type=int, default=None, help="qubit count for ring")
    p_search.add_argument("--r", type=int, required=True, help="gauge qubit count")
    p_search.add_argument("--distance", type=int, required=True, help="target distance")
    p_search.add_argument("--K", type=int, default=None, help="required word count")
    p_search.add_argument("--mode", choices=("exact", "greedy"), default="exact")
    p_search.add_argument("--budget", type=float, default=None, help="time budget in seconds")
    p_search.add_argument("--seed", type=int, default=0)
    p_search.add_argument("--out", default=None, help="write the code file here")
    common(p_search)

    p_oracle = sub.add_parser(
        "oracle-check", help="dense state-vector check of correctability"
    )
    p_oracle.add_argument("codefile")
    p_oracle.add_argument("--weight", type=int, default=1, help="error sweep weight")
    p_oracle.add_argument("--tol", type=float, default=1e-9)
    common(p_oracle)

    return parser


def _comment(args: argparse.Namespace, text: str) -> None:
    if args.format == "text":
        print(f"# {text}")


def _load_code(path: str) -> OcwsCode:
    return parse_code_file(Path(path).read_text())


def _load_graph(args: argparse.Namespace) -> Graph:
    kind = args.graph
    if kind == "ring":
        if args.n is None:
            raise ValueError("--graph ring requires --n")
        return ring_graph(args.n)
    if kind.startswith("file:"):
        path = kind[len("file:"):]
        rows = [
            line.split("#", 1)[0].strip()
            for line in Path(path).read_text().splitlines()
        ]
        graph = from_adjacency([row for row in rows if row])
        if args.n is not None and args.n != graph.n:
            raise ValueError(f"--n {args.n} does not match adjacency size {graph.n}")
        return graph
    raise ValueError(f"--graph must be 'ring' or 'file:<path>', got {kind!r}")


def _print_witness(code: OcwsCode, distance: int) -> None:
    sweep = enumerate_paulis(code.n, min(max(distance - 1, 1), code.n))
    report = detects_set(code, sweep)
    if report.failures:
        f = report.failures[0]
        print(
            f"WITNESS error={format_pauli(f.error)} "
            f"words=({f.word_i},{f.word_j}) product={f.decomposition}"
        )
        return
    t = min((distance - 1) // 2, code.n)
    for e in enumerate_paulis(code.n, max(t, 0)):
        if gauge_reduce(code, induce(code, e)) != 0:
            continue
        for l in range(code.K):
            if not commutes(e, code.word_operator(l)):
                print(f"WITNESS degenerate error={format_pauli(e)} word={l + 1}")
                return


def _cmd_verify(args: argparse.Namespace) -> int:
    code = _load_code(args.codefile)
    distance = args.distance
    if distance is None:
        distance = code.claimed_distance if code.claimed_distance is not None else 1
    if distance < 1:
        raise ValueError(f"distance {distance} must be >= 1")
    _comment(args, f"verify {args.codefile} against distance {distance}")
    certified = certify_distance(code)
    ok = certified >= distance and corrects_weight(code, (distance - 1) // 2)
    if not ok:
        _print_witness(code, distance)
    print(f"VERDICT {'pass' if ok else 'fail'} n={code.n} K={code.K} r={code.r} d={certified}")
    return 0 if ok else 1


def _cmd_induce(args: argparse.Namespace) -> int:
    code = _load_code(args.codefile)
    if not 1 <= args.weight <= code.n:
        raise ValueError(f"--weight {args.weight} out of range for n={code.n}")
    _comment(args, f"induce {args.codefile}: errors of weight <= {args.weight}")
    for e in enumerate_paulis(code.n, args.weight):
        raw = induce(code, e)
        reduced = gauge_reduce(code, raw)
        print(
            f"CLASS {format_pauli(e)} -> {format_zstring(raw, code.n)} "
            f"-> {format_zstring(reduced, code.n)}"
        )
    count = len(induced_error_set(code, args.weight))
    _comment(args, f"{count} distinct reduced classes")
    return 0


def _cmd_search(args: argparse.Namespace) -> int:
    graph = _load_graph(args)
    config = SearchConfig(
        graph=graph,
        r=args.r,
        target_distance=args.distance,
        target_K=args.K,
        mode=args.mode,
        time_budget=args.budget,
        seed=args.seed,
    )
    code = search_code(config)
    print(f"CODE n={code.n} r={code.r} K={code.K} d={code.claimed_distance}")
    body = write_code_file(code)
    if args.out is not None:
        Path(args.out).write_text(body)
        _comment(args, f"wrote {args.out}")
    else:
        sys.stdout.write(body)
    return 0


def _cmd_oracle_check(args: argparse.Namespace) -> int:
    code = _load_code(args.codefile)
    if not 0 <= args.weight <= code.n:
        raise ValueError(f"--weight {args.weight} out of range for n={code.n}")
    errors = enumerate_paulis(code.n, args.weight, include_identity=True)
    _comment(
        args,
        f"oracle-check {args.codefile}: {len(errors)} errors, tolerance {args.tol:g}",
    )
    report = oqec_check(code, errors, args.tol)
    print(f"max_off_block = {report.max_off_block:.6e}")
    print(f"max_block_deviation = {report.max_block_deviation:.6e}")
    print("PASS" if report.passed else "FAIL")
    return 0 if report.passed else 1


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    if args.threads is not None and args.threads < 1:
        print(f"error: --threads {args.threads} must be >= 1", file=sys.stderr)
        return 2
    handlers = {
        "verify": _cmd_verify,
        "induce": _cmd_induce,
        "search": _cmd_search,
        "oracle-check": _cmd_oracle_check,
    }
    try:
        return handlers[args.command](args)
    except SearchError as exc:
        print(f"search failed: {exc}", file=sys.stderr)
        return 1
    except CodeFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
