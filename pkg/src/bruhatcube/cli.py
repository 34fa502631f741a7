"""
Command-line front end.  Every subcommand prints a machine-readable
result; exit codes are 0 for success, 1 for a mathematical negative
(false answer, failed validation), 2 for usage errors and 3 when a
size guard refuses the computation.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

from . import bruhat, census, dwd, embed, klpoly, perm, tadic
from .dwd import SizeGuardError

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_USAGE = 2
EXIT_REFUSED = 3


class Output:
    def __init__(self, path: Optional[str]):
        self.path = path
        self.lines: list[str] = []

    def emit(self, text: str) -> None:
        self.lines.append(text)

    def flush(self) -> None:
        text = "\n".join(self.lines)
        if text and not text.endswith("\n"):
            text += "\n"
        if self.path:
            with open(self.path, "w") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)


def _default_threads() -> int:
    env = os.environ.get("BRUHATCUBE_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return os.cpu_count() or 1


def _common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--format", choices=("text", "json", "csv"),
                     default="text")
    sub.add_argument("--threads", type=int, default=None,
                     help="worker count (default: BRUHATCUBE_THREADS or all cores)")
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument("--budget", type=int, default=1000)
    sub.add_argument("--force", action="store_true",
                     help="override size guards")
    sub.add_argument("--tol", type=float, default=1e-9)
    sub.add_argument("--out", default=None, help="write output to a file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bruhatcube",
        description="Bruhat hypercubes, well-distributed permutations "
                    "and (0,m,2)-nets")
    subs = parser.add_subparsers(dest="command", required=True)

    def add(name: str, **kwargs) -> argparse.ArgumentParser:
        sub = subs.add_parser(name, **kwargs)
        _common(sub)
        return sub

    p = add("len", help="inversion count of a permutation")
    p.add_argument("perm")
    p = add("leq", help="Bruhat comparison x <= y")
    p.add_argument("x")
    p.add_argument("y")
    p = add("interval", help="materialize the interval [x, y]")
    p.add_argument("x")
    p.add_argument("y")
    p = add("boolean", help="boolean-interval rank of [x, y]")
    p.add_argument("x")
    p.add_argument("y")
    p = add("rpoly", help="Kazhdan-Lusztig R-polynomial")
    p.add_argument("x")
    p.add_argument("y")
    p = add("dinv", help="d-invariant of a pair")
    p.add_argument("x")
    p.add_argument("y")
    p = add("dinv-diamond", help="d-invariant by diamond-closure minimum")
    p.add_argument("x")
    p.add_argument("y")
    p.add_argument("--cap", type=int, default=16)
    p = add("dwd", help="dyadic well-distribution test")
    p.add_argument("perm")
    p = add("gen-xy", help="bottom and top of the hypercube interval")
    p.add_argument("--m", type=int, required=True)
    p = add("phi-encode", help="hypercube coordinates of a permutation")
    p.add_argument("perm")
    p = add("phi-decode", help="permutation of a coordinate bit string")
    p.add_argument("bits")
    p = add("flip", help="flip one complementary block")
    p.add_argument("perm")
    p.add_argument("--block", required=True, metavar="K1,S,T",
                   help="complementary block: domain level, domain index, "
                        "range index")
    p = add("census", help="interval census of S_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--kmin", type=int, default=1)
    p.add_argument("--kmax", type=int, default=None)
    p = add("maxd", help="maximum d-invariant f(n) with witness")
    p.add_argument("--n", type=int, required=True)
    p = add("dwd-t", help="t-adic well-distribution test")
    p.add_argument("perm")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p = add("gen-xy-t", help="t-adic interval endpoints")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p = add("net-export", help="write the (0,m,2)-net point file")
    p.add_argument("perm")
    p.add_argument("--t", type=int, default=2)
    p = add("net-check", help="verify a net point file")
    p.add_argument("file", help="path, or - for stdin")
    p = add("digital-coset", help="digital nets B x_m B")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--translations", action="store_true",
                   help="extend both factors by translations")
    p = add("sudoku-check", help="validate a generalized Sudoku grid")
    p.add_argument("file", help="path, or - for stdin")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p = add("embed-check", help="good-embedding test of the geometric "
                                "embedding of [x, y]")
    p.add_argument("x")
    p.add_argument("y")
    p = add("funsearch-pair", help="evolved word-pair fixture")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--b-start", type=int, default=None)
    p.add_argument("--start3", action="store_true",
                   help="use the variant whose second range starts at 3")
    p = add("baseline", help="documented S_12 pair with d-invariant 20")
    p = add("search", help="seeded hill climb for large d-invariants")
    p.add_argument("--n", type=int, required=True)
    p = add("verify-theorem", help="verify the interval/hypercube theorem")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--mode", choices=("full", "sampled"), default=None)
    p.add_argument("--samples", type=int, default=10000)
    return parser


def _fmt_perm(p) -> str:
    return perm.format_perm(p)


def run(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0,) else 0
    out = Output(args.out)
    try:
        code = _dispatch(args, out)
    except SizeGuardError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_REFUSED
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    out.flush()
    return code


def _read_source(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _dispatch(args: argparse.Namespace, out: Output) -> int:
    fmt = args.format
    cmd = args.command

    if cmd == "len":
        p = perm.parse_perm(args.perm)
        val = perm.length(p)
        out.emit(json.dumps({"perm": _fmt_perm(p), "length": val})
                 if fmt == "json" else str(val))
        return EXIT_OK

    if cmd == "leq":
        x, y = perm.parse_perm(args.x), perm.parse_perm(args.y)
        ans = bruhat.bruhat_leq(x, y)
        out.emit(json.dumps({"leq": ans}) if fmt == "json"
                 else ("true" if ans else "false"))
        return EXIT_OK if ans else EXIT_FALSE

    if cmd == "interval":
        x, y = perm.parse_perm(args.x), perm.parse_perm(args.y)
        iv = bruhat.interval(x, y)
        if fmt == "json":
            out.emit(json.dumps(bruhat.interval_json(iv)))
        else:
            for z in iv.elements:
                out.emit(_fmt_perm(z))
        return EXIT_OK

    if cmd == "boolean":
        x, y = perm.parse_perm(args.x), perm.parse_perm(args.y)
        rank = bruhat.is_boolean_interval(x, y)
        if fmt == "json":
            out.emit(json.dumps({"boolean": rank is not None, "rank": rank}))
        else:
            out.emit("not boolean" if rank is None else str(rank))
        return EXIT_OK if rank is not None else EXIT_FALSE

    if cmd == "rpoly":
        x, y = perm.parse_perm(args.x), perm.parse_perm(args.y)
        r = klpoly.r_polynomial(x, y)
        out.emit(json.dumps({"coefficients": list(r)}) if fmt == "json"
                 else klpoly.format_poly(r))
        return EXIT_OK

    if cmd == "dinv":
        x, y = perm.parse_perm(args.x), perm.parse_perm(args.y)
        val = klpoly.d_invariant(x, y)
        out.emit(json.dumps({"d": val}) if fmt == "json" else str(val))
        return EXIT_OK

    if cmd == "dinv-diamond":
        x, y = perm.parse_perm(args.x), perm.parse_perm(args.y)
        iv = bruhat.interval(x, y)
        val = klpoly.d_via_diamond_closure(iv, cap=args.cap)
        out.emit(json.dumps({"d": val}) if fmt == "json" else str(val))
        return EXIT_OK

    if cmd == "dwd":
        p = perm.parse_perm(args.perm)
        ans = dwd.is_dwd(p)
        out.emit(json.dumps({"dwd": ans}) if fmt == "json"
                 else ("true" if ans else "false"))
        return EXIT_OK if ans else EXIT_FALSE

    if cmd == "gen-xy":
        x, y = dwd.gen_x(args.m), dwd.gen_y(args.m)
        if fmt == "json":
            out.emit(json.dumps({"m": args.m, "x": _fmt_perm(x),
                                 "y": _fmt_perm(y)}))
        else:
            out.emit(_fmt_perm(x))
            out.emit(_fmt_perm(y))
        return EXIT_OK

    if cmd == "phi-encode":
        p = perm.parse_perm(args.perm)
        coords = dwd.encode_phi(p)
        out.emit(json.dumps({"m": coords.m, "bits": str(coords)})
                 if fmt == "json" else str(coords))
        return EXIT_OK

    if cmd == "phi-decode":
        coords = dwd.parse_coordinates(args.bits)
        out.emit(_fmt_perm(dwd.decode_phi(coords)))
        return EXIT_OK

    if cmd == "flip":
        p = perm.parse_perm(args.perm)
        try:
            k1, s_idx, t_idx = (int(tok) for tok in args.block.split(","))
        except ValueError:
            raise ValueError(f"bad block spec {args.block!r}; "
                             f"expected K1,S,T") from None
        m = len(p).bit_length() - 1
        block = dwd.ComplementaryBlock(
            S=dwd.BasicInterval(m, k1, s_idx),
            T=dwd.BasicInterval(m, m + 1 - k1, t_idx))
        out.emit(_fmt_perm(dwd.flip(p, block)))
        return EXIT_OK

    if cmd == "census":
        threads = args.threads if args.threads else _default_threads()
        rows = census.interval_census(args.n, kmin=args.kmin, kmax=args.kmax,
                                      threads=threads, force=args.force)
        if fmt == "json":
            out.emit(json.dumps({"n": args.n, "rows": [
                {"k": r.k, "total": r.total, "hypercubes": r.hypercubes}
                for r in rows]}))
        elif fmt == "csv":
            out.emit("k,total,hypercubes")
            for r in rows:
                out.emit(f"{r.k},{r.total},{r.hypercubes}")
        else:
            out.emit(f"{'k':>3} {'total':>10} {'hypercubes':>10}")
            for r in rows:
                out.emit(f"{r.k:>3} {r.total:>10} {r.hypercubes:>10}")
        return EXIT_OK

    if cmd == "maxd":
        best, (wx, wy) = census.max_d(args.n, force=args.force)
        if fmt == "json":
            out.emit(json.dumps({"n": args.n, "f": best,
                                 "x": _fmt_perm(wx), "y": _fmt_perm(wy)}))
        else:
            out.emit(str(best))
            out.emit(_fmt_perm(wx))
            out.emit(_fmt_perm(wy))
        return EXIT_OK

    if cmd == "dwd-t":
        p = perm.parse_perm(args.perm)
        ans = tadic.is_dwd_t(p, args.t, args.m)
        out.emit(json.dumps({"dwd": ans}) if fmt == "json"
                 else ("true" if ans else "false"))
        return EXIT_OK if ans else EXIT_FALSE

    if cmd == "gen-xy-t":
        x, y = tadic.gen_x_t(args.t, args.m), tadic.gen_y_t(args.t, args.m)
        if fmt == "json":
            out.emit(json.dumps({"t": args.t, "m": args.m,
                                 "x": _fmt_perm(x), "y": _fmt_perm(y)}))
        else:
            out.emit(_fmt_perm(x))
            out.emit(_fmt_perm(y))
        return EXIT_OK

    if cmd == "net-export":
        p = perm.parse_perm(args.perm)
        t = args.t
        m = 0
        size = 1
        while size < len(p):
            size *= t
            m += 1
        pts = tadic.net_points(p, t, m)
        out.emit(tadic.format_net(pts).rstrip("\n"))
        return EXIT_OK

    if cmd == "net-check":
        pts = tadic.parse_net(_read_source(args.file))
        ans = tadic.is_net(pts)
        out.emit(json.dumps({"net": ans}) if fmt == "json"
                 else ("true" if ans else "false"))
        return EXIT_OK if ans else EXIT_FALSE

    if cmd == "digital-coset":
        coset = tadic.digital_net_coset(args.m,
                                        include_translations=args.translations,
                                        force=args.force)
        if fmt == "json":
            out.emit(json.dumps({"m": args.m, "count": len(coset),
                                 "elements": [_fmt_perm(p) for p in coset]}))
        else:
            for p in coset:
                out.emit(_fmt_perm(p))
        return EXIT_OK

    if cmd == "sudoku-check":
        grid = tadic.parse_sudoku(_read_source(args.file), args.t, args.m)
        ans = tadic.validate_sudoku(grid)
        out.emit(json.dumps({"valid": ans}) if fmt == "json"
                 else ("valid" if ans else "invalid"))
        return EXIT_OK if ans else EXIT_FALSE

    if cmd == "embed-check":
        x, y = perm.parse_perm(args.x), perm.parse_perm(args.y)
        iv = bruhat.interval(x, y)
        eg = embed.geometric_embedding(iv)
        ans = embed.check_good_embedding(eg, tol=args.tol)
        out.emit(json.dumps({"good": ans}) if fmt == "json"
                 else ("good" if ans else "bad"))
        return EXIT_OK if ans else EXIT_FALSE

    if cmd == "funsearch-pair":
        if args.start3:
            pair = census.funsearch_pair_start3(args.n)
        else:
            pair = census.funsearch_pair(args.n, b_start=args.b_start)
        x, y = pair
        comparable = bruhat.bruhat_leq(x, y)
        d = klpoly.d_invariant(x, y) if comparable else None
        if fmt == "json":
            out.emit(json.dumps({
                "n": args.n, "x": _fmt_perm(x), "y": _fmt_perm(y),
                "lx": perm.length(x), "ly": perm.length(y),
                "comparable": comparable, "d": d}))
        else:
            out.emit(_fmt_perm(x))
            out.emit(_fmt_perm(y))
        return EXIT_OK

    if cmd == "baseline":
        x, y = census.baseline_n12()
        d = klpoly.d_invariant(x, y)
        if fmt == "json":
            out.emit(json.dumps({"x": _fmt_perm(x), "y": _fmt_perm(y),
                                 "d": d}))
        else:
            out.emit(_fmt_perm(x))
            out.emit(_fmt_perm(y))
            out.emit(str(d))
        return EXIT_OK

    if cmd == "search":
        state = census.local_search_d(args.n, seed=args.seed,
                                      budget=args.budget)
        if fmt == "json":
            out.emit(json.dumps({
                "n": args.n, "seed": state.seed, "budget": state.budget,
                "score": state.score, "x": _fmt_perm(state.x),
                "y": _fmt_perm(state.y), "evaluations": state.evaluations,
                "steps": state.steps}))
        else:
            out.emit(str(state.score))
            out.emit(_fmt_perm(state.x))
            out.emit(_fmt_perm(state.y))
        return EXIT_OK

    if cmd == "verify-theorem":
        mode = args.mode or ("full" if args.m <= 3 else "sampled")
        report = census.verify_main_theorem(args.m, mode=mode,
                                            sample_size=args.samples,
                                            seed=args.seed)
        if fmt == "json":
            out.emit(json.dumps({
                "m": report.m, "mode": report.mode, "passed": report.passed,
                "counts": report.counts, "failures": report.failures}))
        else:
            out.emit(f"m={report.m} mode={report.mode} "
                     f"{'PASS' if report.passed else 'FAIL'}")
            for key, val in report.counts.items():
                out.emit(f"  {key}: {val}")
            for msg in report.failures:
                out.emit(f"  failure: {msg}")
        return EXIT_OK if report.passed else EXIT_FALSE

    raise ValueError(f"unknown command {cmd!r}")


def main() -> None:
    sys.exit(run())
