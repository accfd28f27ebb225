"""Command-line front end: ``matroid-ring <subcommand> ...``.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
"""
from __future__ import annotations

import argparse
import contextlib
import sys

from .errors import MatroidError
from .invariants import g_invariant, tutte
from .io import read_matroids, serialize_matroid
from .linalg import bareiss_det
from .nested import count_nested, enumerate_nested
from .ring import decompose_to_nested, pairing_matrix, product
from .verify import run_verify


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(2, f"{self.prog}: error: {message}\n")


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("-i", "--input", default=argparse.SUPPRESS, help="input file (default stdin)")
    p.add_argument("-o", "--output", default=argparse.SUPPRESS, help="output file (default stdout)")
    p.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    p.add_argument("--samples", type=int, default=argparse.SUPPRESS)
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = _Parser(prog="matroid-ring", parents=[common],
                     description="Intersection ring of matroids on a labeled ground set.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("decompose", parents=[common], help="write M in the nested basis")
    p.add_argument("file", nargs="?")
    p = sub.add_parser("product", parents=[common], help="ring product of two matroids")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p = sub.add_parser("pairing", parents=[common], help="pairing matrix on nested bases")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--det-only", action="store_true")
    for name, text in (("tutte", "Tutte polynomial"), ("ginv", "G-invariant")):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("file", nargs="?")
    p = sub.add_parser("count-nested", parents=[common], help="number of nested matroids")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int)
    p = sub.add_parser("enumerate-nested", parents=[common], help="list nested matroids")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p = sub.add_parser("verify", parents=[common], help="run the property suite")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--exhaustive", action="store_true")
    return parser


@contextlib.contextmanager
def _open_in(path):
    if path in (None, "-"):
        yield sys.stdin
    else:
        with open(path, encoding="utf-8") as fh:
            yield fh


def _matroids(path):
    with _open_in(path) as fh:
        return list(read_matroids(fh))


def _one(path):
    Ms = _matroids(path)
    if not Ms:
        raise MatroidError(f"no matroid in {path or 'stdin'}")
    return Ms[0]


def _dispatch(args, out) -> int:
    src = getattr(args, "file", None) or getattr(args, "input", None)
    cmd = args.command
    if cmd == "decompose":
        for M in _matroids(src):
            for c, N in decompose_to_nested(M):
                print(f"{c}\t{serialize_matroid(N)}", file=out)
    elif cmd == "product":
        P = product(_one(args.file_a), _one(args.file_b))
        print("0" if P is None else serialize_matroid(P), file=out)
    elif cmd == "pairing":
        P = pairing_matrix(args.r, args.n)
        if not args.det_only:
            for row in P:
                print(" ".join(str(int(v)) for v in row), file=out)
        print(f"det={bareiss_det(P)}", file=out)
    elif cmd == "tutte":
        for M in _matroids(src):
            print("\n".join(tutte(M).lines()) or "0", file=out)
    elif cmd == "ginv":
        for M in _matroids(src):
            print("\n".join(g_invariant(M).lines()) or "0", file=out)
    elif cmd == "count-nested":
        ranks = [args.r] if args.r is not None else range(1, args.n + 1)
        for r in ranks:
            print(f"{r}\t{count_nested(r, args.n)}", file=out)
    elif cmd == "enumerate-nested":
        for N in enumerate_nested(args.r, args.n):
            print(serialize_matroid(N), file=out)
    elif cmd == "verify":
        mode = "exhaustive" if args.exhaustive else "sampled"
        samples = getattr(args, "samples", 100)
        seed = getattr(args, "seed", 0)
        report = run_verify(args.n, mode, samples, seed)
        print("\n".join(report.lines()), file=out)
        return 0 if report.ok else 1
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    target = getattr(args, "output", None)
    try:
        with (open(target, "w", encoding="utf-8") if target else contextlib.nullcontext(sys.stdout)) as out:
            return _dispatch(args, out)
    except (MatroidError, OSError) as exc:
        print(f"matroid-ring: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
