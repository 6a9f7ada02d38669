"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import sys
from contextlib import contextmanager
from typing import Sequence

from . import bounds as bnd
from .codefile import CodeFormatError, parse_code, write_code
from .construction import build_code, build_flipping_code, is_prime
from .correlation import verify_code
from .grid import canonicalize
from .random_codes import ONE_PER_COLUMN, UNIFORM, TrialConfig, run_experiment

EXIT_OK, EXIT_INVALID, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3

BOUNDS_HEADER = ["n", "lambda", "l_con", "u_det", "u_simplified", "l_ooc", "u_ran"]
EXPERIMENT_HEADER = ["n", "lambda", "ave", "med", "stddev", "max", "l_con", "u_ran"]


class UsageError(Exception):
    pass


def int_range(text: str) -> list[int]:
    """Parse ``7`` or an inclusive range ``2..4``."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo, hi = int(lo), int(hi)
            if lo > hi:
                raise ValueError
            return list(range(lo, hi + 1))
        return [int(text)]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer or a range a..b, got {text!r}") from None


def _mode(text: str) -> str:
    aliases = {"uniform": UNIFORM, "column": ONE_PER_COLUMN, "one_per_column": ONE_PER_COLUMN}
    if text not in aliases:
        raise argparse.ArgumentTypeError(f"mode must be uniform or column, got {text!r}")
    return aliases[text]


def _verify_mode(text: str) -> tuple[str, int]:
    if text == "exhaustive":
        return "exhaustive", 0
    if text.startswith("sample="):
        try:
            k = int(text.split("=", 1)[1])
        except ValueError:
            k = -1
        if k >= 0:
            return "sample", k
    raise argparse.ArgumentTypeError(f"mode must be exhaustive or sample=N, got {text!r}")


@contextmanager
def _output(path: str | None):
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            yield fh


def _read(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    with open(path, "rb") as fh:
        return fh.read()


def _fmt_num(x) -> str:
    if x is None:
        return "n/a"
    if isinstance(x, float):
        return f"{x:.10g}"
    return str(x)


def cmd_gen(args) -> int:
    n, lam = args.n, args.lam
    if not is_prime(n):
        print(f"error: n must be prime, got {n}", file=sys.stderr)
        return EXIT_USAGE
    if not 2 <= lam <= n - 1:
        print(f"error: lambda must lie in 2..{n - 1} for n={n}", file=sys.stderr)
        return EXIT_USAGE
    if args.flipping and n == 2:
        print("error: flipping construction needs an odd prime n", file=sys.stderr)
        return EXIT_USAGE
    stream = (build_flipping_code if args.flipping else build_code)(n, lam, args.limit)
    with _output(args.out) as out:
        emitted = write_code(out, stream.params, stream, stream.count)
    print(f"declared count: {stream.declared}", file=sys.stderr)
    print(f"emitted count: {emitted}", file=sys.stderr)
    if args.flipping:
        for msg in bnd.closed_form_warnings(n, lam, stream.declared):
            print(f"warning: {msg}", file=sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    code = parse_code(_read(args.file))
    mode, k = args.mode
    flipping = True if args.flipping else None
    rep = verify_code(code, mode=mode, k=k, seed=args.seed, flipping=flipping, workers=args.workers)
    print(f"members: {len(code)}")
    print(f"lambda: {code.params.lam}")
    print(f"max_auto: {rep.max_auto}")
    print(f"max_cross: {rep.max_cross}")
    if rep.max_flip is not None:
        print(f"max_flip: {rep.max_flip}")
    if rep.witness is None:
        print("result: valid")
        return EXIT_OK
    wt = rep.witness
    kind = "flip" if wt.flipped else ("auto" if wt.i == wt.j else "cross")
    print(
        f"witness: {kind} i={wt.i} j={wt.j} v=({wt.v.dx},{wt.v.dy}) overlap={wt.overlap}"
    )
    print("result: violation")
    return EXIT_INVALID


def cmd_bounds(args) -> int:
    rows = []
    for n in args.n:
        for lam in args.lam:
            try:
                b = bnd.bound_set(n, lam, w=args.w, epsilon=args.epsilon)
            except (ValueError, OverflowError) as exc:
                raise UsageError(f"n={n}, lambda={lam}: {exc}") from None
            rows.append([n, lam, b.l_con, b.u_det, b.u_simplified, b.l_ooc, b.u_ran])
    _emit_table(BOUNDS_HEADER, rows, args.csv)
    return EXIT_OK


def cmd_experiment(args) -> int:
    rows = []
    for n in args.n:
        for lam in args.lam:
            try:
                cfg = TrialConfig(n, lam, w=args.w, mode=args.mode, trials=args.trials, master_seed=args.seed)
            except ValueError as exc:
                raise UsageError(str(exc)) from None
            st = run_experiment(cfg, workers=args.workers)
            lc = bnd.l_con(n, lam) if is_prime(n) and 2 <= lam < n and cfg.w == n else None
            ur = bnd.u_ran(n, lam) if n >= 2 and 1 <= lam < n else None
            rows.append([n, lam, f"{st.ave:.2f}", f"{st.med:g}", f"{st.stddev:.1f}", st.max, lc, ur])
    _emit_table(EXPERIMENT_HEADER, rows, args.csv)
    return EXIT_OK


def cmd_canon(args) -> int:
    code = parse_code(_read(args.file))
    for i, m in enumerate(code.members):
        pts = " ".join(f"({x},{y})" for x, y in sorted(canonicalize(m.patches)))
        print(f"M {i}: {pts}")
    return EXIT_OK


def _emit_table(header: list[str], rows: list[list], as_csv: bool):
    cells = [[_fmt_num(c) for c in row] for row in rows]
    if as_csv:
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(header)
        w.writerows(cells)
        return
    widths = [max(len(h), *(len(r[k]) for r in cells)) if cells else len(h) for k, h in enumerate(header)]
    print("  ".join(h.rjust(wd) for h, wd in zip(header, widths)))
    for r in cells:
        print("  ".join(c.rjust(wd) for c, wd in zip(r, widths)))


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="geocodes", description="Geometric orthogonal codes.")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="write a polynomial code as a GOC1 file")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--lambda", dest="lam", type=int, required=True)
    g.add_argument("--flipping", action="store_true")
    g.add_argument("--limit", type=int)
    g.add_argument("--out", help="output path (default stdout)")
    g.set_defaults(func=cmd_gen)

    v = sub.add_parser("verify", help="check a GOC1 file's correlations")
    v.add_argument("file")
    v.add_argument("--mode", type=_verify_mode, default=("exhaustive", 0))
    v.add_argument("--flipping", action="store_true", help="check flips even if the header says flipping=0")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--workers", type=int, default=1)
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("bounds", help="tabulate code-size bounds")
    b.add_argument("--n", type=int_range, required=True)
    b.add_argument("--lambda", dest="lam", type=int_range, required=True)
    b.add_argument("--w", type=int)
    b.add_argument("--epsilon", type=float, default=0.5)
    b.add_argument("--csv", action="store_true")
    b.set_defaults(func=cmd_bounds)

    e = sub.add_parser("experiment", help="grow random codes until they fail")
    e.add_argument("--n", type=int_range, required=True)
    e.add_argument("--lambda", dest="lam", type=int_range, required=True)
    e.add_argument("--w", type=int)
    e.add_argument("--trials", type=int, default=100)
    e.add_argument("--mode", type=_mode, default=UNIFORM)
    e.add_argument("--seed", type=int, default=0)
    e.add_argument("--workers", type=int, default=1)
    e.add_argument("--csv", action="store_true")
    e.set_defaults(func=cmd_experiment)

    c = sub.add_parser("canon", help="print canonical translations of each macrobond")
    c.add_argument("file")
    c.set_defaults(func=cmd_canon)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "limit", None) is not None and args.limit < 0:
        parser.error("--limit must be non-negative")
    if getattr(args, "workers", 1) < 1:
        parser.error("--workers must be at least 1")
    if getattr(args, "trials", 1) < 1:
        parser.error("--trials must be at least 1")
    try:
        return args.func(args)
    except CodeFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
