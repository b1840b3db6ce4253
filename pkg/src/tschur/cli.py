"""Command-line driver: RSK exploration, exact/sampled first-row
distributions, saddle-point constants, Tracy-Widom values, the convergence
experiment, and the verification suite.

Outputs are plain CSV (decimal point, 17 significant digits, LF endings)
with a `#`-prefixed metadata header echoing the resolved configuration, or
JSON where a single record is more natural.  Identical configuration and
seed produce byte-identical files.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

import numpy as np

from . import __version__
from .measure import (
    MeasureParams,
    empirical_cdf,
    lambda1_cdf_exact,
    sample_lambda1,
)
from .rsk import PMatrix, biword_from_matrix, longest_increasing, rsk


def _fmt(x):
    """One CSV cell: floats at 17 significant digits, everything else str."""
    if isinstance(x, float):
        return format(x, ".17g")
    return str(x)


def _write_rows(stream, meta, header, rows):
    stream.write(f"# tschur {__version__}\n")
    for key in sorted(meta):
        stream.write(f"# {key} = {meta[key]}\n")
    stream.write(",".join(header) + "\n")
    for row in rows:
        stream.write(",".join(_fmt(v) for v in row) + "\n")


def _open_out(path):
    if path is None or path == "-":
        return sys.stdout, False
    return open(path, "w", newline="\n"), True


def _emit(path, meta, header, rows):
    stream, close = _open_out(path)
    try:
        _write_rows(stream, meta, header, rows)
    finally:
        if close:
            stream.close()


def _parse_rational(text):
    """Exact scalar from '2/5', '0.4', or '-1' (decimal strings are exact)."""
    return Fraction(text)


def _parse_grid(text, cast=float):
    return [cast(tok) for tok in text.replace(",", " ").split()]


def _measure_params(args):
    return MeasureParams(args.m, args.n, _parse_rational(args.alpha), _parse_rational(args.t))


def cmd_rsk(args):
    if args.matrix is not None:
        text = args.matrix
    elif args.matrix_file is not None:
        with open(args.matrix_file) as fh:
            text = fh.read()
    else:
        text = sys.stdin.read()
    try:
        a = PMatrix.from_text(text)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    w = biword_from_matrix(a)
    s, u = rsk(a)
    lam = s.shape()
    ell = longest_increasing(w)
    print("matrix:")
    print(a.to_text())
    print("biword:")
    print("  " + " ".join(str(x) for x in w.uppers()))
    print("  " + " ".join(str(x) for x in w.lowers()))
    print("insertion tableau S:")
    for row in s.rows:
        print("  " + " ".join(str(e) for e in row))
    print("recording tableau U:")
    for row in u.rows:
        print("  " + " ".join(str(v) for v in row))
    print(f"shape: {tuple(lam.parts)}")
    print(f"lambda_1 = {lam.first_row()}   lis(w) = {ell}")
    if ell != lam.first_row():
        print("error: longest increasing subsequence != lambda_1", file=sys.stderr)
        return 1
    return 0


def cmd_dist(args):
    params = _measure_params(args)
    meta = {
        "command": "dist", "m": args.m, "n": args.n, "alpha": args.alpha,
        "t": args.t, "h_max": args.h_max, "mode": args.mode,
    }
    rows = []
    for h in range(args.h_max + 1):
        val = lambda1_cdf_exact(params, h, mode=args.mode)
        rows.append((h, float(val)))
    if args.format == "json":
        stream, close = _open_out(args.out)
        try:
            json.dump({"meta": meta, "cdf": {h: v for h, v in rows}}, stream, indent=2)
            stream.write("\n")
        finally:
            if close:
                stream.close()
    else:
        _emit(args.out, meta, ("h", "cdf"), rows)
    return 0


def cmd_sample(args):
    params = _measure_params(args)
    vals = sample_lambda1(params, args.samples, args.seed)
    h_max = int(vals.max()) + 1
    grid = np.arange(h_max + 1)
    counts = np.bincount(vals, minlength=h_max + 1)
    ecdf = empirical_cdf(vals, grid)
    meta = {
        "command": "sample", "m": args.m, "n": args.n, "alpha": args.alpha,
        "t": args.t, "samples": args.samples, "seed": args.seed,
    }
    rows = [(int(h), int(counts[h]), float(ecdf[i])) for i, h in enumerate(grid)]
    _emit(args.out, meta, ("h", "count", "empirical_cdf"), rows)
    return 0


def cmd_constants(args):
    from .asymptotics import constants

    alpha = float(_parse_rational(args.alpha))
    tau = float(_parse_rational(args.tau))
    t = float(_parse_rational(args.t))
    data = constants(alpha, tau, t)
    record = {
        "alpha": alpha, "tau": tau, "t": t,
        "z0": data.z0, "c": data.c, "sigma3": data.sigma3, "g": data.g,
        "c1": data.c1, "c2": data.c2,
    }
    stream, close = _open_out(args.out)
    try:
        json.dump(record, stream, indent=2)
        stream.write("\n")
    finally:
        if close:
            stream.close()
    return 0


def cmd_tw(args):
    from .tracy_widom import tw_f2

    grid = sorted(_parse_grid(args.s_grid))
    meta = {"command": "tw", "s_grid": " ".join(_fmt(float(s)) for s in grid)}
    rows = [(float(s), tw_f2(float(s))) for s in grid]
    _emit(args.out, meta, ("s", "f2"), rows)
    return 0


def cmd_converge(args):
    from .asymptotics import convergence_experiment

    alpha = float(_parse_rational(args.alpha))
    tau = float(_parse_rational(args.tau))
    t = float(_parse_rational(args.t))
    n_list = sorted(_parse_grid(args.n_list, cast=int))
    s_grid = sorted(_parse_grid(args.s_grid))
    rows, summary = convergence_experiment(
        alpha, tau, t, n_list, s_grid, shift=args.shift
    )
    meta = {
        "command": "converge", "alpha": args.alpha, "tau": args.tau, "t": args.t,
        "n_list": " ".join(map(str, n_list)),
        "s_grid": " ".join(_fmt(float(s)) for s in s_grid),
        "shift": args.shift,
    }
    table = [
        (r["n"], r["s"], r.get("empirical_cdf", ""), r.get("f2", ""), r.get("abs_diff", ""))
        for r in sorted(rows, key=lambda r: (r["n"], r["s"]))
    ]
    if args.out:
        _emit(args.out + "_rows.csv", meta, ("n", "s", "empirical_cdf", "f2", "abs_diff"), table)
        _emit(
            args.out + "_summary.csv", meta, ("n", "sup_distance"),
            [(s["n"], s["sup_distance"]) for s in summary],
        )
    else:
        _write_rows(sys.stdout, meta, ("n", "s", "empirical_cdf", "f2", "abs_diff"), table)
        _write_rows(sys.stdout, meta, ("n", "sup_distance"),
                    [(s["n"], s["sup_distance"]) for s in summary])
    return 0


def _report(label, ok, failures):
    print(f"{'PASS' if ok else 'FAIL'}  {label}")
    if not ok:
        failures.append(label)


def cmd_verify(args):
    """Exact-identity suites: Cauchy, Gessel, Borodin-Okounkov, RSK."""
    import itertools

    from . import numerics
    from .rsk import Entry, inverse_rsk
    from .symfunc import cauchy_check

    full = args.level == "full"
    failures = []

    degree = 8 if not full else 10
    ok = True
    for m in (1, 2, 3):
        for n in (1, 2, 3):
            for t in (Fraction(0), Fraction(-1, 2), Fraction(-1)):
                good, _ = cauchy_check(m, n, t, degree)
                ok = ok and good
    _report(f"cauchy identity degreewise to alpha^{degree}", ok, failures)

    degree = 16 if not full else 24
    ok = True
    for (m, n) in ((2, 2), (3, 2)) if not full else ((2, 2), (3, 2), (3, 3)):
        for t in (Fraction(0), Fraction(-1)):
            for h in range(4):
                lhs = numerics.gessel_lhs_alpha_series(m, n, t, h, degree)
                sym = numerics.symbol_phi_alpha_series(m, n, t, -(max(h, 1) - 1), max(h - 1, 0), degree)
                rhs = numerics.toeplitz_det_series(sym, h)
                ok = ok and (lhs == rhs)
    _report(f"gessel identity degreewise to alpha^{degree}", ok, failures)

    p = MeasureParams(5, 5, Fraction(2, 5), Fraction(-1, 2))
    ok = True
    for h in range(3, 11):
        exact = float(lambda1_cdf_exact(p, h, mode="exact"))
        ok = ok and abs(numerics.bo_cdf(p, h) - exact) < 1e-8
    _report("borodin-okounkov vs exact toeplitz cdf", ok, failures)

    letters = [None] + [Entry(v, mk) for v in (1, 2) for mk in (False, True)]
    ok = True
    for picks in itertools.product(letters, repeat=4):
        a = PMatrix([[picks[0], picks[1]], [picks[2], picks[3]]])
        s, u = rsk(a)
        w = biword_from_matrix(a)
        ok = ok and longest_increasing(w) == s.shape().first_row()
        ok = ok and inverse_rsk(s, u, 2, 2) == a
    _report("rsk round-trip and lis exhaustive 2x2", ok, failures)

    if failures:
        print(f"{len(failures)} suite(s) failed")
        return 1
    print("all suites passed")
    return 0


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="tschur", description="t-Schur measure toolkit"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rsk", help="run marked RSK on a matrix")
    p.add_argument("--matrix", help="matrix text, rows on lines, tokens like 0 2 3'")
    p.add_argument("--matrix-file")
    p.set_defaults(func=cmd_rsk)

    def measure_flags(p):
        p.add_argument("--m", type=int, required=True)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--alpha", required=True, help="rational or decimal in (0,1)")
        p.add_argument("--t", default="0", help="nonpositive rational or decimal")

    p = sub.add_parser("dist", help="exact CDF of lambda_1")
    measure_flags(p)
    p.add_argument("--h-max", type=int, required=True)
    p.add_argument("--mode", choices=("auto", "exact", "float"), default="auto")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out")
    p.set_defaults(func=cmd_dist)

    p = sub.add_parser("sample", help="sample lambda_1 and report its histogram")
    measure_flags(p)
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("constants", help="saddle-point constants as JSON")
    p.add_argument("--alpha", required=True)
    p.add_argument("--tau", required=True)
    p.add_argument("--t", default="0")
    p.add_argument("--out")
    p.set_defaults(func=cmd_constants)

    p = sub.add_parser("tw", help="Tracy-Widom F2 values on a grid")
    p.add_argument("--s-grid", required=True, help="comma/space separated values")
    p.add_argument("--out")
    p.set_defaults(func=cmd_tw)

    p = sub.add_parser("converge", help="scaled-CDF vs F2 convergence experiment")
    p.add_argument("--alpha", required=True)
    p.add_argument("--tau", default="1")
    p.add_argument("--t", default="0")
    p.add_argument("--n-list", required=True)
    p.add_argument("--s-grid", default="-4 -3 -2 -1 0 1 2 3")
    p.add_argument("--shift", type=int, default=-1)
    p.add_argument("--out", help="prefix for _rows.csv and _summary.csv")
    p.set_defaults(func=cmd_converge)

    p = sub.add_parser("verify", help="run the exact-identity suites")
    p.add_argument("--level", choices=("quick", "full"), default="quick")
    p.set_defaults(func=cmd_verify)

    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
