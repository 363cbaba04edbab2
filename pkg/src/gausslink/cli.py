"""Command-line front end: ``gausslink <subcommand> ...``.

Exit codes: 0 ok, 1 verification failure, 2 usage or parse error,
3 geometric error (intersecting components, touching lattice copies).
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from pathlib import Path

import numpy as np

from .closed_form import at_term, lk_from_invariants, lk_limit_d0, lk_segments, lk_simple_orthogonal
from .geom import Segment
from .invariants import SegmentPairInvariants, extract_invariants
from .linkfile import LinkFileError, read_link, write_link
from .links import EXPECTED_LK, LinkIntersectionError, builtin_links, lk_link
from .periodic import LatticeSpec, convergence_scan, reference_lattice
from .quadrature import QuadratureConfig, oracle_values
from .sampling import make_rng, random_skew_pair

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_GEOMETRY = 0, 1, 2, 3


class UsageError(Exception):
    pass


def fmt(x: float) -> str:
    """17 significant digits; ``float(fmt(x)) == x`` for every finite x."""
    return f"{x:.16e}"


def _writer(out):
    return csv.writer(out, delimiter=",", lineterminator="\n")


def _open_out(path):
    return open(path, "w", newline="") if path else sys.stdout


# lk

def cmd_lk(args) -> int:
    if args.builtin:
        links = builtin_links()
        if args.builtin not in links:
            raise UsageError(f"unknown builtin {args.builtin!r}; choose from {', '.join(links)}")
        link = links[args.builtin]
    elif args.path:
        link = read_link(args.path)
    else:
        raise UsageError("give a link file or --builtin NAME")
    report = lk_link(link)
    print(f"lk_total = {fmt(report.lk_total)}")
    print(f"pairs = {report.pair_count}")
    print("branches = " + ", ".join(f"{k}:{v}" for k, v in report.branch_histogram.items()))
    print(f"min_distance = {fmt(report.min_distance)}")
    for w in report.warnings:
        print(f"warning: {w}")
    return EXIT_OK


# invariants

def _pair_from_args(args):
    if args.points is not None:
        if len(args.points) != 12:
            raise UsageError("--points takes 12 numbers: A1 B1 A2 B2, three coordinates each")
        p = np.array(args.points, dtype=float).reshape(4, 3)
        return Segment(p[0], p[1]), Segment(p[2], p[3])
    if not args.path:
        raise UsageError("give a link file or --points")
    link = read_link(args.path)
    (v1, _), (v2, _) = link.components
    if len(v1) != 2 or len(v2) != 2:
        raise UsageError("the invariants file must hold two components of 2 vertices each")
    return Segment(v1[0], v1[1]), Segment(v2[0], v2[1])


def cmd_invariants(args) -> int:
    s1, s2 = _pair_from_args(args)
    inv = extract_invariants(s1, s2)
    for name in ("alpha", "d", "a1", "b1", "a2", "b2"):
        print(f"{name} = {fmt(getattr(inv, name))}")
    flags = [f for f in ("parallel", "degenerate1", "degenerate2") if getattr(inv, f)]
    print("flags = " + (",".join(flags) if flags else "none"))
    if not inv.degenerate:
        res = lk_from_invariants(inv)
        print(f"lk = {fmt(res.value)}")
        print(f"branch = {res.branch.value}")
    return EXIT_OK


# verify

def cmd_verify(args) -> int:
    if args.count < 1:
        raise UsageError("--count must be at least 1")
    if not args.tol > 0:
        raise UsageError("--tol must be positive")
    rng = make_rng(args.seed)
    # fixed oracle accuracy: an unattainable --tol should fail, not run forever
    cfg = QuadratureConfig(rel_tol=1e-12, abs_tol=1e-14)
    worst = {"gauss": 0.0, "reduced": 0.0, "single": 0.0}
    out = _open_out(args.out) if args.out else None
    w = _writer(out) if out else None
    if w:
        w.writerow(["index", "closed_form", "gauss", "reduced", "single"])
    try:
        for i in range(args.count):
            s1, s2 = random_skew_pair(rng)
            ref = lk_segments(s1, s2).value
            vals = oracle_values(s1, s2, cfg)
            for key, v in vals.items():
                worst[key] = max(worst[key], abs(v - ref))
            if w:
                w.writerow([i, fmt(ref), *(fmt(vals[k]) for k in worst)])
    finally:
        if out:
            out.close()
    ok = all(v <= args.tol for v in worst.values())
    for key, v in worst.items():
        print(f"max |closed form - {key}| = {v:.3e}")
    print(f"pairs = {args.count}, seed = {args.seed}, tol = {args.tol:g}: {'PASS' if ok else 'FAIL'}")
    return EXIT_OK if ok else EXIT_VERIFY


# table

def _grid(lo, hi, n):
    return np.linspace(lo, hi, n)


def _alpha_grid(n):
    # open interval (0, pi), midpoints of n equal cells
    return (np.arange(n) + 0.5) * math.pi / n


def _nonzero_grid(span, n):
    # symmetric in sign and never 0
    half = (np.arange(n) + 0.5) * span / n
    return np.concatenate([-half[::-1], half])


def table_at_surface(args, w):
    w.writerow(["d", "alpha", "at"])
    a, b = args.a, args.a + args.l
    for d in _nonzero_grid(args.span, args.grid):
        for alpha in _alpha_grid(args.grid):
            w.writerow([fmt(d), fmt(alpha), fmt(at_term(a, b, d, alpha))])
    return True


def table_lk_surface(args, w):
    w.writerow(["a", "d", "lk"])
    for a in _grid(-args.span, args.span, 2 * args.grid + 1):
        for d in _nonzero_grid(args.span, args.grid):
            inv = SegmentPairInvariants(args.alpha, d, a, a + args.l, a, a + args.l)
            w.writerow([fmt(a), fmt(d), fmt(lk_from_invariants(inv).value)])
    return True


def asymptotic_checks(tol: float = 1e-5):
    """Rows ``(check, parameter, lk, expected, abs_error, tolerance)``."""
    half = math.pi / 2
    rows = []

    def add(name, param, inv, expected, t=tol):
        value = lk_from_invariants(inv).value
        rows.append((name, param, value, expected, abs(value - expected), t))

    for d in (1e-6, -1e-6):
        disjoint = SegmentPairInvariants(half, d, 0.5, 1.5, 0.5, 1.5)
        add("d->0 disjoint projections", d, disjoint, lk_limit_d0(disjoint))
        crossing = SegmentPairInvariants(half, d, -1.0, 1.0, -1.0, 1.0)
        add("d->0 crossing projections", d, crossing, lk_limit_d0(crossing))
    for d in (1e6, -1e6):
        add("d->inf", d, SegmentPairInvariants(half, d, -1.0, 1.0, -1.0, 1.0), 0.0)
    for l in (1e-6,):
        add("l->0", l, SegmentPairInvariants(half, 1.0, -l, l, -1.0, 1.0), 0.0)
    for alpha in (1e-8, math.pi - 1e-8):
        add("alpha->0/pi", alpha, SegmentPairInvariants(alpha, 1.0, -1.0, 1.0, -1.0, 1.0), 0.0)
    value = lk_simple_orthogonal(1.0, 1.0, 1.0)
    rows.append(("l1=l2=d", 1.0, value, -1.0 / 24.0, abs(value + 1.0 / 24.0), 1e-14))
    return rows


def table_asymptotics(args, w):
    w.writerow(["check", "parameter", "lk", "expected", "abs_error", "tolerance", "result"])
    ok = True
    for name, param, value, expected, err, t in asymptotic_checks(args.tol):
        passed = err < t
        ok &= passed
        w.writerow([name, fmt(param), fmt(value), fmt(expected), f"{err:.3e}", f"{t:g}",
                    "pass" if passed else "fail"])
    return ok


TABLES = {
    "at-surface": table_at_surface,
    "lk-surface": table_lk_surface,
    "asymptotics": table_asymptotics,
}


def cmd_table(args) -> int:
    if args.grid < 1:
        raise UsageError("--grid must be at least 1")
    if not (args.l > 0 and args.span > 0 and 0 < args.alpha < math.pi):
        raise UsageError("need --l > 0, --span > 0 and 0 < --alpha < pi")
    out = _open_out(args.out)
    try:
        ok = TABLES[args.kind](args, _writer(out))
    finally:
        if out is not sys.stdout:
            out.close()
    return EXIT_OK if ok else EXIT_VERIFY


# periodic

def read_lattice(path, k=None) -> LatticeSpec:
    """Lattice file: ``{"probe": [A, B], "cell": [[A, B], ...], "directions": [v, ...]}``."""
    try:
        doc = json.loads(Path(path).read_text())
        probe = Segment(*doc["probe"])
        cell = tuple(Segment(*s) for s in doc["cell"])
        dirs = np.asarray(doc["directions"], dtype=float)
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise LinkFileError(f"{path}: bad lattice file ({exc})") from exc
    if k is not None:
        if k > len(dirs):
            raise UsageError(f"--k {k} exceeds the {len(dirs)} directions in {path}")
        dirs = dirs[:k]
    return LatticeSpec(probe, cell, dirs)


def cmd_periodic(args) -> int:
    if args.nmax < 0:
        raise UsageError("--nmax must be >= 0")
    if args.spec:
        spec = read_lattice(args.spec, args.k)
    else:
        k = 1 if args.k is None else args.k
        if k not in (1, 2, 3):
            raise UsageError(f"--k must be 1, 2 or 3, got {k}")
        spec = reference_lattice(k, step=args.step)
    rows = convergence_scan(spec, args.nmax)
    out = _open_out(args.out)
    try:
        w = _writer(out)
        w.writerow(["n", "partial_lk", "delta", "limit_estimate"])
        for row in rows:
            last = row is rows[-1]
            w.writerow([row.n, fmt(row.partial_lk), fmt(row.delta_vs_previous),
                        fmt(row.partial_lk) if last else ""])
    finally:
        if out is not sys.stdout:
            out.close()
    return EXIT_OK


# builtins

def cmd_builtins(args) -> int:
    links = builtin_links(verbatim=args.verbatim)
    if args.out:
        outdir = Path(args.out)
        outdir.mkdir(parents=True, exist_ok=True)
        for name, link in links.items():
            write_link(link, outdir / f"{name}.json")
            print(outdir / f"{name}.json")
    else:
        for name in links:
            print(f"{name} expected_lk={EXPECTED_LK[name]}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="gausslink", description="Gauss linking numbers of segments and polygonal links."
    )
    sub = p.add_subparsers(dest="command", required=True)

    q = sub.add_parser("lk", help="linking number of a two-component link file")
    q.add_argument("path", nargs="?")
    q.add_argument("--builtin", help="use a built-in link instead of a file")
    q.set_defaults(func=cmd_lk)

    q = sub.add_parser("invariants", help="isometry invariants of one segment pair")
    q.add_argument("path", nargs="?")
    q.add_argument("--points", nargs="+", type=float, metavar="X",
                   help="12 numbers: endpoints A1 B1 A2 B2")
    q.set_defaults(func=cmd_invariants)

    q = sub.add_parser("verify", help="closed form against three quadrature oracles")
    q.add_argument("--count", type=int, default=200)
    q.add_argument("--seed", type=int, default=42)
    q.add_argument("--tol", type=float, default=1e-9)
    q.add_argument("--out", help="per-pair CSV")
    q.set_defaults(func=cmd_verify)

    q = sub.add_parser("table", help="CSV tables for plotting and limit checks")
    q.add_argument("kind", choices=sorted(TABLES))
    q.add_argument("--grid", type=int, default=20, help="points per axis (half-axis for d)")
    q.add_argument("--a", type=float, default=0.0, help="start coordinate a (b = a + l)")
    q.add_argument("--l", type=float, default=1.0, help="segment length")
    q.add_argument("--alpha", type=float, default=math.pi / 2, help="angle for lk-surface")
    q.add_argument("--span", type=float, default=3.0, help="half-width of the d and a ranges")
    q.add_argument("--tol", type=float, default=1e-5, help="limit-check tolerance")
    q.add_argument("--out")
    q.set_defaults(func=cmd_table)

    q = sub.add_parser("periodic", help="convergence scan of a periodic linking number")
    q.add_argument("--k", type=int, default=None, help="lattice dimension 1, 2 or 3")
    q.add_argument("--nmax", type=int, default=10)
    q.add_argument("--step", type=float, default=4.0, help="lattice step of the default lattice")
    q.add_argument("--spec", help="custom lattice JSON file")
    q.add_argument("--out")
    q.set_defaults(func=cmd_periodic)

    q = sub.add_parser("builtins", help="list or export the built-in links")
    q.add_argument("--out", help="directory for JSON exports")
    q.add_argument("--verbatim", action="store_true", help="uncorrected reference coordinates")
    q.set_defaults(func=cmd_builtins)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, LinkFileError, FileNotFoundError, IsADirectoryError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (LinkIntersectionError, ValueError) as exc:
        print(f"geometric error: {exc}", file=sys.stderr)
        return EXIT_GEOMETRY


if __name__ == "__main__":
    sys.exit(main())
