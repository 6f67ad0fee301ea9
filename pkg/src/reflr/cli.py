"""
Command-line front end.

Exit status: 0 on success, 1 on saturation violations or engine disagreement,
2 on usage errors.  Permutations compose as (u*v)(i) = u(v(i)); they are
given in one-line notation, e.g. ``--w 2,4,1,3`` or ``--w 2413``.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from itertools import islice

from . import crystal, hive, polyring, refined
from .partitions import as_partition, partitions_in_box, partitions_of
from .permutations import Permutation, all_permutations, longest_element


class UsageError(Exception):
    pass


def _partition(text: str, n: int, name: str):
    try:
        parts = [int(t) for t in text.split(",") if t.strip()] if text.strip() else []
        return as_partition(parts, n)
    except ValueError as exc:
        raise UsageError(f"--{name}: {exc}") from None


def _perm(text: str, n: int) -> Permutation:
    try:
        w = Permutation.parse(text)
    except ValueError as exc:
        raise UsageError(f"--w: {exc}") from None
    if w.n != n:
        raise UsageError(f"--w: {w} is not in S_{n}")
    return w


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def _triple(args):
    return (_partition(args.lam, args.n, "lambda"), _partition(args.mu, args.n, "mu"),
            _partition(args.nu, args.n, "nu"))


def cmd_compute(args, out) -> int:
    lam, mu, nu = _triple(args)
    w = _perm(args.w, args.n)
    engines = refined.ENGINES if args.engine == "all" else (args.engine,)
    payload = {"params": {"n": args.n, "lam": list(lam), "mu": list(mu), "nu": list(nu), "w": str(w)}}
    if sum(lam) + sum(mu) != sum(nu):
        payload["note"] = "|lambda| + |mu| != |nu|"
    try:
        report = refined.refined_lr(lam, mu, nu, w, engines)
    except refined.EngineDisagreement as exc:
        payload.update(exc.report.to_dict())
        payload["reproducer"] = exc.bundle
        out.write(_dumps(payload) + "\n")
        return 1
    payload.update(report.to_dict())
    if args.timings:
        payload["timings"] = report.timings
    if args.dump_poly:
        payload["key_polynomial"] = json.loads(polyring.demazure_char(w, mu).to_json())
    out.write(_dumps(payload) + "\n")
    return 0


def cmd_verify(args, out) -> int:
    """Cross-check all engines (and the oracle at w0) over a small grid."""
    n = args.n
    w0 = longest_element(n)
    checked = mismatches = 0
    failures = []
    for lam in partitions_in_box(n, args.max_part):
        for mu in partitions_in_box(n, args.max_part):
            for nu in partitions_of(sum(lam) + sum(mu), n):
                oracle = refined.classical_lr_oracle(lam, mu, nu)
                for w in all_permutations(n):
                    checked += 1
                    try:
                        value = refined.refined_lr(lam, mu, nu, w, refined.ENGINES).value
                    except refined.EngineDisagreement as exc:
                        mismatches += 1
                        failures.append(exc.bundle)
                        continue
                    if w == w0 and value != oracle:
                        mismatches += 1
                        failures.append({"lam": lam, "mu": mu, "nu": nu, "w": str(w),
                                         "value": value, "oracle": oracle})
    out.write(_dumps({"n": n, "max_part": args.max_part, "instances": checked,
                      "mismatches": mismatches, "failures": failures[:20]}) + "\n")
    return 1 if mismatches else 0


def cmd_bruhat_table(args, out) -> int:
    lam, mu, nu = _triple(args)
    table = refined.bruhat_value_table(lam, mu, nu, args.engine)
    if args.format == "dot":
        out.write(table.to_dot())
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["w", "length", "c"])
        for w in sorted(table.values, key=lambda u: (u.length(), u.images)):
            writer.writerow([str(w), w.length(), table.values[w]])
        out.write(buf.getvalue())
    else:
        out.write(_dumps(table.to_dict()) + "\n")
    return 0 if table.monotone and table.coset_constant else 1


def cmd_saturation_scan(args, out) -> int:
    report = refined.saturation_scan(args.n, args.max_part, args.kmax, args.cls, jobs=args.jobs)
    if args.format == "ndjson":
        for v in report.violations:
            out.write(_dumps(v.to_dict()) + "\n")
        summary = report.to_dict()
        summary.pop("violations")
        summary["violation_count"] = len(report.violations)
        out.write(_dumps(summary) + "\n")
    else:
        out.write(_dumps(report.to_dict()) + "\n")
    return 1 if report.violations else 0


def _parse_face(text: str, n: int) -> hive.KoganFace:
    pairs = []
    for chunk in text.split(";"):
        if chunk.strip():
            i, j = (int(t) for t in chunk.split(","))
            pairs.append((i, j))
    try:
        return hive.KoganFace(n, frozenset(pairs))
    except ValueError as exc:
        raise UsageError(f"--face: {exc}") from None


def cmd_hive_points(args, out) -> int:
    lam, mu, nu = _triple(args)
    if args.face is not None:
        points = hive.iter_kogan_hives(lam, mu, nu, _parse_face(args.face, args.n))
    elif args.w is not None:
        w = _perm(args.w, args.n)
        points = iter(sorted(hive.kogan_hives_for(lam, mu, nu, longest_element(args.n) * w)))
    else:
        points = hive.iter_kogan_hives(lam, mu, nu)
    if args.limit is not None:
        points = islice(points, args.limit)
    for h in points:
        out.write(h.to_json() + "\n")
    return 0


def cmd_crystal_dump(args, out) -> int:
    mu = _partition(args.mu, args.n, "mu")
    w = _perm(args.w, args.n)
    B = crystal.demazure_crystal(mu, w, opposite=args.opposite)
    words = sorted(B.elements)
    for u in words:
        T = crystal.tableau_from_word(u, mu)
        word = "".join(map(str, u)) if args.n <= 9 else ",".join(map(str, u))
        out.write(_dumps({"word": word, "tableau": [list(r) for r in T],
                          "weight": list(crystal.weight(u, args.n))}) + "\n")
    return 0


def cmd_symmetry_check(args, out) -> int:
    lam, mu, nu = _triple(args)
    w = _perm(args.w, args.n)
    result = refined.symmetry_check(lam, mu, nu, w)
    out.write(_dumps(result) + "\n")
    return 0 if result["bijective"] else 1


def _add_triple(p, nu=True):
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lambda", dest="lam", required=True, help="comma-separated, e.g. 2,1")
    p.add_argument("--mu", required=True)
    if nu:
        p.add_argument("--nu", required=True)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="reflr",
        description="Refined Littlewood-Richardson coefficients c_{lam mu}^nu(w).",
        epilog="Permutations are one-line (w(i) is the i-th entry) and compose as (u*v)(i) = u(v(i)).",
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="one coefficient, optionally by every engine")
    _add_triple(p)
    p.add_argument("--w", required=True)
    p.add_argument("--engine", choices=refined.ENGINES + ("all",), default=refined.DEFAULT_ENGINE)
    p.add_argument("--format", choices=["json"], default="json")
    p.add_argument("--timings", action="store_true", help="include per-engine timings (not byte-stable)")
    p.add_argument("--dump-poly", action="store_true", help="include the key polynomial as [exponent, coeff] pairs")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify", help="cross-check the engines over a grid")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-part", type=int, default=2)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bruhat-table", help="c(w) for all w in S_n with Bruhat covers")
    _add_triple(p)
    p.add_argument("--engine", choices=refined.ENGINES, default=refined.DEFAULT_ENGINE)
    p.add_argument("--format", choices=["json", "csv", "dot"], default="json")
    p.set_defaults(func=cmd_bruhat_table)

    p = sub.add_parser("saturation-scan", help="search for saturation failures")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-part", type=int, required=True)
    p.add_argument("--kmax", type=int, default=2)
    p.add_argument("--class", dest="cls", choices=refined.CLASS_FILTERS, default="all")
    p.add_argument("--jobs", type=int, default=None, help="worker processes (default: $REFLR_JOBS or 1)")
    p.add_argument("--format", choices=["json", "ndjson"], default="json")
    p.set_defaults(func=cmd_saturation_scan)

    p = sub.add_parser("hive-points", help="stream integer hives as NDJSON")
    _add_triple(p)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--w", help="all hives on the faces with varpi(F) = w0 w")
    group.add_argument("--face", help="flat rhombi as 'i,j;i,j;...'")
    p.add_argument("--limit", type=int)
    p.add_argument("--format", choices=["ndjson"], default="ndjson")
    p.set_defaults(func=cmd_hive_points)

    p = sub.add_parser("crystal-dump", help="elements of a Demazure crystal as NDJSON")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--w", required=True)
    p.add_argument("--opposite", action="store_true")
    p.add_argument("--format", choices=["ndjson"], default="ndjson")
    p.set_defaults(func=cmd_crystal_dump)

    p = sub.add_parser("symmetry-check", help="check the hive bijection for c(w) = c'(w^-1)")
    _add_triple(p)
    p.add_argument("--w", required=True)
    p.set_defaults(func=cmd_symmetry_check)

    for action in sub.choices.values():
        action.add_argument("-o", "--output", help="write to this file instead of stdout")
    return parser


def run(argv=None, out=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    if out is None:
        out = open(args.output, "w") if args.output else sys.stdout
    try:
        return args.func(args, out)
    except UsageError as exc:
        sys.stderr.write(f"reflr: error: {exc}\n")
        return 2
    finally:
        if args.output and out is not sys.stdout:
            out.close()


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
