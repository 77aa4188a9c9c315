"""Command-line front door.

Subcommands: check, minor, apex, verify-catalog, search, gen-cacti,
enumerate, asymptotics.  Every subcommand supports --json for machine
output.  Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import __version__
from .asymptotics import asymptotics_report
from .cacti import disconnected_obstructions, generate_Z
from .canonical import canonical_form
from .graphio import load_graph, to_edgelist, to_graph6
from .graphs import ClassId, Graph, is_in_class, make_named, min_apex_size
from .minors import is_minor
from .obstructions import (
    load_catalog,
    search_obstructions,
    verify_catalog,
)
from .series import coefficient_table, solve_system

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2


def _read_graph(spec: str, fmt: str) -> Graph:
    """A graph argument: a named graph, a graph6 literal, or a file path."""
    if os.path.exists(spec):
        return load_graph(spec, fmt)
    try:
        return make_named(spec)
    except ValueError:
        pass
    from .graphio import from_graph6

    try:
        return from_graph6(spec)
    except ValueError:
        raise SystemExit(
            f"error: {spec!r} is neither a file, a graph name, nor graph6"
        ) from None


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        json.dump(payload, sys.stdout, indent=2)
        sys.stdout.write("\n")
    else:
        sys.stdout.write(text + "\n")


def _cls(name: str) -> ClassId:
    try:
        return ClassId(name)
    except ValueError:
        raise SystemExit(f"error: unknown class {name!r}") from None


def cmd_check(args) -> int:
    g = _read_graph(args.graph, args.format)
    cls = _cls(args.cls)
    ok = is_in_class(g, cls)
    _emit(args, {"graph6": to_graph6(g), "class": cls.value, "member": ok}, str(ok).lower())
    return EXIT_OK


def cmd_minor(args) -> int:
    h = _read_graph(args.h, args.format)
    g = _read_graph(args.g, args.format)
    ok = is_minor(h, g)
    _emit(args, {"h": to_graph6(h), "g": to_graph6(g), "is_minor": ok}, str(ok).lower())
    return EXIT_OK


def cmd_apex(args) -> int:
    g = _read_graph(args.graph, args.format)
    cls = _cls(args.cls)
    size = min_apex_size(g, cls)
    _emit(args, {"graph6": to_graph6(g), "class": cls.value, "min_apex_size": size}, str(size))
    return EXIT_OK


def cmd_verify_catalog(args) -> int:
    cat = load_catalog(args.k)
    report = verify_catalog(cat, threads=args.threads)
    _emit(args, report.to_dict(), report.to_text())
    return EXIT_OK if report.all_verified else EXIT_VERIFICATION_FAILED


def cmd_search(args) -> int:
    cat = search_obstructions(
        args.k, args.max_n, connected_only=args.connected_only, threads=args.threads
    )
    payload = {
        "k": cat.k,
        "max_n": args.max_n,
        "complete": cat.claimed_complete,
        "found": [rec.to_dict() for rec in cat.records],
    }
    lines = [f"obstruction search: k={cat.k}, n <= {args.max_n}"]
    for rec in cat.records:
        lines.append(
            f"  {rec.name:8s} n={rec.graph.n:2d} m={rec.graph.num_edges():2d}  {to_graph6(rec.graph)}"
        )
    lines.append(f"{len(cat.records)} obstruction(s) found")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_gen_cacti(args) -> int:
    if args.k > 3 and not args.allow_expensive and args.verify:
        raise SystemExit(
            "error: verification beyond k=3 is expensive; pass --allow-expensive"
        )
    rows = []
    lines = []
    for k in range(1, args.k + 1):
        members = generate_Z(k)
        for b in members:
            rows.append(
                {
                    "k": k,
                    "graph6": to_graph6(b.graph),
                    "n": b.graph.n,
                    "central_vertices": sorted(b.central_vertices),
                }
            )
        lines.append(f"k={k}: {len(members)} butterfly-cacti")
        if args.verify:
            from .obstructions import is_obstruction

            bad = [b for b in members if not is_obstruction(b.graph, k - 1)]
            lines[-1] += "  (all verified)" if not bad else f"  ({len(bad)} FAILED)"
            if bad:
                _emit(args, {"error": "verification failed"}, "\n".join(lines))
                return EXIT_VERIFICATION_FAILED
    if args.disconnected:
        dis = disconnected_obstructions(args.k)
        for g in dis:
            rows.append({"k": args.k, "graph6": to_graph6(g), "n": g.n, "disconnected": True})
        lines.append(f"k={args.k}: {len(dis)} disconnected cactus obstructions")
    _emit(args, {"families": rows}, "\n".join(lines + [r["graph6"] for r in rows]))
    return EXIT_OK


def cmd_enumerate(args) -> int:
    sol = solve_system(max(args.N, args.n))
    table = coefficient_table(sol, args.n)
    if args.json:
        payload = {
            "N": sol.truncation,
            "rows": [{"n": n, "t_n": str(t), "g_n": str(g)} for n, t, g in table],
        }
        _emit(args, payload, "")
    else:
        lines = ["n,t_n,g_n"] + [f"{n},{t},{g}" for n, t, g in table]
        sys.stdout.write("\n".join(lines) + "\n")
    return EXIT_OK


def cmd_asymptotics(args) -> int:
    sol = solve_system(args.N)
    report = asymptotics_report(sol, tol=args.tol)
    text = (
        f"rho      = {report['rho']:.6f}   (1/rho = {report['rho_inv']:.5f})\n"
        f"y0       = {report['y0']:.6f}\n"
        f"h0       = {report['h0']:.6f}\n"
        f"h1       = {report['h1']:.6f}\n"
        f"q1       = {report['q1']:.6f}  "
        f"(X^2 coefficient fit {report['x2_coefficient_fit']:.6f}; "
        f"{'consistent' if report['q1_consistent_with_backsubstitution'] else 'printed formula INCONSISTENT with back-substitution'})\n"
        f"c_T      = {report['c_T']:.5f}\n"
        f"c_G      = {report['c_G']:.5f}\n"
        f"Z1 ident = " + ", ".join(f"N={k}: {v:.2e}" for k, v in report["z1_residuals"].items())
    )
    _emit(args, report, text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="apexobs",
        description="minor-obstructions of k-apex sub-unicyclic graphs: "
        "exact verification, search, generation, and enumeration",
    )
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, timing=True):
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.add_argument(
            "--format", choices=("g6", "edgelist"), default="g6", help="graph file format"
        )
        if timing:
            sp.add_argument("--timing", action="store_true", help="print elapsed time to stderr")

    sp = sub.add_parser("check", help="class membership of a graph")
    sp.add_argument("--class", dest="cls", required=True,
                    choices=[c.value for c in ClassId])
    sp.add_argument("graph", help="file, graph name (Z, K4, 2K3, ...), or graph6")
    common(sp)
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("minor", help="is h a minor of g?")
    sp.add_argument("h")
    sp.add_argument("g")
    common(sp)
    sp.set_defaults(func=cmd_minor)

    sp = sub.add_parser("apex", help="minimum vertex deletions into a class")
    sp.add_argument("--class", dest="cls", default=ClassId.SUB_UNICYCLIC.value,
                    choices=[c.value for c in ClassId])
    sp.add_argument("graph")
    common(sp)
    sp.set_defaults(func=cmd_apex)

    sp = sub.add_parser("verify-catalog", help="re-verify a shipped obstruction catalog")
    sp.add_argument("--k", type=int, default=1)
    sp.add_argument("--threads", type=int, default=os.cpu_count() or 1)
    common(sp)
    sp.set_defaults(func=cmd_verify_catalog)

    sp = sub.add_parser("search", help="exhaustive obstruction search up to a size")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--max-n", type=int, required=True)
    sp.add_argument("--connected-only", action="store_true")
    sp.add_argument("--threads", type=int, default=1)
    common(sp)
    sp.set_defaults(func=cmd_search)

    sp = sub.add_parser("gen-cacti", help="generate butterfly-cacti families")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--verify", action="store_true", help="check obstruction-hood of every member")
    sp.add_argument("--disconnected", action="store_true",
                    help="also emit the disconnected obstructions at level k")
    sp.add_argument("--allow-expensive", action="store_true")
    sp.add_argument("--threads", type=int, default=1)
    common(sp)
    sp.set_defaults(func=cmd_gen_cacti)

    sp = sub.add_parser("enumerate", help="coefficient table of the counting series")
    sp.add_argument("--n", type=int, default=10, help="last row to print")
    sp.add_argument("--N", type=int, default=64, help="series truncation order")
    common(sp)
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("asymptotics", help="saddle point, expansion, and constants")
    sp.add_argument("--N", type=int, default=256, help="series truncation order")
    sp.add_argument("--tol", type=float, default=1e-13)
    common(sp)
    sp.set_defaults(func=cmd_asymptotics)

    return p


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on usage errors already
        return int(exc.code or 0)
    t0 = time.perf_counter()
    try:
        code = args.func(args)
    except SystemExit as exc:
        if isinstance(exc.code, str):
            sys.stderr.write(exc.code + "\n")
            return EXIT_USAGE
        return int(exc.code or 0)
    except FileNotFoundError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    if getattr(args, "timing", False):
        sys.stderr.write(f"elapsed: {time.perf_counter() - t0:.3f}s\n")
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
