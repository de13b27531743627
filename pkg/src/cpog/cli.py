"""Command line interface.

  cpog describe Z4xZ2
  cpog degrees D6 --method both
  cpog spectrum Z2xZ3 --method both
  cpog export D3 --format json -o d3.json
  cpog verify spectra --max-graph 750
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from cpog.closed_forms import (
    NoClosedFormError,
    Spectrum,
    closed_form_spectrum,
    degree_abelian,
    degree_dihedral,
)
from cpog.config import DEFAULT_CAP, DEFAULT_CHARPOLY_CAP, SweepBounds
from cpog.graph import build_graph, exact_spectrum, export_graph, laplacian
from cpog.groups import (
    AbelianSpec,
    CapExceededError,
    DihedralSpec,
    GroupSpecError,
    canonicalize_abelian,
    order_profile,
    parse_group_spec,
)
from cpog.linalg import certify_spectrum, format_poly
from cpog import verify as sweeps


def _cap(args) -> int:
    return getattr(args, "cap", DEFAULT_CAP)


def _spec(args):
    return parse_group_spec(args.group, cap=_cap(args))


def cmd_describe(args) -> int:
    spec = _spec(args)
    print(f"group:     {spec}")
    print(f"order:     {spec.order}")
    if isinstance(spec, AbelianSpec):
        canon = canonicalize_abelian(spec)
        print(f"canonical: {canon}")
        for p in canon.primes:
            print(f"  p={p}: exponents {list(canon.exponents(p))}, "
                  f"|G_p|={canon.sylow_order(p)}, rank {canon.rank(p)}")
    else:
        canon = canonicalize_abelian(AbelianSpec((spec.n,)))
        print(f"dihedral:  rotations Z{spec.n} = {canon}, {spec.n} reflections")
    print("order profile:")
    print(f"  {'order':>6} {'count':>6}")
    for o, c in order_profile(spec, cap=_cap(args)).items():
        print(f"  {o:>6} {c:>6}")
    return 0


def _formula_degree(spec, order: int) -> int:
    if isinstance(spec, DihedralSpec):
        return degree_dihedral(spec.n, order)
    return degree_abelian(canonicalize_abelian(spec), order)


def cmd_degrees(args) -> int:
    spec = _spec(args)
    graph = build_graph(spec, cap=_cap(args))
    by_order: dict[int, list[int]] = {}
    for (_, o), d in zip(graph.vertices, graph.degrees.tolist()):
        by_order.setdefault(o, []).append(d)
    method = args.method
    header = f"{'order':>6} {'count':>6}"
    if method in ("formula", "both"):
        header += f" {'formula':>8}"
    if method in ("brute", "both"):
        header += f" {'brute':>8}"
    if method == "both":
        header += "  match"
    print(f"co-prime order graph of {spec}: {graph.n} vertices, {graph.edge_count} edges")
    print(header)
    mismatches = 0
    for o in sorted(by_order):
        degs = sorted(set(by_order[o]))
        brute = "|".join(str(d) for d in degs)
        row = f"{o:>6} {len(by_order[o]):>6}"
        if method in ("formula", "both"):
            formula = _formula_degree(spec, o)
            row += f" {formula:>8}"
        if method in ("brute", "both"):
            row += f" {brute:>8}"
        if method == "both":
            ok = degs == [formula]
            mismatches += not ok
            row += "  match" if ok else "  MISMATCH"
        print(row)
    return 1 if mismatches else 0


def _render_pairs(pairs) -> str:
    return "{" + ", ".join(f"{lam}:{m}" for lam, m in pairs) + "}"


def cmd_spectrum(args) -> int:
    spec = _spec(args)
    method = args.method
    status = 0
    claimed = None
    if method in ("closed-form", "both"):
        fam, claimed = closed_form_spectrum(spec)
        print(f"closed form ({fam.name}, parameters {fam.params}): {claimed}")
    if method == "closed-form":
        return 0
    graph = build_graph(spec, cap=_cap(args))
    L = laplacian(graph)
    if method in ("exact", "both"):
        roots, remainder = exact_spectrum(graph, reduce=not args.no_reduce, charpoly_cap=args.charpoly_cap)
        print(f"exact: {_render_pairs(roots)}")
        if len(remainder) > 1:
            print(f"  non-integral part: roots of {format_poly(remainder)}")
        elif method == "exact":
            claimed = Spectrum(tuple(roots))
    if claimed is not None:
        cert = certify_spectrum(L, claimed)
        print(cert.render())
        status = 0 if cert.passed else 1
    return status


def cmd_export(args) -> int:
    spec = _spec(args)
    graph = build_graph(spec, cap=_cap(args))
    extra = None
    if args.with_spectrum and args.format == "json":
        try:
            _, claimed = closed_form_spectrum(spec)
        except NoClosedFormError:
            extra = {"closed_form": None, "certified": None}
        else:
            extra = {
                "closed_form": [list(p) for p in claimed.pairs],
                "certified": certify_spectrum(laplacian(graph), claimed).passed,
            }
    data = export_graph(graph, args.format, spectrum=extra)
    if args.output == "-":
        sys.stdout.buffer.write(data)
    else:
        Path(args.output).write_bytes(data)
        print(f"wrote {len(data)} bytes to {args.output}")
    return 0


def cmd_verify(args) -> int:
    cap = _cap(args)
    checks = {
        "degrees-abelian": (args.max_order, args.max_order),
        "degrees-dihedral": (args.max_n, 2 * args.max_n),
        "spectra": (args.max_graph, args.max_graph),
        "block": (args.max_pq, 2 * args.max_pq),
    }
    targets = list(sweeps.TARGETS) if args.target == "all" else [args.target]
    for t in targets:
        if checks[t][1] > cap:
            raise CapExceededError(f"bound for {t} needs graphs of {checks[t][1]} vertices > cap {cap}")
    runners = {
        "degrees-abelian": lambda: sweeps.verify_degrees_abelian(args.max_order, args.jobs),
        "degrees-dihedral": lambda: sweeps.verify_degrees_dihedral(args.max_n, args.jobs),
        "spectra": lambda: sweeps.verify_spectra(args.max_graph, args.jobs),
        "block": lambda: sweeps.verify_block(args.max_pq, args.jobs),
    }
    status = 0
    for t in targets:
        report = runners[t]()
        print(report.render())
        status |= 0 if report.passed else 1
    return status


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cap", type=int, default=argparse.SUPPRESS,
                        help=f"maximum group order (default {DEFAULT_CAP})")
    parser = argparse.ArgumentParser(prog="cpog", parents=[common],
                                     description="Co-prime order graphs of abelian and dihedral groups.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("describe", parents=[common], help="order, canonical form, order profile")
    p.add_argument("group")
    p.set_defaults(func=cmd_describe)

    p = sub.add_parser("degrees", parents=[common], help="degree table, closed form vs brute force")
    p.add_argument("group")
    p.add_argument("--method", choices=("formula", "brute", "both"), default="both")
    p.set_defaults(func=cmd_degrees)

    p = sub.add_parser("spectrum", parents=[common], help="Laplacian spectrum and certificate")
    p.add_argument("group")
    p.add_argument("--method", choices=("closed-form", "exact", "both"), default="both")
    p.add_argument("--no-reduce", action="store_true",
                   help="exact method: characteristic polynomial of the full Laplacian")
    p.add_argument("--charpoly-cap", type=int, default=DEFAULT_CHARPOLY_CAP)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("export", parents=[common], help="write the graph as DOT, CSV or JSON")
    p.add_argument("group")
    p.add_argument("--format", choices=("dot", "csv", "json"), required=True)
    p.add_argument("-o", "--output", required=True, help="output path, '-' for stdout")
    p.add_argument("--with-spectrum", action="store_true",
                   help="json: add the closed-form spectrum and its certificate verdict")
    p.set_defaults(func=cmd_export)

    b = SweepBounds()
    p = sub.add_parser("verify", parents=[common], help="sweep a closed form against its oracle")
    p.add_argument("target", choices=sweeps.TARGETS + ("all",))
    p.add_argument("--max-order", type=int, default=b.max_order)
    p.add_argument("--max-n", type=int, default=b.max_n)
    p.add_argument("--max-graph", type=int, default=b.max_graph)
    p.add_argument("--max-pq", type=int, default=b.max_pq)
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GroupSpecError, CapExceededError, NoClosedFormError, ValueError, OSError) as exc:
        print(f"cpog: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
