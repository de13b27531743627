"""Run every verification sweep and report pass counts with timings.

    python3 scripts/run_sweeps.py                # default bounds
    python3 scripts/run_sweeps.py --max-graph 300
"""

import argparse
import time

from cpog import verify
from cpog.config import SweepBounds


def main() -> None:
    b = SweepBounds()
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-order", type=int, default=b.max_order)
    ap.add_argument("--max-n", type=int, default=b.max_n)
    ap.add_argument("--max-graph", type=int, default=b.max_graph)
    ap.add_argument("--max-pq", type=int, default=b.max_pq)
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()

    runs = [
        lambda: verify.verify_degrees_abelian(args.max_order, args.jobs),
        lambda: verify.verify_degrees_dihedral(args.max_n, args.jobs),
        lambda: verify.verify_block(args.max_pq, args.jobs),
        lambda: verify.verify_spectra(args.max_graph, args.jobs),
    ]
    for run in runs:
        t0 = time.perf_counter()
        report = run()
        print(report.render())
        print(f"time:     {time.perf_counter() - t0:.1f}s\n")


if __name__ == "__main__":
    main()
