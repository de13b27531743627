"""Exact Laplacian spectra of small groups outside the closed-form families.

For each abelian group and dihedral group up to a size bound, prints the
integer eigenvalues (via the order-class quotient) and the degree of the
non-integral remainder of the characteristic polynomial.
"""

import argparse

from cpog.closed_forms import NoClosedFormError, classify_family
from cpog.graph import build_graph, exact_spectrum
from cpog.groups import DihedralSpec, enumerate_abelian_groups_of_order


def main() -> None:
    ap = argparse.ArgumentParser(description="exact spectra of groups without a closed form")
    ap.add_argument("--max-order", type=int, default=72)
    args = ap.parse_args()

    groups = [g for m in range(2, args.max_order + 1) for g in enumerate_abelian_groups_of_order(m)]
    groups += [DihedralSpec(n) for n in range(3, args.max_order // 2 + 1)]
    integral = 0
    surveyed = 0
    for g in groups:
        try:
            classify_family(g)
            continue
        except NoClosedFormError:
            pass
        surveyed += 1
        roots, rem = exact_spectrum(build_graph(g))
        integral += len(rem) == 1
        spec = "{" + ", ".join(f"{lam}:{m}" for lam, m in roots) + "}"
        tail = "" if len(rem) == 1 else f"  + {len(rem) - 1} non-integral"
        print(f"{str(g):>14}  |G|={g.order:<4} {spec}{tail}")
    print(f"\n{surveyed} groups outside the families, {integral} with integral spectrum")


if __name__ == "__main__":
    main()
