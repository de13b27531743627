"""Sweep verification: every closed form against brute force or an exact
certificate, over parameter ranges."""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable

import numpy as np

from cpog.closed_forms import (
    block_sizes,
    build_block_L,
    closed_form_spectrum,
    degree_abelian,
    degree_dihedral,
    spectrum_block,
)
from cpog.config import DEFAULT_CAP
from cpog.graph import build_graph, laplacian
from cpog.groups import (
    AbelianSpec,
    DihedralSpec,
    canonicalize_abelian,
    enumerate_abelian_groups_of_order,
    integer_partitions,
    is_prime,
)
from cpog.linalg import certify_spectrum

TARGETS = ("degrees-abelian", "degrees-dihedral", "spectra", "block")


@dataclass(frozen=True)
class CaseResult:
    label: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class VerificationReport:
    target: str
    parameter_range: str
    cases_run: int
    cases_passed: int
    first_failure: str | None = None

    @property
    def passed(self) -> bool:
        return self.cases_passed == self.cases_run

    def render(self) -> str:
        lines = [
            f"target:   {self.target}",
            f"range:    {self.parameter_range}",
            f"cases:    {self.cases_passed}/{self.cases_run} passed",
        ]
        if self.first_failure:
            lines.append(f"first failure: {self.first_failure}")
        lines.append(f"verdict:  {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines)


def _aggregate(target: str, rng: str, results: Iterable[CaseResult]) -> VerificationReport:
    results = sorted(results, key=lambda r: r.label)
    failures = [r for r in results if not r.passed]
    first = f"{failures[0].label}: {failures[0].detail}" if failures else None
    return VerificationReport(target, rng, len(results), len(results) - len(failures), first)


def _run(fn: Callable, cases: list, jobs: int) -> list:
    """Evaluate ``fn`` on each case; each call returns a list of CaseResult."""
    if jobs > 1 and len(cases) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(fn, cases, chunksize=max(1, len(cases) // (4 * jobs))))
    else:
        chunks = [fn(c) for c in cases]
    return [r for chunk in chunks for r in chunk]


# ---------------------------------------------------------------------------
# degrees
# ---------------------------------------------------------------------------

def _degrees_by_order(graph) -> dict[int, set[int]]:
    out: dict[int, set[int]] = {}
    for (_, o), d in zip(graph.vertices, graph.degrees.tolist()):
        out.setdefault(o, set()).add(d)
    return out


def check_abelian_degrees(spec: AbelianSpec) -> list[CaseResult]:
    """One case per realizable order: every vertex of that order has the
    same brute-force degree and it equals the closed form."""
    canon = canonicalize_abelian(spec)
    graph = build_graph(spec, cap=max(DEFAULT_CAP, spec.order))
    out = []
    for o, seen in sorted(_degrees_by_order(graph).items()):
        formula = degree_abelian(canon, o)
        ok = seen == {formula}
        out.append(CaseResult(f"{spec} order {o:>4}", ok, f"formula {formula}, brute {sorted(seen)}"))
    return out


def check_dihedral_degrees(n: int) -> list[CaseResult]:
    """Closed form vs brute force in D_n, plus the rotation-subgroup relation
    deg_Dn = deg_Zn + n checked against the brute-force graph of Z_n."""
    graph = build_graph(DihedralSpec(n), cap=max(DEFAULT_CAP, 2 * n))
    cyclic = _degrees_by_order(build_graph(AbelianSpec((n,)), cap=max(DEFAULT_CAP, n)))
    out = []
    for o, seen in sorted(_degrees_by_order(graph).items()):
        formula = degree_dihedral(n, o)
        ok = seen == {formula}
        detail = f"formula {formula}, brute {sorted(seen)}"
        if o != 2:
            rel = {d + n for d in cyclic[o]}
            ok = ok and rel == seen
            detail += f", rotation-subgroup degree + n = {sorted(rel)}"
        out.append(CaseResult(f"D{n:<4} order {o:>4}", ok, detail))
    return out


def verify_degrees_abelian(max_order: int = 200, jobs: int = 1) -> VerificationReport:
    groups = [g for m in range(1, max_order + 1) for g in enumerate_abelian_groups_of_order(m)]
    return _aggregate("degrees-abelian", f"abelian groups of order <= {max_order} ({len(groups)} classes)",
                      _run(check_abelian_degrees, groups, jobs))


def verify_degrees_dihedral(max_n: int = 100, jobs: int = 1) -> VerificationReport:
    return _aggregate("degrees-dihedral", f"D_n, 3 <= n <= {max_n}",
                      _run(check_dihedral_degrees, list(range(3, max_n + 1)), jobs))


# ---------------------------------------------------------------------------
# spectra
# ---------------------------------------------------------------------------

def _primes_upto(n: int) -> list[int]:
    return [p for p in range(2, n + 1) if is_prime(p)]


def elementary_abelian_groups(max_order: int, primes: Iterable[int] | None = None) -> list[AbelianSpec]:
    out = []
    for p in primes if primes is not None else _primes_upto(max_order):
        t = 1
        while p**t <= max_order:
            out.append(AbelianSpec((p,) * t))
            t += 1
    return out


def abelian_p_groups(max_order: int) -> list[AbelianSpec]:
    """Abelian p-groups of order <= max_order with some cyclic factor of
    order at least p^2."""
    out = []
    for p in _primes_upto(max_order):
        a = 2
        while p**a <= max_order:
            for part in integer_partitions(a):
                if part[0] >= 2:
                    out.append(AbelianSpec(tuple(p**k for k in part)))
            a += 1
    return out


def two_prime_groups(max_order: int) -> list[AbelianSpec]:
    """Z_p^t x Z_q^s with p < q and p^t q^s <= max_order."""
    out = []
    primes = _primes_upto(max_order // 2)
    for p, q in itertools.combinations(primes, 2):
        t = 1
        while p**t * q <= max_order:
            s = 1
            while p**t * q**s <= max_order:
                out.append(AbelianSpec((p,) * t + (q,) * s))
                s += 1
            t += 1
    return out


def dihedral_prime_power_groups(max_n: int) -> list[DihedralSpec]:
    """D_{p^n} with p^n <= max_n: p odd and n >= 1, or p = 2 and n >= 2."""
    out = []
    for p in _primes_upto(max_n):
        n = 2 if p == 2 else 1
        while p**n <= max_n:
            out.append(DihedralSpec(p**n))
            n += 1
    return out


def spectra_family_groups(max_graph: int = 750) -> list:
    return (elementary_abelian_groups(max_graph) + abelian_p_groups(max_graph)
            + two_prime_groups(max_graph) + dihedral_prime_power_groups(max_graph // 2))


def check_spectrum(spec) -> list[CaseResult]:
    """Certify the closed-form spectrum against the real Laplacian and check
    that the Laplacian is literally the two-block matrix in vertex order."""
    fam, claimed = closed_form_spectrum(spec)
    L = laplacian(build_graph(spec, cap=max(DEFAULT_CAP, spec.order)))
    cert = certify_spectrum(L, claimed)
    p, q = block_sizes(spec)
    shape_ok = np.array_equal(L, build_block_L(p, q))
    detail = cert.first_failure() or ("" if shape_ok else f"Laplacian is not the ({p},{q}) block matrix")
    return [CaseResult(f"{fam.name} {str(spec):>14}", cert.passed and shape_ok,
                       f"claimed {claimed}; {detail}")]


def verify_spectra(max_graph: int = 750, jobs: int = 1) -> VerificationReport:
    groups = spectra_family_groups(max_graph)
    return _aggregate("spectra", f"covered families with |G| <= {max_graph} ({len(groups)} groups)",
                      _run(check_spectrum, groups, jobs))


def check_block(pq: tuple[int, int]) -> list[CaseResult]:
    p, q = pq
    cert = certify_spectrum(build_block_L(p, q), spectrum_block(p, q))
    return [CaseResult(f"block p={p:>3} q={q:>3}", cert.passed, cert.first_failure() or "")]


def verify_block(max_pq: int = 30, jobs: int = 1) -> VerificationReport:
    cases = list(itertools.product(range(1, max_pq + 1), repeat=2))
    return _aggregate("block", f"1 <= p, q <= {max_pq}", _run(check_block, cases, jobs))
