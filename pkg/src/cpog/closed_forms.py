"""Closed-form vertex degrees and Laplacian spectra of co-prime order graphs."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from cpog.groups import (
    AbelianCanonicalForm,
    AbelianSpec,
    DihedralSpec,
    GroupSpec,
    canonicalize_abelian,
    decompose_order,
    factorize,
    is_prime,
)


class NoClosedFormError(ValueError):
    pass


class InternalFormulaError(ArithmeticError):
    pass


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalue/multiplicity pairs, eigenvalues strictly decreasing."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        pairs = tuple((int(lam), int(m)) for lam, m in self.pairs)
        for lam, m in pairs:
            if lam < 0:
                raise ValueError(f"negative eigenvalue {lam}")
            if m <= 0:
                raise ValueError(f"multiplicity of {lam} must be positive, got {m}")
        if any(a[0] <= b[0] for a, b in zip(pairs, pairs[1:])):
            raise ValueError(f"eigenvalues must be strictly decreasing: {pairs}")
        object.__setattr__(self, "pairs", pairs)

    @classmethod
    def from_mapping(cls, d: dict[int, int]) -> Spectrum:
        """Build from {eigenvalue: multiplicity}; zero multiplicities dropped."""
        return cls(tuple(sorted(((k, v) for k, v in d.items() if v), reverse=True)))

    def as_dict(self) -> dict[int, int]:
        return dict(self.pairs)

    @property
    def dimension(self) -> int:
        return sum(m for _, m in self.pairs)

    @property
    def trace(self) -> int:
        return sum(lam * m for lam, m in self.pairs)

    def __str__(self) -> str:
        return "{" + ", ".join(f"{lam}:{m}" for lam, m in self.pairs) + "}"


# ---------------------------------------------------------------------------
# degrees
# ---------------------------------------------------------------------------

def degree_abelian(canon: AbelianCanonicalForm, order: int) -> int:
    """Degree of any element of the given order.

    Orders 1 and p are adjacent to everything.  Otherwise, with the order
    split into first-power primes a_1..a_k and higher-power primes
    b_1..b_l, a neighbour y must be trivial on every Sylow factor but one
    prime of the order, where it may be any nonzero element (for an a_j)
    or an element of order exactly b_j.
    """
    dec = decompose_order(order, canon)
    G = canon.order
    if dec.l == 0 and dec.k <= 1:
        return G - 1
    denom = math.prod(canon.sylow_order(p) for p in dec.first_power_primes)
    denom *= math.prod(canon.sylow_order(p) for p, _ in dec.higher_power_primes)
    bracket = (1 - dec.k - dec.l
               + sum(canon.sylow_order(p) for p in dec.first_power_primes)
               + sum(p ** canon.rank(p) for p, _ in dec.higher_power_primes))
    q, rem = divmod(bracket * G, denom)
    if rem:
        raise InternalFormulaError(f"degree of order {order} in {canon}: {bracket}*{G}/{denom} not integral")
    return q


def degree_dihedral(n: int, order: int) -> int:
    """Degree in D_n: reflections and order-2 elements are universal; a
    rotation keeps its degree in the rotation subgroup plus the n
    reflections."""
    if n < 3:
        raise ValueError(f"D_n needs n >= 3, got {n}")
    if order == 2:
        return 2 * n - 1
    if order < 1 or n % order:
        raise ValueError(f"D_{n} has no element of order {order}")
    return degree_abelian(canonicalize_abelian(AbelianSpec((n,))), order) + n


# ---------------------------------------------------------------------------
# spectra
# ---------------------------------------------------------------------------

def build_block_L(p: int, q: int) -> np.ndarray:
    """The (p+q)x(p+q) Laplacian of p universal vertices joined to an
    independent set of q vertices."""
    if p < 1 or q < 1:
        raise ValueError("block sizes must be >= 1")
    n = p + q
    L = np.zeros((n, n), dtype=np.int64)
    L[:p, :] = -1
    L[:, :p] = -1
    L[np.arange(p), np.arange(p)] = p + q - 1
    L[np.arange(p, n), np.arange(p, n)] = p
    return L


def spectrum_block(p: int, q: int) -> Spectrum:
    if p < 1 or q < 1:
        raise ValueError("block sizes must be >= 1")
    return Spectrum.from_mapping({p + q: p, p: q - 1, 0: 1})


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")


def spectrum_elementary_abelian(p: int, t: int) -> Spectrum:
    _require_prime(p)
    if t < 1:
        raise ValueError("t must be >= 1")
    return Spectrum.from_mapping({p**t: p**t - 1, 0: 1})


def spectrum_abelian_p_group(p: int, exponents) -> Spectrum:
    _require_prime(p)
    exponents = list(exponents)
    if not exponents:
        raise ValueError("empty exponent list")
    if min(exponents) < 1:
        raise ValueError("exponents must be >= 1")
    n = len(exponents)
    if max(exponents) == 1:
        return spectrum_elementary_abelian(p, n)
    G = p ** sum(exponents)
    return Spectrum.from_mapping({G: p**n, p**n: G - p**n - 1, 0: 1})


def spectrum_pq(p: int, t: int, q: int, s: int) -> Spectrum:
    _require_prime(p)
    _require_prime(q)
    if p == q:
        raise ValueError("primes must be distinct")
    if t < 1 or s < 1:
        raise ValueError("exponents must be >= 1")
    P, Q = p**t, q**s
    return Spectrum.from_mapping({P * Q: P + Q - 1, P + Q - 1: P * Q - P - Q, 0: 1})


def spectrum_dihedral_prime_power(p: int, n: int) -> Spectrum:
    _require_prime(p)
    if n < 1 or (p == 2 and n < 2):
        raise ValueError(f"D_{{{p}^{n}}} is outside the covered range")
    N = p**n
    if N - p - 1 < 1:
        # p odd, n = 1: every order is 1, 2 or p, so the graph is complete
        return Spectrum.from_mapping({2 * N: 2 * N - 1, 0: 1})
    return Spectrum.from_mapping({2 * N: p + N, p + N: N - p - 1, 0: 1})


@dataclass(frozen=True)
class Family:
    """Which closed form applies, and with what parameters."""

    name: str
    params: tuple

    def __str__(self) -> str:
        return f"{self.name}{self.params}"


def classify_family(spec: GroupSpec) -> Family:
    """Match a group against the families with a closed-form spectrum.

    Raises NoClosedFormError for anything else.
    """
    if isinstance(spec, DihedralSpec):
        f = factorize(spec.n)
        if len(f) == 1:
            (p, n), = f.items()
            if p != 2 or n >= 2:
                return Family("dihedral-prime-power", (p, n))
        raise NoClosedFormError(f"no closed-form spectrum for {spec}: n is not a covered prime power")
    canon = canonicalize_abelian(spec)
    table = canon.table
    if len(table) == 1:
        p, exps = table[0]
        if max(exps) == 1:
            return Family("elementary-abelian", (p, len(exps)))
        return Family("abelian-p-group", (p, tuple(exps)))
    if len(table) == 2 and all(max(e) == 1 for _, e in table):
        (p, ep), (q, eq) = table
        return Family("two-prime-elementary", (p, len(ep), q, len(eq)))
    raise NoClosedFormError(f"no closed-form spectrum for {spec} (canonical form {canon}): outside the covered families")


def closed_form_spectrum(spec: GroupSpec) -> tuple[Family, Spectrum]:
    fam = classify_family(spec)
    if fam.name == "elementary-abelian":
        return fam, spectrum_elementary_abelian(*fam.params)
    if fam.name == "abelian-p-group":
        return fam, spectrum_abelian_p_group(*fam.params)
    if fam.name == "two-prime-elementary":
        return fam, spectrum_pq(*fam.params)
    return fam, spectrum_dihedral_prime_power(*fam.params)


def block_sizes(spec: GroupSpec) -> tuple[int, int]:
    """(universal vertices, remaining vertices) such that the Laplacian of a
    covered family equals build_block_L of these sizes in vertex order."""
    fam = classify_family(spec)
    G = spec.order
    if fam.name == "elementary-abelian":
        return G - 1, 1
    if fam.name == "abelian-p-group":
        p, exps = fam.params
        return p ** len(exps), G - p ** len(exps)
    if fam.name == "two-prime-elementary":
        p, t, q, s = fam.params
        return p**t + q**s - 1, G - (p**t + q**s - 1)
    p, n = fam.params
    if p**n - p < 1:
        return G - 1, 1
    return p + p**n, p**n - p
