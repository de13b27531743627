"""Exact integer linear algebra: fraction-free elimination, characteristic
polynomials, integer root extraction and spectrum certificates.

Matrices are square numpy arrays of integers (``int64`` or ``object``
holding Python ints) or nested lists; nothing here touches floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from cpog.config import DEFAULT_CHARPOLY_CAP

ExactMatrix = np.ndarray

_INT64_HEADROOM = 1 << 62
_NORMALIZE_ABOVE = 1 << 24


def as_exact(m) -> np.ndarray:
    """Copy ``m`` into a square integer array, int64 when that is lossless."""
    if isinstance(m, np.ndarray) and m.dtype.kind == "i":
        if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] == 0:
            raise ValueError(f"expected a non-empty square matrix, got shape {m.shape}")
        return m.astype(np.int64)
    a = np.array(m, dtype=object)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] == 0:
        raise ValueError(f"expected a non-empty square matrix, got shape {a.shape}")
    flat = []
    for x in a.flat:
        try:
            v = int(x)
        except (TypeError, ValueError) as exc:
            raise ValueError(f"matrix entry {x!r} is not an integer") from exc
        if v != x:
            raise ValueError(f"matrix entry {x!r} is not an integer")
        flat.append(v)
    if all(-_INT64_HEADROOM < x < _INT64_HEADROOM for x in flat):
        return np.array(flat, dtype=np.int64).reshape(a.shape)
    return np.array(flat, dtype=object).reshape(a.shape)


def bareiss_eliminate(m) -> tuple[int, int]:
    """Rank and determinant by Bareiss fraction-free elimination.

    Every division by the previous pivot is exact, so all intermediates
    are integer minors of the input.  Columns without a pivot are skipped
    (the previous pivot is kept), which still gives exact divisions and the
    correct rank for singular inputs.
    """
    a = [[int(x) for x in row] for row in m]
    n = len(a)
    if n == 0 or any(len(row) != n for row in a):
        raise ValueError("bareiss_eliminate needs a non-empty square matrix")
    sign = 1
    prev = 1
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, n) if a[i][c] != 0), None)
        if piv is None:
            continue
        if piv != r:
            a[r], a[piv] = a[piv], a[r]
            sign = -sign
        p = a[r][c]
        prow = a[r]
        for i in range(r + 1, n):
            row = a[i]
            f = row[c]
            for j in range(c + 1, n):
                q, rem = divmod(p * row[j] - f * prow[j], prev)
                assert rem == 0, "Bareiss division not exact"
                row[j] = q
            row[c] = 0
        prev = p
        r += 1
    det = sign * a[n - 1][n - 1] if r == n else 0
    return r, det


def rank(m) -> int:
    """Exact rank by vectorised fraction-free row reduction.

    Duplicate rows are dropped up front.  Columns are taken sparsest first and each pivot is the candidate row
    with the fewest nonzeros, which keeps structured Laplacians from
    filling in.  Only rows with a nonzero in the pivot column are touched:
    they become ``row*(pivot/g) - pivot_row*(factor/g)`` with
    g = gcd(pivot, factor).  Rows are divided by their content once entries
    pass 2**24.  Arithmetic stays in int64 while a per-row bound proves
    there is no overflow, and moves to Python ints otherwise.
    """
    a = as_exact(m)
    if a.dtype != object:
        a = np.unique(a, axis=0)  # repeated rows add nothing to the rank
    n, ncols = a.shape
    a = a[:, np.argsort(np.count_nonzero(a, axis=0), kind="stable")].copy()
    big = a.dtype == object
    rowmax = [int(x) for x in np.abs(a).max(axis=1)]
    nnz = np.count_nonzero(a, axis=1)
    free = np.ones(n, dtype=bool)
    r = 0
    for c in range(ncols):
        if r == n:
            break
        cand = np.flatnonzero(free & (a[:, c] != 0))
        if cand.size == 0:
            continue
        p = int(cand[np.argmin(nnz[cand])])
        free[p] = False
        r += 1
        rows = cand[cand != p]
        if rows.size == 0 or c + 1 == ncols:
            continue
        if not big and 2 * max(rowmax[i] for i in rows) * rowmax[p] >= _INT64_HEADROOM:
            a = a.astype(object)
            big = True
        piv = a[p, c]
        f = a[rows, c]
        g = np.gcd(f, piv)
        sub = a[rows, c + 1:] * (piv // g)[:, None] - np.outer(f // g, a[p, c + 1:])
        rm = np.abs(sub).max(axis=1)
        if big or int(rm.max()) > _NORMALIZE_ABOVE:
            content = np.gcd.reduce(sub, axis=1)
            content[content == 0] = 1
            sub //= content[:, None]
            rm = np.abs(sub).max(axis=1)
        a[rows, c + 1:] = sub
        a[rows, c] = 0
        for i, v in zip(rows.tolist(), rm.tolist()):
            rowmax[i] = int(v)
        nnz[rows] = np.count_nonzero(sub, axis=1)
    return r


def nullity(m) -> int:
    return len(m) - rank(m)


def shifted(m, lam: int) -> np.ndarray:
    """m - lam * I."""
    a = as_exact(m)
    if a.dtype != object and abs(lam) >= _INT64_HEADROOM // 2:
        a = a.astype(object)
    a = a.copy()
    idx = np.arange(a.shape[0])
    a[idx, idx] = a[idx, idx] - lam
    return a


# ---------------------------------------------------------------------------
# characteristic polynomial
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CharPoly:
    """Coefficients c_0..c_n of det(xI - M), lowest degree first."""

    coeffs: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        return format_poly(self.coeffs)


def format_poly(coeffs: Sequence[int]) -> str:
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c == 0:
            continue
        mag = abs(c)
        body = "" if (mag == 1 and k > 0) else str(mag)
        if k >= 1:
            body += "x" if k == 1 else f"x^{k}"
        sign = "-" if c < 0 else "+"
        terms.append((sign, body))
    if not terms:
        return "0"
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def char_poly(m, cap: int = DEFAULT_CHARPOLY_CAP) -> CharPoly:
    """Faddeev-LeVerrier over the integers.

    M_0 = 0, c_n = 1; for k = 1..n: M_k = A M_{k-1} + c_{n-k+1} I and
    c_{n-k} = -tr(A M_k) / k, the division being exact for integer A.
    """
    a = as_exact(m).astype(object)
    n = a.shape[0]
    if n > cap:
        raise ValueError(f"dimension {n} exceeds characteristic polynomial cap {cap}")
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    eye = np.eye(n, dtype=np.int64).astype(object)
    mk = np.zeros((n, n), dtype=object)
    for k in range(1, n + 1):
        mk = a.dot(mk) + coeffs[n - k + 1] * eye
        t = int(np.trace(a.dot(mk)))
        q, rem = divmod(-t, k)
        assert rem == 0, "Faddeev-LeVerrier division not exact"
        coeffs[n - k] = q
    return CharPoly(tuple(int(c) for c in coeffs))


def matrix_poly_eval(p: CharPoly, m) -> np.ndarray:
    """p(M) by Horner's rule, exact."""
    a = as_exact(m).astype(object)
    n = a.shape[0]
    eye = np.eye(n, dtype=np.int64).astype(object)
    acc = np.zeros((n, n), dtype=object)
    for c in reversed(p.coeffs):
        acc = acc.dot(a) + c * eye
    return acc


def _synthetic_divide(coeffs: list[int], root: int) -> list[int] | None:
    """Quotient of p(x) / (x - root) if the division is exact, else None.
    Coefficients lowest degree first."""
    n = len(coeffs) - 1
    quot = [0] * n
    carry = 0
    for k in range(n, 0, -1):
        carry = coeffs[k] + carry * root
        quot[k - 1] = carry
    if coeffs[0] + carry * root != 0:
        return None
    return quot


def _root_bound(coeffs: list[int]) -> int:
    """Fujiwara bound 2 * max_k |c_{n-k}|^(1/k) on |root| of a monic
    polynomial, rounded up through a power of two."""
    n = len(coeffs) - 1
    best = 0
    for k in range(1, n + 1):
        c = abs(coeffs[n - k])
        if c:
            best = max(best, 1 << -(-c.bit_length() // k))
    return 2 * best


def integer_roots(p: CharPoly | Sequence[int]) -> tuple[list[tuple[int, int]], tuple[int, ...]]:
    """Strip every integer root (with multiplicity) from a monic polynomial.

    Returns ``(roots, remainder)`` with roots as (root, multiplicity)
    pairs in decreasing order and the remainder's coefficients lowest
    degree first.  Candidates are 0 and the divisors (both signs) of the
    lowest nonzero coefficient, each confirmed by exact synthetic division.
    """
    coeffs = [int(c) for c in (p.coeffs if isinstance(p, CharPoly) else p)]
    if not coeffs or coeffs[-1] != 1:
        raise ValueError("integer_roots needs a monic polynomial")
    roots: dict[int, int] = {}
    v = 0
    while len(coeffs) > 1 and coeffs[0] == 0:
        coeffs = coeffs[1:]
        v += 1
    if v:
        roots[0] = v
    if len(coeffs) > 1:
        low = abs(coeffs[0])
        bound = min(low, _root_bound(coeffs))
        for d in range(1, bound + 1):
            if low % d:
                continue
            for cand in (d, -d):
                while len(coeffs) > 1:
                    q = _synthetic_divide(coeffs, cand)
                    if q is None:
                        break
                    coeffs = q
                    roots[cand] = roots.get(cand, 0) + 1
            if len(coeffs) == 1:
                break
    return sorted(roots.items(), reverse=True), tuple(coeffs)


# ---------------------------------------------------------------------------
# certificates
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class EigenvalueCheck:
    eigenvalue: int
    claimed: int
    nullity: int

    @property
    def passed(self) -> bool:
        return self.claimed == self.nullity


@dataclass(frozen=True)
class SpectrumCertificate:
    dimension: int
    checks: tuple[EigenvalueCheck, ...]
    multiplicity_total: int
    weighted_total: int
    trace: int
    notes: tuple[str, ...] = field(default=())

    @property
    def dimension_ok(self) -> bool:
        return self.multiplicity_total == self.dimension

    @property
    def trace_ok(self) -> bool:
        return self.weighted_total == self.trace

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks) and self.dimension_ok and self.trace_ok

    def first_failure(self) -> str | None:
        for c in self.checks:
            if not c.passed:
                return f"eigenvalue {c.eigenvalue}: claimed multiplicity {c.claimed}, nullity {c.nullity}"
        if not self.dimension_ok:
            return f"multiplicities sum to {self.multiplicity_total}, dimension is {self.dimension}"
        if not self.trace_ok:
            return f"sum of eigenvalue*multiplicity is {self.weighted_total}, trace is {self.trace}"
        return None

    def render(self) -> str:
        lines = [f"certificate for {self.dimension}x{self.dimension} matrix"]
        for c in self.checks:
            mark = "ok" if c.passed else "FAIL"
            lines.append(f"  lambda={c.eigenvalue:>6}  claimed={c.claimed:>6}  nullity={c.nullity:>6}  {mark}")
        lines.append(f"  sum of multiplicities {self.multiplicity_total} vs dimension {self.dimension}: "
                     f"{'ok' if self.dimension_ok else 'FAIL'}")
        lines.append(f"  sum of lambda*mult {self.weighted_total} vs trace {self.trace}: "
                     f"{'ok' if self.trace_ok else 'FAIL'}")
        lines.append(f"  verdict: {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines)


def certify_spectrum(L, claimed, rank_fn=rank) -> SpectrumCertificate:
    """Check a claimed spectrum of L eigenvalue by eigenvalue.

    For each claimed (lambda, m) the nullity of L - lambda I is computed
    exactly and compared to m.  When every nullity matches and the
    multiplicities add up to the dimension, the distinct kernels already
    account for all n eigenvalues, so the claim is the exact spectrum (L
    symmetric, hence diagonalisable).  ``rank_fn`` may be swapped for
    ``lambda m: bareiss_eliminate(m)[0]``.
    """
    a = as_exact(L)
    n = a.shape[0]
    pairs = claimed.pairs if hasattr(claimed, "pairs") else tuple(claimed)
    checks = []
    for lam, mult in pairs:
        if mult <= 0:
            raise ValueError(f"claimed multiplicity must be positive, got {mult} for {lam}")
        checks.append(EigenvalueCheck(int(lam), int(mult), n - rank_fn(shifted(a, int(lam)))))
    trace = int(sum(int(x) for x in np.diagonal(a)))
    return SpectrumCertificate(
        dimension=n,
        checks=tuple(checks),
        multiplicity_total=sum(int(m) for _, m in pairs),
        weighted_total=sum(int(lam) * int(m) for lam, m in pairs),
        trace=trace,
    )
