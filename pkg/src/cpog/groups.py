"""Finite abelian and dihedral groups: parsing, canonical forms, elements
and element orders."""

from __future__ import annotations

import itertools
import math
import re
from collections import Counter
from dataclasses import dataclass
from typing import NamedTuple, Union

from cpog.config import DEFAULT_CAP


class GroupSpecError(ValueError):
    """Malformed group description.  ``position`` is the 0-based offset of
    the offending character, or None when the error is not positional."""

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class CapExceededError(ValueError):
    pass


# ---------------------------------------------------------------------------
# integer helpers
# ---------------------------------------------------------------------------

def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division, primes in increasing order."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def integer_partitions(n: int, largest: int | None = None):
    """Partitions of n as non-increasing tuples, in reverse lexicographic
    order: (3,), (2, 1), (1, 1, 1)."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in integer_partitions(n - first, first):
            yield (first,) + rest


# ---------------------------------------------------------------------------
# group descriptions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AbelianSpec:
    """Direct product of cyclic groups Z_m, factors kept as written."""

    factors: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(int(m) for m in self.factors))
        for m in self.factors:
            if m < 2:
                raise GroupSpecError(f"cyclic modulus must be >= 2, got {m}")

    @property
    def order(self) -> int:
        return math.prod(self.factors)

    @property
    def identity(self) -> tuple[int, ...]:
        return (0,) * len(self.factors)

    def __str__(self) -> str:
        return "x".join(f"Z{m}" for m in self.factors) or "Z1"


@dataclass(frozen=True)
class DihedralSpec:
    """Dihedral group D_n of order 2n."""

    n: int

    def __post_init__(self):
        if self.n < 3:
            raise GroupSpecError(f"dihedral D_n needs n >= 3, got {self.n}")

    @property
    def order(self) -> int:
        return 2 * self.n

    @property
    def identity(self) -> DihedralElement:
        return DihedralElement(0, 0)

    def __str__(self) -> str:
        return f"D{self.n}"


GroupSpec = Union[AbelianSpec, DihedralSpec]


class DihedralElement(NamedTuple):
    """The element f^flip r^rotation."""

    flip: int
    rotation: int


GroupElement = Union[tuple, DihedralElement]


def check_cap(spec: GroupSpec, cap: int = DEFAULT_CAP) -> None:
    if spec.order > cap:
        raise CapExceededError(f"group {spec} has order {spec.order} > cap {cap}")


_INT = re.compile(r"\d+")


def parse_group_spec(text: str, cap: int = DEFAULT_CAP) -> GroupSpec:
    """Parse ``Z4xZ2``, ``Z3*Z3``, ``D27`` (case-insensitive)."""
    s = text.strip()
    offset = len(text) - len(text.lstrip())
    if not s:
        raise GroupSpecError("empty group description", offset)

    def number(pos: int) -> tuple[int, int]:
        m = _INT.match(s, pos)
        if m is None:
            raise GroupSpecError("expected an integer", offset + pos)
        return int(m.group()), m.end()

    head = s[0].upper()
    if head == "D":
        n, end = number(1)
        if end != len(s):
            raise GroupSpecError(f"unexpected {s[end]!r}", offset + end)
        if n < 3:
            raise GroupSpecError(f"dihedral D_n needs n >= 3, got {n}", offset + 1)
        spec: GroupSpec = DihedralSpec(n)
    elif head == "Z":
        factors = []
        pos = 0
        while True:
            if pos >= len(s) or s[pos].upper() != "Z":
                raise GroupSpecError("expected 'Z'", offset + pos)
            m, end = number(pos + 1)
            if m < 2:
                raise GroupSpecError(f"cyclic modulus must be >= 2, got {m}", offset + pos + 1)
            factors.append(m)
            if end == len(s):
                break
            if s[end].lower() not in ("x", "*"):
                raise GroupSpecError(f"unexpected {s[end]!r}", offset + end)
            pos = end + 1
        spec = AbelianSpec(tuple(factors))
    else:
        raise GroupSpecError("group must start with 'Z' or 'D'", offset)
    check_cap(spec, cap)
    return spec


# ---------------------------------------------------------------------------
# canonical form
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AbelianCanonicalForm:
    """Prime-power decomposition: ``table`` holds (p, exponents) pairs with
    primes increasing and each exponent list sorted ascending."""

    table: tuple[tuple[int, tuple[int, ...]], ...]

    @classmethod
    def from_dict(cls, d: dict[int, list[int]]) -> AbelianCanonicalForm:
        return cls(tuple((p, tuple(sorted(d[p]))) for p in sorted(d) if d[p]))

    def as_dict(self) -> dict[int, list[int]]:
        return {p: list(e) for p, e in self.table}

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.table)

    def exponents(self, p: int) -> tuple[int, ...]:
        return dict(self.table).get(p, ())

    def sylow_order(self, p: int) -> int:
        return p ** sum(self.exponents(p))

    def rank(self, p: int) -> int:
        return len(self.exponents(p))

    @property
    def order(self) -> int:
        return math.prod(p ** sum(e) for p, e in self.table)

    @property
    def exponent(self) -> int:
        """Least common multiple of all element orders."""
        return math.prod(p ** max(e) for p, e in self.table)

    def to_spec(self) -> AbelianSpec:
        return AbelianSpec(tuple(p**a for p, e in self.table for a in sorted(e, reverse=True)))

    def __str__(self) -> str:
        parts = [f"Z_{p**a}" for p, e in self.table for a in sorted(e, reverse=True)]
        return " x ".join(parts) if parts else "trivial"


def canonicalize_abelian(spec: AbelianSpec) -> AbelianCanonicalForm:
    per_prime: dict[int, list[int]] = {}
    for m in spec.factors:
        for p, a in factorize(m).items():
            per_prime.setdefault(p, []).append(a)
    return AbelianCanonicalForm.from_dict(per_prime)


def enumerate_abelian_groups_of_order(m: int) -> list[AbelianSpec]:
    """One representative per isomorphism class of abelian groups of order m."""
    if m < 1:
        raise ValueError("group order must be positive")
    per_prime = [
        [(p, part) for part in integer_partitions(a)] for p, a in factorize(m).items()
    ]
    out = []
    for combo in itertools.product(*per_prime):
        out.append(AbelianSpec(tuple(p**k for p, part in combo for k in part)))
    return out


# ---------------------------------------------------------------------------
# elements and orders
# ---------------------------------------------------------------------------

def _check_element(spec: GroupSpec, g) -> None:
    if isinstance(spec, AbelianSpec):
        if len(g) != len(spec.factors):
            raise ValueError(f"element {g} has arity {len(g)}, group {spec} needs {len(spec.factors)}")
        for r, m in zip(g, spec.factors):
            if not 0 <= r < m:
                raise ValueError(f"residue {r} out of range for Z{m}")
    else:
        if len(g) != 2:
            raise ValueError(f"dihedral element needs (flip, rotation), got {g}")
        flip, rot = g
        if flip not in (0, 1) or not 0 <= rot < spec.n:
            raise ValueError(f"element {g} not in {spec}")


def _order_unchecked(spec: GroupSpec, g) -> int:
    if isinstance(spec, AbelianSpec):
        return math.lcm(1, *(m // math.gcd(m, r) for m, r in zip(spec.factors, g)))
    flip, rot = g
    if flip:
        return 2
    return spec.n // math.gcd(spec.n, rot)


def element_order(spec: GroupSpec, g: GroupElement) -> int:
    _check_element(spec, g)
    return _order_unchecked(spec, g)


def _raw_elements(spec: GroupSpec):
    if isinstance(spec, AbelianSpec):
        return itertools.product(*(range(m) for m in spec.factors))
    return (DihedralElement(f, r) for f in (0, 1) for r in range(spec.n))


def elements_with_orders(spec: GroupSpec, cap: int = DEFAULT_CAP) -> list[tuple[GroupElement, int]]:
    """All (element, order) pairs in vertex order: sorted by (order, element),
    which puts the identity first."""
    check_cap(spec, cap)
    pairs = [(g, _order_unchecked(spec, g)) for g in _raw_elements(spec)]
    pairs.sort(key=lambda t: (t[1], tuple(t[0])))
    return pairs


def enumerate_elements(spec: GroupSpec, cap: int = DEFAULT_CAP) -> list[GroupElement]:
    return [g for g, _ in elements_with_orders(spec, cap)]


def order_profile(spec: GroupSpec, cap: int = DEFAULT_CAP) -> dict[int, int]:
    counts = Counter(o for _, o in elements_with_orders(spec, cap))
    return dict(sorted(counts.items()))


def format_element(g: GroupElement) -> str:
    if isinstance(g, DihedralElement):
        return f"{'f' if g.flip else ''}r^{g.rotation}"
    return "(" + ",".join(str(r) for r in g) + ")"


# ---------------------------------------------------------------------------
# order decomposition
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class OrderDecomposition:
    """An element order split into primes dividing it exactly once
    (``first_power_primes``) and primes dividing it at least squared
    (``higher_power_primes`` as (p, exponent) pairs)."""

    first_power_primes: tuple[int, ...]
    higher_power_primes: tuple[tuple[int, int], ...]

    @property
    def k(self) -> int:
        return len(self.first_power_primes)

    @property
    def l(self) -> int:  # noqa: E743
        return len(self.higher_power_primes)

    @property
    def value(self) -> int:
        return math.prod(self.first_power_primes) * math.prod(p**g for p, g in self.higher_power_primes)


def decompose_order(order: int, canon: AbelianCanonicalForm) -> OrderDecomposition:
    if order < 1 or canon.exponent % order:
        raise ValueError(f"order {order} does not divide the group exponent {canon.exponent}")
    f = factorize(order)
    return OrderDecomposition(
        tuple(p for p, a in f.items() if a == 1),
        tuple((p, a) for p, a in f.items() if a >= 2),
    )
