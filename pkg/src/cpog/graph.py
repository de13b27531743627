"""Co-prime order graph construction, Laplacian and export."""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from cpog.config import DEFAULT_CAP, DEFAULT_CHARPOLY_CAP
from cpog.groups import (
    GroupElement,
    GroupSpec,
    elements_with_orders,
    format_element,
    is_prime,
)
from cpog.linalg import char_poly, integer_roots


@lru_cache(maxsize=None)
def adjacent(order_u: int, order_v: int) -> bool:
    """Whether two elements of these orders are joined: gcd is 1 or prime."""
    if order_u < 1 or order_v < 1:
        raise ValueError("element orders are positive")
    g = math.gcd(order_u, order_v)
    return g == 1 or is_prime(g)


@dataclass(frozen=True, eq=False)
class CoprimeOrderGraph:
    spec: GroupSpec
    vertices: tuple[tuple[GroupElement, int], ...]
    adjacency: np.ndarray  # bool, symmetric, zero diagonal
    degrees: np.ndarray  # int64

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def orders(self) -> np.ndarray:
        return np.fromiter((o for _, o in self.vertices), dtype=np.int64, count=self.n)

    def edges(self) -> list[tuple[int, int]]:
        i, j = np.nonzero(np.triu(self.adjacency, 1))
        return list(zip(i.tolist(), j.tolist()))

    @property
    def edge_count(self) -> int:
        return int(self.degrees.sum()) // 2

    def order_classes(self) -> list[tuple[int, int, int]]:
        """(order, first vertex index, class size) in vertex order."""
        out = []
        start = 0
        orders = self.orders
        while start < self.n:
            o = int(orders[start])
            end = start
            while end < self.n and orders[end] == o:
                end += 1
            out.append((o, start, end - start))
            start = end
        return out


def build_graph(spec: GroupSpec, cap: int = DEFAULT_CAP) -> CoprimeOrderGraph:
    pairs = elements_with_orders(spec, cap)
    orders = np.array([o for _, o in pairs], dtype=np.int64)
    # adjacency depends on orders only: decide it per pair of distinct orders
    distinct, inverse = np.unique(orders, return_inverse=True)
    d = len(distinct)
    block = np.zeros((d, d), dtype=bool)
    for a in range(d):
        for b in range(a, d):
            block[a, b] = block[b, a] = adjacent(int(distinct[a]), int(distinct[b]))
    adj = block[np.ix_(inverse, inverse)]
    np.fill_diagonal(adj, False)
    degrees = adj.sum(axis=1).astype(np.int64)
    adj.setflags(write=False)
    degrees.setflags(write=False)
    return CoprimeOrderGraph(spec, tuple(pairs), adj, degrees)


def brute_degree(graph: CoprimeOrderGraph, i: int) -> int:
    if not 0 <= i < graph.n:
        raise IndexError(f"vertex {i} out of range for a graph on {graph.n} vertices")
    return int(np.count_nonzero(graph.adjacency[i]))


def laplacian(graph: CoprimeOrderGraph) -> np.ndarray:
    """Degree diagonal minus adjacency, as an int64 matrix."""
    L = -graph.adjacency.astype(np.int64)
    L[np.diag_indices(graph.n)] = graph.degrees
    return L


def twin_reduction(graph: CoprimeOrderGraph) -> tuple[np.ndarray, list[tuple[int, int]]]:
    """Split the Laplacian spectrum along the order classes.

    Vertices of equal order have identical neighbourhoods outside their
    class, and a class is a clique exactly when its order is 1 or prime.
    For two such twins u, v the vector e_u - e_v is an eigenvector with
    eigenvalue deg + 1 (clique) or deg (independent class), giving
    size - 1 eigenvalues per class.  The remaining ones are the eigenvalues
    of the quotient matrix acting on class-constant vectors, returned as
    an integer d x d matrix.
    """
    classes = graph.order_classes()
    d = len(classes)
    Q = np.zeros((d, d), dtype=np.int64)
    twins: dict[int, int] = {}
    for a, (oa, ia, sa) in enumerate(classes):
        deg = int(graph.degrees[ia])
        clique = oa == 1 or is_prime(oa)
        Q[a, a] = deg - (sa - 1 if clique else 0)
        for b, (ob, _, sb) in enumerate(classes):
            if b != a and adjacent(oa, ob):
                Q[a, b] = -sb
        if sa > 1:
            lam = deg + 1 if clique else deg
            twins[lam] = twins.get(lam, 0) + sa - 1
    return Q, sorted(twins.items(), reverse=True)


def exact_spectrum(graph: CoprimeOrderGraph, reduce: bool = True,
                   charpoly_cap: int = DEFAULT_CHARPOLY_CAP) -> tuple[list[tuple[int, int]], tuple[int, ...]]:
    """Integer Laplacian eigenvalues with multiplicities, plus the unfactored
    remainder of the characteristic polynomial (``(1,)`` when the spectrum
    is fully integral).

    With ``reduce`` the characteristic polynomial is taken of the order-class
    quotient only; otherwise of the full Laplacian.
    """
    if not reduce:
        return integer_roots(char_poly(laplacian(graph), cap=charpoly_cap))
    Q, twins = twin_reduction(graph)
    roots, remainder = integer_roots(char_poly(Q, cap=charpoly_cap))
    merged = dict(twins)
    for lam, m in roots:
        merged[lam] = merged.get(lam, 0) + m
    return sorted(merged.items(), reverse=True), remainder


def export_graph(graph: CoprimeOrderGraph, fmt: str, spectrum: dict | None = None) -> bytes:
    """Serialise as ``dot``, ``csv`` (edge list) or ``json``."""
    if fmt == "dot":
        lines = [f'graph "{graph.spec}" {{']
        for i, (g, o) in enumerate(graph.vertices):
            lines.append(f'  {i} [label="{format_element(g)}/{o}"];')
        lines.extend(f"  {i} -- {j};" for i, j in graph.edges())
        lines.append("}")
        return ("\n".join(lines) + "\n").encode()
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["source", "target"])
        w.writerows(graph.edges())
        return buf.getvalue().encode()
    if fmt == "json":
        doc = {
            "group": str(graph.spec),
            "order": graph.n,
            "vertices": [
                {"element": format_element(g), "order": o, "degree": int(graph.degrees[i])}
                for i, (g, o) in enumerate(graph.vertices)
            ],
            "edges": [list(e) for e in graph.edges()],
        }
        if spectrum is not None:
            doc["spectrum"] = spectrum
        return (json.dumps(doc, indent=1) + "\n").encode()
    raise ValueError(f"unsupported export format {fmt!r}; use dot, csv or json")
