"""Size limits and sweep bounds.  Everything is passed explicitly; no
environment variables are read."""

from dataclasses import dataclass

DEFAULT_CAP = 5000
DEFAULT_CHARPOLY_CAP = 1500


@dataclass(frozen=True)
class Limits:
    cap: int = DEFAULT_CAP
    charpoly_cap: int = DEFAULT_CHARPOLY_CAP


@dataclass(frozen=True)
class SweepBounds:
    max_order: int = 200  # abelian degree sweep: |G| <= max_order
    max_n: int = 100  # dihedral degree sweep: 3 <= n <= max_n
    max_graph: int = 750  # spectra sweep: graph size <= max_graph
    max_pq: int = 30  # block sweep: 1 <= p, q <= max_pq
