"""(2k+1)-gonal inequalities with +-1 coefficients, and the Avis partial-cube test.

For a split of 2k+1 distinct vertices into P (k+1 points, coefficient +1) and
N (k points, coefficient -1) the inequality reads

    sum_{pairs in P} d + sum_{pairs in N} d  <=  sum_{p in P, q in N} d(p, q).

A violation is reported as the first (P, N) in lexicographic order.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from . import _kernels
from .families import InvalidParams
from .graph import DistanceMatrix, Graph, all_pairs_distances, is_bipartite


@dataclass(frozen=True)
class GonalWitness:
    k: int
    positive_vertices: tuple[int, ...]
    negative_vertices: tuple[int, ...]
    lhs: int
    rhs: int

    def to_dict(self, g: Graph | None = None) -> dict:
        name = (lambda v: g.labels[v]) if g is not None else (lambda v: v)
        return {
            "k": self.k,
            "positive": [name(v) for v in self.positive_vertices],
            "negative": [name(v) for v in self.negative_vertices],
            "lhs": self.lhs,
            "rhs": self.rhs,
        }


def evaluate(D: DistanceMatrix | np.ndarray, pos, neg) -> tuple[int, int]:
    """Both sides of the inequality for the given split (no scan)."""
    d = D.d if isinstance(D, DistanceMatrix) else D
    lhs = sum(int(d[a, b]) for a, b in combinations(pos, 2))
    lhs += sum(int(d[a, b]) for a, b in combinations(neg, 2))
    rhs = sum(int(d[a, b]) for a in pos for b in neg)
    return lhs, rhs


def gonal_check(g: Graph, D: DistanceMatrix | None = None, k: int = 2,
                allow_k3: bool = True) -> GonalWitness | None:
    """Return the first violated (2k+1)-gonal inequality, or None if all hold.

    ``allow_k3=False`` refuses k=3 (an O(n^7) scan) so callers can gate it.
    """
    if k not in (1, 2, 3):
        raise InvalidParams("k must be 1, 2 or 3")
    if k == 3 and not allow_k3:
        raise InvalidParams("the 7-gonal scan is disabled; pass allow_k3=True")
    if 2 * k + 1 > g.n:
        raise InvalidParams(f"{2 * k + 1}-gonal inequalities need at least {2 * k + 1} vertices")
    D = all_pairs_distances(g) if D is None else D
    dist = np.ascontiguousarray(D.d, dtype=np.int64)
    found, pos, neg, lhs, rhs = _kernels.gonal_scan(dist, k)
    if not found:
        return None
    return GonalWitness(k, tuple(int(x) for x in pos), tuple(int(x) for x in neg), int(lhs), int(rhs))


def five_gonal_check(g: Graph, D: DistanceMatrix | None = None) -> GonalWitness | None:
    if g.n < 5:
        return None
    return gonal_check(g, D, 2)


@dataclass(frozen=True)
class AvisResult:
    is_partial_cube: bool
    reason: str
    witness: GonalWitness | None = None
    odd_cycle: tuple[int, ...] | None = None


def avis_partial_cube_test(g: Graph, D: DistanceMatrix | None = None) -> AvisResult:
    """Partial cube iff bipartite and 5-gonal."""
    bip = is_bipartite(g)
    if not bip.bipartite:
        return AvisResult(False, "not bipartite", odd_cycle=bip.odd_cycle)
    w = five_gonal_check(g, D)
    if w is not None:
        return AvisResult(False, "5-gonal inequality violated", witness=w)
    return AvisResult(True, "bipartite and 5-gonal")
