"""Inverse line graphs with a fixed vertex-to-edge correspondence.

Root graphs are returned as a coordinate pair per vertex of H; two roots that
differ only by renaming coordinates are the same root and are produced once.
Coordinates are numbered in order of first use, components of H get disjoint
blocks, and an isolated vertex of H becomes a free-standing edge.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, Sequence

from .graph import Graph, components


@dataclass(frozen=True)
class RootGraph:
    m: int
    pairs: tuple[tuple[int, int], ...]  # pairs[v] = coordinates of H-vertex v

    def edges(self) -> list[tuple[int, int]]:
        return sorted(self.pairs)


def _bfs_order(adj: Sequence[set[int]], members: list[int]) -> list[int]:
    start = members[0]
    order = [start]
    seen = {start}
    k = 0
    while k < len(order):
        for w in sorted(adj[order[k]]):
            if w not in seen:
                seen.add(w)
                order.append(w)
        k += 1
    return order


def _component_roots(adj: Sequence[set[int]], order: list[int]) -> Iterator[tuple[int, dict[int, tuple[int, int]]]]:
    """Yield (coordinate count, assignment) for every root of one component."""
    if len(order) == 1:
        yield 2, {order[0]: (0, 1)}
        return
    pairs: dict[int, tuple[int, int]] = {order[0]: (0, 1)}

    def fits(w: int, pair: tuple[int, int], k: int) -> bool:
        for y in order[:k]:
            shared = len(set(pair) & set(pairs[y]))
            if shared != (1 if y in adj[w] else 0):
                return False
        return True

    def rec(k: int, used: int):
        if k == len(order):
            yield used, dict(pairs)
            return
        w = order[k]
        x = next(y for y in order[:k] if y in adj[w])
        p, q = pairs[x]
        # the second vertex may share coordinate 0 only: 0 and 1 are interchangeable
        ends = (p,) if k == 1 else (p, q)
        for c in ends:
            for o in range(used + 1):
                if o == p or o == q:
                    continue
                pair = (min(c, o), max(c, o))
                if not fits(w, pair, k):
                    continue
                pairs[w] = pair
                yield from rec(k + 1, used + (o == used))
                del pairs[w]

    yield from rec(1, 2)


def iter_inverse_line_graphs(h: Graph) -> Iterator[RootGraph]:
    adj = [set(a) for a in h.adjacency]
    per_comp = []
    for members in components(h):
        order = _bfs_order(adj, members)
        roots = list(_component_roots(adj, order))
        if not roots:
            return
        per_comp.append(roots)
    for choice in product(*per_comp):
        pairs: list[tuple[int, int] | None] = [None] * h.n
        offset = 0
        for used, assign in choice:
            for v, (a, b) in assign.items():
                pairs[v] = (a + offset, b + offset)
            offset += used
        yield RootGraph(offset, tuple(pairs))  # type: ignore[arg-type]


def inverse_line_graphs(h: Graph) -> list[RootGraph]:
    """Every root K with L(K) = H under the identity correspondence; [] if H is no line graph."""
    return list(iter_inverse_line_graphs(h))


def line_graph(k_edges: Sequence[tuple[int, int]], name: str = "L") -> Graph:
    from .graph import build_graph

    edges = [(i, j) for i in range(len(k_edges)) for j in range(i + 1, len(k_edges))
             if set(k_edges[i]) & set(k_edges[j])]
    return build_graph(name, range(len(k_edges)), edges)
