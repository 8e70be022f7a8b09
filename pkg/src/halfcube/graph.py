"""Graph representation, shortest-path metric and small graph combinators."""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Iterable, Sequence

import numpy as np

from . import _kernels


class GraphError(ValueError):
    pass


class DisconnectedGraph(GraphError):
    def __init__(self, u: int, v: int):
        super().__init__(f"graph is disconnected: no path between vertices {u} and {v}")
        self.witness = (u, v)


class SizeLimitExceeded(GraphError):
    pass


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1`` with text labels.

    Edges are stored as sorted ``(i, j)`` tuples with ``i < j``.
    """

    name: str
    n: int
    labels: tuple[str, ...]
    edges: tuple[tuple[int, int], ...]

    @cached_property
    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for i, j in self.edges:
            adj[i].append(j)
            adj[j].append(i)
        for row in adj:
            row.sort()
        return adj

    @cached_property
    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        degs = np.array([len(a) for a in self.adjacency], dtype=np.int32)
        indptr = np.zeros(self.n + 1, dtype=np.int32)
        np.cumsum(degs, out=indptr[1:])
        indices = np.array([w for a in self.adjacency for w in a], dtype=np.int32)
        return indptr, indices

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        return {e: k for k, e in enumerate(self.edges)}

    @cached_property
    def label_index(self) -> dict[str, int]:
        return {lab: i for i, lab in enumerate(self.labels)}

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edge_index

    def relabel(self, name: str | None = None, labels: Sequence[str] | None = None) -> "Graph":
        return Graph(name or self.name, self.n, tuple(labels) if labels else self.labels, self.edges)

    def to_json(self) -> str:
        obj = {"name": self.name, "n": self.n, "labels": list(self.labels),
               "edges": [list(e) for e in self.edges]}
        return json.dumps(obj, separators=(",", ":"), ensure_ascii=False)

    @classmethod
    def from_json(cls, text: str) -> "Graph":
        obj = json.loads(text)
        if int(obj["n"]) != len(obj["labels"]):
            raise GraphError("'n' does not match the number of labels")
        return build_graph(obj["name"], obj["labels"], [tuple(e) for e in obj["edges"]])

    def __repr__(self) -> str:
        return f"Graph({self.name!r}, n={self.n}, m={len(self.edges)})"


def build_graph(name: str, labels: Sequence, edge_list: Iterable[tuple[int, int]]) -> Graph:
    labels = tuple(str(x) for x in labels)
    n = len(labels)
    if len(set(labels)) != n:
        seen: set[str] = set()
        dup = next(lab for lab in labels if lab in seen or seen.add(lab))
        raise GraphError(f"duplicate vertex label {dup!r}")
    edges = set()
    for e in edge_list:
        i, j = int(e[0]), int(e[1])
        if not (0 <= i < n and 0 <= j < n):
            raise GraphError(f"edge ({i}, {j}) references a vertex outside [0, {n})")
        if i == j:
            raise GraphError(f"self-loop at vertex {i}")
        edges.add((min(i, j), max(i, j)))
    return Graph(name, n, labels, tuple(sorted(edges)))


def graph_from_labeled_edges(name: str, labels: Sequence, pairs: Iterable[tuple]) -> Graph:
    """Build a graph from edges given as label pairs; loops and repeats are dropped."""
    labels = [str(x) for x in labels]
    index = {lab: i for i, lab in enumerate(labels)}
    edges = set()
    for a, b in pairs:
        i, j = index[str(a)], index[str(b)]
        if i != j:
            edges.add((min(i, j), max(i, j)))
    return build_graph(name, labels, edges)


@dataclass(frozen=True)
class DistanceMatrix:
    n: int
    d: np.ndarray = field(repr=False)
    diameter: int

    def __getitem__(self, key):
        return self.d[key]


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    if g.n == 0:
        return DistanceMatrix(0, np.zeros((0, 0), dtype=np.int32), 0)
    indptr, indices = g.csr
    d = _kernels.bfs_all_pairs(indptr, indices, g.n)
    if (d < 0).any():
        u, v = np.argwhere(d < 0)[0]
        raise DisconnectedGraph(int(u), int(v))
    d.setflags(write=False)
    return DistanceMatrix(g.n, d, int(d.max()))


def distances_or_none(g: Graph) -> np.ndarray:
    """Raw BFS matrix with -1 for unreachable pairs (no connectivity check)."""
    indptr, indices = g.csr
    return _kernels.bfs_all_pairs(indptr, indices, g.n)


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    seen = {0}
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for w in g.adjacency[v]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == g.n


def components(g: Graph) -> list[list[int]]:
    comp = [-1] * g.n
    out = []
    for s in range(g.n):
        if comp[s] >= 0:
            continue
        comp[s] = len(out)
        members = [s]
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in g.adjacency[v]:
                if comp[w] < 0:
                    comp[w] = comp[s]
                    members.append(w)
                    queue.append(w)
        out.append(sorted(members))
    return out


@dataclass(frozen=True)
class BipartiteResult:
    bipartite: bool
    coloring: tuple[int, ...] | None = None
    odd_cycle: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.bipartite


def is_bipartite(g: Graph) -> BipartiteResult:
    """2-colour by BFS; on failure return an odd closed walk through the clash."""
    color = [-1] * g.n
    parent = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in g.adjacency[v]:
                if color[w] < 0:
                    color[w] = 1 - color[v]
                    parent[w] = v
                    queue.append(w)
                elif color[w] == color[v]:
                    return BipartiteResult(False, odd_cycle=_odd_walk(parent, v, w))
    return BipartiteResult(True, coloring=tuple(color))


def _odd_walk(parent: list[int], v: int, w: int) -> tuple[int, ...]:
    def path_to_root(x):
        out = [x]
        while parent[x] >= 0:
            x = parent[x]
            out.append(x)
        return out

    pv, pw = path_to_root(v), path_to_root(w)
    on_pw = set(pw)
    meet = next(x for x in pv if x in on_pw)
    left = pv[: pv.index(meet) + 1]
    right = pw[: pw.index(meet)]
    return tuple(left + right[::-1])


def cartesian_product(g1: Graph, g2: Graph, name: str | None = None) -> Graph:
    """Box product; vertex (a, b) gets index a * g2.n + b."""
    labels = [f"({a},{b})" for a, b in product(g1.labels, g2.labels)]
    edges = []
    for a in range(g1.n):
        for i, j in g2.edges:
            edges.append((a * g2.n + i, a * g2.n + j))
    for i, j in g1.edges:
        for b in range(g2.n):
            edges.append((i * g2.n + b, j * g2.n + b))
    return build_graph(name or f"{g1.name}x{g2.name}", labels, edges)


def bipartite_double(g: Graph, name: str | None = None) -> Graph:
    """Vertices (v, 0) at index v and (v, 1) at index n + v."""
    labels = [f"{lab}/0" for lab in g.labels] + [f"{lab}/1" for lab in g.labels]
    edges = []
    for i, j in g.edges:
        edges.append((i, g.n + j))
        edges.append((j, g.n + i))
    return build_graph(name or f"double({g.name})", labels, edges)


def induced_subgraph(g: Graph, vertices: Sequence[int], name: str | None = None) -> Graph:
    keep = list(vertices)
    pos = {v: k for k, v in enumerate(keep)}
    edges = [(pos[i], pos[j]) for i, j in g.edges if i in pos and j in pos]
    return build_graph(name or g.name, [g.labels[v] for v in keep], edges)


@dataclass(frozen=True)
class SpanningTree:
    root: int
    parent: tuple[int, ...]  # parent[root] == -1
    depth: tuple[int, ...]
    order: tuple[int, ...]  # BFS visiting order

    @property
    def edges(self) -> list[tuple[int, int]]:
        return sorted((min(v, p), max(v, p)) for v, p in enumerate(self.parent) if p >= 0)


def bfs_tree(g: Graph, root: int = 0) -> SpanningTree:
    parent = [-1] * g.n
    depth = [-1] * g.n
    depth[root] = 0
    order = [root]
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for w in g.adjacency[v]:
            if depth[w] < 0:
                depth[w] = depth[v] + 1
                parent[w] = v
                order.append(w)
                queue.append(w)
    if len(order) != g.n:
        missing = next(v for v in range(g.n) if depth[v] < 0)
        raise DisconnectedGraph(root, missing)
    return SpanningTree(root, tuple(parent), tuple(depth), tuple(order))


# ---------------------------------------------------------------------------
# isomorphism
# ---------------------------------------------------------------------------

ISO_VERTEX_LIMIT = 5000


def _refine(g: Graph, colors: list) -> tuple[list[int], list]:
    """Colour refinement to a stable partition.

    Returns integer colours plus the per-round sorted signatures, which are
    invariant under relabelling and make a usable fingerprint.
    """
    vocab0 = {c: k for k, c in enumerate(sorted(set(colors)))}
    cur = [vocab0[c] for c in colors]
    history = [tuple(sorted(vocab0))]
    for _ in range(g.n):
        sig = [(cur[v], tuple(sorted(cur[w] for w in g.adjacency[v]))) for v in range(g.n)]
        vocab = {c: k for k, c in enumerate(sorted(set(sig)))}
        history.append(tuple(sorted(sig)))
        nxt = [vocab[x] for x in sig]
        if len(vocab) == len(set(cur)):
            return nxt, history
        cur = nxt
    return cur, history


def _profiles(g: Graph, d: np.ndarray) -> list:
    diam = int(d.max()) if g.n else 0
    prof = []
    for v in range(g.n):
        row = d[v]
        hist = np.bincount(row[row >= 0], minlength=diam + 1)
        prof.append((g.degree(v), int((row < 0).sum()), tuple(hist.tolist())))
    return prof


def wl_hash(g: Graph) -> str:
    """Isomorphism-invariant fingerprint (refinement history digest)."""
    import hashlib

    d = distances_or_none(g)
    _, history = _refine(g, _profiles(g, d))
    return hashlib.sha1(repr((g.n, len(g.edges), history)).encode()).hexdigest()


def find_isomorphism(g1: Graph, g2: Graph) -> list[int] | None:
    """Return a vertex map ``f`` with ``g1 ~ g2`` via ``v -> f[v]``, or None."""
    if max(g1.n, g2.n) > ISO_VERTEX_LIMIT:
        raise SizeLimitExceeded(f"isomorphism test limited to {ISO_VERTEX_LIMIT} vertices")
    if g1.n != g2.n or len(g1.edges) != len(g2.edges):
        return None
    if sorted(g1.degrees()) != sorted(g2.degrees()):
        return None
    n = g1.n
    if n == 0:
        return []
    d1, d2 = distances_or_none(g1), distances_or_none(g2)
    p1, p2 = _profiles(g1, d1), _profiles(g2, d2)
    if sorted(p1) != sorted(p2):
        return None
    # refine both graphs with a shared colour vocabulary
    c1, c2 = p1, p2
    for _ in range(n):
        s1 = [(c1[v], tuple(sorted(c1[w] for w in g1.adjacency[v]))) for v in range(n)]
        s2 = [(c2[v], tuple(sorted(c2[w] for w in g2.adjacency[v]))) for v in range(n)]
        if sorted(s1) != sorted(s2):
            return None
        vocab = {c: k for k, c in enumerate(sorted(set(s1)))}
        n1 = [vocab[c] for c in s1]
        n2 = [vocab[c] for c in s2]
        stable = len(vocab) == len(set(c1))
        c1, c2 = n1, n2
        if stable:
            break
    cls2: dict[int, list[int]] = {}
    for v in range(n):
        cls2.setdefault(c2[v], []).append(v)
    # order g1's vertices: rarest colour first, then BFS-like by adjacency to placed ones
    order: list[int] = []
    placed = [False] * n
    count = {c: len(vs) for c, vs in cls2.items()}
    while len(order) < n:
        start = min((v for v in range(n) if not placed[v]), key=lambda v: (count[c1[v]], v))
        queue = deque([start])
        placed[start] = True
        while queue:
            v = queue.popleft()
            order.append(v)
            for w in sorted(g1.adjacency[v], key=lambda w: (count[c1[w]], w)):
                if not placed[w]:
                    placed[w] = True
                    queue.append(w)
    f = [-1] * n
    used = [False] * n

    def extend(k: int) -> bool:
        if k == n:
            return True
        u = order[k]
        mapped = order[:k]
        for v in cls2[c1[u]]:
            if used[v]:
                continue
            if any(d1[u, w] != d2[v, f[w]] for w in mapped):
                continue
            f[u] = v
            used[v] = True
            if extend(k + 1):
                return True
            used[v] = False
            f[u] = -1
        return False

    import sys

    limit = sys.getrecursionlimit()
    if limit < n + 100:
        sys.setrecursionlimit(n + 100)
    try:
        ok = extend(0)
    finally:
        sys.setrecursionlimit(limit)
    if not ok:
        return None
    assert all(g2.has_edge(f[i], f[j]) for i, j in g1.edges)
    return f


def isomorphic(g1: Graph, g2: Graph) -> bool:
    return find_isomorphism(g1, g2) is not None


def girth(g: Graph) -> int:
    """Length of a shortest cycle (0 for forests)."""
    best = 0
    for s in range(g.n):
        dist = [-1] * g.n
        par = [-1] * g.n
        dist[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            if best and 2 * dist[v] + 1 >= best:
                break
            for w in g.adjacency[v]:
                if dist[w] < 0:
                    dist[w] = dist[v] + 1
                    par[w] = v
                    queue.append(w)
                elif par[v] != w:
                    cyc = dist[v] + dist[w] + 1
                    if not best or cyc < best:
                        best = cyc
    return best
