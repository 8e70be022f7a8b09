"""Search for scale-2 (half-cube) and truncated embeddings.

A scale-2 embedding gives every edge e a 2-set S_e of flipped coordinates.
The search works on the intersection sizes i(e, e') = |S_e & S_e'| in
{0, 1, 2}: it seeds them from the metric, propagates the consistency rules,
branches on whatever is left open, and at each fully determined table turns
the class-intersection graph back into coordinates through its inverse line
graphs.  Every candidate is verified pair by pair before it is reported.

Branching follows BFS order.  Once the classes on a prefix of the BFS order
are fully decided, that prefix is realized and the next vertex is tried on
top of it, which narrows the domains of its new classes before branching.

Domains are 3-bit masks (see ``_kernels``).
"""

from __future__ import annotations

import multiprocessing as mp
import time
from collections import Counter
from itertools import combinations
from dataclasses import dataclass, field
from typing import Iterator

import numpy as np

from . import _kernels
from .certify import VerificationReport, Violation
from .graph import (
    DistanceMatrix,
    Graph,
    GraphError,
    SpanningTree,
    all_pairs_distances,
    bfs_tree,
    build_graph,
    cartesian_product,
)
from .linegraph import RootGraph, iter_inverse_line_graphs

UNKNOWN = None
DEFAULT_NODE_BUDGET = 10 ** 8
FRONTIER_TARGET = 32

EMBEDDABLE = "Embeddable"
NOT_EMBEDDABLE = "NotEmbeddable"
TR_EMBEDDABLE = "TrEmbeddable"
NOT_TR_EMBEDDABLE = "NotTrEmbeddable"
UNKNOWN_STATUS = "Unknown"


class ContradictionDetected(Exception):
    pass


class ScaleMismatch(ValueError):
    pass


class NotCollapsible(ValueError):
    pass


# ---------------------------------------------------------------------------
# oracle and table
# ---------------------------------------------------------------------------


def sigma_oracle(D: DistanceMatrix | np.ndarray, s: int, e: tuple[int, int], e2: tuple[int, int]) -> int | None:
    """d(u,y) + d(v,x) - d(u,x) - d(v,y) for e=(u,v), e2=(x,y); None unless all four are <= s."""
    d = D.d if isinstance(D, DistanceMatrix) else D
    (u, v), (x, y) = e, e2
    cross = (int(d[u, x]), int(d[u, y]), int(d[v, x]), int(d[v, y]))
    if max(cross) > s:
        return UNKNOWN
    dux, duy, dvx, dvy = cross
    return duy + dvx - dux - dvy


def values_of(mask: int) -> tuple[int, ...]:
    return tuple(v for v in range(3) if (mask >> v) & 1)


@dataclass
class IntersectionTable:
    """Value domains between edge classes plus the union-find over edges.

    Rows belonging to non-representative edges are stale; read values through
    :meth:`value`, which maps both edges to their class first.
    """

    edges: tuple[tuple[int, int], ...]
    dom: np.ndarray
    parent: np.ndarray
    active: np.ndarray
    prefix: tuple | None = field(default=None, compare=False, repr=False)  # (k, realizations)

    def copy(self) -> "IntersectionTable":
        return IntersectionTable(self.edges, self.dom.copy(), self.parent.copy(), self.active.copy(),
                                 self.prefix)

    def roots(self) -> np.ndarray:
        """Class representative of every edge."""
        r = self.parent.copy()
        while True:
            nxt = r[r]
            if (nxt == r).all():
                return r
            r = nxt

    def find(self, e: int) -> int:
        while self.parent[e] != e:
            e = int(self.parent[e])
        return e

    def value(self, e1: int, e2: int) -> tuple[int, ...]:
        a, b = self.find(e1), self.find(e2)
        if a == b:
            return (2,)
        return values_of(int(self.dom[a, b]))

    def classing(self) -> "EdgeClassing":
        rep = tuple(self.find(e) for e in range(len(self.edges)))
        reps = tuple(int(r) for r in np.flatnonzero(self.active))
        members = {r: [] for r in reps}
        for e, r in enumerate(rep):
            members[r].append(e)
        return EdgeClassing(rep, reps, tuple(tuple(members[r]) for r in reps))

    def open_pair(self) -> tuple[int, int] | None:
        """First class pair (a < b, row-major) whose value is not yet fixed."""
        idx = np.flatnonzero(self.active)
        sub = self.dom[np.ix_(idx, idx)]
        undecided = np.triu((sub & (sub - 1)) != 0, 1)
        flat = np.flatnonzero(undecided)
        if len(flat) == 0:
            return None
        r, c = divmod(int(flat[0]), len(idx))
        return int(idx[r]), int(idx[c])

    def is_determined(self) -> bool:
        return self.open_pair() is None


@dataclass(frozen=True)
class EdgeClassing:
    rep: tuple[int, ...]  # rep[e] = class representative of edge e
    representatives: tuple[int, ...]
    members: tuple[tuple[int, ...], ...]

    @property
    def count(self) -> int:
        return len(self.representatives)


def _check_s(D: DistanceMatrix, s: int | None) -> int:
    if s is None:
        return D.diameter
    s = int(s)
    if s < min(2, D.diameter):
        raise GraphError("truncation level s must be at least 2")
    return min(s, D.diameter)


def seed_table(g: Graph, D: DistanceMatrix | None = None, s: int | None = None,
               propagate_rules: bool = True) -> IntersectionTable:
    """Seed every edge pair from the metric, then run the rules to a fixed point.

    Raises ContradictionDetected when the metric alone rules out an embedding.
    """
    D = all_pairs_distances(g) if D is None else D
    s = _check_s(D, s)
    eu = np.array([u for u, _ in g.edges], dtype=np.int64)
    ev = np.array([v for _, v in g.edges], dtype=np.int64)
    dist = np.ascontiguousarray(D.d, dtype=np.int64)
    dom = _kernels.seed_domains(dist, eu, ev, s)
    table = IntersectionTable(g.edges, dom, np.arange(len(g.edges), dtype=np.int64),
                              np.ones(len(g.edges), dtype=np.bool_))
    if (dom == 0).any():
        raise ContradictionDetected("some edge pair admits no intersection size")
    if propagate_rules and not propagate(table):
        raise ContradictionDetected("the consistency rules leave some pair without a value")
    return table


def propagate(table: IntersectionTable, impl=None) -> bool:
    """Apply the merge rule and the triple rule in place; False on contradiction."""
    return _kernels.propagate(table.dom, table.parent, table.active, impl)


# ---------------------------------------------------------------------------
# embeddings
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Embedding:
    scale: int
    s: int
    m: int
    addresses: tuple[str, ...]  # per vertex index; character c is coordinate c
    class_of_edge: tuple[int, ...] = field(default=(), repr=False, compare=False)
    class_pairs: tuple[tuple[int, ...], ...] = field(default=(), repr=False, compare=False)

    def bits(self) -> np.ndarray:
        n = len(self.addresses)
        out = np.zeros((n, self.m), dtype=np.uint8)
        for i, a in enumerate(self.addresses):
            out[i] = np.frombuffer(a.encode("ascii"), dtype=np.uint8) - 48
        return out

    def to_dict(self) -> dict:
        return {"scale": self.scale, "s": self.s, "m": self.m, "addresses": list(self.addresses)}


def _int_to_bits(x: int, m: int) -> str:
    return "".join("1" if (x >> c) & 1 else "0" for c in range(m))


def verify_embedding(g: Graph, D: DistanceMatrix, emb: Embedding) -> VerificationReport:
    """Pairwise check of an embedding at its own scale and truncation level."""
    bits = emb.bits().astype(bool)
    d = np.asarray(D.d, dtype=np.int64)
    ham = (bits[:, None, :] != bits[None, :, :]).sum(axis=2)
    want = emb.scale * d
    upper = np.triu(np.ones_like(d, dtype=bool), 1)
    near = d <= emb.s
    kinds = (
        ("duplicate-address", upper & (ham == 0)),
        ("equality-broken", upper & near & (ham != want) & (ham != 0)),
        ("exceeds", upper & ~near & (ham > want)),
    )
    found = [Violation(int(i), int(j), int(d[i, j]), float(ham[i, j]) / emb.scale, kind)
             for kind, mask in kinds for i, j in zip(*np.nonzero(mask))]
    if emb.scale == 2:
        weight = bits.sum(axis=1)
        found += [Violation(int(v), int(v), 0, float(weight[v]) / 2, "parity")
                  for v in np.flatnonzero(weight % 2)]
    found.sort(key=lambda x: (x.u, x.v))
    short = tuple((int(i), int(j), int(d[i, j]), float(ham[i, j]) / emb.scale)
                  for i, j in zip(*np.nonzero(upper & ~near & (ham < want) & (ham != 0))))
    d_prime = ham / emb.scale
    d_prime.setflags(write=False)
    return VerificationReport(emb.scale, emb.s, not found, d_prime, tuple(found), len(short), short)


def is_collapsible(emb: Embedding) -> bool:
    seen: set[int] = set()
    for pair in emb.class_pairs:
        if seen & set(pair):
            return False
        seen.update(pair)
    return emb.scale == 2 and bool(emb.class_pairs)


def collapse_to_scale1(emb: Embedding, g: Graph | None = None, D: DistanceMatrix | None = None) -> Embedding:
    """Merge each class's coordinate pair into one coordinate (needs pairwise disjoint classes)."""
    if emb.scale != 2 or not is_collapsible(emb):
        raise NotCollapsible("some edge classes share a coordinate")
    keep = [pair[0] for pair in emb.class_pairs]
    addresses = tuple("".join(a[c] for c in keep) for a in emb.addresses)
    out = Embedding(1, emb.s, len(keep), addresses, emb.class_of_edge,
                    tuple((k,) for k in range(len(keep))))
    if g is not None:
        D = all_pairs_distances(g) if D is None else D
        if not verify_embedding(g, D, out).passed:
            raise NotCollapsible("collapsed addressing fails verification")
    return out


def product_embed(emb1: Embedding, emb2: Embedding, g1: Graph | None = None,
                  g2: Graph | None = None) -> Embedding:
    """Concatenate addresses; vertex (a, b) of the product has index a*n2 + b."""
    if emb1.scale != emb2.scale:
        raise ScaleMismatch(f"scales differ: {emb1.scale} vs {emb2.scale}")
    addresses = tuple(a + b for a in emb1.addresses for b in emb2.addresses)
    out = Embedding(emb1.scale, emb1.s + emb2.s, emb1.m + emb2.m, addresses)
    if g1 is not None and g2 is not None:
        prod = cartesian_product(g1, g2)
        rep = verify_embedding(prod, all_pairs_distances(prod), out)
        if not rep.passed:
            raise GraphError(f"product addressing fails verification: {rep.summary()}")
    return out


# ---------------------------------------------------------------------------
# search
# ---------------------------------------------------------------------------


@dataclass
class SearchOutcome:
    status: str
    s: int
    diameter: int
    embeddings: list[Embedding]
    count: int
    counts_by_m: dict[int, int]
    scale: int | None
    m: int | None
    nodes: int
    leaves: int
    elapsed: float = field(compare=False)
    reason: str = ""

    @property
    def positive(self) -> bool:
        return self.status in (EMBEDDABLE, TR_EMBEDDABLE)

    @property
    def negative(self) -> bool:
        return self.status in (NOT_EMBEDDABLE, NOT_TR_EMBEDDABLE)

    def label(self) -> str:
        if self.status in (TR_EMBEDDABLE, NOT_TR_EMBEDDABLE):
            return f"{self.status}({self.s})"
        return self.status

    def key(self) -> tuple:
        """Everything except wall-clock time, for determinism comparisons."""
        return (self.status, self.s, self.diameter, tuple(self.embeddings), self.count,
                tuple(sorted(self.counts_by_m.items())), self.scale, self.m, self.nodes,
                self.leaves, self.reason)


@dataclass
class _Context:
    g: Graph
    D: DistanceMatrix
    s: int
    tree: SpanningTree
    tree_edge: tuple[int, ...]  # edge index joining v to its tree parent (-1 at root)
    first_only: bool
    edge_rank: np.ndarray  # later BFS position of the two endpoints
    bfs_pos: np.ndarray


@dataclass
class _Run:
    solutions: list = field(default_factory=list)
    nodes: int = 0
    nodes_at_first: int = -1
    leaves: int = 0
    leaves_at_first: int = -1
    over_budget: bool = False
    timed_out: bool = False


def _make_context(g: Graph, D: DistanceMatrix, s: int, first_only: bool) -> _Context:
    tree = bfs_tree(g, 0)
    tree_edge = tuple(-1 if p < 0 else g.edge_index[(min(v, p), max(v, p))] for v, p in enumerate(tree.parent))
    pos = np.empty(g.n, dtype=np.int64)
    pos[np.asarray(tree.order)] = np.arange(g.n)
    rank = np.array([max(pos[u], pos[v]) for u, v in g.edges], dtype=np.int64)
    return _Context(g, D, s, tree, tree_edge, first_only, rank, pos)


def _leaf_solutions(ctx: _Context, table: IntersectionTable) -> Iterator[Embedding]:
    cl = table.classing()
    k = cl.count
    pos = {r: i for i, r in enumerate(cl.representatives)}
    reps = np.array(cl.representatives, dtype=np.int64)
    sub = table.dom[np.ix_(reps, reps)]
    h_edges = [(i, j) for i, j in zip(*np.nonzero(np.triu(sub == 2, 1)))]
    h = build_graph("H", range(k), h_edges)
    class_idx = tuple(pos[cl.rep[e]] for e in range(len(ctx.g.edges)))
    order = ctx.tree.order
    for root in iter_inverse_line_graphs(h):
        masks = [(1 << a) | (1 << b) for a, b in root.pairs]
        addr = [0] * ctx.g.n
        for v in order[1:]:
            addr[v] = addr[ctx.tree.parent[v]] ^ masks[class_idx[ctx.tree_edge[v]]]
        # every edge, tree or not, must flip exactly its class's coordinates
        if any(addr[u] ^ addr[v] != masks[class_idx[e]] for e, (u, v) in enumerate(ctx.g.edges)):
            continue
        emb = Embedding(2, ctx.s, root.m, tuple(_int_to_bits(a, root.m) for a in addr),
                        class_idx, root.pairs)
        if verify_embedding(ctx.g, ctx.D, emb).passed:
            yield emb


def _class_ranks(ctx: _Context, table: IntersectionTable) -> np.ndarray:
    """Smallest edge rank in each class (indexed by representative)."""
    rank = np.full(len(table.edges), np.iinfo(np.int64).max, dtype=np.int64)
    np.minimum.at(rank, table.roots(), ctx.edge_rank)
    return rank


def _next_pair(ctx: _Context, table: IntersectionTable, rank: np.ndarray) -> tuple[int, int] | None:
    """Open class pair that closes the shortest BFS prefix first; None if none is open."""
    idx = np.flatnonzero(table.active)
    sub = table.dom[np.ix_(idx, idx)]
    ii, jj = np.nonzero(np.triu((sub & (sub - 1)) != 0, 1))
    if len(ii) == 0:
        return None
    ra, rb = rank[idx[ii]], rank[idx[jj]]
    best = np.lexsort((idx[jj], idx[ii], np.minimum(ra, rb), np.maximum(ra, rb)))[0]
    return int(idx[ii[best]]), int(idx[jj[best]])


def _prefix_roots(ctx: _Context, table: IntersectionTable, rank: np.ndarray, k: int):
    """Realizations of the classes living on the first k BFS vertices.

    All pairs among those classes are decided.  Each realization is returned
    as (addresses of order[:k], coordinate count, mask per class); any full
    solution restricts to one of them up to renaming coordinates.
    """
    reps = np.flatnonzero(table.active & (rank < k))
    pos = {int(r): i for i, r in enumerate(reps)}
    sub = table.dom[np.ix_(reps, reps)]
    h = build_graph("H", range(len(reps)), list(zip(*np.nonzero(np.triu(sub == 2, 1)))))
    roots_of = table.roots()
    order = ctx.tree.order[:k]
    prefix_edges = [(e, u, v) for e, (u, v) in enumerate(ctx.g.edges) if ctx.edge_rank[e] < k]
    d = ctx.D.d
    pairs = [(i, j, int(d[order[i], order[j]])) for i in range(k) for j in range(i + 1, k)]
    at = {v: i for i, v in enumerate(order)}
    found = []
    for root in iter_inverse_line_graphs(h):
        masks = [(1 << a) | (1 << b) for a, b in root.pairs]
        addr = [0] * k
        for i in range(1, k):
            v = order[i]
            addr[i] = addr[at[ctx.tree.parent[v]]] ^ masks[pos[int(roots_of[ctx.tree_edge[v]])]]
        if any(addr[at[u]] ^ addr[at[v]] != masks[pos[int(roots_of[e])]] for e, u, v in prefix_edges):
            continue
        if all(_metric_ok((addr[i] ^ addr[j]).bit_count(), dij, ctx.s) for i, j, dij in pairs):
            found.append((tuple(addr), root.m, {int(r): masks[i] for i, r in enumerate(reps)}))
    return found


def _metric_ok(h: int, d: int, s: int) -> bool:
    return h != 0 and (h == 2 * d if d <= s else h <= 2 * d)


def _lookahead(ctx: _Context, table: IntersectionTable, rank: np.ndarray, k: int,
               prefix) -> dict | None:
    """Place vertex order[k] on top of every prefix realization.

    Returns, for each pair (new class, other class) that the placement
    decides, the mask of values some valid placement gives it; None if the
    vertex cannot be placed at all.
    """
    v = ctx.tree.order[k]
    order = ctx.tree.order
    at = {w: i for i, w in enumerate(order[:k])}
    roots_of = table.roots()
    incident = [(e, at[w]) for w in ctx.g.adjacency[v] if w in at
                for e in (ctx.g.edge_index[(min(v, w), max(v, w))],)]
    cls = [int(roots_of[e]) for e, _ in incident]
    dist = [int(ctx.D.d[v, order[i]]) for i in range(k)]
    p = at[ctx.tree.parent[v]]
    support: dict[tuple[int, int], int] = {}
    any_ok = False
    for addr, m, mask_of in prefix:
        old = [y for y in mask_of]
        for c1 in range(m + 2):
            for c2 in range(c1 + 1, m + 2):
                if c2 == m + 1 and c1 < m:
                    continue  # fresh coordinates are used in order
                a = addr[p] ^ (1 << c1) ^ (1 << c2)
                if not all(_metric_ok((a ^ addr[i]).bit_count(), dist[i], ctx.s) for i in range(k)):
                    continue
                flips = [a ^ addr[i] for _, i in incident]
                seen: dict[tuple[int, int], int] = {}
                ok = True
                for t, x in zip(flips, cls):
                    if x in mask_of:
                        if t != mask_of[x]:
                            ok = False
                            break
                        continue
                    for y in old:
                        val = (t & mask_of[y]).bit_count()
                        if not (table.dom[x, y] >> val) & 1:
                            ok = False
                            break
                        seen[(x, y)] = seen.get((x, y), 0) | (1 << val)
                    if not ok:
                        break
                if ok:
                    for (t1, x1), (t2, x2) in combinations(list(zip(flips, cls)), 2):
                        if x1 in mask_of or x2 in mask_of:
                            continue
                        if x1 == x2:
                            if t1 != t2:
                                ok = False
                                break
                            continue
                        val = (t1 & t2).bit_count()
                        if not (table.dom[x1, x2] >> val) & 1:
                            ok = False
                            break
                        key = (min(x1, x2), max(x1, x2))
                        seen[key] = seen.get(key, 0) | (1 << val)
                if ok:
                    any_ok = True
                    for key, val in seen.items():
                        support[key] = support.get(key, 0) | val
    return support if any_ok else None


def _narrow(ctx: _Context, table: IntersectionTable) -> tuple[int, int] | None | bool:
    """Tighten the table with the prefix check and lookahead, then pick a pair.

    Returns the pair to branch on, None at a leaf, False if the node is dead.
    """
    while True:
        rank = _class_ranks(ctx, table)
        pair = _next_pair(ctx, table, rank)
        if pair is None:
            return None
        k = int(max(rank[pair[0]], rank[pair[1]]))  # every class pair inside order[:k] is decided
        if table.prefix is None or table.prefix[0] != k:
            roots = _prefix_roots(ctx, table, rank, k)
            if not roots:
                return False
            table.prefix = (k, roots)
        support = _lookahead(ctx, table, rank, k, table.prefix[1])
        if support is None:
            return False
        changed = False
        for (x, y), mask in support.items():
            cur = int(table.dom[x, y])
            new = cur & mask
            if new == 0:
                return False
            if new != cur:
                table.dom[x, y] = table.dom[y, x] = new
                changed = True
        if not changed:
            return pair
        if not propagate(table):
            return False


def _children(ctx: _Context, table: IntersectionTable) -> list[IntersectionTable] | None:
    """Branch on the next open pair; None at a leaf, [] for a dead node."""
    pair = _narrow(ctx, table)
    if pair is None:
        return None
    if pair is False:
        return []
    a, b = pair
    out = []
    for v in values_of(int(table.dom[a, b])):
        child = table.copy()
        child.dom[a, b] = child.dom[b, a] = 1 << v
        if propagate(child):
            out.append(child)
        else:
            out.append(False)  # counted as a node, nothing to explore
    return out


def _dfs(ctx: _Context, start: IntersectionTable, budget: int, deadline: float | None,
         nodes0: int = 0) -> _Run:
    run = _Run(nodes=nodes0)
    stack = [start]
    while stack:
        table = stack.pop()
        kids = _children(ctx, table)
        if kids is None:
            run.leaves += 1
            for emb in _leaf_solutions(ctx, table):
                run.solutions.append(emb)
                if run.nodes_at_first < 0:
                    run.nodes_at_first = run.nodes
                    run.leaves_at_first = run.leaves
                if ctx.first_only:
                    return run
            continue
        run.nodes += len(kids)
        if run.nodes > budget:
            run.over_budget = True
            return run
        if deadline is not None and time.monotonic() > deadline:
            run.timed_out = True
            return run
        stack.extend(k for k in reversed(kids) if k is not False)
    return run


def _frontier(ctx: _Context, root: IntersectionTable, target: int) -> tuple[list[IntersectionTable], int]:
    """Expand level by level, keeping DFS order, until ``target`` subtrees exist."""
    frontier = [root]
    nodes = 0
    while len(frontier) < target:
        grown = []
        expanded = False
        for t in frontier:
            kids = _children(ctx, t)
            if kids is None:
                grown.append(t)
                continue
            expanded = True
            nodes += len(kids)
            grown.extend(k for k in kids if k is not False)
        frontier = grown
        if not expanded:
            break
    return frontier, nodes


_WORKER: dict = {}


def _worker_run(args):
    i, budget, deadline = args
    ctx = _WORKER["ctx"]
    return i, _dfs(ctx, _WORKER["frontier"][i], budget, deadline)


def _status(positive: bool, s: int, diam: int) -> str:
    if s >= diam:
        return EMBEDDABLE if positive else NOT_EMBEDDABLE
    return TR_EMBEDDABLE if positive else NOT_TR_EMBEDDABLE


def _summarise(sols: list[Embedding]) -> tuple[int | None, int | None]:
    if not sols:
        return None, None
    collapsible = [e.m // 2 for e in sols if is_collapsible(e)]
    if collapsible:
        return 1, min(collapsible)
    return 2, min(e.m for e in sols)


def embed(g: Graph, s: int | None = None, first_only: bool = False,
          node_budget: int = DEFAULT_NODE_BUDGET, time_budget: float | None = None,
          jobs: int = 1, D: DistanceMatrix | None = None) -> SearchOutcome:
    """Search scale-2 s-truncated embeddings of ``g`` (s defaults to the diameter).

    With ``first_only`` the search stops at the first verified embedding;
    otherwise every solution is collected.  Results, counts and node numbers do
    not depend on ``jobs``.
    """
    t0 = time.monotonic()
    if g.n < 2:
        raise GraphError("embedding needs at least 2 vertices")
    D = all_pairs_distances(g) if D is None else D
    s = _check_s(D, s)
    deadline = None if time_budget is None else t0 + time_budget

    def done(status, sols, nodes, leaves, reason=""):
        scale, m = _summarise(sols)
        counts = dict(sorted(Counter(e.m for e in sols).items()))
        return SearchOutcome(status, s, D.diameter, sols, len(sols), counts, scale, m,
                             nodes, leaves, time.monotonic() - t0, reason)

    try:
        root = seed_table(g, D, s)
    except ContradictionDetected as exc:
        return done(_status(False, s, D.diameter), [], 1, 0, str(exc))

    ctx = _make_context(g, D, s, first_only)
    frontier, nodes = _frontier(ctx, root, FRONTIER_TARGET)
    nodes += 1
    if nodes > node_budget:
        return done(UNKNOWN_STATUS, [], node_budget + 1, 0, "node budget exceeded")

    runs: list[_Run | None] = [None] * len(frontier)
    if jobs > 1 and len(frontier) > 1:
        _WORKER["ctx"], _WORKER["frontier"] = ctx, frontier
        try:
            with mp.get_context("fork").Pool(jobs) as pool:
                for i, run in pool.imap_unordered(_worker_run,
                                                  [(i, node_budget, deadline) for i in range(len(frontier))]):
                    runs[i] = run
        finally:
            _WORKER.clear()
    else:
        used = nodes
        for i, sub in enumerate(frontier):
            run = _dfs(ctx, sub, node_budget - used, deadline)
            runs[i] = run
            used += run.nodes
            if run.over_budget or run.timed_out or (first_only and run.solutions):
                break

    # merge in DFS order, reproducing the sequential accounting
    sols: list[Embedding] = []
    leaves = 0
    for run in runs:
        if run is None:
            break
        if first_only and run.solutions:
            if nodes + run.nodes_at_first > node_budget:
                return done(UNKNOWN_STATUS, [], node_budget + 1, 0, "node budget exceeded")
            nodes += run.nodes_at_first
            leaves += run.leaves_at_first
            sols.append(run.solutions[0])
            break
        nodes += run.nodes
        leaves += run.leaves
        if nodes > node_budget or run.over_budget:
            return done(UNKNOWN_STATUS, [], node_budget + 1, 0, "node budget exceeded")
        if run.timed_out:
            return done(UNKNOWN_STATUS, [], nodes, leaves, "time budget exceeded")
        sols.extend(run.solutions)
    return done(_status(bool(sols), s, D.diameter), sols, nodes, leaves)


def enumerate_embeddings(g: Graph, s: int | None = None, **kw) -> SearchOutcome:
    kw["first_only"] = False
    return embed(g, s, **kw)

