"""Generators for the interconnection-network families.

Label schemes
-------------
* bit-string families (hypercube, Fibonacci, indel, ...): the string itself,
  ``"ε"`` for the empty word;
* permutation families: one-line notation with letters, ``"ABCD"`` is the
  identity of Sym(4);
* chordal rings: ring positions ``"1"`` .. ``"n"``;
* everything else: a short tuple-like text documented at the generator.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from importlib import resources
from itertools import combinations, permutations, product
from typing import Callable, Sequence

from .graph import Graph, GraphError, bipartite_double, build_graph, graph_from_labeled_edges


class InvalidParams(GraphError):
    pass


KINDS = (
    "hypercube", "halfcube", "johnson", "cycle", "path", "complete", "complete_multipartite",
    "cocktail_party", "gp", "moebius_ladder", "odd", "double_odd", "debruijn", "kautz", "ccc",
    "butterfly", "fibonacci", "lucas", "indel", "levenshtein", "ulam", "cayley_star",
    "cayley_bubble", "cayley_pancake", "cayley_sos_full", "cayley_sos_partial", "gcr",
    "hoffman_singleton", "shrikhande", "dyck", "klein_cubic", "k444", "platonic",
)

PERMUTATION_CAP = math.factorial(7)


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: tuple[int, ...] = ()

    def __post_init__(self):
        if self.kind not in KINDS:
            raise InvalidParams(f"unknown family {self.kind!r}")
        object.__setattr__(self, "params", tuple(int(p) for p in self.params))

    def to_dict(self) -> dict:
        return {"kind": self.kind, "params": list(self.params)}


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise InvalidParams(msg)


def _bits(x: int, m: int) -> str:
    return format(x, f"0{m}b") if m else ""


# ---------------------------------------------------------------------------
# classical graphs
# ---------------------------------------------------------------------------


def hypercube(m: int) -> Graph:
    _need(m >= 1, "hypercube needs m >= 1")
    labels = [_bits(x, m) for x in range(2 ** m)]
    edges = [(x, x ^ (1 << c)) for x in range(2 ** m) for c in range(m) if x < x ^ (1 << c)]
    return build_graph(f"H_{m}", labels, edges)


def halfcube(m: int) -> Graph:
    _need(m >= 2, "half-cube needs m >= 2")
    verts = [x for x in range(2 ** m) if bin(x).count("1") % 2 == 0]
    pos = {x: k for k, x in enumerate(verts)}
    edges = [(pos[x], pos[y]) for x, y in combinations(verts, 2) if bin(x ^ y).count("1") == 2]
    return build_graph(f"1/2H_{m}", [_bits(x, m) for x in verts], edges)


def johnson(m: int, k: int) -> Graph:
    _need(0 <= k <= m and m >= 1, "johnson needs 0 <= k <= m")
    subs = list(combinations(range(1, m + 1), k))
    labels = ["{" + ",".join(map(str, s)) + "}" for s in subs]
    edges = [(i, j) for (i, a), (j, b) in combinations(enumerate(subs), 2)
             if len(set(a) & set(b)) == k - 1]
    return build_graph(f"J({m},{k})", labels, edges)


def cycle(n: int) -> Graph:
    _need(n >= 3, "cycle needs n >= 3")
    return build_graph(f"C_{n}", range(n), [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    """Path on ``n`` vertices."""
    _need(n >= 1, "path needs n >= 1")
    return build_graph(f"P_{n}", range(n), [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    _need(n >= 1, "complete graph needs n >= 1")
    return build_graph(f"K_{n}", range(n), combinations(range(n), 2))


def complete_multipartite(parts: Sequence[int]) -> Graph:
    _need(len(parts) >= 1 and all(p >= 1 for p in parts), "parts must be positive")
    owner = [k for k, p in enumerate(parts) for _ in range(p)]
    labels = [f"{k}.{i}" for k, p in enumerate(parts) for i in range(p)]
    edges = [(i, j) for i, j in combinations(range(len(owner)), 2) if owner[i] != owner[j]]
    return build_graph("K_{" + ",".join(map(str, parts)) + "}", labels, edges)


def cocktail_party(k: int) -> Graph:
    g = complete_multipartite([2] * k)
    return g.relabel(name=f"CP({k})")


def gp(n: int, k: int) -> Graph:
    """Generalized Petersen graph: outer ``u0..`` (indices 0..n-1), inner ``v0..``."""
    _need(n >= 3 and 1 <= k and 2 * k < n, "gp needs n >= 3 and 1 <= k < n/2")
    labels = [f"u{i}" for i in range(n)] + [f"v{i}" for i in range(n)]
    edges = []
    for i in range(n):
        edges += [(i, (i + 1) % n), (i, n + i), (n + i, n + (i + k) % n)]
    return build_graph(f"GP({n},{k})", labels, edges)


def prism(n: int) -> Graph:
    return gp(n, 1).relabel(name=f"Prism_{n}")


def moebius_ladder(n: int) -> Graph:
    """M_n: the n-cycle (n even) plus its n/2 antipodal chords."""
    _need(n >= 4 and n % 2 == 0, "Moebius ladder needs an even vertex count >= 4")
    edges = [(i, (i + 1) % n) for i in range(n)] + [(i, i + n // 2) for i in range(n // 2)]
    return build_graph(f"M_{n}", range(n), edges)


def odd(n: int) -> Graph:
    """O_n on the (n-1)-subsets of {1..2n-1}; adjacency is disjointness."""
    _need(n >= 2, "odd graph needs n >= 2")
    subs = list(combinations(range(1, 2 * n), n - 1))
    labels = ["{" + ",".join(map(str, s)) + "}" for s in subs]
    edges = [(i, j) for (i, a), (j, b) in combinations(enumerate(subs), 2) if not set(a) & set(b)]
    return build_graph(f"O_{n}", labels, edges)


def double_odd(n: int) -> Graph:
    """Bipartite double of O_n (the graph DO_{2n-1})."""
    return bipartite_double(odd(n), name=f"DO_{2 * n - 1}")


def _word(t: Sequence[int], m: int) -> str:
    return ("" if m <= 10 else ",").join(map(str, t))


def debruijn(m: int, n: int) -> Graph:
    _need(m >= 2 and n >= 1, "de Bruijn needs m >= 2, n >= 1")
    words = list(product(range(m), repeat=n))
    pairs = [(_word(w, m), _word(w[1:] + (a,), m)) for w in words for a in range(m)]
    return graph_from_labeled_edges(f"Br({m},{n})", [_word(w, m) for w in words], pairs)


def kautz(m: int, n: int) -> Graph:
    _need(m >= 2 and n >= 1, "Kautz needs m >= 2, n >= 1")
    words = [w for w in product(range(m), repeat=n) if all(w[i] != w[i + 1] for i in range(n - 1))]
    pairs = [(_word(w, m), _word(w[1:] + (a,), m)) for w in words for a in range(m) if a != w[-1]]
    return graph_from_labeled_edges(f"Ka({m},{n})", [_word(w, m) for w in words], pairs)


def ccc(n: int) -> Graph:
    """Cube-connected cycles; vertex (x, i) is labelled ``"x,i"``, index x*n + i.

    Position i of the cycle at x is joined to (x with bit i flipped, i); bits
    are counted from the left.
    """
    _need(n >= 3, "CCC needs n >= 3")
    labels = [f"{_bits(x, n)},{i}" for x in range(2 ** n) for i in range(n)]
    edges = []
    for x in range(2 ** n):
        for i in range(n):
            edges.append((x * n + i, x * n + (i + 1) % n))
            y = x ^ (1 << (n - 1 - i))
            edges.append((x * n + i, y * n + i))
    return build_graph(f"CCC_{n}", labels, edges)


def butterfly(n: int) -> Graph:
    """Undirected butterfly on pairs (w, i); label ``"w,i"``, index i*2^n + w."""
    _need(n >= 1, "butterfly needs n >= 1")
    size = 2 ** n
    labels = [f"{_bits(w, n)},{i}" for i in range(n + 1) for w in range(size)]
    edges = []
    for i in range(n):
        for w in range(size):
            for w2 in (w, w ^ (1 << (n - 1 - i))):
                edges.append((i * size + w, (i + 1) * size + w2))
    return build_graph(f"But({n})", labels, edges)


def fibonacci_like(kind: str, n: int) -> tuple[Graph, dict[str, str]]:
    """Fibonacci or Lucas cube with its inclusion addressing into H_n."""
    _need(kind in ("fibonacci", "lucas") and n >= 1, "fibonacci_like needs kind and n >= 1")
    words = [_bits(x, n) for x in range(2 ** n)]
    words = [w for w in words if "11" not in w]
    if kind == "lucas":
        words = [w for w in words if not (w[0] == "1" and w[-1] == "1")]
    index = {w: k for k, w in enumerate(words)}
    edges = []
    for w in words:
        for c in range(n):
            flipped = w[:c] + ("1" if w[c] == "0" else "0") + w[c + 1:]
            if flipped in index and index[w] < index[flipped]:
                edges.append((index[w], index[flipped]))
    name = f"Fi({n})" if kind == "fibonacci" else f"Lu({n})"
    return build_graph(name, words, edges), {w: w for w in words}


# ---------------------------------------------------------------------------
# editing-metric graphs
# ---------------------------------------------------------------------------

EMPTY_WORD = "ε"


def _show(w: str) -> str:
    return w if w else EMPTY_WORD


def _indels(w: str) -> set[str]:
    out = set()
    for c in range(len(w) + 1):
        for ch in "01":
            out.add(w[:c] + ch + w[c:])
    return out


def _lcs(x: Sequence, y: Sequence) -> int:
    prev = [0] * (len(y) + 1)
    for a in x:
        cur = [0]
        for j, b in enumerate(y):
            cur.append(prev[j] + 1 if a == b else max(prev[j + 1], cur[j]))
        prev = cur
    return prev[-1]


def word_graph(kind: str, i: int, n: int | None = None) -> Graph:
    """Indel, Levenshtein (binary words of lengths i..n) or Ulam (Sym(i)) graphs."""
    if kind == "ulam":
        size = i
        _need(size >= 2, "ulam needs n >= 2")
        _need(math.factorial(size) <= PERMUTATION_CAP, "ulam graph too large")
        perms = list(permutations(range(size)))
        labels = [_perm_label(p) for p in perms]
        edges = [(a, b) for a, b in combinations(range(len(perms)), 2)
                 if _lcs(perms[a], perms[b]) == size - 1]
        return build_graph(f"Ul({size})", labels, edges)
    _need(kind in ("indel", "levenshtein"), f"unknown word graph {kind!r}")
    _need(n is not None and 0 <= i <= n, "word graph needs 0 <= i <= n")
    words = [_bits(x, L) for L in range(i, n + 1) for x in range(2 ** L)]
    index = {w: k for k, w in enumerate(words)}
    edges = set()
    for w in words:
        if len(w) < n:
            for v in _indels(w):
                edges.add((index[w], index[v]))
        if kind == "levenshtein":
            for c in range(len(w)):
                v = w[:c] + ("1" if w[c] == "0" else "0") + w[c + 1:]
                edges.add((index[w], index[v]))
    tag = "Ind" if kind == "indel" else "Lev"
    name = f"{tag}_{{{','.join(str(L) for L in range(i, n + 1))}}}"
    return build_graph(name, [_show(w) for w in words], edges)


# ---------------------------------------------------------------------------
# Cayley graphs on Sym(n)
# ---------------------------------------------------------------------------


def _perm_label(p: Sequence[int]) -> str:
    return "".join(chr(65 + v) for v in p)


def _compose(g: Sequence[int], s: Sequence[int]) -> tuple[int, ...]:
    # one-line right action: (g s)(i) = g(s(i)), i.e. s permutes positions
    return tuple(g[s[i]] for i in range(len(g)))


def _inverse(s: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(s)
    for i, v in enumerate(s):
        inv[v] = i
    return tuple(inv)


def _transposition(n: int, a: int, b: int) -> tuple[int, ...]:
    s = list(range(n))
    s[a], s[b] = s[b], s[a]
    return tuple(s)


def cayley_generators(n: int, preset: str) -> list[tuple[int, ...]]:
    """Generator set (closed under inverses, identity removed) in one-line form."""
    ident = tuple(range(n))
    if preset == "star":
        gens = [_transposition(n, 0, i) for i in range(1, n)]
    elif preset == "bubble":
        gens = [_transposition(n, i, i + 1) for i in range(n - 1)]
    elif preset == "pancake":
        gens = [tuple(list(range(i - 1, -1, -1)) + list(range(i, n))) for i in range(2, n + 1)]
    elif preset == "sos_full":
        shift = tuple((i + 1) % n for i in range(n))
        gens = [shift, _transposition(n, 0, 1)]
    elif preset == "sos_partial":
        shift = tuple([0] + [i + 1 for i in range(1, n - 1)] + [1]) if n >= 3 else ident
        gens = [shift, _transposition(n, 0, 1)]
    else:
        raise InvalidParams(f"unknown Cayley preset {preset!r}")
    closed = []
    for s in gens + [_inverse(s) for s in gens]:
        if s != ident and s not in closed:
            closed.append(s)
    return closed


_CAYLEY_NAMES = {"star": "SG({n})", "bubble": "BSG({n})", "pancake": "Pc({n})",
                 "sos_full": "SOS^{n}_{n}", "sos_partial": "SOS^{m}_{n}"}


def cayley_sym(n: int, preset: str, cap: int = PERMUTATION_CAP) -> Graph:
    _need(n >= 2, "Cayley graphs need n >= 2")
    if math.factorial(n) > cap:
        from .graph import SizeLimitExceeded

        raise SizeLimitExceeded(f"{n}! vertices exceeds the cap of {cap}")
    gens = cayley_generators(n, preset)
    perms = list(permutations(range(n)))
    index = {p: k for k, p in enumerate(perms)}
    edges = [(index[g], index[_compose(g, s)]) for g in perms for s in gens]
    name = _CAYLEY_NAMES[preset].format(n=n, m=n - 1)
    return build_graph(name, [_perm_label(p) for p in perms], edges)


def kendall_distance(x: Sequence[int], y: Sequence[int]) -> int:
    pos = {v: k for k, v in enumerate(y)}
    seq = [pos[v] for v in x]
    return sum(1 for a, b in combinations(seq, 2) if a > b)


def bubble_sort_addressing(n: int) -> dict[str, str]:
    """Inversion-set indicator of each permutation over value pairs (a, b), a < b."""
    _need(n >= 2, "bubble sort addressing needs n >= 2")
    pairs = list(combinations(range(n), 2))
    out = {}
    for p in permutations(range(n)):
        pos = {v: k for k, v in enumerate(p)}
        out[_perm_label(p)] = "".join("1" if pos[a] > pos[b] else "0" for a, b in pairs)
    return out


# ---------------------------------------------------------------------------
# chordal rings and sporadic graphs
# ---------------------------------------------------------------------------


def gcr(n: int, chords: Sequence[int]) -> Graph:
    """Generalised chordal ring on positions 1..n.

    Even position i is joined to i + a (mod n) for every chord a; the odd
    rule i -> i - a produces the same edges.
    """
    chords = [int(a) for a in chords]
    _need(n >= 4 and n % 2 == 0, "GCR needs an even n >= 4")
    _need(len(chords) >= 1, "GCR needs at least one chord")
    _need(all(b > a for a, b in zip(chords, chords[1:])), "chords must be strictly increasing")
    for a in chords:
        _need(a % 2 == 1 and (a == 1 or 3 <= a <= n - 1), f"chord {a} must be odd and in [3, n-1]")

    def pos(i):
        return (i - 1) % n + 1

    pairs = []
    for i in range(1, n + 1):
        pairs.append((i, pos(i + 1)))
        if i % 2 == 0:
            for a in chords:
                pairs.append((i, pos(i + a)))
        else:
            for a in chords:
                pairs.append((i, pos(i - a)))
    return graph_from_labeled_edges(f"GCR({n},({','.join(map(str, chords))}))", range(1, n + 1), pairs)


def hoffman_singleton() -> Graph:
    """Five pentagons P_h and five pentagrams Q_i; P_h[j] ~ Q_i[h*i + j]."""
    labels = [f"P{h}.{j}" for h in range(5) for j in range(5)] + \
             [f"Q{i}.{j}" for i in range(5) for j in range(5)]
    pairs = []
    for h in range(5):
        for j in range(5):
            pairs.append((f"P{h}.{j}", f"P{h}.{(j + 1) % 5}"))
            pairs.append((f"Q{h}.{j}", f"Q{h}.{(j + 2) % 5}"))
            for i in range(5):
                pairs.append((f"P{h}.{j}", f"Q{i}.{(h * i + j) % 5}"))
    return graph_from_labeled_edges("HoffmanSingleton", labels, pairs)


def shrikhande() -> Graph:
    verts = [(a, b) for a in range(4) for b in range(4)]
    conn = {(1, 0), (3, 0), (0, 1), (0, 3), (1, 1), (3, 3)}
    labels = [f"({a},{b})" for a, b in verts]
    edges = [(i, j) for (i, x), (j, y) in combinations(enumerate(verts), 2)
             if ((x[0] - y[0]) % 4, (x[1] - y[1]) % 4) in conn]
    return build_graph("Shrikhande", labels, edges)


def dyck() -> Graph:
    """Dyck graph from the LCF code [-13, 5, -5, 13]^8."""
    n = 32
    code = (-13, 5, -5, 13)
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(i, (i + code[i % 4]) % n) for i in range(n)]
    return build_graph("Dyck", range(n), edges)


def klein_cubic() -> Graph:
    text = resources.files("halfcube.data").joinpath("klein_cubic.json").read_text()
    obj = json.loads(text)
    return build_graph(obj["name"], obj["labels"], [tuple(e) for e in obj["edges"]])


def icosahedron() -> Graph:
    # 0 top, 1..5 upper ring, 6..10 lower ring, 11 bottom
    edges = []
    for i in range(5):
        up, up2 = 1 + i, 1 + (i + 1) % 5
        lo, lo2 = 6 + i, 6 + (i + 1) % 5
        edges += [(0, up), (up, up2), (up, lo), (up, lo2), (lo, lo2), (lo, 11)]
    return build_graph("Icosahedron", range(12), edges)


_PLATONIC: dict[int, Callable[[], Graph]] = {
    4: lambda: complete(4).relabel(name="Tetrahedron"),
    6: lambda: hypercube(3).relabel(name="Cube"),
    8: lambda: cocktail_party(3).relabel(name="Octahedron"),
    12: lambda: gp(10, 2).relabel(name="Dodecahedron"),
    20: icosahedron,
}


def platonic(faces: int) -> Graph:
    """Platonic skeleton selected by face count (4, 6, 8, 12, 20)."""
    _need(faces in _PLATONIC, "platonic takes a face count in {4, 6, 8, 12, 20}")
    return _PLATONIC[faces]()


# ---------------------------------------------------------------------------
# dispatch
# ---------------------------------------------------------------------------


def make(spec: FamilySpec) -> Graph:
    k, p = spec.kind, spec.params

    def arity(*counts):
        _need(len(p) in counts, f"{k} takes {' or '.join(map(str, counts))} parameter(s), got {len(p)}")

    if k in ("hypercube", "halfcube", "cycle", "path", "complete", "cocktail_party",
             "moebius_ladder", "odd", "double_odd", "ccc", "butterfly", "platonic"):
        arity(1)
        return {
            "hypercube": hypercube, "halfcube": halfcube, "cycle": cycle, "path": path,
            "complete": complete, "cocktail_party": cocktail_party,
            "moebius_ladder": moebius_ladder, "odd": odd, "double_odd": double_odd,
            "ccc": ccc, "butterfly": butterfly, "platonic": platonic,
        }[k](p[0])
    if k in ("johnson", "gp", "debruijn", "kautz"):
        arity(2)
        return {"johnson": johnson, "gp": gp, "debruijn": debruijn, "kautz": kautz}[k](p[0], p[1])
    if k == "complete_multipartite":
        return complete_multipartite(p)
    if k in ("fibonacci", "lucas"):
        arity(1)
        return fibonacci_like(k, p[0])[0]
    if k in ("indel", "levenshtein"):
        arity(2)
        return word_graph(k, p[0], p[1])
    if k == "ulam":
        arity(1)
        return word_graph("ulam", p[0])
    if k.startswith("cayley_"):
        arity(1)
        return cayley_sym(p[0], k[len("cayley_"):])
    if k == "gcr":
        _need(len(p) >= 2, "gcr takes n followed by chords")
        return gcr(p[0], p[1:])
    arity(0)
    return {"hoffman_singleton": hoffman_singleton, "shrikhande": shrikhande, "dyck": dyck,
            "klein_cubic": klein_cubic,
            "k444": lambda: complete_multipartite([4, 4, 4]).relabel(name="K_{4,4,4}")}[k]()
