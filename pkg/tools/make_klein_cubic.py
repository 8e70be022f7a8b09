"""Regenerate src/halfcube/data/klein_cubic.json.

The cubic Klein graph is the skeleton of the regular {7,3} map of genus 3,
whose rotation group is PSL(2,7).  Vertices are cosets of an order-3 vertex
rotation S; the three neighbours of coset g<S> are g S^k T <S> where T is the
edge half-turn and S*T has order 7.
"""

import itertools
import json
import pathlib
import sys

P = 7


def mul(a, b):
    return (
        (a[0] * b[0] + a[1] * b[2]) % P,
        (a[0] * b[1] + a[1] * b[3]) % P,
        (a[2] * b[0] + a[3] * b[2]) % P,
        (a[2] * b[1] + a[3] * b[3]) % P,
    )


def norm(a):
    # PSL: identify A with -A
    neg = tuple((-x) % P for x in a)
    return min(a, neg)


IDENT = (1, 0, 0, 1)


def order(a):
    x, k = norm(a), 1
    while x != IDENT:
        x, k = norm(mul(x, a)), k + 1
    return k


def generate(gens):
    seen = {IDENT}
    frontier = [IDENT]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = norm(mul(x, g))
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def main():
    mats = [norm(m) for m in itertools.product(range(P), repeat=4)
            if (m[0] * m[3] - m[1] * m[2]) % P == 1]
    mats = sorted(set(mats))
    s = next(m for m in mats if order(m) == 3)
    t = next(m for m in mats if order(m) == 2 and order(mul(s, m)) == 7 and len(generate([s, m])) == 168)
    group = sorted(generate([s, t]))
    sub = [IDENT, norm(s), norm(mul(s, s))]
    coset_of = {}
    cosets = []
    for g in group:
        if g in coset_of:
            continue
        c = frozenset(norm(mul(g, h)) for h in sub)
        for x in c:
            coset_of[x] = len(cosets)
        cosets.append(min(c))
    edges = set()
    for i, rep in enumerate(cosets):
        for h in sub:
            j = coset_of[norm(mul(mul(rep, h), t))]
            edges.add((min(i, j), max(i, j)))
    obj = {"name": "KleinCubic", "n": len(cosets), "labels": [str(i) for i in range(len(cosets))],
           "edges": [list(e) for e in sorted(edges)]}
    out = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else "src/halfcube/data/klein_cubic.json")
    out.write_text(json.dumps(obj, separators=(",", ":")) + "\n")
    print(len(cosets), len(edges))


if __name__ == "__main__":
    main()
