"""Hot numeric kernels.

Each kernel exists twice: a numba-compiled loop version (``*_jit``) and a
numpy version (``*_np``).  The public names at the bottom of the module are
bound to one or the other depending on ``HALFCUBE_DISABLE_JIT``.

Intersection domains are 3-bit masks over the possible values of the edge
intersection size: bit 0 -> 0, bit 1 -> 1, bit 2 -> 2.
"""

from __future__ import annotations

from itertools import combinations

import numpy as np

from ._jit import JIT_ENABLED, njit

V0 = np.uint8(1)
V1 = np.uint8(2)
V2 = np.uint8(4)
V02 = np.uint8(5)
V012 = np.uint8(7)

# ---------------------------------------------------------------------------
# all-pairs BFS
# ---------------------------------------------------------------------------


@njit(cache=True)
def bfs_all_pairs_jit(indptr, indices, n):
    dist = np.full((n, n), -1, dtype=np.int32)
    queue = np.empty(n, dtype=np.int32)
    for src in range(n):
        row = dist[src]
        row[src] = 0
        head = 0
        tail = 1
        queue[0] = src
        while head < tail:
            v = queue[head]
            head += 1
            dv = row[v] + 1
            for k in range(indptr[v], indptr[v + 1]):
                w = indices[k]
                if row[w] < 0:
                    row[w] = dv
                    queue[tail] = w
                    tail += 1
    return dist


def bfs_all_pairs_np(indptr, indices, n):
    dist = np.full((n, n), -1, dtype=np.int32)
    np.fill_diagonal(dist, 0)
    frontier = np.eye(n, dtype=bool)
    reached = frontier.copy()
    nbrs = [indices[indptr[v]:indptr[v + 1]] for v in range(n)]
    level = 0
    while frontier.any():
        level += 1
        nxt = np.zeros_like(frontier)
        for v in range(n):
            if len(nbrs[v]):
                nxt[:, v] = frontier[:, nbrs[v]].any(axis=1)
        nxt &= ~reached
        dist[nxt] = level
        reached |= nxt
        frontier = nxt
    return dist


# ---------------------------------------------------------------------------
# intersection-table seeding
# ---------------------------------------------------------------------------


@njit(cache=True)
def seed_domains_jit(dist, eu, ev, s):
    n_edges = eu.shape[0]
    n = dist.shape[0]
    dom = np.empty((n_edges, n_edges), dtype=np.uint8)
    for a in range(n_edges):
        dom[a, a] = 4
        u = eu[a]
        v = ev[a]
        for b in range(a + 1, n_edges):
            x = eu[b]
            y = ev[b]
            dux = dist[u, x]
            duy = dist[u, y]
            dvx = dist[v, x]
            dvy = dist[v, y]
            far = max(max(dux, duy), max(dvx, dvy))
            if far > s:
                dom[a, b] = 7
                dom[b, a] = 7
                continue
            sig = duy + dvx - dux - dvy
            mag = abs(sig)
            if mag == 2:
                d0 = 4
            elif mag == 1:
                d0 = 2
            else:
                d0 = 5
            for r in range(n):
                ru = dist[r, u]
                rv = dist[r, v]
                rx = dist[r, x]
                ry = dist[r, y]
                if max(max(ru, rv), max(rx, ry)) > s:
                    continue
                gu = rv - ru
                gx = ry - rx
                if gu != 0 and gx != 0:
                    sr = sig * gu * gx
                    if sr < 0:
                        d0 = 0
                    else:
                        d0 &= 1 << sr
                elif gu == 0 and gx == 0:
                    d0 &= 1 << mag
                elif mag == 2:
                    d0 = 0
                if d0 == 0:
                    break
            dom[a, b] = d0
            dom[b, a] = d0
    return dom


def seed_domains_np(dist, eu, ev, s):
    dist = np.asarray(dist)
    dux = dist[eu][:, eu]
    duy = dist[eu][:, ev]
    dvx = dist[ev][:, eu]
    dvy = dist[ev][:, ev]
    far = np.maximum(np.maximum(dux, duy), np.maximum(dvx, dvy)) > s
    sig = duy + dvx - dux - dvy
    mag = np.abs(sig)
    dom = np.where(mag == 2, 4, np.where(mag == 1, 2, 5)).astype(np.int64)
    for r in range(dist.shape[0]):
        ru, rv = dist[r, eu], dist[r, ev]
        ok_e = np.maximum(ru, rv) <= s
        ok = ok_e[:, None] & ok_e[None, :]
        gu = (rv - ru)[:, None]
        gx = (rv - ru)[None, :]
        graded = ok & (gu != 0) & (gx != 0)
        flat = ok & (gu == 0) & (gx == 0)
        mixed = ok & ~graded & ~flat
        sr = sig * gu * gx
        bad = graded & (sr < 0)
        dom = np.where(graded & ~bad, dom & np.left_shift(1, np.clip(sr, 0, 2)), dom)
        dom = np.where(bad, 0, dom)
        dom = np.where(flat, dom & np.left_shift(1, mag), dom)
        dom = np.where(mixed & (mag == 2), 0, dom)
    dom = np.where(far, 7, dom)
    np.fill_diagonal(dom, 4)
    return dom.astype(np.uint8)


# ---------------------------------------------------------------------------
# propagation of the consistency rules
# ---------------------------------------------------------------------------

# Patterns (va, vb, vc) are indexed va*9 + vb*3 + vc.
_PATTERNS = [(a, b, c) for a in range(3) for b in range(3) for c in range(3)]
_TRIANGLE_FORM = {(0, 1, 1), (1, 1, 2), (0, 0, 0)}
_STAR_FORM = {(0, 0, 1), (0, 1, 1), (1, 1, 1), (1, 1, 2), (0, 0, 0)}
PAT_STAR = np.array([tuple(sorted(p)) in _STAR_FORM for p in _PATTERNS], dtype=np.bool_)
PAT_TRI = np.array([tuple(sorted(p)) in _TRIANGLE_FORM for p in _PATTERNS], dtype=np.bool_)
PAT_110 = np.array([tuple(sorted(p)) == (0, 1, 1) for p in _PATTERNS], dtype=np.bool_)
PAT_STAR_ONLY = PAT_STAR & ~PAT_TRI


@njit(cache=True)
def _merge(dom, parent, active, a, b):
    n_edges = dom.shape[0]
    for x in range(n_edges):
        if active[x] and x != a and x != b:
            v = dom[a, x] & dom[b, x]
            if v == 0:
                return False
            dom[a, x] = v
            dom[x, a] = v
    active[b] = False
    parent[b] = a
    return True


@njit(cache=True)
def _pattern_mask(da, db, dc, pat_star):
    out = 0
    for p in range(27):
        if pat_star[p] and (da >> (p // 9)) & 1 and (db >> ((p // 3) % 3)) & 1 and (dc >> (p % 3)) & 1:
            out |= 1 << p
    return out


@njit(cache=True)
def _triple_filter(dom, active, a, b, c, pat_star, pat_tri, pat_110, pat_star_only):
    """Apply the triple rule to classes a, b, c (pairwise intersection 1).

    In the star form a fourth class with an ordered 1,1,0 pattern is pinned to
    one specific 2-set, so two classes with the same such pattern coincide.
    Returns 0 on contradiction, 1 if unchanged, 2 if some domain shrank.
    """
    n_edges = dom.shape[0]
    tri_bits = 0
    only_bits = 0
    all_bits = 0
    for p in range(27):
        if pat_tri[p]:
            tri_bits |= 1 << p
        if pat_star_only[p]:
            only_bits |= 1 << p
        if pat_star[p]:
            all_bits |= 1 << p
    xs = np.empty(n_edges, dtype=np.int64)
    okm = np.empty(n_edges, dtype=np.int64)
    forced = np.empty(n_edges, dtype=np.int64)
    k = 0
    tri_possible = True
    for x in range(n_edges):
        if not active[x] or x == a or x == b or x == c:
            continue
        m = _pattern_mask(dom[a, x], dom[b, x], dom[c, x], pat_star)
        if m == 0:
            return 0
        if m & ~only_bits == 0:
            tri_possible = False
        f = -1
        if m & (m - 1) == 0:
            for p in range(27):
                if m == (1 << p) and pat_110[p]:
                    f = p
        xs[k] = x
        okm[k] = m
        forced[k] = f
        k += 1
    star_possible = True
    for i in range(k):
        if forced[i] < 0:
            continue
        for j in range(i + 1, k):
            if forced[j] == forced[i] and dom[xs[i], xs[j]] & 4 == 0:
                star_possible = False
    if not tri_possible and not star_possible:
        return 0
    keep = all_bits
    if not star_possible:
        keep = tri_bits
    status = 1
    for i in range(k):
        x = xs[i]
        m = okm[i] & keep
        if not tri_possible and forced[i] < 0:
            for j in range(k):
                f = forced[j]
                if f >= 0 and (m >> f) & 1 and dom[x, xs[j]] & 4 == 0:
                    m &= ~(1 << f)
        if m == 0:
            return 0
        na = 0
        nb = 0
        nc = 0
        for p in range(27):
            if (m >> p) & 1:
                na |= 1 << (p // 9)
                nb |= 1 << ((p // 3) % 3)
                nc |= 1 << (p % 3)
        if na != dom[a, x] or nb != dom[b, x] or nc != dom[c, x]:
            dom[a, x] = na
            dom[x, a] = na
            dom[b, x] = nb
            dom[x, b] = nb
            dom[c, x] = nc
            dom[x, c] = nc
            status = 2
    if not tri_possible:
        for i in range(k):
            if forced[i] < 0:
                continue
            for j in range(i + 1, k):
                if forced[j] == forced[i]:
                    x, y = xs[i], xs[j]
                    v = dom[x, y] & 4
                    if v == 0:
                        return 0
                    if v != dom[x, y]:
                        dom[x, y] = v
                        dom[y, x] = v
                        status = 2
    return status


@njit(cache=True)
def propagate_jit(dom, parent, active, pat_star, pat_tri, pat_110, pat_star_only):
    """Run the class-merging and triple rules to a fixed point, in place.

    Returns False when some pair of classes is left without a possible value.
    """
    n_edges = dom.shape[0]
    changed = True
    while changed:
        changed = False
        for a in range(n_edges):
            if not active[a]:
                continue
            for b in range(a + 1, n_edges):
                if not active[b]:
                    continue
                d = dom[a, b]
                if d == 0:
                    return False
                if d == 4:
                    if not _merge(dom, parent, active, a, b):
                        return False
                    changed = True
        if changed:
            continue
        for a in range(n_edges):
            if not active[a]:
                continue
            for b in range(a + 1, n_edges):
                if not active[b] or dom[a, b] != 2:
                    continue
                for c in range(b + 1, n_edges):
                    if not active[c] or dom[a, c] != 2 or dom[b, c] != 2:
                        continue
                    st = _triple_filter(dom, active, a, b, c, pat_star, pat_tri, pat_110, pat_star_only)
                    if st == 0:
                        return False
                    if st == 2:
                        changed = True
    return True


def propagate_np(dom, parent, active, pat_star, pat_tri, pat_110, pat_star_only):
    # Interpreted twin of propagate_jit; the triple rule is vectorized over the
    # fourth class.
    n_edges = dom.shape[0]
    pats = np.array(_PATTERNS, dtype=np.int64)
    changed = True
    while changed:
        changed = False
        idx = np.flatnonzero(active)
        sub = dom[np.ix_(idx, idx)]
        if (sub == 0).any():
            return False
        for a in idx:
            if not active[a]:
                continue
            row = dom[a]
            hits = np.flatnonzero((row == 4) & active)
            for b in hits:
                if b <= a or not active[b]:
                    continue
                if dom[a, b] != 4:
                    continue
                others = active.copy()
                others[[a, b]] = False
                merged = dom[a] & dom[b]
                if (merged[others] == 0).any():
                    return False
                dom[a, others] = merged[others]
                dom[others, a] = merged[others]
                active[b] = False
                parent[b] = a
                changed = True
        if changed:
            continue
        idx = np.flatnonzero(active)
        ones = dom[np.ix_(idx, idx)] == 2
        for ia, ib, ic in _ones_triangles(ones):
            a, b, c = idx[ia], idx[ib], idx[ic]
            st = _triple_filter_np(dom, active, a, b, c, pats, pat_star, pat_tri, pat_110, pat_star_only)
            if st == 0:
                return False
            if st == 2:
                changed = True
                break
    return True


def _ones_triangles(ones):
    k = ones.shape[0]
    for a in range(k):
        for b in np.flatnonzero(ones[a, a + 1:]) + a + 1:
            for c in np.flatnonzero(ones[a, b + 1:] & ones[b, b + 1:]) + b + 1:
                yield a, b, c


def _triple_filter_np(dom, active, a, b, c, pats, pat_star, pat_tri, pat_110, pat_star_only):
    xs = np.flatnonzero(active)
    xs = xs[(xs != a) & (xs != b) & (xs != c)]
    if len(xs) == 0:
        return 1
    da, db, dc = dom[a, xs].astype(np.int64), dom[b, xs].astype(np.int64), dom[c, xs].astype(np.int64)
    fits = (
        ((da[:, None] >> pats[None, :, 0]) & 1).astype(bool)
        & ((db[:, None] >> pats[None, :, 1]) & 1).astype(bool)
        & ((dc[:, None] >> pats[None, :, 2]) & 1).astype(bool)
    )
    ok = fits & pat_star[None, :]
    if not ok.any(axis=1).all():
        return 0
    tri_possible = not (~(ok & ~pat_star_only[None, :]).any(axis=1)).any()
    single = ok.sum(axis=1) == 1
    first = ok.argmax(axis=1)
    forced = np.where(single & pat_110[first], first, -1)
    pair_dom = dom[np.ix_(xs, xs)]
    same = (forced[:, None] == forced[None, :]) & (forced[:, None] >= 0)
    np.fill_diagonal(same, False)
    star_possible = not (same & ((pair_dom & 4) == 0)).any()
    if not tri_possible and not star_possible:
        return 0
    allowed = ok & pat_tri[None, :] if not star_possible else ok.copy()
    if not tri_possible:
        free = forced < 0
        for f in np.unique(forced[forced >= 0]):
            clash = ((pair_dom[:, forced == f] & 4) == 0).any(axis=1)
            allowed[free & clash, f] = False
    if not allowed.any(axis=1).all():
        return 0
    na = np.zeros(len(xs), dtype=np.int64)
    nb = np.zeros_like(na)
    nc = np.zeros_like(na)
    for p in np.flatnonzero(allowed.any(axis=0)):
        sel = allowed[:, p]
        na[sel] |= 1 << pats[p, 0]
        nb[sel] |= 1 << pats[p, 1]
        nc[sel] |= 1 << pats[p, 2]
    status = 1
    if not ((na == da).all() and (nb == db).all() and (nc == dc).all()):
        for row, new in ((a, na), (b, nb), (c, nc)):
            dom[row, xs] = new
            dom[xs, row] = new
        status = 2
    if not tri_possible and same.any():
        ii, jj = np.nonzero(np.triu(same, 1))
        x, y = xs[ii], xs[jj]
        v = dom[x, y] & 4
        if (v == 0).any():
            return 0
        if (v != dom[x, y]).any():
            dom[x, y] = v
            dom[y, x] = v
            status = 2
    return status


# ---------------------------------------------------------------------------
# gonal inequality scan
# ---------------------------------------------------------------------------


@njit(cache=True)
def _next_comb(comb, n):
    k = comb.shape[0]
    i = k - 1
    while i >= 0 and comb[i] == n - k + i:
        i -= 1
    if i < 0:
        return False
    comb[i] += 1
    for j in range(i + 1, k):
        comb[j] = comb[j - 1] + 1
    return True


@njit(cache=True)
def gonal_scan_jit(dist, k):
    """First violated (2k+1)-gonal inequality in lexicographic order.

    Returns (found, positive, negative, lhs, rhs).
    """
    n = dist.shape[0]
    pos = np.arange(k + 1).astype(np.int64)
    neg_idx = np.arange(k).astype(np.int64)
    rest = np.empty(n, dtype=np.int64)
    while True:
        lhs_p = 0
        for i in range(k + 1):
            for j in range(i + 1, k + 1):
                lhs_p += dist[pos[i], pos[j]]
        m = 0
        for v in range(n):
            inside = False
            for i in range(k + 1):
                if pos[i] == v:
                    inside = True
            if not inside:
                rest[m] = v
                m += 1
        if m >= k:
            for i in range(k):
                neg_idx[i] = i
            while True:
                lhs = lhs_p
                for i in range(k):
                    for j in range(i + 1, k):
                        lhs += dist[rest[neg_idx[i]], rest[neg_idx[j]]]
                rhs = 0
                for i in range(k + 1):
                    for j in range(k):
                        rhs += dist[pos[i], rest[neg_idx[j]]]
                if lhs > rhs:
                    neg = np.empty(k, dtype=np.int64)
                    for j in range(k):
                        neg[j] = rest[neg_idx[j]]
                    return True, pos.copy(), neg, lhs, rhs
                if not _next_comb(neg_idx, m):
                    break
        if not _next_comb(pos, n):
            break
    return False, pos, neg_idx, 0, 0


def gonal_scan_np(dist, k, chunk=4096):
    dist = np.asarray(dist, dtype=np.int64)
    n = dist.shape[0]
    pos_all = np.array(list(combinations(range(n), k + 1)), dtype=np.int64).reshape(-1, k + 1)
    neg_all = np.array(list(combinations(range(n), k)), dtype=np.int64).reshape(-1, k)
    sum_p = np.zeros(len(pos_all), dtype=np.int64)
    for i, j in combinations(range(k + 1), 2):
        sum_p += dist[pos_all[:, i], pos_all[:, j]]
    sum_n = np.zeros(len(neg_all), dtype=np.int64)
    for i, j in combinations(range(k), 2):
        sum_n += dist[neg_all[:, i], neg_all[:, j]]
    for start in range(0, len(pos_all), chunk):
        P = pos_all[start:start + chunk]
        rhs = np.zeros((len(P), len(neg_all)), dtype=np.int64)
        overlap = np.zeros((len(P), len(neg_all)), dtype=bool)
        for i in range(k + 1):
            for j in range(k):
                rhs += dist[P[:, i][:, None], neg_all[:, j][None, :]]
                overlap |= P[:, i][:, None] == neg_all[:, j][None, :]
        lhs = sum_p[start:start + chunk][:, None] + sum_n[None, :]
        bad = (lhs > rhs) & ~overlap
        if bad.any():
            flat = int(np.flatnonzero(bad.ravel())[0])
            r, c = divmod(flat, bad.shape[1])
            return True, P[r].copy(), neg_all[c].copy(), int(lhs[r, c]), int(rhs[r, c])
    return False, np.arange(k + 1), np.arange(k), 0, 0


# ---------------------------------------------------------------------------
# pairwise Hamming distances
# ---------------------------------------------------------------------------


@njit(cache=True)
def hamming_matrix_jit(bits):
    n, m = bits.shape
    out = np.zeros((n, n), dtype=np.int32)
    for i in range(n):
        for j in range(i + 1, n):
            h = 0
            for c in range(m):
                if bits[i, c] != bits[j, c]:
                    h += 1
            out[i, j] = h
            out[j, i] = h
    return out


def hamming_matrix_np(bits):
    bits = np.asarray(bits, dtype=np.uint8)
    if bits.shape[1] == 0:
        return np.zeros((bits.shape[0], bits.shape[0]), dtype=np.int32)
    packed = np.packbits(bits, axis=1)
    x = packed[:, None, :] ^ packed[None, :, :]
    return np.unpackbits(x, axis=2).sum(axis=2, dtype=np.int32)


# ---------------------------------------------------------------------------
# dispatch
# ---------------------------------------------------------------------------

if JIT_ENABLED:
    bfs_all_pairs = bfs_all_pairs_jit
    seed_domains = seed_domains_jit
    _propagate_impl = propagate_jit
    gonal_scan = gonal_scan_jit
    hamming_matrix = hamming_matrix_jit
else:
    bfs_all_pairs = bfs_all_pairs_np
    seed_domains = seed_domains_np
    _propagate_impl = propagate_np
    gonal_scan = gonal_scan_np
    hamming_matrix = hamming_matrix_np


def propagate(dom, parent, active, impl=None):
    fn = _propagate_impl if impl is None else impl
    return bool(fn(dom, parent, active, PAT_STAR, PAT_TRI, PAT_110, PAT_STAR_ONLY))
