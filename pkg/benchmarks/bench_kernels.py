"""Time the numba and numpy versions of each hot kernel on the same inputs.

    python benchmarks/bench_kernels.py [--repeat 5]

Both versions are imported directly from halfcube._kernels, so the
HALFCUBE_DISABLE_JIT flag does not matter here.  The first jit call of each
kernel (compilation or cache load) is excluded from the timings.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from halfcube import _kernels as K
from halfcube import families as F
from halfcube.graph import all_pairs_distances


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def cases():
    big = F.cayley_sym(6, "star")
    hs = F.hoffman_singleton()
    sos = F.cayley_sym(4, "sos_partial")
    indptr, indices = big.csr
    yield "bfs  SG(6), 720 vertices", lambda: K.bfs_all_pairs_jit(indptr, indices, big.n), \
        lambda: K.bfs_all_pairs_np(indptr, indices, big.n)

    d = np.ascontiguousarray(all_pairs_distances(hs).d, dtype=np.int64)
    eu = np.array([u for u, _ in hs.edges], dtype=np.int64)
    ev = np.array([v for _, v in hs.edges], dtype=np.int64)
    yield "seed Hoffman-Singleton, 175 edges", lambda: K.seed_domains_jit(d, eu, ev, 2), \
        lambda: K.seed_domains_np(d, eu, ev, 2)

    ds = np.ascontiguousarray(all_pairs_distances(sos).d, dtype=np.int64)
    su = np.array([u for u, _ in sos.edges], dtype=np.int64)
    sv = np.array([v for _, v in sos.edges], dtype=np.int64)
    dom0 = K.seed_domains_np(ds, su, sv, 4)

    def prop(impl):
        dom = dom0.copy()
        parent = np.arange(len(dom), dtype=np.int64)
        active = np.ones(len(dom), dtype=np.bool_)
        return lambda: K.propagate(dom.copy(), parent.copy(), active.copy(), impl)

    yield "propagate SOS^3_4 seed, s=4", prop(K.propagate_jit), prop(K.propagate_np)

    dp = np.ascontiguousarray(all_pairs_distances(F.gp(10, 3)).d, dtype=np.int64)
    yield "5-gonal scan GP(10,3)", lambda: K.gonal_scan_jit(dp, 2), lambda: K.gonal_scan_np(dp, 2)

    bits = np.random.default_rng(0).integers(0, 2, size=(720, 40), dtype=np.uint8)
    yield "hamming 720 x 40 bits", lambda: K.hamming_matrix_jit(bits), lambda: K.hamming_matrix_np(bits)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)
    print(f"{'kernel':<36} {'jit ms':>10} {'numpy ms':>10} {'ratio':>8}")
    for name, jit_fn, np_fn in cases():
        jit_fn()  # compile or load from cache
        tj = best_of(jit_fn, args.repeat)
        tn = best_of(np_fn, args.repeat)
        print(f"{name:<36} {tj * 1e3:>10.2f} {tn * 1e3:>10.2f} {tn / tj:>7.1f}x")


if __name__ == "__main__":
    main()
