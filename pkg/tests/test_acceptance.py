"""Acceptance criteria 1-10.

Each test gathers named sub-checks into a Criterion; conftest prints one
PASS/FAIL line per criterion at the end of the run.  Sub-checks that are
known to disagree with the stated expectation are listed in KNOWN, still
evaluated and printed as failures, and asserted separately as strict xfails.
"""

from math import comb

import numpy as np
import pytest

from halfcube import families as F
from halfcube.certify import fixture_graph, fixture_manifest, load_addressing, verify_bits, verify_certificate
from halfcube.cli import run_sweep
from halfcube.embedder import (
    NOT_EMBEDDABLE,
    NOT_TR_EMBEDDABLE,
    collapse_to_scale1,
    embed,
    enumerate_embeddings,
    is_collapsible,
    product_embed,
    sigma_oracle,
    verify_embedding,
)
from halfcube.gonal import avis_partial_cube_test, five_gonal_check
from halfcube.graph import all_pairs_distances

from conftest import Criterion
from corpus import BIPARTITE_COUNTS, CONNECTED_COUNTS, bipartite_graphs, connected_graphs
from oracles import brute_force_embed

KNOWN = {
    2: {"ind23_table1: Ind_{2,3} -> H_6 as printed"},
    7: {"CCC_3 not 4-tr.embeddable", "Ka(3,2) not 2-tr.embeddable"},
}


def host(g, s=None):
    """(scale, m) of the smallest host over all solutions, or None if negative."""
    out = enumerate_embeddings(g, s)
    for emb in out.embeddings:
        assert verify_embedding(g, all_pairs_distances(g), emb).passed
    return (out.scale, out.m) if out.positive else None


def negative(g, s=None):
    return embed(g, s, first_only=True).status in (NOT_EMBEDDABLE, NOT_TR_EMBEDDABLE)


def finish(c, number):
    c.close()
    bad = c.failed(KNOWN.get(number, set()))
    assert not bad, bad


def test_criterion_1_generalized_petersen():
    c = Criterion(1, "generalised Petersen table", 10)
    rows = [
        ("Petersen -> 1/2 H_6 (s=2)", F.gp(5, 2), 2, (2, 6)),
        ("GP(6,2) -> 1/2 H_8", F.gp(6, 2), None, (2, 8)),
        ("GP(9,2) -> 1/2 H_9", F.gp(9, 2), None, (2, 9)),
        ("GP(10,2) -> 1/2 H_10", F.gp(10, 2), None, (2, 10)),
        ("GP(10,3) -> H_5", F.gp(10, 3), None, (1, 5)),
        ("Prism_6 -> H_4", F.prism(6), None, (1, 4)),
        ("Prism_5 -> 1/2 H_7", F.prism(5), None, (2, 7)),
    ]
    for name, g, s, want in rows:
        c.check(name, host(g, s) == want)
    c.check("GP(8,3) not 3-tr.embeddable", embed(F.gp(8, 3), 3).status == NOT_TR_EMBEDDABLE)
    c.check("GP(12,5) not 3-tr.embeddable", embed(F.gp(12, 5), 3).status == NOT_TR_EMBEDDABLE)
    finish(c, 1)


def _fixture_report(fid):
    entry = fixture_manifest()[fid]
    return verify_certificate(fixture_graph(fid), load_addressing(fid), entry["scale"], entry["s"])


def test_criterion_2_certificates():
    c = Criterion(2, "certificate fixtures verbatim", 5)
    c.check("ind23_table1: Ind_{2,3} -> H_6 as printed", _fixture_report("ind23_table1").passed)
    c.check("ind12_table1_minor: Ind_{1,2} -> H_4", _fixture_report("ind12_table1_minor").passed)
    c.check("ind01_table1_minor: Ind_{0,1} -> H_2", _fixture_report("ind01_table1_minor").passed)
    c.check("gcr24_fig: GCR(24,(9,11)) -> H_5", _fixture_report("gcr24_fig").passed)
    c.check("sos44_table4_upper: SOS^4_4 -> H_6", _fixture_report("sos44_table4_upper").passed)
    c.check("but2_fig: But(2), scale 2, s=3", _fixture_report("but2_fig").passed)
    rep = _fixture_report("dyck_table5")
    c.check("dyck_table5: Dyck, scale 1, s=4", rep.passed)
    c.check("Dyck: exactly 16 shortfall pairs, all d=5 d'=3",
            rep.shortfall == 16 and {(d, dp) for _, _, d, dp in rep.shortfall_pairs} == {(5, 3.0)})
    finish(c, 2)


@pytest.mark.xfail(strict=True, reason="printed row 1,1,1 has the wrong parity (ledgered)")
def test_criterion_2_ind23_as_printed():
    assert _fixture_report("ind23_table1").passed


def test_criterion_3_word_graphs():
    c = Criterion(3, "indel, Levenshtein and Ulam graphs", 60)
    c.check("Ind_{0,1,2} not 2-tr.embeddable", negative(F.word_graph("indel", 0, 2), 2))
    c.check("Ind_{3,4} not 2-tr.embeddable", negative(F.word_graph("indel", 3, 4), 2))
    c.check("Lev_{1,2} not 2-tr.embeddable", negative(F.word_graph("levenshtein", 1, 2), 2))
    c.check("Ul(3) -> 1/2 H_4", host(F.word_graph("ulam", 3)) == (2, 4))
    c.check("Ul(4) not 2-tr.embeddable", negative(F.word_graph("ulam", 4), 2))
    finish(c, 3)


def test_criterion_4_bubble_sort():
    c = Criterion(4, "bubble sort addressing", 60)
    for n in (3, 4, 5):
        g = F.cayley_sym(n, "bubble")
        addr = F.bubble_sort_addressing(n)
        bits = np.array([[int(x) for x in addr[lab]] for lab in g.labels], dtype=np.uint8)
        rep = verify_bits(all_pairs_distances(g), bits, 1)
        c.check(f"BSG({n}) addressing isometric into H_{comb(n, 2)}",
                rep.passed and bits.shape[1] == comb(n, 2))
    c.check("embed(BSG(4), s=6) finds H_6", host(F.cayley_sym(4, "bubble"), 6) == (1, 6))
    finish(c, 4)


def test_criterion_5_chordal_rings():
    c = Criterion(5, "chordal ring sweep and spot rows", 600)
    recs = run_sweep([24, 40], "conjecture", jobs=4)
    for r in recs:
        n = r["family"]["params"][0]
        c.check(f"{r['graph']} -> H_{n // 8 + 2}", (r["scale"], r["m"]) == (1, n // 8 + 2))
    c.check("sweep covers both pairs for n=24 and n=40", len(recs) == 4)
    for n, chords, m in ((48, (13, 15), 7), (60, (21, 23), 8)):
        g = F.gcr(n, chords)
        out = embed(g, first_only=True)
        ok = out.positive and is_collapsible(out.embeddings[0])
        ok = ok and collapse_to_scale1(out.embeddings[0], g).m == m
        c.check(f"GCR({n},{chords}) -> H_{m}", ok)
    for a in (5, 7):
        g = F.gcr(2 * a, (a,))
        d = all_pairs_distances(g).diameter
        c.check(f"GCR({2 * a},({a})) not {d - 1}-tr.embeddable", negative(g, d - 1))
    finish(c, 5)


def test_criterion_6_counts():
    c = Criterion(6, "truncated-embedding counts", 300)
    out = enumerate_embeddings(F.complete(4), 2)
    c.check("K_4, s=2: exactly 2 solutions, m = 3 and 4",
            out.count == 2 and sorted(e.m for e in out.embeddings) == [3, 4])
    out = enumerate_embeddings(F.butterfly(2), 3)
    c.check("But(2), s=3: verified solution into 1/2 H_8",
            out.positive and 8 in out.counts_by_m)
    c.check(f"But(2), s=3: count {out.count} (expected 9)", out.count == 9)
    out = enumerate_embeddings(F.cayley_sym(4, "sos_partial"), 4)
    c.check("SOS^3_4, s=4: verified solution into 1/2 H_14", out.positive and 14 in out.counts_by_m)
    c.check(f"SOS^3_4, s=4: count {out.count} (expected 4), by m {out.counts_by_m}", out.count == 4)
    finish(c, 6)


def test_criterion_7_negatives():
    c = Criterion(7, "negative results", 300)
    c.check("Hoffman-Singleton not embeddable (s=2)", negative(F.hoffman_singleton(), 2))
    c.check("O_4 not embeddable", negative(F.odd(4)))
    c.check("SG(4) not 3-tr.embeddable", negative(F.cayley_sym(4, "star"), 3))
    c.check("Pc(4) not 3-tr.embeddable", negative(F.cayley_sym(4, "pancake"), 3))
    c.check("CCC_3 not 4-tr.embeddable", negative(F.ccc(3), 4))
    for n in (6, 8, 10):
        c.check(f"M_{n} not 2-tr.embeddable", negative(F.moebius_ladder(n), 2))
    c.check("Br(3,2) not 2-tr.embeddable", negative(F.debruijn(3, 2), 2))
    c.check("Ka(3,2) not 2-tr.embeddable", negative(F.kautz(3, 2), 2))
    c.check("Br(2,2) -> 1/2 H_4", host(F.debruijn(2, 2)) == (2, 4))
    finish(c, 7)


@pytest.mark.xfail(strict=True, reason="CCC_3 has 4-truncated embeddings (ledgered)")
def test_criterion_7_ccc3():
    assert negative(F.ccc(3), 4)


@pytest.mark.xfail(strict=True, reason="Ka(3,2) is the triangular prism (ledgered)")
def test_criterion_7_kautz():
    assert negative(F.kautz(3, 2), 2)


def test_criterion_8_regular_maps():
    c = Criterion(8, "regular-map skeletons", 120)
    c.check("Octahedron -> 1/2 H_4", host(F.platonic(8)) == (2, 4))
    c.check("Icosahedron -> 1/2 H_6", host(F.platonic(20)) == (2, 6))
    c.check("Dodecahedron -> 1/2 H_10", host(F.platonic(12)) == (2, 10))
    c.check("Cube -> H_3", host(F.platonic(6)) == (1, 3))
    c.check("Shrikhande -> 1/2 H_6", host(F.shrikhande()) == (2, 6))
    c.check("Dyck not embeddable", negative(F.dyck()))
    c.check("Klein cubic not embeddable", negative(F.klein_cubic()))
    finish(c, 8)


def test_criterion_9_gonal():
    c = Criterion(9, "5-gonal suite and Avis criterion", 300)
    c.check("K_{3,3} violates a 5-gonal inequality",
            five_gonal_check(F.complete_multipartite([3, 3])) is not None)
    c.check("K_{4,4,4} violates a 5-gonal inequality",
            five_gonal_check(F.make(F.FamilySpec("k444"))) is not None)
    graphs = bipartite_graphs(10)
    mismatches = []
    for g in graphs:
        D = all_pairs_distances(g)
        avis = avis_partial_cube_test(g, D).is_partial_cube
        out = enumerate_embeddings(g, D=D)
        if avis != (out.scale == 1):
            mismatches.append(g.edges)
    c.check(f"Avis iff embedder scale 1 on {len(graphs)} bipartite graphs", not mismatches)
    want = sum(v for n, v in BIPARTITE_COUNTS.items() if n >= 2)
    c.check(f"corpus has all {want} connected bipartite graphs on 2..10 vertices", len(graphs) == want)
    finish(c, 9)


def _sigma_cases():
    out = []
    for m in (2, 3, 4, 5):
        g = F.hypercube(m)
        bits = np.array([[int(x) for x in lab] for lab in g.labels])
        out.append((g, np.repeat(bits, 2, axis=1)))
    for m in (4, 5):
        g = F.halfcube(m)
        out.append((g, np.array([[int(x) for x in lab] for lab in g.labels])))
    for m in (4, 5):
        g = F.johnson(m, 2)
        bits = np.zeros((g.n, m), dtype=int)
        for i, lab in enumerate(g.labels):
            for x in lab.strip("{}").split(","):
                bits[i, int(x) - 1] = 1
        out.append((g, bits))
    g = F.cayley_sym(3, "bubble")
    addr = F.bubble_sort_addressing(3)
    out.append((g, np.repeat(np.array([[int(x) for x in addr[lab]] for lab in g.labels]), 2, axis=1)))
    return out


def test_criterion_10_properties():
    c = Criterion(10, "brute force, products, oracle, determinism", 600)

    mismatches, cases = [], 0
    for g in connected_graphs(7):
        D = all_pairs_distances(g)
        for s in range(min(2, D.diameter), D.diameter + 1):
            cases += 1
            ours = sorted(set(enumerate_embeddings(g, s, D=D).counts_by_m))
            if ours != brute_force_embed(g, s):
                mismatches.append((g.edges, s))
    c.check(f"embed agrees with brute force on {cases} (graph, s) cases", not mismatches)
    c.check("corpus has every connected graph on 2..7 vertices",
            len(connected_graphs(7)) == sum(v for n, v in CONNECTED_COUNTS.items() if n >= 2))

    c5 = embed(F.cycle(5), first_only=True).embeddings[0]
    c.check("C_5 x C_5 -> 1/2 H_10", product_embed(c5, c5, F.cycle(5), F.cycle(5)).m == 10)
    p3 = collapse_to_scale1(embed(F.path(3), first_only=True).embeddings[0], F.path(3))
    prod = product_embed(p3, p3, F.path(3), F.path(3))
    c.check("P_3 x P_3 -> H_4", prod.m == 4 and prod.scale == 1)

    bad = 0
    for g, bits in _sigma_cases():
        D = all_pairs_distances(g)
        for (u, v) in g.edges:
            for (x, y) in g.edges:
                for e2 in ((x, y), (y, x)):
                    sig = sigma_oracle(D, D.diameter, (u, v), e2)
                    inter = int(((bits[u] != bits[v]) & (bits[e2[0]] != bits[e2[1]])).sum())
                    if sig is None or inter < abs(sig) or (inter - sig) % 2:
                        bad += 1
    c.check("sigma bound and parity on canonical addressings", bad == 0)

    for name, g, s in (("K_4", F.complete(4), 2), ("But(2)", F.butterfly(2), 3),
                       ("SOS^3_4", F.cayley_sym(4, "sos_partial"), 4), ("GP(8,3)", F.gp(8, 3), 3)):
        a = enumerate_embeddings(g, s, jobs=1)
        b = enumerate_embeddings(g, s, jobs=4)
        c.check(f"{name}: identical outcome for jobs 1 and 4", a.key() == b.key())
    finish(c, 10)
