"""Regenerate the certificate fixtures in src/halfcube/data/fixtures.

Addresses are transcribed exactly as printed.  Printed vertex names are mapped
to generator labels; where the printed table carries no usable names (row
numbers only) the correspondence is the first isomorphism found between the
graph the rows induce and the generated graph.  The manifest keeps the printed
name of every row next to the generator label it was assigned.
"""

import csv
import io
import itertools
import json
import pathlib
import re
import sys

ROOT = pathlib.Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "src"))

from halfcube import families as F  # noqa: E402
from halfcube.graph import find_isomorphism, graph_from_labeled_edges  # noqa: E402

OUT = ROOT / "src" / "halfcube" / "data" / "fixtures"

IND23 = """\
0,0     : 0,0,0,0,0,0
1,0     : 0,1,1,0,0,0
1,1     : 0,1,1,1,1,0
0,1     : 0,0,1,0,1,0
0,0,0   : 1,0,0,0,0,0
1,0,0   : 0,1,0,0,0,0
0,1,0   : 0,0,1,0,0,0
1,1,0   : 0,1,1,1,0,0
1,1,1   : 0,0,1,1,1,1
1,0,1   : 0,1,1,0,1,0
0,1,1   : 0,0,1,1,1,0
0,0,1   : 0,0,0,0,1,0
"""

GCR24 = """\
1 : 0,0,0,0,0
2 : 1,0,0,0,0
3 : 1,0,1,0,0
4 : 1,0,1,0,1
5 : 1,0,1,1,1
6 : 1,1,1,1,1
7 : 1,1,0,1,1
8 : 0,1,0,1,1
9 : 0,1,0,0,1
10 : 0,1,0,0,0
11 : 0,1,1,0,0
12 : 0,0,1,0,0
13 : 0,0,1,1,0
14 : 1,0,1,1,0
15 : 1,0,0,1,0
16 : 1,0,0,1,1
17 : 1,0,0,0,1
18 : 1,1,0,0,1
19 : 1,1,1,0,1
20 : 0,1,1,0,1
21 : 0,1,1,1,1
22 : 0,1,1,1,0
23 : 0,1,0,1,0
24 : 0,0,0,1,0
"""

SOS44 = """\
ABCD : 0,0,0,0,0,0
DBCA : 0,0,1,1,1,0
DACB : 1,1,0,1,0,1
DBAC : 1,0,0,0,0,1
ADCB : 1,1,0,1,1,1
BDCA : 0,1,1,1,1,0
BACD : 1,0,0,0,0,0
BDAC : 1,1,0,0,0,1
ADBC : 0,0,1,0,1,0
CDBA : 1,0,0,0,1,1
CABD : 0,1,1,1,0,1
CDAB : 0,1,1,0,0,0
ABDC : 0,1,1,1,1,1
CBDA : 0,1,0,0,0,1
CADB : 1,0,1,0,1,0
CBAD : 1,0,1,1,1,1
ACDB : 1,0,0,0,1,0
BCDA : 0,1,0,0,0,0
BADC : 1,1,1,1,1,1
BCAD : 1,0,1,1,1,0
ACBD : 0,1,0,1,0,1
DCBA : 1,0,0,1,1,1
DABC : 0,0,1,0,0,0
DCAB : 0,1,1,1,0,0
"""

SOS34 = """\
ABCD : 0,0,0,0,0,0,0,0,0,0,0,0,0,0
DBCA : 1,0,1,0,0,0,0,0,1,0,1,0,1,1
DACB : 0,0,0,0,1,1,0,0,0,1,1,0,1,1
DBAC : 1,0,1,0,0,0,1,1,1,0,1,0,1,1
ADCB : 1,1,0,0,0,0,1,1,1,0,1,0,0,0
BDCA : 0,0,0,0,1,1,1,1,0,0,1,1,0,0
BACD : 1,0,0,1,1,1,1,1,1,0,1,0,1,1
BDAC : 0,0,0,0,1,1,0,0,0,0,1,1,0,0
ADBC : 1,1,0,0,0,0,1,1,1,0,1,0,1,1
CDBA : 1,0,1,0,0,0,0,0,0,1,1,0,1,1
CABD : 1,1,0,0,0,0,0,0,0,0,0,0,0,0
CDAB : 1,0,1,0,1,1,0,0,0,1,1,0,1,1
ABDC : 0,0,0,0,1,1,0,0,0,0,0,0,0,0
CBDA : 1,0,0,1,1,1,1,1,0,0,1,1,0,0
CADB : 1,1,0,0,0,0,1,1,0,0,0,0,0,0
CBAD : 1,0,0,1,1,1,1,1,0,0,1,1,1,1
ACDB : 1,0,0,1,1,1,0,0,0,1,1,0,1,1
BCDA : 1,0,1,0,0,0,0,0,0,0,0,0,1,1
BADC : 1,0,0,1,0,0,1,1,1,0,1,0,1,1
BCAD : 1,0,1,0,0,0,0,0,0,0,0,0,0,0
ACBD : 1,0,0,1,1,1,1,1,0,1,1,0,1,1
DCBA : 1,1,0,0,1,1,1,1,0,0,1,1,0,0
DABC : 0,0,0,0,1,1,0,0,0,1,1,0,0,0
DCAB : 1,1,0,0,0,0,1,1,0,0,1,1,0,0
"""

# row 8 is printed without its opening parenthesis; the digits are unaffected
BUT2 = """\
1 : 0,0,0,0,0,0,0,0
2 : 1,1,0,0,0,0,0,0
3 : 1,1,0,0,1,1,0,0
4 : 1,1,1,1,1,1,1,1
5 : 1,1,0,0,1,1,1,1
6 : 1,1,0,0,0,0,1,1
7 : 1,1,1,1,0,0,0,0
8 : 0,0,1,1,0,0,0,0
9 : 0,0,1,1,1,0,1,0
10 : 0,0,0,0,1,1,1,1
11 : 0,0,1,1,1,1,1,1
12 : 0,0,1,1,0,1,0,1
"""

# printed as four columns; rows numbered here in reading order
DYCK = """\
0,0,0,0,0,0 1,0,0,0,0,0 1,0,0,1,0,0 1,0,0,1,0,1
1,1,0,1,0,1 0,1,0,1,0,1 0,1,0,0,0,1 0,1,0,0,0,0
1,0,0,0,1,0 1,1,0,0,1,0 1,1,1,0,1,0 1,1,1,1,1,0
1,1,1,1,0,0 1,0,1,1,0,0 0,0,1,0,0,0 0,0,1,0,0,1
0,0,1,0,1,1 1,0,1,0,1,1 1,0,0,0,1,1 0,1,0,0,1,0
0,1,0,1,1,0 0,1,1,1,1,0 0,0,1,1,1,0 0,0,1,1,0,0
0,1,1,0,0,1 1,1,1,0,0,1 1,1,1,0,1,1 0,1,0,1,1,1
0,0,0,1,1,1 0,0,1,1,1,1 1,1,1,1,0,1 1,0,0,1,1,1
"""


def rows_of(text):
    out = []
    for line in text.strip().splitlines():
        name, bits = (part.strip() for part in line.split(":"))
        out.append((name, bits.replace(",", "")))
    return out


def dyck_rows():
    words = re.findall(r"[01](?:,[01]){5}", DYCK)
    return [(str(k + 1), w.replace(",", "")) for k, w in enumerate(words)]


def hamming(a, b):
    return sum(x != y for x, y in zip(a, b))


def by_isomorphism(rows, g, step):
    """Assign generator labels to printed rows via the graph of pairs at Hamming ``step``."""
    names = [r[0] for r in rows]
    bits = dict(rows)
    pairs = [(a, b) for a, b in itertools.combinations(names, 2) if hamming(bits[a], bits[b]) == step]
    h = graph_from_labeled_edges("rows", names, pairs)
    phi = find_isomorphism(h, g)
    if phi is None:
        raise SystemExit(f"rows do not induce {g.name}")
    return {names[i]: g.labels[phi[i]] for i in range(len(names))}


def mirror(word):
    swap = {"A": "D", "B": "C", "C": "B", "D": "A"}
    return "".join(swap[c] for c in reversed(word))


def build():
    ind_rows = rows_of(IND23)
    ind_map = {name: name.replace(",", "") for name, _ in ind_rows}
    minor12 = [ind_rows[i] for i in (0, 1, 4, 5, 6, 7)]
    minor01 = [ind_rows[i] for i in (0, 1, 4)]
    gcr_rows = rows_of(GCR24)
    sos44 = rows_of(SOS44)
    sos34 = rows_of(SOS34)
    but_rows = rows_of(BUT2)
    dy_rows = dyck_rows()

    fixtures = {
        "ind23_table1": dict(
            family={"kind": "indel", "params": [2, 3]}, scale=1, s=None,
            source="Table 1", rows=ind_rows, label_map=ind_map,
            note="printed words with separators removed"),
        "ind23_table1_corrected": dict(
            family={"kind": "indel", "params": [2, 3]}, scale=1, s=None,
            source="Table 1, one bit changed",
            rows=[(n, "011111" if n == "1,1,1" else b) for n, b in ind_rows], label_map=ind_map,
            note="row 1,1,1 printed as 001111 has the wrong parity; 011111 is the only "
                 "single-bit change that makes the table isometric"),
        "ind12_table1_minor": dict(
            family={"kind": "indel", "params": [1, 2]}, scale=1, s=None,
            source="Table 1, rows 1,2,5-8, columns 1-4",
            rows=[(n, b[:4]) for n, b in minor12],
            label_map={n: n.replace(",", "")[:-1] for n, _ in minor12},
            note="printed words lose their trailing 0"),
        "ind01_table1_minor": dict(
            family={"kind": "indel", "params": [0, 1]}, scale=1, s=None,
            source="Table 1, rows 1,2,5, columns 1-2",
            rows=[(n, b[:2]) for n, b in minor01],
            label_map={"0,0": "ε", "1,0": "1", "0,0,0": "0"},
            note="centre of the path is the row at Hamming distance 1 from both others"),
        "gcr24_fig": dict(
            family={"kind": "gcr", "params": [24, 9, 11]}, scale=1, s=None,
            source="GCR(24,(9,11)) figure", rows=gcr_rows,
            label_map={n: str(int(n) % 24 + 1) for n, _ in gcr_rows},
            note="printed ring position k is position k+1 of the generator"),
        "sos44_table4_upper": dict(
            family={"kind": "cayley_sos_full", "params": [4]}, scale=1, s=None,
            source="Table 4, upper block", rows=sos44,
            label_map={n: n for n, _ in sos44}, note="labels as printed"),
        "sos34_table4_lower": dict(
            family={"kind": "cayley_sos_partial", "params": [4]}, scale=2, s=4,
            source="Table 4, lower block", rows=sos34,
            label_map={n: mirror(n) for n, _ in sos34},
            note="printed labels use the mirrored generator set; reverse and swap A<->D, B<->C"),
        "but2_fig": dict(
            family={"kind": "butterfly", "params": [2]}, scale=2, s=3,
            source="But(2) figure", rows=but_rows,
            label_map=by_isomorphism(but_rows, F.butterfly(2), 2),
            note="rows are numbered only; correspondence by isomorphism"),
        "dyck_table5": dict(
            family={"kind": "dyck", "params": []}, scale=1, s=4,
            source="Table 5", rows=dy_rows,
            label_map=by_isomorphism(dy_rows, F.dyck(), 1),
            note="rows are unnamed, numbered in reading order; correspondence by isomorphism",
            expect_shortfall=16),
    }

    OUT.mkdir(parents=True, exist_ok=True)
    manifest = {}
    for fid, fx in fixtures.items():
        g = F.make(F.FamilySpec(fx["family"]["kind"], tuple(fx["family"]["params"])))
        lab = fx["label_map"]
        printed = {lab[n]: n for n, _ in fx["rows"]}
        bits = {lab[n]: b for n, b in fx["rows"]}
        if sorted(bits) != sorted(g.labels):
            raise SystemExit(f"{fid}: label set does not match {g.name}")
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["vertex", "address"])
        for v in g.labels:
            w.writerow([v, bits[v]])
        (OUT / f"{fid}.csv").write_text(buf.getvalue(), encoding="utf-8")
        entry = {
            "file": f"{fid}.csv",
            "family": fx["family"],
            "scale": fx["scale"],
            "s": fx["s"],
            "source": fx["source"],
            "note": fx["note"],
            "printed_labels": {v: printed[v] for v in g.labels},
        }
        if "expect_shortfall" in fx:
            entry["expect_shortfall"] = fx["expect_shortfall"]
        manifest[fid] = entry

    manifest["bsg4_generated"] = {
        "file": None,
        "family": {"kind": "cayley_bubble", "params": [4]},
        "scale": 1,
        "s": None,
        "source": "generated by bubble_sort_addressing(4)",
        "note": "no printed table",
    }
    text = json.dumps(manifest, indent=1, ensure_ascii=False) + "\n"
    (OUT / "manifest.json").write_text(text, encoding="utf-8")
    print(f"wrote {len(manifest)} manifest entries to {OUT}")


if __name__ == "__main__":
    build()
