"""Verification of explicit vertex addressings.

Nothing here touches the embedder: a certificate is checked against the BFS
metric of the graph and nothing else, which makes this module usable as an
oracle for the search code.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Mapping, Sequence

import numpy as np

from . import _kernels
from .graph import DistanceMatrix, Graph, GraphError, all_pairs_distances

VIOLATION_KINDS = ("equality-broken", "exceeds", "duplicate-address", "parity")


class ParseError(ValueError):
    pass


class LengthMismatch(ParseError):
    pass


class LabelMismatch(GraphError):
    pass


@dataclass(frozen=True)
class AddressingFile:
    name: str
    m: int
    rows: tuple[tuple[str, str], ...]

    def __post_init__(self):
        for label, bits in self.rows:
            if len(bits) != self.m:
                raise LengthMismatch(f"address of {label!r} has length {len(bits)}, expected {self.m}")
            if set(bits) - {"0", "1"}:
                raise ParseError(f"address of {label!r} is not a 0/1 string: {bits!r}")

    def as_dict(self) -> dict[str, str]:
        return dict(self.rows)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["vertex", "address"])
        w.writerows(self.rows)
        return buf.getvalue()

    def write(self, path: str | Path) -> None:
        Path(path).write_text(self.to_csv(), encoding="utf-8")


@dataclass(frozen=True)
class Violation:
    u: int
    v: int
    d: int
    d_prime: float
    kind: str

    def to_dict(self, g: Graph | None = None) -> dict:
        out = {"u": self.u, "v": self.v, "d": self.d, "d_prime": self.d_prime, "kind": self.kind}
        if g is not None:
            out["u"], out["v"] = g.labels[self.u], g.labels[self.v]
        return out


@dataclass(frozen=True)
class VerificationReport:
    scale: int
    s: int
    passed: bool
    d_prime: np.ndarray = field(repr=False)
    violations: tuple[Violation, ...]
    shortfall: int
    shortfall_pairs: tuple[tuple[int, int, int, float], ...] = field(repr=False)

    def summary(self) -> str:
        state = "pass" if self.passed else "FAIL"
        return (f"{state}: scale {self.scale}, s={self.s}, {len(self.violations)} violation(s), "
                f"{self.shortfall} shortfall pair(s)")


def parse_addressing(text: str, name: str = "") -> AddressingFile:
    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        raise ParseError("empty addressing file") from None
    if [h.strip() for h in header] != ["vertex", "address"]:
        raise ParseError(f"expected header 'vertex,address', got {','.join(header)!r}")
    rows = []
    for lineno, rec in enumerate(reader, start=2):
        if not rec or all(not x.strip() for x in rec):
            continue
        if len(rec) != 2:
            raise ParseError(f"line {lineno}: expected 2 fields, got {len(rec)}")
        rows.append((rec[0].strip(), rec[1].strip()))
    if not rows:
        raise ParseError("addressing file has no rows")
    labels = [r[0] for r in rows]
    if len(set(labels)) != len(labels):
        raise ParseError("a vertex appears in more than one row")
    m = len(rows[0][1])
    return AddressingFile(name, m, tuple(rows))


def _fixture_dir():
    return resources.files("halfcube.data").joinpath("fixtures")


@lru_cache(maxsize=1)
def fixture_manifest() -> dict:
    return json.loads(_fixture_dir().joinpath("manifest.json").read_text(encoding="utf-8"))


def fixture_graph(fixture_id: str) -> Graph:
    from .families import FamilySpec, make

    fam = fixture_manifest()[fixture_id]["family"]
    return make(FamilySpec(fam["kind"], tuple(fam["params"])))


def load_addressing(source: str | Path) -> AddressingFile:
    """Read an addressing from a CSV path or from a shipped fixture id."""
    man = fixture_manifest()
    if isinstance(source, str) and source in man:
        entry = man[source]
        if entry["file"] is None:
            from .families import bubble_sort_addressing

            g = fixture_graph(source)
            addr = bubble_sort_addressing(entry["family"]["params"][0])
            rows = tuple((lab, addr[lab]) for lab in g.labels)
            return AddressingFile(source, len(rows[0][1]), rows)
        text = _fixture_dir().joinpath(entry["file"]).read_text(encoding="utf-8")
        return parse_addressing(text, source)
    path = Path(source)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    return parse_addressing(text, path.stem)


def _bit_matrix(g: Graph, a: AddressingFile) -> np.ndarray:
    addr = a.as_dict()
    missing = [lab for lab in g.labels if lab not in addr]
    extra = sorted(set(addr) - set(g.labels))
    if missing or extra:
        raise LabelMismatch(f"labels do not match graph {g.name!r}: missing {missing[:5]}, unknown {extra[:5]}")
    bits = np.zeros((g.n, a.m), dtype=np.uint8)
    for i, lab in enumerate(g.labels):
        bits[i] = np.frombuffer(addr[lab].encode("ascii"), dtype=np.uint8) - ord("0")
    return bits


def verify_bits(D: DistanceMatrix, bits: np.ndarray, scale: int, s: int | None = None) -> VerificationReport:
    if scale not in (1, 2):
        raise ValueError("scale must be 1 or 2")
    s = D.diameter if s is None else int(s)
    d = np.asarray(D.d, dtype=np.int64)
    n = d.shape[0]
    ham = np.asarray(_kernels.hamming_matrix(np.ascontiguousarray(bits, dtype=np.uint8)), dtype=np.int64)
    target = scale * d
    iu, iv = np.triu_indices(n, 1)
    dd, hh, tt = d[iu, iv], ham[iu, iv], target[iu, iv]

    found: list[Violation] = []
    for k in np.flatnonzero(hh == 0):
        found.append(Violation(int(iu[k]), int(iv[k]), int(dd[k]), 0.0, "duplicate-address"))
    near = dd <= s
    for k in np.flatnonzero(near & (hh != tt) & (hh != 0)):
        found.append(Violation(int(iu[k]), int(iv[k]), int(dd[k]), float(hh[k]) / scale, "equality-broken"))
    for k in np.flatnonzero(~near & (hh > tt)):
        found.append(Violation(int(iu[k]), int(iv[k]), int(dd[k]), float(hh[k]) / scale, "exceeds"))
    if scale == 2:
        weights = bits.sum(axis=1)
        for v in np.flatnonzero(weights % 2):
            found.append(Violation(int(v), int(v), 0, float(weights[v]) / 2, "parity"))
    found.sort(key=lambda x: (x.u, x.v, VIOLATION_KINDS.index(x.kind)))

    short = np.flatnonzero(~near & (hh < tt) & (hh != 0))
    short_pairs = tuple((int(iu[k]), int(iv[k]), int(dd[k]), float(hh[k]) / scale) for k in short)
    d_prime = ham / scale
    d_prime.setflags(write=False)
    return VerificationReport(scale, s, not found, d_prime, tuple(found), len(short_pairs), short_pairs)


def verify_certificate(g: Graph, a: AddressingFile, scale: int, s: int | None = None,
                       D: DistanceMatrix | None = None) -> VerificationReport:
    D = all_pairs_distances(g) if D is None else D
    return verify_bits(D, _bit_matrix(g, a), scale, s)


def emit_addressing(emb, g: Graph) -> AddressingFile:
    """Serialise an embedding (anything with ``m`` and per-vertex ``addresses``)."""
    addresses: Sequence[str] | Mapping[int, str] = emb.addresses
    rows = tuple((g.labels[v], addresses[v]) for v in range(g.n))
    return AddressingFile(g.name, int(emb.m), rows)
