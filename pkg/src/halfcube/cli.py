"""Command line: gen, embed, verify, gonal, sweep-gcr, info.

Exit codes are 0 for a positive answer (embeddable, certificate passes,
inequalities hold), 1 for a proven negative and 2 for errors, exhausted
budgets and anything else inconclusive.

Graph arguments accept a graph JSON file written by ``gen`` or a family
shorthand ``kind:p1,p2,...`` such as ``gp:10,3`` or ``gcr:24,9,11``.
"""

from __future__ import annotations

import argparse
import json
import logging
import multiprocessing as mp
import sys
from pathlib import Path

from . import certify, embedder, gonal
from .families import KINDS, FamilySpec, InvalidParams, make
from .graph import Graph, GraphError, all_pairs_distances, girth, is_bipartite

log = logging.getLogger("halfcube")

EXIT_OK, EXIT_NEGATIVE, EXIT_ERROR = 0, 1, 2


class CliError(Exception):
    pass


# ---------------------------------------------------------------------------
# graph input / output
# ---------------------------------------------------------------------------


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise CliError(f"expected comma-separated integers, got {text!r}") from None


def parse_family(text: str) -> FamilySpec:
    kind, _, params = text.partition(":")
    return FamilySpec(kind, tuple(_ints(params)))


def load_graph(source: str) -> tuple[Graph, dict | None]:
    """Graph plus its family record (None when the file carries none)."""
    path = Path(source)
    if path.exists():
        try:
            obj = json.loads(path.read_text(encoding="utf-8"))
            g = Graph.from_json(json.dumps(obj))
        except (OSError, ValueError, KeyError, TypeError) as exc:
            raise CliError(f"cannot read graph file {path}: {exc}") from exc
        return g, obj.get("family")
    if ":" in source or source in KINDS:
        spec = parse_family(source)
        return make(spec), spec.to_dict()
    raise CliError(f"no such graph file or family shorthand: {source!r}")


def graph_document(g: Graph, family: dict | None) -> str:
    obj = json.loads(g.to_json())
    if family is not None:
        obj["family"] = family
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=False)


def _write_or_print(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text if text.endswith("\n") else text + "\n", encoding="utf-8")
    else:
        print(text)


def append_jsonl(path: str, records: list[dict]) -> None:
    # one write per batch keeps every line whole
    payload = "".join(json.dumps(r, ensure_ascii=False) + "\n" for r in records)
    with open(path, "a", encoding="utf-8") as fh:
        fh.write(payload)
        fh.flush()


def result_record(g: Graph, family: dict | None, out: embedder.SearchOutcome,
                  budget_seconds: float | None, node_budget: int) -> dict:
    return {
        "graph": g.name,
        "family": family,
        "s": out.s,
        "scale": out.scale,
        "status": out.status,
        "m": out.m,
        "count": out.count,
        "elapsed_ms": round(out.elapsed * 1000.0, 3),
        "nodes": out.nodes,
        "budget_seconds": budget_seconds,
        "node_budget": node_budget,
    }


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def cmd_gen(args) -> int:
    if args.params is not None:
        params = _ints(args.params)
    else:
        params = [x for x in (args.m, args.n, args.k) if x is not None]
        if args.chords:
            params += _ints(args.chords)
    spec = FamilySpec(args.family, tuple(params))
    g = make(spec)
    _write_or_print(graph_document(g, spec.to_dict()), args.out)
    if args.out:
        print(f"{g.name}: {g.n} vertices, {len(g.edges)} edges -> {args.out}")
    return EXIT_OK


def _check_s(s: int | None) -> None:
    if s is not None and s < 2:
        raise CliError("--s must be at least 2")


def _budget(args) -> float | None:
    return None if args.budget_seconds is None or args.budget_seconds <= 0 else args.budget_seconds


def _pick_solution(out: embedder.SearchOutcome, scale1: bool, g: Graph, D):
    if scale1:
        for e in out.embeddings:
            if embedder.is_collapsible(e):
                return embedder.collapse_to_scale1(e, g, D)
        return None
    if out.scale == 1:
        # report the collapsed form when one exists, matching the outcome summary
        for e in out.embeddings:
            if embedder.is_collapsible(e) and e.m // 2 == out.m:
                return embedder.collapse_to_scale1(e, g, D)
    return min(out.embeddings, key=lambda e: e.m)


def cmd_embed(args) -> int:
    _check_s(args.s)
    g, family = load_graph(args.graph)
    D = all_pairs_distances(g)
    budget = _budget(args)
    out = embedder.embed(g, args.s, first_only=not (args.all or args.scale1),
                         node_budget=args.node_budget, time_budget=budget, jobs=args.jobs, D=D)
    record = result_record(g, family, out, budget, args.node_budget)

    code = EXIT_ERROR
    if out.positive:
        chosen = _pick_solution(out, args.scale1, g, D)
        if chosen is None:
            print(f"{g.name}: {out.label()} but no solution collapses to scale 1")
            code = EXIT_NEGATIVE
            record.update(status="NoScale1", scale=None, m=None)
        else:
            addressing = certify.emit_addressing(chosen, g)
            report = certify.verify_certificate(g, addressing, chosen.scale, out.s, D)
            if not report.passed:
                raise CliError(f"re-verification failed for {g.name}: {report.summary()}")
            if args.out:
                addressing.write(args.out)
            code = EXIT_OK
            host = "H" if chosen.scale == 1 else "1/2 H"
            print(f"{g.name}: {out.label()} -> {host}_{chosen.m} "
                  f"(s={out.s}, {out.count} solution(s), {out.nodes} nodes)")
            if args.all:
                print("solutions by scale-2 dimension: "
                      + ", ".join(f"m={m}: {c}" for m, c in out.counts_by_m.items()))
            if report.shortfall:
                print(f"{report.shortfall} pair(s) beyond s are shortened")
            if not args.out:
                print(addressing.to_csv(), end="")
    elif out.negative:
        print(f"{g.name}: {out.label()} (s={out.s}, {out.nodes} nodes)")
        code = EXIT_NEGATIVE
    else:
        print(f"{g.name}: Unknown ({out.reason}, {out.nodes} nodes)")
    if args.results:
        append_jsonl(args.results, [record])
    return code


def cmd_verify(args) -> int:
    _check_s(args.s)
    g, _ = load_graph(args.graph)
    addressing = certify.load_addressing(args.addressing)
    report = certify.verify_certificate(g, addressing, args.scale, args.s)
    print(f"{g.name} / {addressing.name}: {report.summary()}")
    for v in report.violations:
        print("  violation " + json.dumps(v.to_dict(g), ensure_ascii=False))
    if report.shortfall and args.verbose:
        for u, v, d, dp in report.shortfall_pairs:
            print(f"  shortfall {g.labels[u]} {g.labels[v]}: d={d}, d'={dp:g}")
    return EXIT_OK if report.passed else EXIT_NEGATIVE


def cmd_gonal(args) -> int:
    g, _ = load_graph(args.graph)
    w = gonal.gonal_check(g, k=args.k)
    if args.avis:
        res = gonal.avis_partial_cube_test(g)
        print(f"{g.name}: partial cube = {res.is_partial_cube} ({res.reason})")
    if w is None:
        print(f"{g.name}: all {2 * args.k + 1}-gonal inequalities hold")
        return EXIT_OK
    print(f"{g.name}: {2 * args.k + 1}-gonal inequality violated")
    print(json.dumps(w.to_dict(g), ensure_ascii=False))
    return EXIT_NEGATIVE


def cmd_info(args) -> int:
    if args.fixtures:
        for fid, entry in certify.fixture_manifest().items():
            fam = entry["family"]
            print(f"{fid}: {fam['kind']}{tuple(fam['params'])} scale {entry['scale']} "
                  f"s={entry.get('s')}  [{entry.get('source', '')}]")
        return EXIT_OK
    if args.graph is None:
        print("families: " + ", ".join(KINDS))
        return EXIT_OK
    g, family = load_graph(args.graph)
    D = all_pairs_distances(g)
    degs = g.degrees()
    bip = is_bipartite(g)
    info = {
        "graph": g.name, "family": family, "n": g.n, "edges": len(g.edges),
        "degree_min": min(degs), "degree_max": max(degs), "diameter": D.diameter,
        "bipartite": bip.bipartite, "girth": girth(g),
    }
    print(json.dumps(info, ensure_ascii=False, indent=2))
    return EXIT_OK


# ---------------------------------------------------------------------------
# chordal ring sweep
# ---------------------------------------------------------------------------

SWEEP_MODES = ("all-odd", "adjacent", "conjecture")


def _n_values(text: str) -> list[int]:
    values: list[int] = []
    for part in text.split(","):
        if "-" in part:
            lo, hi = (int(x) for x in part.split("-", 1))
            values += list(range(lo, hi + 1, 2 if lo % 2 == 0 else 1))
        elif part:
            values.append(int(part))
    for n in values:
        if n % 2 or n < 6:
            raise CliError(f"sweep needs even n >= 6, got {n}")
    return sorted(set(values))


def sweep_chords(n: int, mode: str, k_max: int = 2) -> list[tuple[int, ...]]:
    """Chord sets for one ring size, in increasing order, exclusions logged."""
    from itertools import combinations

    odd = list(range(3, n, 2))
    if mode == "conjecture":
        cands = [(n // 2 - 3, n // 2 - 1), (n // 2 + 1, n // 2 + 3)]
    elif mode == "adjacent":
        cands = [(a, a + 2) for a in odd if a + 2 < n]
    elif mode == "all-odd":
        cands = [c for k in range(1, k_max + 1) for c in combinations(odd, k)]
    else:
        raise CliError(f"unknown sweep mode {mode!r}")
    keep = []
    for c in cands:
        if any(a < 3 or a > n - 1 or a % 2 == 0 for a in c):
            log.info("n=%d chords %s excluded: chord outside the odd range [3, n-1]", n, c)
        elif n - 1 in c:
            # even i -> i + (n-1) is the ring edge (i, i-1): the chord collapses into the ring
            log.info("n=%d chords %s excluded: chord n-1 duplicates ring edges", n, c)
        else:
            keep.append(tuple(c))
    return sorted(set(keep))


def _sweep_task(task):
    n, chords, s_drop, budget, node_budget = task
    spec = FamilySpec("gcr", (n, *chords))
    g = make(spec)
    D = all_pairs_distances(g)
    s = max(2, D.diameter - s_drop) if s_drop else None
    out = embedder.embed(g, s, first_only=True, node_budget=node_budget, time_budget=budget, D=D)
    if out.positive:
        e = out.embeddings[0]
        if embedder.is_collapsible(e):
            e = embedder.collapse_to_scale1(e, g, D)
        rep = certify.verify_certificate(g, certify.emit_addressing(e, g), e.scale, out.s, D)
        if not rep.passed:
            raise CliError(f"re-verification failed for {g.name}")
    return result_record(g, spec.to_dict(), out, budget, node_budget)


def run_sweep(ns: list[int], mode: str, k_max: int = 2, jobs: int = 1, s_drop: int = 0,
              budget: float | None = 60.0, node_budget: int = embedder.DEFAULT_NODE_BUDGET) -> list[dict]:
    tasks = [(n, c, s_drop, budget, node_budget) for n in ns for c in sweep_chords(n, mode, k_max)]
    if jobs > 1 and len(tasks) > 1:
        with mp.get_context("fork").Pool(jobs) as pool:
            return list(pool.imap(_sweep_task, tasks))
    return [_sweep_task(t) for t in tasks]


def cmd_sweep_gcr(args) -> int:
    ns = _n_values(args.n)
    records = run_sweep(ns, args.mode, args.k_max, args.jobs, args.s_drop,
                        _budget(args), args.node_budget)
    if args.results:
        append_jsonl(args.results, records)
    hits = [r for r in records if r["status"] in (embedder.EMBEDDABLE, embedder.TR_EMBEDDABLE)]
    unknown = sum(r["status"] == embedder.UNKNOWN_STATUS for r in records)
    print(f"{len(records)} instance(s), {len(hits)} embeddable, {unknown} unknown")
    for r in hits:
        host = "H" if r["scale"] == 1 else "1/2 H"
        print(f"  {r['graph']:<24} {host}_{r['m']}  (s={r['s']})")
    return EXIT_ERROR if unknown else EXIT_OK


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------


def _add_budget(p: argparse.ArgumentParser) -> None:
    p.add_argument("--jobs", type=int, default=1, help="worker processes (default 1)")
    p.add_argument("--budget-seconds", type=float, default=60.0,
                   help="wall-clock budget per instance; 0 disables (default 60)")
    p.add_argument("--node-budget", type=int, default=embedder.DEFAULT_NODE_BUDGET,
                   help="search-node budget per instance")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="halfcube", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write a family member as graph JSON")
    p.add_argument("family", choices=KINDS)
    p.add_argument("--m", type=int, help="first parameter where a family takes (m, n)")
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--chords", help="chord list for gcr, e.g. 9,11")
    p.add_argument("--params", help="raw parameter list, overrides --m/--n/--k/--chords")
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("embed", help="search a (truncated) hypercube embedding")
    p.add_argument("graph")
    p.add_argument("--s", type=int, help="truncation level (default: diameter)")
    p.add_argument("--all", action="store_true", help="enumerate every solution")
    p.add_argument("--scale1", action="store_true", help="require a partial-cube addressing")
    p.add_argument("--out", help="addressing CSV for the reported solution")
    p.add_argument("--results", help="append a JSONL result record here")
    _add_budget(p)
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("verify", help="check an addressing against a graph")
    p.add_argument("graph")
    p.add_argument("addressing", help="CSV path or shipped fixture id")
    p.add_argument("--scale", type=int, choices=(1, 2), default=2)
    p.add_argument("--s", type=int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gonal", help="look for a violated (2k+1)-gonal inequality")
    p.add_argument("graph")
    p.add_argument("--k", type=int, default=2, choices=(1, 2, 3))
    p.add_argument("--avis", action="store_true", help="also run the partial-cube test")
    p.set_defaults(func=cmd_gonal)

    p = sub.add_parser("sweep-gcr", help="embed a batch of generalised chordal rings")
    p.add_argument("--n", required=True, help="ring sizes: 24,40 or 24-40")
    p.add_argument("--mode", choices=SWEEP_MODES, default="conjecture")
    p.add_argument("--k-max", type=int, default=2, help="largest chord set in all-odd mode")
    p.add_argument("--s-drop", type=int, default=0,
                   help="search at s = diameter - s_drop (default 0: full embedding)")
    p.add_argument("--results")
    _add_budget(p)
    p.set_defaults(func=cmd_sweep_gcr)

    p = sub.add_parser("info", help="graph summary, family list or fixture list")
    p.add_argument("graph", nargs="?")
    p.add_argument("--fixtures", action="store_true")
    p.set_defaults(func=cmd_info)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s", stream=sys.stderr)
    try:
        return args.func(args)
    except (CliError, GraphError, certify.ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
