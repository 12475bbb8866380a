"""Exhaustive verification of the free-planarity theorems over small graphs.

Per-graph work (planarity routes, the three free-planarity routes, minor
checks on 3-connected members, certificate extraction) is computed by
``graph_record`` and can be spread over worker processes; aggregation runs
in enumeration order, so reports do not depend on the worker count.
Records can be cached on disk under the graph's canonical key.
"""

from __future__ import annotations

import json
import logging
import random
import time
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from multiprocessing import Pool
from pathlib import Path
from typing import Callable, Iterable

from . import __version__
from .bridges import extract_certificate
from .catalog import complete, k33, k33_minus, k5_minus, multiedge, prism, wheel, xi
from .decomposition import is_2_connected, is_3_connected, is_properly_3_connected
from .freeop import (SplitSpec, edge_deleted_set, free_class_member, free_forbidden,
                     free_forbidden_stages, split_vertex)
from .freeplanar import is_free_planar_def, is_free_planar_minors, is_free_planar_structural
from .generate import MAX_ENUMERATION, enumerate_up_to
from .graph import Graph, GraphError, add_edge, delete_edge, subdivide_edge
from .graph6 import parse_graph6, write_graph6
from .isomorphism import GraphSet, canonical_key, is_isomorphic
from .minors import excludes_all, has_minor, minimal_minors, verify_minor_model
from .planarity import is_planar_fast, is_planar_minor

log = logging.getLogger(__name__)

THEOREMS = (
    "planarity", "fp-def-vs-minors", "fp-structure", "fp-plus-edge", "no-xi-minor", "no-m4-minor",
    "wheels-and-prism", "subdivision-prism", "subdivision-wheel", "subdivision-tetra",
    "kuratowski-free-class", "two-edge-lemma", "certifier", "operator",
)
CACHE_FILE = "verdicts.jsonl"
CACHE_FORMAT = "freeminor-verdicts"
RECORD_SCHEMA = 2
OPERATOR_TRIALS = 20
OPERATOR_SEED = 2024


@dataclass(frozen=True)
class RunConfig:
    command: str = "verify-theorems"
    inputs: tuple[str, ...] = ()
    max_n: int = 7
    jobs: int = 1
    cache_dir: str | None = None
    fmt: str = "text"

    def __post_init__(self):
        if not 1 <= self.max_n <= MAX_ENUMERATION:
            raise GraphError(f"max_n must lie in 1..{MAX_ENUMERATION}, got {self.max_n}")
        if self.jobs < 1:
            raise GraphError("worker count must be at least 1")
        if self.fmt not in ("text", "jsonl"):
            raise GraphError(f"unknown output format {self.fmt!r}")


@dataclass
class TheoremReport:
    theorem: str
    instances: int = 0
    violations: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.violations

    def check(self, ok: bool, what: str) -> None:
        self.instances += 1
        if not ok:
            self.violations.append(what)

    def to_dict(self, timings: bool = False) -> dict:
        out = {"theorem": self.theorem, "status": "PASS" if self.passed else "FAIL",
               "instances": self.instances, "violations": list(self.violations),
               "notes": list(self.notes)}
        if timings:
            out["wall_time"] = round(self.wall_time, 3)
        return out

    def to_text(self, timings: bool = False) -> str:
        head = (f"theorem {self.theorem}: {'PASS' if self.passed else 'FAIL'} "
                f"instances={self.instances} violations={len(self.violations)}")
        if timings:
            head += f" time={self.wall_time:.3f}s"
        lines = [head]
        lines += [f"  note: {n}" for n in self.notes]
        lines += [f"  violation: {v}" for v in self.violations]
        return "\n".join(lines)


def format_reports(reports: Iterable[TheoremReport], fmt: str = "text", timings: bool = False) -> str:
    if fmt == "jsonl":
        return "".join(json.dumps(r.to_dict(timings), sort_keys=True) + "\n" for r in reports)
    return "".join(r.to_text(timings) + "\n" for r in reports)


class VerdictCache:
    """Append-only canonical-key -> record store, discarded when its header is stale."""

    def __init__(self, directory: str | Path | None):
        self.path = Path(directory) / CACHE_FILE if directory else None
        self.data: dict[str, dict] = {}
        self._pending: list[tuple[str, dict]] = []
        if self.path is None or not self.path.exists():
            return
        with self.path.open() as fh:
            header = fh.readline()
            try:
                meta = json.loads(header)
            except json.JSONDecodeError:
                meta = {}
            if meta != self._header():
                log.info("ignoring stale verdict cache %s", self.path)
                return
            for line in fh:
                try:
                    entry = json.loads(line)
                    self.data[entry["key"]] = entry["record"]
                except (json.JSONDecodeError, KeyError):
                    log.warning("skipping corrupt cache line in %s", self.path)

    @staticmethod
    def _header() -> dict:
        return {"format": CACHE_FORMAT, "version": __version__, "schema": RECORD_SCHEMA}

    def get(self, key: str) -> dict | None:
        return self.data.get(key)

    def put(self, key: str, record: dict) -> None:
        if key not in self.data:
            self.data[key] = record
            self._pending.append((key, record))

    def flush(self) -> None:
        if self.path is None or not self._pending:
            return
        self.path.parent.mkdir(parents=True, exist_ok=True)
        fresh = not self.path.exists() or len(self.data) == len(self._pending)
        with self.path.open("w" if fresh else "a") as fh:
            if fresh:
                fh.write(json.dumps(self._header(), sort_keys=True) + "\n")
            for key, record in self._pending:
                fh.write(json.dumps({"key": key, "record": record}, sort_keys=True) + "\n")
        self._pending.clear()


M4 = multiedge(4)
XI = xi()


def graph_record(g: Graph) -> dict:
    """Every per-graph fact the theorem reports draw on."""
    rec = {
        "g6": write_graph6(g),
        "planar_minor": is_planar_minor(g),
        "planar_fast": is_planar_fast(g),
        "fp_def": is_free_planar_def(g).is_free_planar,
        "fp_minors": is_free_planar_minors(g).is_free_planar,
        "fp_structure": is_free_planar_structural(g).is_free_planar,
    }
    if rec["fp_minors"]:
        rec["plus_edge_bad"] = [list(e) for e in g.non_edges() if not is_planar_fast(add_edge(g, e))]
    rec["three_connected"] = is_3_connected(g)
    rec["proper3"] = is_properly_3_connected(g)
    if rec["three_connected"] and rec["fp_minors"]:
        rec["has_m4"] = has_minor(g, M4)
        rec["has_xi"] = has_minor(g, XI)
    if g.n >= 3 and is_2_connected(g):
        cases: Counter = Counter()
        bad = []
        for e in g.non_edges():
            if is_planar_fast(add_edge(g, e)):
                continue
            cert = extract_certificate(g, *e)
            ok = verify_minor_model(cert.model) and (
                is_isomorphic(cert.model.pattern, k5_minus()) or is_isomorphic(cert.model.pattern, k33_minus()))
            cases[cert.case_used] += 1
            if not ok:
                bad.append(list(e))
            if cert.case_used == "Fallback":
                log.info("certificate fallback: %s pair %d-%d", rec["g6"], *e)
                rec.setdefault("fallback_pairs", []).append(list(e))
        rec["cert_cases"] = dict(sorted(cases.items()))
        rec["cert_bad"] = bad
    return rec


def compute_records(graphs: list[Graph], jobs: int = 1, cache: VerdictCache | None = None) -> list[dict]:
    keys = [canonical_key(g).hex() for g in graphs]
    out: list[dict | None] = [cache.get(k) if cache else None for k in keys]
    todo = [i for i, r in enumerate(out) if r is None]
    if jobs > 1 and len(todo) > 1:
        with Pool(jobs) as pool:
            fresh = pool.map(graph_record, [graphs[i] for i in todo], chunksize=max(1, len(todo) // (jobs * 8)))
    else:
        fresh = [graph_record(graphs[i]) for i in todo]
    for i, rec in zip(todo, fresh):
        out[i] = rec
        if cache is not None:
            cache.put(keys[i], rec)
    return out  # type: ignore[return-value]


def _timed(fn: Callable[..., TheoremReport]) -> Callable[..., TheoremReport]:
    def run(*args, **kwargs):
        t0 = time.perf_counter()
        rep = fn(*args, **kwargs)
        rep.wall_time = time.perf_counter() - t0
        return rep
    run.__name__ = fn.__name__
    return run


def _from_records(records: list[dict], max_n: int) -> list[TheoremReport]:
    planarity = TheoremReport("planarity")
    by_minors = TheoremReport("fp-def-vs-minors")
    by_structure = TheoremReport("fp-structure")
    plus_edge = TheoremReport("fp-plus-edge")
    xi_rep = TheoremReport("no-xi-minor")
    m4_rep = TheoremReport("no-m4-minor")
    cert = TheoremReport("certifier")
    wheels = TheoremReport("wheels-and-prism")
    found = GraphSet()
    cases: Counter = Counter()
    for rec in records:
        g6 = rec["g6"]
        planarity.check(rec["planar_minor"] == rec["planar_fast"], f"{g6} minor={rec['planar_minor']} fast={rec['planar_fast']}")
        by_minors.check(rec["fp_def"] == rec["fp_minors"], f"{g6} def={rec['fp_def']} minors={rec['fp_minors']}")
        by_structure.check(rec["fp_structure"] == rec["fp_def"], f"{g6} structure={rec['fp_structure']} def={rec['fp_def']}")
        if rec["fp_minors"]:
            plus_edge.check(not rec["plus_edge_bad"], f"{g6} nonplanar after adding {rec.get('plus_edge_bad')}")
            if rec["three_connected"]:
                xi_rep.check(not rec["has_xi"], f"{g6} has a xi minor")
                m4_rep.check(not rec["has_m4"], f"{g6} has an M(4) minor")
            if rec["proper3"]:
                found.add(parse_graph6(g6))
        if "cert_cases" in rec:
            for name, count in rec["cert_cases"].items():
                cases[name] += count
                cert.instances += count
            for e in rec["cert_bad"]:
                cert.violations.append(f"{g6} pair {e[0]}-{e[1]} unverified certificate")
            for e in rec.get("fallback_pairs", []):
                cert.notes.append(f"fallback {g6} pair {e[0]}-{e[1]}")
    expected = GraphSet(wheel(k) for k in range(3, max_n))
    if max_n >= 6:
        expected.add(prism())
    wheels.instances = len(found)
    for g in found:
        if g not in expected:
            wheels.violations.append(f"unexpected {write_graph6(g)}")
    for g in expected:
        if g not in found:
            wheels.violations.append(f"missing {write_graph6(g)}")
    wheels.notes.append(f"expected wheels W3..W{max_n - 1}" + (" and the prism" if max_n >= 6 else ""))
    total = sum(cases.values())
    if total:
        recipe = total - cases.get("Fallback", 0)
        cert.notes.insert(0, "cases " + " ".join(f"{k}={v}" for k, v in sorted(cases.items())) +
                          f" recipe_fraction={recipe / total:.4f}")
        if recipe == 0:
            cert.violations.append("no certificate came from a case recipe")
    return [planarity, by_minors, by_structure, plus_edge, xi_rep, m4_rep, wheels, cert]


def _fp(g: Graph) -> bool:
    return is_free_planar_def(g).is_free_planar


def subdivision_prism_report() -> TheoremReport:
    rep = TheoremReport("subdivision-prism")
    g = prism()
    triangles = [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)]
    matching = [(0, 3), (1, 4), (2, 5)]
    for e in triangles:
        rep.check(not _fp(subdivide_edge(g, e)), f"triangle edge {e} subdivided stays free-planar")
    for r in range(len(matching) + 1):
        for subset in combinations(matching, r):
            h = g
            for e in subset:
                h = subdivide_edge(h, e)
            rep.check(_fp(h), f"matching edges {list(subset)} subdivided leave the class")
    return rep


def _subdivide_all(g: Graph, edges) -> Graph:
    for e in edges:
        g = subdivide_edge(g, e)
    return g


def subdivision_wheel_report(ks: Iterable[int] = range(3, 7)) -> TheoremReport:
    rep = TheoremReport("subdivision-wheel")
    for k in ks:
        g = wheel(k)
        rim = [(i, (i + 1) % k) for i in range(k)]
        if k >= 4:
            for i in range(k):
                rep.check(not _fp(subdivide_edge(g, (i, k))), f"W{k} spoke {i}-{k} subdivided stays free-planar")
        for r in range(k + 1):
            for subset in combinations(rim, r):
                rep.check(_fp(_subdivide_all(g, subset)), f"W{k} rim edges {list(subset)} subdivided leave the class")
    rep.notes.append("W3 spokes are rim edges for another hub, so the spoke check starts at W4")
    return rep


def subdivision_tetra_report() -> TheoremReport:
    rep = TheoremReport("subdivision-tetra")
    g = complete(4)
    target = k33_minus()
    for e, f in combinations(g.edges, 2):
        h = _subdivide_all(g, [e, f])
        if set(e) & set(f):
            rep.check(_fp(h), f"adjacent edges {e} {f} subdivided leave the class")
        else:
            rep.check(is_isomorphic(h, target), f"non-adjacent edges {e} {f} subdivided: not K3,3-")
    return rep


def balanced_splits(g: Graph, v: int) -> GraphSet:
    """Splits of ``v`` giving each half exactly half of its neighbours, none shared."""
    nbrs = g.neighbors(v)
    out = GraphSet()
    if len(nbrs) % 2:
        return out
    for left in combinations(nbrs, len(nbrs) // 2):
        out.add(split_vertex(g, SplitSpec(v, {u: "L" if u in left else "R" for u in nbrs})))
    return out


def kuratowski_free_report() -> TheoremReport:
    rep = TheoremReport("kuratowski-free-class")
    stages = free_forbidden_stages([complete(5), k33()])
    result = stages.result
    expected = GraphSet([k5_minus(), k33_minus()])
    rep.check(result == expected, f"operator gave {[write_graph6(g) for g in result]}")
    rep.notes.append(stages.summary())
    second = edge_deleted_set(result)
    rep.check(len(second) == 4, f"single-edge deletions of K5- and K3,3- give {len(second)} classes")
    rep.notes.append(f"single-edge deletions of the two obstructions: {len(second)} classes")
    k = k5_minus()
    splits = GraphSet()
    for v in range(k.n):
        if k.degree(v) == 4:
            splits = splits.union(balanced_splits(k, v))
    rep.notes.append(f"balanced splits of a degree-4 vertex of K5-: {len(splits)} classes")
    return rep


def two_edge_report() -> TheoremReport:
    rep = TheoremReport("two-edge-lemma")
    for name, g in (("K5", complete(5)), ("K3,3", k33())):
        for e in g.edges:
            h = delete_edge(g, e)
            for f in h.non_edges():
                if set(f) == set(e):
                    continue
                rep.check(is_planar_fast(add_edge(h, f)), f"{name} - {e} + {f} nonplanar")
        for e, f in combinations(g.edges, 2):
            rep.check(_fp(delete_edge(delete_edge(g, e), f)), f"{name} - {e} - {f} not free-planar")
    return rep


def random_antichain(rng: random.Random, pool: list[Graph], max_size: int = 3) -> GraphSet:
    picks = rng.sample(pool, rng.randint(1, max_size))
    return minimal_minors(picks)


def operator_report(max_n: int = 6, trials: int = OPERATOR_TRIALS, seed: int = OPERATOR_SEED) -> TheoremReport:
    """Operator output against definitional Free-class membership on random antichains."""
    rep = TheoremReport("operator")
    rng = random.Random(seed)
    pool = list(enumerate_up_to(5))
    hosts = list(enumerate_up_to(min(max_n, 6)))
    for t in range(trials):
        b = random_antichain(rng, pool)
        ff = free_forbidden(b)
        for g in hosts:
            rep.check(excludes_all(g, ff) == free_class_member(g, b),
                      f"trial {t} b={[write_graph6(h) for h in b]} host {write_graph6(g)}")
    rep.notes.append(f"{trials} antichains from seed {seed}, hosts on at most {min(max_n, 6)} vertices")
    return rep


def verify_theorems(config: RunConfig) -> list[TheoremReport]:
    """All theorem reports for connected graphs up to ``config.max_n`` vertices."""
    t0 = time.perf_counter()
    cache = VerdictCache(config.cache_dir)
    graphs = list(enumerate_up_to(config.max_n, connected_only=True))
    records = compute_records(graphs, config.jobs, cache)
    cache.flush()
    per_graph = _from_records(records, config.max_n)
    shared = (time.perf_counter() - t0) / len(per_graph)
    for rep in per_graph:
        rep.wall_time = shared
    fixed = [_timed(fn)() for fn in (subdivision_prism_report, subdivision_wheel_report,
                                     subdivision_tetra_report, kuratowski_free_report, two_edge_report)]
    fixed.append(_timed(operator_report)(config.max_n))
    by_id = {r.theorem: r for r in per_graph + fixed}
    return [by_id[t] for t in THEOREMS]
