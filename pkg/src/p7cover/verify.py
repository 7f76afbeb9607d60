"""Batch property checks over graph corpora.

Runs every certified routine against a stream of graphs and records anything
that fails independent re-validation: covers are re-checked for domination and
size from the adjacency alone, witnesses are re-checked as induced paths, and
enumeration routines are compared against brute-force recomputation on small
inputs.  A clean report means every certificate produced on the corpus stands
on its own.

The per-graph driver is `check_graph`; `verify_graphs` folds it over a corpus,
optionally fanning out to worker processes.  Corpus builders for exhaustive
small graphs and seeded random graphs live here as well so that the command
line and the test suite draw from the same instances.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import combinations
from typing import Iterable, Iterator

from .covering import (
    PMC_BOUND,
    SEPARATOR_BOUND,
    CoverOutcome,
    classify_types,
    complete_cross_check,
    cover_pmc_p7,
    cover_separator_p6_search,
    cover_separator_p7,
)
from .errors import InputError, InvariantViolation
from .graph import Graph, Vertices, components, is_connected_mask, mask_of, to_graph6
from .oracle import brute_minimal_separators, random_graph, random_ptfree
from .paths import find_induced_pt, is_induced_path
from .pmc import (
    COMPLETION_ORACLE_MAX_N,
    enumerate_pmcs,
    nd_separator,
    pmcs_via_completions,
)
from .separators import SeparatorCertificate, enumerate_minimal_separators

CONNECTED_LABELED_COUNTS = {1: 1, 2: 1, 3: 4, 4: 38, 5: 728, 6: 26704}

SEPARATOR_BUDGETS = {"singleton": 1, "R_a": 4, "R_bc": 5, "R_cb": 5, "R_cc": 8}

RANDOM_EDGE_PROBS = (0.25, 0.4, 0.55)


@dataclass(frozen=True)
class Violation:
    """One failed re-validation, keyed by the graph6 string of the instance."""

    graph6: str
    check: str
    detail: str


@dataclass(frozen=True)
class CheckConfig:
    """Which per-graph checks to run and the size gates for the expensive ones."""

    separator_covers: bool = True
    pmc_covers: bool = True
    classification: bool = True
    nd_check: bool = True
    p5_pairs: bool = False
    p6_search: bool = False
    oracle_separators_max_n: int = 0
    oracle_pmcs_max_n: int = 0
    pmc_max_n: int = 16


@dataclass
class VerifyReport:
    """Aggregated counters plus every violation found."""

    graphs: int = 0
    separators: int = 0
    pmcs: int = 0
    covers: int = 0
    witnesses: int = 0
    max_separator_cover: int = 0
    max_pmc_cover: int = 0
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def merge(self, other: VerifyReport) -> None:
        self.graphs += other.graphs
        self.separators += other.separators
        self.pmcs += other.pmcs
        self.covers += other.covers
        self.witnesses += other.witnesses
        self.max_separator_cover = max(self.max_separator_cover, other.max_separator_cover)
        self.max_pmc_cover = max(self.max_pmc_cover, other.max_pmc_cover)
        self.violations.extend(other.violations)

    def sort(self) -> None:
        self.violations.sort(key=lambda v: (v.graph6, v.check, v.detail))

    def to_dict(self) -> dict:
        return {
            "graphs": self.graphs,
            "separators": self.separators,
            "pmcs": self.pmcs,
            "covers": self.covers,
            "witnesses": self.witnesses,
            "max_separator_cover": self.max_separator_cover,
            "max_pmc_cover": self.max_pmc_cover,
            "ok": self.ok,
            "violations": [asdict(v) for v in self.violations],
        }


# ---------------------------------------------------------------------------
# Corpus builders.
# ---------------------------------------------------------------------------

def exhaustive_connected_graphs(n: int) -> Iterator[Graph]:
    """All connected labeled graphs on exactly n vertices, by edge-mask order."""
    if n < 1:
        raise InputError(f"need at least one vertex, got {n}")
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        adj = [0] * n
        for k, (u, v) in enumerate(pairs):
            if mask >> k & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
        g = Graph(n, tuple(adj))
        if is_connected_mask(g, g.full_mask):
            yield g


def random_corpus(
    samples: int,
    n_min: int,
    n_max: int,
    seed: int,
    t: int | None = None,
    probs: tuple[float, ...] = RANDOM_EDGE_PROBS,
) -> Iterator[Graph]:
    """Seeded stream of random graphs, n cycling over [n_min, n_max].

    With t set, each instance is repaired to be P_t-free; otherwise the raw
    Erdos-Renyi draws are returned.  Edge probabilities cycle over a small
    palette so the stream mixes sparse and dense instances.
    """
    if samples < 0 or n_min < 1 or n_min > n_max:
        raise InputError(f"bad corpus shape: samples={samples} n=[{n_min}, {n_max}]")
    span = n_max - n_min + 1
    for i in range(samples):
        n = n_min + i % span
        prob = probs[(i // span) % len(probs)]
        instance_seed = seed * 1000003 + i
        if t is None:
            yield random_graph(n, prob, instance_seed)
        else:
            yield random_ptfree(n, t, prob, instance_seed)


# ---------------------------------------------------------------------------
# Per-graph checks.
# ---------------------------------------------------------------------------

def _recheck_cover(
    g: Graph, targets: Iterable[int], out: CoverOutcome, bound: int
) -> list[str]:
    """Re-validate a cover outcome from the adjacency alone."""
    problems: list[str] = []
    cover = out.cover
    assert cover is not None
    if len(cover) > bound:
        problems.append(f"cover size {len(cover)} exceeds {bound}")
    cm = mask_of(cover)
    targets = sorted(set(targets))
    for x in targets:
        if not (cm >> x & 1 or g.adj[x] & cm):
            problems.append(f"target {x} undominated by {cover}")
    doms = out.dominators or {}
    if sorted(doms) != targets:
        problems.append(f"dominator map keys {sorted(doms)} != targets {targets}")
    for x, d in doms.items():
        if d not in cover or not (d == x or g.adj[x] >> d & 1):
            problems.append(f"dominator {d} of {x} is invalid")
    return problems


def _recheck_witness(g: Graph, out: CoverOutcome, p7_free: bool) -> list[str]:
    assert out.witness is not None
    w = out.witness.vertices
    problems: list[str] = []
    if len(w) != 7 or not is_induced_path(g, w):
        problems.append(f"witness {w} is not an induced P7")
    elif p7_free:
        problems.append(f"witness {w} returned on a P7-free graph")
    return problems


def _separator_checks(
    g: Graph,
    certs: list[SeparatorCertificate],
    p7_free: bool,
    rep: VerifyReport,
    flag,
) -> None:
    for cert in certs:
        label = f"s={cert.s}"
        try:
            out = cover_separator_p7(g, cert)
        except InvariantViolation as exc:
            flag("separator-cover", f"{label}: {exc}")
            continue
        if out.witness is not None:
            rep.witnesses += 1
            for p in _recheck_witness(g, out, p7_free):
                flag("separator-witness", f"{label}: {p}")
            continue
        rep.covers += 1
        rep.max_separator_cover = max(rep.max_separator_cover, len(out.cover))
        for p in _recheck_cover(g, cert.s, out, SEPARATOR_BOUND):
            flag("separator-cover", f"{label}: {p}")
        pieces = 0
        for key, part in out.breakdown.items():
            limit = SEPARATOR_BUDGETS.get(key)
            if limit is None:
                flag("separator-cover", f"{label}: unknown breakdown key {key!r}")
            elif len(part) > limit:
                flag("separator-cover", f"{label}: |{key}|={len(part)} exceeds {limit}")
            pieces |= mask_of(part)
        if pieces != mask_of(out.cover):
            flag("separator-cover", f"{label}: breakdown does not assemble the cover")


def _classification_checks(
    g: Graph, certs: list[SeparatorCertificate], flag
) -> None:
    for cert in certs:
        for side in (1, 2):
            if len(cert.full_components[side - 1]) < 2:
                continue
            label = f"s={cert.s} side={side}"
            try:
                tc = classify_types(g, cert, side)
            except InvariantViolation as exc:
                flag("classification", f"{label}: {exc}")
                continue
            cs = [x for x in cert.s if tc.labels[x] == "c"]
            for i, x in enumerate(cs):
                for y in cs[i + 1:]:
                    try:
                        ok = complete_cross_check(g, cert, side, x, y)
                    except InvariantViolation as exc:
                        flag("cross-check", f"{label} pair=({x},{y}): {exc}")
                        continue
                    if not ok:
                        flag("cross-check", f"{label} pair=({x},{y}): not complete")


def _p5_pair_checks(g: Graph, certs: list[SeparatorCertificate], flag) -> None:
    for cert in certs:
        sm = mask_of(cert.s)
        fulls = cert.full_components
        for i, ca in enumerate(fulls):
            for cb in fulls[i + 1:]:
                for a in ca:
                    for b in cb:
                        if sm & ~(g.adj[a] | g.adj[b]):
                            flag(
                                "p5-pairs",
                                f"s={cert.s}: pair ({a}, {b}) misses part of the separator",
                            )


def _p6_search_checks(g: Graph, certs: list[SeparatorCertificate], flag) -> None:
    for cert in certs:
        found = cover_separator_p6_search(g, cert)
        if found is None:
            flag("p6-search", f"s={cert.s}: no two-sided cover of size <= 3 + 3")
            continue
        aprime, bprime = found
        if len(aprime) > 3 or len(bprime) > 3:
            flag("p6-search", f"s={cert.s}: sides {aprime}, {bprime} break the size cap")
        nb = g.neighborhood_mask(mask_of(aprime)) | g.neighborhood_mask(mask_of(bprime))
        if mask_of(cert.s) & ~nb:
            flag("p6-search", f"s={cert.s}: ({aprime}, {bprime}) does not cover")


def _pmc_checks(
    g: Graph,
    certs: list[SeparatorCertificate],
    config: CheckConfig,
    p7_free: bool,
    rep: VerifyReport,
    flag,
) -> list[Vertices]:
    pcs = enumerate_pmcs(g)
    rep.pmcs += len(pcs)
    omegas = [set(pc.omega) for pc in pcs]
    for cert in certs:
        if not any(set(cert.s) <= om for om in omegas):
            flag("pmc-contains-separator", f"s={cert.s} lies inside no enumerated pmc")
    for pc in pcs:
        label = f"omega={pc.omega}"
        if config.nd_check:
            for d in components(g, pc.omega):
                try:
                    nd_separator(g, pc, d)
                except (InvariantViolation, InputError) as exc:
                    flag("nd-separator", f"{label} d={d}: {exc}")
        if not config.pmc_covers:
            continue
        try:
            out = cover_pmc_p7(g, pc)
        except InvariantViolation as exc:
            flag("pmc-cover", f"{label}: {exc}")
            continue
        if out.witness is not None:
            rep.witnesses += 1
            for p in _recheck_witness(g, out, p7_free):
                flag("pmc-witness", f"{label}: {p}")
            continue
        rep.covers += 1
        rep.max_pmc_cover = max(rep.max_pmc_cover, len(out.cover))
        for p in _recheck_cover(g, pc.omega, out, PMC_BOUND):
            flag("pmc-cover", f"{label}: {p}")
        plan_omega = out.breakdown.get("omega_prime", ())
        plan_comps = out.breakdown.get("components", ())
        if len(plan_omega) > 2 or len(plan_comps) > 3:
            flag("pmc-cover", f"{label}: plan shape {plan_omega} + {plan_comps} breaks 2 + 3")
        assembled = mask_of(plan_omega)
        for sub in out.breakdown.get("component_covers", ()):
            assembled |= mask_of(sub)
        if assembled != mask_of(out.cover):
            flag("pmc-cover", f"{label}: breakdown does not assemble the cover")
    return [pc.omega for pc in pcs]


def check_graph(
    g: Graph, config: CheckConfig = CheckConfig(), report: VerifyReport | None = None
) -> VerifyReport:
    """Run the configured property checks on one graph, accumulating into report."""
    rep = report if report is not None else VerifyReport()
    g6 = to_graph6(g)
    rep.graphs += 1

    def flag(check: str, detail: str) -> None:
        rep.violations.append(Violation(g6, check, detail))

    p7_free = find_induced_pt(g, 7) is None
    certs = enumerate_minimal_separators(g)
    rep.separators += len(certs)

    if config.separator_covers:
        _separator_checks(g, certs, p7_free, rep, flag)
    if config.classification:
        _classification_checks(g, certs, flag)
    if config.p5_pairs and find_induced_pt(g, 5) is None:
        _p5_pair_checks(g, certs, flag)
    if config.p6_search and find_induced_pt(g, 6) is None:
        _p6_search_checks(g, certs, flag)

    enumerated: list[Vertices] | None = None
    if (config.pmc_covers or config.nd_check) and g.n <= config.pmc_max_n:
        enumerated = _pmc_checks(g, certs, config, p7_free, rep, flag)

    if g.n <= config.oracle_separators_max_n:
        fast = {cert.s for cert in certs}
        slow = set(brute_minimal_separators(g))
        if fast != slow:
            flag(
                "oracle-separators",
                f"enumeration {sorted(fast)} != brute force {sorted(slow)}",
            )
    if g.n <= min(config.oracle_pmcs_max_n, COMPLETION_ORACLE_MAX_N):
        if enumerated is None:
            enumerated = [pc.omega for pc in enumerate_pmcs(g)]
        via = pmcs_via_completions(g)
        if set(enumerated) != via:
            flag(
                "oracle-pmcs",
                f"pmc1/pmc2 scan {sorted(enumerated)} != completions {sorted(via)}",
            )
    return rep


# ---------------------------------------------------------------------------
# Corpus driver.
# ---------------------------------------------------------------------------

def _check_graph6(payload: tuple[str, CheckConfig]) -> VerifyReport:
    from .graph import from_graph6

    g6, config = payload
    return check_graph(from_graph6(g6), config)


def verify_graphs(
    graphs: Iterable[Graph], config: CheckConfig = CheckConfig(), workers: int | None = None
) -> VerifyReport:
    """Fold check_graph over a corpus; the report is independent of worker order."""
    if workers is None:
        workers = int(os.environ.get("P7COVER_WORKERS", "1"))
    rep = VerifyReport()
    if workers <= 1:
        for g in graphs:
            check_graph(g, config, rep)
    else:
        payloads = ((to_graph6(g), config) for g in graphs)
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for sub in pool.map(_check_graph6, payloads, chunksize=16):
                rep.merge(sub)
    rep.sort()
    return rep
