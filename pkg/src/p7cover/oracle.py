"""Brute-force references and random instance generation.

Everything here is deliberately naive: subset scans and branch-and-bound over
explicit candidates.  These routines exist to validate the clever parts of the
package at small scale, so they avoid sharing any machinery with them beyond
the graph type itself.
"""

from __future__ import annotations

import os
import random
from typing import Iterable

from .errors import CapacityError, InputError, NoSolutionError
from .graph import Graph, Vertices, bits, components_masks, iter_bits, mask_of
from .paths import find_induced_pt

DOMINATION_POOL_MAX = int(os.environ.get("P7COVER_DOMINATION_POOL_MAX", "24"))
BRUTE_SUBSET_MAX_N = 12


def min_dominating_set_of(g: Graph, target: Iterable[int], pool: Iterable[int]) -> Vertices:
    """A minimum subset of pool whose closed neighborhood contains target.

    Exhaustive branch and bound on the lowest undominated target vertex;
    gated by pool size (default 24, env P7COVER_DOMINATION_POOL_MAX).
    """
    tm = mask_of(target)
    pm = mask_of(pool)
    if (tm | pm) & ~g.full_mask:
        raise InputError("target or pool out of range")
    if pm.bit_count() > DOMINATION_POOL_MAX:
        raise CapacityError(
            f"dominating-set search is gated at pool size {DOMINATION_POOL_MAX}, "
            f"got {pm.bit_count()}"
        )
    closed = [g.adj[v] | 1 << v for v in range(g.n)]
    reach = 0
    for v in iter_bits(pm):
        reach |= closed[v]
    if tm & ~reach:
        raise NoSolutionError(f"target vertices {bits(tm & ~reach)} are not dominable from pool")

    pool_bits = bits(pm)

    def search(uncovered: int, budget: int) -> Vertices | None:
        if not uncovered:
            return ()
        if budget == 0:
            return None
        t = (uncovered & -uncovered).bit_length() - 1
        for v in pool_bits:
            if not closed[v] >> t & 1:
                continue
            rest = search(uncovered & ~closed[v], budget - 1)
            if rest is not None:
                return (v,) + rest
        return None

    for k in range(pm.bit_count() + 1):
        found = search(tm, k)
        if found is not None:
            return tuple(sorted(found))
    raise NoSolutionError("unreachable: reachability check passed but search failed")


def brute_minimal_separators(g: Graph) -> list[Vertices]:
    """All minimal separators by scanning every subset; gated at 12 vertices."""
    if g.n > BRUTE_SUBSET_MAX_N:
        raise CapacityError(f"subset scan is gated at n <= {BRUTE_SUBSET_MAX_N}, got n={g.n}")
    out = []
    for sm in range(1 << g.n):
        count = 0
        for comp in components_masks(g, sm):
            if g.neighborhood_mask(comp) == sm:
                count += 1
                if count == 2:
                    out.append(bits(sm))
                    break
    ordered = sorted(out)
    ordered.sort(key=len)
    return ordered


def brute_modules(g: Graph, host: Iterable[int]) -> list[Vertices]:
    """All nonempty modules of the induced subgraph on host; gated at 12 vertices."""
    hm = mask_of(host)
    if hm & ~g.full_mask:
        raise InputError("host out of range")
    hv = bits(hm)
    if len(hv) > BRUTE_SUBSET_MAX_N:
        raise CapacityError(f"subset scan is gated at |host| <= {BRUTE_SUBSET_MAX_N}")
    out = []
    for pick in range(1, 1 << len(hv)):
        mm = 0
        for i in iter_bits(pick):
            mm |= 1 << hv[i]
        outside = hm & ~mm
        ext = None
        ok = True
        for v in iter_bits(mm):
            e = g.adj[v] & outside
            if ext is None:
                ext = e
            elif e != ext:
                ok = False
                break
        if ok:
            out.append(bits(mm))
    ordered = sorted(out)
    ordered.sort(key=len)
    return ordered


def random_graph(n: int, edge_prob: float, seed: int) -> Graph:
    """Erdos-Renyi style draw with a dedicated generator, stable across runs."""
    if n < 0:
        raise InputError(f"vertex count must be nonnegative, got {n}")
    if not 0.0 <= edge_prob <= 1.0:
        raise InputError(f"edge probability must be in [0, 1], got {edge_prob}")
    rng = random.Random(seed)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < edge_prob:
                edges.append((u, v))
    return Graph.from_edges(edges, n=n)


def random_ptfree(
    n: int,
    t: int,
    edge_prob: float,
    seed: int,
    max_repairs: int = 400,
    max_attempts: int = 16,
) -> Graph:
    """Seeded random P_t-free graph: draw G(n, p), then repair induced P_t's away.

    Repairs alternate between adding a chord of the found path and deleting one
    of its edges, both chosen by the generator.  Each attempt gets a bounded
    number of repairs before a fresh sub-seed is tried.
    """
    if t < 4:
        raise InputError(f"path order must be at least 4, got {t}")
    for attempt in range(max_attempts):
        stream = seed * 1000003 + attempt * 2
        rng = random.Random(stream + 1)
        g = random_graph(n, edge_prob, stream)
        rows = list(g.adj)
        for step in range(max_repairs):
            witness = find_induced_pt(Graph(n, tuple(rows)), t)
            if witness is None:
                return Graph(n, tuple(rows))
            path = witness.vertices
            if step % 2 == 0:
                pairs = [
                    (path[i], path[j])
                    for i in range(len(path))
                    for j in range(i + 2, len(path))
                ]
                u, v = rng.choice(pairs)
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            else:
                u, v = rng.choice(list(zip(path, path[1:])))
                rows[u] &= ~(1 << v)
                rows[v] &= ~(1 << u)
    raise CapacityError(
        f"could not reach a P{t}-free graph in {max_attempts} attempts "
        f"of {max_repairs} repairs (n={n}, p={edge_prob}, seed={seed})"
    )
