"""Maximal strong modules of an induced subgraph, with the quotient they define.

A module of the induced subgraph on ``host`` is a subset whose members all see
the same vertices outside the subset (within the host).  A strong module
overlaps no other module, so the maximal strong modules of a host with at
least two vertices form a partition.  The classic case split computes it:

* host disconnected: the parts are the connected components (quotient edgeless),
* complement of host disconnected: the parts are the co-components (quotient
  complete),
* both connected: the parts are the maximal proper modules, each obtained as a
  union of closures of vertex pairs (quotient neither complete nor edgeless).

The closure of a pair {u, v} grows the set by every outside vertex adjacent to
some but not all of it; every module containing the pair must contain those
splitters, so the closure is the smallest module containing the pair.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import InputError, InvariantViolation
from .graph import Graph, Vertices, bits, iter_bits, mask_of

KIND_SINGLETON = "singleton"
KIND_INDEPENDENT = "independent"
KIND_CLIQUE = "clique"
KIND_PRIME = "prime"


@dataclass(frozen=True)
class ModularPartition:
    """Partition of a host set into maximal strong modules plus its quotient graph.

    ``parts`` is sorted by minimum vertex; ``quotient`` has one vertex per part,
    in the same order.
    """

    host: Vertices
    parts: tuple[Vertices, ...]
    quotient: Graph
    kind: str


def is_module(g: Graph, host: Iterable[int], m: Iterable[int]) -> bool:
    """True if all members of m have identical neighborhoods in host outside m."""
    hm = mask_of(host)
    mm = mask_of(m)
    if hm & ~g.full_mask:
        raise InputError(f"host {bits(hm)} out of range for n={g.n}")
    if mm & ~hm:
        raise InputError(f"candidate module {bits(mm)} not contained in host {bits(hm)}")
    outside = hm & ~mm
    seen = None
    for v in iter_bits(mm):
        ext = g.adj[v] & outside
        if seen is None:
            seen = ext
        elif ext != seen:
            return False
    return True


def _smallest_module_mask(g: Graph, host_mask: int, seed_mask: int) -> int:
    """Closure of seed_mask under outside splitters, within host_mask."""
    m = seed_mask
    while True:
        grown = m
        for s in iter_bits(host_mask & ~m):
            inside = g.adj[s] & m
            if inside and inside != m:
                grown |= 1 << s
        if grown == m:
            return m
        m = grown


def _components_within(g: Graph, host_mask: int) -> list[int]:
    comps = []
    rest = host_mask
    adj = g.adj
    while rest:
        comp = rest & -rest
        frontier = comp
        while frontier:
            nb = 0
            for v in iter_bits(frontier):
                nb |= adj[v]
            frontier = nb & rest & ~comp
            comp |= frontier
        comps.append(comp)
        rest &= ~comp
    return comps


def modular_partition(g: Graph, host: Iterable[int]) -> ModularPartition:
    """Maximal strong modules of the induced subgraph on host, plus the quotient."""
    hm = mask_of(host)
    if hm == 0:
        raise InputError("host must be nonempty")
    if hm & ~g.full_mask:
        raise InputError(f"host {bits(hm)} out of range for n={g.n}")
    host_t = bits(hm)
    if len(host_t) == 1:
        quotient = Graph(1, (0,))
        return ModularPartition(host_t, (host_t,), quotient, KIND_SINGLETON)

    comps = _components_within(g, hm)
    if len(comps) > 1:
        part_masks, kind = comps, KIND_INDEPENDENT
    else:
        co = g.complement()
        co_comps = _components_within(co, hm)
        if len(co_comps) > 1:
            part_masks, kind = co_comps, KIND_CLIQUE
        else:
            part_masks, kind = _prime_parts(g, hm), KIND_PRIME

    part_masks.sort(key=lambda m: m & -m)
    parts = tuple(bits(m) for m in part_masks)
    quotient = _quotient_graph(g, part_masks)
    _check_kind(quotient, kind)
    return ModularPartition(host_t, parts, quotient, kind)


def _prime_parts(g: Graph, hm: int) -> list[int]:
    """Maximal proper modules of a host that is connected with connected complement.

    In that case maximal proper modules cannot overlap (an overlapping pair
    would union to the host and split it into two modules, forcing the host or
    its complement to be disconnected), so the maximal proper module containing
    a vertex is the union of all proper pair closures through it.
    """
    verts = bits(hm)
    closure: dict[tuple[int, int], int] = {}
    for i, u in enumerate(verts):
        for v in verts[i + 1:]:
            closure[(u, v)] = _smallest_module_mask(g, hm, 1 << u | 1 << v)
    assigned = 0
    parts = []
    for u in verts:
        if assigned >> u & 1:
            continue
        m = 1 << u
        for v in verts:
            if v == u:
                continue
            c = closure[(min(u, v), max(u, v))]
            if c != hm:
                m |= c
        if m == hm:
            raise InvariantViolation("maximal proper modules overlap in prime host")
        parts.append(m)
        assigned |= m
    return parts


def _quotient_graph(g: Graph, part_masks: list[int]) -> Graph:
    reps = [(m & -m).bit_length() - 1 for m in part_masks]
    k = len(part_masks)
    rows = [0] * k
    for i in range(k):
        for j in range(i + 1, k):
            if g.adj[reps[i]] & part_masks[j]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph(k, tuple(rows))


def _check_kind(quotient: Graph, kind: str) -> None:
    k = quotient.n
    edgeless = all(row == 0 for row in quotient.adj)
    complete = all(row == quotient.full_mask & ~(1 << v) for v, row in enumerate(quotient.adj))
    ok = {
        KIND_INDEPENDENT: edgeless and k >= 2,
        KIND_CLIQUE: complete and k >= 2,
        KIND_PRIME: not edgeless and not complete,
        KIND_SINGLETON: k == 1,
    }[kind]
    if not ok:
        raise InvariantViolation(f"quotient shape does not match kind {kind!r}")


def pick_adjacent_module_reps(mp: ModularPartition) -> tuple[int, int]:
    """Minimum-id representatives of the lexicographically first adjacent part pair."""
    if mp.kind in (KIND_SINGLETON, KIND_INDEPENDENT):
        raise InputError(f"quotient of kind {mp.kind!r} has no adjacent part pair")
    for i in range(mp.quotient.n):
        row = mp.quotient.adj[i] >> (i + 1) << (i + 1)
        if row:
            j = (row & -row).bit_length() - 1
            return mp.parts[i][0], mp.parts[j][0]
    raise InputError("quotient has no edge")
