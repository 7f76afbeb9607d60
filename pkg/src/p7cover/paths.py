"""Induced path search: P_t detection, rooted P4s, and shortest constrained paths.

The P_t search is a DFS over partial induced paths with bitset pruning: a path
may only grow at its tip, into vertices not adjacent to any earlier path
vertex.  Start vertices and extensions are tried in ascending id order, so the
first witness found is deterministic for a given graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import InputError, InvariantViolation, NoSolutionError
from .graph import Graph, Vertices, bits, iter_bits, mask_of


@dataclass(frozen=True)
class InducedPathWitness:
    """An induced path, listed end to end."""

    vertices: Vertices

    def __len__(self) -> int:
        return len(self.vertices)


def is_induced_path(g: Graph, vertices: Iterable[int]) -> bool:
    """True if the sequence is a path with edges exactly between consecutive entries."""
    seq = list(vertices)
    if len(set(seq)) != len(seq):
        return False
    for v in seq:
        if not 0 <= v < g.n:
            return False
    for i, u in enumerate(seq):
        for j in range(i + 1, len(seq)):
            adjacent = bool(g.adj[u] >> seq[j] & 1)
            if adjacent != (j == i + 1):
                return False
    return True


def find_induced_pt(g: Graph, t: int) -> InducedPathWitness | None:
    """First induced path on t vertices in DFS order, or None if g is P_t-free."""
    if t < 1:
        raise InputError(f"path order must be positive, got {t}")
    if t == 1:
        return InducedPathWitness((0,)) if g.n >= 1 else None
    adj = g.adj
    path = [0] * t

    def extend(depth: int, tip: int, blocked: int) -> bool:
        # blocked = path vertices plus neighbors of all non-tip path vertices
        candidates = adj[tip] & ~blocked
        if depth + 1 == t:
            if candidates:
                path[depth] = (candidates & -candidates).bit_length() - 1
                return True
            return False
        for u in iter_bits(candidates):
            path[depth] = u
            if extend(depth + 1, u, blocked | adj[tip] | 1 << u):
                return True
        return False

    for start in range(g.n):
        path[0] = start
        if extend(1, start, 1 << start):
            return InducedPathWitness(tuple(path))
    return None


def find_induced_p4_from(g: Graph, u: int, d: Iterable[int]) -> InducedPathWitness | None:
    """First induced P4 starting at u whose other three vertices lie in d."""
    g._check_vertex(u)
    dm = mask_of(d)
    if dm & ~g.full_mask:
        raise InputError(f"vertex set {bits(dm)} out of range for n={g.n}")
    if dm >> u & 1:
        raise InputError(f"start vertex {u} must lie outside the target set")
    adj = g.adj
    for d1 in iter_bits(adj[u] & dm):
        for d2 in iter_bits(adj[d1] & dm & ~adj[u] & ~(1 << u)):
            tail = adj[d2] & dm & ~adj[u] & ~adj[d1] & ~(1 << u) & ~(1 << d1)
            if tail:
                d3 = (tail & -tail).bit_length() - 1
                return InducedPathWitness((u, d1, d2, d3))
    return None


def shortest_path_through(g: Graph, u: int, x: int, interior: Iterable[int]) -> Vertices:
    """Shortest u-x path whose internal vertices all lie in ``interior``.

    Such a path is automatically induced, which the result is asserted to be.
    """
    g._check_vertex(u)
    g._check_vertex(x)
    im = mask_of(interior)
    if im & ~g.full_mask:
        raise InputError(f"interior {bits(im)} out of range for n={g.n}")
    if im >> u & 1 or im >> x & 1:
        raise InputError("path endpoints must lie outside the interior")
    if u == x:
        raise InputError("path endpoints must differ")
    adj = g.adj
    if adj[u] >> x & 1:
        return (u, x)
    # BFS from u over interior vertices, stopping as soon as x is reached.
    parent: dict[int, int] = {}
    frontier = adj[u] & im
    for v in iter_bits(frontier):
        parent[v] = u
    seen = frontier
    while frontier:
        if frontier & adj[x]:
            hits = frontier & adj[x]
            last = (hits & -hits).bit_length() - 1
            rev = [x, last]
            while rev[-1] != u:
                rev.append(parent[rev[-1]])
            seq = tuple(reversed(rev))
            if not is_induced_path(g, seq):
                raise InvariantViolation(f"shortest constrained path {seq} is not induced")
            return seq
        nxt = 0
        for v in iter_bits(frontier):
            fresh = adj[v] & im & ~seen
            for w in iter_bits(fresh):
                parent[w] = v
            nxt |= fresh
        seen |= nxt
        frontier = nxt
    raise NoSolutionError(f"no path from {u} to {x} through {bits(im)}")
