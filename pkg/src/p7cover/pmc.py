"""Potential maximal cliques: recognition, exhaustive enumeration, and oracles.

A set Omega is a potential maximal clique (a maximal clique of some minimal
triangulation) exactly when

* no component of G - Omega sees all of Omega, and
* every non-edge inside Omega is covered by a component D with both endpoints
  in N(D).

The certificate records a covering component for each non-edge.  The
triangulation oracle cross-checks the combinatorial test on small graphs:
every minimal triangulation is the fill-in of some elimination ordering, so
scanning all orderings and keeping the inclusion-minimal fill-ins enumerates
minimal triangulations exactly.
"""

from __future__ import annotations

from itertools import permutations
from dataclasses import dataclass
from typing import Iterable

from .errors import CapacityError, InputError, InvariantViolation
from .graph import Graph, Vertices, bits, components_masks, iter_bits, mask_of
from .separators import SeparatorCertificate, full_components

ENUMERATION_MAX_N = 20
COMPLETION_ORACLE_MAX_N = 8


@dataclass(frozen=True)
class PmcCertificate:
    """A verified potential maximal clique with a covering component per non-edge."""

    omega: Vertices
    nonedge_cover: dict[tuple[int, int], Vertices]


def _pmc_failure_mask(g: Graph, om: int) -> str | None:
    """None if om is a potential maximal clique, else which condition broke."""
    adj = g.adj
    comp_nbs = []
    for comp in components_masks(g, om):
        nb = g.neighborhood_mask(comp)
        if nb == om:
            return "a component outside omega sees all of omega"
        comp_nbs.append(nb)
    cover = {}
    for u in iter_bits(om):
        mask = 0
        for i, nb in enumerate(comp_nbs):
            if nb >> u & 1:
                mask |= 1 << i
        cover[u] = mask
    for u in iter_bits(om):
        others = om & ~adj[u] & ~((1 << (u + 1)) - 1)
        for v in iter_bits(others):
            if not cover[u] & cover[v]:
                return f"non-edge ({u}, {v}) is covered by no component"
    return None


def pmc_failure(g: Graph, omega: Iterable[int]) -> str | None:
    """Human-readable reason omega is not a potential maximal clique, or None."""
    om = mask_of(omega)
    if om & ~g.full_mask:
        raise InputError(f"omega {bits(om)} out of range for n={g.n}")
    if om == 0:
        return "omega is empty"
    return _pmc_failure_mask(g, om)


def is_pmc(g: Graph, omega: Iterable[int]) -> PmcCertificate | None:
    """Certificate if omega is a potential maximal clique, else None."""
    om = mask_of(omega)
    if om & ~g.full_mask:
        raise InputError(f"omega {bits(om)} out of range for n={g.n}")
    if om == 0 or _pmc_failure_mask(g, om) is not None:
        return None
    comps = components_masks(g, om)
    comp_nbs = [g.neighborhood_mask(c) for c in comps]
    nonedge_cover: dict[tuple[int, int], Vertices] = {}
    for u in iter_bits(om):
        others = om & ~g.adj[u] & ~((1 << (u + 1)) - 1)
        for v in iter_bits(others):
            for comp, nb in zip(comps, comp_nbs):
                if nb >> u & 1 and nb >> v & 1:
                    nonedge_cover[(u, v)] = bits(comp)
                    break
    return PmcCertificate(bits(om), nonedge_cover)


def enumerate_pmcs(g: Graph) -> list[PmcCertificate]:
    """All potential maximal cliques, sorted by size then lexicographically."""
    if g.n > ENUMERATION_MAX_N:
        raise CapacityError(f"subset scan is gated at n <= {ENUMERATION_MAX_N}, got n={g.n}")
    hits = [om for om in range(1, 1 << g.n) if _pmc_failure_mask(g, om) is None]
    ordered = sorted(bits(om) for om in hits)
    ordered.sort(key=len)
    certs = [is_pmc(g, om) for om in ordered]
    if any(c is None for c in certs):
        raise InvariantViolation("certificate construction disagreed with the scan")
    return [c for c in certs if c is not None]


def nd_separator(g: Graph, omega_cert: PmcCertificate, d: Iterable[int]) -> SeparatorCertificate:
    """The minimal separator N(D) for a component D of G minus a potential maximal clique."""
    om = mask_of(omega_cert.omega)
    dm = mask_of(d)
    comps = components_masks(g, om)
    if dm not in comps:
        raise InputError(f"{bits(dm)} is not a component of the graph minus omega")
    sep = g.neighborhood_mask(dm)
    cert = full_components(g, bits(sep))
    if len(cert.full_components) < 2 or bits(dm) not in cert.full_components:
        raise InvariantViolation(
            f"N(D) = {bits(sep)} is not a minimal separator with {bits(dm)} full"
        )
    return cert


# ---------------------------------------------------------------------------
# Triangulation oracle (small n): minimal fill-ins over all elimination orders.
# ---------------------------------------------------------------------------

def is_chordal(g: Graph) -> bool:
    """Chordality by repeated simplicial-vertex elimination."""
    adj = list(g.adj)
    alive = g.full_mask
    for _ in range(g.n):
        if alive == 0:
            return True
        found = False
        for v in iter_bits(alive):
            nb = adj[v] & alive
            if all(nb & ~adj[u] & ~(1 << u) == 0 for u in iter_bits(nb)):
                alive &= ~(1 << v)
                found = True
                break
        if not found:
            return False
    return alive == 0


def _fill_of_ordering(g: Graph, order: tuple[int, ...]) -> frozenset[tuple[int, int]]:
    adj = list(g.adj)
    eliminated = 0
    fill: set[tuple[int, int]] = set()
    for v in order:
        nb = adj[v] & ~eliminated & ~(1 << v)
        for u in iter_bits(nb):
            missing = nb & ~adj[u] & ~(1 << u)
            for w in iter_bits(missing):
                if w > u:
                    fill.add((u, w))
                adj[u] |= 1 << w
                adj[w] |= 1 << u
        eliminated |= 1 << v
    return frozenset(fill)


def _fills_by_permutations(g: Graph) -> set[frozenset[tuple[int, int]]]:
    """Reference enumeration of elimination fill-ins; kept for cross-validation."""
    return {_fill_of_ordering(g, order) for order in permutations(range(g.n))}


def minimal_triangulations(g: Graph) -> list[frozenset[tuple[int, int]]]:
    """Fill-edge sets of all minimal triangulations; gated at 8 vertices.

    Walks elimination orderings as chains of eliminated subsets.  The partially
    eliminated graph depends only on the eliminated set, not on the order
    within it, and the edges a common suffix adds are likewise shared, so at
    each subset only inclusion-minimal accumulated fills need to be kept: the
    surviving complete fills are exactly the minimal triangulations.
    """
    if g.n > COMPLETION_ORACLE_MAX_N:
        raise CapacityError(
            f"triangulation oracle is gated at n <= {COMPLETION_ORACLE_MAX_N}, got n={g.n}"
        )
    if is_chordal(g):
        return [frozenset()]
    n = g.n
    pair_bit = {}
    for u in range(n):
        for v in range(u + 1, n):
            pair_bit[(u, v)] = 1 << len(pair_bit)

    def keep_minimal(fills: list[int]) -> list[int]:
        fills = sorted(set(fills), key=lambda f: f.bit_count())
        kept: list[int] = []
        for f in fills:
            if not any(k & f == k for k in kept):
                kept.append(f)
        return kept

    # states at the current level: eliminated mask -> (remaining adjacency, fills)
    level: dict[int, tuple[tuple[int, ...], list[int]]] = {0: (g.adj, [0])}
    for _ in range(n):
        nxt: dict[int, tuple[tuple[int, ...], list[int]]] = {}
        for elim, (adj, fills) in level.items():
            for v in iter_bits(g.full_mask & ~elim):
                nb = adj[v] & ~elim & ~(1 << v)
                rows = list(adj)
                added = 0
                for u in iter_bits(nb):
                    missing = nb & ~rows[u] & ~(1 << u)
                    for w in iter_bits(missing):
                        if w > u:
                            added |= pair_bit[(u, w)]
                        rows[u] |= 1 << w
                        rows[w] |= 1 << u
                elim2 = elim | 1 << v
                fills2 = [f | added for f in fills]
                if elim2 in nxt:
                    prev_rows, prev_fills = nxt[elim2]
                    nxt[elim2] = (prev_rows, keep_minimal(prev_fills + fills2))
                else:
                    nxt[elim2] = (tuple(rows), keep_minimal(fills2))
        level = nxt
    (_, final_fills), = level.values()
    bit_pair = {b: p for p, b in pair_bit.items()}
    out = []
    for f in keep_minimal(final_fills):
        out.append(frozenset(bit_pair[low] for low in _low_bits(f)))
    return sorted(out, key=lambda f: (len(f), sorted(f)))


def _low_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low
        mask ^= low


def _filled_graph(g: Graph, fill: frozenset[tuple[int, int]]) -> Graph:
    rows = list(g.adj)
    for u, v in fill:
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(g.n, tuple(rows))


def _maximal_cliques(g: Graph) -> set[Vertices]:
    out: set[Vertices] = set()
    for m in range(1, 1 << g.n):
        if _is_clique(g, m) and not any(
            _is_clique(g, m | 1 << v) for v in iter_bits(g.full_mask & ~m)
        ):
            out.add(bits(m))
    return out


def _is_clique(g: Graph, m: int) -> bool:
    for v in iter_bits(m):
        if m & ~g.adj[v] & ~(1 << v):
            return False
    return True


def pmcs_via_completions(g: Graph) -> set[Vertices]:
    """Union of maximal clique sets over all minimal triangulations (small n)."""
    out: set[Vertices] = set()
    for fill in minimal_triangulations(g):
        h = _filled_graph(g, fill)
        if not is_chordal(h):
            raise InvariantViolation("fill-in of an elimination ordering is not chordal")
        out |= _maximal_cliques(h)
    return out


def pmc_oracle_via_completions(g: Graph, omega: Iterable[int]) -> bool:
    """True if omega is a maximal clique of some minimal triangulation."""
    om = mask_of(omega)
    if om & ~g.full_mask:
        raise InputError(f"omega {bits(om)} out of range for n={g.n}")
    for fill in minimal_triangulations(g):
        h = _filled_graph(g, fill)
        if _is_clique(h, om) and not any(
            _is_clique(h, om | 1 << v) for v in iter_bits(h.full_mask & ~om)
        ):
            return True
    return False
