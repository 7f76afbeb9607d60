"""Minimal separators: recognition via full components and seed-and-expand enumeration.

A set S is a minimal separator exactly when the graph minus S has at least two
full components, i.e. components whose neighborhood is all of S.  Enumeration
starts from the seeds N(C) for C a component of G - N[v] (each such set is a
minimal separator: C is full, and so is the component containing v) and closes
under the expansion step that, for x in S, adds N(C) for every component C of
G - (S union N(x)).  This generates every minimal separator of the graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import CapacityError, InputError
from .graph import Graph, Vertices, bits, components_masks, iter_bits, mask_of

ENUMERATION_MAX_N = 512


@dataclass(frozen=True)
class SeparatorCertificate:
    """A vertex set with the components of its removal, full ones split out."""

    s: Vertices
    full_components: tuple[Vertices, ...]
    other_components: tuple[Vertices, ...]


def full_components(g: Graph, s: Iterable[int]) -> SeparatorCertificate:
    """Classify the components of g minus s into full (N(C) = s) and the rest."""
    sm = mask_of(s)
    if sm & ~g.full_mask:
        raise InputError(f"separator {bits(sm)} out of range for n={g.n}")
    full, other = [], []
    for comp in components_masks(g, sm):
        if g.neighborhood_mask(comp) == sm:
            full.append(comp)
        else:
            other.append(comp)
    return SeparatorCertificate(
        bits(sm),
        tuple(bits(c) for c in full),
        tuple(bits(c) for c in other),
    )


def is_minimal_separator(g: Graph, s: Iterable[int]) -> bool:
    """True when at least two components of g minus s see all of s."""
    sm = mask_of(s)
    if sm & ~g.full_mask:
        raise InputError(f"separator {bits(sm)} out of range for n={g.n}")
    count = 0
    for comp in components_masks(g, sm):
        if g.neighborhood_mask(comp) == sm:
            count += 1
            if count == 2:
                return True
    return False


def _minimal_separator_masks(g: Graph) -> set[int]:
    adj = g.adj
    found: set[int] = set()
    queue: list[int] = []

    def offer(sep: int) -> None:
        if sep not in found:
            found.add(sep)
            queue.append(sep)

    for v in range(g.n):
        for comp in components_masks(g, adj[v] | 1 << v):
            offer(g.neighborhood_mask(comp))

    while queue:
        sep = queue.pop()
        for x in iter_bits(sep):
            for comp in components_masks(g, sep | adj[x]):
                offer(g.neighborhood_mask(comp))
    return found


def enumerate_minimal_separators(g: Graph, oracle: bool = False) -> list[SeparatorCertificate]:
    """All minimal separators, sorted by size then lexicographically.

    With ``oracle=True`` a full subset scan is used instead of seed-and-expand;
    that route is gated at 12 vertices.
    """
    if oracle:
        if g.n > 12:
            raise CapacityError(f"subset-scan enumeration is gated at n <= 12, got n={g.n}")
        masks = {m for m in range(1 << g.n) if _is_min_sep_mask(g, m)}
    else:
        if g.n > ENUMERATION_MAX_N:
            raise CapacityError(
                f"seed-and-expand enumeration is gated at n <= {ENUMERATION_MAX_N}, got n={g.n}"
            )
        masks = {m for m in _minimal_separator_masks(g) if _is_min_sep_mask(g, m)}
    ordered = sorted(bits(m) for m in masks)
    ordered.sort(key=len)
    return [full_components(g, s) for s in ordered]


def _is_min_sep_mask(g: Graph, sm: int) -> bool:
    count = 0
    for comp in components_masks(g, sm):
        if g.neighborhood_mask(comp) == sm:
            count += 1
            if count == 2:
                return True
    return False
