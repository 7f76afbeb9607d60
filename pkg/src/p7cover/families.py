"""Two parametric graph families showing the covering bounds need many vertices.

Both put a separator S = {s^1..s^n} between two cliques A1 and A2 of size n,
with s^j attached exactly to a1^j and a2^j.  Variant 1 keeps S independent:
the graph is P8-free, every vertex closed-dominates exactly one S vertex, so
dominating S takes n vertices.  Variant 2 additionally turns S into a clique:
the graph becomes P7-free, and dominating S from outside S still takes n
vertices (one vertex of S itself suffices, which is why covers of minimal
separators must be allowed to use the separator).

Vertex numbering: s^j = j-1, a1^j = n+j-1, a2^j = 2n+j-1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError
from .graph import Graph, Vertices


@dataclass(frozen=True)
class FamilyInstance:
    """A built family member with its named parts."""

    graph: Graph
    s: Vertices
    a1: Vertices
    a2: Vertices
    labels: dict[int, str]
    variant: int
    n: int


def build_example(variant: int, n: int) -> FamilyInstance:
    """Instance of the chosen variant with parameter n >= 1."""
    if variant not in (1, 2):
        raise InputError(f"variant must be 1 or 2, got {variant}")
    if n < 1:
        raise InputError(f"family parameter must be positive, got {n}")
    s = tuple(range(n))
    a1 = tuple(range(n, 2 * n))
    a2 = tuple(range(2 * n, 3 * n))
    edges = []
    for side in (a1, a2):
        edges.extend((side[i], side[j]) for i in range(n) for j in range(i + 1, n))
    for j in range(n):
        edges.append((s[j], a1[j]))
        edges.append((s[j], a2[j]))
    if variant == 2:
        edges.extend((s[i], s[j]) for i in range(n) for j in range(i + 1, n))
    graph = Graph.from_edges(edges, n=3 * n)
    labels = {}
    for j in range(n):
        labels[s[j]] = f"s^{j + 1}"
        labels[a1[j]] = f"a_1^{j + 1}"
        labels[a2[j]] = f"a_2^{j + 1}"
    return FamilyInstance(graph, s, a1, a2, labels, variant, n)
