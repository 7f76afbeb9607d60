"""Undirected graphs on dense integer vertices, backed by bitmask adjacency rows.

Vertices are ``0..n-1``.  Every vertex subset that crosses the public API is a
sorted tuple of ints; internally most routines work on Python ints used as
bitsets (bit ``v`` set means vertex ``v`` is in the set), which keeps the
exhaustive searches elsewhere in the package fast enough to run at desk scale.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import InputError

Vertices = tuple[int, ...]


def mask_of(vertices: Iterable[int]) -> int:
    """Pack an iterable of vertex ids into a bitset."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits(mask: int) -> Vertices:
    """Unpack a bitset into a sorted tuple of vertex ids."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def lowest_bit(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph; ``adj[v]`` is the open neighborhood bitset."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise InputError(f"vertex count must be nonnegative, got {self.n}")
        if len(self.adj) != self.n:
            raise InputError(f"adjacency has {len(self.adj)} rows for {self.n} vertices")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise InputError(f"adjacency row of {v} mentions vertices >= {self.n}")
            if row >> v & 1:
                raise InputError(f"loop at vertex {v}")
        for v in range(self.n):
            for u in iter_bits(self.adj[v]):
                if not self.adj[u] >> v & 1:
                    raise InputError(f"asymmetric adjacency between {u} and {v}")

    @staticmethod
    def from_edges(edges: Iterable[tuple[int, int]], n: int | None = None) -> Graph:
        """Build from an iterable of (u, v) pairs; n defaults to max id + 1."""
        pairs = [(int(u), int(v)) for u, v in edges]
        for u, v in pairs:
            if u < 0 or v < 0:
                raise InputError(f"negative vertex in edge ({u}, {v})")
            if u == v:
                raise InputError(f"loop edge ({u}, {v})")
        if n is None:
            n = max((max(u, v) for u, v in pairs), default=-1) + 1
        rows = [0] * n
        for u, v in pairs:
            if u >= n or v >= n:
                raise InputError(f"edge ({u}, {v}) out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return Graph(n, tuple(rows))

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.adj[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, lexicographically sorted."""
        out = []
        for u in range(self.n):
            higher = self.adj[u] >> (u + 1) << (u + 1)
            for v in iter_bits(higher):
                out.append((u, v))
        return out

    def complement(self) -> Graph:
        full = self.full_mask
        return Graph(self.n, tuple((full & ~row) & ~(1 << v) for v, row in enumerate(self.adj)))

    def neighborhood_mask(self, mask: int) -> int:
        """Open neighborhood of a vertex set given and returned as a bitset."""
        nb = 0
        for v in iter_bits(mask):
            nb |= self.adj[v]
        return nb & ~mask

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise InputError(f"vertex {v} out of range for n={self.n}")


def neighborhood(g: Graph, x: Iterable[int], closed: bool = False) -> Vertices:
    """Open or closed neighborhood of a vertex set, as a sorted tuple."""
    xm = mask_of(x)
    if xm & ~g.full_mask:
        raise InputError(f"vertex set {bits(xm)} out of range for n={g.n}")
    nb = g.neighborhood_mask(xm)
    return bits(nb | xm) if closed else bits(nb)


def components_masks(g: Graph, removed_mask: int = 0) -> list[int]:
    """Connected components of g minus a removed set, as bitsets sorted by lowest vertex."""
    adj = g.adj
    rest = g.full_mask & ~removed_mask
    comps = []
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


def components(g: Graph, removed: Iterable[int] = ()) -> list[Vertices]:
    """Connected components of g minus ``removed``, sorted by minimum vertex."""
    rm = mask_of(removed)
    if rm & ~g.full_mask:
        raise InputError(f"removed set {bits(rm)} out of range for n={g.n}")
    return [bits(c) for c in components_masks(g, rm)]


def is_connected_mask(g: Graph, mask: int) -> bool:
    """True if the induced subgraph on the given bitset is connected (empty counts)."""
    if mask == 0:
        return True
    adj = g.adj
    comp = mask & -mask
    frontier = comp
    while frontier:
        nb = 0
        for v in iter_bits(frontier):
            nb |= adj[v]
        frontier = nb & mask & ~comp
        comp |= frontier
    return comp == mask


def is_complete_between(g: Graph, a: Iterable[int], b: Iterable[int]) -> bool:
    """True if every vertex of a is adjacent to every vertex of b (disjoint sets)."""
    am, bm = mask_of(a), mask_of(b)
    if (am | bm) & ~g.full_mask:
        raise InputError("vertex set out of range")
    if am & bm:
        raise InputError(f"sets overlap on {bits(am & bm)}")
    for v in iter_bits(am):
        if bm & ~g.adj[v]:
            return False
    return True


# ---------------------------------------------------------------------------
# Text formats: whitespace edge lists and graph6.
# ---------------------------------------------------------------------------

def from_edge_list(text: str, n: int | None = None) -> Graph:
    """Parse "u v" pairs, one per line; blank lines and '#' comments are ignored."""
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) != 2:
            raise InputError(f"line {lineno}: expected 'u v', got {raw!r}")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError as exc:
            raise InputError(f"line {lineno}: non-integer vertex in {raw!r}") from exc
        edges.append((u, v))
    return Graph.from_edges(edges, n=n)


def to_edge_list(g: Graph) -> str:
    """Emit one "u v" line per edge, u < v, lexicographically sorted."""
    return "".join(f"{u} {v}\n" for u, v in g.edges())


def _graph6_number(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, (n >> 12) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])
    raise InputError(f"graph6 emitter supports n <= 258047, got {n}")


def to_graph6(g: Graph) -> str:
    """Encode in graph6 (upper triangle, column-major, 6-bit groups offset by 63)."""
    out = bytearray(_graph6_number(g.n))
    group = 0
    filled = 0
    for v in range(1, g.n):
        col = g.adj[v]
        for u in range(v):
            group = group << 1 | (col >> u & 1)
            filled += 1
            if filled == 6:
                out.append(group + 63)
                group = 0
                filled = 0
    if filled:
        out.append((group << (6 - filled)) + 63)
    return out.decode("ascii")


def from_graph6(text: str) -> Graph:
    """Decode a graph6 line; tolerates the optional ">>graph6<<" header."""
    line = text.strip()
    if line.startswith(">>graph6<<"):
        line = line[len(">>graph6<<"):]
    if not line:
        raise InputError("empty graph6 input")
    try:
        raw = line.encode("ascii")
    except UnicodeEncodeError as exc:
        raise InputError(f"non-ascii graph6 input {line!r}") from exc
    data = [c - 63 for c in raw]
    if any(c < 0 or c > 63 for c in data):
        raise InputError(f"invalid graph6 byte in {line!r}")
    if data[0] == 63:
        if len(data) < 4:
            raise InputError("truncated graph6 vertex count")
        if data[1] == 63:
            raise InputError("graph6 inputs beyond 258047 vertices are not supported")
        n = data[1] << 12 | data[2] << 6 | data[3]
        body = data[4:]
    else:
        n = data[0]
        body = data[1:]
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) < need:
        raise InputError(f"graph6 body too short for n={n}")
    if len(body) > need:
        raise InputError(f"graph6 body too long for n={n}")
    rows = [0] * n
    idx = 0
    for v in range(1, n):
        for u in range(v):
            bit = body[idx // 6] >> (5 - idx % 6) & 1
            if bit:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            idx += 1
    return Graph(n, tuple(rows))
