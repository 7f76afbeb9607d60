"""Certified neighborhood covers for minimal separators and potential maximal cliques.

Each cover routine either returns a small set whose closed neighborhood
contains the target (with an explicit dominator per target vertex), or an
induced path witnessing that the graph was outside the promised class.  The
witness branches mirror the contradiction arguments of the underlying proofs,
so on arbitrary input graphs every returned path is a genuine induced path;
a failure to validate marks a bug and raises, it is never returned.

For a minimal separator S with full components A1 and A2 the P7-free cover is
assembled from four pieces: the representatives of two adjacent maximal strong
modules on each side dominate every vertex adjacent to one of them (R_a); for
vertices with an induced P4 into one side and module-shaped neighborhood on
the other, a minimal-neighborhood vertex plus its P4 and one cross neighbor
dominate the whole class (R_bc, R_cb); vertices module-shaped on both sides
are handled through butterfly pairs and a bi-ranking argument (R_cc).  The
budgets are 4 + 5 + 5 + 8 = 22.  A potential maximal clique reduces to at
most two vertices plus at most three component separators: 2 + 3 * 22 = 68.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable, Sequence

from .errors import InputError, InvariantViolation
from .graph import Graph, Vertices, bits, components_masks, iter_bits, mask_of
from .modular import KIND_CLIQUE, ModularPartition, modular_partition, pick_adjacent_module_reps
from .paths import InducedPathWitness, find_induced_p4_from, is_induced_path, shortest_path_through
from .pmc import PmcCertificate, is_pmc, nd_separator
from .separators import SeparatorCertificate, full_components

SEPARATOR_BOUND = 22
PMC_BOUND = 68


@dataclass(frozen=True)
class TypeClassification:
    """Per-vertex labels of a separator against one full component.

    Label 'a': adjacent to a representative p or q.  Label 'b': not 'a', but
    has an induced P4 leading into the component.  Label 'c': neither; the
    component quotient is then a clique and the vertex's neighborhood inside
    the component is a union of maximal strong modules.
    """

    side: int
    labels: dict[int, str]
    p: int
    q: int


@dataclass(frozen=True)
class Butterfly:
    """A pair incomparable in both side orders, with one witness per difference set."""

    x: int
    y: int
    u1x: int
    u1y: int
    u2x: int
    u2y: int


@dataclass(frozen=True)
class CoverOutcome:
    """Either a validated cover with dominators, or an induced-path witness."""

    cover: Vertices | None
    dominators: dict[int, int] | None
    breakdown: dict[str, tuple]
    witness: InducedPathWitness | None
    bound: int

    @property
    def is_cover(self) -> bool:
        return self.cover is not None


@dataclass(frozen=True)
class PmcCoverPlan:
    """At most two clique vertices plus at most three covering components."""

    omega_prime: Vertices
    components: tuple[Vertices, ...]


def _require_separator_cert(g: Graph, cert: SeparatorCertificate) -> None:
    fresh = full_components(g, cert.s)
    if fresh != cert:
        raise InputError(f"stale or malformed separator certificate for s={cert.s}")
    if len(cert.full_components) < 2:
        raise InputError(f"{cert.s} is not a minimal separator (fewer than two full components)")


def _cover_outcome(
    g: Graph,
    targets: Iterable[int],
    cover: Iterable[int],
    breakdown: dict[str, tuple],
    bound: int,
) -> CoverOutcome:
    cov = bits(mask_of(cover))
    if len(cov) > bound:
        raise InvariantViolation(f"cover {cov} exceeds the bound {bound}")
    dominators: dict[int, int] = {}
    for t in sorted(set(targets)):
        dom = next((c for c in cov if c == t or g.adj[t] >> c & 1), None)
        if dom is None:
            raise InvariantViolation(f"target {t} is not dominated by cover {cov}")
        dominators[t] = dom
    return CoverOutcome(cov, dominators, breakdown, None, bound)


def _witness_outcome(g: Graph, seq: Sequence[int], length: int, bound: int) -> CoverOutcome:
    seq = tuple(seq)
    if len(seq) != length or not is_induced_path(g, seq):
        raise InvariantViolation(f"claimed witness {seq} is not an induced P{length}")
    return CoverOutcome(None, None, {}, InducedPathWitness(seq), bound)


# ---------------------------------------------------------------------------
# P5-free and P6-free covers.
# ---------------------------------------------------------------------------

def cover_separator_p5(g: Graph, cert: SeparatorCertificate) -> CoverOutcome:
    """Cover S by {min A1, min A2}, or return an induced P5 through an uncovered vertex."""
    _require_separator_cert(g, cert)
    a1, a2 = cert.full_components[0], cert.full_components[1]
    a, b = a1[0], a2[0]
    sm = mask_of(cert.s)
    uncovered = sm & ~g.adj[a] & ~g.adj[b]
    if not uncovered:
        return _cover_outcome(g, cert.s, (a, b), {"a": (a,), "b": (b,)}, 2)
    s = (uncovered & -uncovered).bit_length() - 1
    into_a = shortest_path_through(g, s, a, _without(a1, a))
    into_b = shortest_path_through(g, s, b, _without(a2, b))
    seq = tuple(reversed(into_a)) + into_b[1:]
    return _witness_outcome(g, seq[:5], 5, 2)


def _without(vs: Vertices, drop: int) -> Vertices:
    return tuple(v for v in vs if v != drop)


def cover_separator_p6_search(
    g: Graph, cert: SeparatorCertificate
) -> tuple[Vertices, Vertices] | None:
    """Smallest (then lexicographic) A' in A1, B' in A2 of size <= 3 covering S, or None."""
    _require_separator_cert(g, cert)
    a1, a2 = cert.full_components[0], cert.full_components[1]
    sm = mask_of(cert.s)
    for total in range(2, 7):
        for i in range(max(1, total - 3), min(3, total - 1) + 1):
            j = total - i
            if j < 1 or j > 3 or i > len(a1) or j > len(a2):
                continue
            for aprime in combinations(a1, i):
                na = g.neighborhood_mask(mask_of(aprime))
                for bprime in combinations(a2, j):
                    nb = g.neighborhood_mask(mask_of(bprime))
                    if sm & ~(na | nb) == 0:
                        return (aprime, bprime)
    return None


# ---------------------------------------------------------------------------
# Type classification against a full component.
# ---------------------------------------------------------------------------

def _classify(
    g: Graph, s: Vertices, side: int, a_side: Vertices, mp: ModularPartition, p: int, q: int
) -> TypeClassification:
    am = mask_of(a_side)
    pq = g.adj[p] | g.adj[q]
    labels: dict[int, str] = {}
    for x in s:
        if pq >> x & 1:
            labels[x] = "a"
        elif find_induced_p4_from(g, x, a_side) is not None:
            labels[x] = "b"
        else:
            nx = g.adj[x] & am
            if mp.kind != KIND_CLIQUE:
                raise InvariantViolation(
                    f"vertex {x} is neither near the representatives nor starts a P4, "
                    f"yet the quotient of side {side} is {mp.kind}, not a clique"
                )
            for part in mp.parts:
                pm = mask_of(part)
                if nx & pm and nx & pm != pm:
                    raise InvariantViolation(
                        f"neighborhood of {x} cuts the maximal strong module {part}"
                    )
            labels[x] = "c"
    return TypeClassification(side, labels, p, q)


def classify_types(g: Graph, cert: SeparatorCertificate, side: int) -> TypeClassification:
    """Label every separator vertex a/b/c against the chosen full component."""
    _require_separator_cert(g, cert)
    if side not in (1, 2):
        raise InputError(f"side must be 1 or 2, got {side}")
    a_side = cert.full_components[side - 1]
    if len(a_side) == 1:
        raise InputError("classification needs at least two vertices in the component")
    mp = modular_partition(g, a_side)
    p, q = pick_adjacent_module_reps(mp)
    return _classify(g, cert.s, side, a_side, mp, p, q)


def complete_cross_check(g: Graph, cert: SeparatorCertificate, side: int, x: int, y: int) -> bool:
    """True if A_side's N(x)-only part is complete to its N(y)-only part.

    Both vertices must be labeled 'c' on the chosen side; for such pairs this
    always holds, which makes the check an assertable invariant.
    """
    tc = classify_types(g, cert, side)
    for v in (x, y):
        if v not in tc.labels:
            raise InputError(f"vertex {v} is not in the separator {cert.s}")
        if tc.labels[v] != "c":
            raise InputError(f"vertex {v} is labeled {tc.labels[v]!r}, not 'c'")
    am = mask_of(cert.full_components[side - 1])
    only_x = g.adj[x] & am & ~g.adj[y]
    only_y = g.adj[y] & am & ~g.adj[x]
    for u in iter_bits(only_x):
        if only_y & ~g.adj[u]:
            return False
    return True


# ---------------------------------------------------------------------------
# Butterflies and bi-ranking.
# ---------------------------------------------------------------------------

def _is_butterfly(g: Graph, a1m: int, a2m: int, x: int, y: int) -> bool:
    n1x, n1y = g.adj[x] & a1m, g.adj[y] & a1m
    if not (n1x & ~n1y) or not (n1y & ~n1x):
        return False
    n2x, n2y = g.adj[x] & a2m, g.adj[y] & a2m
    return bool(n2x & ~n2y) and bool(n2y & ~n2x)


def find_minimal_butterfly(
    g: Graph, cert: SeparatorCertificate, scc: Iterable[int]
) -> Butterfly | None:
    """Butterfly pair in scc minimizing (A1 u A2) n N({x,y}) by inclusion, or None.

    Ties break lexicographically on (x, y); the four witnesses are the minimum
    ids of their difference sets.
    """
    _require_separator_cert(g, cert)
    a1m = mask_of(cert.full_components[0])
    a2m = mask_of(cert.full_components[1])
    items = bits(mask_of(scc))
    candidates: list[tuple[int, int, int]] = []
    for i, x in enumerate(items):
        for y in items[i + 1:]:
            if _is_butterfly(g, a1m, a2m, x, y):
                candidates.append((x, y, (a1m | a2m) & (g.adj[x] | g.adj[y])))
    for x, y, nbset in candidates:
        if any(other < nbset and other & nbset == other for _, _, other in candidates):
            continue
        return Butterfly(
            x,
            y,
            _lowest(g.adj[x] & a1m & ~g.adj[y]),
            _lowest(g.adj[y] & a1m & ~g.adj[x]),
            _lowest(g.adj[x] & a2m & ~g.adj[y]),
            _lowest(g.adj[y] & a2m & ~g.adj[x]),
        )
    return None


def _lowest(mask: int) -> int:
    if not mask:
        raise InvariantViolation("expected a nonempty difference set")
    return (mask & -mask).bit_length() - 1


def biranking_element(
    items: Sequence[int],
    leq1: Callable[[int, int], bool],
    leq2: Callable[[int, int], bool],
) -> int:
    """First item that is below every other item in one of the two quasi-orders.

    Exists whenever every pair is comparable in at least one order.
    """
    items = list(items)
    if not items:
        raise InputError("bi-ranking needs at least one item")
    for x in items:
        if all(leq1(x, y) or leq2(x, y) for y in items):
            return x
    for i, x in enumerate(items):
        for y in items[i + 1:]:
            if not (leq1(x, y) or leq2(x, y) or leq1(y, x) or leq2(y, x)):
                raise InvariantViolation(f"items {x} and {y} are incomparable in both orders")
    raise InvariantViolation("no bi-ranking element despite pairwise comparability")


def cover_no_butterfly(g: Graph, cert: SeparatorCertificate, t: Iterable[int]) -> Vertices:
    """Two vertices {a1, a2} dominating a butterfly-free t, via its bi-ranking element."""
    _require_separator_cert(g, cert)
    tm = mask_of(t)
    if tm & ~mask_of(cert.s):
        raise InputError(f"target {bits(tm)} is not contained in the separator {cert.s}")
    items = bits(tm)
    if not items:
        return ()
    a1m = mask_of(cert.full_components[0])
    a2m = mask_of(cert.full_components[1])
    for i, x in enumerate(items):
        for y in items[i + 1:]:
            if _is_butterfly(g, a1m, a2m, x, y):
                raise InvariantViolation(f"butterfly pair ({x}, {y}) inside a no-butterfly target")
    adj = g.adj
    leq1 = lambda x, y: not adj[x] & a1m & ~adj[y]
    leq2 = lambda x, y: not adj[x] & a2m & ~adj[y]
    x = biranking_element(items, leq1, leq2)
    return bits((1 << _lowest(adj[x] & a1m)) | (1 << _lowest(adj[x] & a2m)))


# ---------------------------------------------------------------------------
# The P7-free separator cover.
# ---------------------------------------------------------------------------

def cover_separator_p7(g: Graph, cert: SeparatorCertificate) -> CoverOutcome:
    """Cover S within its two full components by at most 22 vertices, or find an induced P7."""
    _require_separator_cert(g, cert)
    a1, a2 = cert.full_components[0], cert.full_components[1]
    for singleton in (a1, a2):
        if len(singleton) == 1:
            return _cover_outcome(g, cert.s, singleton, {"singleton": singleton}, SEPARATOR_BOUND)

    mp1 = modular_partition(g, a1)
    mp2 = modular_partition(g, a2)
    p1, q1 = pick_adjacent_module_reps(mp1)
    p2, q2 = pick_adjacent_module_reps(mp2)
    side1 = _classify(g, cert.s, 1, a1, mp1, p1, q1)
    side2 = _classify(g, cert.s, 2, a2, mp2, p2, q2)
    a1m, a2m = mask_of(a1), mask_of(a2)

    both_b = [x for x in cert.s if side1.labels[x] == "b" and side2.labels[x] == "b"]
    if both_b:
        x = both_b[0]
        left = find_induced_p4_from(g, x, a1)
        right = find_induced_p4_from(g, x, a2)
        if left is None or right is None:
            raise InvariantViolation(f"label 'b' vertex {x} lost its P4")
        seq = tuple(reversed(left.vertices)) + right.vertices[1:]
        return _witness_outcome(g, seq, 7, SEPARATOR_BOUND)

    r_a = bits(1 << p1 | 1 << q1 | 1 << p2 | 1 << q2)

    s_bc = [x for x in cert.s if side1.labels[x] == "b" and side2.labels[x] == "c"]
    r_bc = _cover_bc(g, s_bc, a1, a2m) if s_bc else ()
    if isinstance(r_bc, CoverOutcome):
        return r_bc

    s_cb = [x for x in cert.s if side1.labels[x] == "c" and side2.labels[x] == "b"]
    r_cb = _cover_bc(g, s_cb, a2, a1m) if s_cb else ()
    if isinstance(r_cb, CoverOutcome):
        return r_cb

    s_cc = [x for x in cert.s if side1.labels[x] == "c" and side2.labels[x] == "c"]
    r_cc: Vertices = ()
    if s_cc:
        result = _cover_cc(g, cert, s_cc, a1m, a2m, p1, p2)
        if isinstance(result, CoverOutcome):
            return result
        r_cc = result

    if len(r_bc) > 5 or len(r_cb) > 5 or len(r_cc) > 8:
        raise InvariantViolation("a sub-cover exceeded its budget")
    cover = mask_of(r_a) | mask_of(r_bc) | mask_of(r_cb) | mask_of(r_cc)
    breakdown = {"R_a": r_a, "R_bc": tuple(r_bc), "R_cb": tuple(r_cb), "R_cc": tuple(r_cc)}
    return _cover_outcome(g, cert.s, bits(cover), breakdown, SEPARATOR_BOUND)


def _cover_bc(
    g: Graph, s_bc: list[int], a_path: Vertices, other_m: int
) -> Vertices | CoverOutcome:
    """Dominate the vertices with a P4 into a_path and module-shaped other side.

    Picks v with inclusion-minimal neighborhood in the other component, one of
    its neighbors w there, and its P4 into a_path.  If some class member
    escapes, the escape produces an induced P7.
    """
    adj = g.adj
    marks = [(x, adj[x] & other_m) for x in s_bc]
    minimal = [
        x for x, nx in marks
        if not any(other < nx and other & nx == other for _, other in marks)
    ]
    v = minimal[0]
    nv = adj[v] & other_m
    w = _lowest(nv)
    p4 = find_induced_p4_from(g, v, a_path)
    if p4 is None:
        raise InvariantViolation(f"label 'b' vertex {v} lost its P4")
    _, u1, u2, u3 = p4.vertices
    r = (u1, u2, u3, v, w)
    rm = mask_of(r)
    closed = rm | g.neighborhood_mask(rm)
    escaped = [x for x in s_bc if not closed >> x & 1]
    if not escaped:
        return tuple(sorted(r))
    vp = escaped[0]
    wp_mask = adj[vp] & other_m & ~nv
    if not wp_mask:
        raise InvariantViolation(
            f"escaped vertex {vp} has no private neighbor despite minimal choice {v}"
        )
    wp = _lowest(wp_mask)
    if not adj[w] >> wp & 1:
        raise InvariantViolation(f"cross-completeness fails between {w} and {wp}")
    return _witness_outcome(g, (vp, wp, w, v, u1, u2, u3), 7, SEPARATOR_BOUND)


def _cover_cc(
    g: Graph,
    cert: SeparatorCertificate,
    s_cc: list[int],
    a1m: int,
    a2m: int,
    p1: int,
    p2: int,
) -> Vertices | CoverOutcome:
    """Dominate the vertices module-shaped on both sides (butterfly machinery)."""
    adj = g.adj
    bf = find_minimal_butterfly(g, cert, s_cc)
    if bf is None:
        return cover_no_butterfly(g, cert, s_cc)
    for e1, e2 in ((bf.u1x, bf.u1y), (bf.u2x, bf.u2y)):
        if not adj[e1] >> e2 & 1:
            raise InvariantViolation(f"cross-completeness fails between {e1} and {e2}")
    r_prime = (bf.x, bf.y, bf.u1x, bf.u1y, bf.u2x, bf.u2y)
    rm = mask_of(r_prime)
    closed = rm | g.neighborhood_mask(rm)
    t = [x for x in s_cc if not closed >> x & 1]

    leftover = None
    for i, xp in enumerate(t):
        for yp in t[i + 1:]:
            if _is_butterfly(g, a1m, a2m, xp, yp):
                leftover = (xp, yp)
                break
        if leftover:
            break
    if leftover is None:
        tail = cover_no_butterfly(g, cert, t)
        return tuple(sorted(set(r_prime) | set(tail)))

    xp, yp = leftover
    w_mask = (a1m | a2m) & (adj[xp] | adj[yp]) & ~(adj[bf.x] | adj[bf.y])
    if not w_mask:
        raise InvariantViolation(
            f"leftover butterfly ({xp}, {yp}) has no private neighbor despite minimality"
        )
    w = _lowest(w_mask)
    if not adj[xp] >> w & 1:
        xp, yp = yp, xp
    if a1m >> w & 1:
        ujx, ujy = bf.u1x, bf.u1y
        ukx, uky, pk = bf.u2x, bf.u2y, p2
    else:
        ujx, ujy = bf.u2x, bf.u2y
        ukx, uky, pk = bf.u1x, bf.u1y, p1
    if adj[bf.x] >> bf.y & 1:
        seq = (xp, w, ujx, bf.x, bf.y, uky, pk)
    else:
        seq = (xp, w, ujx, bf.x, ukx, uky, bf.y)
    return _witness_outcome(g, seq, 7, SEPARATOR_BOUND)


# ---------------------------------------------------------------------------
# Potential maximal clique covers.
# ---------------------------------------------------------------------------

def cover_pmc_components(
    g: Graph, pcert: PmcCertificate
) -> PmcCoverPlan | InducedPathWitness:
    """At most 2 vertices plus at most 3 components dominating omega, or an induced P7."""
    if is_pmc(g, pcert.omega) is None:
        raise InputError(f"{pcert.omega} is not a potential maximal clique")
    om = mask_of(pcert.omega)
    omega = pcert.omega
    adj = g.adj
    comp_masks = components_masks(g, om)
    comp_nbs = [g.neighborhood_mask(c) for c in comp_masks]
    nonedges = [
        (u, v)
        for i, u in enumerate(omega)
        for v in omega[i + 1:]
        if not adj[u] >> v & 1
    ]
    if not nonedges:
        return PmcCoverPlan((omega[0],), ())

    covered_by = [
        {e for e in nonedges if nb >> e[0] & 1 and nb >> e[1] & 1} for nb in comp_nbs
    ]
    needed = set(nonedges)
    family = list(range(len(comp_masks)))
    for idx in list(family):
        rest = [i for i in family if i != idx]
        if set().union(*(covered_by[i] for i in rest)) >= needed:
            family = rest
    if not family or not set().union(*(covered_by[i] for i in family)) >= needed:
        raise InvariantViolation("shrunken component family no longer covers the non-edges")

    d0 = family[0]
    private = next(
        (e for e in nonedges if e in covered_by[d0]
         and not any(e in covered_by[i] for i in family if i != d0)),
        None,
    )
    if private is None:
        raise InvariantViolation("the first family member has no private non-edge")
    u, v = private

    def other_with(endpoint: int) -> int | None:
        for i in family:
            if i != d0 and comp_nbs[i] >> endpoint & 1:
                return i
        return None

    for keep, drop in ((u, v), (v, u)):
        if other_with(keep) is None:
            plan = PmcCoverPlan((keep,), (bits(comp_masks[d0]),))
            shortfall = om & ~(adj[keep] | 1 << keep) & ~comp_nbs[d0]
            if shortfall:
                raise InvariantViolation(
                    f"omega vertex {bits(shortfall)} escapes the one-vertex plan"
                )
            return plan

    du = other_with(u)
    dv = other_with(v)
    assert du is not None and dv is not None
    if du == dv:
        raise InvariantViolation("the same component serves both endpoints of a private non-edge")
    if comp_nbs[du] >> v & 1 or comp_nbs[dv] >> u & 1:
        raise InvariantViolation("endpoint components must miss the opposite endpoint")

    reach = (
        adj[u] | adj[v] | 1 << u | 1 << v | comp_nbs[d0] | comp_nbs[du] | comp_nbs[dv]
    )
    escaped = om & ~reach
    if not escaped:
        comps = sorted((bits(comp_masks[i]) for i in (d0, du, dv)))
        return PmcCoverPlan((u, v), tuple(comps))

    x = (escaped & -escaped).bit_length() - 1
    dxu = next(i for i in family if (min(x, u), max(x, u)) in covered_by[i])
    dxv = next(i for i in family if (min(x, v), max(x, v)) in covered_by[i])
    yu = _lowest(adj[u] & comp_masks[du])
    yv = _lowest(adj[v] & comp_masks[dv])
    pu = shortest_path_through(g, u, x, bits(comp_masks[dxu]))
    pv = shortest_path_through(g, v, x, bits(comp_masks[dxv]))
    seq = (yu,) + pu + tuple(reversed(pv))[1:] + (yv,)
    witness = seq[:7]
    if not is_induced_path(g, witness) or len(witness) != 7:
        raise InvariantViolation(f"claimed witness {witness} is not an induced P7")
    return InducedPathWitness(witness)


def cover_pmc_p7(g: Graph, pcert: PmcCertificate) -> CoverOutcome:
    """Cover omega by at most 68 vertices in P7-free graphs, or find an induced P7."""
    plan = cover_pmc_components(g, pcert)
    if isinstance(plan, InducedPathWitness):
        return CoverOutcome(None, None, {}, plan, PMC_BOUND)
    if len(plan.omega_prime) > 2 or len(plan.components) > 3:
        raise InvariantViolation("component plan exceeds its 2 + 3 shape")
    cover = mask_of(plan.omega_prime)
    component_covers = []
    for d in plan.components:
        sep_cert = nd_separator(g, pcert, d)
        sub = cover_separator_p7(g, sep_cert)
        if sub.witness is not None:
            return CoverOutcome(None, None, {}, sub.witness, PMC_BOUND)
        assert sub.cover is not None
        component_covers.append(sub.cover)
        cover |= mask_of(sub.cover)
    breakdown = {
        "omega_prime": plan.omega_prime,
        "components": plan.components,
        "component_covers": tuple(component_covers),
    }
    return _cover_outcome(g, pcert.omega, bits(cover), breakdown, PMC_BOUND)
