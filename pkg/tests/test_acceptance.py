"""End-to-end acceptance battery.

Each test below is one acceptance criterion, checked at full scale: exhaustive
connected graphs through n=6, plus seeded random corpora in the thousand-graph
range.  The four corpus reports are computed once per session and shared, so
`pytest tests/test_acceptance.py -v` prints one pass/fail line per criterion
in a couple of minutes on one core.

Every assertion rides on independent re-validation: covers are re-checked for
domination from the adjacency alone, witnesses are re-checked as induced
paths, and enumerations are compared against brute force.  Nothing here
trusts the code path under test to grade itself.
"""

from itertools import chain, islice

import pytest

from p7cover.covering import PMC_BOUND, SEPARATOR_BOUND
from p7cover.families import build_example
from p7cover.oracle import brute_minimal_separators, min_dominating_set_of
from p7cover.paths import find_induced_pt
from p7cover.separators import enumerate_minimal_separators, full_components, is_minimal_separator
from p7cover.verify import (
    CheckConfig,
    VerifyReport,
    exhaustive_connected_graphs,
    random_corpus,
    verify_graphs,
)

P7FREE_SEED = 101
UNFILTERED_SEED = 977
P6FREE_SEED = 41
SPARSE_PROBS = (0.12, 0.2, 0.3)


def picked(rep: VerifyReport, *checks: str) -> list:
    return [v for v in rep.violations if v.check in checks]


def show(rep: VerifyReport, *checks: str, limit: int = 6) -> str:
    bad = picked(rep, *checks)
    return "\n".join(f"{v.graph6} [{v.check}] {v.detail}" for v in bad[:limit])


@pytest.fixture(scope="session")
def exhaustive_report() -> VerifyReport:
    corpus = chain.from_iterable(exhaustive_connected_graphs(n) for n in range(1, 7))
    config = CheckConfig(
        p5_pairs=True, p6_search=True, oracle_separators_max_n=7, oracle_pmcs_max_n=6
    )
    return verify_graphs(corpus, config)


@pytest.fixture(scope="session")
def p7free_bundle() -> tuple[list, VerifyReport]:
    corpus = list(random_corpus(1000, 7, 14, seed=P7FREE_SEED, t=7))
    rep = verify_graphs(corpus, CheckConfig(oracle_separators_max_n=7))
    return corpus, rep


@pytest.fixture(scope="session")
def unfiltered_bundle() -> tuple[list, VerifyReport]:
    corpus = list(random_corpus(1000, 7, 14, seed=UNFILTERED_SEED, probs=SPARSE_PROBS))
    rep = verify_graphs(corpus, CheckConfig(oracle_separators_max_n=7))
    return corpus, rep


@pytest.fixture(scope="session")
def p6free_report() -> VerifyReport:
    corpus = random_corpus(500, 4, 12, seed=P6FREE_SEED, t=6)
    config = CheckConfig(
        separator_covers=False,
        pmc_covers=False,
        classification=False,
        nd_check=False,
        p6_search=True,
    )
    return verify_graphs(corpus, config)


def test_criterion_01_separator_covers_within_22(exhaustive_report, p7free_bundle):
    """Every minimal separator of every P7-free corpus graph gets a dominating
    cover of size <= 22 with per-piece budgets intact, and never a witness."""
    _, p7rep = p7free_bundle
    for rep, name in ((exhaustive_report, "exhaustive n<=6"), (p7rep, "random P7-free")):
        assert not picked(rep, "separator-cover", "separator-witness"), show(
            rep, "separator-cover", "separator-witness"
        )
        assert rep.witnesses == 0, f"{name}: witness on a P7-free graph"
        assert rep.max_separator_cover <= SEPARATOR_BOUND
        assert rep.separators > 0 and rep.covers > 0
    print(
        "criterion 1 PASS: separator covers <= 22 on "
        f"{exhaustive_report.separators + p7rep.separators} separators, "
        f"max size {max(exhaustive_report.max_separator_cover, p7rep.max_separator_cover)}"
    )


def test_criterion_02_pmc_covers_within_68(exhaustive_report, p7free_bundle):
    """Every potential maximal clique of every P7-free corpus graph gets a
    dominating cover of size <= 68 built from <= 2 clique vertices plus the
    separator covers of <= 3 components."""
    _, p7rep = p7free_bundle
    for rep in (exhaustive_report, p7rep):
        assert not picked(rep, "pmc-cover", "pmc-witness"), show(
            rep, "pmc-cover", "pmc-witness"
        )
        assert rep.max_pmc_cover <= PMC_BOUND
        assert rep.pmcs > 0
    print(
        "criterion 2 PASS: pmc covers <= 68 on "
        f"{exhaustive_report.pmcs + p7rep.pmcs} pmcs, "
        f"max size {max(exhaustive_report.max_pmc_cover, p7rep.max_pmc_cover)}"
    )


def test_criterion_03_unfiltered_outputs_certify(unfiltered_bundle):
    """On raw random graphs (P7s allowed) every returned witness re-validates
    as an induced P7 and every returned cover re-validates as dominating."""
    _, rep = unfiltered_bundle
    names = ("separator-cover", "separator-witness", "pmc-cover", "pmc-witness")
    assert not picked(rep, *names), show(rep, *names)
    assert rep.witnesses >= 100, "corpus produced too few witnesses to exercise that path"
    assert rep.covers > 0
    print(
        f"criterion 3 PASS: {rep.witnesses} witnesses and {rep.covers} covers "
        "all re-validated on the unfiltered corpus"
    )


def test_criterion_04_variant_one_family():
    """First counterexample family: P8-free, contains P7 from n=3 on, needs n
    dominators for S even with the whole vertex set available, and every
    vertex sees exactly one S-vertex in its closed neighborhood."""
    for n in range(1, 7):
        fam = build_example(1, n)
        g = fam.graph
        assert find_induced_pt(g, 8) is None, f"n={n}: found a P8"
        assert (find_induced_pt(g, 7) is not None) == (n >= 3), f"n={n}: P7 boundary off"
        best = min_dominating_set_of(g, fam.s, pool=range(g.n))
        assert len(best) == n, f"n={n}: minimum dominating set {best}"
        sm = sum(1 << v for v in fam.s)
        for v in range(g.n):
            closed = g.adj[v] | (1 << v)
            assert bin(closed & sm).count("1") == 1, f"n={n}: vertex {v}"
    print("criterion 4 PASS: variant-1 family checks out for n = 1..6")


def test_criterion_05_variant_two_family():
    """Second counterexample family: P7-free, contains P6 from n=3 on, S is a
    minimal separator with full components A1 and A2, and dominating S from
    outside S needs n vertices."""
    for n in range(1, 7):
        fam = build_example(2, n)
        g = fam.graph
        assert find_induced_pt(g, 7) is None, f"n={n}: found a P7"
        assert (find_induced_pt(g, 6) is not None) == (n >= 3), f"n={n}: P6 boundary off"
        assert is_minimal_separator(g, fam.s)
        cert = full_components(g, fam.s)
        assert fam.a1 in cert.full_components and fam.a2 in cert.full_components
        outside = [v for v in range(g.n) if v not in fam.s]
        best = min_dominating_set_of(g, fam.s, pool=outside)
        assert len(best) == n, f"n={n}: minimum dominating set {best}"
    print("criterion 5 PASS: variant-2 family checks out for n = 1..6")


def test_criterion_06_p5_free_pairs_cover(exhaustive_report):
    """In every P5-free graph of the exhaustive corpus, every single pair of
    vertices drawn from two full components dominates the whole separator."""
    assert not picked(exhaustive_report, "p5-pairs"), show(exhaustive_report, "p5-pairs")
    p5_free = sum(
        1
        for n in range(1, 6)
        for g in exhaustive_connected_graphs(n)
        if find_induced_pt(g, 5) is None
    )
    assert p5_free > 100, "sanity: the corpus must actually contain P5-free graphs"
    print(f"criterion 6 PASS: all cross pairs dominate S ({p5_free} P5-free graphs at n<=5 alone)")


def test_criterion_07_p6_free_two_sided_search(exhaustive_report, p6free_report):
    """In every P6-free corpus graph the two-sided search finds A', B' with at
    most three vertices each whose neighborhoods cover the separator."""
    for rep in (exhaustive_report, p6free_report):
        assert not picked(rep, "p6-search"), show(rep, "p6-search")
    assert p6free_report.graphs == 500
    assert p6free_report.separators > 0
    print(
        "criterion 7 PASS: two-sided covers <= 3+3 on "
        f"{p6free_report.separators} separators of 500 random P6-free graphs"
    )


def test_criterion_08_classification_sound(unfiltered_bundle):
    """Type labels satisfy their defining properties on arbitrary graphs:
    every c label comes with its clique-quotient neighborhood structure
    verified, every c-pair passes the completeness cross check, and no
    internal invariant ever trips."""
    _, rep = unfiltered_bundle
    assert not picked(rep, "classification", "cross-check"), show(
        rep, "classification", "cross-check"
    )
    assert not any("invariant" in v.detail.lower() for v in rep.violations)
    print("criterion 8 PASS: classification and cross checks clean on the unfiltered corpus")


def test_criterion_09_pmc_machinery_agrees(exhaustive_report, p7free_bundle, unfiltered_bundle):
    """nd_separator yields a valid minimal separator for every (pmc, component)
    pair across all corpora, and the pmc test agrees with the minimal
    triangulation oracle on every subset of every n<=6 graph."""
    _, p7rep = p7free_bundle
    _, unrep = unfiltered_bundle
    for rep in (exhaustive_report, p7rep, unrep):
        assert not picked(rep, "nd-separator"), show(rep, "nd-separator")
        assert not picked(rep, "pmc-contains-separator"), show(rep, "pmc-contains-separator")
    assert not picked(exhaustive_report, "oracle-pmcs"), show(exhaustive_report, "oracle-pmcs")
    print(
        "criterion 9 PASS: nd separators valid on "
        f"{exhaustive_report.pmcs + p7rep.pmcs + unrep.pmcs} pmcs, "
        "pmc test matches the completion oracle through n=6"
    )


def test_criterion_10_separator_enumeration_matches_brute_force(
    exhaustive_report, p7free_bundle, unfiltered_bundle
):
    """The minimal separator enumeration agrees with the subset-scan oracle on
    every corpus graph with n<=7 and on a sample of larger random graphs."""
    for rep in (exhaustive_report, p7free_bundle[1], unfiltered_bundle[1]):
        assert not picked(rep, "oracle-separators"), show(rep, "oracle-separators")
    sampled = 0
    pool = chain(p7free_bundle[0], unfiltered_bundle[0])
    for g in islice((g for g in pool if 8 <= g.n <= 10), 0, None, 7):
        fast = {cert.s for cert in enumerate_minimal_separators(g)}
        assert fast == set(brute_minimal_separators(g))
        sampled += 1
    assert sampled >= 50
    print(
        "criterion 10 PASS: enumeration matches brute force on all n<=7 corpus "
        f"graphs and {sampled} sampled graphs with 8 <= n <= 10"
    )
