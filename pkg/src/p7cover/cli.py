"""Command-line surface: freeness checks, enumerations, certified covers,
counterexample families, and the batch verifier.

Graphs are read from edge-list or graph6 files; the pseudo-path
``family:VARIANT:N`` builds a counterexample instance in place.  Reports are
printed as aligned text or, with ``--format json``, as a versioned JSON
document (``schema: 1``) whose bytes depend only on the inputs and seed.

Exit status: 0 when every check passes or a cover is produced, 1 when a
witness is found or a verdict is negative, 2 on input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from itertools import chain
from pathlib import Path

from .covering import (
    CoverOutcome,
    cover_pmc_p7,
    cover_separator_p5,
    cover_separator_p6_search,
    cover_separator_p7,
)
from .errors import CapacityError, InputError, InvariantViolation
from .families import build_example
from .graph import Graph, Vertices, from_edge_list, from_graph6, to_edge_list, to_graph6
from .paths import find_induced_pt
from .pmc import enumerate_pmcs, is_pmc, pmc_failure
from .separators import enumerate_minimal_separators, full_components
from .verify import CheckConfig, exhaustive_connected_graphs, random_corpus, verify_graphs

SCHEMA = 1


@dataclass(frozen=True)
class RunConfig:
    """One resolved invocation: the command plus every knob it reads."""

    command: str
    fmt: str = "text"
    source: str | None = None
    t: int = 7
    sep: Vertices | None = None
    omega: Vertices | None = None
    variant: int | None = None
    n: int | None = None
    emit: str | None = None
    samples: int = 200
    n_min: int = 7
    n_max: int = 12
    seed: int = 0


# ---------------------------------------------------------------------------
# Input plumbing.
# ---------------------------------------------------------------------------

def load_graph(source: str) -> Graph:
    """Read a graph from a file path or a family:VARIANT:N pseudo-path."""
    if source.startswith("family:"):
        fields = source.split(":")
        if len(fields) != 3:
            raise InputError(f"expected family:VARIANT:N, got {source!r}")
        try:
            variant, n = int(fields[1]), int(fields[2])
        except ValueError as exc:
            raise InputError(f"non-integer family argument in {source!r}") from exc
        return build_example(variant, n).graph
    try:
        text = Path(source).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {source}: {exc}") from exc
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if len(lines) == 1 and len(lines[0].split()) == 1:
        return from_graph6(lines[0])
    return from_edge_list(text)


def parse_vertices(text: str) -> Vertices:
    try:
        return tuple(int(tok) for tok in text.split(",") if tok.strip() != "")
    except ValueError as exc:
        raise InputError(f"expected comma-separated vertex ids, got {text!r}") from exc


def _outcome_dict(out: CoverOutcome) -> dict:
    return {
        "cover": list(out.cover) if out.cover is not None else None,
        "size": len(out.cover) if out.cover is not None else None,
        "dominators": (
            {str(k): v for k, v in out.dominators.items()}
            if out.dominators is not None
            else None
        ),
        "breakdown": {k: list(v) for k, v in out.breakdown.items()},
        "witness": list(out.witness.vertices) if out.witness is not None else None,
        "bound": out.bound,
    }


# ---------------------------------------------------------------------------
# Subcommands.  Each returns (exit status, report dict).
# ---------------------------------------------------------------------------

def _run_ptfree(config: RunConfig) -> tuple[int, dict]:
    g = load_graph(config.source)
    witness = find_induced_pt(g, config.t)
    report = {
        "schema": SCHEMA,
        "command": "ptfree",
        "t": config.t,
        "n": g.n,
        "graph6": to_graph6(g),
        "free": witness is None,
        "witness": list(witness.vertices) if witness else None,
    }
    return (0 if witness is None else 1), report


def _run_sep_enum(config: RunConfig) -> tuple[int, dict]:
    g = load_graph(config.source)
    certs = enumerate_minimal_separators(g)
    report = {
        "schema": SCHEMA,
        "command": "sep-enum",
        "n": g.n,
        "graph6": to_graph6(g),
        "count": len(certs),
        "separators": [
            {
                "s": list(c.s),
                "full_components": [list(a) for a in c.full_components],
                "other_components": [list(a) for a in c.other_components],
            }
            for c in certs
        ],
    }
    return 0, report


def _run_sep_cover(config: RunConfig) -> tuple[int, dict]:
    g = load_graph(config.source)
    if config.sep is not None:
        certs = [full_components(g, config.sep)]
    else:
        certs = enumerate_minimal_separators(g)
    results = []
    witnessed = False
    for cert in certs:
        if config.t == 7:
            out = cover_separator_p7(g, cert)
            entry = {"s": list(cert.s)} | _outcome_dict(out)
            witnessed |= out.witness is not None
        elif config.t == 5:
            out = cover_separator_p5(g, cert)
            entry = {"s": list(cert.s)} | _outcome_dict(out)
            witnessed |= out.witness is not None
        else:
            found = cover_separator_p6_search(g, cert)
            if found is None:
                p6 = find_induced_pt(g, 6)
                if p6 is None:
                    raise InvariantViolation(
                        f"no small two-sided cover for {cert.s} on a P6-free graph"
                    )
                entry = {
                    "s": list(cert.s),
                    "a_prime": None,
                    "b_prime": None,
                    "witness": list(p6.vertices),
                }
                witnessed = True
            else:
                aprime, bprime = found
                entry = {
                    "s": list(cert.s),
                    "a_prime": list(aprime),
                    "b_prime": list(bprime),
                    "witness": None,
                }
        results.append(entry)
    report = {
        "schema": SCHEMA,
        "command": "sep-cover",
        "t": config.t,
        "n": g.n,
        "graph6": to_graph6(g),
        "count": len(results),
        "all_covered": not witnessed,
        "results": results,
    }
    return (1 if witnessed else 0), report


def _run_pmc_enum(config: RunConfig) -> tuple[int, dict]:
    g = load_graph(config.source)
    certs = enumerate_pmcs(g)
    report = {
        "schema": SCHEMA,
        "command": "pmc-enum",
        "n": g.n,
        "graph6": to_graph6(g),
        "count": len(certs),
        "pmcs": [list(c.omega) for c in certs],
    }
    return 0, report


def _run_pmc_check(config: RunConfig) -> tuple[int, dict]:
    g = load_graph(config.source)
    cert = is_pmc(g, config.omega)
    report = {
        "schema": SCHEMA,
        "command": "pmc-check",
        "n": g.n,
        "graph6": to_graph6(g),
        "omega": sorted(config.omega),
        "is_pmc": cert is not None,
        "failure": pmc_failure(g, config.omega),
        "nonedge_cover": (
            {f"{u},{v}": list(d) for (u, v), d in cert.nonedge_cover.items()}
            if cert is not None
            else None
        ),
    }
    return (0 if cert is not None else 1), report


def _run_pmc_cover(config: RunConfig) -> tuple[int, dict]:
    g = load_graph(config.source)
    if config.omega is not None:
        cert = is_pmc(g, config.omega)
        if cert is None:
            raise InputError(
                f"{sorted(config.omega)} is not a potential maximal clique: "
                f"{pmc_failure(g, config.omega)}"
            )
        certs = [cert]
    else:
        certs = enumerate_pmcs(g)
    results = []
    witnessed = False
    for cert in certs:
        out = cover_pmc_p7(g, cert)
        witnessed |= out.witness is not None
        results.append({"omega": list(cert.omega)} | _outcome_dict(out))
    report = {
        "schema": SCHEMA,
        "command": "pmc-cover",
        "n": g.n,
        "graph6": to_graph6(g),
        "count": len(results),
        "all_covered": not witnessed,
        "results": results,
    }
    return (1 if witnessed else 0), report


def _run_family(config: RunConfig) -> tuple[int, dict]:
    inst = build_example(config.variant, config.n)
    report = {
        "schema": SCHEMA,
        "command": "family",
        "variant": inst.variant,
        "n": inst.n,
        "graph6": to_graph6(inst.graph),
        "s": list(inst.s),
        "a1": list(inst.a1),
        "a2": list(inst.a2),
        "labels": {str(v): name for v, name in sorted(inst.labels.items())},
        "edges": [[u, v] for u, v in inst.graph.edges()],
    }
    if config.emit is not None:
        edge_path = Path(config.emit + ".edges")
        sidecar_path = Path(config.emit + ".json")
        edge_path.write_text(to_edge_list(inst.graph))
        sidecar = {k: report[k] for k in ("schema", "variant", "n", "graph6", "s", "a1", "a2", "labels")}
        sidecar_path.write_text(json.dumps(sidecar, indent=2, sort_keys=True) + "\n")
        report["written"] = [str(edge_path), str(sidecar_path)]
    return 0, report


def _run_verify(config: RunConfig) -> tuple[int, dict]:
    exhaustive_max = int(os.environ.get("P7COVER_EXHAUSTIVE_MAX_N", "5"))
    oracle_max = int(os.environ.get("P7COVER_ORACLE_MAX_N", "7"))
    check = CheckConfig(
        p5_pairs=True,
        p6_search=True,
        oracle_separators_max_n=oracle_max,
        oracle_pmcs_max_n=min(6, oracle_max),
    )
    small = chain.from_iterable(
        exhaustive_connected_graphs(n) for n in range(1, exhaustive_max + 1)
    )
    randoms = random_corpus(config.samples, config.n_min, config.n_max, config.seed, t=7)
    rep = verify_graphs(chain(small, randoms), check)
    report = {
        "schema": SCHEMA,
        "command": "verify",
        "samples": config.samples,
        "n_min": config.n_min,
        "n_max": config.n_max,
        "seed": config.seed,
        "exhaustive_max_n": exhaustive_max,
        "oracle_max_n": oracle_max,
        "report": rep.to_dict(),
    }
    return (0 if rep.ok else 1), report


_RUNNERS = {
    "ptfree": _run_ptfree,
    "sep-enum": _run_sep_enum,
    "sep-cover": _run_sep_cover,
    "pmc-enum": _run_pmc_enum,
    "pmc-check": _run_pmc_check,
    "pmc-cover": _run_pmc_cover,
    "family": _run_family,
    "verify": _run_verify,
}


def run(config: RunConfig) -> tuple[int, dict]:
    """Execute one resolved invocation; returns (exit status, report)."""
    return _RUNNERS[config.command](config)


# ---------------------------------------------------------------------------
# Rendering.
# ---------------------------------------------------------------------------

def _fmt_value(value) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, (list, tuple)):
        return "{" + ", ".join(str(x) for x in value) + "}"
    if isinstance(value, dict):
        return "  ".join(f"{k}={_fmt_value(v)}" for k, v in value.items())
    return str(value)


def _entry_lines(entry: dict, head_key: str) -> list[str]:
    head = _fmt_value(entry[head_key])
    parts = []
    for key, value in entry.items():
        if key == head_key or value is None:
            continue
        if key == "dominators":
            continue
        if key == "breakdown":
            inner = ", ".join(f"{k}={_fmt_value(v)}" for k, v in value.items() if v)
            parts.append(f"breakdown [{inner}]")
        else:
            parts.append(f"{key}={_fmt_value(value)}")
    return [f"  {head_key} {head}: " + "  ".join(parts)]


def render_text(report: dict) -> str:
    lines: list[str] = []
    skip = {"schema", "results", "separators", "pmcs", "report", "edges", "labels"}
    for key, value in report.items():
        if key in skip:
            continue
        lines.append(f"{key}: {_fmt_value(value)}")
    for entry in report.get("results", ()):
        head = "s" if "s" in entry else "omega"
        lines.extend(_entry_lines(entry, head))
    for entry in report.get("separators", ()):
        lines.append(
            f"  s {_fmt_value(entry['s'])}: full={_fmt_value(entry['full_components'])}"
            f"  other={_fmt_value(entry['other_components'])}"
        )
    for omega in report.get("pmcs", ()):
        lines.append(f"  omega {_fmt_value(omega)}")
    if report.get("command") == "family":
        lines.append("labels: " + "  ".join(f"{v}={name}" for v, name in report["labels"].items()))
    sub = report.get("report")
    if sub is not None:
        for key, value in sub.items():
            if key == "violations":
                lines.append(f"violations: {len(value)}")
                for v in value:
                    lines.append(f"  {v['graph6']}  {v['check']}: {v['detail']}")
            else:
                lines.append(f"{key}: {_fmt_value(value)}")
    return "\n".join(lines) + "\n"


def render(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2, sort_keys=True) + "\n"
    return render_text(report)


# ---------------------------------------------------------------------------
# Argument parsing.
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="p7cover",
        description="Certified neighborhood covers for minimal separators and "
        "potential maximal cliques in P7-free graphs.",
    )
    parser.add_argument("--format", choices=("text", "json"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ptfree", help="decide P_t-freeness, reporting a witness path if any")
    p.add_argument("--t", type=int, default=7, choices=(5, 6, 7, 8))
    p.add_argument("graph", help="edge-list/graph6 path or family:VARIANT:N")

    psep = sub.add_parser("sep", help="minimal separator enumeration and covers")
    sepsub = psep.add_subparsers(dest="subcommand", required=True)
    p = sepsub.add_parser("enum", help="all minimal separators with certificates")
    p.add_argument("graph")
    p = sepsub.add_parser("cover", help="certified covers, all separators unless --sep")
    p.add_argument("--t", type=int, default=7, choices=(5, 6, 7))
    p.add_argument("--sep", help="comma-separated vertex ids of one separator")
    p.add_argument("graph")

    ppmc = sub.add_parser("pmc", help="potential maximal clique checks and covers")
    pmcsub = ppmc.add_subparsers(dest="subcommand", required=True)
    p = pmcsub.add_parser("enum", help="all potential maximal cliques")
    p.add_argument("graph")
    p = pmcsub.add_parser("check", help="test one vertex set against PMC1/PMC2")
    p.add_argument("--omega", required=True, help="comma-separated vertex ids")
    p.add_argument("graph")
    p = pmcsub.add_parser("cover", help="certified covers, all PMCs unless --omega")
    p.add_argument("--omega", help="comma-separated vertex ids")
    p.add_argument("graph")

    p = sub.add_parser("family", help="build a counterexample family instance")
    p.add_argument("--variant", type=int, required=True, choices=(1, 2))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--emit", help="write PREFIX.edges and PREFIX.json")

    p = sub.add_parser("verify", help="property suite over random + exhaustive corpora")
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--n-min", type=int, default=7)
    p.add_argument("--n-max", type=int, default=12)
    p.add_argument("--seed", type=int, default=0)

    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    command = args.command
    if getattr(args, "subcommand", None):
        command = f"{args.command}-{args.subcommand}"
    return RunConfig(
        command=command,
        fmt=args.format,
        source=getattr(args, "graph", None),
        t=getattr(args, "t", 7),
        sep=parse_vertices(args.sep) if getattr(args, "sep", None) else None,
        omega=parse_vertices(args.omega) if getattr(args, "omega", None) else None,
        variant=getattr(args, "variant", None),
        n=getattr(args, "n", None),
        emit=getattr(args, "emit", None),
        samples=getattr(args, "samples", 200),
        n_min=getattr(args, "n_min", 7),
        n_max=getattr(args, "n_max", 12),
        seed=getattr(args, "seed", 0),
    )


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        config = config_from_args(args)
        status, report = run(config)
    except (InputError, CapacityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(render(report, config.fmt))
    return status


if __name__ == "__main__":
    raise SystemExit(main())
