"""``cst`` command line.

Exit codes: 0 success (or predicate true), 1 predicate false, 2 input or
usage error, 3 size bound exceeded, 4 closed form with a zero parameter,
5 classification precondition failed.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .csf import MAX_CENSUS_VERTICES, MAX_ORACLE_VERTICES, ResourceError, csf_e, csf_m, csf_mtilde
from .graph import (
    CLAW,
    CO_TRIANGLE,
    TWO_K2,
    Graph,
    GraphFormatError,
    build_gb,
    build_gp,
    build_pattern,
    find_asteroidal_triple,
    find_chordless_cycle,
    find_induced,
    format_edge_list,
    is_chordal,
    parse_graph,
    unit_interval_violation,
)
from .search import CLASSES, search
from .theorems import (
    ClassificationError,
    DomainError,
    classify,
    gb_e_closed,
    gb_mtilde_closed,
    gp_e_closed,
    gp_mtilde_closed,
    sweep_report_json,
    verify_sweep,
)

EXIT_FALSE = 1
EXIT_INPUT = 2
EXIT_BOUND = 3
EXIT_DOMAIN = 4
EXIT_PRECONDITION = 5

PREDICATES = ("e-positive", "claw-free", "2k2-free", "chordal", "at-free", "unit-interval", "co-triangle-free")


@dataclass(frozen=True)
class RunConfig:
    command: str
    output: str = "text"
    max_census: int = MAX_CENSUS_VERTICES
    max_oracle: int = MAX_ORACLE_VERTICES
    workers: int = 1

    def __post_init__(self) -> None:
        if self.output not in ("text", "json"):
            raise ValueError(f"unknown output format {self.output!r}")
        if min(self.max_census, self.max_oracle) < 1:
            raise ValueError("bounds must be positive")
        if self.workers < 1:
            raise ValueError("worker count must be at least 1")


class InputError(Exception):
    pass


def read_graph(source: str) -> Graph:
    """Load a graph from a path, ``-`` (stdin), or ``pattern:NAME`` / ``gp:r,s,t`` / ``gb:r,s,t``."""
    for prefix, build in (("gp:", build_gp), ("gb:", build_gb)):
        if source.startswith(prefix):
            try:
                r, s, t = (int(x) for x in source[len(prefix):].split(","))
                return build(r, s, t)
            except ValueError as exc:
                raise InputError(f"bad family spec {source!r}: {exc}") from None
    if source.startswith("pattern:"):
        try:
            return build_pattern(source[len("pattern:"):])
        except ValueError as exc:
            raise InputError(str(exc)) from None
    try:
        if source == "-":
            text = sys.stdin.read()
        else:
            with open(source) as fh:
                text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {source}: {exc}") from None
    try:
        return parse_graph(text)
    except GraphFormatError as exc:
        raise InputError(f"{source}: {exc}") from None


def _emit(cfg: RunConfig, text: str, data) -> None:
    if cfg.output == "json":
        print(data if isinstance(data, str) else json.dumps(data))
    else:
        print(text)


def cmd_expand(cfg: RunConfig, args) -> int:
    g = read_graph(args.graph)
    f = {"m": csf_m, "mtilde": csf_mtilde, "e": csf_e}[args.basis](g, cfg.max_census)
    _emit(cfg, f.render(), f.to_json())
    return 0


def _check(cfg: RunConfig, g: Graph, predicate: str):
    if predicate == "e-positive":
        f = csf_e(g, cfg.max_census)
        lam = f.first_negative()
        return lam is None, (list(lam) if lam is not None else None)
    if predicate == "claw-free":
        hit = find_induced(g, CLAW)
        return hit is None, hit
    if predicate == "2k2-free":
        hit = find_induced(g, TWO_K2)
        return hit is None, hit
    if predicate == "co-triangle-free":
        hit = find_induced(g, CO_TRIANGLE)
        return hit is None, hit
    if predicate == "chordal":
        ok = is_chordal(g)
        return ok, (None if ok else find_chordless_cycle(g))
    if predicate == "at-free":
        hit = find_asteroidal_triple(g)
        return hit is None, (list(hit) if hit else None)
    bad = unit_interval_violation(g)
    return bad is None, (None if bad is None else {"fails": bad[0], "witness": bad[1]})


def cmd_check(cfg: RunConfig, args) -> int:
    g = read_graph(args.graph)
    value, witness = _check(cfg, g, args.predicate)
    text = "true" if value else f"false\nwitness: {json.dumps(witness)}"
    _emit(cfg, text, {"predicate": args.predicate, "value": value, "witness": witness})
    return 0 if value else EXIT_FALSE


def cmd_family(cfg: RunConfig, args) -> int:
    r, s, t = args.r, args.s, args.t
    g = (build_gp if args.name == "gp" else build_gb)(r, s, t)
    if args.emit == "edges":
        _emit(cfg, format_edge_list(g).rstrip("\n"), {"n": g.n, "edges": [list(e) for e in g.edges()]})
        return 0
    if args.basis == "e":
        if args.name == "gp":
            coeffs, f = gp_e_closed(r, s, t)
            head = f"A={coeffs.A} B={coeffs.B} C={coeffs.C} D={coeffs.D} E={coeffs.E}"
            data = {"coefficients": {k: str(getattr(coeffs, k)) for k in "ABCDE"}, "expansion": f.to_dict()}
            _emit(cfg, f"{head}\n{f.render()}", data)
            return 0
        f = gb_e_closed(r, s, t)
    else:
        f = (gp_mtilde_closed if args.name == "gp" else gb_mtilde_closed)(r, s, t)
    _emit(cfg, f.render(), f.to_json())
    return 0


def cmd_classify(cfg: RunConfig, args) -> int:
    g = read_graph(args.graph)
    if g.n > cfg.max_census:
        raise ResourceError(f"census limited to {cfg.max_census} vertices, graph has {g.n}")
    result = classify(g)
    if cfg.output == "json":
        print(json.dumps(result.to_dict()))
        return 0
    for i, cert in enumerate(result.certificates):
        line = f"component {i}: {cert.variant.value} case={cert.case} w={cert.root} vertices={cert.vertices}"
        if cert.gb_params:
            line += " GB(r,s,t)=({}, {}, {})".format(*cert.gb_params)
        sizes = {k: len(v) for k, v in cert.structure.items() if isinstance(v, list)}
        if sizes:
            line += " blocks=" + ",".join(f"{k}:{v}" for k, v in sizes.items())
        print(line)
        print(f"  e-expansion: {cert.e_expansion.render()}")
    print(f"X_G = {result.e_expansion.render()}")
    return 0


def cmd_verify(cfg: RunConfig, args) -> int:
    entries = verify_sweep(args.family, args.max_param, cfg.workers)
    if cfg.output == "json":
        print(sweep_report_json(entries))
    else:
        for e in entries:
            flag = "pass" if e.passed else "FAIL"
            print(f"{e.family}({e.r},{e.s},{e.t}) {flag} m={e.m_match} e={e.e_match} nonneg={e.e_nonneg} {e.millis:.1f}ms")
    return 0 if all(e.passed for e in entries) else EXIT_FALSE


def cmd_search(cfg: RunConfig, args) -> int:
    totals = search(args.max_n, args.graph_class, args.connected, cfg.workers, args.min_n, cfg.max_census)
    if cfg.output == "json":
        print(json.dumps([t.as_dict() for t in totals]))
        return 0
    for t in totals:
        print(
            f"n={t.n} checked={t.checked} in_class={t.in_class} positive={t.positive} "
            f"negative={t.negative}" + (f" certified={t.certified}" if args.graph_class == "2k2-unit-interval" else "")
        )
    print(
        "total checked={} in_class={} positive={} negative={}".format(
            sum(t.checked for t in totals), sum(t.in_class for t in totals),
            sum(t.positive for t in totals), sum(t.negative for t in totals),
        )
    )
    for t in totals:
        for edges in t.negatives:
            print(f"# negative e-coefficient (n={t.n})")
            print(edges, end="")
    return 0


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def _nonneg_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text", dest="output")
    common.add_argument("--max-census", type=_positive_int, default=MAX_CENSUS_VERTICES)
    common.add_argument("--max-oracle", type=_positive_int, default=MAX_ORACLE_VERTICES)
    common.add_argument("--workers", type=_positive_int, default=1)

    parser = argparse.ArgumentParser(prog="cst", description="Chromatic symmetric function toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", parents=[common], help="print X_G in a basis")
    p.add_argument("graph")
    p.add_argument("--basis", choices=("m", "mtilde", "e"), default="e")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("check", parents=[common], help="test a graph predicate")
    p.add_argument("graph")
    p.add_argument("predicate", choices=PREDICATES)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("family", parents=[common], help="GP / GB constructions and closed forms")
    p.add_argument("name", choices=("gp", "gb"))
    p.add_argument("r", type=_nonneg_int)
    p.add_argument("s", type=_nonneg_int)
    p.add_argument("t", type=_nonneg_int)
    p.add_argument("--emit", choices=("edges", "expansion"), default="edges")
    p.add_argument("--basis", choices=("m", "e"), default="e",
                   help="m prints the closed form in augmented monomials, as stated")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("classify", parents=[common], help="certify a 2K2-free unit interval graph")
    p.add_argument("graph")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", parents=[common], help="closed forms vs. census for a family")
    p.add_argument("family", choices=("gp", "gb", "GP", "GB"))
    p.add_argument("--max-param", type=_positive_int, default=2)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", parents=[common], help="exhaustive small-graph scan")
    p.add_argument("--max-n", type=_positive_int, default=7)
    p.add_argument("--min-n", type=_positive_int, default=1)
    p.add_argument("--class", choices=CLASSES, default="all", dest="graph_class")
    p.add_argument("--hunt", choices=("negative-e-coefficient",), default="negative-e-coefficient")
    p.add_argument("--connected", action="store_true", help="only connected graphs")
    p.set_defaults(func=cmd_search)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = RunConfig(args.command, args.output, args.max_census, args.max_oracle, args.workers)
    try:
        return args.func(cfg, args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ResourceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ClassificationError as exc:
        print(f"error: not a 2K2-free unit interval graph: fails {exc.predicate}, witness {exc.witness}",
              file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
