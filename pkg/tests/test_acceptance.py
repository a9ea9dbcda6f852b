"""One test per acceptance criterion; each prints a single PASS/FAIL line."""

import time

import pytest

from chromsym.csf import coloring_count_oracle, csf_e, csf_m, e_positivity
from chromsym.graph import build_gb, build_gp, build_pattern, complete_graph
from chromsym.partition import partitions_of
from chromsym.search import search
from chromsym.symfunc import Basis, SymPoly, e_to_m
from chromsym.theorems import gb_e_closed, gb_m_closed, gp_e_closed, gp_m_closed, transition_identities

from conftest import all_graphs

TRIPLES = [(r, s, t) for r in range(1, 4) for s in range(1, 4) for t in range(1, 4)]


@pytest.fixture
def report(capsys):
    def emit(number, ok, detail, started):
        with capsys.disabled():
            status = "PASS" if ok else "FAIL"
            print(f"\ncriterion {number}: {status} {detail} ({time.perf_counter() - started:.1f}s)")
    return emit


def test_criterion_1_pyramid_m_expansions(report):
    start = time.perf_counter()
    bad = [x for x in TRIPLES if gp_m_closed(*x) != csf_m(build_gp(*x))]
    report(1, not bad, f"GP m-expansion exact on {len(TRIPLES) - len(bad)}/27 triples", start)
    assert not bad


def test_criterion_2_pyramid_e_expansions(report):
    start = time.perf_counter()
    bad = []
    for x in TRIPLES:
        c, f = gp_e_closed(*x)
        if f != csf_e(build_gp(*x)) or min(c.A, c.B, c.C, c.D, c.E) < 0:
            bad.append(x)
    report(2, not bad, f"GP e-expansion exact and A..E >= 0 on {len(TRIPLES) - len(bad)}/27 triples", start)
    assert not bad


def test_criterion_3_bull_expansions(report):
    start = time.perf_counter()
    bad = []
    for x in TRIPLES:
        g = build_gb(*x)
        f = gb_e_closed(*x)
        if gb_m_closed(*x) != csf_m(g) or f != csf_e(g) or not f.is_nonnegative():
            bad.append(x)
    report(3, not bad, f"GB m- and e-expansions exact and nonnegative on {len(TRIPLES) - len(bad)}/27 triples", start)
    assert not bad


def test_criterion_4_transition_identities(report):
    start = time.perf_counter()
    bad = [
        (i, lam)
        for i in range(3, 9)
        for lam, expected in transition_identities(i).items()
        if e_to_m(lam) != expected
    ]
    report(4, not bad, f"{30 - len(bad)}/30 e-to-m identities for i=3..8", start)
    assert not bad


def test_criterion_5_census_matches_oracle(report):
    start = time.perf_counter()
    graphs = list(all_graphs(5))
    parts = partitions_of(5)
    mismatches = 0
    for g in graphs:
        f = csf_m(g)
        mismatches += sum(f[lam] != coloring_count_oracle(g, lam) for lam in parts)
    ok = mismatches == 0 and len(graphs) == 1024
    report(5, ok, f"{len(graphs)} graphs x {len(parts)} partitions, {mismatches} mismatches", start)
    assert ok


@pytest.fixture(scope="module")
def desk_scale_run():
    start = time.perf_counter()
    main = search(6, "2k2-unit-interval", connected=True, workers=4)
    ctf = search(6, "co-triangle-free", workers=4)
    return main, ctf, start


def test_criterion_6_main_theorem_desk_scale(report, desk_scale_run):
    main, _, start = desk_scale_run
    in_class = sum(t.in_class for t in main)
    negative = sum(t.negative for t in main)
    certified = sum(t.certified for t in main)
    ok = in_class > 0 and negative == 0 and certified == in_class
    report(6, ok, f"{in_class} connected 2K2-free unit interval graphs on <=6 vertices, "
                  f"{negative} negative, {certified} certified", start)
    assert ok


def test_criterion_7_co_triangle_free(report, desk_scale_run):
    _, ctf, start = desk_scale_run
    in_class = sum(t.in_class for t in ctf)
    negative = sum(t.negative for t in ctf)
    ok = in_class > 0 and negative == 0
    report(7, ok, f"{in_class} co-triangle-free graphs on <=6 vertices, {negative} negative", start)
    assert ok


def test_criterion_8_sanity_fixtures(report):
    start = time.perf_counter()
    fact = 1
    complete_ok = True
    for n in range(1, 7):
        fact *= n
        complete_ok &= csf_e(complete_graph(n)) == SymPoly(Basis.E, n, {(n,): fact})
    gp_ok = csf_e(build_gp(0, 0, 0)) == SymPoly.single(Basis.E, (1, 1, 1))
    claw_ok = not e_positivity(build_pattern("claw")).positive
    ok = complete_ok and gp_ok and claw_ok
    report(8, ok, f"K_n n<=6 {complete_ok}, GP(0,0,0) {gp_ok}, claw negative {claw_ok}", start)
    assert ok
