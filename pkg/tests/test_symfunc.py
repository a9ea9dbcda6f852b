import json

import pytest
from hypothesis import given, settings, strategies as st

from chromsym.partition import Partition, conjugate, dominance_leq, partitions_of
from chromsym.symfunc import (
    Basis,
    BasisError,
    IntegralityError,
    SymPoly,
    count_01_matrices,
    e_to_m,
    m_to_e,
    m_to_mtilde,
    mtilde_to_m,
    multiply_e,
    sympoly_e_expand,
    to_basis,
)
from chromsym.theorems import transition_identities

from conftest import brute_01_count, brute_elementary_monomial

E, M, MT = Basis.E, Basis.M, Basis.MTILDE


def ones(k):
    return (1,) * k


def test_count_01_examples():
    i = 5
    assert count_01_matrices((i + 1, 2), (2,) + ones(i + 1)) == i + 1
    # brute-force count of 2x3 matrices, frozen
    assert brute_01_count((2, 1), (1, 1, 1)) == 3
    assert count_01_matrices((2, 1), (1, 1, 1)) == 3
    with pytest.raises(ValueError):
        count_01_matrices((2, 1), (2, 2))


@pytest.mark.parametrize("n", range(1, 7))
def test_count_01_matches_brute_force(n):
    for lam in partitions_of(n):
        for mu in partitions_of(n):
            if len(lam) * len(mu) <= 16:
                assert count_01_matrices(lam, mu) == brute_01_count(lam, mu), (lam, mu)


@pytest.mark.parametrize("n", range(1, 9))
def test_count_01_transpose_symmetry_and_vanishing(n):
    cache = {}
    ps = partitions_of(n)
    for lam in ps:
        for mu in ps:
            c = count_01_matrices(lam, mu, cache)
            assert c == count_01_matrices(mu, lam, cache)
            if not dominance_leq(lam, conjugate(mu)):
                assert c == 0


@pytest.mark.parametrize("n", range(1, 11))
def test_count_01_unitriangular(n):
    assert all(count_01_matrices(lam, conjugate(lam)) == 1 for lam in partitions_of(n))


@pytest.mark.parametrize("n", range(1, 6))
def test_e_to_m_matches_polynomial_expansion(n):
    for lam in partitions_of(n):
        f = e_to_m(lam)
        for mu in partitions_of(n):
            assert f[mu] == brute_elementary_monomial(lam, mu), (lam, mu)


def test_e_to_m_examples():
    assert e_to_m((4, 1)) == SymPoly(M, 5, {(2, 1, 1, 1): 1, ones(5): 5})
    assert e_to_m((4, 2)) == SymPoly(M, 6, {(2, 2, 1, 1): 1, (2, 1, 1, 1, 1): 4, ones(6): 15})
    for n in range(1, 8):
        assert e_to_m((n,)) == SymPoly.single(M, ones(n))


@pytest.mark.parametrize("i", range(3, 9))
def test_transition_identities(i):
    for lam, expected in transition_identities(i).items():
        assert e_to_m(lam) == expected


def test_e_expand_examples():
    assert sympoly_e_expand(SymPoly.single(E, (1,))) == SymPoly.single(M, (1,))
    # e_2 = m_11 and e_1^2 = m_2 + 2 m_11
    f = SymPoly(E, 2, {(2,): 2, (1, 1): 1})
    assert sympoly_e_expand(f) == SymPoly(M, 2, {(1, 1): 4, (2,): 1})
    assert sympoly_e_expand(SymPoly(E, 2, {(2,): 1, (1, 1): 1})) == SymPoly(M, 2, {(1, 1): 3, (2,): 1})
    assert sympoly_e_expand(SymPoly.zero(E, 4)) == SymPoly.zero(M, 4)


def test_m_to_e_examples():
    for n in range(1, 8):
        assert m_to_e(SymPoly.single(M, ones(n))) == SymPoly.single(E, (n,))
    # inverting e_{(4,1)} = m_{2111} + 5 m_{11111} and e_5 = m_{11111}
    assert m_to_e(SymPoly.single(M, (2, 1, 1, 1))) == SymPoly(E, 5, {(4, 1): 1, (5,): -5})
    # the degree-4 analogue from e_{(3,1)} = m_{211} + 4 m_{1111}
    assert m_to_e(SymPoly.single(M, (2, 1, 1))) == SymPoly(E, 4, {(3, 1): 1, (4,): -4})


@st.composite
def e_polys(draw):
    n = draw(st.integers(0, 9))
    ps = partitions_of(n)
    keys = draw(st.lists(st.sampled_from(ps), max_size=6))
    return SymPoly(E, n, {k: draw(st.integers(-10**6, 10**6)) for k in keys})


@settings(max_examples=200, deadline=None)
@given(e_polys())
def test_m_to_e_round_trip(f):
    assert m_to_e(sympoly_e_expand(f)) == f


def test_mtilde_scaling():
    assert mtilde_to_m(SymPoly.single(MT, (1, 1))) == SymPoly(M, 2, {(1, 1): 2})
    assert mtilde_to_m(SymPoly.single(MT, (2, 2, 1))) == SymPoly(M, 5, {(2, 2, 1): 2})
    assert mtilde_to_m(SymPoly.single(MT, (3,))) == SymPoly.single(M, (3,))
    f = SymPoly(M, 4, {(2, 1, 1): 6, (1, 1, 1, 1): 48})
    assert mtilde_to_m(m_to_mtilde(f)) == f
    with pytest.raises(IntegralityError):
        m_to_mtilde(SymPoly(M, 2, {(1, 1): 3}))


def test_multiply_e():
    e1 = SymPoly.single(E, (1,))
    assert multiply_e(e1, e1) == SymPoly.single(E, (1, 1))
    assert multiply_e(SymPoly.single(E, (3,)), SymPoly.single(E, (2, 1))) == SymPoly.single(E, (3, 2, 1))
    f = SymPoly(E, 2, {(2,): 1, (1, 1): 1})
    assert multiply_e(f, e1) == SymPoly(E, 3, {(2, 1): 1, (1, 1, 1): 1})


def test_basis_guards():
    with pytest.raises(BasisError):
        m_to_e(SymPoly.single(E, (2,)))
    with pytest.raises(BasisError):
        SymPoly.single(E, (2,)) + SymPoly.single(M, (2,))


def test_sympoly_invariants():
    f = SymPoly(E, 3, {(2, 1): 0, (3,): 2, (1, 1, 1): -1})
    assert dict(f.coeffs) == {(3,): 2, (1, 1, 1): -1}
    assert f - f == SymPoly.zero(E, 3)
    assert f != SymPoly(E, 3, {(3,): 2, (1, 1, 1): -1, (2, 1): 1})
    assert SymPoly.single(E, (2,)) != SymPoly.single(M, (2,))
    with pytest.raises(ValueError):
        SymPoly(E, 3, {(2,): 1})


def test_json_format_and_round_trip():
    f = SymPoly(E, 6, {(4, 1, 1): 6, (6,): 10**30, (3, 3): -2})
    text = f.to_json()
    data = json.loads(text)
    assert data["basis"] == "E" and data["degree"] == 6
    assert [t["partition"] for t in data["terms"]] == [[6], [4, 1, 1], [3, 3]]
    assert data["terms"][0]["coeff"] == str(10**30)
    assert SymPoly.from_json(text) == f
    assert SymPoly.from_json(text).to_json() == text


def test_render():
    f = SymPoly(E, 4, {(4,): 4, (3, 1): 5, (2, 2): -2, (2, 1, 1): 1})
    assert f.render() == "4·e[4] + 5·e[3,1] - 2·e[2,2] + 1·e[2,1,1]"
    assert SymPoly(E, 2, {(2,): -1}).render() == "-1·e[2]"
    assert SymPoly.zero(M, 3).render() == "0"


def test_to_basis_cycle():
    f = SymPoly(MT, 4, {(2, 1, 1): 3, (1, 1, 1, 1): 1, (2, 2): 1})
    assert to_basis(to_basis(f, E), MT) == f
    assert to_basis(f, M) == mtilde_to_m(f)
