import itertools
import math

import pytest
from hypothesis import given, strategies as st

from artifact.admissible import (DegreeSet, is_admissible, parse_degree_set, phi_family,
                                 set_ops)


def subsets_with_zero(top):
    rest = range(1, top + 1)
    for k in range(len(rest) + 1):
        for c in itertools.combinations(rest, k):
            yield DegreeSet((0,) + c)


def brute_admissible(S):
    """Literal reading of the definition, written independently of the library."""
    S = set(S)
    if 0 not in S:
        return False
    for i in S:
        for j in S:
            for k in S:
                if i + j + k in S and ((i + j in S) != (j + k in S)):
                    return False
    return True


ADMISSIBLE_UP_TO_8 = [S for S in subsets_with_zero(8) if brute_admissible(S)]


def test_basic_admissible_sets():
    assert is_admissible({0, 3, 4}).admissible
    assert is_admissible({0, 1, 2, 3, 4}).admissible
    assert is_admissible({0}).admissible


def test_squares_not_admissible_with_witness():
    r = is_admissible({0, 9, 16, 25, 144, 169})
    assert not r.admissible
    assert r.witness == (9, 16, 144)
    i, j, k = r.witness
    S = {0, 9, 16, 25, 144, 169}
    assert i + j + k in S and ((i + j in S) != (j + k in S))


def test_missing_zero():
    r = is_admissible({1, 2})
    assert not r.admissible and r.witness == "missing-zero"


def test_phi_family_examples():
    assert phi_family(2, 3) == DegreeSet({0, 2, 4, 6})
    assert phi_family(1, 0) == DegreeSet({0})
    assert phi_family(1, math.inf, cap=5) == DegreeSet(range(6))
    with pytest.raises(ValueError):
        phi_family(0, 3)
    with pytest.raises(ValueError):
        phi_family(1, math.inf)


@pytest.mark.parametrize("n", range(1, 5))
@pytest.mark.parametrize("m", range(0, 7))
def test_phi_family_admissible(n, m):
    assert is_admissible(phi_family(n, m)).admissible


def test_set_ops_examples():
    r = set_ops({0, 1, 2}, op="scale", m=3)
    assert r.result == DegreeSet({0, 3, 6}) and r.admissible_report
    r = set_ops({0, 3, 4}, {0, 4, 8}, op="intersect")
    assert r.result == DegreeSet({0, 4}) and r.admissible_report
    r = set_ops({0, 3, 4, 5, 12, 13}, op="power", m=2)
    assert r.result == DegreeSet({0, 9, 16, 25, 144, 169}) and not r.admissible_report
    with pytest.raises(ValueError):
        set_ops({0}, op="power", m=0)


def test_parse_degree_set():
    assert parse_degree_set("0,3, 4") == DegreeSet({0, 3, 4})
    with pytest.raises(ValueError):
        parse_degree_set("0,x")


def test_recognizer_matches_definition_exhaustively():
    for S in subsets_with_zero(8):
        assert is_admissible(S).admissible == brute_admissible(S), S


def test_intersections_of_admissible_sets():
    for S1, S2 in itertools.combinations_with_replacement(ADMISSIBLE_UP_TO_8, 2):
        assert set_ops(S1, S2, op="intersect").admissible_report


@pytest.mark.parametrize("m", range(1, 5))
def test_scaling_admissible_sets(m):
    for S in ADMISSIBLE_UP_TO_8:
        assert set_ops(S, op="scale", m=m).admissible_report


def test_cubes_admissible():
    for S in subsets_with_zero(8):
        assert set_ops(S, op="power", m=3).admissible_report, S


@given(st.sets(st.integers(0, 12), max_size=7))
def test_witness_is_a_violation(S):
    r = is_admissible(S)
    if r.admissible:
        assert brute_admissible(S)
    elif r.witness != "missing-zero":
        i, j, k = r.witness
        assert {i, j, k} <= S and i + j + k in S
        assert (i + j in S) != (j + k in S)
