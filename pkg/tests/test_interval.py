import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles as O
from ivrough import (Interval, IntervalError, SimilarityFamily, exact_similarity, hull, intersect,
                     mean_interval, parse_interval, sim_sf, sim_ss, sim_st, similarity,
                     similarity_matrix)
from ivrough.interval import format_interval

SIMS = {"sf": sim_sf, "ss": sim_ss, "st": sim_st}

# endpoints on a 0.01 grid keep the exact oracle cheap and hit ties often
grid = st.integers(min_value=-300, max_value=300).map(lambda k: k / 100)


@st.composite
def intervals(draw):
    a, b = draw(grid), draw(grid)
    return Interval(min(a, b), max(a, b))


def test_construction_rejects_reversed_and_nonfinite():
    with pytest.raises(IntervalError, match="exceeds"):
        Interval(0.5, 0.2)
    for bad in (math.nan, math.inf, -math.inf):
        with pytest.raises(IntervalError):
            Interval(0.0, bad)


def test_length_and_point():
    assert Interval(0.25, 1.0).length == 0.75
    assert Interval(3, 3).is_point
    assert not Interval(0, 1).is_point


def test_intersect_and_hull():
    assert intersect(Interval(0, 0.5), Interval(0.2, 0.6)) == Interval(0.2, 0.5)
    assert intersect(Interval(0, 1), Interval(2, 3)) is None
    assert intersect(Interval(1, 2), Interval(2, 3)) == Interval(2, 2)
    assert hull(Interval(0, 0.5), Interval(0.2, 0.6)) == Interval(0, 0.6)
    assert hull(Interval(0, 1), Interval(2, 3)) == Interval(0, 3)
    u = Interval(1.5, 4)
    assert hull(u, u) == u


@pytest.mark.parametrize("u, v, expected", [
    ((0, 0.5), (0.2, 0.6), {"sf": 0.5, "ss": 0.75, "st": 2 / 3}),
    ((0, 1), (2, 3), {"sf": 0.0, "ss": 1 / 3, "st": 0.0}),
    ((0, 0.5), (0, 0.5), {"sf": 1.0, "ss": 1.0, "st": 1.0}),
    ((5, 5), (5, 5), {"sf": 1.0, "ss": 1.0, "st": 1.0}),
])
def test_reference_values(u, v, expected):
    u, v = Interval(*u), Interval(*v)
    for fam, value in expected.items():
        assert SIMS[fam](u, v) == pytest.approx(value, abs=1e-15)
        assert float(O.SIM[fam](O.iv(u.lo, u.hi), O.iv(v.lo, v.hi))) == pytest.approx(value, abs=1e-15)


def test_st_degenerate_points():
    assert sim_st(Interval(2, 2), Interval(2, 2)) == 1.0
    assert sim_st(Interval(2, 2), Interval(3, 3)) == 0.0
    assert sim_st(Interval(3, 3), Interval(2, 2)) == 0.0


def test_point_inside_interval():
    u, p = Interval(0, 1), Interval(0.5, 0.5)
    assert sim_sf(u, p) == 0.0
    assert sim_st(u, p) == 1.0
    assert sim_ss(u, p) == 0.5


def test_family_coercion():
    assert SimilarityFamily.coerce("ST") is SimilarityFamily.ST
    assert SimilarityFamily.coerce(SimilarityFamily.SS) is SimilarityFamily.SS
    assert str(SimilarityFamily.SF) == "SF"
    with pytest.raises(ValueError, match="unknown similarity family"):
        SimilarityFamily.coerce("sx")


@settings(max_examples=300, deadline=None)
@given(intervals(), intervals())
def test_range_and_symmetry(u, v):
    for fam in SimilarityFamily:
        s = similarity(fam, u, v)
        assert 0.0 <= s <= 1.0
        assert s == similarity(fam, v, u)
        assert similarity(fam, u, u) == 1.0


@settings(max_examples=300, deadline=None)
@given(intervals(), intervals())
def test_against_rational_oracle(u, v):
    ue, ve = O.iv(u.lo, u.hi), O.iv(v.lo, v.hi)
    for fam in SimilarityFamily:
        exact = O.SIM[fam.value](ue, ve)
        assert similarity(fam, u, v) == pytest.approx(float(exact), abs=1e-12)
        assert exact_similarity(fam, u, v) == exact


@settings(max_examples=300, deadline=None)
@given(intervals(), intervals())
def test_sf_and_ss_separate_distinct_values(u, v):
    if u != v:
        assert sim_sf(u, v) < 1.0
        assert sim_ss(u, v) < 1.0


def test_st_does_not_separate_concentric_values():
    # P(u >= v) = P(v >= u) whenever the midpoints coincide, so ST cannot
    # tell concentric intervals apart
    assert sim_st(Interval(0.4, 0.6), Interval(0, 1)) == 1.0
    assert sim_st(Interval(2, 2), Interval(1, 3)) == 1.0


@settings(max_examples=500, deadline=None)
@given(intervals(), intervals())
def test_st_dominates_sf(u, v):
    assert sim_st(u, v) >= sim_sf(u, v) - 1e-12


@settings(max_examples=500, deadline=None)
@given(intervals(), intervals())
def test_ss_dominates_st_unless_nested(u, v):
    nested = (u.lo <= v.lo and v.hi <= u.hi) or (v.lo <= u.lo and u.hi <= v.hi)
    if not nested or u == v:
        assert sim_ss(u, v) >= sim_st(u, v) - 1e-12


def test_ss_below_st_for_nested_pair():
    u, v = Interval(0.4, 0.6), Interval(0, 1)
    assert sim_ss(u, v) == pytest.approx(0.6)
    assert sim_st(u, v) == 1.0


def test_similarity_matrix_matches_scalar(rng):
    lo = np.round(rng.uniform(0, 1, 15), 2)
    hi = lo + np.round(rng.uniform(0, 0.5, 15), 2)
    for fam in SimilarityFamily:
        mat = similarity_matrix(lo, hi, fam)
        assert mat.shape == (15, 15)
        for i in range(15):
            for j in range(15):
                assert mat[i, j] == similarity(fam, Interval(lo[i], hi[i]), Interval(lo[j], hi[j]))
        assert np.array_equal(mat, mat.T)


def test_mean_interval_is_exact_decimal_mean():
    values = [Interval(0, 0.5), Interval(0.2, 0.6), Interval(0.1, 0.8), Interval(0, 0.9)]
    assert mean_interval(values) == Interval(0.075, 0.7)
    assert mean_interval([Interval(1, 2)]) == Interval(1, 2)
    with pytest.raises(IntervalError):
        mean_interval([])


@settings(max_examples=200, deadline=None)
@given(st.lists(intervals(), min_size=1, max_size=8))
def test_mean_interval_against_oracle(values):
    lo, hi = O.mean([O.iv(v.lo, v.hi) for v in values])
    m = mean_interval(values)
    assert (m.lo, m.hi) == (float(lo), float(hi))


@pytest.mark.parametrize("text, expected", [
    ("0:0.5", Interval(0, 0.5)),
    (" 1.5 : 2 ", Interval(1.5, 2)),
    ("7", Interval(7, 7)),
    ("-1e-3:0", Interval(-0.001, 0)),
])
def test_parse_interval(text, expected):
    assert parse_interval(text) == expected


@pytest.mark.parametrize("text", ["0.5:0.2", "a:1", "1:", ":", "1:2:3", "nan:1", ""])
def test_parse_interval_rejects(text):
    with pytest.raises(IntervalError):
        parse_interval(text)


@settings(max_examples=200, deadline=None)
@given(intervals())
def test_format_round_trip(u):
    assert parse_interval(format_interval(u)) == u
