from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import CARTAN, SMALL_TYPES, coroot_coords_to_diagonal, orbit_dimension_sl
from slfmirror.hodge import flag_poincare
from slfmirror.roots import build_root_system, is_regular, reflect, stabilizer_data
from slfmirror.slf import (
    DEGENERATE,
    LEFSCHETZ,
    PointOrbitError,
    critical_set,
    critical_values,
    fiber_betti,
    orbit_dimension,
    slf_report,
)

A1 = build_root_system("A1")
A2 = build_root_system("A2")
W1 = (F(2, 3), F(1, 3))


def test_critical_set_examples():
    assert critical_set(A1, (1,)) == [(-1,), (1,)]
    assert len(critical_set(A2, W1)) == 3
    assert critical_set(A2, (0, 0)) == [(0, 0)]


def test_critical_values_a1_two_normalizations():
    values, collisions = critical_values(A1, (1,), critical_set(A1, (1,)))
    assert values == [-2, 2] and collisions == []
    # trace form on sl(2): tr(diag(1,-1) * (+-diag(1,-1))) = +-2
    h = [1, -1]
    assert [sum(s * a * b for a, b in zip(h, h)) for s in (-1, 1)] == [-2, 2]


def test_critical_values_a2():
    values, collisions = critical_values(A2, (1, 1), critical_set(A2, W1))
    assert values == [-1, 0, 1]
    assert len(set(values)) == 3 and collisions == []


def test_critical_values_zero_h():
    points = critical_set(A2, W1)
    values, collisions = critical_values(A2, (0, 0), points)
    assert values == [0, 0, 0] and collisions == [[0, 1, 2]]


def test_orbit_dimension_examples():
    assert orbit_dimension(A1, (1,)) == (2, 4)
    assert orbit_dimension(A2, W1) == (4, 8)
    assert orbit_dimension(A2, (1, 1)) == (6, 12)


@pytest.mark.parametrize("coords", [(1,), (1, 0), (1, 1), (2, 1, 0), (1, 2, 1), (0, 1, 0), (3, 1, -1, 2)])
def test_orbit_dimension_matches_centralizer_in_sl(coords):
    rs = build_root_system(f"A{len(coords)}")
    # A_n is simply laced, so coroot and root coordinates agree
    assert orbit_dimension(rs, coords)[0] == orbit_dimension_sl(coroot_coords_to_diagonal(coords))


def test_fiber_betti_examples():
    assert fiber_betti(A1, (1,)) == [1, 1, 0]
    assert fiber_betti(A2, W1) == [1, 0, 1, 2, 0]
    assert fiber_betti(A2, (1, 1)) == [1, 0, 2, 0, 2, 5, 0]
    with pytest.raises(PointOrbitError, match="orbit is a point"):
        fiber_betti(A1, (0,))


def test_fiber_betti_euler_characteristic():
    # chi(F0 minus k points) = chi(F0) - k
    for name in SMALL_TYPES:
        rs = build_root_system(name)
        h0 = rs.from_weight_basis([1] + [0] * (rs.rank - 1))
        b = fiber_betti(rs, h0)
        flag = flag_poincare(rs, stabilizer_data(rs, h0).theta)
        k = stabilizer_data(rs, h0).orbit_index
        chi = sum((-1) ** i * x for i, x in enumerate(b))
        assert chi == sum((-1) ** i * x for i, x in enumerate(flag)) - k


def test_report_sl2():
    r = slf_report(A1, (1,), (1,))
    assert r.status == LEFSCHETZ and r.k == 2
    assert r.critical_points == [(-1,), (1,)]
    assert r.orbit_dim_real == 4 and r.middle_betti == 1


def test_report_a2_minimal():
    r = slf_report(A2, W1, (1, 1))
    assert r.status == LEFSCHETZ and r.k == 3
    assert len(set(r.critical_values)) == 3


def test_report_degenerate_h():
    r = slf_report(A2, W1, W1)
    assert r.status == DEGENERATE and not r.h_regular
    assert r.regularity_witness == (0, 1)
    assert any("not regular" in e for e in r.explanation)


def test_report_regular_h_with_collisions_is_degenerate():
    # <a1, w.rho> = (height of w^-1 a1) takes the values +-1, +-1, +-2
    h = (F(1), F(0))
    assert is_regular(A2, h)[0]
    r = slf_report(A2, (1, 1), h)
    assert r.h_regular and r.status == DEGENERATE
    assert sorted(r.critical_values) == [-2, -1, -1, 1, 1, 2]
    assert len(r.value_collisions) == 2


def test_report_size_only_mode():
    e8 = build_root_system("E8")
    rho = e8.from_weight_basis([1] * 8)
    r = slf_report(e8, rho, rho)
    assert r.points_truncated and r.critical_points is None
    assert r.k == 696729600
    assert r.middle_betti == r.k - 1
    assert sum(r.flag_betti) == 696729600


def test_report_point_orbit():
    with pytest.raises(PointOrbitError):
        slf_report(A1, (0,), (1,))


@st.composite
def report_inputs(draw):
    name = draw(st.sampled_from(SMALL_TYPES))
    rank = len(CARTAN[name])
    rat = st.fractions(min_value=-3, max_value=3, max_denominator=4)
    h0 = tuple(draw(st.lists(rat, min_size=rank, max_size=rank).filter(any)))
    h = tuple(draw(st.lists(rat, min_size=rank, max_size=rank)))
    scale = draw(st.fractions(min_value=F(1, 5), max_value=7, max_denominator=5))
    word = draw(st.lists(st.integers(0, rank - 1), max_size=6))
    return name, h0, h, scale, word


@settings(max_examples=60, deadline=None)
@given(report_inputs())
def test_report_invariants(data):
    name, h0, h, scale, word = data
    rs = build_root_system(name)
    r = slf_report(rs, h0, h)
    d = r.flag_dim_real
    assert r.fiber_betti[d - 1] == r.k - 1
    assert sum(r.fiber_betti) == sum(r.flag_betti) + r.k - 2
    assert len(r.critical_points) == r.k

    scaled = slf_report(rs, h0, tuple(scale * x for x in h))
    assert scaled.critical_values == [scale * v for v in r.critical_values]
    assert scaled.critical_points == r.critical_points
    assert scaled.value_collisions == r.value_collisions
    assert scaled.fiber_betti == r.fiber_betti and scaled.k == r.k

    wh0, wh = h0, h
    for i in word:
        wh0, wh = reflect(rs, i, wh0), reflect(rs, i, wh)
    moved = slf_report(rs, wh0, wh)
    assert sorted(moved.critical_values) == sorted(r.critical_values)
    assert set(moved.critical_points) == {tuple(p) for p in r.critical_points}
