import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import ALL_ALGEBRAS, root_system
from doreyrule.root_system import (
    E6_LABELS,
    UnsupportedAlgebra,
    bar_involution,
    build_root_system,
    classical_coxeter_number,
    coxeter_apply,
    coxeter_orbit,
    fundamental_weight,
    plane_angle,
    simple_reflection,
    weight_add,
    weyl_orbit,
    zero_weight,
)

algebras = st.sampled_from(ALL_ALGEBRAS).map(lambda p: root_system(*p))


def weights(rs):
    return st.lists(st.integers(-6, 6), min_size=rs.rank, max_size=rs.rank).map(tuple)


@pytest.mark.parametrize("family,rank,h", [("A", 1, 2), ("A", 4, 5), ("D", 4, 6), ("D", 5, 8), ("E", 6, 12), ("E", 7, 18), ("E", 8, 30)])
def test_coxeter_numbers(family, rank, h):
    rs = build_root_system(family, rank)
    assert rs.h == h == classical_coxeter_number(family, rank)


@pytest.mark.parametrize("family,rank", [("B", 3), ("D", 3), ("E", 9), ("A", 0), ("G", 2)])
def test_unsupported(family, rank):
    with pytest.raises(UnsupportedAlgebra):
        build_root_system(family, rank)


def test_colouring_is_bipartite(any_rs):
    assert any_rs.is_black(1)
    for i in any_rs.nodes:
        for j in any_rs.neighbours(i):
            assert any_rs.is_black(i) != any_rs.is_black(j)


def test_check_node_rejects_absent(any_rs):
    with pytest.raises(ValueError):
        any_rs.check_node(any_rs.rank + 1)


@settings(max_examples=300, deadline=None)
@given(st.data())
def test_reflection_is_involution(data):
    rs = data.draw(algebras)
    mu = data.draw(weights(rs))
    i = data.draw(st.integers(1, rs.rank))
    assert simple_reflection(rs, i, simple_reflection(rs, i, mu)) == mu


def test_colour_classes_commute(any_rs):
    rs = any_rs
    for cls in (rs.black, rs.white):
        for a in cls:
            for b in cls:
                ab = np.array(rs.reflection_matrix(a)) @ np.array(rs.reflection_matrix(b))
                ba = np.array(rs.reflection_matrix(b)) @ np.array(rs.reflection_matrix(a))
                assert (ab == ba).all()
    w = np.array(rs.w_white) @ np.array(rs.w_black)
    assert (w == np.array(rs.coxeter_matrix)).all()


def test_coxeter_order_is_h(any_rs):
    rs = any_rs
    w = np.array(rs.coxeter_matrix, dtype=object)
    ident = np.identity(rs.rank, dtype=object)
    power = ident.copy()
    for k in range(1, rs.h):
        power = w.dot(power)
        assert not (power == ident).all(), k
    assert (w.dot(power) == ident).all()


def test_neighbour_sum_identities(any_rs):
    rs = any_rs
    for i in rs.nodes:
        lam = fundamental_weight(rs, i)
        nsum = weight_add(zero_weight(rs), *(fundamental_weight(rs, j) for j in rs.neighbours(i)))
        power = 1 if not rs.is_black(i) else -1
        assert weight_add(lam, coxeter_apply(rs, lam, power)) == nsum


def test_black_and_white_products_on_weights(any_rs):
    rs = any_rs
    wb = np.array(rs.w_black)
    ww = np.array(rs.w_white)
    for i in rs.nodes:
        lam = np.array(fundamental_weight(rs, i))
        nsum = sum((np.array(fundamental_weight(rs, j)) for j in rs.neighbours(i)), np.zeros(rs.rank, int))
        black_img, white_img = wb @ lam, ww @ lam
        if rs.is_black(i):
            assert (black_img == -lam + nsum).all() and (white_img == lam).all()
        else:
            assert (white_img == -lam + nsum).all() and (black_img == lam).all()


def test_projector(any_rs):
    rs = any_rs
    p = rs.projector
    w = np.array(rs.coxeter_matrix, dtype=float)
    assert np.abs(p @ p - p).max() < 1e-9
    assert np.abs(p @ w - w @ p).max() < 1e-9
    assert round(np.trace(p)) == 2 or rs.h == 2


def test_orbit_sums_vanish(any_rs):
    rs = any_rs
    for i in rs.nodes:
        orb = coxeter_orbit(rs, i)
        assert len(orb) == rs.h
        assert weight_add(*orb) == zero_weight(rs)


def test_orientation_and_branch_cut(any_rs):
    rs = any_rs
    lam = fundamental_weight(rs, 1)
    assert plane_angle(rs, lam, coxeter_apply(rs, lam)) == pytest.approx(2 * math.pi / rs.h, abs=1e-9)
    for n in range(rs.h):
        theta = plane_angle(rs, lam, coxeter_apply(rs, lam, n))
        assert -math.pi < theta <= math.pi
    if rs.h % 2 == 0:
        assert plane_angle(rs, lam, coxeter_apply(rs, lam, rs.h // 2)) == pytest.approx(math.pi)


def test_swapped_colouring_inverts_w(any_rs):
    rs = any_rs
    sw = rs.swapped()
    w = np.array(rs.coxeter_matrix)
    assert (np.array(sw.coxeter_matrix) @ w == np.identity(rs.rank, dtype=int)).all()


@pytest.mark.parametrize(
    "family,rank,expected",
    [
        ("A", 4, {1: 4, 2: 3, 3: 2, 4: 1}),
        ("D", 4, {1: 1, 2: 2, 3: 3, 4: 4}),
        ("D", 5, {1: 1, 2: 2, 3: 3, 4: 5, 5: 4}),
        ("E", 6, {1: 5, 2: 4, 3: 3, 4: 2, 5: 1, 6: 6}),
        ("E", 7, {i: i for i in range(1, 8)}),
    ],
)
def test_bar_involution(family, rank, expected):
    rs = build_root_system(family, rank)
    assert {i: bar_involution(rs, i) for i in rs.nodes} == expected
    assert rs.bar == expected


def test_e6_labels():
    assert E6_LABELS[1] == "lbar" and E6_LABELS[6] == "L" and E6_LABELS[2] == "h"


@pytest.mark.parametrize("family,rank,node,size", [("A", 2, 1, 3), ("D", 5, 2, 40), ("A", 5, 3, 20), ("D", 4, 1, 8), ("E", 6, 1, 27)])
def test_weyl_orbit_sizes(family, rank, node, size):
    rs = build_root_system(family, rank)
    assert len(weyl_orbit(rs, fundamental_weight(rs, node))) == size


def test_weyl_orbit_of_zero_and_cap():
    rs = build_root_system("E", 6)
    assert weyl_orbit(rs, zero_weight(rs)) == {zero_weight(rs)}
    assert weyl_orbit(rs, fundamental_weight(rs, 1), max_size=10) is None


def test_plane_angle_rejects_zero():
    rs = build_root_system("A", 2)
    with pytest.raises(ValueError):
        plane_angle(rs, zero_weight(rs), fundamental_weight(rs, 1))
