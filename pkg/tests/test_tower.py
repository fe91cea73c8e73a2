"""Tower shapes: validation, enumeration, depths, jumps, selectors."""

from __future__ import annotations

from fractions import Fraction

import pytest

from tametori.csa import CsaParams
from tametori.errors import (
    IndexOutOfRange,
    NonIncreasingLevels,
    NonStrictTower,
    NotASubgroup,
    UnramifiedViolation,
)
from tametori.localfield import (
    enumerate_group,
    inertia_order,
    interval_subgroups,
    inverse,
)
from tametori.roots import enumerate_orbits
from tametori.tower import (
    TowerShape,
    depth_index,
    enumerate_shapes,
    jump_data,
    parse_selector,
    subgroup_selector,
    validate_shape,
)

from conftest import model, shape_from_bottoms, shape_t0


def full_group(X):
    return interval_subgroups(X)[-1]


def test_validate_t0_always_ok():
    for params in [(3, 2, 1, 0), (5, 2, 2, 0), (3, 1, 4, 0), (7, 4, 1, 0)]:
        X = model(*params)
        validate_shape(X, shape_t0(X))  # must not raise


def test_validate_unramified_bottom():
    X = model(3, 2, 1)
    # E_0 = E: Gal(L/E) is trivial here and has trivial inertia
    ok = TowerShape(subgroups=(X.gamma_E, full_group(X)), levels=(1,))
    validate_shape(X, ok)
    # E_0 = F: the full group has inertia of order e = 2
    bad = TowerShape(subgroups=(full_group(X), full_group(X)), levels=(1,))
    with pytest.raises(UnramifiedViolation):
        validate_shape(X, bad)


def test_validate_unramified_checked_before_strictness():
    """The E_0 = F chain above is ALSO non-strict; unramifiedness wins."""
    X = model(5, 4, 1)
    bad = TowerShape(subgroups=(full_group(X), full_group(X)), levels=(1,))
    with pytest.raises(UnramifiedViolation):
        validate_shape(X, bad)


def test_validate_structural_errors():
    X = model(5, 2, 2)
    full = full_group(X)
    with pytest.raises(NonStrictTower):
        validate_shape(X, TowerShape(subgroups=(full,), levels=(1,)))
    with pytest.raises(NotASubgroup):
        validate_shape(X, TowerShape(subgroups=(X.gamma_E,), levels=()))
    with pytest.raises(NotASubgroup):
        not_closed = (X.gamma_E[0], X.sigma, full[3])
        validate_shape(X, TowerShape(subgroups=(not_closed, full), levels=(1,)))
    with pytest.raises(NonIncreasingLevels):
        validate_shape(X, TowerShape(subgroups=(X.gamma_E, full), levels=(0,)))
    mids = [H for H in interval_subgroups(X) if 1 < len(H) < len(full)]
    chain = (X.gamma_E, mids[0], full)
    with pytest.raises(NonIncreasingLevels):
        validate_shape(X, TowerShape(subgroups=chain, levels=(2, 2)))
    with pytest.raises(NonIncreasingLevels):
        validate_shape(X, TowerShape(subgroups=chain, levels=(3, 1)))
    validate_shape(X, TowerShape(subgroups=chain, levels=(1, 4)))


def test_enumerate_shapes_3_2_1():
    """Interval lattice is {Gal(L/E), full}; only E_0 = E is unramified, so
    with max_t=1, max_level=2 there are exactly 1 + 2 shapes."""
    X = model(3, 2, 1)
    shapes = enumerate_shapes(X, 1, 2)
    assert len(shapes) == 3
    assert shapes[0].t == 0 and shapes[0].levels == ()
    assert {s.levels for s in shapes[1:]} == {(1,), (2,)}
    assert all(s.subgroups[0] == X.gamma_E for s in shapes[1:])


def test_enumerate_shapes_counts():
    X = model(3, 1, 4)
    # interval lattice is the subgroup chain of Z/4: orders 1, 2, 4, all with
    # trivial inertia; t=1 bottoms: orders 1 and 2; t=2 chain: 1 < 2 < 4
    shapes = enumerate_shapes(X, 2, 3)
    t0 = [s for s in shapes if s.t == 0]
    t1 = [s for s in shapes if s.t == 1]
    t2 = [s for s in shapes if s.t == 2]
    assert len(t0) == 1
    assert len(t1) == 2 * 3  # 2 bottoms x 3 level choices
    assert len(t2) == 1 * 3  # 1 chain x C(3,2) level pairs
    for s in shapes:
        validate_shape(X, s)


def test_enumerate_shapes_skips_ramified_bottoms():
    X = model(5, 4, 1)
    shapes = enumerate_shapes(X, 1, 1)
    for s in shapes:
        if s.t >= 1:
            assert inertia_order(X, s.subgroups[0]) == 1


def test_depth_t0_is_minus_one():
    X = model(5, 2, 2)
    shape = shape_t0(X)
    for g in enumerate_group(X):
        assert depth_index(X, shape, g) == -1


def test_depth_frozen_3_1_4():
    X = model(3, 1, 4)
    subs = interval_subgroups(X)
    shape = TowerShape(subgroups=(subs[0], subs[1], subs[2]), levels=(1, 2))
    # phi and phi^3 lie outside the order-2 subgroup: depth 1;
    # phi^2 lies in it but not in Gal(L/E): depth 0
    by_c = {g.c: g for g in enumerate_group(X)}
    assert depth_index(X, shape, by_c[0]) == -1
    assert depth_index(X, shape, by_c[1]) == 1
    assert depth_index(X, shape, by_c[2]) == 0
    assert depth_index(X, shape, by_c[3]) == 1


def test_depth_constant_on_double_cosets_and_inverse():
    for params in [(3, 2, 2, 0), (5, 2, 2, 0), (3, 2, 1, 1), (7, 4, 1, 0)]:
        X = model(*params)
        for shape in enumerate_shapes(X, 2, 2):
            for o in enumerate_orbits(X):
                d = depth_index(X, shape, o.rep)
                assert depth_index(X, shape, inverse(X, o.rep)) == d
                for i, j in o.labels:
                    from tametori.roots import coset_element

                    assert depth_index(X, shape, coset_element(X, i, j)) == d


def test_jump_data_frozen():
    X = model(3, 1, 4)
    A = CsaParams(2, 2, 1)
    subs = interval_subgroups(X)
    # one-step tower E_0 = E: the k=0 centralizer chain ends at A itself
    flat = TowerShape(subgroups=(subs[0], subs[2]), levels=(1,))
    j0 = jump_data(X, A, flat, 0)
    assert (j0.level, j0.e_next) == (1, 2)
    assert j0.product_even is True
    assert j0.j_k == Fraction(1 * 2, 2) == 1
    # two-step tower through the quadratic subfield: A_1 is split over E_1,
    # so e_next drops to 1 and level 1 makes the product odd
    deep = TowerShape(subgroups=(subs[0], subs[1], subs[2]), levels=(1, 2))
    d0 = jump_data(X, A, deep, 0)
    assert (d0.level, d0.e_next) == (1, 1)
    assert d0.product_even is False
    assert d0.j_k == 1
    d1 = jump_data(X, A, deep, 1)
    assert (d1.level, d1.e_next) == (2, 2)
    assert d1.product_even is True
    assert d1.j_k == 2
    with pytest.raises(IndexOutOfRange):
        jump_data(X, A, deep, 2)
    with pytest.raises(IndexOutOfRange):
        jump_data(X, A, deep, -1)


def test_jump_data_even_product_3_1_2():
    X = model(3, 1, 2)
    A = CsaParams(1, 2, 1)
    shape = shape_from_bottoms(X, [X.gamma_E], (1,))
    j0 = jump_data(X, A, shape, 0)
    assert (j0.e_next, j0.product_even) == (2, True)
    assert j0.j_k == 1


def test_selector_roundtrip():
    for params in [(3, 1, 4, 0), (5, 2, 2, 0), (3, 2, 1, 1), (7, 6, 1, 0)]:
        X = model(*params)
        for H in interval_subgroups(X):
            token = subgroup_selector(X, H)
            assert parse_selector(X, token) == H
        assert parse_selector(X, "E") == X.gamma_E
        assert parse_selector(X, "F") == interval_subgroups(X)[-1]


def test_selector_degree_semantics():
    X = model(3, 1, 4)
    assert subgroup_selector(X, X.gamma_E) == "4.0"
    assert subgroup_selector(X, interval_subgroups(X)[-1]) == "1.0"
    assert parse_selector(X, "2") == parse_selector(X, "2.0")
    with pytest.raises(KeyError):
        parse_selector(X, "3.0")
    with pytest.raises(KeyError):
        parse_selector(X, "2.5")
    with pytest.raises(KeyError):
        parse_selector(X, "x")


def test_depth_layers_partition_group():
    """Every element gets exactly one depth in -1..t-1 and layer sizes sum."""
    X = model(5, 2, 2)
    for shape in enumerate_shapes(X, 2, 3):
        counts = {}
        for g in enumerate_group(X):
            d = depth_index(X, shape, g)
            assert -1 <= d < max(shape.t, 1)
            counts[d] = counts.get(d, 0) + 1
        assert sum(counts.values()) == X.e * X.f_L
        assert counts.get(-1, 0) == len(shape.subgroups[0])
        for k in range(shape.t):
            expected = len(shape.subgroups[k + 1]) - len(shape.subgroups[k])
            assert counts.get(k, 0) == expected
