"""Shared fixtures: the acceptance grid and small shape-building helpers."""

from __future__ import annotations

import pytest

from tametori.identities import GridSpec
from tametori.localfield import ExtensionParams, build_extension
from tametori.tower import TowerShape, interval_subgroups, validate_shape

# The main verification universe: every tame (e, f) with e*f <= 8 over small
# odd residue cardinalities, w = 0 plus two sampled nonzero presentations,
# every inner form, every tower shape with t <= 2 and levels <= 6.
ACCEPT_GRID = GridSpec(
    q_list=(3, 5, 7, 9, 11),
    n_max=8,
    w_extra=2,
    w_seed=20260817,
    t_max=2,
    a_max=6,
)


def model(q, e, f, w=0):
    return build_extension(ExtensionParams(q, e, f, w))


def shape_t0(X) -> TowerShape:
    full = interval_subgroups(X)[-1]
    return TowerShape(subgroups=(full,), levels=())


def shape_from_bottoms(X, bottoms, levels) -> TowerShape:
    full = interval_subgroups(X)[-1]
    shape = TowerShape(subgroups=tuple(bottoms) + (full,), levels=tuple(levels))
    validate_shape(X, shape)
    return shape


@pytest.fixture(scope="session")
def accept_grid() -> GridSpec:
    return ACCEPT_GRID
