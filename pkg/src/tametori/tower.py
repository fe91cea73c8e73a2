"""Subfield towers: chains of subfields of E with strictly increasing jump levels.

A TowerShape is a chain Gal(L/E) <= H_0 < H_1 < ... < H_t = Gal(L/F) of
subgroups (fixed fields E = superset of E_0 > ... > E_t = F read the other way)
together with levels 0 < a_0 < ... < a_{t-1}.  For t >= 1 the bottom step must
keep E/E_0 unramified (its inertia is trivial); a t = 0 shape is the bare
chain [Gal(L/F)] and every root has depth -1 there.

depth_index places a double coset in the unique layer H_{k+1} - H_k it meets;
jump_data packages the layer-k parity and half-integer invariants used by the
finite-module criteria.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .csa import CsaParams, centralizer_invariants, order_invariants
from .errors import (
    IndexOutOfRange,
    NonIncreasingLevels,
    NonStrictTower,
    NotASubgroup,
    UnramifiedViolation,
)
from .localfield import (
    ExtensionModel,
    GaloisElement,
    inertia_order,
    interval_subgroups,
    is_subgroup,
    subfield_invariants,
)

__all__ = [
    "TowerShape",
    "JumpData",
    "validate_shape",
    "enumerate_shapes",
    "depth_index",
    "jump_data",
    "subgroup_selector",
    "parse_selector",
]

Subgroup = tuple[GaloisElement, ...]


@dataclass(frozen=True)
class TowerShape:
    """subgroups = (H_0, ..., H_t) with H_t = Gal(L/F); levels = (a_0, ..., a_{t-1})."""

    subgroups: tuple[Subgroup, ...]
    levels: tuple[int, ...]

    @property
    def t(self) -> int:
        return len(self.levels)


@dataclass(frozen=True)
class JumpData:
    """Layer-k invariants: e_next = e(A_{k+1}/O_E), the parity of
    a_k * e_next, and the half-integer j_k = a_k * e(A/O_E) / 2."""

    k: int
    level: int
    e_next: int
    product_even: bool
    j_k: Fraction


def validate_shape(X: ExtensionModel, shape: TowerShape) -> None:
    """Raise a typed error unless the shape is a valid tower for X.

    Check order matters: unramifiedness of E/E_0 is diagnosed before
    strictness, so a bottom subfield that is simply too small reports
    UnramifiedViolation whatever else is wrong with the chain.
    """
    if len(shape.subgroups) != shape.t + 1:
        raise NonStrictTower(
            f"need t+1={shape.t + 1} subgroups, got {len(shape.subgroups)}"
        )
    gamma = set(X.gamma_E)
    for H in shape.subgroups:
        if not is_subgroup(X, H):
            raise NotASubgroup(f"{H!r} is not closed")
        if not gamma <= set(H):
            raise NotASubgroup(f"{H!r} does not contain Gal(L/E)")
    if len(set(shape.subgroups[-1])) != X.e * X.f_L:
        raise NotASubgroup("top of the chain must be all of Gal(L/F)")
    if shape.t >= 1 and inertia_order(X, shape.subgroups[0]) != 1:
        raise UnramifiedViolation("E/E_0 must be unramified (trivial inertia)")
    for low, high in zip(shape.subgroups, shape.subgroups[1:]):
        if not set(low) < set(high):
            raise NonStrictTower(f"{low!r} not strictly inside {high!r}")
    if any(a <= 0 for a in shape.levels):
        raise NonIncreasingLevels(f"levels {shape.levels} must be positive")
    if any(a >= b for a, b in zip(shape.levels, shape.levels[1:])):
        raise NonIncreasingLevels(f"levels {shape.levels} must strictly increase")


@lru_cache(maxsize=None)
def enumerate_shapes(
    X: ExtensionModel, max_t: int, max_level: int
) -> tuple[TowerShape, ...]:
    """Every valid shape with t <= max_t and levels inside 1..max_level.

    The t = 0 shape always exists.  Chains are drawn from the interval
    subgroup lattice; only the bottom subgroup carries the unramifiedness
    constraint.
    """
    subs = interval_subgroups(X)
    full = subs[-1]
    assert len(full) == X.e * X.f_L
    shapes = [TowerShape(subgroups=(full,), levels=())]
    bottoms = [H for H in subs if inertia_order(X, H) == 1]
    for t in range(1, max_t + 1):
        chains: list[tuple[Subgroup, ...]] = []

        def grow(chain: tuple[Subgroup, ...]) -> None:
            if len(chain) == t:
                chains.append(chain + (full,))
                return
            for H in subs:
                if set(chain[-1]) < set(H) < set(full):
                    grow(chain + (H,))

        for H0 in bottoms:
            if set(H0) < set(full):
                grow((H0,))
        for chain in chains:
            for levels in combinations(range(1, max_level + 1), t):
                shapes.append(TowerShape(subgroups=chain, levels=levels))
    for shape in shapes:
        validate_shape(X, shape)
    return tuple(shapes)


@lru_cache(maxsize=None)
def _member_sets(shape: TowerShape) -> tuple[frozenset, ...]:
    return tuple(frozenset(H) for H in shape.subgroups)


@lru_cache(maxsize=None)
def depth_index(X: ExtensionModel, shape: TowerShape, g: GaloisElement) -> int:
    """-1 if g lies in H_0, else the unique k with g in H_{k+1} - H_k.

    Constant on double cosets and under inversion, because every H_k contains
    Gal(L/E) and is closed under inverses.
    """
    sets = _member_sets(shape)
    if g in sets[0]:
        return -1
    for k in range(shape.t):
        if g in sets[k + 1]:
            return k
    raise NotASubgroup(f"{g!r} outside the top of the chain")


def jump_data(X: ExtensionModel, A: CsaParams, shape: TowerShape, k: int) -> JumpData:
    if not 0 <= k < shape.t:
        raise IndexOutOfRange(f"k={k} outside 0..{shape.t - 1}")
    a_k = shape.levels[k]
    _, _, e_next = centralizer_invariants(X, A, shape.subgroups[k + 1])
    e_E = order_invariants(X, A).e_E
    assert e_E % e_next == 0
    return JumpData(
        k=k,
        level=a_k,
        e_next=e_next,
        product_even=(a_k * e_next) % 2 == 0,
        j_k=Fraction(a_k * e_E, 2),
    )


def subgroup_selector(X: ExtensionModel, H: Subgroup) -> str:
    """Stable textual name for an interval subgroup: 'deg.idx' where deg is
    the degree [E_k : F] of its fixed field and idx disambiguates among
    subgroups of equal degree in canonical order."""
    subs = interval_subgroups(X)
    e_M, f_M = subfield_invariants(X, H)
    deg = e_M * f_M
    peers = [S for S in subs if len(S) == len(H)]
    return f"{deg}.{peers.index(tuple(sorted(H)))}"


def parse_selector(X: ExtensionModel, token: str) -> Subgroup:
    """Inverse of subgroup_selector; also accepts 'E' and 'F'."""
    subs = interval_subgroups(X)
    if token == "E":
        return X.gamma_E
    if token == "F":
        return subs[-1]
    deg_s, _, idx_s = token.partition(".")
    try:
        deg = int(deg_s)
        idx = int(idx_s) if idx_s else 0
    except ValueError:
        raise KeyError(f"bad subfield selector {token!r}") from None
    peers = [
        S
        for S in subs
        if (lambda ef: ef[0] * ef[1])(subfield_invariants(X, S)) == deg
    ]
    if not 0 <= idx < len(peers):
        raise KeyError(f"no subfield matches selector {token!r}")
    return peers[idx]
