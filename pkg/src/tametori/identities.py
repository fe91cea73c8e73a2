"""The character identities between the zeta side and the epsilon side.

For an instance (E/F presentation, algebra A, tower shape) each nontrivial
orbit is checked exactly: the zeta side evaluates permutation signs of finite
module actions (asymmetric pairs), t-factor cancellations with the transfer
sign iota (symmetric isomorphic), or norm-one symbols (symmetric
non-isomorphic); the epsilon side evaluates order-gated Legendre symbols with
the split and given algebras as the two gating sides.  The instance passes
when every per-orbit identity and the aggregate product identity hold; a
mismatch is data in the report, never an exception.

sweep() runs verify_instance over a parameter grid and collects failures in
replayable coordinate rows.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import reduce
from math import gcd

from . import chartools, finmod, tower
from .chartools import TRIVIAL_CHAR, TameQuadChar, char_mul
from .csa import CsaParams, brauer_torsion_sign, split_algebra
from .errors import DimensionMismatch, IotaIncoherence, NotSymmetric
from .localfield import (
    ExtensionModel,
    ExtensionParams,
    build_extension,
    inertia_order,
    radical_prime,
)
from .roots import RootClass, RootOrbit, enumerate_orbits, ord_contains, root_eval
from .tower import TowerShape, subgroup_selector

__all__ = [
    "Side",
    "Instance",
    "OrbitVerdict",
    "Report",
    "GridSpec",
    "SweepSummary",
    "epsilon_alpha",
    "epsilon_total",
    "iota",
    "zeta_restricted",
    "nu_zeta_total",
    "verify_instance",
    "grid_extension_params",
    "grid_algebras",
    "sweep",
]


class Side(Enum):
    SPLIT = "split"
    GIVEN = "given"


@dataclass(frozen=True)
class Instance:
    X: ExtensionModel
    A: CsaParams
    shape: TowerShape


@dataclass(frozen=True)
class OrbitVerdict:
    """Per-orbit (or per asymmetric pair) comparison; lhs is the zeta side."""

    ij: tuple[int, int]
    partner_ij: tuple[int, int]
    cls: RootClass
    depth: int
    lhs: TameQuadChar
    rhs: TameQuadChar

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs


@dataclass(frozen=True)
class Report:
    instance: Instance
    verdicts: tuple[OrbitVerdict, ...]
    aggregate_lhs: TameQuadChar
    aggregate_rhs: TameQuadChar

    @property
    def passed(self) -> bool:
        return self.aggregate_lhs == self.aggregate_rhs and all(
            v.passed for v in self.verdicts
        )


def _side_algebra(inst: Instance, side: Side) -> CsaParams:
    return split_algebra(inst.X.n) if side is Side.SPLIT else inst.A


def _is_primary(orbit: RootOrbit) -> bool:
    """Asymmetric pairs are visited once, at the smaller canonical label."""
    return orbit.symmetric or orbit.ij < orbit.partner_ij


def epsilon_alpha(inst: Instance, orbit: RootOrbit, side: Side) -> TameQuadChar:
    """The epsilon character of one orbit for one gating side.

    Symmetric ramified orbits contribute the toral-invariant character
    gamma -> sign^{v_E(gamma)} with the side's Brauer 2-torsion sign,
    independently of the tower.  All other orbits are gated by the layer
    membership r_k/2 in ord(alpha) of the side's principal order and
    contribute a k^x symbol (asymmetric) or a k^1 symbol (symmetric
    unramified) at alpha(zeta_E) and alpha(pi_E).
    """
    X = inst.X
    B = _side_algebra(inst, side)
    if orbit.cls is RootClass.SYMMETRIC_RAMIFIED:
        return TameQuadChar(1, brauer_torsion_sign(B, orbit.n_pm))
    k = tower.depth_index(X, inst.shape, orbit.rep)
    if k == -1:
        return TRIVIAL_CHAR
    r_half = Fraction(inst.shape.levels[k], 2 * X.e)
    if not ord_contains(X, B, orbit, r_half):
        return TRIVIAL_CHAR
    x_unit = root_eval(X, orbit, 1, 0)
    x_pi = root_eval(X, orbit, 0, 1)
    if orbit.cls is RootClass.ASYMMETRIC:
        return TameQuadChar(
            chartools.legendre_kx(orbit.Q_alpha, x_unit),
            chartools.legendre_kx(orbit.Q_alpha, x_pi),
        )
    return TameQuadChar(
        chartools.legendre_k1(orbit.Q_alpha, orbit.q_pm, x_unit),
        chartools.legendre_k1(orbit.Q_alpha, orbit.q_pm, x_pi),
    )


def epsilon_total(inst: Instance, side: Side) -> TameQuadChar:
    """Product of epsilon_alpha over asymmetric pairs (once per pair) and
    symmetric orbits."""
    chars = [
        epsilon_alpha(inst, o, side)
        for o in enumerate_orbits(inst.X)
        if _is_primary(o)
    ]
    return reduce(char_mul, chars, TRIVIAL_CHAR)


def iota(inst: Instance, orbit: RootOrbit) -> int:
    """Transfer sign of a symmetric orbit: +1 when the representative is a
    power of sigma (j == 0) or fixes pi_E (a == 0), else (-1)^m; symmetric
    ramified orbits always get (-1)^m."""
    if not orbit.symmetric:
        raise NotSymmetric(f"orbit {orbit.ij} is asymmetric")
    m_sign = -1 if inst.A.m % 2 else 1
    if orbit.cls is RootClass.SYMMETRIC_RAMIFIED:
        return m_sign
    if orbit.j == 0 or orbit.rep.a == 0:
        return 1
    return m_sign


def zeta_restricted(inst: Instance, orbit: RootOrbit) -> TameQuadChar:
    """The zeta-side character of one orbit, restricted to E^x.

    Asymmetric: the pair product, a permutation sign of the alpha(gamma)
    action for each side whose module class is U.  Symmetric with isomorphic
    modules: the t-factors cancel and the value on pi_E is iota (trivial on
    units); at depth -1 both modules vanish and the character is trivial
    outright, while at depth >= 0 a symmetric unramified orbit must have
    iota = +1 (IotaIncoherence otherwise).  Symmetric non-isomorphic (only
    unramified, m odd): k^1 symbols on both generators.
    """
    X, A, shape = inst.X, inst.A, inst.shape
    if orbit.cls is RootClass.ASYMMETRIC:
        sides = (A, split_algebra(X.n))
        signs = []
        for u, v in ((1, 0), (0, 1)):
            x = root_eval(X, orbit, u, v)
            s = 1
            for B in sides:
                if finmod.v_module(X, B, shape, orbit.rep) is finmod.ModuleClass.U:
                    s *= chartools.perm_sign(orbit.Q_alpha, x)
            signs.append(s)
        return TameQuadChar(*signs)
    iso = finmod.symp_iso_direct(X, A, shape, orbit)
    if iso:
        if orbit.cls is RootClass.SYMMETRIC_RAMIFIED:
            return TameQuadChar(1, iota(inst, orbit))
        if tower.depth_index(X, shape, orbit.rep) == -1:
            return TRIVIAL_CHAR
        sign = iota(inst, orbit)
        if sign != 1:
            raise IotaIncoherence(
                f"iota={sign} on isomorphic symmetric unramified orbit {orbit.ij}"
            )
        return TameQuadChar(1, sign)
    assert orbit.cls is RootClass.SYMMETRIC_UNRAMIFIED, (
        "symmetric ramified module classes must agree across sides"
    )
    x_unit = root_eval(X, orbit, 1, 0)
    x_pi = root_eval(X, orbit, 0, 1)
    return TameQuadChar(
        chartools.legendre_k1(orbit.Q_alpha, orbit.q_pm, x_unit),
        chartools.legendre_k1(orbit.Q_alpha, orbit.q_pm, x_pi),
    )


def nu_zeta_total(inst: Instance) -> TameQuadChar:
    """Product of zeta_restricted over asymmetric pairs and symmetric orbits."""
    chars = [
        zeta_restricted(inst, o) for o in enumerate_orbits(inst.X) if _is_primary(o)
    ]
    return reduce(char_mul, chars, TRIVIAL_CHAR)


def verify_instance(inst: Instance) -> Report:
    """Check every per-orbit identity and the aggregate product identity.

    The aggregate characters are recomputed through nu_zeta_total and
    epsilon_total and asserted equal to the per-orbit products, so the
    factorizations themselves are exercised on every instance.
    """
    X = inst.X
    if inst.A.n != X.n:
        raise DimensionMismatch(f"m*d={inst.A.n} but e*f={X.n}")
    verdicts = []
    for orbit in enumerate_orbits(X):
        if not _is_primary(orbit):
            continue
        lhs = zeta_restricted(inst, orbit)
        rhs = char_mul(
            epsilon_alpha(inst, orbit, Side.SPLIT),
            epsilon_alpha(inst, orbit, Side.GIVEN),
        )
        verdicts.append(
            OrbitVerdict(
                ij=orbit.ij,
                partner_ij=orbit.partner_ij,
                cls=orbit.cls,
                depth=tower.depth_index(X, inst.shape, orbit.rep),
                lhs=lhs,
                rhs=rhs,
            )
        )
    agg_lhs = nu_zeta_total(inst)
    agg_rhs = char_mul(
        epsilon_total(inst, Side.SPLIT), epsilon_total(inst, Side.GIVEN)
    )
    assert agg_lhs == reduce(char_mul, (v.lhs for v in verdicts), TRIVIAL_CHAR)
    assert agg_rhs == reduce(char_mul, (v.rhs for v in verdicts), TRIVIAL_CHAR)
    return Report(
        instance=inst,
        verdicts=tuple(verdicts),
        aggregate_lhs=agg_lhs,
        aggregate_rhs=agg_rhs,
    )


@dataclass(frozen=True)
class GridSpec:
    """Sweep universe: residue cardinalities, torus degree bound, nonzero-w
    sampling, tower bounds, and the admissibility filter."""

    q_list: tuple[int, ...]
    n_max: int
    w_extra: int = 0
    w_seed: int = 0
    t_max: int = 0
    a_max: int = 0
    strict_admissible: bool = False


@dataclass(frozen=True)
class SweepSummary:
    params_count: int
    instances: int
    orbits_checked: int
    failures: tuple[dict, ...]
    skipped_nonstrict: int = 0

    @property
    def passes(self) -> int:
        return self.instances - len(self.failures)

    @property
    def first_failure(self) -> dict | None:
        return self.failures[0] if self.failures else None


def grid_extension_params(grid: GridSpec) -> tuple[ExtensionParams, ...]:
    """Deterministic parameter list: all tame (e, f) with e*f <= n_max, w = 0
    plus w_extra sampled nonzero presentations per (q, e, f)."""
    rng = random.Random(grid.w_seed)
    out = []
    for q in grid.q_list:
        p = radical_prime(q)
        for e in range(1, grid.n_max + 1):
            if e % p == 0:
                continue
            for f in range(1, grid.n_max // e + 1):
                ws = [0]
                pool = range(1, q**f - 1)
                if grid.w_extra and len(pool):
                    ws += sorted(rng.sample(pool, min(grid.w_extra, len(pool))))
                out.extend(ExtensionParams(q, e, f, w) for w in ws)
    return tuple(out)


def grid_algebras(n: int) -> tuple[CsaParams, ...]:
    """Every inner form of degree n: all (m, d, h) with m*d = n, gcd(h, d) = 1."""
    return tuple(
        CsaParams(n // d, d, h)
        for d in range(1, n + 1)
        if n % d == 0
        for h in range(d)
        if gcd(h, d) == 1
    )


def _shape_coordinates(X: ExtensionModel, shape: TowerShape) -> tuple[str, str]:
    towers = ",".join(subgroup_selector(X, H) for H in shape.subgroups[:-1]) or "-"
    levels = ",".join(str(a) for a in shape.levels) or "-"
    return towers, levels


def failure_row(report: Report) -> dict:
    """Replayable coordinates plus the mismatching values."""
    inst = report.instance
    p = inst.X.params
    towers, levels = _shape_coordinates(inst.X, inst.shape)
    bad = [v for v in report.verdicts if not v.passed]
    return {
        "q": p.q,
        "e": p.e,
        "f": p.f,
        "w": p.w,
        "m": inst.A.m,
        "d": inst.A.d,
        "h": inst.A.h,
        "tower": towers,
        "levels": levels,
        "orbits": ";".join(f"{v.ij[0]},{v.ij[1]}" for v in bad) or "-",
        "lhs": ";".join(f"{v.lhs.on_unit_gen},{v.lhs.on_uniformizer}" for v in bad),
        "rhs": ";".join(f"{v.rhs.on_unit_gen},{v.rhs.on_uniformizer}" for v in bad),
        "aggregate_lhs": f"{report.aggregate_lhs.on_unit_gen},{report.aggregate_lhs.on_uniformizer}",
        "aggregate_rhs": f"{report.aggregate_rhs.on_unit_gen},{report.aggregate_rhs.on_uniformizer}",
    }


def _sweep_param(args: tuple[GridSpec, ExtensionParams]) -> tuple[int, int, int, list[dict]]:
    grid, params = args
    X = build_extension(params)
    shapes = tower.enumerate_shapes(X, grid.t_max, grid.a_max)
    algebras = grid_algebras(X.n)
    instances = orbits = skipped = 0
    failures: list[dict] = []
    for shape in shapes:
        if grid.strict_admissible and inertia_order(X, shape.subgroups[0]) != 1:
            skipped += len(algebras)
            continue
        for A in algebras:
            report = verify_instance(Instance(X, A, shape))
            instances += 1
            orbits += len(report.verdicts)
            if not report.passed:
                failures.append(failure_row(report))
    return instances, orbits, skipped, failures


def sweep(grid: GridSpec, jobs: int = 1) -> SweepSummary:
    """Verify every instance of the grid; deterministic for a fixed grid
    regardless of jobs."""
    params_list = grid_extension_params(grid)
    work = [(grid, p) for p in params_list]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_sweep_param, work, chunksize=4))
    else:
        results = [_sweep_param(item) for item in work]
    instances = sum(r[0] for r in results)
    orbits = sum(r[1] for r in results)
    skipped = sum(r[2] for r in results)
    failures = tuple(row for r in results for row in r[3])
    return SweepSummary(
        params_count=len(params_list),
        instances=instances,
        orbits_checked=orbits,
        failures=failures,
        skipped_nonstrict=skipped,
    )
