"""Central simple algebras A = M_m(D) over F and their principal orders.

A is encoded by (m, d, h): D is the division algebra of degree d^2 with Hasse
invariant h/d, gcd(h, d) = 1, and n = m*d.  The split form is (n, 1, 0).
E embeds in A when m*d = e*f, and the E-pure principal orders attached to the
embedding are controlled by a handful of integer invariants, all derived here
by gcd bookkeeping.  Brauer classes live in Q/Z as exact Fractions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .errors import DimensionMismatch, NotASubgroup, NotTwoTorsion
from .localfield import ExtensionModel, subfield_invariants

__all__ = [
    "CsaParams",
    "OrderInvariants",
    "split_algebra",
    "brauer_class",
    "order_invariants",
    "centralizer_invariants",
    "brauer_torsion_sign",
    "symram_epsilon_product",
]


@dataclass(frozen=True, order=True)
class CsaParams:
    """A = M_m(D), deg D = d^2, inv D = h/d with gcd(h, d) = 1, 0 <= h < d."""

    m: int
    d: int
    h: int

    def __post_init__(self):
        if self.m < 1 or self.d < 1:
            raise ValueError(f"m={self.m}, d={self.d} must be positive")
        if not 0 <= self.h < self.d or gcd(self.h, self.d) != 1:
            raise ValueError(f"h={self.h} invalid for d={self.d}")

    @property
    def n(self) -> int:
        return self.m * self.d


def split_algebra(n: int) -> CsaParams:
    return CsaParams(n, 1, 0)


def brauer_class(A: CsaParams) -> Fraction:
    """Class of A in Br(F) = Q/Z, normalized to [0, 1)."""
    return Fraction(A.h % A.d, A.d) if A.d > 1 else Fraction(0)


@dataclass(frozen=True)
class OrderInvariants:
    """Integer invariants of the E-pure principal order of A.

    r = e / gcd(d, e) and s = gcd(f, m) are the period and multiplicity,
    e_F = d*r is the order's ramification over O_F, and e_E = e_F / e its
    ramification over O_E.  e_E equals both d/gcd(d, e) and f/gcd(m, f).
    """

    r: int
    s: int
    e_F: int
    e_E: int


@lru_cache(maxsize=None)
def order_invariants(X: ExtensionModel, A: CsaParams) -> OrderInvariants:
    if A.n != X.n:
        raise DimensionMismatch(f"m*d={A.n} but e*f={X.n}")
    e, f, m, d = X.e, X.f, A.m, A.d
    r = e // gcd(d, e)
    s = gcd(f, m)
    e_F = d * r
    e_E = e_F // e
    assert e_E == d // gcd(d, e) == f // gcd(m, f)
    assert r == m // gcd(m, f)
    return OrderInvariants(r=r, s=s, e_F=e_F, e_E=e_E)


@lru_cache(maxsize=None)
def centralizer_invariants(
    X: ExtensionModel, A: CsaParams, H: tuple
) -> tuple[int, int, int]:
    """(m_k, d_k, e(A_k/O_E)) for the centralizer A_k of the subfield E_k fixed
    by a tower subgroup H containing Gal(L/E).

    A_k = M_{m_k}(D_k) is central simple over E_k and its E-pure principal
    order ramifies over O_E with index f(E/E_k)/gcd(m, f(E/E_k)).
    """
    if A.n != X.n:
        raise DimensionMismatch(f"m*d={A.n} but e*f={X.n}")
    if not set(X.gamma_E) <= set(H):
        raise NotASubgroup("tower subgroup must contain Gal(L/E)")
    e_k, f_k = subfield_invariants(X, H)
    deg = e_k * f_k
    over = X.n // deg  # [E : E_k]
    assert deg * over == X.n
    f_rel = X.f // f_k  # f(E/E_k)
    m_k = gcd(A.m, over)
    d_k = A.d // gcd(A.d, deg)
    return m_k, d_k, f_rel // gcd(A.m, f_rel)


def brauer_torsion_sign(A: CsaParams, n_alpha: int) -> int:
    """Sign of the 2-torsion class n_alpha * [A]: +1 if trivial, -1 if the
    nontrivial class; NotTwoTorsion if n_alpha * [A] has larger order."""
    cls = n_alpha * brauer_class(A)
    cls -= int(cls)  # reduce mod 1
    if cls == 0:
        return 1
    if cls == Fraction(1, 2):
        return -1
    raise NotTwoTorsion(f"{n_alpha} * [{A.h}/{A.d}] = {cls} is not 2-torsion")


def symram_epsilon_product(A: CsaParams, v: int) -> int:
    """Two-sided product of the symmetric-ramified epsilon characters at an
    element of valuation v: (-1)^{m v}."""
    return -1 if (A.m * v) % 2 else 1
