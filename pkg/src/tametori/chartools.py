"""Quadratic characters of finite fields, in exponent coordinates.

Elements of mu_L are exponents relative to the fixed generator zeta, carried
together with the ambient order (MuExponent).  Subfield reduction divides the
exponent by the index of the subgroup; the three quadratic symbols (the k^x
Legendre symbol, the norm-one k^1 symbol, and the multiplication permutation
sign) are then parity computations on reduced exponents.  Tame quadratic
characters of E^x are determined by their values on a unit generator and on
pi_E, which is all a TameQuadChar stores.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import NotInSubfield, NotNormOne

__all__ = [
    "MuExponent",
    "TameQuadChar",
    "TRIVIAL_CHAR",
    "char_mul",
    "char_eval",
    "reduce_to_subfield",
    "legendre_kx",
    "legendre_k1",
    "perm_sign",
    "perm_sign_bruteforce",
]


@dataclass(frozen=True)
class MuExponent:
    """zeta^val inside the cyclic group mu of the given order."""

    val: int
    order: int

    def __post_init__(self):
        if self.order < 1:
            raise ValueError(f"order={self.order} must be positive")
        object.__setattr__(self, "val", self.val % self.order)


@dataclass(frozen=True)
class TameQuadChar:
    """A character of E^x trivial on 1-units, of order dividing 2, recorded by
    its values on a fixed unit generator and on pi_E."""

    on_unit_gen: int
    on_uniformizer: int

    def __post_init__(self):
        if self.on_unit_gen not in (1, -1) or self.on_uniformizer not in (1, -1):
            raise ValueError("character values must be +1 or -1 (quadratic)")

    def __mul__(self, other: "TameQuadChar") -> "TameQuadChar":
        return TameQuadChar(
            self.on_unit_gen * other.on_unit_gen,
            self.on_uniformizer * other.on_uniformizer,
        )


TRIVIAL_CHAR = TameQuadChar(1, 1)


def char_mul(chi: TameQuadChar, psi: TameQuadChar) -> TameQuadChar:
    return chi * psi


def char_eval(chi: TameQuadChar, u: int, v: int) -> int:
    """Value at zeta_E^u * pi_E^v."""
    return (chi.on_unit_gen**(u % 2)) * (chi.on_uniformizer**(v % 2))


def reduce_to_subfield(x: MuExponent, Q_sub: int) -> int:
    """Exponent of x relative to the generator of mu of the subfield with
    Q_sub elements, i.e. zeta^{(order)/(Q_sub-1)}."""
    if x.order % (Q_sub - 1):
        raise NotInSubfield(f"mu_{Q_sub - 1} is not a subgroup of mu_{x.order}")
    u = x.order // (Q_sub - 1)
    if x.val % u:
        raise NotInSubfield(f"zeta^{x.val} outside mu_{Q_sub - 1}")
    return (x.val // u) % (Q_sub - 1)


def legendre_kx(Q_alpha: int, x: MuExponent) -> int:
    """Quadratic symbol on the multiplicative group of the field with Q_alpha
    elements: -1 exactly on non-squares, i.e. odd reduced exponents."""
    return -1 if reduce_to_subfield(x, Q_alpha) % 2 else 1


def legendre_k1(Q_alpha: int, q_pm: int, x: MuExponent) -> int:
    """Quadratic symbol on the norm-one subgroup k^1 of the quadratic residue
    extension k_alpha / k_pm.

    k^1 = ker(Norm) is cyclic of order q_pm + 1 (even), generated by
    zeta_alpha^{q_pm - 1}; membership means (q_pm - 1) | exponent and the
    symbol is the parity of the index.
    """
    if Q_alpha != q_pm * q_pm:
        raise ValueError(f"Q_alpha={Q_alpha} is not q_pm^2 for q_pm={q_pm}")
    reduced = reduce_to_subfield(x, Q_alpha)
    if reduced % (q_pm - 1):
        raise NotNormOne(f"index {reduced} not divisible by {q_pm - 1}")
    return -1 if (reduced // (q_pm - 1)) % 2 else 1


def perm_sign(Q: int, x: MuExponent) -> int:
    """Sign of multiplication by x as a permutation of the field with Q
    elements: zero is fixed and mu splits into (Q-1)/t cycles of the length
    t = ord(x), so the sign is (-1)^{(Q-1) - (Q-1)/t}."""
    val = reduce_to_subfield(x, Q)
    t = (Q - 1) // gcd(val, Q - 1)
    return -1 if ((Q - 1) - (Q - 1) // t) % 2 else 1


def perm_sign_bruteforce(Q: int, x: MuExponent) -> int:
    """Oracle for perm_sign: walk the actual cycle decomposition of the
    multiplication action on exponents (plus the fixed zero), assuming nothing
    about cycle lengths."""
    n = Q - 1
    s = reduce_to_subfield(x, Q)
    visited = bytearray(n)
    cycles = 0
    for start in range(n):
        if visited[start]:
            continue
        cycles += 1
        cur = start
        while not visited[cur]:
            visited[cur] = 1
            cur += s
            if cur >= n:
                cur -= n
    return -1 if (n - cycles) % 2 else 1
