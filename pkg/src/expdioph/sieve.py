"""Congruence sieves on candidate exponent triples (x, y, z).

Each predicate evaluates the underlying congruence with modular
exponentiation on the actual bases instead of restating its parity
conclusion, so the tests check the congruences themselves.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

from .family import TRIVIAL_SOLUTION, build_instance

__all__ = [
    "Rejection",
    "SieveVerdict",
    "x_parity_admissible",
    "y_parity_admissible",
    "even_m_excludes",
    "m_congruence_holds",
    "binomial_truncation_holds",
    "sieve_candidate",
]


class Rejection(enum.Enum):
    X_EVEN = "x even: A^x + B^y = C^z fails mod ell"
    Y_EVEN = "y even: A^x + B^y = C^z fails mod 3"
    EVEN_M = "m even: nontrivial solution fails mod 2 | m"


@dataclass(frozen=True)
class SieveVerdict:
    admissible: bool
    reason: Rejection | None = None

    def __str__(self):
        return "admissible" if self.admissible else f"rejected({self.reason.value})"


def x_parity_admissible(params, x):
    """Mod ell: A = -1, B = 1 and C^z = 0, so A^x + 1 must vanish."""
    inst = build_instance(params)
    ell = params.ell
    assert inst.b % ell == 1
    return (pow(inst.a, x, ell) + 1) % ell == 0


def y_parity_admissible(params, x, y):
    """Mod 3: C^z is a unit, so A^x + B^y must not vanish."""
    inst = build_instance(params)
    assert (inst.c % 3) != 0
    return (pow(inst.a, x, 3) + pow(inst.b, y, 3)) % 3 != 0


def m_congruence_holds(params, x, y, modulus=None):
    """ell*(r*x + (ell - r)*y) == 0 modulo ``modulus`` (default m)."""
    ell, r = params.ell, params.r
    modulus = params.m if modulus is None else modulus
    return (ell * (r * x + (ell - r) * y)) % modulus == 0


def binomial_truncation_holds(params, x, y):
    """A^x + B^y == ell*m^2*(r*x + (ell - r)*y) (mod m^3), for odd x, y.

    This is the first-order binomial truncation of both powers; with z >= 3
    the left side vanishes mod m^3, which yields `m_congruence_holds`.
    """
    inst = build_instance(params)
    ell, m, r = params.ell, params.m, params.r
    mod = m ** 3
    lhs = (pow(inst.a, x, mod) + pow(inst.b, y, mod)) % mod
    return lhs == (ell * m * m * (r * x + (ell - r) * y)) % mod


def even_m_excludes(params, x, y):
    """True when 2 | m and the mod-2 reduction of the mod-m congruence fails.

    A true result certifies that no nontrivial solution with these
    exponents exists in an even-m family.
    """
    if params.m % 2:
        return False
    return not m_congruence_holds(params, x, y, modulus=2)


def sieve_candidate(params, sol):
    """Run the sieves in order; return the first rejection, else admissible.

    The even-m sieve needs z >= 3, so it is not applied to (1, 1, 2).
    """
    x, y, _ = sol
    if not x_parity_admissible(params, x):
        return SieveVerdict(False, Rejection.X_EVEN)
    if not y_parity_admissible(params, x, y):
        return SieveVerdict(False, Rejection.Y_EVEN)
    if tuple(sol) != TRIVIAL_SOLUTION and even_m_excludes(params, x, y):
        return SieveVerdict(False, Rejection.EVEN_M)
    return SieveVerdict(True)
