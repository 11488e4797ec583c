"""Solutions of D1*X^2 + D2*Y^2 = k^Z with gcd(X, Y) = 1.

Solutions are grouped by their characteristic number L = -D1*X/Y (mod k).
Within a class {L, -L}, the solution with least Z and X, Y > 0 generates
every other member as an odd power in the ring Z[sqrt(D1), sqrt(-D2)]:

    X*sqrt(D1) + Y*sqrt(-D2) = lambda1 * (X1*sqrt(D1) + lambda2*Y1*sqrt(-D2))^t.

Elements a*sqrt(D1) + b*sqrt(-D2) are kept as integer pairs (a, b) and odd
powers are expanded by explicit binomial sums.  No floating point is used.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb, gcd, isqrt
from typing import NamedTuple

__all__ = [
    "QuadFormInstance",
    "QuadFormSolution",
    "CharacteristicNumber",
    "Representation",
    "characteristic_residue",
    "characteristic_number",
    "same_class",
    "class_key",
    "enumerate_solutions",
    "least_solution_in_class",
    "expand_odd_power",
    "verify_representation",
    "SIGN_ORDER",
]

SIGN_ORDER = ((1, 1), (1, -1), (-1, 1), (-1, -1))


@dataclass(frozen=True)
class QuadFormInstance:
    d1: int
    d2: int
    k: int

    def __post_init__(self):
        if min(self.d1, self.d2) <= 1:
            raise ValueError(f"min(D1, D2) must exceed 1, got ({self.d1}, {self.d2})")
        if gcd(self.d1, self.d2) != 1:
            raise ValueError(f"gcd(D1, D2) != 1 for ({self.d1}, {self.d2})")
        if self.k < 1 or gcd(self.k, 2 * self.d1 * self.d2) != 1:
            raise ValueError(f"gcd(k, 2*D1*D2) != 1 for k={self.k}")

    def is_solution(self, sol):
        x, y, z = sol
        return z > 0 and gcd(x, y) == 1 and self.d1 * x * x + self.d2 * y * y == self.k ** z


class QuadFormSolution(NamedTuple):
    x: int
    y: int
    z: int


@dataclass(frozen=True)
class CharacteristicNumber:
    value: int

    def __int__(self):
        return self.value


@dataclass(frozen=True)
class Representation:
    t: int
    lambda1: int
    lambda2: int
    least: QuadFormSolution


def characteristic_residue(d1, k, x, y):
    """The residue L in (0, k) with L*y == -d1*x (mod k).

    Needs only gcd(y, k) = 1, so it also applies where the full instance
    conditions fail (e.g. k even).
    """
    try:
        y_inv = pow(y, -1, k)
    except ValueError:
        raise ValueError(f"Y={y} is not invertible modulo k={k}") from None
    value = (-d1 * x * y_inv) % k
    if value == 0:
        raise ValueError(f"characteristic residue is 0 for X={x}, Y={y}, k={k}")
    return value


def characteristic_number(inst, sol):
    if not inst.is_solution(sol):
        raise ValueError(f"{tuple(sol)} does not solve {inst}")
    return CharacteristicNumber(characteristic_residue(inst.d1, inst.k, sol.x, sol.y))


def _value(num):
    return num.value if isinstance(num, CharacteristicNumber) else int(num)


def same_class(inst, l_a, l_b):
    a, b, k = _value(l_a), _value(l_b), inst.k
    return (a - b) % k == 0 or (a + b) % k == 0


def class_key(inst, num):
    """Canonical representative min(L, k - L) of the class {L, -L}."""
    v = _value(num) % inst.k
    return min(v, inst.k - v)


def enumerate_solutions(inst, z_max):
    """All primitive (X, Y, Z) with X, Y > 0 and Z <= z_max, ordered by (Z, X)."""
    d1, d2, k = inst.d1, inst.d2, inst.k
    out = []
    for z in range(1, z_max + 1):
        total = k ** z
        for x in range(1, isqrt(total // d1) + 1):
            rest = total - d1 * x * x
            if rest <= 0 or rest % d2:
                continue
            q = rest // d2
            y = isqrt(q)
            if y * y == q and gcd(x, y) == 1:
                out.append(QuadFormSolution(x, y, z))
    return out


def least_solution_in_class(inst, l0, z_cap):
    """Least-Z solution with X, Y > 0 in the class of ``l0``, or None below ``z_cap``.

    Solutions are scanned in (Z, X) order, so the first class member is the
    least one.  Uniqueness at that Z is asserted.
    """
    found = None
    for sol in enumerate_solutions(inst, z_cap):
        if found is not None and sol.z > found.z:
            break
        if same_class(inst, characteristic_number(inst, sol), l0):
            assert found is None, f"two least solutions in one class: {found}, {sol}"
            found = sol
    return found


def expand_odd_power(d1, d2, x1, y1, lambda2, t):
    """Coefficients (U, V) of (x1*sqrt(d1) + lambda2*y1*sqrt(-d2))^t.

    With p = d1*x1^2 and q = -d2*y1^2:
        U = x1 * sum_i C(t, 2i)   p^((t-1)/2 - i) q^i
        V = lambda2*y1 * sum_i C(t, 2i+1) p^((t-1)/2 - i) q^i
    """
    if t < 1 or t % 2 == 0:
        raise ValueError(f"t must be a positive odd integer, got {t}")
    if lambda2 not in (1, -1):
        raise ValueError(f"lambda2 must be +1 or -1, got {lambda2}")
    half = (t - 1) // 2
    p = d1 * x1 * x1
    q = -d2 * y1 * y1
    u = sum(comb(t, 2 * i) * p ** (half - i) * q ** i for i in range(half + 1))
    v = sum(comb(t, 2 * i + 1) * p ** (half - i) * q ** i for i in range(half + 1))
    return u * x1, v * lambda2 * y1


def verify_representation(inst, least, sol):
    """Find t and signs with sol = lambda1 * least^t, or None if no signs fit.

    Raises ValueError when Z is not a multiple of Z1, when the quotient t
    is even, or when the two solutions lie in different classes.
    """
    if sol.z % least.z:
        raise ValueError(f"Z={sol.z} is not a multiple of Z1={least.z}")
    t = sol.z // least.z
    if t % 2 == 0:
        raise ValueError(f"Z/Z1 = {t} is even")
    l_least = characteristic_number(inst, least)
    l_sol = characteristic_number(inst, sol)
    if not same_class(inst, l_least, l_sol):
        raise ValueError(f"{tuple(sol)} and {tuple(least)} lie in different classes")
    for lambda1, lambda2 in SIGN_ORDER:
        u, v = expand_odd_power(inst.d1, inst.d2, least.x, least.y, lambda2, t)
        if (lambda1 * u, lambda1 * v) == (sol.x, sol.y):
            return Representation(t, lambda1, lambda2, least)
    return None
