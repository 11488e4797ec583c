"""Parameter family (ell, m, r) and the bases it generates.

For positive integers with ell odd, 3 not dividing ell*m, ell > r and 3 | r,
the bases are

    A = r*ell*m^2 - 1,   B = (ell - r)*ell*m^2 + 1,   C = ell*m,

so that A + B = C^2.  The conjectured (and, for min(A, B) > 30, proven)
unique solution of A^x + B^y = C^z is (x, y, z) = (1, 1, 2).
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import NamedTuple

from sympy import isprime

__all__ = [
    "ParamsError",
    "FamilyParams",
    "Instance",
    "Solution",
    "TRIVIAL_SOLUTION",
    "failed_predicates",
    "validate_params",
    "build_instance",
    "theorem_applicable",
    "map_corollary",
    "APPLICABILITY_BOUND",
    "COROLLARY_MIN_P",
]

APPLICABILITY_BOUND = 30
COROLLARY_MIN_P = 11

# Machine-readable predicate names mapped to human messages.
PREDICATES = {
    "nonpositive": "non-positive input",
    "ell_even": "ℓ even",
    "three_divides_ell_m": "3 | ℓm",
    "ell_le_r": "ℓ ≤ r",
    "three_not_divides_r": "3 ∤ r",
    "p_not_prime": "p not prime",
    "p_too_small": "p < 11",
    "three_divides_m": "3 | m",
}


class ParamsError(ValueError):
    """Raised when parameters violate the family conditions.

    ``failed`` holds the machine-readable names of every violated predicate,
    in a fixed order, so sweep reports can aggregate rejection reasons.
    """

    def __init__(self, failed, values):
        self.failed = tuple(failed)
        self.values = tuple(values)
        super().__init__(f"{self.values}: " + "; ".join(self.messages))

    @property
    def messages(self):
        return [PREDICATES[name] for name in self.failed]

    @property
    def reason(self):
        return "; ".join(self.messages)


def failed_predicates(ell, m, r):
    """Return the names of the family conditions that (ell, m, r) violates."""
    if min(ell, m, r) < 1:
        return ["nonpositive"]
    failed = []
    if ell % 2 == 0:
        failed.append("ell_even")
    if (ell * m) % 3 == 0:
        failed.append("three_divides_ell_m")
    if ell <= r:
        failed.append("ell_le_r")
    if r % 3 != 0:
        failed.append("three_not_divides_r")
    return failed


@dataclass(frozen=True, order=True)
class FamilyParams:
    ell: int
    m: int
    r: int

    def __post_init__(self):
        for v in (self.ell, self.m, self.r):
            if not isinstance(v, int) or isinstance(v, bool):
                raise TypeError(f"family parameters must be int, got {v!r}")
        failed = failed_predicates(self.ell, self.m, self.r)
        if failed:
            raise ParamsError(failed, (self.ell, self.m, self.r))

    def as_tuple(self):
        return (self.ell, self.m, self.r)


@dataclass(frozen=True)
class Instance:
    """Coprime bases (A, B, C) with A + B = C^2."""

    a: int
    b: int
    c: int

    def __post_init__(self):
        if self.a + self.b != self.c * self.c:
            raise ValueError(f"A + B != C^2 for {self.as_tuple()}")
        if min(self.a, self.b) <= 1:
            raise ValueError(f"min(A, B) must exceed 1, got {self.as_tuple()}")
        if gcd(self.a, self.b) != 1:
            raise ValueError(f"gcd(A, B) != 1 for {self.as_tuple()}")
        if gcd(self.c, self.a) != 1 or gcd(self.c, self.b) != 1:
            raise ValueError(f"C shares a factor with A or B in {self.as_tuple()}")

    def as_tuple(self):
        return (self.a, self.b, self.c)


class Solution(NamedTuple):
    x: int
    y: int
    z: int


TRIVIAL_SOLUTION = Solution(1, 1, 2)


def validate_params(ell, m, r):
    """Return ``FamilyParams(ell, m, r)``; raise `ParamsError` naming every failed condition."""
    return FamilyParams(ell, m, r)


def build_instance(params):
    ell, m, r = params.ell, params.m, params.r
    a = r * ell * m * m - 1
    b = (ell - r) * ell * m * m + 1
    c = ell * m
    # These follow from valid params; a failure here is a bug, not bad input.
    assert a + b == c * c, (params, a, b, c)
    assert gcd(a, b) == 1, (params, a, b)
    assert gcd(c, a) == 1 and gcd(c, b) == 1, (params, a, b, c)
    return Instance(a, b, c)


def theorem_applicable(instance):
    return min(instance.a, instance.b) > APPLICABILITY_BOUND


def map_corollary(p, m):
    """Map the prime-indexed family A = 3pm^2 - 1, B = (p-3)pm^2 + 1, C = pm.

    Returns ``FamilyParams(p, m, 3)``.  Only the hypotheses p odd prime,
    p >= 11 and 3 not dividing m are enforced; the mod-4 conditions of the
    earlier result on this family are not required.
    """
    if min(p, m) < 1:
        raise ParamsError(["nonpositive"], (p, m))
    failed = []
    if not isprime(p) or p % 2 == 0:
        failed.append("p_not_prime")
    if p < COROLLARY_MIN_P:
        failed.append("p_too_small")
    if m % 3 == 0:
        failed.append("three_divides_m")
    if failed:
        raise ParamsError(failed, (p, m))
    params = validate_params(p, m, 3)
    assert theorem_applicable(build_instance(params)), params
    return params
