"""Lehmer pairs, Lehmer numbers and primitive divisors.

A pair is stored by E = (alpha + beta)^2, G = alpha*beta and F = E - 4G,
so that alpha, beta = (sqrt(E) +- sqrt(F)) / 2.  The Lehmer numbers are

    L_n = (alpha^n - beta^n) / (alpha - beta)       n odd
    L_n = (alpha^n - beta^n) / (alpha^2 - beta^2)   n even

and obey the integer recurrence

    L_n = E*L_{n-1} - G*L_{n-2}   (n odd)
    L_n =   L_{n-1} - G*L_{n-2}   (n even)

with L_0 = 0, L_1 = 1.  `lehmer_number_closed_form` evaluates the quotient
directly by binomial expansion over sqrt(E), sqrt(F) and serves as the
cross-check for the recurrence.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from math import comb, gcd

__all__ = [
    "LehmerPairError",
    "LehmerPair",
    "DEGENERACY_HORIZON",
    "BHV_THRESHOLD",
    "make_pair",
    "lehmer_sequence",
    "lehmer_number",
    "lehmer_number_closed_form",
    "strip_common",
    "primitive_part",
    "has_primitive_divisor",
    "bhv_check",
    "pair_from_family",
]

log = logging.getLogger(__name__)

DEGENERACY_HORIZON = 30
BHV_THRESHOLD = 30


class LehmerPairError(ValueError):
    """Invalid (E, G); ``reason`` is one of "zero", "gcd", "degenerate"."""

    def __init__(self, reason, message):
        self.reason = reason
        super().__init__(message)


@dataclass(frozen=True)
class LehmerPair:
    e_val: int
    g_val: int
    f_val: int
    lambda_sign: int = 1


def _sequence(e, g, n_max):
    seq = [0, 1]
    for n in range(2, n_max + 1):
        if n % 2:
            seq.append(e * seq[-1] - g * seq[-2])
        else:
            seq.append(seq[-1] - g * seq[-2])
    return seq[: n_max + 1]


def make_pair(e, g):
    """Validate (E, G) as a Lehmer pair.

    A pair is degenerate when alpha/beta is a root of unity; this is
    detected as F = 0 (alpha = beta) or a vanishing L_n for some 1 <= n <= 30.
    """
    if e == 0 or g == 0:
        raise LehmerPairError("zero", f"E and G must be nonzero, got ({e}, {g})")
    d = gcd(e, g)
    if d != 1:
        raise LehmerPairError("gcd", f"gcd(E, G) = {d} for ({e}, {g})")
    if e == 4 * g:
        raise LehmerPairError("degenerate", f"F = 0 for ({e}, {g}); alpha = beta")
    seq = _sequence(e, g, DEGENERACY_HORIZON)
    for n in range(1, DEGENERACY_HORIZON + 1):
        if seq[n] == 0:
            raise LehmerPairError("degenerate", f"L_{n} = 0 for ({e}, {g}); alpha/beta is a root of unity")
    return LehmerPair(e, g, e - 4 * g)


def lehmer_sequence(pair, n_max):
    """[L_0, ..., L_n_max]."""
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    return _sequence(pair.e_val, pair.g_val, n_max)


def lehmer_number(pair, n):
    if n < 0:
        raise ValueError("n must be non-negative")
    return _sequence(pair.e_val, pair.g_val, n)[n]


def lehmer_number_closed_form(pair, n):
    """L_n from the defining quotient, expanded symbolically.

    alpha^n - beta^n = 2^(1-n) * sum_{j odd} C(n, j) sqrt(E)^(n-j) sqrt(F)^j.
    Dividing by alpha - beta = sqrt(F) (n odd) or by
    alpha^2 - beta^2 = sqrt(E)*sqrt(F) (n even) leaves only even powers of
    both radicals, i.e. integers E^a F^b.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return 0
    e, f = pair.e_val, pair.f_val
    drop = 0 if n % 2 else 1  # extra sqrt(E) removed for even n
    total = 0
    for j in range(1, n + 1, 2):
        total += comb(n, j) * e ** ((n - j - drop) // 2) * f ** ((j - 1) // 2)
    scale = 1 << (n - 1)
    if total % scale:
        raise ArithmeticError(f"closed form not integral at n={n} for {pair}")
    return total // scale


def strip_common(value, w):
    """Remove from ``value`` every prime factor it shares with ``w``, to full multiplicity."""
    g = gcd(value, w)
    while g > 1:
        value //= g
        g = gcd(value, g)
    return value


def primitive_part(pair, n):
    """Part of |L_n| coprime to F * L_1 * ... * L_{n-1}, by gcd stripping only."""
    if n <= 1:
        raise ValueError(f"primitive part needs n > 1, got {n}")
    seq = lehmer_sequence(pair, n)
    part = abs(seq[n])
    for w in [pair.f_val] + seq[1:n]:
        if part == 1:
            break
        part = strip_common(part, abs(w))
    return part


def has_primitive_divisor(pair, n):
    return primitive_part(pair, n) > 1


def bhv_check(pair, n):
    """Check that L_n has a primitive divisor, for n beyond the BHV threshold.

    A False result would contradict the theorem on this pair and is logged
    at error level.
    """
    if n <= BHV_THRESHOLD:
        raise ValueError(f"criterion only covers n > {BHV_THRESHOLD}, got {n}")
    ok = has_primitive_divisor(pair, n)
    if not ok:
        log.error("L_%d of %s has no primitive divisor", n, pair)
    return ok


def pair_from_family(p, q, k):
    """The pair alpha, beta = sqrt(P) +- sqrt(-Q), with E = 4P and G = K^2."""
    if p + q != k * k:
        raise ValueError(f"P + Q != K^2 for ({p}, {q}, {k})")
    if gcd(p, q) != 1:
        raise ValueError(f"gcd(P, Q) != 1 for ({p}, {q})")
    pair = make_pair(4 * p, k * k)
    assert pair.f_val == -4 * q, pair
    return pair
