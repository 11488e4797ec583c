"""Lehmer numbers and primitive divisors, found without factoring.

Run with:  python demos/03_lehmer_primitive_divisors.py
"""
from expdioph.family import build_instance, validate_params
from expdioph.lehmer import (
    bhv_check,
    has_primitive_divisor,
    lehmer_number_closed_form,
    lehmer_sequence,
    make_pair,
    pair_from_family,
    primitive_part,
)

# E = 1, G = -1 is the Fibonacci sequence.
fib = make_pair(1, -1)
print("Fibonacci:", lehmer_sequence(fib, 15))
print("indices without a primitive divisor:",
      [n for n in range(2, 41) if not has_primitive_divisor(fib, n)])
print("primitive part of L_12 = 144:", primitive_part(fib, 12))

# The recurrence and the defining quotient agree.
pair = make_pair(-7, 11)
print("recurrence == closed form up to n=40:",
      lehmer_sequence(pair, 40) == [lehmer_number_closed_form(pair, n) for n in range(41)])

# The pair attached to a family: alpha, beta = sqrt(P) +- sqrt(-Q).
inst = build_instance(validate_params(11, 1, 3))
fam = pair_from_family(*inst.as_tuple())
print(f"family pair: E={fam.e_val} G={fam.g_val} F={fam.f_val}")
for n in (31, 33, 35, 37):
    part = primitive_part(fam, n)
    print(f"  L_{n}: {len(str(abs(lehmer_sequence(fam, n)[n])))} digits, "
          f"primitive part has {len(str(part))} digits, BHV check {bhv_check(fam, n)}")
