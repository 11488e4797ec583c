"""Building a family and watching the congruence sieves work.

Run with:  python demos/01_family_and_sieves.py
"""
from expdioph.family import ParamsError, build_instance, theorem_applicable, validate_params
from expdioph.family import Solution
from expdioph.sieve import binomial_truncation_holds, even_m_excludes, sieve_candidate

# (ell, m, r) = (11, 1, 3) gives A = 32, B = 89, C = 11 and 32 + 89 = 11^2.
params = validate_params(11, 1, 3)
inst = build_instance(params)
print("bases:", inst.as_tuple(), " A + B == C^2:", inst.a + inst.b == inst.c ** 2)
print("min(A, B) > 30:", theorem_applicable(inst))

# Invalid tuples name every condition they break.
for bad in [(9, 1, 3), (11, 1, 4), (3, 1, 3), (10, 2, 3)]:
    try:
        validate_params(*bad)
    except ParamsError as exc:
        print(bad, "->", exc.reason, exc.failed)

# Candidates with an even exponent die on a congruence mod ell or mod 3.
for x, y, z in [(1, 1, 2), (2, 1, 3), (1, 2, 3), (3, 5, 7)]:
    print((x, y, z), sieve_candidate(params, Solution(x, y, z)))

# In an even-m family the first-order binomial truncation modulo m^3
# leaves ell*(r*x + (ell - r)*y) = 0 (mod m), which is odd for odd x, y.
even = validate_params(7, 4, 3)
print("truncation holds mod m^3 for (3, 5):", binomial_truncation_holds(even, 3, 5))
print("even-m sieve fires for (3, 1):", even_m_excludes(even, 3, 1))
