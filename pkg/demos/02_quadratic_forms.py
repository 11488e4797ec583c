"""Solution classes of D1 X^2 + D2 Y^2 = k^Z and their odd-power structure.

Run with:  python demos/02_quadratic_forms.py
"""
from collections import defaultdict

from expdioph.quadform import (
    QuadFormInstance,
    characteristic_number,
    class_key,
    enumerate_solutions,
    expand_odd_power,
    least_solution_in_class,
    verify_representation,
)

inst = QuadFormInstance(2, 3, 5)
sols = enumerate_solutions(inst, 3)
print("2X^2 + 3Y^2 = 5^Z, Z <= 3:", [tuple(s) for s in sols])

for s in sols:
    print(f"  {tuple(s)}  L = {characteristic_number(inst, s).value}")

# (sqrt2 + sqrt-3)^3 = -7 sqrt2 + 3 sqrt-3, and the conjugate flips the second sign.
print("(sqrt2 + sqrt-3)^3 ->", expand_odd_power(2, 3, 1, 1, 1, 3))
print("(sqrt2 - sqrt-3)^3 ->", expand_odd_power(2, 3, 1, 1, -1, 3))

rep = verify_representation(inst, sols[0], sols[1])
print(f"(7,3,3) = {rep.lambda1:+d} * ((1,1,1) with sign {rep.lambda2:+d})^{rep.t}")

# A larger instance: group solutions by class and check each against its least member.
inst = QuadFormInstance(2, 3, 35)
classes = defaultdict(list)
for s in enumerate_solutions(inst, 3):
    classes[class_key(inst, characteristic_number(inst, s))].append(s)
for key, members in sorted(classes.items()):
    least = least_solution_in_class(inst, key, 3)
    reps = [verify_representation(inst, least, s) for s in members]
    print(f"class ±{key}: least {tuple(least)}, exponents t = {[r.t for r in reps]}")
