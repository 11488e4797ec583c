import pytest
from hypothesis import given, strategies as st

from expdioph.family import FamilyParams, build_instance
from expdioph.quadform import (
    CharacteristicNumber,
    QuadFormInstance,
    QuadFormSolution as S,
    characteristic_number,
    characteristic_residue,
    enumerate_solutions,
    expand_odd_power,
    least_solution_in_class,
    same_class,
    verify_representation,
)
from oracles import quadform_solutions, valid_grid

INST = QuadFormInstance(2, 3, 5)


@pytest.mark.parametrize("args", [(1, 3, 5), (2, 4, 5), (2, 3, 6), (2, 3, 3)])
def test_instance_invariants(args):
    with pytest.raises(ValueError):
        QuadFormInstance(*args)


def test_characteristic_examples():
    assert characteristic_number(INST, S(1, 1, 1)) == CharacteristicNumber(3)
    assert characteristic_number(INST, S(7, 3, 3)).value == 2
    fam = QuadFormInstance(32, 89, 11)
    assert characteristic_number(fam, S(1, 1, 2)).value == 1


def test_characteristic_rejects_non_solutions():
    with pytest.raises(ValueError):
        characteristic_number(INST, S(1, 2, 1))
    with pytest.raises(ValueError):
        characteristic_residue(2, 5, 1, 5)


def test_same_class():
    assert same_class(INST, 3, 2)
    assert same_class(INST, CharacteristicNumber(3), CharacteristicNumber(3))
    assert not same_class(QuadFormInstance(2, 3, 7), 1, 3)


def test_enumerate_examples():
    assert enumerate_solutions(INST, 3) == [S(1, 1, 1), S(7, 3, 3)]
    assert enumerate_solutions(QuadFormInstance(32, 89, 11), 2) == [S(1, 1, 2)]
    assert enumerate_solutions(QuadFormInstance(2, 3, 7), 1) == []


def _instances(bound=30, size=10 ** 6):
    for d1 in range(2, bound + 1):
        for d2 in range(2, bound + 1):
            for k in range(3, bound + 1, 2):
                try:
                    inst = QuadFormInstance(d1, d2, k)
                except ValueError:
                    continue
                z_max = 1
                while z_max < 7 and k ** (z_max + 1) <= size:
                    z_max += 1
                yield inst, z_max


def test_enumerate_matches_double_loop():
    for i, (inst, z_max) in enumerate(_instances(size=10 ** 4)):
        if i % 11:
            continue
        got = [tuple(s) for s in enumerate_solutions(inst, z_max)]
        assert got == quadform_solutions(inst.d1, inst.d2, inst.k, z_max), inst


def test_least_solution_examples():
    assert least_solution_in_class(INST, 3, 6) == S(1, 1, 1)
    assert least_solution_in_class(QuadFormInstance(32, 89, 11), 1, 6) == S(1, 1, 2)
    assert least_solution_in_class(INST, 1, 4) is None


def test_expand_odd_power_examples():
    assert expand_odd_power(2, 3, 1, 1, 1, 3) == (-7, 3)
    assert expand_odd_power(2, 3, 1, 1, -1, 3) == (-7, -3)
    assert expand_odd_power(5, 7, 4, 9, -1, 1) == (4, -9)
    with pytest.raises(ValueError):
        expand_odd_power(2, 3, 1, 1, 1, 2)


def _ring_power(d1, d2, x1, y1, t):
    # Iterated multiplication in Z[sqrt(d1), sqrt(-d2)] on basis (1, sqrt(d1), sqrt(-d2), sqrt(-d1 d2)).
    c = (1, 0, 0, 0)
    g = (0, x1, y1, 0)
    for _ in range(t):
        a0, a1, a2, a3 = c
        b0, b1, b2, b3 = g
        c = (
            a0 * b0 + d1 * a1 * b1 - d2 * a2 * b2 - d1 * d2 * a3 * b3,
            a0 * b1 + a1 * b0 - d2 * (a2 * b3 + a3 * b2),
            a0 * b2 + a2 * b0 + d1 * (a1 * b3 + a3 * b1),
            a0 * b3 + a3 * b0 + a1 * b2 + a2 * b1,
        )
    return c


@given(st.integers(2, 40), st.integers(2, 40), st.integers(1, 20), st.integers(1, 20),
       st.integers(0, 4), st.sampled_from([1, -1]))
def test_expand_odd_power_versus_ring_and_norm(d1, d2, x1, y1, half, lam):
    t = 2 * half + 1
    u, v = expand_odd_power(d1, d2, x1, y1, lam, t)
    assert d1 * u * u + d2 * v * v == (d1 * x1 * x1 + d2 * y1 * y1) ** t
    c0, c1, c2, c3 = _ring_power(d1, d2, x1, lam * y1, t)
    assert (c0, c3) == (0, 0) and (c1, c2) == (u, v)


def test_verify_representation_examples():
    rep = verify_representation(INST, S(1, 1, 1), S(7, 3, 3))
    assert (rep.t, rep.lambda1, rep.lambda2) == (3, -1, -1)
    fam = QuadFormInstance(32, 89, 11)
    rep = verify_representation(fam, S(1, 1, 2), S(1, 1, 2))
    assert (rep.t, rep.lambda1, rep.lambda2) == (1, 1, 1)


def _pairs(predicate):
    for inst, z_max in _instances(bound=15, size=10 ** 5):
        sols = enumerate_solutions(inst, z_max)
        for a in sols:
            for b in sols:
                if predicate(inst, a, b):
                    return inst, a, b
    raise AssertionError("no matching pair in the search range")


def _same(inst, a, b):
    return same_class(inst, characteristic_number(inst, a), characteristic_number(inst, b))


def test_verify_representation_even_quotient():
    # 4X^2 + 17Y^2 = 21^Z has primitive solutions at Z = 1 and Z = 2.
    inst = QuadFormInstance(4, 17, 21)
    sols = enumerate_solutions(inst, 2)
    a = next(s for s in sols if s.z == 1)
    b = next(s for s in sols if s.z == 2)
    with pytest.raises(ValueError, match="even"):
        verify_representation(inst, a, b)


def test_verify_representation_not_multiple():
    inst, a, b = _pairs(lambda inst, a, b: a.z > 1 and b.z % a.z)
    with pytest.raises(ValueError, match="not a multiple"):
        verify_representation(inst, a, b)


def test_verify_representation_cross_class():
    inst, a, b = _pairs(lambda inst, a, b: a.z == b.z and not _same(inst, a, b))
    with pytest.raises(ValueError, match="different classes"):
        verify_representation(inst, a, b)


def test_round_trip_on_grid():
    """Every enumerated solution is an odd power of its class's least solution."""
    checked = 0
    for inst, z_max in _instances():
        sols = enumerate_solutions(inst, z_max)
        for sol in sols:
            char = characteristic_number(inst, sol)
            least = least_solution_in_class(inst, char, z_max)
            assert least is not None and least.z <= sol.z
            rep = verify_representation(inst, least, sol)
            assert rep is not None, (inst, sol, least)
            assert sol.z == least.z * rep.t and rep.t % 2 == 1
            checked += 1
    assert checked > 1000


def test_class_consistency():
    for inst, z_max in list(_instances(size=10 ** 5))[::13]:
        sols = enumerate_solutions(inst, z_max)
        for sol in sols:
            l0 = characteristic_number(inst, least_solution_in_class(inst, characteristic_number(inst, sol), z_max))
            assert same_class(inst, characteristic_number(inst, sol), l0)


def test_family_instances():
    for ell, m, r in valid_grid(ell_max=60, m_max=10):
        inst = build_instance(FamilyParams(ell, m, r))
        p, q, k = inst.as_tuple()
        assert p % k == k - 1 and q % k == 1
        assert characteristic_residue(p, k, 1, 1) == 1
        if m % 2:
            qf = QuadFormInstance(p, q, k)
            assert characteristic_number(qf, S(1, 1, 2)).value == 1
        else:
            with pytest.raises(ValueError, match="2\\*D1\\*D2"):
                QuadFormInstance(p, q, k)
