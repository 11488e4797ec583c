import itertools

import pytest
from hypothesis import given, strategies as st

from expdioph.family import (
    FamilyParams,
    Instance,
    ParamsError,
    build_instance,
    map_corollary,
    theorem_applicable,
    validate_params,
)
from oracles import family_conditions, valid_grid


def test_validate_accepts_valid():
    assert validate_params(11, 1, 3) == FamilyParams(11, 1, 3)


@pytest.mark.parametrize("values, failed, message", [
    ((9, 1, 3), ("three_divides_ell_m",), "3 | ℓm"),
    ((11, 1, 4), ("three_not_divides_r",), "3 ∤ r"),
    ((3, 1, 3), ("three_divides_ell_m", "ell_le_r"), "ℓ ≤ r"),
    ((10, 1, 3), ("ell_even",), "ℓ even"),
    ((11, 3, 3), ("three_divides_ell_m",), "3 | ℓm"),
    ((0, 1, 3), ("nonpositive",), "non-positive"),
])
def test_validate_reports_failed_predicates(values, failed, message):
    with pytest.raises(ParamsError) as info:
        validate_params(*values)
    assert info.value.failed == failed
    assert message in str(info.value)


def test_validate_matches_predicates_exhaustively():
    for ell, m, r in itertools.product(range(1, 40), range(1, 8), range(1, 40)):
        try:
            validate_params(ell, m, r)
            accepted = True
        except ParamsError:
            accepted = False
        assert accepted == family_conditions(ell, m, r), (ell, m, r)


@pytest.mark.parametrize("params, expected", [
    ((11, 1, 3), (32, 89, 11)),
    ((5, 1, 3), (14, 11, 5)),
    ((7, 4, 3), (335, 449, 28)),
])
def test_build_instance(params, expected):
    assert build_instance(validate_params(*params)).as_tuple() == expected


def test_instance_identities_over_grid():
    for ell, m, r in valid_grid():
        inst = build_instance(FamilyParams(ell, m, r))
        assert inst.a + inst.b == inst.c ** 2


@pytest.mark.parametrize("bad", [(32, 88, 11), (4, 12, 4), (1, 3, 2)])
def test_instance_rejects_bad_triples(bad):
    with pytest.raises(ValueError):
        Instance(*bad)


def test_theorem_applicable():
    assert theorem_applicable(Instance(32, 89, 11))
    assert not theorem_applicable(Instance(14, 11, 5))
    # min(A, B) = 30 exactly: the bound is strict.
    assert not theorem_applicable(Instance(30, 91, 11))
    assert theorem_applicable(Instance(31, 90, 11))


def test_map_corollary():
    assert map_corollary(11, 1) == FamilyParams(11, 1, 3)
    with pytest.raises(ParamsError, match="p < 11") as info:
        map_corollary(7, 1)
    assert info.value.failed == ("p_too_small",)
    with pytest.raises(ParamsError, match="3 \\| m"):
        map_corollary(13, 3)
    with pytest.raises(ParamsError, match="p not prime"):
        map_corollary(15, 1)


@given(st.integers(11, 400), st.integers(1, 30))
def test_corollary_matches_prime_family(p, m):
    try:
        params = map_corollary(p, m)
    except ParamsError:
        return
    inst = build_instance(params)
    assert inst.as_tuple() == (3 * p * m * m - 1, (p - 3) * p * m * m + 1, p * m)
    assert theorem_applicable(inst)
