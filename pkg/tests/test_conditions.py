import pytest
from hypothesis import given

from setsol import (
    NotAGroup,
    PreconditionNotPE,
    PreconditionNotPQYBE,
    ThetaFamily,
    assemble,
    check_pe_conditions,
    check_pqybe_conditions,
    kernel,
    power,
    power_closed_form,
    standard_semigroup,
    verify_equation,
    verify_power_formula,
)
from setsol.conditions import is_pqybe

from conftest import semigroup_and_theta


@given(semigroup_and_theta(max_order=3))
def test_pe_conditions_iff_pentagon(pair):
    sg, theta = pair
    assert check_pe_conditions(sg, theta).holds == verify_equation(assemble(sg, theta), "pentagon").holds


@given(semigroup_and_theta(max_order=3))
def test_pqybe_conditions_iff_pentagon_and_qybe(pair):
    sg, theta = pair
    s = assemble(sg, theta)
    oracle = verify_equation(s, "pentagon").holds and verify_equation(s, "qybe").holds
    assert is_pqybe(sg, theta) == oracle


@given(semigroup_and_theta(max_order=3))
def test_pqybe_structure_facts_hold_when_reported(pair):
    sg, theta = pair
    if not is_pqybe(sg, theta):
        return
    d = check_pqybe_conditions(sg, theta).details
    assert d["theta_idempotent"] and d["agree_on_square"] and d["theta_of_product"]


def test_failing_tags_name_the_condition():
    sg = standard_semigroup("left_zero", n=2)
    # theta_x(y) = 1 - y breaks the composition law
    v = check_pe_conditions(sg, ThetaFamily([[1, 0], [1, 0]]))
    assert not v.holds and v.condition_tag == "theta_comp"
    z2 = standard_semigroup("cyclic_group", n=2)
    v = check_pe_conditions(z2, ThetaFamily([[1, 1], [1, 1]]))
    assert not v.holds and v.condition_tag == "theta_mult"


def test_pqybe_requires_pe():
    sg = standard_semigroup("left_zero", n=2)
    with pytest.raises(PreconditionNotPE):
        check_pqybe_conditions(sg, ThetaFamily([[1, 0], [1, 0]]))


def test_pe_solutions_that_are_not_pqybe():
    # s(a, b) = (ab, b) on Z2 breaks (Y1); theta_a(b) = a + b + 1 on the
    # left-zero pair breaks (Y2)
    z2 = standard_semigroup("cyclic_group", n=2)
    th = ThetaFamily([[0, 1], [0, 1]])
    assert check_pe_conditions(z2, th).holds
    v = check_pqybe_conditions(z2, th)
    assert not v.holds and v.condition_tag == "Y1"
    lz = standard_semigroup("left_zero", n=2)
    v = check_pqybe_conditions(lz, ThetaFamily([[0, 1], [1, 0]]))
    assert not v.holds and v.condition_tag == "Y2"
    # (ab, 1) on Z2 is P-QYBE
    assert check_pqybe_conditions(z2, ThetaFamily([[0, 0], [0, 0]])).holds


@pytest.mark.parametrize("n", range(2, 7))
def test_power_closed_form_on_left_zero(n):
    sg = standard_semigroup("left_zero", n=3)
    th = ThetaFamily.constant_rows(3, [0, 0, 2])
    assert verify_power_formula(sg, th, n).holds
    assert power(assemble(sg, th), n) == power_closed_form(sg, th, n)


def test_power_formula_needs_pqybe():
    z2 = standard_semigroup("cyclic_group", n=2)
    with pytest.raises(PreconditionNotPQYBE):
        verify_power_formula(z2, ThetaFamily([[0, 1], [0, 1]]), 2)
    with pytest.raises(ValueError):
        verify_power_formula(z2, ThetaFamily([[0, 0], [0, 0]]), 1)


def test_kernel_on_groups():
    z3 = standard_semigroup("cyclic_group", n=3)
    rep = kernel(z3, ThetaFamily([[0] * 3] * 3))
    assert rep.kernel == (0, 1, 2) and rep.is_subgroup and rep.is_normal
    with pytest.raises(NotAGroup):
        kernel(standard_semigroup("left_zero", n=2), ThetaFamily([[0, 1], [0, 1]]))
    with pytest.raises(PreconditionNotPE):
        kernel(z3, ThetaFamily([[1] * 3] * 3))
