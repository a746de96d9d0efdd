import pytest

from setsol import (
    BadParams,
    CapExceeded,
    PairMap,
    PreconditionNotInVarietyS,
    PreconditionNotPQYBE,
    ThetaFamily,
    assemble,
    build_named_solution,
    idempotent_endomorphisms,
    power,
    power_profile,
    standard_semigroup,
    transform,
    verify_equation,
    verify_power_theorem,
)
from setsol.powers import braid_power_forms


@pytest.mark.parametrize("kind", ["left_zero", "right_zero", "rectangular_band"])
def test_gamma_solutions_are_pentagon(kind):
    params = {"rows": 2, "cols": 2} if kind == "rectangular_band" else {"n": 3}
    sg = standard_semigroup(kind, **params)
    for g in idempotent_endomorphisms(sg):
        s = build_named_solution("gamma", semigroup=sg, gamma=g.image)
        assert verify_equation(s, "pentagon").holds


def test_militaru_requires_commuting_idempotents():
    s = build_named_solution("militaru", f=[0, 0, 2], g=[0, 1, 0])
    assert s(2, 2) == (2, 0) and verify_equation(s, "pentagon").holds
    with pytest.raises(BadParams):
        build_named_solution("militaru", f=[0, 0, 2], g=[0, 1, 1])
    with pytest.raises(BadParams):
        build_named_solution("militaru", f=[0, 0], g=[1, 1])
    with pytest.raises(BadParams):
        build_named_solution("militaru", f=[1, 0], g=[0, 1])


def test_named_solution_parameter_errors():
    sg = standard_semigroup("left_zero", n=2)
    with pytest.raises(BadParams):
        build_named_solution("gamma", semigroup=sg)
    with pytest.raises(BadParams):
        build_named_solution("constant", semigroup=standard_semigroup("cyclic_group", n=2), e=1)
    with pytest.raises(BadParams):
        build_named_solution("wibble")
    with pytest.raises(BadParams):
        build_named_solution("gamma", semigroup=sg, gamma=[0])


def test_right_zero_and_inflation_solutions():
    s = build_named_solution("right_zero", phi=[0, 0, 2])
    assert verify_equation(s, "pentagon").holds
    T = standard_semigroup("left_zero", n=2)
    th = ThetaFamily.constant_rows(2, [0, 1])
    s = build_named_solution("inflation", T=T, theta=th, phi=[1, 0])
    assert s.order == 4 and verify_equation(s, "pentagon").holds


def test_profile_of_identity_and_flip():
    p = power_profile(PairMap.identity(3))
    assert (p.index, p.period) == (0, 1)
    p = power_profile(PairMap.flip(2))
    assert (p.index, p.period) == (0, 2)
    assert [row["exponent"] for row in p.power_verdicts] == [1, 2]


def test_profile_cap():
    # a 3-cycle on pairs needs three compositions to repeat
    perm = {(0, 0): (0, 1), (0, 1): (1, 0), (1, 0): (0, 0), (1, 1): (1, 1)}
    f = PairMap.from_function(2, lambda x, y: perm[(x, y)])
    assert power_profile(f).period == 3
    with pytest.raises(CapExceeded):
        power_profile(f, cap=2)
    with pytest.raises(ValueError):
        power_profile(f, cap=1)


def test_power_theorem_on_left_zero():
    sg = standard_semigroup("left_zero", n=3)
    for g in idempotent_endomorphisms(sg):
        r = transform(assemble(sg, ThetaFamily.constant_rows(3, g.image)), "compose_flip_left")
        v = verify_power_theorem(r)
        assert v.holds and v.details["idempotent"]
        assert power(r, 4) == power(r, 2)


def test_power_theorem_closed_forms_on_free_carrier():
    from setsol.semigroup import free_variety_s_substitution

    F = standard_semigroup("free_variety_s", generators=2)
    g = free_variety_s_substitution(2, [0, 0])
    th = ThetaFamily.constant_rows(F.order, g)
    r = transform(assemble(F, th), "compose_flip_left")
    v = verify_power_theorem(r)
    assert v.holds and not v.details["idempotent"]
    forms = braid_power_forms(F, th, th.theta[0])
    for k in (2, 3, 4, 5):
        assert power(r, k) == forms[k]


def test_power_theorem_preconditions():
    z2 = standard_semigroup("cyclic_group", n=2)
    r = transform(assemble(z2, ThetaFamily([[0, 1], [0, 1]])), "compose_flip_left")
    with pytest.raises(PreconditionNotPQYBE):
        verify_power_theorem(r)
    # (ab, 1) on Z2 is P-QYBE, but Z2 is outside abc = adbc
    r = transform(assemble(z2, ThetaFamily([[0, 0], [0, 0]])), "compose_flip_left")
    with pytest.raises(PreconditionNotInVarietyS):
        verify_power_theorem(r)
    with pytest.raises(PreconditionNotPQYBE):
        verify_power_theorem(PairMap([[1, 0], [0, 0]], [[0, 0], [0, 0]]))
