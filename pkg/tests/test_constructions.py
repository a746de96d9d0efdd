import numpy as np
import pytest

from setsol import (
    BadParams,
    MatchedSystem,
    NoOneSidedIdentity,
    NotMonoids,
    PreconditionFailed,
    SolutionQuadruple,
    ThetaFamily,
    build_matched_semigroup,
    build_matched_solution,
    build_ybe_from_alpha_system,
    build_ybe_from_pentagon_quadruple,
    check_alpha_system,
    check_embeddings,
    check_matched_quadruple,
    check_matched_semigroup,
    check_monoid_quadruple,
    check_pentagon_quadruple,
    check_zappa,
    direct_product,
    standard_semigroup,
    verify_equation,
)
from setsol.constructions import matched_solution_map, reversed_map, zappa_product_table
from setsol.sampling import pe_theta_families, random_matched_quadruples, random_matched_system


def test_trivial_actions_give_the_direct_product():
    S = standard_semigroup("left_zero", n=2)
    T = standard_semigroup("cyclic_group", n=2)
    system = MatchedSystem.trivial(S, T)
    assert check_matched_semigroup(system).holds
    assert check_zappa(system).holds
    assert build_matched_semigroup(system) == direct_product(S, T)


def test_matched_product_table_agrees_with_pairwise_zappa_table(rng):
    checked = 0
    for _ in range(40):
        system = random_matched_system(rng, max_order=3)
        if system is None:
            continue
        table = build_matched_semigroup(system).table
        assert [list(r) for r in table] == zappa_product_table(system)
        try:
            check_zappa(system)
        except AssertionError:  # pragma: no cover - would be a real bug
            pytest.fail("Zappa conditions held without the matched ones")
        checked += 1
    assert checked > 20


def test_non_matched_system_is_rejected():
    S = standard_semigroup("cyclic_group", n=2)
    T = standard_semigroup("cyclic_group", n=2)
    # alpha constant 0, beta_0 = const 0 and beta_1 = id break (S2)
    system = MatchedSystem(S, T, [[0, 0], [0, 0]], [[0, 0], [0, 1]])
    v = check_matched_semigroup(system)
    assert not v.holds and v.condition_tag == "S2"
    assert v.counterexample == (0, 1, 1, 0) and v.details["variables"] == "abuv"
    with pytest.raises(PreconditionFailed) as err:
        build_matched_semigroup(system)
    assert err.value.layer == "S2"


def test_action_tables_are_validated():
    S = standard_semigroup("left_zero", n=2)
    with pytest.raises(BadParams):
        MatchedSystem(S, S, [[0, 1]], [[0, 1], [0, 1]])
    system = MatchedSystem(S, S, [[0, 1], [0, 1]])
    with pytest.raises(BadParams):
        check_matched_semigroup(system)


def test_system_serialization_round_trip():
    (quad,) = random_matched_quadruples(3, 1)
    back = SolutionQuadruple.from_dict(quad.to_dict())
    assert back.to_dict() == quad.to_dict()
    with pytest.raises(BadParams):
        MatchedSystem.from_dict({"S": quad.system.S.to_dict()})


def test_embeddings_on_monoids():
    S = standard_semigroup("chain", n=3)
    T = standard_semigroup("chain", n=2)
    v = check_embeddings(MatchedSystem.trivial(S, T))
    assert v.holds
    assert v.details["S_star_isomorphic"] and v.details["T_star_isomorphic"]
    with pytest.raises(NoOneSidedIdentity):
        check_embeddings(MatchedSystem.trivial(standard_semigroup("null", n=2), T))


def test_random_matched_quadruples_build_pentagon_solutions():
    for quad in random_matched_quadruples(11, 40):
        assert check_matched_quadruple(quad).holds
        s = build_matched_solution(quad)
        assert verify_equation(s, "pentagon").holds


def test_weak_m3_alone_still_yields_pentagon_solutions():
    quads = random_matched_quadruples(5, 30, strict=False)
    for quad in quads:
        s = build_matched_solution(quad)
        assert verify_equation(s, "pentagon").holds


def test_failing_quadruple_is_rejected_with_layer():
    S = standard_semigroup("left_zero", n=2)
    system = MatchedSystem.trivial(S, S)
    with pytest.raises(PreconditionFailed) as err:
        build_matched_solution(SolutionQuadruple(system, ThetaFamily([[1, 0], [1, 0]]),
                                                 ThetaFamily([[0, 1], [0, 1]])))
    assert err.value.layer == "pe_s"


def test_trivial_system_product_of_solutions():
    S = standard_semigroup("left_zero", n=2)
    T = standard_semigroup("right_zero", n=2)
    fam_s, fam_t = pe_theta_families(S), pe_theta_families(T)
    for ts in fam_s:
        for tt in fam_t:
            quad = SolutionQuadruple(MatchedSystem.trivial(S, T), ThetaFamily(ts), ThetaFamily(tt))
            assert check_matched_quadruple(quad).holds
            assert verify_equation(matched_solution_map(quad), "pentagon").holds


def test_monoid_check_requires_monoids():
    S = standard_semigroup("left_zero", n=2)
    quad = SolutionQuadruple(MatchedSystem.trivial(S, S), ThetaFamily([[0, 1], [0, 1]]),
                             ThetaFamily([[0, 1], [0, 1]]))
    with pytest.raises(NotMonoids):
        check_monoid_quadruple(quad)


def test_monoid_shortened_conditions_agree_with_full_on_trivial_systems():
    S = standard_semigroup("chain", n=3)
    T = standard_semigroup("chain", n=2)
    for ts in pe_theta_families(S):
        for tt in pe_theta_families(T):
            quad = SolutionQuadruple(MatchedSystem.trivial(S, T), ThetaFamily(ts), ThetaFamily(tt))
            v = check_monoid_quadruple(quad)
            assert v.details["agrees_with_full"]


def _pentagon_quadruple_sweep(rng, with_beta, tries=300):
    hits = 0
    for _ in range(tries):
        system = random_matched_system(rng, max_order=2)
        if system is None:
            continue
        if not with_beta:
            system = MatchedSystem(system.S, system.T, system.alpha.tolist())
        fam_s, fam_t = pe_theta_families(system.S), pe_theta_families(system.T)
        quad = SolutionQuadruple(system, ThetaFamily(fam_s[rng.integers(len(fam_s))]),
                                 ThetaFamily(fam_t[rng.integers(len(fam_t))]))
        try:
            ok = (check_pentagon_quadruple(quad) if with_beta else check_alpha_system(quad)).holds
        except PreconditionFailed:
            continue
        if ok:
            builder = build_ybe_from_pentagon_quadruple if with_beta else build_ybe_from_alpha_system
            assert verify_equation(builder(quad), "braid").holds
            hits += 1
    return hits


def test_pentagon_quadruples_yield_braid_solutions(rng):
    assert _pentagon_quadruple_sweep(rng, with_beta=True) > 10


def test_alpha_systems_yield_braid_solutions(rng):
    assert _pentagon_quadruple_sweep(rng, with_beta=False) > 5


def test_reversed_map_is_flip_conjugate_of_product_form():
    T = standard_semigroup("left_zero", n=2)
    th = ThetaFamily([[0, 1], [0, 1]])
    t = reversed_map(T, th)
    assert verify_equation(t, "reversed_pentagon").holds
    x, y = np.indices((2, 2))
    assert np.array_equal(t.first, th.theta[y, x]) and np.array_equal(t.second, T.array[y, x])


def test_pentagon_quadruple_needs_beta():
    S = standard_semigroup("left_zero", n=2)
    quad = SolutionQuadruple(MatchedSystem(S, S, [[0, 1], [0, 1]]), ThetaFamily([[0, 1], [0, 1]]),
                             ThetaFamily([[0, 1], [0, 1]]))
    with pytest.raises(BadParams):
        check_pentagon_quadruple(quad)
    assert check_alpha_system(quad).holds
