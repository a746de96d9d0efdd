import itertools

import numpy as np
import pytest
from hypothesis import given

from setsol import (
    PairMap,
    PreconditionFailed,
    SearchSpec,
    SpecTooLarge,
    BadParams,
    ThetaFamily,
    all_semigroups,
    assemble,
    brute_force_count,
    compare_with_gamma_solutions,
    enumerate_solutions,
    idempotent_endomorphisms,
    standard_semigroup,
    verify_equation,
)
from setsol import _kernels
from setsol.enumeration import left_quasi_normal_power_witnesses, pruned_theta_branches
from setsol.sampling import pe_theta_families

from conftest import pair_maps


@given(pair_maps(max_order=3))
def test_compiled_kernel_matches_numpy_oracle(s):
    f = s.first.ravel().astype(np.int64)
    g = s.second.ravel().astype(np.int64)
    for eq, bit in _kernels.EQUATION_BITS.items():
        assert _kernels._holds(f, g, s.order, bit) == verify_equation(s, eq).holds


def test_full_map_counts_order_two():
    # frozen: direct enumeration of all 256 maps through the numpy oracle
    frozen = {"pentagon": 24, "reversed_pentagon": 24, "qybe": 43, "braid": 43}
    for eq, count in frozen.items():
        assert brute_force_count(2, [eq]) == count
        assert enumerate_solutions(SearchSpec(eq, "full_map", order=2)).count == count


def test_full_map_singleton():
    res = enumerate_solutions(SearchSpec("both", "full_map", order=1, mode="collect"))
    assert res.count == 1
    (s,) = res.solutions
    assert all(verify_equation(s, eq).holds for eq in ("pentagon", "reversed_pentagon", "qybe", "braid"))


def test_full_map_collect_is_canonical_and_verified():
    res = enumerate_solutions(SearchSpec("pentagon", "full_map", order=2, mode="collect", limit=100))
    assert len(res.solutions) == 24
    assert res.solutions == sorted(res.solutions)
    assert [s.key for s in res.solutions] == sorted(s.key for s in res.solutions)


def test_pentagon_maps_are_product_forms():
    # every pentagon map has an associative first component, so the full-map
    # count equals the theta-family count summed over labeled semigroups
    for n in (1, 2):
        total = sum(len(pe_theta_families(sg)) for sg in all_semigroups(n))
        assert total == enumerate_solutions(SearchSpec("pentagon", "full_map", order=n)).count


@pytest.mark.parametrize("n", [1, 2])
def test_pruned_search_equals_unpruned_filter(n):
    for sg in all_semigroups(n):
        for target in ("pentagon", "both"):
            res = enumerate_solutions(SearchSpec(target, "product_form_theta", sg, mode="collect",
                                                 limit=10 ** 6))
            want = []
            for digits in itertools.product(range(n), repeat=n * n):
                s = assemble(sg, ThetaFamily(np.reshape(digits, (n, n))))
                if all(verify_equation(s, eq).holds for eq in res_equations(target)):
                    want.append(s)
            assert res.solutions == sorted(want)
            assert res.count == len(want)


def res_equations(target):
    return ("pentagon",) if target == "pentagon" else ("pentagon", "qybe")


def test_pruned_branches_contain_no_solutions():
    rng = np.random.default_rng(9)
    sgs = all_semigroups(3)
    checked = 0
    while checked < 100:
        sg = sgs[rng.integers(len(sgs))]
        target = "pentagon" if rng.random() < 0.5 else "both"
        cuts = pruned_theta_branches(sg, target)
        if not cuts:
            continue
        prefix = cuts[rng.integers(len(cuts))]
        for rest in itertools.product(range(3), repeat=9 - len(prefix)):
            s = assemble(sg, ThetaFamily(np.reshape(list(prefix) + list(rest), (3, 3))))
            ok = all(verify_equation(s, eq).holds for eq in res_equations(target))
            assert not ok, (sg, prefix, rest)
        checked += 1


@pytest.mark.parametrize("shape", ["full_map", "product_form_theta"])
def test_worker_count_does_not_change_results(shape):
    sg = standard_semigroup("rectangular_band", rows=2, cols=2) if shape != "full_map" else None
    order = 2 if shape == "full_map" else None
    runs = [enumerate_solutions(SearchSpec("both", shape, sg, order, mode="collect",
                                           limit=10 ** 5, workers=w)) for w in (1, 2, 8)]
    assert len({r.count for r in runs}) == 1
    assert runs[0].solutions == runs[1].solutions == runs[2].solutions


def test_right_zero_order_two_has_three_pe_solutions():
    sg = standard_semigroup("right_zero", n=2)
    res = enumerate_solutions(SearchSpec("pentagon", "product_form_theta", sg, mode="collect"))
    assert res.count == 3
    rows = sorted(s.second.tolist() for s in res.solutions)
    # theta_a = phi for every a, phi idempotent on a 2-set
    assert rows == [[[0, 0], [0, 0]], [[0, 1], [0, 1]], [[1, 1], [1, 1]]]


def test_gamma_classification():
    band = standard_semigroup("rectangular_band", rows=2, cols=2)
    rep = compare_with_gamma_solutions(band)
    assert rep["agrees"] and rep["enumerated"] == rep["expected"] == 9
    assert compare_with_gamma_solutions(standard_semigroup("left_zero", n=2))["agrees"]
    with pytest.raises(PreconditionFailed):
        compare_with_gamma_solutions(standard_semigroup("cyclic_group", n=2))
    with pytest.raises(PreconditionFailed):
        compare_with_gamma_solutions(standard_semigroup("null", n=2))


def test_size_limits_and_bad_specs():
    with pytest.raises(SpecTooLarge):
        enumerate_solutions(SearchSpec("pentagon", "full_map", order=4))
    with pytest.raises(SpecTooLarge):
        enumerate_solutions(SearchSpec("pentagon", "product_form_theta",
                                       standard_semigroup("left_zero", n=5)))
    with pytest.raises(BadParams):
        SearchSpec("pentagon", "diagonal", order=2)
    with pytest.raises(BadParams):
        SearchSpec("pentagon", "product_form_theta")
    with pytest.raises(BadParams):
        SearchSpec("pentagon", "full_map", order=2, workers=0)


def test_forced_order_five_product_form_search_runs():
    # every self-map of a left-zero semigroup is an endomorphism, so the
    # P-QYBE solutions are the 196 idempotent self-maps of a 5-set
    sg = standard_semigroup("left_zero", n=5)
    res = enumerate_solutions(SearchSpec("both", "product_form_theta", sg, force=True))
    assert res.count == len(idempotent_endomorphisms(sg)) == 196


def test_left_quasi_normal_witness_search():
    hits = left_quasi_normal_power_witnesses(max_order=3, stop_after=1)
    assert hits
    sg, failing = hits[0]
    s = assemble(sg, ThetaFamily.constant_rows(sg.order, range(sg.order)))
    r = PairMap(s.second, s.first)
    assert failing and all(not verify_equation(_pw(r, k), "braid").holds for k in failing)


def _pw(r, k):
    acc = r
    for _ in range(k - 1):
        acc = r.compose(acc)
    return acc


def test_full_map_counts_order_three():
    # frozen from an independent backtracking search over partial maps
    frozen = {"pentagon": 1115, "reversed_pentagon": 1115, "qybe": 5707, "braid": 5707}
    for eq, count in frozen.items():
        assert enumerate_solutions(SearchSpec(eq, "full_map", order=3)).count == count
