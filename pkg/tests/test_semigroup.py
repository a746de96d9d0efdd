import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from setsol import (
    BadParams,
    FiniteSemigroup,
    NotAssociative,
    OutOfRange,
    SelfMap,
    all_semigroups,
    build_inflation,
    classify,
    direct_product,
    idempotent_endomorphisms,
    in_variety_s,
    standard_semigroup,
)
from setsol.semigroup import (
    associativity_witness,
    free_variety_s_substitution,
    free_variety_s_words,
    left_quasi_normal_witness,
    variety_s_witness,
)

from conftest import semigroups


def naive_assoc(table):
    n = len(table)
    for x, y, z in itertools.product(range(n), repeat=3):
        if table[table[x][y]][z] != table[x][table[y][z]]:
            return (x, y, z)
    return None


@given(st.integers(1, 3).flatmap(
    lambda n: st.lists(st.lists(st.integers(0, n - 1), min_size=n, max_size=n), min_size=n, max_size=n)))
def test_construction_accepts_exactly_associative_tables(table):
    bad = naive_assoc(table)
    assert associativity_witness(table) == bad
    if bad is None:
        assert FiniteSemigroup(table).table == tuple(map(tuple, table))
    else:
        with pytest.raises(NotAssociative):
            FiniteSemigroup(table)


def test_malformed_tables_are_rejected():
    with pytest.raises(BadParams):
        FiniteSemigroup([[0, 1]])
    with pytest.raises(OutOfRange):
        FiniteSemigroup([[0, 2], [0, 0]])
    with pytest.raises(BadParams):
        FiniteSemigroup([[0, "a"], [0, 0]])
    with pytest.raises(BadParams):
        FiniteSemigroup.from_dict({"order": 1, "table": [[0]], "extra": 1})


def test_labeled_semigroup_counts():
    # labeled semigroups on 1..4 points (OEIS A023814)
    assert [len(all_semigroups(n)) for n in (1, 2, 3)] == [1, 8, 113]


@pytest.mark.parametrize("kind,params,props", [
    ("left_zero", {"n": 3}, {"left_zero": True, "rectangular_band": True, "variety_s": True}),
    ("right_zero", {"n": 2}, {"right_zero": True, "idempotent": True}),
    ("cyclic_group", {"n": 2}, {"group": True, "variety_s": False, "monoid": True}),
    ("rectangular_band", {"rows": 2, "cols": 2}, {"rectangular_band": True, "left_zero": False}),
    ("chain", {"n": 3}, {"monoid": True, "idempotent": True}),
    ("null", {"n": 3}, {"variety_s": True, "square_is_whole": False, "variety_w": True}),
])
def test_standard_semigroups(kind, params, props):
    report = classify(standard_semigroup(kind, **params))
    for k, v in props.items():
        assert getattr(report, k) == v, k


def test_standard_semigroup_errors():
    with pytest.raises(BadParams):
        standard_semigroup("left_zero")
    with pytest.raises(BadParams):
        standard_semigroup("nonsense", n=2)
    with pytest.raises(BadParams):
        standard_semigroup("left_zero", n=0)


@given(semigroups(max_order=3))
def test_variety_witnesses_match_brute_force(sg):
    t = sg.table
    n = sg.order
    brute_s = all(t[t[a][b]][c] == t[t[t[a][d]][b]][c]
                  for a, b, c, d in itertools.product(range(n), repeat=4))
    brute_lqn = all(t[t[a][b]][c] == t[t[a][c]][t[b][c]]
                    for a, b, c in itertools.product(range(n), repeat=3))
    assert (variety_s_witness(sg) is None) == brute_s
    assert (left_quasi_normal_witness(sg) is None) == brute_lqn
    w = variety_s_witness(sg)
    if w is not None:
        a, b, c, d = w
        assert t[t[a][b]][c] != t[t[t[a][d]][b]][c]


@given(semigroups(max_order=3))
def test_idempotent_endomorphisms_match_brute_force(sg):
    n = sg.order
    brute = []
    for img in itertools.product(range(n), repeat=n):
        f = SelfMap(img)
        if f.is_idempotent and f.is_endomorphism(sg):
            brute.append(f)
    assert idempotent_endomorphisms(sg) == brute
    assert SelfMap.identity(n) in brute


def test_inflation():
    T = standard_semigroup("left_zero", n=2)
    S = build_inflation(T, 2, [1, 0])
    assert S.order == 4
    bar = [0, 1, 1, 0]
    assert all(S.mul(a, b) == T.mul(bar[a], bar[b]) for a in range(4) for b in range(4))
    assert build_inflation(T, 0, []) is T
    with pytest.raises(BadParams):
        build_inflation(T, 2, [0])
    with pytest.raises(OutOfRange):
        build_inflation(T, 1, [5])


@given(semigroups(max_order=2), semigroups(max_order=2))
def test_direct_product_is_componentwise(S, T):
    P = direct_product(S, T)
    m = T.order
    for p in range(P.order):
        for q in range(P.order):
            r = P.mul(p, q)
            assert divmod(r, m) == (S.mul(p // m, q // m), T.mul(p % m, q % m))


def test_free_variety_s():
    F = standard_semigroup("free_variety_s", generators=2)
    assert F.order == len(free_variety_s_words(2)) == 14
    assert in_variety_s(F)
    g = free_variety_s_substitution(2, [0, 0])
    f = SelfMap(tuple(g))
    assert f.is_idempotent and f.is_endomorphism(F)
    # (abc)(abc) reduces to abc; shorter words square to longer ones
    assert F.idempotents() == list(range(6, 14))
    assert not classify(F).idempotent


def test_group_facts():
    z3 = standard_semigroup("cyclic_group", n=3)
    assert z3.identity == 0 and z3.inverses == (0, 2, 1)
    lz = standard_semigroup("left_zero", n=2)
    assert lz.identity is None and lz.right_identities == [0, 1] and not lz.is_group


def test_array_is_read_only():
    sg = standard_semigroup("left_zero", n=2)
    with pytest.raises(ValueError):
        sg.array[0, 0] = 1
    assert np.array_equal(sg.array, [[0, 0], [1, 1]])
