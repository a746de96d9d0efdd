"""Seeded random generators of small structures for soundness sweeps."""

from functools import lru_cache

import numpy as np

from .constructions import (
    MatchedSystem,
    SolutionQuadruple,
    check_matched_quadruple,
    check_matched_semigroup,
)
from .enumeration import SearchSpec, all_semigroups, enumerate_solutions
from .semigroup import idempotent_endomorphisms
from .solution import ThetaFamily


@lru_cache(maxsize=None)
def pe_theta_families(sg):
    """All theta with s(a, b) = (ab, theta_a(b)) a pentagon solution on ``sg``.

    These are also exactly the theta for which t(u, v) = (theta_v(u), vu) is
    a reversed solution, since t is s conjugated by the flip.
    """
    spec = SearchSpec(target="pentagon", shape="product_form_theta", semigroup=sg,
                      mode="collect", limit=10**6)
    return tuple(s.second.tolist() for s in enumerate_solutions(spec).solutions)


def _map_pool(sg, rng):
    n = sg.order
    pool = [tuple(range(n))]
    pool += [tuple([c] * n) for c in range(n)]
    pool += [tuple(m.image) for m in idempotent_endomorphisms(sg)]
    pool.append(tuple(int(x) for x in rng.integers(0, n, n)))
    return pool


def _pick(pool, count, rng, uniform):
    if uniform:
        choice = pool[rng.integers(len(pool))]
        return [list(choice)] * count
    return [list(pool[rng.integers(len(pool))]) for _ in range(count)]


def random_semigroup(rng, max_order=3):
    n = int(rng.integers(1, max_order + 1))
    pool = all_semigroups(n)
    return pool[rng.integers(len(pool))]


def random_matched_system(rng, max_order=3, tries=1000):
    """A system passing (S1) and (S2), or None after ``tries`` draws."""
    for _ in range(tries):
        S, T = random_semigroup(rng, max_order), random_semigroup(rng, max_order)
        alpha = _pick(_map_pool(S, rng), T.order, rng, rng.random() < 0.5)
        beta = _pick(_map_pool(T, rng), S.order, rng, rng.random() < 0.5)
        system = MatchedSystem(S, T, alpha, beta)
        if check_matched_semigroup(system).holds:
            return system
    return None


def random_matched_quadruples(seed, count, max_order=3, strict=True):
    """``count`` quadruples passing (S1), (S2) and (M1)-(M3).

    With ``strict`` false, quadruples whose (M3) holds only on theta-images
    are accepted too.
    """
    rng = np.random.default_rng(seed)
    found = []
    while len(found) < count:
        system = random_matched_system(rng, max_order)
        if system is None:
            continue
        fam_s = pe_theta_families(system.S)
        fam_t = pe_theta_families(system.T)
        for _ in range(20):
            th_s = fam_s[rng.integers(len(fam_s))]
            th_t = fam_t[rng.integers(len(fam_t))]
            quad = SolutionQuadruple(system, ThetaFamily(th_s), ThetaFamily(th_t))
            verdict = check_matched_quadruple(quad)
            weak = verdict.details.get("m3_on_images", {}).get("holds", False)
            if verdict.holds or (not strict and weak and verdict.condition_tag == "M3"):
                found.append(quad)
                break
    return found
