"""Exhaustive searches on small carriers.

Two shapes are supported. ``product_form_theta`` fixes a semigroup and
searches theta families depth first, row-major, pruning a branch as soon as
some fully determined instance of a target condition fails. ``full_map``
streams every pair map on a bare n-set through compiled brute-force checks.
"""

import math
import time
from concurrent.futures import ProcessPoolExecutor, ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product

import numpy as np

from . import _kernels
from .conditions import is_pqybe
from .errors import BadParams, PreconditionFailed, SpecTooLarge
from .semigroup import (
    FiniteSemigroup,
    classify,
    idempotent_endomorphisms,
    in_variety_s,
    left_quasi_normal_witness,
)
from .solution import EQUATIONS, PairMap, ThetaFamily, assemble, power, transform, verify_equation

SHAPES = ("full_map", "product_form_theta")
TARGETS = {"pentagon": ("pentagon",), "qybe": ("qybe",), "both": ("pentagon", "qybe")}
FULL_MAP_LIMIT = 3
PRODUCT_FORM_LIMIT = 4


@dataclass
class SearchSpec:
    target: str = "pentagon"
    shape: str = "product_form_theta"
    semigroup: FiniteSemigroup = None
    order: int = None
    mode: str = "count"
    limit: int = 1000
    workers: int = 1
    force: bool = False

    def __post_init__(self):
        if self.shape not in SHAPES:
            raise BadParams(f"shape must be one of {SHAPES}")
        if self.mode not in ("count", "collect"):
            raise BadParams("mode must be 'count' or 'collect'")
        if self.workers < 1:
            raise BadParams("workers must be positive")
        if self.shape == "product_form_theta":
            if self.target not in TARGETS:
                raise BadParams(f"target must be one of {sorted(TARGETS)}")
            if self.semigroup is None:
                raise BadParams("product_form_theta needs a semigroup")
            self.order = self.semigroup.order
        else:
            if self.target not in TARGETS and self.target not in EQUATIONS[:4]:
                raise BadParams(f"unknown target {self.target!r}")
            if self.order is None:
                if self.semigroup is None:
                    raise BadParams("full_map needs an order")
                self.order = self.semigroup.order
        if self.order < 1:
            raise BadParams("order must be positive")

    @property
    def equations(self):
        return TARGETS.get(self.target, (self.target,))

    def check_size(self):
        cap = FULL_MAP_LIMIT if self.shape == "full_map" else PRODUCT_FORM_LIMIT
        if self.order > cap and not self.force:
            raise SpecTooLarge(f"{self.shape} search is limited to order {cap} without force")

    def to_dict(self):
        return {
            "target": self.target,
            "shape": self.shape,
            "order": self.order,
            "semigroup": None if self.semigroup is None else self.semigroup.to_dict(),
            "mode": self.mode,
            "limit": self.limit,
            "workers": self.workers,
            "force": self.force,
        }


@dataclass
class EnumerationResult:
    count: int
    solutions: list = field(default_factory=list)
    elapsed: float = 0.0
    subtrees: int = 0

    def stats(self):
        return {"count": self.count, "collected": len(self.solutions),
                "elapsed_seconds": round(self.elapsed, 3), "subtrees": self.subtrees}


# ---------------------------------------------------------------- theta search

def _theta_violation(table, theta, n, qybe):
    """True when some fully assigned instance of a target condition fails.

    ``theta`` is a flat row-major list with -1 for unassigned entries.
    """
    for x in range(n):
        tx = x * n
        for y in range(n):
            txy = theta[tx + y]
            xy = table[x][y]
            for z in range(n):
                yz = table[y][z]
                tyz = theta[y * n + z]
                txyz = theta[xy * n + z]
                # theta_x(y) theta_xy(z) = theta_x(yz)
                if txy >= 0 and txyz >= 0:
                    lhs = table[txy][txyz]
                    rhs = theta[tx + yz]
                    if rhs >= 0 and lhs != rhs:
                        return True
                    # theta_{theta_x(y)}(theta_xy(z)) = theta_y(z)
                    v = theta[txy * n + txyz]
                    if v >= 0 and tyz >= 0 and v != tyz:
                        return True
                if qybe and tyz >= 0:
                    # (Y1), (Y2), (Y3) with (a, b, c) = (x, y, z)
                    if table[table[x][y]][z] != table[table[table[x][tyz]][y]][z]:
                        return True
                    v = theta[tx + tyz]
                    if v >= 0 and v != tyz:
                        return True
                    p, q = theta[tx + yz], theta[tyz * n + yz]
                    if p >= 0 and q >= 0 and p != q:
                        return True
    return False


def _theta_dfs(table, n, qybe, prefix, limit, on_prune=None):
    theta = [-1] * (n * n)
    for i, v in enumerate(prefix):
        theta[i] = v
    found = []
    count = 0
    if _theta_violation(table, theta, n, qybe):
        if on_prune is not None:
            on_prune(tuple(prefix))
        return 0, found

    def descend(k):
        nonlocal count
        if k == n * n:
            if len(found) < limit:
                found.append(tuple(theta))
            count += 1
            return
        for v in range(n):
            theta[k] = v
            if _theta_violation(table, theta, n, qybe):
                if on_prune is not None:
                    on_prune(tuple(theta[: k + 1]))
                continue
            descend(k + 1)
        theta[k] = -1

    descend(len(prefix))
    return count, found


def pruned_theta_branches(sg, target="pentagon"):
    """Every prefix at which the theta search cut a branch."""
    cuts = []
    _theta_dfs(sg.table, sg.order, target != "pentagon", [], 0, cuts.append)
    return cuts


def extends_to_solution(sg, prefix, target="pentagon"):
    """Brute-force every completion of ``prefix``; solutions found, unpruned."""
    n = sg.order
    qybe = target != "pentagon"
    hits = []
    for rest in product(range(n), repeat=n * n - len(prefix)):
        th = ThetaFamily(np.reshape(list(prefix) + list(rest), (n, n)))
        ok = is_pqybe(sg, th) if qybe else _pe_only(sg, th)
        if ok:
            hits.append(th)
    return hits


def _pe_only(sg, th):
    from .conditions import check_pe_conditions

    return check_pe_conditions(sg, th).holds


def _split_depth(n, workers, total):
    if workers <= 1:
        return 0
    return min(total, math.ceil(math.log(8 * workers, n))) if n > 1 else 0


def _theta_task(args):
    table, n, qybe, prefix, limit = args
    return _theta_dfs(table, n, qybe, list(prefix), limit)


def _full_map_task(args):
    n, prefix, mask, limit = args
    out = np.zeros((max(limit, 1), 2 * n * n), dtype=np.int64)
    count = _kernels.scan_subtree(n, np.array(prefix, dtype=np.int64), mask, limit, out)
    return count, [tuple(row) for row in out[: min(count, limit)].tolist()]


def _run(tasks, fn, workers, threads):
    if workers <= 1 or len(tasks) <= 1:
        return [fn(t) for t in tasks]
    pool = ThreadPoolExecutor if threads else ProcessPoolExecutor
    with pool(max_workers=workers) as ex:
        return list(ex.map(fn, tasks))


def enumerate_solutions(spec):
    """Run a search; counts and collected lists do not depend on ``workers``."""
    spec.check_size()
    start = time.perf_counter()
    n = spec.order
    limit = spec.limit if spec.mode == "collect" else 0
    total_digits = n * n if spec.shape == "product_form_theta" else 2 * n * n
    depth = _split_depth(n, spec.workers, total_digits)
    prefixes = list(product(range(n), repeat=depth))
    if spec.shape == "product_form_theta":
        qybe = "qybe" in spec.equations
        tasks = [(spec.semigroup.table, n, qybe, p, limit) for p in prefixes]
        parts = _run(tasks, _theta_task, spec.workers, threads=False)
    else:
        _kernels.warm_up()
        mask = _kernels.equation_mask(spec.equations)
        tasks = [(n, p, mask, limit) for p in prefixes]
        parts = _run(tasks, _full_map_task, spec.workers, threads=True)
    count = sum(c for c, _ in parts)
    # subtrees are in prefix order and each is internally ordered
    collected = [row for _, rows in parts for row in rows][:limit]
    solutions = []
    for row in collected:
        if spec.shape == "product_form_theta":
            s = assemble(spec.semigroup, ThetaFamily(np.reshape(row, (n, n))))
        else:
            half = n * n
            s = PairMap(np.reshape(row[:half], (n, n)), np.reshape(row[half:], (n, n)))
        for eq in spec.equations:
            if not verify_equation(s, eq).holds:
                raise AssertionError(f"search emitted a map failing {eq}: {s!r}")
        solutions.append(s)
    solutions.sort()
    return EnumerationResult(count, solutions, time.perf_counter() - start, len(prefixes))


def brute_force_count(n, equations):
    """Reference count through the numpy oracle; feasible for n <= 2."""
    count = 0
    for digits in product(range(n), repeat=2 * n * n):
        half = n * n
        s = PairMap(np.reshape(digits[:half], (n, n)), np.reshape(digits[half:], (n, n)))
        if all(verify_equation(s, eq).holds for eq in equations):
            count += 1
    return count


# ------------------------------------------------------------ semigroup search

@lru_cache(maxsize=None)
def _semigroup_tables(n):
    size = n * n
    table = [-1] * size
    out = []

    def ok(k):
        # re-check every triple whose four lookups are all assigned
        for x in range(n):
            for y in range(n):
                xy = table[x * n + y]
                if xy < 0:
                    continue
                for z in range(n):
                    l = table[xy * n + z]
                    yz = table[y * n + z]
                    if l < 0 or yz < 0:
                        continue
                    r = table[x * n + yz]
                    if r >= 0 and l != r:
                        return False
        return True

    def descend(k):
        if k == size:
            out.append(tuple(tuple(table[i * n:(i + 1) * n]) for i in range(n)))
            return
        for v in range(n):
            table[k] = v
            if ok(k):
                descend(k + 1)
        table[k] = -1

    descend(0)
    return tuple(out)


def all_semigroups(n):
    """Every associative table on {0..n-1}, labeled, in lexicographic order."""
    if n > 4:
        raise SpecTooLarge("semigroup enumeration is limited to order 4")
    return [FiniteSemigroup(t) for t in _semigroup_tables(n)]


# ----------------------------------------------------------- gamma-solution comparisons

def compare_with_gamma_solutions(sg):
    """Compare enumerated P-QYBE solutions with the gamma-solutions over all
    idempotent endomorphisms, for sg in the variety abc = adbc with S^2 = S.
    """
    report = classify(sg)
    if not report.variety_s:
        raise PreconditionFailed("semigroup is not in the variety abc = adbc",
                                 layer="variety_s")
    if not report.square_is_whole:
        raise PreconditionFailed("semigroup has S^2 != S", layer="square")
    found = enumerate_solutions(SearchSpec("both", "product_form_theta", sg, mode="collect",
                                           limit=10 ** 9))
    expected = sorted(
        assemble(sg, ThetaFamily.constant_rows(sg.order, g.image))
        for g in idempotent_endomorphisms(sg)
    )
    got = set(found.solutions)
    want = set(expected)
    return {
        "agrees": got == want,
        "enumerated": len(got),
        "expected": len(want),
        "only_enumerated": sorted(got - want),
        "only_expected": sorted(want - got),
    }


def left_quasi_normal_power_witnesses(max_order=4, stop_after=None):
    """Left quasi-normal semigroups outside abc = adbc where r(a, b) = (b, ab)
    satisfies r^5 = r^3 while some of r^2, r^3, r^4 fails the braid equation.
    """
    hits = []
    for n in range(1, max_order + 1):
        for sg in all_semigroups(n):
            if left_quasi_normal_witness(sg) is not None or in_variety_s(sg):
                continue
            s = assemble(sg, ThetaFamily.constant_rows(n, range(n)))
            r = transform(s, "compose_flip_left")
            powers = {k: power(r, k) for k in (2, 3, 4, 5)}
            r3 = power(r, 3)
            if powers[5] != r3:
                continue
            failing = [k for k in (2, 3, 4) if not verify_equation(powers[k], "braid").holds]
            if failing:
                hits.append((sg, failing))
                if stop_after and len(hits) >= stop_after:
                    return hits
    return hits
