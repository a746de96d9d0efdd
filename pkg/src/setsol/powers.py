"""Iterated powers of pair maps: index, period and the braid-power identities."""

from dataclasses import dataclass, field

import numpy as np

from .conditions import check_pqybe_conditions
from .errors import CapExceeded, PreconditionNotInVarietyS, PreconditionNotPE, PreconditionNotPQYBE
from .semigroup import idempotent_witness, variety_s_witness
from .solution import (
    PairMap,
    decompose_product_form,
    equation_ok,
    passed,
    power,
    run_checks,
    transform,
    verify_equation,
)

DEFAULT_CAP = 64
PROFILE_EQUATIONS = ("pentagon", "qybe", "braid")


@dataclass
class PowerProfile:
    index: int
    period: int
    power_verdicts: list
    powers: list = field(default_factory=list, repr=False)

    def to_dict(self):
        return {"index": self.index, "period": self.period, "power_verdicts": self.power_verdicts}


def power_profile(f, cap=DEFAULT_CAP):
    """Index and period of f, with f^0 the identity on S x S.

    ind(f) is the least j >= 0 such that f^j = f^l for some l >= 1, l != j;
    per(f) is the least k >= 1 with f^(ind + k) = f^ind. Both come from the
    first repetition f^m = f^i (i < m) in the sequence f^0, f^1, ...
    """
    if cap < 2:
        raise ValueError("cap must be at least 2")
    powers = [PairMap.identity(f.order)]
    seen = {powers[0].key: 0}
    while True:
        m = len(powers)
        if m > cap:
            raise CapExceeded(cap, powers)
        nxt = f.compose(powers[-1])
        if nxt.key in seen:
            index = seen[nxt.key]
            period = m - index
            break
        seen[nxt.key] = m
        powers.append(nxt)
    verdicts = []
    for j in range(1, index + period + 1):
        p = powers[j] if j < len(powers) else powers[index + (j - index) % period]
        row = {"exponent": j}
        for eq in PROFILE_EQUATIONS:
            row[eq] = verify_equation(p, eq).holds
        verdicts.append(row)
    return PowerProfile(index, period, verdicts, powers)


def _eq(p, q):
    return (p.first == q.first) & (p.second == q.second)


def braid_power_forms(sg, theta, bar):
    """Closed forms of r^2..r^5 for r(a, b) = (theta_a(b), ab), with
    ``bar`` the table used for theta-bar on all of S.

    r^2 = (bar(ab), theta_a(b) ab), r^3 = r^5 = (theta_a(b) bar(ab), bar(a) ab),
    r^4 = (bar(a) bar(ab), theta_a(b) ab).
    """
    m, t = sg.array, theta.theta
    n = sg.order
    a = np.arange(n)[:, None]
    ab = m
    tab = t
    second_even = m[tab, ab]
    first_odd = m[tab, bar[ab]]
    second_odd = np.broadcast_to(m[bar[a], ab], (n, n))
    r2 = PairMap(bar[ab], second_even)
    r3 = PairMap(first_odd, second_odd)
    r4 = PairMap(np.broadcast_to(m[bar[a], bar[ab]], (n, n)), second_even)
    return {2: r2, 3: r3, 4: r4, 5: r3}


def verify_power_theorem(r):
    """For r(a, b) = (theta_a(b), ab) with tau r a P-QYBE solution on a
    semigroup satisfying abc = adbc: r^5 = r^3, r^2, r^3, r^4 satisfy the
    braid equation, the closed forms hold, and r^4 = r^2 when S is idempotent.

    theta-bar is theta restricted to S^2; on elements outside S^2 the forms
    are checked for every choice theta-bar = theta_c.
    """
    s = transform(r, "compose_flip_left")
    parts = decompose_product_form(s)
    if parts is None:
        raise PreconditionNotPQYBE("tau r is not of product form")
    sg, theta = parts
    try:
        pq = check_pqybe_conditions(sg, theta)
    except PreconditionNotPE as exc:
        raise PreconditionNotPQYBE("tau r is not a pentagon solution", verdict=exc.verdict) from None
    if not pq.holds:
        raise PreconditionNotPQYBE("tau r is not a P-QYBE solution", verdict=pq)
    bad = variety_s_witness(sg)
    if bad is not None:
        raise PreconditionNotInVarietyS(f"abc != adbc at {bad}")

    pw = {k: power(r, k) for k in range(2, 6)}
    checks = [("r5_equals_r3", _eq(pw[5], pw[3]))]
    checks += [(f"r{k}_braid", lambda k=k: equation_ok(pw[k], "braid")) for k in (2, 3, 4)]
    for c in range(sg.order):
        forms = braid_power_forms(sg, theta, theta.theta[c])
        checks += [(f"r{k}_closed_form[theta_bar=theta_{c}]", _eq(pw[k], forms[k]))
                   for k in (2, 3, 4, 5)]
    idem = idempotent_witness(sg) is None
    if idem:
        checks.append(("r4_equals_r2", _eq(pw[4], pw[2])))
    verdict = run_checks("power_theorem", checks)
    if not verdict.holds:
        return verdict
    return passed(
        "power_theorem",
        idempotent=idem,
        theta_bar_on_square=pq.details["theta_bar_on_square"],
        powers={k: pw[k].to_dict() for k in pw},
    )
