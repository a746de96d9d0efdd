"""Structural conditions on product-form maps s(x, y) = (xy, theta_x(y))."""

from dataclasses import dataclass

import numpy as np

from ._grid import grid
from .errors import NotAGroup, PreconditionNotPE, PreconditionNotPQYBE
from .semigroup import idempotent_witness
from .solution import PairMap, assemble, passed, power, run_checks


def check_pe_conditions(sg, theta):
    """theta_x(y) theta_xy(z) = theta_x(yz) and theta_{theta_x(y)} theta_xy = theta_y.

    Together with associativity of the table these are equivalent to the
    pentagon equation for the assembled map. Tags: ``theta_mult``, ``theta_comp``.
    """
    m, t = sg.array, theta.theta
    n = sg.order
    x, y, z = grid(n, n, n)
    xy = m[x, y]
    return run_checks(
        "pe_conditions",
        [
            ("theta_mult", lambda: m[t[x, y], t[xy, z]] == t[x, m[y, z]]),
            ("theta_comp", lambda: t[t[x, y], t[xy, z]] == t[y, z]),
        ],
    )


def _pqybe_checks(sg, theta):
    m, t = sg.array, theta.theta
    n = sg.order
    a, b, c = grid(n, n, n)
    bc = m[b, c]
    tbc = t[b, c]
    return [
        ("Y1", lambda: m[m[a, b], c] == m[m[m[a, tbc], b], c]),
        ("Y2", lambda: t[a, tbc] == tbc),
        ("Y3", lambda: t[a, bc] == t[tbc, bc]),
    ]


def pqybe_structure(sg, theta):
    """Facts that follow once (Y1)-(Y3) hold; every one is checked, not assumed."""
    m, t = sg.array, theta.theta
    n = sg.order
    idem = all(np.array_equal(t[a][t[a]], t[a]) for a in range(n))
    sq = sg.square
    rows_on_square = {tuple(t[a, sq].tolist()) for a in range(n)}
    agree = len(rows_on_square) == 1
    # theta_{ab} = theta_b
    product_law = bool((t[m] == t[None, :, :]).all())
    out = {
        "theta_idempotent": idem,
        "agree_on_square": agree,
        "theta_of_product": product_law,
        "theta_bar_on_square": None,
        "theta_bar": None,
    }
    if agree:
        (vals,) = rows_on_square
        out["theta_bar_on_square"] = dict(zip(sq, vals))
        if len(sq) == n:
            bar = t[0]
            endo = bool((bar[m] == m[bar[:, None], bar[None, :]]).all())
            idem_bar = bool((bar[bar] == bar).all())
            if endo and idem_bar:
                out["theta_bar"] = tuple(bar.tolist())
    return out


def check_pqybe_conditions(sg, theta):
    """(Y1) abc = a theta_b(c) bc, (Y2) theta_a theta_b = theta_b,
    (Y3) theta_a(bc) = theta_{theta_b(c)}(bc).

    Raises PreconditionNotPE unless the pair is a pentagon solution.
    """
    pe = check_pe_conditions(sg, theta)
    if not pe.holds:
        raise PreconditionNotPE("not a pentagon solution", verdict=pe, layer="pe_conditions")
    verdict = run_checks("pqybe_conditions", _pqybe_checks(sg, theta))
    if verdict.holds:
        return passed("pqybe_conditions", **pqybe_structure(sg, theta))
    return verdict


def is_pqybe(sg, theta):
    return check_pe_conditions(sg, theta).holds and run_checks("", _pqybe_checks(sg, theta)).holds


def element_power(sg, x, k):
    acc = x
    for _ in range(k - 1):
        acc = sg.table[acc][x]
    return acc


def power_closed_form(sg, theta, n):
    """(ab theta_a(b)^(n-1), theta_a(b)) as a PairMap."""
    m = sg.array
    pw = np.array([element_power(sg, x, n - 1) for x in range(sg.order)])
    t = theta.theta
    return PairMap(m[m, pw[t]], t)


def verify_power_formula(sg, theta, n):
    if n < 2:
        raise ValueError("the closed form starts at n = 2")
    try:
        pq = check_pqybe_conditions(sg, theta)
    except PreconditionNotPE as exc:
        raise PreconditionNotPQYBE("not a P-QYBE solution", verdict=exc.verdict) from None
    if not pq.holds:
        raise PreconditionNotPQYBE("not a P-QYBE solution", verdict=pq, layer=pq.condition_tag)
    s = assemble(sg, theta)
    sn = power(s, n)
    checks = [("closed_form", (sn.first == power_closed_form(sg, theta, n).first)
               & (sn.second == theta.theta))]
    if idempotent_witness(sg) is None:
        s2, s3 = power(s, 2), power(s, 3)
        checks.append(("cube_equals_square", (s2.first == s3.first) & (s2.second == s3.second)))
    return run_checks(f"power_formula[{n}]", checks)


@dataclass(frozen=True)
class KernelReport:
    kernel: tuple
    is_subgroup: bool
    is_normal: bool

    def to_dict(self):
        return {"kernel": list(self.kernel), "is_subgroup": self.is_subgroup, "is_normal": self.is_normal}


def kernel(sg, theta):
    """{a : theta_1(a) = 1} for a pentagon solution on a group."""
    if not sg.is_group:
        raise NotAGroup("kernel needs a group carrier")
    pe = check_pe_conditions(sg, theta)
    if not pe.holds:
        raise PreconditionNotPE("not a pentagon solution", verdict=pe)
    e, inv, t = sg.identity, sg.inverses, sg.table
    k = tuple(a for a in sg.elements if theta(e, a) == e)
    ks = set(k)
    subgroup = e in ks and all(t[a][b] in ks for a in k for b in k) and all(inv[a] in ks for a in k)
    normal = all(t[t[g][a]][inv[g]] in ks for g in sg.elements for a in k)
    return KernelReport(k, subgroup, normal)
