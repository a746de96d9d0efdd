"""Matched products of semigroups and of pentagon solutions, embeddings of
the factors, and braid solutions on S x T built from pentagon data.

Notation: letters a, b, c range over S and u, v, w over T. ``alpha[u][a]``
is alpha_u(a) in S and ``beta[a][u]`` is beta_a(u) in T. On S, theta comes
from s(a, b) = (ab, theta_a(b)). On T it comes from t(u, v) = (uv, theta_u(v))
for matched quadruples and from the reversed form t(u, v) = (theta_v(u), vu)
for pentagon quadruples; the table is ``theta_T[x][y] = theta_x(y)`` either way.
A pair (a, u) of S x T has index a*|T| + u.
"""

from dataclasses import dataclass

import numpy as np

from ._grid import first_failure
from .conditions import check_pe_conditions
from .errors import BadParams, NoOneSidedIdentity, NotMonoids, OutOfRange, PreconditionFailed
from .semigroup import FiniteSemigroup
from .solution import PairMap, ThetaFamily, run_checks, verify_equation


def _action(values, rows, cols, target, name):
    arr = np.array(values, dtype=np.int64)
    if arr.shape != (rows, cols):
        raise BadParams(f"{name} must be {rows}x{cols}, got shape {arr.shape}")
    bad = first_failure((arr >= 0) & (arr < target))
    if bad is not None:
        raise OutOfRange(bad, int(arr[bad]), target)
    arr.setflags(write=False)
    return arr


class MatchedSystem:
    """(S, T, alpha, beta); ``beta`` may be None for alpha-only systems."""

    def __init__(self, S, T, alpha, beta=None):
        self.S, self.T = S, T
        self.alpha = _action(alpha, T.order, S.order, S.order, "alpha")
        self.beta = None if beta is None else _action(beta, S.order, T.order, T.order, "beta")
        self._matched = None

    @property
    def order(self):
        return self.S.order * self.T.order

    def pair(self, index):
        return divmod(index, self.T.order)

    def index(self, a, u):
        return a * self.T.order + u

    def require_beta(self):
        if self.beta is None:
            raise BadParams("this operation needs a beta action")
        return self.beta

    def to_dict(self):
        return {
            "S": self.S.to_dict(),
            "T": self.T.to_dict(),
            "alpha": self.alpha.tolist(),
            "beta": None if self.beta is None else self.beta.tolist(),
        }

    @classmethod
    def from_dict(cls, data):
        for k in ("S", "T", "alpha"):
            if k not in data:
                raise BadParams(f"matched system missing {k!r}")
        return cls(
            FiniteSemigroup.from_dict(data["S"]),
            FiniteSemigroup.from_dict(data["T"]),
            data["alpha"],
            data.get("beta"),
        )

    @classmethod
    def constant(cls, S, T, alpha_map, beta_map):
        """alpha_u = alpha_map for all u, beta_a = beta_map for all a."""
        return cls(S, T, [list(alpha_map)] * T.order, [list(beta_map)] * S.order)

    @classmethod
    def trivial(cls, S, T):
        return cls.constant(S, T, range(S.order), range(T.order))


@dataclass
class SolutionQuadruple:
    system: MatchedSystem
    theta_S: ThetaFamily
    theta_T: ThetaFamily

    def __post_init__(self):
        if self.theta_S.order != self.system.S.order or self.theta_T.order != self.system.T.order:
            raise BadParams("theta families do not match the carriers")

    def to_dict(self):
        out = self.system.to_dict()
        out["theta_S"] = self.theta_S.to_list()
        out["theta_T"] = self.theta_T.to_list()
        return out

    @classmethod
    def from_dict(cls, data):
        system = MatchedSystem.from_dict(data)
        for k in ("theta_S", "theta_T"):
            if k not in data:
                raise BadParams(f"quadruple missing {k!r}")
        return cls(system, ThetaFamily(data["theta_S"], system.S.order),
                   ThetaFamily(data["theta_T"], system.T.order))


def to_pair(index, t_order):
    return divmod(index, t_order)


def to_index(a, u, t_order):
    return a * t_order + u


class _Vars:
    """Open grids for the named variables; S letters abc, T letters uvw."""

    def __init__(self, names, ns, nt):
        sizes = [ns if ch in "abc" else nt for ch in names]
        for ch, arr in zip(names, np.indices(sizes, sparse=True)):
            setattr(self, ch, arr)
        self.names = names


def _shape_check(names, ns, nt, fn):
    def build():
        v = _Vars(names, ns, nt)
        lhs, rhs = fn(v)
        return np.broadcast_to(lhs == rhs, np.broadcast_shapes(*(getattr(v, c).shape for c in names)))

    return build


# ---------------------------------------------------------------- semigroups

def _matched_checks(system):
    S, T = system.S.array, system.T.array
    al, be = system.alpha, system.require_beta()
    ns, nt = system.S.order, system.T.order

    def s1(v):
        a, b, u, w = v.a, v.b, v.u, v.v
        return al[u, S[a, al[w, b]]], S[al[u, a], al[T[be[a, u], w], b]]

    def s2(v):
        a, b, u, w = v.a, v.b, v.u, v.v
        return be[a, T[be[b, u], w]], T[be[S[b, al[w, a]], u], be[a, w]]

    return [
        ("S1", _shape_check("abuv", ns, nt, s1), "abuv"),
        ("S2", _shape_check("abuv", ns, nt, s2), "abuv"),
    ]


def check_matched_semigroup(system):
    """(S1) alpha_u(a alpha_v(b)) = alpha_u(a) alpha_{beta_a(u) v}(b) and
    (S2) beta_a(beta_b(u) v) = beta_{b alpha_v(a)}(u) beta_a(v)."""
    return run_checks("matched_semigroup", _matched_checks(system))


def _product_table(system):
    S, T = system.S.array, system.T.array
    al, be = system.alpha, system.require_beta()
    nt = system.T.order
    idx = np.arange(system.order)
    a, u = idx // nt, idx % nt
    A, U = a[:, None], u[:, None]
    B, V = a[None, :], u[None, :]
    first = S[A, al[U, B]]
    second = T[be[B, U], V]
    return first * nt + second


def build_matched_semigroup(system):
    """S x T with (a, u)(b, v) = (a alpha_u(b), beta_b(u) v)."""
    verdict = check_matched_semigroup(system)
    if not verdict.holds:
        raise PreconditionFailed("not a matched pair of semigroups", verdict, verdict.condition_tag)
    return FiniteSemigroup(_product_table(system).tolist())


def check_zappa(system):
    """alpha_u(ab) = alpha_u(a) alpha_{beta_a(u)}(b), alpha_{uv} = alpha_u alpha_v,
    beta_a(uv) = beta_{alpha_v(a)}(u) beta_a(v), beta_{ab} = beta_b beta_a.

    These imply (S1) and (S2); a system passing them but failing the matched
    check raises AssertionError.
    """
    S, T = system.S.array, system.T.array
    al, be = system.alpha, system.require_beta()
    ns, nt = system.S.order, system.T.order
    checks = [
        ("S1'_hom", _shape_check("abu", ns, nt, lambda v: (
            al[v.u, S[v.a, v.b]], S[al[v.u, v.a], al[be[v.a, v.u], v.b]])), "abu"),
        ("S1'_action", _shape_check("auv", ns, nt, lambda v: (
            al[T[v.u, v.v], v.a], al[v.u, al[v.v, v.a]])), "auv"),
        ("S2'_hom", _shape_check("auv", ns, nt, lambda v: (
            be[v.a, T[v.u, v.v]], T[be[al[v.v, v.a], v.u], be[v.a, v.v]])), "auv"),
        ("S2'_action", _shape_check("abu", ns, nt, lambda v: (
            be[S[v.a, v.b], v.u], be[v.b, be[v.a, v.u]])), "abu"),
    ]
    verdict = run_checks("zappa", checks)
    matched = check_matched_semigroup(system)
    if verdict.holds and not matched.holds:
        raise AssertionError(f"Zappa conditions hold but {matched.condition_tag} fails")
    return verdict


def zappa_product_table(system):
    """Table of the Zappa product computed pair by pair, for comparison."""
    S, T = system.S, system.T
    al, be = system.alpha, system.require_beta()
    nt = T.order
    pairs = [(a, u) for a in S.elements for u in T.elements]
    return [
        [to_index(S.mul(a, int(al[u, b])), T.mul(int(be[b, u]), v), nt) for (b, v) in pairs]
        for (a, u) in pairs
    ]


# ------------------------------------------------------------------ embeddings

def check_embeddings(system, e_S=None, e_T=None):
    """(S3) alpha_{e_T} = id, (S4) beta_a(e_T) = e_T, (S5) beta_{e_S} = id,
    (S6) alpha_u(e_S) = e_S, for a right identity e_S and left identity e_T.

    Copies S* = {(a, e_T)} and T* = {(e_S, u)} whose defining pair holds are
    compared with S and T table by table and returned in ``details``.
    """
    S, T = system.S, system.T
    al, be = system.alpha, system.require_beta()
    if e_S is None:
        if not S.right_identities:
            raise NoOneSidedIdentity("S has no right identity")
        e_S = S.right_identities[0]
    elif e_S not in S.right_identities:
        raise NoOneSidedIdentity(f"{e_S} is not a right identity of S")
    if e_T is None:
        if not T.left_identities:
            raise NoOneSidedIdentity("T has no left identity")
        e_T = T.left_identities[0]
    elif e_T not in T.left_identities:
        raise NoOneSidedIdentity(f"{e_T} is not a left identity of T")
    a = np.arange(S.order)
    u = np.arange(T.order)
    ok = {
        "S3": al[e_T, a] == a,
        "S4": be[a, e_T] == e_T,
        "S5": be[e_S, u] == u,
        "S6": al[u, e_S] == e_S,
    }
    table = np.array(_product_table(system))
    nt = T.order
    details = {"e_S": int(e_S), "e_T": int(e_T)}
    if first_failure(ok["S3"]) is None and first_failure(ok["S4"]) is None:
        copy = [to_index(x, e_T, nt) for x in S.elements]
        image = {v: i for i, v in enumerate(copy)}
        sub = [[image.get(int(table[p, q]), -1) for q in copy] for p in copy]
        details["S_star"] = copy
        details["S_star_isomorphic"] = sub == [list(r) for r in S.table]
    if first_failure(ok["S5"]) is None and first_failure(ok["S6"]) is None:
        copy = [to_index(e_S, w, nt) for w in T.elements]
        image = {v: i for i, v in enumerate(copy)}
        sub = [[image.get(int(table[p, q]), -1) for q in copy] for p in copy]
        details["T_star"] = copy
        details["T_star_isomorphic"] = sub == [list(r) for r in T.table]
    return run_checks("embeddings", [(k, ok[k], "a" if k in ("S3", "S4") else "u") for k in ok],
                      **details)


# ---------------------------------------------------------- matched quadruples

def _pe_layers(quad):
    system = quad.system
    sv = check_matched_semigroup(system)
    if not sv.holds:
        raise PreconditionFailed("not a matched pair of semigroups", sv, sv.condition_tag)
    for name, sg, th in (("s", system.S, quad.theta_S), ("t", system.T, quad.theta_T)):
        v = check_pe_conditions(sg, th)
        if not v.holds:
            raise PreconditionFailed(f"{name} is not a pentagon solution", v, f"pe_{name}")


def _m_checks(quad):
    system = quad.system
    S, T = system.S.array, system.T.array
    al, be = system.alpha, system.beta
    ts, tt = quad.theta_S.theta, quad.theta_T.theta
    ns, nt = system.S.order, system.T.order

    def m1(v):
        # theta_a alpha_u = theta_{alpha_v(a)} alpha_{beta_a(v) u}, applied to b
        a, b, u, w = v.a, v.b, v.u, v.v
        return ts[a, al[u, b]], ts[al[w, a], al[T[be[a, w], u], b]]

    def m2(v):
        # theta_{a alpha_u(b)} = alpha_{theta_{beta_b(u)}(v)} theta_{a alpha_u(b)}, applied to c
        a, b, c, u, w = v.a, v.b, v.c, v.u, v.v
        left = ts[S[a, al[u, b]], c]
        return left, al[tt[be[b, u], w], left]

    def m3(v):
        a, b, c, u, w = v.a, v.b, v.c, v.u, v.v
        idx = ts[S[a, al[u, b]], al[T[be[b, u], w], c]]
        return be[idx, tt[be[b, u], w]], tt[be[S[b, al[w, c]], u], be[c, w]]

    return [
        ("M1", _shape_check("abuv", ns, nt, m1), "abuv"),
        ("M2", _shape_check("abcuv", ns, nt, m2), "abcuv"),
        ("M3", _shape_check("abcuv", ns, nt, m3), "abcuv"),
    ]


def _m3_on_images(quad):
    """(M3) with both sides only compared where the pentagon identities for
    s |><| t use them: multiplied on the right by, and as the subscript of
    theta applied to, n = theta_{beta_c(beta_b(u) v)}(w). Implied by (M3)."""
    system = quad.system
    S, T = system.S.array, system.T.array
    al, be = system.alpha, system.beta
    ts, tt = quad.theta_S.theta, quad.theta_T.theta
    ns, nt = system.S.order, system.T.order

    def sides(v):
        a, b, c, u, w, z = v.a, v.b, v.c, v.u, v.v, v.w
        buv = T[be[b, u], w]
        n = tt[be[c, buv], z]
        left = be[ts[S[a, al[u, b]], al[buv, c]], tt[be[b, u], w]]
        right = tt[be[S[b, al[w, c]], u], be[c, w]]
        return left, right, n

    def product(v):
        left, right, n = sides(v)
        return T[left, n], T[right, n]

    def subscript(v):
        left, right, n = sides(v)
        return tt[left, n], tt[right, n]

    return run_checks("m3_on_images", [
        ("M3_product", _shape_check("abcuvw", ns, nt, product), "abcuvw"),
        ("M3_subscript", _shape_check("abcuvw", ns, nt, subscript), "abcuvw"),
    ])


def _m2_prime(quad):
    system = quad.system
    al = system.alpha
    ts, tt = quad.theta_S.theta, quad.theta_T.theta
    ns, nt = system.S.order, system.T.order
    return run_checks("m2_prime", [("M2'", _shape_check("abuv", ns, nt, lambda v: (
        ts[v.a, v.b], al[tt[v.u, v.v], ts[v.a, v.b]])), "abuv")])


def check_matched_quadruple(quad):
    """(M1)-(M3), each quantified over exactly the variables it mentions.

    When S has a right identity satisfying (S5) and (S6), ``details`` also
    reports the shortened form theta_a = alpha_{theta_u(v)} theta_a of (M2)
    and whether it agrees with (M2).
    """
    _pe_layers(quad)
    checks = _m_checks(quad)
    verdict = run_checks("matched_quadruple", checks)
    details = {}
    if verdict.condition_tag == "M3":
        details["m3_on_images"] = _m3_on_images(quad).to_dict()
    system = quad.system
    be, al = system.beta, system.alpha
    for e in system.S.right_identities:
        if (be[e] == np.arange(system.T.order)).all() and (al[:, e] == e).all():
            m2 = run_checks("", [checks[1]]).holds
            short = _m2_prime(quad).holds
            details["m2_prime"] = {"e_S": e, "holds": short, "agrees_with_m2": short == m2}
            break
    if details:
        return type(verdict)(verdict.holds, verdict.equation, verdict.condition_tag,
                             verdict.counterexample, dict(verdict.details, **details))
    return verdict


def matched_solution_map(quad):
    system = quad.system
    S, T = system.S.array, system.T.array
    al, be = system.alpha, system.beta
    ts, tt = quad.theta_S.theta, quad.theta_T.theta
    nt = system.T.order
    idx = np.arange(system.order)
    A, U = (idx // nt)[:, None], (idx % nt)[:, None]
    B, V = (idx // nt)[None, :], (idx % nt)[None, :]
    alb = al[U, B]
    bu = be[B, U]
    first = S[A, alb] * nt + T[bu, V]
    second = ts[A, alb] * nt + tt[bu, V]
    return PairMap(first, second)


def build_matched_solution(quad):
    """s |><| t (a, u; b, v) = (a alpha_u(b), beta_b(u) v; theta_a alpha_u(b), theta_{beta_b(u)}(v)).

    (M1), (M2) and (M3) are required, except that (M3) may be replaced by
    its weaker form on theta-images (see ``details["m3_on_images"]``).
    """
    verdict = check_matched_quadruple(quad)
    weak = verdict.details.get("m3_on_images")
    if not verdict.holds and not (weak and weak["holds"]):
        raise PreconditionFailed("not a matched quadruple", verdict, verdict.condition_tag)
    s = matched_solution_map(quad)
    pe = verify_equation(s, "pentagon")
    if not pe.holds:
        raise AssertionError(f"matched solution fails the pentagon equation at {pe.counterexample}")
    return s


def check_monoid_quadruple(quad):
    """Shortened conditions for monoids:
    theta_a = alpha_{theta_u(v)} theta_a = theta_{alpha_v(a)} alpha_{beta_a(v)} and
    beta_{theta_a alpha_{uv}(b)}(theta_u(v)) = theta_{beta_{alpha_v(b)}(u)}(beta_b(v)).

    The full (M1)-(M3) verdict on the same input is in ``details``.
    """
    system = quad.system
    S, T = system.S, system.T
    if S.identity is None or T.identity is None:
        raise NotMonoids("S and T must both be monoids")
    emb = check_embeddings(system, e_S=S.identity, e_T=T.identity)
    if not emb.holds:
        raise PreconditionFailed("identities do not satisfy (S3)-(S6)", emb, emb.condition_tag)
    _pe_layers(quad)
    Ta = T.array
    al, be = system.alpha, system.beta
    ts, tt = quad.theta_S.theta, quad.theta_T.theta
    ns, nt = S.order, T.order

    def c2(v):
        a, b, u, w = v.a, v.b, v.u, v.v
        return be[ts[a, al[Ta[u, w], b]], tt[u, w]], tt[be[al[w, b], u], be[b, w]]

    checks = [
        ("monoid_1a", _shape_check("abuv", ns, nt, lambda v: (
            ts[v.a, v.b], al[tt[v.u, v.v], ts[v.a, v.b]])), "abuv"),
        ("monoid_1b", _shape_check("abv", ns, nt, lambda v: (
            ts[v.a, v.b], ts[al[v.v, v.a], al[be[v.a, v.v], v.b]])), "abv"),
        ("monoid_2", _shape_check("abuv", ns, nt, c2), "abuv"),
    ]
    full = check_matched_quadruple(quad)
    verdict = run_checks("monoid_quadruple", checks)
    return type(verdict)(verdict.holds, verdict.equation, verdict.condition_tag,
                         verdict.counterexample,
                         dict(verdict.details, full_check=full.to_dict(),
                              agrees_with_full=full.holds == verdict.holds))


# --------------------------------------------------------- pentagon quadruples

def reversed_map(T, theta_T):
    """t(u, v) = (theta_v(u), vu)."""
    return PairMap(theta_T.theta.T, T.array.T)


def _reversed_layer(T, theta_T, also_qybe=False):
    t = reversed_map(T, theta_T)
    v = verify_equation(t, "reversed_pentagon")
    if not v.holds:
        raise PreconditionFailed("t is not a reversed solution", v, "reversed_t")
    if also_qybe:
        q = verify_equation(t, "qybe")
        if not q.holds:
            raise PreconditionFailed("t is not a QYBE solution", q, "qybe_t")


def _pq_checks(quad, with_beta=True):
    system = quad.system
    S, T = system.S.array, system.T.array
    ns, nt = system.S.order, system.T.order
    al = system.alpha
    be = system.beta if with_beta else np.broadcast_to(np.arange(nt), (ns, nt))
    ts, tt = quad.theta_S.theta, quad.theta_T.theta

    # a_u b_v = alpha_u(a) alpha_{theta_v beta_a(u)}(b)
    def a_u_b_v(a, u, b, v):
        return S[al[u, a], al[tt[v, be[a, u]], b]]

    # u_a v_b = beta_a(u) beta_{theta_b alpha_u(a)}(v)
    def u_a_v_b(u, a, v, b):
        return T[be[a, u], be[ts[b, al[u, a]], v]]

    def p1(x):
        a, b, c, u, v = x.a, x.b, x.c, x.u, x.v
        bc = a_u_b_v(b, u, c, v)
        return S[a, bc], S[S[a, ts[b, al[v, c]]], bc]

    def r1(x):
        u, v, w, a, b = x.u, x.v, x.w, x.a, x.b
        vw = u_a_v_b(v, a, w, b)
        return T[u, vw], T[T[u, tt[v, be[b, w]]], vw]

    def p2(x):
        a, b, c, u, v = x.a, x.b, x.c, x.u, x.v
        return ts[a, ts[b, al[u, c]]], ts[al[v, b], al[tt[u, be[b, v]], c]]

    def r2(x):
        u, v, w, a, b = x.u, x.v, x.w, x.a, x.b
        return tt[u, tt[v, be[a, w]]], tt[be[b, v], be[ts[a, al[v, b]], w]]

    def p3(x):
        a, b, c, u = x.a, x.b, x.c, x.u
        bc = S[b, c]
        return ts[a, bc], ts[S[a, ts[b, al[u, c]]], bc]

    def r3(x):
        u, v, w, a = x.u, x.v, x.w, x.a
        vw = T[v, w]
        return tt[u, vw], tt[T[u, tt[v, be[a, w]]], vw]

    def p4(x):
        a, b, u, v, w = x.a, x.b, x.u, x.v, x.w
        # theta_{w v_b}(u_a) = theta_{w beta_b(v)} beta_{theta_a alpha_v(b)}(u)
        idx = tt[T[w, be[b, v]], be[ts[a, al[v, b]], u]]
        return a_u_b_v(a, u, b, v), al[idx, S[a, al[v, b]]]

    def r4(x):
        a, b, c, u, v = x.a, x.b, x.c, x.u, x.v
        # theta_{c b_v}(a_u) = theta_{c alpha_v(b)} alpha_{theta_u beta_b(v)}(a)
        idx = ts[S[c, al[v, b]], al[tt[u, be[b, v]], a]]
        return u_a_v_b(u, a, v, b), be[idx, T[u, be[b, v]]]

    def p5(x):
        return ts[x.a, x.b], al[x.u, ts[x.a, x.b]]

    def r5(x):
        return tt[x.u, x.v], be[x.a, tt[x.u, x.v]]

    p = [
        ("p1", _shape_check("abcuv", ns, nt, p1), "abcuv"),
        ("p2", _shape_check("abcuv", ns, nt, p2), "abcuv"),
        ("p3", _shape_check("abcu", ns, nt, p3), "abcu"),
        ("p4", _shape_check("abuvw", ns, nt, p4), "abuvw"),
        ("p5", _shape_check("abu", ns, nt, p5), "abu"),
    ]
    r = [
        ("r1", _shape_check("abuvw", ns, nt, r1), "abuvw"),
        ("r2", _shape_check("abuvw", ns, nt, r2), "abuvw"),
        ("r3", _shape_check("auvw", ns, nt, r3), "auvw"),
        ("r4", _shape_check("abcuv", ns, nt, r4), "abcuv"),
        ("r5", _shape_check("auv", ns, nt, r5), "auv"),
    ]
    if not with_beta:
        return p
    # interleaved as the conditions pair up
    return [c for pair in zip(p, r) for c in pair]


def check_pentagon_quadruple(quad):
    """(p1)-(p5) and (r1)-(r5) for s(a, b) = (ab, theta_a(b)) on S and the
    reversed solution t(u, v) = (theta_v(u), vu) on T."""
    system = quad.system
    system.require_beta()
    v = check_pe_conditions(system.S, quad.theta_S)
    if not v.holds:
        raise PreconditionFailed("s is not a pentagon solution", v, "pe_s")
    _reversed_layer(system.T, quad.theta_T)
    return run_checks("pentagon_quadruple", _pq_checks(quad))


def pentagon_quadruple_map(quad, with_beta=True):
    system = quad.system
    S, T = system.S.array, system.T.array
    ns, nt = system.S.order, system.T.order
    al = system.alpha
    be = system.beta if with_beta else np.broadcast_to(np.arange(nt), (ns, nt))
    ts, tt = quad.theta_S.theta, quad.theta_T.theta
    idx = np.arange(system.order)
    A, U = (idx // nt)[:, None], (idx % nt)[:, None]
    B, V = (idx // nt)[None, :], (idx % nt)[None, :]
    alb = al[U, B]
    bu = be[B, U]
    first = ts[A, alb] * nt + T[V, bu]
    second = S[A, alb] * nt + tt[V, bu]
    return PairMap(first, second)


def _braid_checked(r):
    v = verify_equation(r, "braid")
    if not v.holds:
        raise AssertionError(f"constructed map fails the braid equation at {v.counterexample}")
    return r


def build_ybe_from_pentagon_quadruple(quad):
    """r(a, u; b, v) = (theta_a alpha_u(b), v beta_b(u); a alpha_u(b), theta_v beta_b(u))."""
    verdict = check_pentagon_quadruple(quad)
    if not verdict.holds:
        raise PreconditionFailed("not a pentagon quadruple", verdict, verdict.condition_tag)
    return _braid_checked(pentagon_quadruple_map(quad))


def check_alpha_system(quad):
    """Conditions (p1)-(p5) with beta absent, for s a pentagon solution on S
    and t(u, v) = (theta_v(u), vu) a reversed solution on T that also
    satisfies the quantum Yang-Baxter equation."""
    system = quad.system
    v = check_pe_conditions(system.S, quad.theta_S)
    if not v.holds:
        raise PreconditionFailed("s is not a pentagon solution", v, "pe_s")
    _reversed_layer(system.T, quad.theta_T, also_qybe=True)
    return run_checks("alpha_system", _pq_checks(quad, with_beta=False))


def build_ybe_from_alpha_system(quad):
    """r(a, u; b, v) = (theta_a alpha_u(b), vu; a alpha_u(b), theta_v(u))."""
    verdict = check_alpha_system(quad)
    if not verdict.holds:
        raise PreconditionFailed("alpha system conditions fail", verdict, verdict.condition_tag)
    return _braid_checked(pentagon_quadruple_map(quad, with_beta=False))
