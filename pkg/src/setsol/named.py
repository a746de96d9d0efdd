"""Builders for the standard solution families."""

from .errors import BadParams, OutOfRange
from .semigroup import SelfMap, build_inflation, standard_semigroup
from .solution import PairMap, ThetaFamily, assemble


def _selfmap(values, n, name):
    try:
        f = values if isinstance(values, SelfMap) else SelfMap(tuple(values))
    except (BadParams, OutOfRange) as exc:
        raise BadParams(f"{name}: {exc}") from None
    if len(f) != n:
        raise BadParams(f"{name} must map a {n}-element set, got {len(f)} images")
    return f


def _params(params, *names):
    missing = [k for k in names if k not in params]
    extra = set(params) - set(names)
    if missing or extra:
        raise BadParams(f"expected parameters {names}, got {sorted(params)}")
    return [params[k] for k in names]


def build_named_solution(kind, **params):
    """Construct one of the named maps; the caller verifies equations.

    ``gamma``       semigroup, gamma: s(x, y) = (xy, gamma(y)), gamma an idempotent endomorphism
    ``constant``    semigroup, e: s(x, y) = (xy, e), e idempotent
    ``militaru``    f, g: s(x, y) = (f(x), g(y)), f, g idempotent with fg = gf
    ``right_zero``  phi: s(a, b) = (b, phi(b)) on the right-zero semigroup, phi idempotent
    ``inflation``   T, theta, phi: s(a, b) = (ab, theta_{phi(a)}(phi(b))) on the inflation of T
    ``product_form``  semigroup, theta: s(x, y) = (xy, theta_x(y))
    ``sandwich``    semigroup: s(a, b) = (ab, bab)
    """
    if kind == "gamma":
        sg, gamma = _params(params, "semigroup", "gamma")
        g = _selfmap(gamma, sg.order, "gamma")
        if not g.is_idempotent:
            raise BadParams("gamma must be idempotent")
        if not g.is_endomorphism(sg):
            raise BadParams("gamma must be an endomorphism of the semigroup")
        return assemble(sg, ThetaFamily.constant_rows(sg.order, g.image))
    if kind == "constant":
        sg, e = _params(params, "semigroup", "e")
        if not 0 <= e < sg.order or sg.mul(e, e) != e:
            raise BadParams(f"{e!r} is not an idempotent element")
        return assemble(sg, ThetaFamily.constant_rows(sg.order, [e] * sg.order))
    if kind == "militaru":
        f, g = _params(params, "f", "g")
        n = len(f)
        f, g = _selfmap(f, n, "f"), _selfmap(g, n, "g")
        if not (f.is_idempotent and g.is_idempotent):
            raise BadParams("f and g must be idempotent")
        if f.compose(g) != g.compose(f):
            raise BadParams("f and g must commute (fg != gf)")
        return PairMap.from_function(n, lambda x, y: (f(x), g(y)))
    if kind == "right_zero":
        (phi,) = _params(params, "phi")
        n = len(phi)
        phi = _selfmap(phi, n, "phi")
        if not phi.is_idempotent:
            raise BadParams("phi must be idempotent")
        return PairMap.from_function(n, lambda a, b: (b, phi(b)))
    if kind == "inflation":
        T, theta, phi = _params(params, "T", "theta", "phi")
        phi = list(phi)
        S = build_inflation(T, len(phi), phi)
        bar = list(range(T.order)) + phi
        return PairMap.from_function(
            S.order, lambda a, b: (S.mul(a, b), theta(bar[a], bar[b]))
        )
    if kind == "product_form":
        sg, theta = _params(params, "semigroup", "theta")
        if not isinstance(theta, ThetaFamily):
            theta = ThetaFamily(theta, sg.order)
        return assemble(sg, theta)
    if kind == "sandwich":
        (sg,) = _params(params, "semigroup")
        return PairMap.from_function(sg.order, lambda a, b: (sg.mul(a, b), sg.product(b, a, b)))
    raise BadParams(f"unknown solution kind {kind!r}")


def right_zero_semigroup(n):
    return standard_semigroup("right_zero", n=n)
