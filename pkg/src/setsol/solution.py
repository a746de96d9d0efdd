"""Maps on S x S and brute-force checks of the four functional equations.

A map s is stored as two n-by-n tables, ``s(x, y) = (first[x][y], second[x][y])``.
On triples, ``s12 = s x id``, ``s23 = id x s`` and ``s13`` acts on the outer
coordinates. Compositions are written right to left, so ``s23 s13 s12``
applies ``s12`` first.
"""

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from ._grid import first_failure, grid
from .errors import BadParams, NotAssociative, OutOfRange
from .semigroup import FiniteSemigroup, associativity_witness

EQUATIONS = ("pentagon", "reversed_pentagon", "qybe", "braid", "braid_variant")


def _as_table(values, n, name):
    arr = np.array(values, dtype=np.int64)
    if arr.shape != (n, n):
        raise BadParams(f"{name} must be {n}x{n}, got shape {arr.shape}")
    bad = first_failure((arr >= 0) & (arr < n))
    if bad is not None:
        raise OutOfRange(bad, int(arr[bad]), n)
    arr.setflags(write=False)
    return arr


class PairMap:
    """A map on S x S for S = {0..n-1}.

    ``lam(x)`` and ``rho(y)`` are the component maps of the braid notation
    r(x, y) = (lam_x(y), rho_y(x)).
    """

    def __init__(self, first, second, order=None):
        if order is None:
            order = len(first)
        if order < 1:
            raise BadParams("order must be positive")
        self.order = int(order)
        self.first = _as_table(first, self.order, "first")
        self.second = _as_table(second, self.order, "second")

    def __call__(self, x, y):
        return int(self.first[x, y]), int(self.second[x, y])

    def __eq__(self, other):
        return (
            isinstance(other, PairMap)
            and self.order == other.order
            and np.array_equal(self.first, other.first)
            and np.array_equal(self.second, other.second)
        )

    def __hash__(self):
        return hash(self.key)

    @cached_property
    def key(self):
        """Concatenated (first, second) entries; sorting by it is canonical."""
        return tuple(self.first.ravel().tolist()) + tuple(self.second.ravel().tolist())

    def __lt__(self, other):
        return (self.order, self.key) < (other.order, other.key)

    def __repr__(self):
        return f"PairMap(order={self.order}, first={self.first.tolist()}, second={self.second.tolist()})"

    def lam(self, x):
        return tuple(self.first[x, :].tolist())

    def rho(self, y):
        return tuple(self.second[:, y].tolist())

    def compose(self, other):
        """The map (x, y) -> self(other(x, y))."""
        if other.order != self.order:
            raise BadParams("cannot compose maps on different carriers")
        i, j = other.first, other.second
        return PairMap(self.first[i, j], self.second[i, j])

    def where_differs(self, other):
        """First pair (x, y) where the two maps disagree, or None."""
        return first_failure((self.first == other.first) & (self.second == other.second))

    @classmethod
    def identity(cls, n):
        x, y = np.indices((n, n))
        return cls(x, y)

    @classmethod
    def flip(cls, n):
        x, y = np.indices((n, n))
        return cls(y, x)

    @classmethod
    def from_function(cls, n, fn):
        first = [[0] * n for _ in range(n)]
        second = [[0] * n for _ in range(n)]
        for x in range(n):
            for y in range(n):
                first[x][y], second[x][y] = fn(x, y)
        return cls(first, second, n)

    def to_dict(self, semigroup=None):
        out = {"order": self.order, "first": self.first.tolist(), "second": self.second.tolist()}
        if semigroup is not None:
            out["semigroup"] = semigroup
        return out

    @classmethod
    def from_dict(cls, data):
        allowed = {"order", "first", "second", "semigroup"}
        if not isinstance(data, dict) or set(data) - allowed:
            raise BadParams(f"solution object may only have fields {sorted(allowed)}")
        for k in ("order", "first", "second"):
            if k not in data:
                raise BadParams(f"solution object missing {k!r}")
        order = data["order"]
        if isinstance(order, bool) or not isinstance(order, int):
            raise BadParams("order must be an integer")
        return cls(data["first"], data["second"], order)


class ThetaFamily:
    """Self-maps theta_x of S, with ``theta[x][y] = theta_x(y)``."""

    def __init__(self, theta, order=None):
        if order is None:
            order = len(theta)
        self.order = int(order)
        self.theta = _as_table(theta, self.order, "theta")

    def __call__(self, x, y):
        return int(self.theta[x, y])

    def row(self, x):
        return tuple(self.theta[x].tolist())

    def __eq__(self, other):
        return isinstance(other, ThetaFamily) and np.array_equal(self.theta, other.theta)

    def __hash__(self):
        return hash(tuple(self.theta.ravel().tolist()))

    def __repr__(self):
        return f"ThetaFamily({self.theta.tolist()})"

    @classmethod
    def constant_rows(cls, n, image):
        """theta_x = the given self-map for every x."""
        return cls([list(image)] * n, n)

    def to_list(self):
        return self.theta.tolist()


@dataclass(frozen=True)
class Verdict:
    holds: bool
    equation: str
    condition_tag: str = None
    counterexample: tuple = None
    details: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.holds != (self.counterexample is None):
            raise ValueError("a verdict holds exactly when it has no counterexample")

    def __bool__(self):
        return self.holds

    def to_dict(self):
        out = {
            "holds": self.holds,
            "equation": self.equation,
            "counterexample": None if self.counterexample is None else list(self.counterexample),
            "condition_tag": self.condition_tag,
        }
        if self.details:
            out["details"] = self.details
        return out


def passed(equation, **details):
    return Verdict(True, equation, details=details)


def failed(equation, tag, tup, **details):
    return Verdict(False, equation, tag, tuple(int(v) for v in tup), details=details)


def run_checks(equation, checks, **details):
    """Evaluate ``(tag, ok_array)`` pairs in order; report the first failing one.

    An entry may carry a third item, the variable names of the tuple axes,
    which is attached to a failing verdict as ``details["variables"]``.
    """
    for tag, ok, *names in checks:
        bad = first_failure(ok() if callable(ok) else ok)
        if bad is not None:
            if names:
                details = dict(details, variables=names[0])
            return failed(equation, tag, bad, **details)
    return passed(equation, **details)


# evaluation on triples; each returns the new coordinate arrays

def _s12(s, t):
    x, y, z = t
    return s.first[x, y], s.second[x, y], z


def _s23(s, t):
    x, y, z = t
    return x, s.first[y, z], s.second[y, z]


def _s13(s, t):
    x, y, z = t
    return s.first[x, z], y, s.second[x, z]


def _chain(s, ops, t):
    # ``ops`` listed left to right as written; applied right to left
    for op in reversed(ops):
        t = op(s, t)
    return t


_SIDES = {
    "pentagon": ((_s23, _s13, _s12), (_s12, _s23)),
    "reversed_pentagon": ((_s12, _s13, _s23), (_s23, _s12)),
    "qybe": ((_s23, _s13, _s12), (_s12, _s13, _s23)),
    "braid": ((_s12, _s23, _s12), (_s23, _s12, _s23)),
    # r23 r12 r23 = r12 r23 r13, a non-standard arrangement kept as a diagnostic
    "braid_variant": ((_s23, _s12, _s23), (_s12, _s23, _s13)),
}


def equation_sides(s, equation):
    """Both sides of ``equation`` evaluated on every triple, as coordinate arrays."""
    try:
        left, right = _SIDES[equation]
    except KeyError:
        raise BadParams(f"unknown equation {equation!r}; choose from {EQUATIONS}") from None
    n = s.order
    t = tuple(np.broadcast_arrays(*grid(n, n, n)))
    return _chain(s, left, t), _chain(s, right, t)


def equation_ok(s, equation):
    """Boolean array over triples (x, y, z): where both sides agree."""
    lhs, rhs = equation_sides(s, equation)
    return (lhs[0] == rhs[0]) & (lhs[1] == rhs[1]) & (lhs[2] == rhs[2])


def verify_equation(s, equation):
    return run_checks(equation, [(equation, equation_ok(s, equation))])


def transform(s, kind):
    """``conjugate_flip`` gives tau s tau, ``compose_flip_left`` gives tau s."""
    if kind == "conjugate_flip":
        return PairMap(s.second.T, s.first.T)
    if kind == "compose_flip_left":
        return PairMap(s.second, s.first)
    raise BadParams(f"unknown transform {kind!r}")


def assemble(sg, theta):
    """The product-form map s(x, y) = (xy, theta_x(y))."""
    if theta.order != sg.order:
        raise BadParams("theta family and semigroup have different orders")
    return PairMap(sg.array, theta.theta)


def decompose_product_form(s):
    """(semigroup, theta) when ``s.first`` is associative, else None."""
    if associativity_witness(s.first) is not None:
        return None
    try:
        sg = FiniteSemigroup(s.first.tolist())
    except NotAssociative:  # pragma: no cover - guarded above
        return None
    return sg, ThetaFamily(s.second)


def power(s, n):
    if n < 1:
        raise BadParams("exponent must be at least 1")
    result = s
    base = s
    n -= 1
    # square-and-multiply; powers of one map commute
    while n:
        if n & 1:
            result = result.compose(base)
        base = base.compose(base)
        n >>= 1
    return result
