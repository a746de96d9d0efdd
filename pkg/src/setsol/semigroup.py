"""Finite semigroups on the carrier {0, ..., n-1} given by Cayley tables."""

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product

import numpy as np

from ._grid import first_failure, frozen, grid
from .errors import BadParams, NotAssociative, OutOfRange


def _check_square(order, table):
    if not isinstance(order, (int, np.integer)) or order < 1:
        raise BadParams(f"order must be a positive integer, got {order!r}")
    rows = list(table)
    if len(rows) != order:
        raise BadParams(f"expected {order} rows, got {len(rows)}")
    out = []
    for x, row in enumerate(rows):
        row = list(row)
        if len(row) != order:
            raise BadParams(f"row {x} has {len(row)} entries, expected {order}")
        for y, v in enumerate(row):
            if isinstance(v, bool) or not isinstance(v, (int, np.integer)):
                raise BadParams(f"entry at ({x}, {y}) is not an integer: {v!r}")
            if not 0 <= v < order:
                raise OutOfRange((x, y), int(v), order)
        out.append(tuple(int(v) for v in row))
    return tuple(out)


def associativity_witness(table):
    """First triple (x, y, z) with (xy)z != x(yz), or None."""
    m = np.asarray(table)
    n = len(m)
    x, y, z = grid(n, n, n)
    return first_failure(m[m[x, y], z] == m[x, m[y, z]])


class FiniteSemigroup:
    """An associative Cayley table; row x, column y holds x*y.

    Instances are immutable and compare equal when their tables agree.
    """

    def __init__(self, table, order=None):
        if order is None:
            order = len(table)
        self.order = int(order)
        self.table = _check_square(order, table)
        bad = associativity_witness(self.table)
        if bad is not None:
            raise NotAssociative(bad)

    @cached_property
    def array(self):
        return frozen(self.table)

    def mul(self, x, y):
        return self.table[x][y]

    def product(self, *xs):
        acc = xs[0]
        for x in xs[1:]:
            acc = self.table[acc][x]
        return acc

    @property
    def elements(self):
        return range(self.order)

    def __eq__(self, other):
        return isinstance(other, FiniteSemigroup) and self.table == other.table

    def __hash__(self):
        return hash(self.table)

    def __repr__(self):
        return f"FiniteSemigroup(order={self.order}, table={[list(r) for r in self.table]})"

    def to_dict(self):
        return {"order": self.order, "table": [list(r) for r in self.table]}

    @classmethod
    def from_dict(cls, data):
        if not isinstance(data, dict) or set(data) - {"order", "table"}:
            raise BadParams("semigroup object must have exactly 'order' and 'table'")
        try:
            return cls(data["table"], data["order"])
        except KeyError as exc:
            raise BadParams(f"semigroup object missing {exc.args[0]!r}") from None

    # element-level facts used all over the place

    @cached_property
    def left_identities(self):
        return [e for e in self.elements if all(self.table[e][x] == x for x in self.elements)]

    @cached_property
    def right_identities(self):
        return [e for e in self.elements if all(self.table[x][e] == x for x in self.elements)]

    @cached_property
    def identity(self):
        both = set(self.left_identities) & set(self.right_identities)
        return min(both) if both else None

    @cached_property
    def inverses(self):
        """Inverse of each element when the semigroup is a group, else None."""
        e = self.identity
        if e is None:
            return None
        inv = []
        for x in self.elements:
            ys = [y for y in self.elements if self.table[x][y] == e and self.table[y][x] == e]
            if not ys:
                return None
            inv.append(ys[0])
        return tuple(inv)

    @property
    def is_group(self):
        return self.inverses is not None

    @cached_property
    def square(self):
        """The set S^2 of all products, sorted."""
        return sorted({v for row in self.table for v in row})

    def idempotents(self):
        return [x for x in self.elements if self.table[x][x] == x]


def from_table(order, table):
    return FiniteSemigroup(table, order)


@dataclass(frozen=True)
class SelfMap:
    """A map of {0..n-1} into itself, stored as its image array."""

    image: tuple
    domain_order: int = field(default=None)

    def __post_init__(self):
        image = tuple(int(v) for v in self.image)
        n = len(image) if self.domain_order is None else int(self.domain_order)
        if n < 1 or len(image) != n:
            raise BadParams(f"image has length {len(image)}, expected {n}")
        for x, v in enumerate(image):
            if not 0 <= v < n:
                raise OutOfRange((x,), v, n)
        object.__setattr__(self, "image", image)
        object.__setattr__(self, "domain_order", n)

    def __call__(self, x):
        return self.image[x]

    def __len__(self):
        return self.domain_order

    def compose(self, other):
        """self after other."""
        return SelfMap(tuple(self.image[v] for v in other.image))

    @property
    def is_idempotent(self):
        return all(self.image[v] == v for v in self.image)

    def is_endomorphism(self, sg):
        m, t = self.image, sg.table
        return all(m[t[x][y]] == t[m[x]][m[y]] for x in sg.elements for y in sg.elements)

    @classmethod
    def identity(cls, n):
        return cls(tuple(range(n)))

    @classmethod
    def constant(cls, n, value):
        return cls((value,) * n)


@dataclass(frozen=True)
class PropertyReport:
    idempotent: bool
    left_identities: list
    right_identities: list
    monoid: bool
    group: bool
    square_is_whole: bool
    variety_s: bool
    variety_w: bool
    left_quasi_normal: bool
    rectangular_band: bool
    left_zero: bool
    right_zero: bool
    witnesses: dict = field(default_factory=dict, compare=False)

    def to_dict(self):
        out = dict(self.__dict__)
        out["witnesses"] = {k: list(v) for k, v in self.witnesses.items() if v is not None}
        return out


# Identity checks. Each returns the first violating tuple or None.

def variety_s_witness(sg):
    """abc = adbc, tuples (a, b, c, d)."""
    m = sg.array
    n = sg.order
    a, b, c, d = grid(n, n, n, n)
    return first_failure(m[m[a, b], c] == m[m[m[a, d], b], c])


def variety_w_witness(sg):
    """abc = abdbc over (a, b, c, d), then a^3 = a^2 reported as a 1-tuple."""
    m = sg.array
    n = sg.order
    a, b, c, d = grid(n, n, n, n)
    ab = m[a, b]
    bad = first_failure(m[ab, c] == m[m[m[ab, d], b], c])
    if bad is not None:
        return bad
    x = np.arange(n)
    sq = m[x, x]
    return first_failure(m[sq, x] == sq)


def left_quasi_normal_witness(sg):
    """abc = acbc over (a, b, c)."""
    m = sg.array
    n = sg.order
    a, b, c = grid(n, n, n)
    return first_failure(m[m[a, b], c] == m[m[a, c], m[b, c]])


def idempotent_witness(sg):
    x = np.arange(sg.order)
    return first_failure(sg.array[x, x] == x)


def rectangular_band_witness(sg):
    """Idempotency first, then abc = ac over (a, b, c)."""
    bad = idempotent_witness(sg)
    if bad is not None:
        return bad
    m = sg.array
    n = sg.order
    a, b, c = grid(n, n, n)
    return first_failure(m[m[a, b], c] == m[a, c])


def classify(sg):
    n = sg.order
    m = sg.array
    x, y = grid(n, n)
    w = {
        "variety_s": variety_s_witness(sg),
        "variety_w": variety_w_witness(sg),
        "left_quasi_normal": left_quasi_normal_witness(sg),
        "rectangular_band": rectangular_band_witness(sg),
        "idempotent": idempotent_witness(sg),
        "left_zero": first_failure(m == x),
        "right_zero": first_failure(m == y),
    }
    return PropertyReport(
        idempotent=w["idempotent"] is None,
        left_identities=list(sg.left_identities),
        right_identities=list(sg.right_identities),
        monoid=sg.identity is not None,
        group=sg.is_group,
        square_is_whole=len(sg.square) == n,
        variety_s=w["variety_s"] is None,
        variety_w=w["variety_w"] is None,
        left_quasi_normal=w["left_quasi_normal"] is None,
        rectangular_band=w["rectangular_band"] is None,
        left_zero=w["left_zero"] is None,
        right_zero=w["right_zero"] is None,
        witnesses=w,
    )


def in_variety_s(sg):
    return variety_s_witness(sg) is None


def idempotent_endomorphisms(sg):
    """All idempotent endomorphisms, lexicographic in their image arrays."""
    n, t = sg.order, sg.table
    found = []
    image = [-1] * n

    def consistent(k):
        # entries 0..k are assigned; check every fully determined instance
        for x in range(k + 1):
            mx = image[x]
            if mx <= k and image[mx] != mx:
                return False
            for y in range(k + 1):
                xy = t[x][y]
                if xy <= k and image[xy] != t[mx][image[y]]:
                    return False
        return True

    def descend(k):
        if k == n:
            found.append(SelfMap(tuple(image)))
            return
        for v in range(n):
            image[k] = v
            if consistent(k):
                descend(k + 1)
        image[k] = -1

    descend(0)
    return found


def build_inflation(T, extension_size, phi):
    """Inflate T by ``extension_size`` new points; new point T.order+i maps to phi[i]."""
    phi = list(phi)
    if extension_size < 0 or len(phi) != extension_size:
        raise BadParams(f"phi must list {extension_size} images, got {len(phi)}")
    for i, v in enumerate(phi):
        if not 0 <= v < T.order:
            raise OutOfRange((T.order + i,), v, T.order)
    if extension_size == 0:
        return T
    bar = list(range(T.order)) + phi
    n = T.order + extension_size
    table = [[T.table[bar[a]][bar[b]] for b in range(n)] for a in range(n)]
    return FiniteSemigroup(table)


def direct_product(S, T):
    """S x T with componentwise product; pair (a, u) has index a*|T| + u."""
    m = T.order
    n = S.order * m
    table = [
        [S.table[p // m][q // m] * m + T.table[p % m][q % m] for q in range(n)]
        for p in range(n)
    ]
    return FiniteSemigroup(table)


def _need(params, *names):
    missing = [k for k in names if k not in params]
    if missing:
        raise BadParams(f"missing parameter(s): {', '.join(missing)}")
    extra = set(params) - set(names)
    if extra:
        raise BadParams(f"unexpected parameter(s): {', '.join(sorted(extra))}")
    return [params[k] for k in names]


def _positive(value, name):
    if isinstance(value, bool) or not isinstance(value, (int, np.integer)) or value < 1:
        raise BadParams(f"{name} must be a positive integer, got {value!r}")
    return int(value)


def standard_semigroup(kind, **params):
    """Build a named carrier.

    Kinds: ``trivial``, ``left_zero(n)``, ``right_zero(n)``, ``null(n)``,
    ``rectangular_band(rows, cols)``, ``cyclic_group(n)``, ``chain(n)``,
    ``left_zero_with_zero(n)``, ``left_map(f)``, ``free_variety_s(generators)``.

    ``chain(n)`` is the meet semilattice on a chain with 0 as identity, so
    x*y = max(x, y); chain(2) is the two-element semilattice and chain(3) is
    the monoid {1, x, y} with x^2 = x, y^2 = y, xy = yx = y.
    ``left_zero_with_zero(n)`` adjoins an absorbing 0 to a left-zero
    semigroup on {1..n-1}. ``left_map(f)`` has ab = f(a) for an idempotent f.
    ``free_variety_s(k)`` is the relatively free semigroup on k generators for
    the identity abc = adbc: words of length 1 or 2, plus words of length 3
    standing for "first letter, last two letters"; see ``free_variety_s_words``.
    """
    if kind == "trivial":
        _need(params)
        return FiniteSemigroup([[0]])
    if kind == "left_zero":
        (n,) = _need(params, "n")
        n = _positive(n, "n")
        return FiniteSemigroup([[x] * n for x in range(n)])
    if kind == "right_zero":
        (n,) = _need(params, "n")
        n = _positive(n, "n")
        return FiniteSemigroup([list(range(n)) for _ in range(n)])
    if kind == "null":
        (n,) = _need(params, "n")
        n = _positive(n, "n")
        return FiniteSemigroup([[0] * n for _ in range(n)])
    if kind == "rectangular_band":
        rows, cols = _need(params, "rows", "cols")
        rows, cols = _positive(rows, "rows"), _positive(cols, "cols")
        n = rows * cols
        # element (i, j) has index i*cols + j; (i, j)(k, l) = (i, l)
        return FiniteSemigroup(
            [[(p // cols) * cols + q % cols for q in range(n)] for p in range(n)]
        )
    if kind == "cyclic_group":
        (n,) = _need(params, "n")
        n = _positive(n, "n")
        return FiniteSemigroup([[(x + y) % n for y in range(n)] for x in range(n)])
    if kind == "chain":
        (n,) = _need(params, "n")
        n = _positive(n, "n")
        return FiniteSemigroup([[max(x, y) for y in range(n)] for x in range(n)])
    if kind == "left_zero_with_zero":
        (n,) = _need(params, "n")
        n = _positive(n, "n")
        return FiniteSemigroup([[0 if 0 in (x, y) else x for y in range(n)] for x in range(n)])
    if kind == "left_map":
        (f,) = _need(params, "f")
        f = SelfMap(tuple(f))
        if not f.is_idempotent:
            raise BadParams("left_map needs an idempotent f")
        n = len(f)
        return FiniteSemigroup([[f(x)] * n for x in range(n)])
    if kind == "free_variety_s":
        (k,) = _need(params, "generators")
        words = free_variety_s_words(_positive(k, "generators"))
        idx = {w: i for i, w in enumerate(words)}
        return FiniteSemigroup([[idx[_reduce_s(u + v)] for v in words] for u in words])
    raise BadParams(f"unknown semigroup kind {kind!r}")


def _reduce_s(word):
    # in abc = adbc a product of length >= 3 only sees its first and last two factors
    return word if len(word) <= 2 else (word[0],) + word[-2:]


def free_variety_s_words(k):
    """Element labels of ``free_variety_s(k)``, in index order."""
    gens = range(k)
    return [w for length in (1, 2, 3) for w in product(gens, repeat=length)]


def free_variety_s_substitution(k, letters):
    """Endomorphism of ``free_variety_s(k)`` sending generator i to generator letters[i]."""
    words = free_variety_s_words(k)
    idx = {w: i for i, w in enumerate(words)}
    return [idx[_reduce_s(tuple(letters[x] for x in w))] for w in words]
