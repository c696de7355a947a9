"""Monomial and module orderings.

Every ordering exposes ``key(mon)``: a tuple that sorts monomials so that a
larger key means a larger monomial.  Polynomial monomials are exponent
tuples, module monomials are ``(component, exps)`` pairs.

The ordering used to realise the localisation is :class:`MixedWeightOrder`
on ``k(U)[V, Y]``: the variables ``V`` come first in the ring, then the
``s`` variables ``Y``.  Monomials of lower total ``Y``-degree are larger
(the ``Y`` are local), ties are broken lexicographically on the
``Y``-exponents and then by a global ordering on the ``V``-part.
"""

from __future__ import annotations

import enum

from .polycore import Poly, Vec


class OrderClass(enum.Enum):
    GLOBAL = "global"
    LOCAL = "local"
    MIXED = "mixed"


class Comparison(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


class MonomialOrder:
    """Base class; subclasses define ``key``."""

    nvars: int

    def key(self, m):
        raise NotImplementedError

    def compare(self, m1, m2) -> Comparison:
        return compare(self, m1, m2)

    def __eq__(self, other):
        return type(self) is type(other) and self.__dict__ == other.__dict__

    def __hash__(self):
        return hash((type(self).__name__, self.nvars))


class Lex(MonomialOrder):
    def __init__(self, nvars: int):
        self.nvars = nvars

    def key(self, m):
        return m

    def __repr__(self):
        return "lex"


class DegLex(MonomialOrder):
    def __init__(self, nvars: int):
        self.nvars = nvars

    def key(self, m):
        return (sum(m), m)

    def degree(self, m) -> int:
        return sum(m)

    def __repr__(self):
        return "deglex"


class DegRevLex(MonomialOrder):
    def __init__(self, nvars: int):
        self.nvars = nvars

    def key(self, m):
        return (sum(m), tuple(-e for e in reversed(m)))

    def __repr__(self):
        return "degrevlex"


class EliminationOrder(MonomialOrder):
    """Block ordering: the first ``k`` variables are eliminated (lex-like
    block comparison by their total degree, then ``rest``)."""

    def __init__(self, k: int, first: MonomialOrder, rest: MonomialOrder):
        self.k = k
        self.first = first
        self.rest = rest
        self.nvars = k + rest.nvars

    def key(self, m):
        return (self.first.key(m[: self.k]), self.rest.key(m[self.k :]))

    def __repr__(self):
        return "elim(%d; %r, %r)" % (self.k, self.first, self.rest)


class MixedWeightOrder(MonomialOrder):
    """Weighted ordering with weight 0 on ``V`` and -1 on ``Y``.

    ``nv`` V-variables come first, then ``ny`` Y-variables.  ``vorder`` is
    the global tiebreaker on ``Mon(V)`` (degrevlex by default).
    """

    def __init__(self, nv: int, ny: int, vorder: MonomialOrder | None = None):
        self.nv = nv
        self.ny = ny
        self.nvars = nv + ny
        self.vorder = vorder if vorder is not None else DegRevLex(nv)
        if classify(self.vorder) is not OrderClass.GLOBAL and nv:
            raise ValueError("the tiebreak ordering on V must be global")

    @property
    def weights(self) -> tuple[int, ...]:
        return (0,) * self.nv + (-1,) * self.ny

    def key(self, m):
        y = m[self.nv :]
        return (-sum(y), y, self.vorder.key(m[: self.nv]))

    def __repr__(self):
        return "mixed(V:%d %r, Y:%d)" % (self.nv, self.vorder, self.ny)


# ---------------------------------------------------------------------------
# module orderings
# ---------------------------------------------------------------------------


class ModuleOrder:
    def key(self, m):
        raise NotImplementedError

    def compare(self, m1, m2) -> Comparison:
        return compare(self, m1, m2)


class PositionOverTerm(ModuleOrder):
    """``x^a e_i > x^b e_j`` iff ``i < j`` or (``i = j`` and ``x^a > x^b``)."""

    def __init__(self, base: MonomialOrder):
        self.base = base

    def key(self, m):
        return (-m[0], self.base.key(m[1]))

    def __repr__(self):
        return "pot(%r)" % self.base


class TermOverPosition(ModuleOrder):
    def __init__(self, base: MonomialOrder):
        self.base = base

    def key(self, m):
        return (self.base.key(m[1]), -m[0])

    def __repr__(self):
        return "top(%r)" % self.base


class SchreyerOrder(ModuleOrder):
    """Ordering induced by images ``g_i``: compare ``LM(x^a g_i)`` under the
    base ordering, ties broken in favour of the lower index.

    ``base`` orders the monomials of the images (a monomial ordering when
    the images are polynomials, a module ordering when they are vectors).
    ``degree`` of a module monomial is the degree of its image monomial plus
    nothing else, which makes this the graded Schreyer ordering whenever the
    base ordering is degree-compatible.
    """

    def __init__(self, base, images, leads=None):
        self.base = base
        if leads is None:
            leads = []
            for g in images:
                if not g:
                    raise ValueError("zero image vector in Schreyer ordering")
                leads.append(g.lm(base))
        self.leads = list(leads)
        if not self.leads:
            raise ValueError("Schreyer ordering needs at least one image")
        self._vec = isinstance(self.leads[0], tuple) and len(self.leads[0]) == 2 and isinstance(
            self.leads[0][1], tuple
        )
        self._cache: dict = {}

    def image_monomial(self, m):
        lead = self.leads[m[0]]
        if self._vec:
            return Vec.mon_mul(lead, m[1])
        return Poly.mon_mul(lead, m[1])

    def key(self, m):
        k = self._cache.get(m)
        if k is None:
            k = (self.base.key(self.image_monomial(m)), -m[0])
            self._cache[m] = k
        return k

    def degree(self, m) -> int:
        return self.base.degree(self.image_monomial(m))

    @property
    def rank(self) -> int:
        return len(self.leads)

    def __repr__(self):
        return "schreyer(%d over %r)" % (len(self.leads), self.base)


class ShiftedModuleOrder(ModuleOrder):
    """Order on a direct sum ``top (+) bottom`` where every ``top`` monomial
    beats every ``bottom`` monomial.  Components ``< split`` belong to
    ``top``; the rest are renumbered from 0 for ``bottom``."""

    def __init__(self, split: int, top: ModuleOrder, bottom: ModuleOrder):
        self.split = split
        self.top = top
        self.bottom = bottom

    def key(self, m):
        c = m[0]
        if c < self.split:
            return (1, self.top.key(m))
        return (0, self.bottom.key((c - self.split, m[1])))

    def __repr__(self):
        return "sum(%d: %r | %r)" % (self.split, self.top, self.bottom)


class FilteredModuleOrder(ModuleOrder):
    """Module ordering on ``Q0[Y]^r`` matched to a graded ordering on ``K[Y]^r``.

    A monomial ``V^b Y^c e_i`` is compared first by the weighted degree
    ``|c| + d_i`` (smaller is larger, the ``Y`` are local), then by the
    graded ordering ``gr`` of ``Y^c e_i`` and finally by the V-ordering.
    Dropping the V-part therefore maps leading monomials of homogeneous
    elements to leading monomials under ``gr``.
    """

    def __init__(self, gr, nv: int, vorder: MonomialOrder):
        self.gr = gr
        self.nv = nv
        self.vorder = vorder

    def key(self, m):
        c, e = m
        y = e[self.nv :]
        g = self.gr.key((c, y))
        return (-self.gr.degree((c, y)), g, self.vorder.key(e[: self.nv]))

    def __repr__(self):
        return "filtered(%r)" % self.gr


class GradedRankOne(ModuleOrder):
    """Rank-one module ordering delegating to a graded monomial ordering."""

    def __init__(self, base):
        self.base = base

    def key(self, m):
        return self.base.key(m[1])

    def degree(self, m) -> int:
        return self.base.degree(m[1])

    def __repr__(self):
        return "rank1(%r)" % self.base


# ---------------------------------------------------------------------------
# operations
# ---------------------------------------------------------------------------


def compare(o, m1, m2) -> Comparison:
    k1, k2 = o.key(m1), o.key(m2)
    if k1 == k2:
        return Comparison.EQUAL
    return Comparison.GREATER if k1 > k2 else Comparison.LESS


def classify(o: MonomialOrder) -> OrderClass:
    """Global iff every variable exceeds 1, local iff every variable is
    below 1, mixed otherwise."""
    n = o.nvars
    one = o.key((0,) * n)
    bigger = smaller = 0
    for i in range(n):
        e = [0] * n
        e[i] = 1
        if o.key(tuple(e)) > one:
            bigger += 1
        else:
            smaller += 1
    if smaller == 0:
        return OrderClass.GLOBAL
    if bigger == 0:
        return OrderClass.LOCAL
    return OrderClass.MIXED


def w_degree(g: Poly, o: MixedWeightOrder) -> int:
    """Maximal weighted degree: minus the lowest Y-degree occurring in ``g``."""
    if not g:
        raise ValueError("w-degree of the zero polynomial is undefined")
    nv = o.nv
    return -min(sum(m[nv:]) for m in g.terms)


def w_degree_vec(v: Vec, o: MixedWeightOrder, shifts=None) -> int:
    """Weighted degree of a vector; component ``i`` carries weight ``-d_i``."""
    if not v:
        raise ValueError("w-degree of the zero vector is undefined")
    nv = o.nv
    shifts = shifts or (0,) * v.rank
    return -min(sum(m[nv:]) + shifts[i] for (i, m) in v.terms)


def initial_w(g, o: MixedWeightOrder, shifts=None):
    """Sum of the terms of maximal weighted degree (lowest Y-degree)."""
    if not g:
        raise ValueError("initial form of zero is undefined")
    nv = o.nv
    if isinstance(g, Vec):
        shifts = shifts or (0,) * g.rank
        low = min(sum(m[nv:]) + shifts[i] for (i, m) in g.terms)
        return Vec(
            g.module,
            {k: c for k, c in g.terms.items() if sum(k[1][nv:]) + shifts[k[0]] == low},
        )
    low = min(sum(m[nv:]) for m in g.terms)
    return Poly(g.ring, {m: c for m, c in g.terms.items() if sum(m[nv:]) == low})


def schreyer_extend(base, images) -> SchreyerOrder:
    """Schreyer ordering induced by ``images`` over ``base``."""
    if not images:
        raise ValueError("images must be nonempty")
    return SchreyerOrder(base, images)
