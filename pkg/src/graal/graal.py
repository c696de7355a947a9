"""Presentations of a localization ``A_L`` and of its associated graded ring.

Given ``Q = QQ[X]`` with primes ``H <= J`` we pick a maximal independent set
``U`` for ``J``, put ``V = X \\ U`` and work in ``Q0 = QQ(U)[V]``.  One new
variable ``Y_i`` is adjoined per generator ``f_i`` of ``J``; then

* ``A_L`` is ``Q0[Y]`` localized at the mixed weight ordering, modulo the
  ideal generated by ``f_i - Y_i`` and ``H``;
* ``Gr(A_L)`` is ``K[Y]`` modulo the initial forms of a standard basis of
  that ideal, where ``K = Q0 / J0`` is the residue field.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .engine import (
    BasisResult,
    dim_and_indep_set,
    groebner,
    is_standard_basis,
    leading_ideal,
    mora_nf,
    reduce_full,
    std_basis,
)
from .orderings import DegLex, DegRevLex, Lex, MixedWeightOrder, initial_w, w_degree
from .polycore import QQ, Poly, PolyRing, RatFuncField, ResidueElem, ResidueField


class TowerError(ValueError):
    """The input does not describe a valid pair of primes ``H <= J``."""


class ValuationUndefinedError(ArithmeticError):
    """The element is zero in ``A_L``; its valuation is infinite."""


class CompressionError(RuntimeError):
    pass


def _fresh_names(prefix: str, count: int, taken) -> tuple[str, ...]:
    taken = set(taken)
    while any("%s%d" % (prefix, i) in taken for i in range(1, count + 1)):
        prefix += "_"
    return tuple("%s%d" % (prefix, i) for i in range(1, count + 1))


# ---------------------------------------------------------------------------
# the ring tower
# ---------------------------------------------------------------------------


@dataclass
class RingTower:
    X: tuple[str, ...]
    Q: PolyRing
    H: list[Poly]
    J: list[Poly]
    U: tuple[str, ...]
    V: tuple[str, ...]
    kU: object
    Q0: PolyRing
    H0: list[Poly]
    J0: list[Poly]
    J0_gb: list[Poly]
    K: ResidueField
    J_gb: list[Poly]

    @property
    def s(self) -> int:
        return len(self.J)

    def to_Q0(self, f: Poly) -> Poly:
        """Image of ``f`` in ``QQ(U)[V]``."""
        return _split(f, self.X, self.V, self.U, self.Q0)

    def residue(self, f: Poly) -> ResidueElem:
        return self.K.convert(self.to_Q0(f))


def _split(f: Poly, names, keep, coeff_names, target: PolyRing, extra: int = 0) -> Poly:
    """Move the ``coeff_names`` variables of ``f`` into the coefficient field
    of ``target``; ``keep`` become the first ring variables, followed by
    ``extra`` zero exponents."""
    idx = {n: i for i, n in enumerate(names)}
    ki = [idx[n] for n in keep]
    ci = [idx[n] for n in coeff_names]
    K = target.field
    pad = (0,) * extra
    terms: dict = {}
    for m, c in f.terms.items():
        mon = tuple(m[i] for i in ki) + pad
        if ci:
            cf = K.monomial(c, tuple(m[i] for i in ci))
        else:
            cf = K.convert(c)
        terms[mon] = terms[mon] + cf if mon in terms else cf
    return Poly(target, {m: c for m, c in terms.items() if c})


def build_tower(X, Hgens, Jgens) -> RingTower:
    """Validate ``H <= J``, choose ``U`` and set up ``QQ(U)[V] / J0``."""
    X = tuple(X)
    Q = PolyRing(X, QQ)
    H = [Q(h) for h in Hgens]
    J = [Q(f) for f in Jgens]
    if not J:
        raise TowerError("J needs at least one generator")
    Jgb = groebner(J, DegRevLex(len(X)))
    if not Jgb.basis:
        raise TowerError("J is the zero ideal; there is nothing to localize at")
    if any(g.is_constant() for g in Jgb.basis):
        raise TowerError("J is the unit ideal")
    for h in H:
        if reduce_full(h, Jgb.basis, Jgb.order):
            raise TowerError("H is not contained in J: %s" % h)
    leads = leading_ideal(Jgb)
    _, ui = dim_and_indep_set(leads, len(X))
    U = tuple(X[i] for i in ui)
    V = tuple(n for n in X if n not in U)
    kU = RatFuncField(U) if U else QQ
    Q0 = PolyRing(V, kU)
    H0 = [p for p in (_split(h, X, V, U, Q0) for h in H) if p]
    J0 = [_split(f, X, V, U, Q0) for f in J]
    vorder = DegRevLex(len(V))
    J0_gb = groebner([f for f in J0 if f], vorder).basis if V else []
    if V:
        if any(g.is_constant() for g in J0_gb):
            raise TowerError("J0 is the unit ideal (internal error)")
        d, _ = dim_and_indep_set([g.lm(vorder) for g in J0_gb], len(V))
        if d != 0:
            raise TowerError("J0 is not zero-dimensional (internal error)")
    K = ResidueField(Q0, J0_gb, vorder)
    return RingTower(X, Q, H, J, U, V, kU, Q0, H0, J0, J0_gb, K, Jgb.basis)


# ---------------------------------------------------------------------------
# presentation of A_L
# ---------------------------------------------------------------------------


@dataclass
class LocalPresentation:
    tower: RingTower
    Yvars: tuple[str, ...]
    ring: PolyRing
    order: MixedWeightOrder
    frak_I: list[Poly]
    G_I: BasisResult

    @property
    def nv(self) -> int:
        return len(self.tower.V)

    @property
    def s(self) -> int:
        return len(self.Yvars)

    @property
    def basis(self) -> list[Poly]:
        return self.G_I.basis

    def to_local(self, f: Poly) -> Poly:
        """Representative in ``QQ(U)[V, Y]`` of an element of ``Q`` or ``Q0``."""
        t = self.tower
        if f.ring == self.ring:
            return f
        if f.ring == t.Q0:
            return Poly(self.ring, {m + (0,) * self.s: c for m, c in f.terms.items()})
        return _split(t.Q(f), t.X, t.V, t.U, self.ring, extra=self.s)

    def nf(self, f: Poly, track: bool = False):
        return mora_nf(self.to_local(f), self.basis, self.order, track=track)

    def is_zero(self, f: Poly) -> bool:
        return not self.nf(f).remainder

    def phi(self, g: Poly) -> Poly:
        """Image in ``Q0`` of a polynomial of ``Q0[Y]`` under ``Y_i -> f_i``."""
        t = self.tower
        nv = self.nv
        out = t.Q0.zero
        powers: dict = {}
        for m, c in g.terms.items():
            term = Poly(t.Q0, {m[:nv]: c})
            for i, e in enumerate(m[nv:]):
                if e:
                    key = (i, e)
                    if key not in powers:
                        powers[key] = t.J0[i] ** e
                    term = term * powers[key]
            out = out + term
        return out


def build_presentation(t: RingTower) -> LocalPresentation:
    s = t.s
    Yvars = _fresh_names("Y", s, t.X)
    P = PolyRing(t.V + Yvars, t.kU)
    order = MixedWeightOrder(len(t.V), s)
    nv = len(t.V)
    gens = []
    for i, f in enumerate(t.J0):
        y = [0] * s
        y[i] = 1
        gens.append(
            Poly(P, {m + (0,) * s: c for m, c in f.terms.items()})
            - Poly(P, {(0,) * nv + tuple(y): t.kU.one})
        )
    for h in t.H0:
        gens.append(Poly(P, {m + (0,) * s: c for m, c in h.terms.items()}))
    G = std_basis(gens, order, track_cofactors=True)
    return LocalPresentation(t, Yvars, P, order, gens, G)


# ---------------------------------------------------------------------------
# presentation of Gr(A_L)
# ---------------------------------------------------------------------------


@dataclass
class GradedPresentation:
    local: LocalPresentation
    K: ResidueField
    ring: PolyRing
    order: DegLex
    I_in_gb: list[Poly]
    images: list[Poly] = field(default_factory=list)
    initial_forms_ok: bool = True

    @property
    def s(self) -> int:
        return self.local.s

    def lam(self, f: Poly) -> Poly:
        """Image in ``K[Y]`` of a polynomial of ``Q0[Y]`` (the V-part of each
        coefficient is read in ``K``)."""
        lp = self.local
        nv = lp.nv
        Q0 = lp.tower.Q0
        groups: dict = {}
        for m, c in f.terms.items():
            groups.setdefault(m[nv:], {})[m[:nv]] = c
        terms = {}
        for y, d in groups.items():
            c = self.K.convert(Poly(Q0, d))
            if c:
                terms[y] = c
        return Poly(self.ring, terms)

    def lift(self, f: Poly) -> Poly:
        """Canonical preimage in ``Q0[Y]`` of an element of ``K[Y]``."""
        lp = self.local
        terms: dict = {}
        for y, c in f.terms.items():
            for v, a in c.rep.terms.items():
                terms[v + y] = a
        return Poly(lp.ring, terms)

    def reduce(self, f: Poly) -> Poly:
        if not self.I_in_gb:
            return f
        return reduce_full(f, self.I_in_gb, self.order)

    def contains(self, f: Poly) -> bool:
        return not self.reduce(f)


def gr_presentation(p: LocalPresentation) -> GradedPresentation:
    K = p.tower.K
    ring = PolyRing(p.Yvars, K)
    order = DegLex(p.s)
    gp = GradedPresentation(p, K, ring, order, [])
    images = [gp.lam(initial_w(g, p.order)) for g in p.basis]
    images = [g for g in images if g]
    gp.images = images
    gp.initial_forms_ok = is_standard_basis(images, order) if images else True
    gp.I_in_gb = std_basis(images, order).basis if images else []
    return gp


def check_initial_forms(gp: GradedPresentation) -> bool:
    """The initial forms of the standard basis pass the Groebner criterion
    over ``K[Y]`` and every element of the reduced basis is homogeneous."""
    if not gp.initial_forms_ok:
        return False
    return all(len({sum(m) for m in g.terms}) == 1 for g in gp.I_in_gb)


# ---------------------------------------------------------------------------
# valuation and initial forms
# ---------------------------------------------------------------------------


def valuation_initial(p: LocalPresentation, f: Poly, gp: GradedPresentation | None = None):
    """``(nu, in)`` with ``nu`` the order of ``f`` and ``in`` its initial form
    in ``K[Y]`` (homogeneous of degree ``nu``)."""
    r = p.nf(f).remainder
    if not r:
        raise ValuationUndefinedError("element is zero in the localization")
    nu = -w_degree(r, p.order)
    gp = gp or gr_presentation(p)
    return nu, gp.lam(initial_w(r, p.order))


def initial_ideal(p: LocalPresentation, gp: GradedPresentation, Igens) -> list[Poly]:
    """Reduced Groebner basis of ``in(I) + I_in`` in ``K[Y]``."""
    pre = [p.to_local(f) for f in Igens]
    pre = [f for f in pre if f]
    if not pre:
        return list(gp.I_in_gb)
    known = len(p.basis)
    S = std_basis(list(p.basis) + pre, p.order, known=known)
    images = [gp.lam(initial_w(g, p.order)) for g in S.basis]
    images = [g for g in images if g] + list(gp.I_in_gb)
    if not images:
        return []
    return std_basis(images, gp.order).basis


def same_ideal(A: list[Poly], B: list[Poly], order) -> bool:
    """Equality of ideals given by Groebner bases ``A`` and ``B``."""
    if not A or not B:
        return not [a for a in A if a] and not [b for b in B if b]
    return all(not reduce_full(a, B, order) for a in A) and all(
        not reduce_full(b, A, order) for b in B
    )


# ---------------------------------------------------------------------------
# residue field compression
# ---------------------------------------------------------------------------


@dataclass
class CompressedField:
    """``K`` as ``QQ(U)[T] / <minpoly>``; ``T = sum(transform_i * V_i)``."""

    minpoly: Poly
    coordinate_images: dict
    transform: tuple[int, ...]
    field: ResidueField
    attempts: int

    @property
    def degree(self) -> int:
        return self.minpoly.degree()


def compress_residue_field(t: RingTower, seed: int = 0, max_attempts: int = 10) -> CompressedField:
    """Primitive element of ``K`` over ``QQ(U)`` by a random linear form."""
    V = t.V
    n = len(V)
    rng = random.Random(seed)
    tname = "T"
    while tname in t.X:
        tname += "_"
    TR = PolyRing((tname,), t.kU)
    if n == 0:
        T = TR.gen(0)
        return CompressedField(T, {}, (), ResidueField(TR, [T], Lex(1)), 0)
    ring = PolyRing(V + (tname,), t.kU)
    lex = Lex(n + 1)
    lift = [Poly(ring, {m + (0,): c for m, c in g.terms.items()}) for g in t.J0_gb]
    bound = 3
    for attempt in range(1, max_attempts + 1):
        r = tuple(rng.randint(-bound, bound) for _ in range(n))
        bound *= 2
        if not any(r):
            continue
        lin = ring.gen(n) - sum((ring.gen(i).scale(t.kU.convert(c)) for i, c in enumerate(r) if c), ring.zero)
        gb = groebner(lift + [lin], lex).basis
        shape = _shape(gb, n)
        if shape is None:
            continue
        images, g = shape
        to_T = lambda p: Poly(TR, {(m[n],): c for m, c in p.terms.items()})  # noqa: E731
        minpoly = to_T(g)
        cimg = {V[i]: to_T(images[i]) for i in range(n)}
        K = ResidueField(TR, [minpoly], Lex(1))
        return CompressedField(minpoly, cimg, r, K, attempt)
    raise CompressionError("no shape-position transform found in %d attempts" % max_attempts)


def _shape(gb, n):
    """``(images, g)`` if ``gb`` is ``{V_i - g_i(T)} + {g(T)}``, else None."""
    lex = Lex(n + 1)
    images: list = [None] * n
    g = None
    for p in gb:
        m = p.lm(lex)
        lin = [i for i in range(n) if m[i]]
        if not lin:
            if any(any(mm[:n]) for mm in p.terms):
                return None
            if g is not None:
                return None
            g = p
            continue
        if len(lin) != 1 or m[lin[0]] != 1 or sum(m[:n]) != 1 or m[n]:
            return None
        i = lin[0]
        rest = p - Poly(p.ring, {m: p.terms[m]})
        if any(any(mm[:n]) for mm in rest.terms):
            return None
        images[i] = -rest.scale(p.field.one / p.terms[m])
    if g is None or any(x is None for x in images):
        return None
    return images, g
