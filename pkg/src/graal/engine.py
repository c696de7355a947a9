"""Reduction engine: Mora normal forms, standard bases, syzygies and the
combinatorics of monomial ideals.

The same code handles global, local and mixed orderings and works on
polynomials as well as on free-module vectors; the element classes supply
the monomial arithmetic (``mon_mul``, ``mon_div``, ``mon_lcm``,
``mon_deg``).
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from itertools import combinations
from math import comb

from .orderings import (
    DegRevLex,
    EliminationOrder,
    Lex,
    OrderClass,
    SchreyerOrder,
    ShiftedModuleOrder,
    classify,
)
from .polycore import FreeModule, Poly, PolyRing, Vec, poly_as_vec


@dataclass
class NormalFormResult:
    """``unit * f == sum(cofactors[i] * G[i]) + remainder``."""

    remainder: object
    unit: Poly
    cofactors: list | None = None

    def replay(self, f, G) -> bool:
        lhs = _times(f, self.unit)
        rhs = self.remainder
        for q, g in zip(self.cofactors or [], G):
            if q:
                rhs = rhs + _times(g, q)
        return (lhs - rhs).is_zero()


@dataclass
class BasisResult:
    basis: list
    order: object
    cofactors: list | None = None
    is_global: bool = False

    def __iter__(self):
        return iter(self.basis)

    def __len__(self):
        return len(self.basis)


@dataclass
class SyzygyModule:
    generators: list
    rank: int


@dataclass
class HilbertSeriesData:
    """Hilbert series ``first / (1-t)^nvars = second / (1-t)^dimension``."""

    first_numerator: list[int]
    dimension: int
    second_numerator: list[int]
    nvars: int

    @property
    def degree_d(self) -> int:
        return len(self.second_numerator) - 1

    def coefficients(self, n: int) -> list[int]:
        """Hilbert function values ``H(0), ..., H(n-1)``."""
        out = []
        q = self.second_numerator
        dim = self.dimension
        for i in range(n):
            if dim == 0:
                out.append(q[i] if i < len(q) else 0)
            else:
                out.append(
                    sum(c * comb(i - k + dim - 1, dim - 1) for k, c in enumerate(q) if k <= i)
                )
        return out

    def polynomial_value(self, n: int) -> int:
        """Value at ``n`` of the Hilbert polynomial (as a polynomial in ``n``)."""
        dim = self.dimension
        if dim == 0:
            return 0
        return sum(c * _binom_poly(n - k + dim - 1, dim - 1) for k, c in enumerate(self.second_numerator))


def _binom_poly(y: int, m: int) -> int:
    """``binom(y, m)`` as the polynomial ``y(y-1)...(y-m+1)/m!`` at integer ``y``."""
    num = 1
    for i in range(m):
        num *= y - i
    den = 1
    for i in range(2, m + 1):
        den *= i
    return num // den


def _times(f, q: Poly):
    """``q * f`` for ``f`` a polynomial or vector."""
    if isinstance(f, Vec):
        return f * q
    return q * f


def _ecart(f, lm) -> int:
    deg = type(f).mon_deg
    return max(deg(m) for m in f.terms) - deg(lm)


def ecart(f, order) -> int:
    """Total degree minus the degree of the leading monomial."""
    return _ecart(f, f.lm(order))


# ---------------------------------------------------------------------------
# normal forms
# ---------------------------------------------------------------------------


def _axpy(target: dict, coef, q, g, mon_mul):
    """``target -= coef * x^q * g`` in place."""
    for m, c in g.terms.items():
        nm = mon_mul(m, q)
        v = coef * c
        if nm in target:
            v = target[nm] - v
            if v:
                target[nm] = v
            else:
                del target[nm]
        else:
            target[nm] = -v


def reduce_full(f, G, order, leads=None, track: bool = False):
    """Complete reduction of ``f`` by ``G`` for a global ordering.

    Returns the remainder, or ``(remainder, cofactors)`` when ``track``.
    """
    cls = type(f)
    mon_mul, mon_div = cls.mon_mul, cls.mon_div
    if leads is None:
        leads = [(g.lm(order), g.lc(order), g) for g in G if g]
    p = dict(f.terms)
    r: dict = {}
    key = order.key
    ring = f.ring
    cof = [dict() for _ in leads] if track else None
    while p:
        m = max(p, key=key)
        c = p[m]
        for k, (lm, lc, g) in enumerate(leads):
            q = mon_div(lm, m)
            if q is not None:
                coef = c / lc
                _axpy(p, coef, q, g, mon_mul)
                if track:
                    cof[k][q] = cof[k].get(q, ring.field.zero) + coef
                break
        else:
            r[m] = c
            del p[m]
    rem = f._new(r)
    if track:
        return rem, [Poly(ring, {m: c for m, c in d.items() if c}) for d in cof]
    return rem


def mora_nf(f, G, order, track: bool = False) -> NormalFormResult:
    """Mora's weak normal form.

    Reducers are chosen among the divisors of the current leading monomial
    by minimal ecart, ties by position (inputs first, in order).  When the
    chosen reducer has larger ecart than the current element, the current
    element joins the reducer set.  The returned unit has leading monomial
    1; for a global ordering it is always 1.
    """
    ring = f.ring
    one = ring.one
    cls = type(f)
    mon_mul, mon_div, mon_deg = cls.mon_mul, cls.mon_div, cls.mon_deg
    key = order.key
    T = []
    for k, g in enumerate(G):
        if g:
            lm = g.lm(order)
            T.append((lm, g.terms[lm], _ecart(g, lm), g, k, None))
    unit = one
    cof = [dict() for _ in G] if track else None
    h = dict(f.terms)
    zero_c = ring.field.zero
    while h:
        m = max(h, key=key)
        best = None
        for t in T:
            q = mon_div(t[0], m)
            if q is not None and (best is None or t[2] < best[0][2]):
                best = (t, q)
        if best is None:
            break
        t, q = best
        hdeg = max(mon_deg(x) for x in h)
        h_ecart = hdeg - mon_deg(m)
        if t[2] > h_ecart:
            snap_cof = [dict(d) for d in cof] if track else None
            hv = f._new(dict(h))
            T.append((m, h[m], h_ecart, hv, None, (unit, snap_cof)))
        coef = h[m] / t[1]
        _axpy(h, coef, q, t[3], mon_mul)
        if t[4] is not None:
            if track:
                d = cof[t[4]]
                v = d.get(q, zero_c) + coef
                if v:
                    d[q] = v
                else:
                    d.pop(q, None)
        else:
            u_t, cof_t = t[5]
            mult = Poly(ring, {q: coef})
            unit = unit - mult * u_t
            if track:
                for d, dt in zip(cof, cof_t):
                    for mm, cc in dt.items():
                        nm = Poly.mon_mul(mm, q)
                        v = d.get(nm, zero_c) - coef * cc
                        if v:
                            d[nm] = v
                        else:
                            d.pop(nm, None)
    rem = f._new(h)
    cofs = [Poly(ring, d) for d in cof] if track else None
    return NormalFormResult(rem, unit, cofs)


# ---------------------------------------------------------------------------
# standard bases
# ---------------------------------------------------------------------------


def spoly(f, g, order):
    """S-polynomial (or S-vector); None when the leading monomials live in
    different components."""
    cls = type(f)
    mf, cf = f.lt(order)
    mg, cg = g.lt(order)
    l = cls.mon_lcm(mf, mg)
    if l is None:
        return None
    qf = cls.mon_div(mf, l)
    qg = cls.mon_div(mg, l)
    one = f.field.one
    return f.mul_term(one / cf, qf) - g.mul_term(one / cg, qg)


def _coprime(a, b) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def std_basis(gens, order, track_cofactors: bool = False, known: int = 0,
              minimize: bool = True) -> BasisResult:
    """Standard basis by Buchberger's algorithm with Mora normal forms.

    ``known`` states that the first ``known`` generators already form a
    standard basis, so pairs among them are skipped.  For a global ordering
    the result is the reduced Groebner basis (monic, interreduced).
    Pairs are processed by degree of their lcm, then by the ordering, FIFO
    among ties.
    """
    gens = list(gens)
    if not gens:
        return BasisResult([], order, [] if track_cofactors else None)
    proto = gens[0]
    cls = type(proto)
    ring = proto.ring
    ngen = len(gens)
    is_global = _is_global(order, proto)
    S: list = []
    C: list = []
    leads: list = []

    def unit_cof(i):
        c = [ring.zero] * ngen
        c[i] = ring.one
        return c

    pairs: list = []
    counter = 0

    def push_pairs(k):
        nonlocal counter
        mk = leads[k]
        for i in range(k):
            if i < known and k < known:
                continue
            mi = leads[i]
            l = cls.mon_lcm(mi, mk)
            if l is None:
                continue
            if cls is Poly and _coprime(mi, mk):
                continue
            heapq.heappush(pairs, (cls.mon_deg(l), order.key(l), counter, i, k))
            counter += 1

    def add(el, cof):
        S.append(el)
        C.append(cof)
        leads.append(el.lm(order))
        push_pairs(len(S) - 1)

    for i, g in enumerate(gens):
        if not g:
            continue
        if i < known:
            add(g, unit_cof(i) if track_cofactors else None)
            continue
        res = mora_nf(g, S, order, track=track_cofactors)
        r = res.remainder
        if r:
            cof = None
            if track_cofactors:
                cof = [res.unit * x for x in unit_cof(i)]
                for q, cs in zip(res.cofactors, C):
                    if q:
                        cof = [a - q * b for a, b in zip(cof, cs)]
            add(r, cof)

    while pairs:
        _, _, _, i, j = heapq.heappop(pairs)
        f, g = S[i], S[j]
        mf, cf = leads[i], f.terms[leads[i]]
        mg, cg = leads[j], g.terms[leads[j]]
        l = cls.mon_lcm(mf, mg)
        qf, qg = cls.mon_div(mf, l), cls.mon_div(mg, l)
        af, ag = ring.field.one / cf, ring.field.one / cg
        s = f.mul_term(af, qf) - g.mul_term(ag, qg)
        if not s:
            continue
        res = mora_nf(s, S, order, track=track_cofactors)
        r = res.remainder
        if r:
            cof = None
            if track_cofactors:
                mqf = Poly(ring, {qf: af})
                mqg = Poly(ring, {qg: ag})
                base = [res.unit * (mqf * a - mqg * b) for a, b in zip(C[i], C[j])]
                for q, cs in zip(res.cofactors, C):
                    if q:
                        base = [a - q * b for a, b in zip(base, cs)]
                cof = base
            add(r, cof)

    keep = list(range(len(S)))
    if minimize:
        keep = _minimal_indices(leads, cls)
    basis = [S[k] for k in keep]
    cofs = [C[k] for k in keep] if track_cofactors else None
    if is_global:
        basis, cofs = _interreduce(basis, cofs, order, track_cofactors)
    return BasisResult(basis, order, cofs, is_global)


def _is_global(order, proto) -> bool:
    if isinstance(proto, Poly):
        try:
            return classify(order) is OrderClass.GLOBAL
        except AttributeError:
            return False
    n = proto.ring.nvars
    zero = (0,) * n
    for i in range(n):
        e = [0] * n
        e[i] = 1
        if order.key((0, tuple(e))) <= order.key((0, zero)):
            return False
    return True


def _minimal_indices(leads, cls) -> list[int]:
    keep = []
    for k, m in enumerate(leads):
        redundant = False
        for j, n in enumerate(leads):
            if j == k:
                continue
            if cls.mon_div(n, m) is not None:
                if n != m or j < k:
                    redundant = True
                    break
        if not redundant:
            keep.append(k)
    return keep


def _interreduce(basis, cofs, order, track):
    out, outc = [], []
    for k, g in enumerate(basis):
        others = [h for j, h in enumerate(basis) if j != k]
        if track:
            r, qs = reduce_full(g, others, order, track=True)
            others_c = [c for j, c in enumerate(cofs) if j != k]
            cof = list(cofs[k])
            for q, cs in zip(qs, others_c):
                if q:
                    cof = [a - q * b for a, b in zip(cof, cs)]
        else:
            r = reduce_full(g, others, order)
            cof = None
        lc = r.lc(order)
        inv = r.field.one / lc
        out.append(r.scale(inv))
        if track:
            outc.append([c.scale(inv) for c in cof])
    # the leading monomials of a minimal basis are untouched by tail reduction
    # of the others, so reducing against the unreduced elements is sound
    return out, (outc if track else None)


def is_standard_basis(G, order) -> bool:
    """All S-pairs reduce to zero under Mora's normal form."""
    G = [g for g in G if g]
    for f, g in combinations(G, 2):
        s = spoly(f, g, order)
        if s is None or not s:
            continue
        if mora_nf(s, G, order).remainder:
            return False
    return True


def ideal_membership(f, B) -> bool:
    basis = B.basis if isinstance(B, BasisResult) else B
    order = B.order if isinstance(B, BasisResult) else None
    if order is None:
        raise ValueError("need a BasisResult (carries its ordering)")
    if not f:
        return True
    return not mora_nf(f, basis, order).remainder


# ---------------------------------------------------------------------------
# syzygies
# ---------------------------------------------------------------------------


class RankOne:
    """View a monomial ordering as an ordering on ``ring^1``."""

    def __init__(self, base):
        self.base = base

    def key(self, m):
        return self.base.key(m[1])

    def degree(self, m):
        return self.base.degree(m[1])

    def __repr__(self):
        return "rank1(%r)" % self.base


@dataclass
class AugmentedBasis:
    """Standard basis of the module generated by ``(g_i | e_i)`` plus
    ``(s * eps_c | 0)`` for ``s`` in ``modulo``.  Every element ``(u | v)``
    satisfies ``u = sum_i v_i g_i`` modulo ``<modulo> * top``."""

    top: list
    bottom: list
    top_module: FreeModule
    bottom_module: FreeModule
    order: object


def augmented_basis(gens, order, modulo=None, syz_order=None) -> AugmentedBasis:
    gens = list(gens)
    k = len(gens)
    if not k:
        raise ValueError("need at least one generator")
    if isinstance(gens[0], Poly):
        ring = gens[0].ring
        top_module = FreeModule(ring, 1)
        vecs = [poly_as_vec(g, top_module) for g in gens]
        top_order = RankOne(order)
    else:
        top_module = gens[0].module
        ring = top_module.ring
        vecs = gens
        top_order = order
    r = top_module.rank
    if syz_order is None:
        syz_order = SchreyerOrder(order, gens) if all(gens) else RankOne(order)
    big = FreeModule(ring, r + k)
    one = ring.field.one
    zero_mon = ring._zero_mon
    aug = []
    for i, v in enumerate(vecs):
        t = dict(v.terms)
        t[(r + i, zero_mon)] = one
        aug.append(Vec(big, t))
    for s in modulo or []:
        for c in range(r):
            aug.append(Vec(big, {(c, m): a for m, a in s.terms.items()}))
    aorder = ShiftedModuleOrder(r, top_order, syz_order)
    res = std_basis(aug, aorder)
    bottom_module = FreeModule(ring, k)
    tops, bottoms = [], []
    for el in res.basis:
        tt, bt = {}, {}
        for (c, m), a in el.terms.items():
            if c < r:
                tt[(c, m)] = a
            else:
                bt[(c - r, m)] = a
        tops.append(Vec(top_module, tt))
        bottoms.append(Vec(bottom_module, bt))
    return AugmentedBasis(tops, bottoms, top_module, bottom_module, aorder)


def syzygies(gens, order, modulo=None, syz_order=None) -> SyzygyModule:
    """Generators of the syzygy module of ``gens`` (over ``ring / <modulo>``
    when ``modulo`` is given, as preimages in the free module)."""
    aug = augmented_basis(gens, order, modulo, syz_order)
    out = [b for t, b in zip(aug.top, aug.bottom) if not t and b]
    return SyzygyModule(out, len(list(gens)))


# ---------------------------------------------------------------------------
# monomial ideals
# ---------------------------------------------------------------------------


def minimal_monomials(L) -> list[tuple]:
    L = sorted(set(tuple(m) for m in L), key=lambda m: (sum(m), m))
    out: list = []
    for m in L:
        if not any(Poly.mon_div(n, m) is not None for n in out):
            out.append(m)
    return out


def leading_ideal(B, order=None) -> list:
    """Minimal generators of the ideal of leading monomials."""
    basis = B.basis if isinstance(B, BasisResult) else list(B)
    order = order or B.order
    leads = [g.lm(order) for g in basis if g]
    if leads and isinstance(leads[0], tuple) and len(leads[0]) == 2 and isinstance(leads[0][1], tuple):
        out = []
        for m in sorted(set(leads), key=lambda m: (m[0], sum(m[1]), m[1])):
            if not any(Vec.mon_div(n, m) is not None for n in out):
                out.append(m)
        return out
    return minimal_monomials(leads)


def dim_and_indep_set(L, nvars: int) -> tuple[int, tuple[int, ...]]:
    """Dimension of ``k[x]/<L>`` and the lexicographically first maximum
    independent set of variable indices."""
    L = minimal_monomials(L)
    supports = [frozenset(i for i, e in enumerate(m) if e) for m in L]
    if any(not s for s in supports):
        return -1, ()
    for size in range(nvars, -1, -1):
        for S in combinations(range(nvars), size):
            Sset = set(S)
            if not any(s <= Sset for s in supports):
                return size, S
    return 0, ()


def count_standard_monomials(L, nvars: int, max_degree: int | None = None) -> int:
    """Number of monomials outside ``<L>`` (finite for zero-dimensional L)."""
    from .polycore import all_monomials

    L = minimal_monomials(L)
    total = 0
    d = 0
    while True:
        cnt = sum(
            1
            for m in all_monomials(nvars, d)
            if not any(Poly.mon_div(n, m) is not None for n in L)
        )
        total += cnt
        if cnt == 0 or (max_degree is not None and d >= max_degree):
            return total
        d += 1


def _padd(a, b):
    n = max(len(a), len(b))
    out = [0] * n
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return _ptrim(out)


def _pmul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _ptrim(out)


def _ptrim(a):
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return a


def _hilbert_numerator(gens) -> list[int]:
    gens = minimal_monomials(gens)
    if not gens:
        return [1]
    supports = [set(i for i, e in enumerate(m) if e) for m in gens]
    if all(not (a & b) for a, b in combinations(supports, 2)):
        out = [1]
        for m in gens:
            d = sum(m)
            out = _pmul(out, [1] + [0] * (d - 1) + [-1])
        return out
    *rest, last = gens
    colon = [tuple(max(x - y, 0) for x, y in zip(m, last)) for m in rest]
    a = _hilbert_numerator(rest)
    b = _hilbert_numerator(colon)
    shifted = [0] * sum(last) + b
    return _padd(a, [-c for c in shifted])


def hilbert_series_monomial(L, nvars: int) -> HilbertSeriesData:
    first = _hilbert_numerator(list(L))
    second = list(first)
    k = 0
    while k < nvars and sum(second) == 0 and any(second):
        # divide by (1 - t)
        q = []
        acc = 0
        for c in second[:-1]:
            acc += c
            q.append(acc)
        second = _ptrim(q) if q else [0]
        k += 1
    return HilbertSeriesData(first, nvars - k, second, nvars)


# ---------------------------------------------------------------------------
# ideal utilities
# ---------------------------------------------------------------------------


def ideal_intersection(I, J, order) -> list:
    """Generators of ``I cap J`` by eliminating ``t`` from ``t I + (1-t) J``."""
    I, J = list(I), list(J)
    if not I or not J:
        return []
    ring = I[0].ring
    tname = "_t"
    while tname in ring.names:
        tname += "_"
    ext = PolyRing((tname,) + ring.names, ring.field)

    def lift(p):
        return Poly(ext, {(0,) + m: c for m, c in p.terms.items()})

    t = ext.gen(0)
    gens = [t * lift(f) for f in I] + [(ext.one - t) * lift(g) for g in J]
    eorder = EliminationOrder(1, Lex(1), order)
    gb = std_basis(gens, eorder)
    out = []
    for g in gb.basis:
        if all(m[0] == 0 for m in g.terms):
            out.append(Poly(ring, {m[1:]: c for m, c in g.terms.items()}))
    return std_basis(out, order).basis


def groebner(gens, order=None) -> BasisResult:
    """Reduced Groebner basis (degrevlex by default)."""
    gens = [g for g in gens if g]
    if not gens:
        return BasisResult([], order, None, True)
    order = order or DegRevLex(gens[0].ring.nvars)
    return std_basis(gens, order)
