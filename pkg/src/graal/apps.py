"""Applications: local dimension, regularity, systems of parameters,
Hilbert-Samuel data and lifting graded free resolutions to ``A_L``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from math import comb

from .engine import (
    augmented_basis,
    dim_and_indep_set,
    hilbert_series_monomial,
    is_standard_basis,
    leading_ideal,
    mora_nf,
    reduce_full,
    std_basis,
)
from .graal import GradedPresentation, LocalPresentation, initial_ideal
from .orderings import FilteredModuleOrder, GradedRankOne, SchreyerOrder, initial_w, w_degree
from .polycore import FreeModule, Poly, Vec


class LiftingError(ArithmeticError):
    pass


class NotASyzygyError(LiftingError):
    pass


class SopError(RuntimeError):
    pass


# ---------------------------------------------------------------------------
# dimension and regularity
# ---------------------------------------------------------------------------


def local_dim(gp: GradedPresentation) -> int:
    """Krull dimension of ``A_L``, read off the leading ideal of ``I_in``."""
    if not gp.I_in_gb:
        return gp.s
    d, _ = dim_and_indep_set(leading_ideal(gp.I_in_gb, gp.order), gp.s)
    return d


def embedding_dimension(gp: GradedPresentation) -> int:
    """``dim_K(a / a^2)``: ``s`` minus the number of linear basis elements."""
    linear = sum(1 for g in gp.I_in_gb if g.degree() == 1)
    return gp.s - linear


def is_regular(gp: GradedPresentation) -> bool:
    """True iff ``I_in`` is generated by linear forms."""
    verdict = all(g.degree() == 1 for g in gp.I_in_gb)
    if verdict != (embedding_dimension(gp) == local_dim(gp)):
        raise AssertionError("regularity criteria disagree")
    return verdict


# ---------------------------------------------------------------------------
# systems of parameters
# ---------------------------------------------------------------------------


@dataclass
class SopResult:
    coeff_matrix: list[list[int]]
    linear_forms: list[Poly]
    elements: list[Poly]
    regular: bool
    attempts: int


def validate_sop(gp: GradedPresentation, forms: list[Poly], want_regular: bool = False) -> bool:
    """``K[Y] / (I_in + <forms>)`` is zero-dimensional (and, for a regular
    system, ``I_in + <forms>`` is the ideal of all ``Y``)."""
    gens = [f for f in list(gp.I_in_gb) + list(forms) if f]
    if not gens:
        return gp.s == 0
    gb = std_basis(gens, gp.order).basis
    d, _ = dim_and_indep_set(leading_ideal(gb, gp.order), gp.s)
    if d != 0:
        return False
    if want_regular:
        return all(not reduce_full(y, gb, gp.order) for y in gp.ring.gens)
    return True


def system_of_parameters(
    gp: GradedPresentation, seed: int = 0, want_regular: bool = False, max_attempts: int = 8
) -> SopResult:
    if want_regular and not is_regular(gp):
        raise SopError("the local ring is not regular")
    d = local_dim(gp)
    s = gp.s
    rng = random.Random(seed)
    ys = gp.ring.gens
    J = gp.local.tower.J
    Q = gp.local.tower.Q
    bound = 2
    for attempt in range(1, max_attempts + 1):
        C = [[rng.randint(-bound, bound) for _ in range(s)] for _ in range(d)]
        bound *= 2
        forms = [sum((y.scale(gp.K.convert(c)) for y, c in zip(ys, row) if c), gp.ring.zero) for row in C]
        if any(not f for f in forms):
            continue
        if validate_sop(gp, forms, want_regular):
            elements = [sum((f * Q.const(c) for f, c in zip(J, row) if c), Q.zero) for row in C]
            return SopResult(C, forms, elements, is_regular(gp), attempt)
    raise SopError("no system of parameters found in %d attempts" % max_attempts)


# ---------------------------------------------------------------------------
# Hilbert-Samuel data
# ---------------------------------------------------------------------------


@dataclass
class HilbertData:
    """``HilbS(n) = sum(a[v-1] * binom(n, v), v = 1..len(a)) + c`` for ``n >= l``."""

    a_coeffs: list[int]
    constant_c: int
    threshold_l: int
    degree_d: int
    dimension: int
    hilbert_values: list[int]
    hs_values: dict[int, int] = field(default_factory=dict)

    def polynomial(self, n: int) -> int:
        return sum(a * comb(n, v + 1) for v, a in enumerate(self.a_coeffs)) + self.constant_c

    def hilbert_polynomial(self, n: int) -> int:
        return sum(a * comb(n, v) for v, a in enumerate(self.a_coeffs))

    def window_ok(self, width: int = 6) -> bool:
        l = self.threshold_l
        return all(self.polynomial(n) == self.hs_values[n] for n in range(l, l + width))


def hilbert_samuel(p: LocalPresentation, gp: GradedPresentation, Igens, window: int = 6) -> HilbertData:
    gb = initial_ideal(p, gp, Igens)
    L = leading_ideal(gb, gp.order) if gb else []
    hs = hilbert_series_monomial(L, gp.s)
    dim, d = hs.dimension, hs.degree_d
    l = max(d, 1) if dim >= 1 else d + 1
    nvals = l + window + 1
    hv = hs.coefficients(nvals)
    # binomial-basis coefficients by forward differences of the polynomial
    vals = [hs.polynomial_value(n) for n in range(dim)]
    a = []
    for _ in range(dim):
        a.append(vals[0])
        vals = [y - x for x, y in zip(vals, vals[1:])]
    hsv = {0: 0}
    acc = 0
    for n in range(1, nvals + 1):
        acc += hv[n - 1]
        hsv[n] = acc
    c = hsv[l] - sum(x * comb(l, v + 1) for v, x in enumerate(a))
    return HilbertData(a, c, l, d, dim, hv, hsv)


# ---------------------------------------------------------------------------
# filtered free modules
# ---------------------------------------------------------------------------


@dataclass
class FilteredFreeModule:
    """A free module with twists; ``side`` is ``"AL"`` or ``"Gr"``."""

    rank: int
    shifts: tuple[int, ...]
    side: str
    module: FreeModule
    order: object
    G0: list = field(default_factory=list)

    def ord(self, v: Vec, p: LocalPresentation | None = None) -> int:
        """``min_i (nu(v_i) + d_i)``; for the graded side, the degree."""
        if not v:
            raise ValueError("ord of the zero vector is undefined")
        if self.side == "Gr":
            return min(sum(m) + self.shifts[c] for c, m in v.terms)
        vals = []
        for i, comp in enumerate(v.components()):
            if comp:
                r = p.nf(comp).remainder
                if r:
                    vals.append(-w_degree(r, p.order) + self.shifts[i])
        if not vals:
            raise ValueError("vector is zero in the localization")
        return min(vals)


def _al_level(p: LocalPresentation, gr_order, shifts) -> FilteredFreeModule:
    m = len(shifts)
    mod = FreeModule(p.ring, m, shifts)
    order = FilteredModuleOrder(gr_order, p.nv, p.order.vorder)
    cand = [
        Vec(mod, {(c, mm): a for mm, a in g.terms.items()}) for c in range(m) for g in p.basis
    ]
    if cand and not is_standard_basis(cand, order):
        cand = std_basis(cand, order).basis
    return FilteredFreeModule(m, tuple(shifts), "AL", mod, order, cand)


def _gr_level(gp: GradedPresentation, gr_order, shifts) -> FilteredFreeModule:
    mod = FreeModule(gp.ring, len(shifts), shifts)
    return FilteredFreeModule(len(shifts), tuple(shifts), "Gr", mod, gr_order)


def lam_vec(gp: GradedPresentation, v: Vec, module: FreeModule) -> Vec:
    nv = gp.local.nv
    Q0 = gp.local.tower.Q0
    groups: dict = {}
    for (c, m), a in v.terms.items():
        groups.setdefault((c, m[nv:]), {})[m[:nv]] = a
    terms = {}
    for k, d in groups.items():
        e = gp.K.convert(Poly(Q0, d))
        if e:
            terms[k] = e
    return Vec(module, terms)


def lift_vec(gp: GradedPresentation, v: Vec, module: FreeModule) -> Vec:
    terms = {}
    for (c, y), a in v.terms.items():
        for vm, b in a.rep.terms.items():
            terms[(c, vm + y)] = b
    return Vec(module, terms)


def reduce_gr_vec(gp: GradedPresentation, v: Vec) -> Vec:
    if not gp.I_in_gb:
        return v
    comps = [gp.reduce(c) if c else c for c in v.components()]
    return v.module.from_components(comps)


def _gr_initial(gp: GradedPresentation, v: Vec, al: FilteredFreeModule, gr: FilteredFreeModule) -> Vec:
    """Reduced image in the graded module of the initial form of ``v``."""
    lo = gp.local.order
    return reduce_gr_vec(gp, lam_vec(gp, initial_w(v, lo, al.shifts), gr.module))


def _embed_Q0(p: LocalPresentation, f: Poly) -> Poly:
    return Poly(p.ring, {m + (0,) * p.s: c for m, c in f.terms.items()})


# ---------------------------------------------------------------------------
# lifting Groebner bases
# ---------------------------------------------------------------------------


@dataclass
class LiftedBasis:
    """``Gdash[j] = sum_i cofactors[j][i] * G[i]`` modulo the submodule
    spanned by ``G0``; ``units[j]`` is the multiplier fixing the leading
    coefficient."""

    Gdash: list
    cofactors: list
    units: list
    leading: list
    G0: list


def lift_groebner(p, gp, al: FilteredFreeModule, gr: FilteredFreeModule, G, Hdash) -> LiftedBasis:
    """Lift a Groebner basis ``Hdash = [(h', q)]`` over ``K[Y]`` (with
    ``h' = sum q_i * initial(G[i])``) to a standard basis over ``A_L``."""
    G0 = al.G0
    out, cofs, units, leads = [], [], [], []
    k = len(G)
    one = p.ring.one
    for h, q in Hdash:
        qs = [gp.lift(gp.reduce(c)) if c else p.ring.zero for c in q.components()]
        f = al.module.zero
        for qi, gi in zip(qs, G):
            if qi:
                f = f + gi * qi
        res = mora_nf(f, G0, al.order)
        g = res.remainder
        if not g:
            raise LiftingError("lifted element reduces to zero")
        cof = [res.unit * qi for qi in qs]
        target = h.lm(gr.order)
        s = _gr_initial(gp, g, al, gr).terms.get(target)
        if not s:
            raise LiftingError("leading monomial of the lift does not match")
        unit = one
        if s != gp.K.one:
            if s.rep.is_constant():
                inv = s.field.base.field.one / s.rep.constant_coeff()
                g = g.scale(inv)
                cof = [c.scale(inv) for c in cof]
                unit = p.ring.const(inv)
            else:
                a = _embed_Q0(p, s.inverse().rep)
                res = mora_nf(g * a, G0, al.order)
                g = res.remainder
                cof = [res.unit * a * c for c in cof]
                unit = a
                s2 = _gr_initial(gp, g, al, gr).terms.get(target)
                if not s2 or not s2.rep.is_constant():
                    raise LiftingError("leading coefficient is not invertible in K")
                inv = s2.field.base.field.one / s2.rep.constant_coeff()
                g = g.scale(inv)
                cof = [c.scale(inv) for c in cof]
                unit = unit.scale(inv)
        out.append(g)
        cofs.append(cof)
        units.append(unit)
        leads.append(target)
    if len(cofs) and any(len(c) != k for c in cofs):
        raise LiftingError("cofactor length mismatch")
    return LiftedBasis(out, cofs, units, leads, G0)


# ---------------------------------------------------------------------------
# lifting syzygies
# ---------------------------------------------------------------------------


def lift_syzygy(p, gp, eta: Vec, al_prev: FilteredFreeModule, al_next: FilteredFreeModule,
                gr_next: FilteredFreeModule, G, lifted: LiftedBasis) -> Vec:
    """Lift a homogeneous syzygy ``eta`` of the initial forms of ``G`` to a
    syzygy of ``G`` over ``A_L`` whose initial form is ``eta``."""
    if not eta:
        return al_next.module.zero
    degs = {sum(m) + gr_next.shifts[c] for c, m in eta.terms}
    if len(degs) != 1:
        raise LiftingError("syzygy is not homogeneous")
    eta = reduce_gr_vec(gp, eta)
    cs = [gp.lift(e) if e else p.ring.zero for e in eta.components()]
    f = al_prev.module.zero
    for c, g in zip(cs, G):
        if c:
            f = f + g * c
    # the piece of f in degree deg(eta) is sum(eta_i * in(g_i))
    (deg,) = degs
    nv = p.nv
    piece = Vec(f.module, {k: a for k, a in f.terms.items() if sum(k[1][nv:]) + al_prev.shifts[k[0]] == deg})
    if piece and reduce_gr_vec(gp, lam_vec(gp, piece, FreeModule(gp.ring, al_prev.rank, al_prev.shifts))):
        raise NotASyzygyError("initial form is not a syzygy")
    res = mora_nf(f, al_prev.G0, al_prev.order)
    c0 = res.unit.constant_coeff()
    inv0 = p.ring.field.one / c0
    cs = [(res.unit * c).scale(inv0) for c in cs]
    r = res.remainder.scale(inv0)
    nG = len(lifted.Gdash)
    div = mora_nf(r, list(lifted.Gdash) + list(al_prev.G0), al_prev.order, track=True)
    if div.remainder:
        raise NotASyzygyError("initial form is not a syzygy")
    u = div.unit
    d = div.cofactors[:nG]
    comps = []
    for i, c in enumerate(cs):
        x = u * c
        for j in range(nG):
            if d[j] and lifted.cofactors[j][i]:
                x = x - d[j] * lifted.cofactors[j][i]
        comps.append(x)
    inv = p.ring.field.one / u.constant_coeff()
    gamma = al_next.module.from_components([x.scale(inv) for x in comps])
    res = mora_nf(gamma, al_next.G0, al_next.order)
    return res.remainder.scale(p.ring.field.one / res.unit.constant_coeff())


# ---------------------------------------------------------------------------
# resolutions
# ---------------------------------------------------------------------------


@dataclass
class ResolutionPair:
    """Matched resolutions of ``Gr/in(I)`` over ``K[Y]`` and of ``A_L/I``.

    ``gr_maps[k]`` and ``al_maps[k]`` are lists of columns (vectors in the
    modules of step ``k``); ``shifts[k]`` are the twists of step ``k``.
    """

    gr_maps: list
    al_maps: list
    shifts: list
    gr_levels: list
    al_levels: list
    complete: bool
    lifted: list = field(default_factory=list)

    @property
    def length(self) -> int:
        return len(self.gr_maps)

    @property
    def ranks(self) -> list[int]:
        return [len(s) for s in self.shifts]


def _homogeneous_greedy(gp, items, module, order, key):
    """Keep the items (pairs whose second entry is a graded vector) that are
    not in the submodule spanned by the kept ones plus ``I_in``."""
    kept = []
    for it in sorted(items, key=key):
        v = it[1]
        gens = [k[1] for k in kept] + [
            Vec(module, {(c, m): a for m, a in g.terms.items()})
            for c in range(module.rank)
            for g in gp.I_in_gb
        ]
        if gens:
            gb = std_basis(gens, order).basis
            if not reduce_full(v, gb, order):
                continue
        kept.append(it)
    return kept


def _first_step(p, gp, Igens, gr0, al0):
    pre = [p.to_local(f) for f in Igens]
    pre = [f for f in pre if f]
    S = std_basis(list(p.basis) + pre, p.order, known=len(p.basis)) if pre else None
    cands = []
    for g in (S.basis if S else []):
        r = p.nf(g).remainder
        if not r:
            continue
        rv = Vec(al0.module, {(0, m): c for m, c in r.terms.items()})
        h = _gr_initial(gp, rv, al0, gr0)
        if h:
            cands.append((rv, h))
    return _homogeneous_greedy(
        gp, cands, gr0.module, gr0.order, key=lambda it: (gr0.ord(it[1]), gr0.order.key(it[1].lm(gr0.order)))
    )


def lift_resolution(p: LocalPresentation, gp: GradedPresentation, Igens, max_length: int = 10) -> ResolutionPair:
    base = GradedRankOne(gp.order)
    gr = _gr_level(gp, base, (0,))
    al = _al_level(p, base, (0,))
    pairs = _first_step(p, gp, Igens, gr, al)
    gr_maps, al_maps, shifts = [], [], [(0,)]
    gr_levels, al_levels, lifted_all = [gr], [al], []
    complete = True
    if not pairs:
        return ResolutionPair([], [], shifts, gr_levels, al_levels, True)
    deltas = [d for d, _ in pairs]
    thetas = [h for _, h in pairs]
    step = 0
    while True:
        step += 1
        new_shifts = tuple(gr.ord(t) for t in thetas)
        gr_maps.append(thetas)
        al_maps.append(deltas)
        shifts.append(new_shifts)
        next_order = SchreyerOrder(gr.order, thetas)
        gr_next = _gr_level(gp, next_order, new_shifts)
        al_next = _al_level(p, next_order, new_shifts)
        gr_levels.append(gr_next)
        al_levels.append(al_next)
        aug = augmented_basis(thetas, gr.order, modulo=gp.I_in_gb, syz_order=next_order)
        hdash = []
        syz = []
        in_leads = [g.lm(gp.order) for g in gp.I_in_gb]
        for t, b in zip(aug.top, aug.bottom):
            if not b:
                continue
            b = Vec(gr_next.module, b.terms)
            if t:
                c, m = t.lm(gr.order)
                # leading terms inside I_in * F are covered by G0
                if not any(Poly.mon_div(l, m) is not None for l in in_leads):
                    hdash.append((t, b))
            else:
                b = reduce_gr_vec(gp, b)
                if b:
                    syz.append((None, b))
        if not syz:
            break
        if step >= max_length:
            complete = False
            break
        syz = _homogeneous_greedy(
            gp, syz, gr_next.module, next_order,
            key=lambda it: (gr_next.ord(it[1]), next_order.key(it[1].lm(next_order))),
        )
        lifted = lift_groebner(p, gp, al, gr, deltas, hdash)
        lifted_all.append(lifted)
        new_deltas, new_thetas = [], []
        for _, eta in syz:
            gamma = lift_syzygy(p, gp, eta, al, al_next, gr_next, deltas, lifted)
            new_deltas.append(gamma)
            new_thetas.append(reduce_gr_vec(gp, eta))
        deltas, thetas = new_deltas, new_thetas
        gr, al = gr_next, al_next
    return ResolutionPair(gr_maps, al_maps, shifts, gr_levels, al_levels, complete, lifted_all)


# ---------------------------------------------------------------------------
# invariant checks
# ---------------------------------------------------------------------------


def _apply(columns, v: Vec, target: FreeModule):
    out = target.zero
    for i, c in enumerate(v.components()):
        if c:
            out = out + columns[i] * c
    return out


def verify_resolution(p, gp, res: ResolutionPair) -> dict:
    """Replay the matched-resolution invariants; returns named booleans."""
    report = {"al_compose": True, "gr_compose": True, "initials": True, "shifts": True}
    for k in range(1, res.length):
        prev_al, prev_gr = res.al_levels[k - 1], res.gr_levels[k - 1]
        for col in res.al_maps[k]:
            v = _apply(res.al_maps[k - 1], col, prev_al.module)
            if v and mora_nf(v, prev_al.G0, prev_al.order).remainder:
                report["al_compose"] = False
        for col in res.gr_maps[k]:
            v = _apply(res.gr_maps[k - 1], col, prev_gr.module)
            if v and reduce_gr_vec(gp, v):
                report["gr_compose"] = False
    for k in range(res.length):
        row_al, row_gr = res.al_levels[k], res.gr_levels[k]
        for dcol, gcol, sh in zip(res.al_maps[k], res.gr_maps[k], res.shifts[k + 1]):
            if row_al.ord(dcol, p) != sh or row_gr.ord(gcol) != sh:
                report["shifts"] = False
            if not entrywise_initial_matches(p, gp, dcol, gcol, row_al.shifts, sh):
                report["initials"] = False
    return report


def entrywise_initial_matches(p, gp, dcol: Vec, gcol: Vec, row_shifts, col_shift) -> bool:
    """Each entry of ``dcol`` has order at least ``col_shift - d_i``, and its
    piece of exactly that order agrees with ``gcol`` modulo ``I_in``."""
    for i, (a, b) in enumerate(zip(dcol.components(), gcol.components())):
        e = col_shift - row_shifts[i]
        r = p.nf(a).remainder if a else a
        b = gp.reduce(b) if b else b
        if not r:
            if b:
                return False
            continue
        nu = -w_degree(r, p.order)
        if nu < e:
            return False
        piece = gp.reduce(gp.lam(initial_w(r, p.order))) if nu == e else gp.ring.zero
        if piece != b:
            return False
    return True
