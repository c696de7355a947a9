"""Exact coefficient fields and sparse polynomial / free-module arithmetic.

Three coefficient fields are provided:

* :data:`QQ` -- the rationals, elements are ``gmpy2.mpq``.
* :class:`RatFuncField` -- a rational function field ``QQ(u1, ..., uk)``.
  Numerator and denominator are sympy ``PolyElement`` objects; the class
  only adds the normalisation contract (reduced, monic denominator).
* :class:`ResidueField` -- ``k(U)[V] / J0`` for a zero-dimensional maximal
  ideal ``J0`` given by a reduced Groebner basis.

Polynomials (:class:`Poly`) and free-module vectors (:class:`Vec`) store
their terms in a plain dict keyed by monomials.  No monomial ordering is
attached to an element; leading terms are computed on demand by passing an
ordering object (see :mod:`graal.orderings`).
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable

import gmpy2
from sympy import QQ as _SYMPY_QQ
from sympy.polys.rings import ring as _sympy_ring

mpq = gmpy2.mpq
MPQ = type(mpq(0))


class RingMismatchError(ValueError):
    pass


class NotInvertibleError(ZeroDivisionError):
    pass


# ---------------------------------------------------------------------------
# coefficient fields
# ---------------------------------------------------------------------------


class RationalField:
    """The field of rational numbers."""

    zero = mpq(0)
    one = mpq(1)
    names: tuple[str, ...] = ()

    def __call__(self, x) -> mpq:
        return self.convert(x)

    def convert(self, x):
        if isinstance(x, str):
            return mpq(x)
        return mpq(x)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"

    def to_str(self, c) -> str:
        return str(c)


QQ = RationalField()


class RatFuncField:
    """Rational function field ``QQ(names)``."""

    def __init__(self, names: Iterable[str]):
        self.names = tuple(names)
        if not self.names:
            raise ValueError("RatFuncField needs at least one variable; use QQ")
        self.ring, *_ = _sympy_ring(",".join(self.names), _SYMPY_QQ)
        self.zero = RatFunc(self, self.ring.zero, self.ring.one)
        self.one = RatFunc(self, self.ring.one, self.ring.one)

    def __eq__(self, other):
        return isinstance(other, RatFuncField) and other.names == self.names

    def __hash__(self):
        return hash(("RatFuncField", self.names))

    def __repr__(self):
        return "QQ(%s)" % ",".join(self.names)

    def __call__(self, x):
        return self.convert(x)

    def convert(self, x) -> RatFunc:
        if isinstance(x, RatFunc):
            if x.field != self:
                raise RingMismatchError("rational function from another field")
            return x
        if isinstance(x, str):
            x = mpq(x)
        return RatFunc(self, self.ring(mpq(x)), self.ring.one)

    def gen(self, name: str) -> RatFunc:
        i = self.names.index(name)
        return RatFunc(self, self.ring.gens[i], self.ring.one)

    def monomial(self, coeff, exps) -> RatFunc:
        """``coeff * u^exps`` as a field element."""
        num = self.ring({tuple(exps): mpq(coeff)})
        return RatFunc(self, num, self.ring.one)

    def normalize(self, num, den) -> RatFunc:
        return ratfunc_normalize(self, num, den)

    def to_str(self, c) -> str:
        return str(c)


class RatFunc:
    """Element ``num/den`` of a rational function field.

    Invariants: ``gcd(num, den) = 1`` and the lex-leading coefficient of
    ``den`` is 1.  Construct through :func:`ratfunc_normalize` unless both
    invariants are known to hold.
    """

    __slots__ = ("field", "num", "den")

    def __init__(self, field, num, den):
        self.field = field
        self.num = num
        self.den = den

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, (int, MPQ)):
            return self.field.convert(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == other.den:
            if self.den == 1:
                return RatFunc(self.field, self.num + other.num, self.den)
            return ratfunc_normalize(self.field, self.num + other.num, self.den)
        return ratfunc_normalize(
            self.field, self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(self.field, -self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == 1 and other.den == 1:
            return RatFunc(self.field, self.num * other.num, self.den)
        return ratfunc_normalize(self.field, self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self):
        if not self.num:
            raise NotInvertibleError("division by zero in %r" % self.field)
        return ratfunc_normalize(self.field, self.den, self.num)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return RatFunc(self.field, self.num**n, self.den**n)

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, MPQ)):
            return self.den == 1 and self.num == other
        return NotImplemented

    def __hash__(self):
        return hash((tuple(sorted(self.num.items())), tuple(sorted(self.den.items()))))

    def is_constant(self) -> bool:
        return self.den == 1 and self.num.is_ground

    def __repr__(self):
        num = _fmt_ground_poly(self.num, self.field.names)
        if self.den == 1:
            return num
        den = _fmt_ground_poly(self.den, self.field.names)
        if len(self.num) > 1 or "/" in num:
            num = "(%s)" % num
        if len(self.den) > 1 or self.den.LC != 1 or "*" in den:
            den = "(%s)" % den
        return "%s/%s" % (num, den)


def _fmt_ground_poly(p, names) -> str:
    """Print a sympy polynomial over QQ in the ``2*w^2 - 1/3*w`` style."""
    if not p:
        return "0"
    out = []
    for m, c in sorted(p.terms(), key=lambda t: (sum(t[0]), t[0]), reverse=True):
        c = mpq(c)
        neg = c < 0
        a = -c if neg else c
        mon = format_monomial(names, m)
        if mon:
            s = mon if a == 1 else "%s*%s" % (a, mon)
        else:
            s = str(a)
        if not out:
            out.append(("-" if neg else "") + s)
        else:
            out.append((" - " if neg else " + ") + s)
    return "".join(out)


def ratfunc_normalize(field: RatFuncField, num, den) -> RatFunc:
    """Cancel common factors and make the denominator monic."""
    if not den:
        raise NotInvertibleError("zero denominator")
    if not num:
        return field.zero
    if den.is_ground:
        c = den.LC
        return RatFunc(field, num.quo_ground(c), field.ring.one)
    g = num.gcd(den)
    if g != 1:
        num = num.exquo(g)
        den = den.exquo(g)
    c = den.LC
    if c != 1:
        num = num.quo_ground(c)
        den = den.quo_ground(c)
    return RatFunc(field, num, den)


# ---------------------------------------------------------------------------
# polynomial rings
# ---------------------------------------------------------------------------


class PolyRing:
    """Polynomial ring ``field[names]``."""

    def __init__(self, names: Iterable[str], field=QQ):
        self.names = tuple(names)
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate variable names: %r" % (self.names,))
        self.field = field
        self.nvars = len(self.names)
        self._zero_mon = (0,) * self.nvars
        self._index = {n: i for i, n in enumerate(self.names)}

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.names == other.names
            and self.field == other.field
        )

    def __hash__(self):
        return hash((self.names, self.field))

    def __repr__(self):
        return "%r[%s]" % (self.field, ",".join(self.names))

    def index(self, name: str) -> int:
        return self._index[name]

    @property
    def zero(self) -> Poly:
        return Poly(self, {})

    @property
    def one(self) -> Poly:
        return Poly(self, {self._zero_mon: self.field.one})

    def const(self, c) -> Poly:
        c = self.field.convert(c)
        return Poly(self, {self._zero_mon: c} if c else {})

    def gen(self, name_or_index) -> Poly:
        i = name_or_index if isinstance(name_or_index, int) else self._index[name_or_index]
        e = [0] * self.nvars
        e[i] = 1
        return Poly(self, {tuple(e): self.field.one})

    @property
    def gens(self) -> list[Poly]:
        return [self.gen(i) for i in range(self.nvars)]

    def monomial(self, exps, coeff=None) -> Poly:
        c = self.field.one if coeff is None else self.field.convert(coeff)
        return Poly(self, {tuple(exps): c} if c else {})

    def from_dict(self, d: dict) -> Poly:
        conv = self.field.convert
        terms = {}
        for m, c in d.items():
            c = conv(c)
            if c:
                terms[tuple(m)] = c
        return Poly(self, terms)

    def __call__(self, x) -> Poly:
        if isinstance(x, Poly):
            if x.ring != self:
                raise RingMismatchError("%r is not in %r" % (x, self))
            return x
        return self.const(x)


def _mon_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _mon_div(small, big):
    """Return ``big / small`` if ``small | big`` else None."""
    q = []
    for x, y in zip(small, big):
        if x > y:
            return None
        q.append(y - x)
    return tuple(q)


def _mon_lcm(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


class _Sparse:
    """Shared dict-of-terms arithmetic for :class:`Poly` and :class:`Vec`."""

    __slots__ = ("terms",)

    def _same(self, other):
        raise NotImplementedError

    def _new(self, terms):
        raise NotImplementedError

    @property
    def field(self):
        raise NotImplementedError

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        t = dict(self.terms)
        for m, c in other.terms.items():
            if m in t:
                v = t[m] + c
                if v:
                    t[m] = v
                else:
                    del t[m]
            else:
                t[m] = c
        return self._new(t)

    __radd__ = __add__

    def __neg__(self):
        return self._new({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        t = dict(self.terms)
        for m, c in other.terms.items():
            if m in t:
                v = t[m] - c
                if v:
                    t[m] = v
                else:
                    del t[m]
            else:
                t[m] = -c
        return self._new(t)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        if not c:
            return self._new({})
        return self._new({m: c * v for m, v in self.terms.items()})

    def __eq__(self, other):
        if isinstance(other, _Sparse):
            return self._same_space(other) and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def lm(self, order):
        """Leading monomial under ``order``."""
        return max(self.terms, key=order.key)

    def lt(self, order):
        m = max(self.terms, key=order.key)
        return m, self.terms[m]

    def lc(self, order):
        return self.terms[max(self.terms, key=order.key)]

    def sorted_terms(self, order=None, reverse=True):
        """Terms sorted descending by ``order`` (canonical lex if None)."""
        key = order.key if order is not None else self._canon_key
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=reverse)

    def monic(self, order):
        return self.scale(self.field.one / self.lc(order))

    def map_coeffs(self, fn, target=None):
        """Apply ``fn`` to every coefficient; zero images are dropped."""
        t = {}
        for m, c in self.terms.items():
            v = fn(c)
            if v:
                t[m] = v
        out = self._new(t)
        if target is not None:
            out = out._retag(target)
        return out


class Poly(_Sparse):
    """Sparse polynomial over ``ring.field``."""

    __slots__ = ("ring",)

    def __init__(self, ring: PolyRing, terms: dict | None = None):
        self.ring = ring
        self.terms = terms if terms is not None else {}

    # monomial algebra, used generically by the engine
    mon_mul = staticmethod(_mon_mul)
    mon_div = staticmethod(_mon_div)

    @staticmethod
    def mon_lcm(a, b):
        return _mon_lcm(a, b)

    @staticmethod
    def mon_deg(m) -> int:
        return sum(m)

    @staticmethod
    def mon_exps(m):
        return m

    @staticmethod
    def _canon_key(m):
        return m

    @property
    def field(self):
        return self.ring.field

    def _new(self, terms):
        return Poly(self.ring, terms)

    def _retag(self, ring):
        return Poly(ring, self.terms)

    def _same_space(self, other):
        return isinstance(other, Poly) and other.ring == self.ring

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.ring is not self.ring and other.ring != self.ring:
                raise RingMismatchError("%r vs %r" % (self.ring, other.ring))
            return other
        if isinstance(other, _Sparse):
            return NotImplemented
        try:
            return self.ring.const(other)
        except (TypeError, ValueError, RingMismatchError):
            return NotImplemented

    def __mul__(self, other):
        if isinstance(other, Vec):
            return NotImplemented
        if not isinstance(other, Poly):
            try:
                c = self.field.convert(other)
            except (TypeError, ValueError, RingMismatchError):
                return NotImplemented
            return self.scale(c)
        other = self._coerce(other)
        if len(self.terms) < len(other.terms):
            a, b = self, other
        else:
            a, b = other, self
        t: dict = {}
        for ma, ca in a.terms.items():
            for mb, cb in b.terms.items():
                m = _mon_mul(ma, mb)
                v = ca * cb
                if m in t:
                    v = t[m] + v
                    if v:
                        t[m] = v
                    else:
                        del t[m]
                else:
                    t[m] = v
        return Poly(self.ring, t)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = self.ring.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def mul_term(self, c, exps):
        """``c * x^exps * self``."""
        if not c:
            return Poly(self.ring, {})
        return Poly(self.ring, {_mon_mul(m, exps): c * v for m, v in self.terms.items()})

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self.terms), default=-1)

    def degree_in(self, indices) -> int:
        return max((sum(m[i] for i in indices) for m in self.terms), default=-1)

    def is_constant(self) -> bool:
        return all(not any(m) for m in self.terms)

    def constant_coeff(self):
        return self.terms.get(self.ring._zero_mon, self.field.zero)

    def coeff(self, exps):
        return self.terms.get(tuple(exps), self.field.zero)

    def support(self) -> set[int]:
        return {i for m in self.terms for i, e in enumerate(m) if e}

    def evaluate(self, point):
        """Evaluate at a full point (sequence of field elements)."""
        total = self.field.zero
        for m, c in self.terms.items():
            v = c
            for x, e in zip(point, m):
                if e:
                    v = v * x**e
            total = total + v
        return total

    def __repr__(self):
        return format_poly(self)

    __str__ = __repr__


def substitute(f: Poly, images: dict, target: PolyRing | None = None) -> Poly:
    """Ring homomorphism sending variable ``name -> images[name]``.

    Variables missing from ``images`` are kept, which requires them to
    exist in the target ring under the same name.  Coefficients are
    carried over unchanged, so both rings must share a field (or the
    target field must accept them through ``convert``).
    """
    target = target or f.ring
    names = f.ring.names
    keep = {}
    for i, n in enumerate(names):
        if n not in images:
            if n not in target._index:
                raise KeyError("no image for variable %r" % n)
            keep[i] = target._index[n]
    imgs = {}
    for n, p in images.items():
        if n not in f.ring._index:
            continue
        imgs[f.ring._index[n]] = target(p) if not isinstance(p, Poly) else p
    powers: dict = {}

    def power(i, e):
        key = (i, e)
        if key not in powers:
            powers[key] = imgs[i] ** e
        return powers[key]

    result = target.zero
    conv = target.field.convert
    for m, c in f.terms.items():
        e0 = [0] * target.nvars
        for i, j in keep.items():
            e0[j] = m[i]
        term = Poly(target, {tuple(e0): conv(c)})
        for i, e in enumerate(m):
            if e and i in imgs:
                term = term * power(i, e)
        result = result + term
    return result


# ---------------------------------------------------------------------------
# free modules
# ---------------------------------------------------------------------------


class FreeModule:
    """Free module ``ring^rank``; ``shifts`` are the twists ``d_i``."""

    def __init__(self, ring: PolyRing, rank: int, shifts=None):
        if rank < 1:
            raise ValueError("rank must be positive")
        self.ring = ring
        self.rank = rank
        self.shifts = tuple(shifts) if shifts is not None else (0,) * rank
        if len(self.shifts) != rank:
            raise ValueError("need one shift per component")

    def __eq__(self, other):
        return isinstance(other, FreeModule) and self.ring == other.ring and self.rank == other.rank

    def __hash__(self):
        return hash((self.ring, self.rank))

    def __repr__(self):
        return "%r^%d" % (self.ring, self.rank)

    @property
    def zero(self) -> Vec:
        return Vec(self, {})

    def basis(self, i: int) -> Vec:
        return Vec(self, {(i, self.ring._zero_mon): self.ring.field.one})

    def from_components(self, comps) -> Vec:
        comps = list(comps)
        if len(comps) != self.rank:
            raise ValueError("expected %d components, got %d" % (self.rank, len(comps)))
        t = {}
        for i, p in enumerate(comps):
            p = self.ring(p)
            for m, c in p.terms.items():
                t[(i, m)] = c
        return Vec(self, t)


class Vec(_Sparse):
    """Element of a free module; monomials are ``(component, exps)``."""

    __slots__ = ("module",)

    def __init__(self, module: FreeModule, terms: dict | None = None):
        self.module = module
        self.terms = terms if terms is not None else {}

    @staticmethod
    def mon_mul(m, exps):
        return (m[0], _mon_mul(m[1], exps))

    @staticmethod
    def mon_div(small, big):
        if small[0] != big[0]:
            return None
        return _mon_div(small[1], big[1])

    @staticmethod
    def mon_lcm(a, b):
        if a[0] != b[0]:
            return None
        return (a[0], _mon_lcm(a[1], b[1]))

    @staticmethod
    def mon_deg(m) -> int:
        return sum(m[1])

    @staticmethod
    def mon_exps(m):
        return m[1]

    @staticmethod
    def _canon_key(m):
        return (-m[0], m[1])

    @property
    def ring(self):
        return self.module.ring

    @property
    def field(self):
        return self.module.ring.field

    @property
    def rank(self):
        return self.module.rank

    def _new(self, terms):
        return Vec(self.module, terms)

    def _retag(self, module):
        return Vec(module, self.terms)

    def _same_space(self, other):
        return isinstance(other, Vec) and other.module == self.module

    def _coerce(self, other):
        if isinstance(other, Vec):
            if other.module != self.module:
                raise RingMismatchError("%r vs %r" % (self.module, other.module))
            return other
        if isinstance(other, int) and other == 0:
            return self.module.zero
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, Poly):
            if other.ring != self.ring:
                raise RingMismatchError("%r vs %r" % (other.ring, self.ring))
            t: dict = {}
            for (i, ma), ca in self.terms.items():
                for mb, cb in other.terms.items():
                    m = (i, _mon_mul(ma, mb))
                    v = ca * cb
                    if m in t:
                        v = t[m] + v
                        if v:
                            t[m] = v
                        else:
                            del t[m]
                    else:
                        t[m] = v
            return Vec(self.module, t)
        if isinstance(other, _Sparse):
            return NotImplemented
        try:
            c = self.field.convert(other)
        except (TypeError, ValueError, RingMismatchError):
            return NotImplemented
        return self.scale(c)

    __rmul__ = __mul__

    def mul_term(self, c, exps):
        if not c:
            return Vec(self.module, {})
        return Vec(
            self.module, {(i, _mon_mul(m, exps)): c * v for (i, m), v in self.terms.items()}
        )

    def component(self, i: int) -> Poly:
        return Poly(self.ring, {m: c for (j, m), c in self.terms.items() if j == i})

    def components(self) -> list[Poly]:
        comps = [dict() for _ in range(self.module.rank)]
        for (j, m), c in self.terms.items():
            comps[j][m] = c
        return [Poly(self.ring, t) for t in comps]

    def degree(self) -> int:
        return max((sum(m) for (_, m) in self.terms), default=-1)

    def __repr__(self):
        return "[" + ", ".join(format_poly(p) for p in self.components()) + "]"

    __str__ = __repr__


def poly_as_vec(f: Poly, module: FreeModule | None = None) -> Vec:
    module = module or FreeModule(f.ring, 1)
    return Vec(module, {(0, m): c for m, c in f.terms.items()})


def vec_as_poly(v: Vec) -> Poly:
    if v.module.rank != 1:
        raise ValueError("only rank-one vectors convert to polynomials")
    return v.component(0)


# ---------------------------------------------------------------------------
# residue field K = k(U)[V] / J0
# ---------------------------------------------------------------------------


class ResidueField:
    """``base / <gb>`` for a maximal ideal with reduced Groebner basis ``gb``.

    ``base`` is a polynomial ring over QQ or a :class:`RatFuncField`; ``gb``
    must be the reduced Groebner basis under ``order`` (a global ordering).
    Elements are stored as fully reduced normal forms.
    """

    def __init__(self, base: PolyRing, gb: list[Poly], order):
        self.base = base
        self.gb = list(gb)
        self.order = order
        self._leads = [(g.lm(order), g.lc(order), g) for g in self.gb]
        self._inverses: dict = {}
        self.zero = ResidueElem(self, base.zero)
        self.one = ResidueElem(self, self._reduce(base.one))
        if not self.one.rep:
            raise ValueError("the ideal is the unit ideal; no residue field")
        self.names = base.names

    def __eq__(self, other):
        return self is other or (
            isinstance(other, ResidueField)
            and self.base == other.base
            and self.gb == other.gb
        )

    def __hash__(self):
        return hash((self.base, len(self.gb)))

    def __repr__(self):
        if not self.gb:
            return "%r[%s]" % (self.base.field, ",".join(self.base.names))
        return "%r/<%s>" % (self.base, ", ".join(map(str, self.gb)))

    def _reduce(self, p: Poly) -> Poly:
        from .engine import reduce_full

        if not self.gb:
            return p
        return reduce_full(p, self.gb, self.order, leads=self._leads)

    def __call__(self, x):
        return self.convert(x)

    def convert(self, x) -> ResidueElem:
        if isinstance(x, ResidueElem):
            if x.field is not self and x.field != self:
                raise RingMismatchError("residue element of another field")
            return x
        if isinstance(x, Poly):
            return ResidueElem(self, self._reduce(self.base(x)))
        return ResidueElem(self, self.base.const(x))

    def lift(self, c: ResidueElem) -> Poly:
        """Canonical representative in ``base``."""
        return c.rep

    def basis_size(self) -> int | None:
        """Dimension over the coefficient field (number of standard monomials)."""
        from .engine import dim_and_indep_set, count_standard_monomials

        leads = [g.lm(self.order) for g in self.gb]
        d, _ = dim_and_indep_set(leads, self.base.nvars)
        if d:
            return None
        return count_standard_monomials(leads, self.base.nvars)

    def to_str(self, c) -> str:
        return str(c)


class ResidueElem:
    __slots__ = ("field", "rep")

    def __init__(self, field: ResidueField, rep: Poly):
        self.field = field
        self.rep = rep

    def _coerce(self, other):
        if isinstance(other, ResidueElem):
            return other
        if isinstance(other, Poly):
            return self.field.convert(other)
        try:
            return ResidueElem(self.field, self.field.base.const(other))
        except (TypeError, ValueError, RingMismatchError):
            return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return ResidueElem(self.field, self.rep + other.rep)

    __radd__ = __add__

    def __neg__(self):
        return ResidueElem(self.field, -self.rep)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return ResidueElem(self.field, self.rep - other.rep)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return ResidueElem(self.field, other.rep - self.rep)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.rep, other.rep
        if a.is_constant() or b.is_constant():
            return ResidueElem(self.field, a * b)
        return ResidueElem(self.field, self.field._reduce(a * b))

    __rmul__ = __mul__

    def inverse(self) -> ResidueElem:
        return residue_invert(self)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __bool__(self):
        return bool(self.rep)

    def __eq__(self, other):
        if isinstance(other, ResidueElem):
            return self.rep == other.rep
        if isinstance(other, Poly):
            return self.rep == self.field.convert(other).rep
        if other == 0:
            return not self.rep
        try:
            return self.rep == self.field.base.const(other)
        except (TypeError, ValueError, RingMismatchError):
            return NotImplemented

    def __hash__(self):
        return hash(self.rep)

    def is_normal(self) -> bool:
        """True when no basis leading monomial divides a term of ``rep``."""
        leads = [m for m, _, _ in self.field._leads]
        return all(_mon_div(l, m) is None for m in self.rep.terms for l in leads)

    def __repr__(self):
        s = format_poly(self.rep)
        return s if len(self.rep) <= 1 else "(%s)" % s


def residue_invert(c: ResidueElem) -> ResidueElem:
    """Inverse in ``K`` via a cofactor-tracked Groebner basis of ``<c> + J0``.

    ``J0`` is maximal, so the basis is ``{1}``; the cofactor in front of
    ``c`` is the inverse.
    """
    from .engine import std_basis

    K = c.field
    if not c.rep:
        raise NotInvertibleError("zero is not invertible in the residue field")
    if c.rep.is_constant():
        return ResidueElem(K, K.base.const(K.base.field.one / c.rep.constant_coeff()))
    hit = K._inverses.get(c.rep)
    if hit is not None:
        return hit
    gens = [c.rep] + K.gb
    res = std_basis(gens, K.order, track_cofactors=True)
    for b, cof in zip(res.basis, res.cofactors):
        if b.is_constant() and b:
            inv = cof[0].scale(K.base.field.one / b.constant_coeff())
            a = K.convert(inv)
            if (a * c).rep != K.one.rep:
                raise ArithmeticError("cofactor extraction failed")
            K._inverses[c.rep] = a
            return a
    raise NotInvertibleError(
        "<c> + J0 is proper; J0 is not maximal (invalid ring tower)"
    )


# ---------------------------------------------------------------------------
# printing
# ---------------------------------------------------------------------------


def _fmt_coeff(c) -> tuple[str, bool]:
    """Return (text, is_atomic) for a coefficient."""
    s = repr(c)
    atomic = not any(ch in s.strip("-") for ch in "+- ") or (s.startswith("(") and s.endswith(")"))
    return s, atomic


def format_monomial(names, m) -> str:
    parts = []
    for n, e in zip(names, m):
        if e == 1:
            parts.append(n)
        elif e:
            parts.append("%s^%d" % (n, e))
    return "*".join(parts)


def format_poly(f: Poly) -> str:
    if not f.terms:
        return "0"
    out = []
    for m, c in f.sorted_terms():
        mon = format_monomial(f.ring.names, m)
        neg = False
        if isinstance(c, MPQ):
            neg = c < 0
            a = -c if neg else c
            cs = str(a)
            if mon:
                cs = "" if a == 1 else cs + "*"
                s = cs + mon
            else:
                s = cs
        else:
            cs, atomic = _fmt_coeff(c)
            if atomic and cs.startswith("-"):
                neg, cs = True, cs[1:]
            if not atomic:
                cs = "(%s)" % cs
            if mon:
                s = mon if cs == "1" else cs + "*" + mon
            else:
                s = cs
        if not out:
            out.append(("-" if neg else "") + s)
        else:
            out.append((" - " if neg else " + ") + s)
    return "".join(out)


def all_monomials(nvars: int, degree: int):
    """All exponent tuples of the given total degree (lex descending)."""
    if nvars == 0:
        if degree == 0:
            yield ()
        return
    for bars in combinations(range(degree + nvars - 1), nvars - 1):
        prev = -1
        e = []
        for b in bars:
            e.append(b - prev - 1)
            prev = b
        e.append(degree + nvars - 2 - prev)
        yield tuple(e)
