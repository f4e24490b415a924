"""Buchberger's algorithm and ideal operations built on reduced Groebner bases.

The kernel works on plain ``{exponent: coefficient}`` dicts.  Over the
rationals coefficients are ``Fraction``; over a prime field they are ints in
``range(p)`` and are lifted to symmetric representatives on the way out.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from typing import Iterable, Sequence

from .monomial import INFINITE, MonomialIdeal
from .orders import BlockOrder, GradedBlockOrder, MonomialOrder, WeightedGradedLex
from .poly import Polynomial


class OrderMismatchError(ValueError):
    pass


class EliminationError(ValueError):
    pass


class Field:
    """Coefficient field: ``Field()`` is Q, ``Field(p)`` is GF(p)."""

    __slots__ = ("p",)

    def __init__(self, p: int | None = None):
        if p is not None and (p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1))):
            raise ValueError(f"{p} is not prime")
        self.p = p

    def __eq__(self, other):
        return isinstance(other, Field) and self.p == other.p

    def __hash__(self):
        return hash(self.p)

    def __repr__(self):
        return "QQ" if self.p is None else f"GF({self.p})"

    @property
    def label(self) -> str:
        return "rationals" if self.p is None else f"fp:{self.p}"

    def __getstate__(self):
        return self.p

    def __setstate__(self, p):
        self.p = p

    def convert(self, c):
        if self.p is None:
            return Fraction(c)
        c = Fraction(c)
        return c.numerator * pow(c.denominator, -1, self.p) % self.p

    def lift(self, c) -> Fraction:
        if self.p is None:
            return c
        return Fraction(c - self.p if c > self.p // 2 else c)

    def inv(self, c):
        if self.p is None:
            return 1 / c
        return pow(c, -1, self.p)

    def to_kernel(self, f: Polynomial) -> dict:
        out = {}
        for e, c in f.terms.items():
            c = self.convert(c)
            if c:
                out[e] = c
        return out

    def from_kernel(self, d: dict, nvars: int) -> Polynomial:
        return Polynomial._raw({e: self.lift(c) for e, c in d.items()}, nvars)


QQ = Field()


# kernel ---------------------------------------------------------------------


def _divides(a, b):
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _lcm(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


def _neg(k):
    return tuple(-x for x in k)


def _leading(d: dict, order: MonomialOrder):
    return max(d, key=order.key)


def _monic(d: dict, order, field: Field):
    lt = _leading(d, order)
    inv = field.inv(d[lt])
    if field.p is None:
        return {e: c * inv for e, c in d.items()}
    p = field.p
    return {e: c * inv % p for e, c in d.items()}


def _reduce(f: dict, reducers: list, order: MonomialOrder, field: Field, full: bool = True) -> dict:
    """Remainder of ``f`` on division by monic ``reducers`` = [(lt, poly)]."""
    p = dict(f)
    key = order.key
    heap = [(_neg(key(e)), e) for e in p]
    heapq.heapify(heap)
    rem: dict = {}
    mod = field.p
    while heap:
        _, m = heapq.heappop(heap)
        c = p.pop(m, None)
        if c is None:
            continue
        for lt, g in reducers:
            if _divides(lt, m):
                shift = tuple(x - y for x, y in zip(m, lt))
                for e, gc in g.items():
                    if e == lt:
                        continue
                    t = tuple(a + b for a, b in zip(e, shift))
                    old = p.get(t)
                    if mod is None:
                        new = (old or 0) - c * gc
                    else:
                        new = ((old or 0) - c * gc) % mod
                    if new:
                        p[t] = new
                        if old is None:
                            heapq.heappush(heap, (_neg(key(t)), t))
                    elif old is not None:
                        del p[t]
                break
        else:
            rem[m] = c
            if not full:
                rem.update(p)
                return rem
    return rem


def _spoly(f, ltf, g, ltg, field: Field):
    l = _lcm(ltf, ltg)
    sf = tuple(a - b for a, b in zip(l, ltf))
    sg = tuple(a - b for a, b in zip(l, ltg))
    out: dict = {}
    mod = field.p
    for e, c in f.items():
        t = tuple(a + b for a, b in zip(e, sf))
        out[t] = c
    for e, c in g.items():
        t = tuple(a + b for a, b in zip(e, sg))
        v = out.get(t, 0) - c
        if mod is not None:
            v %= mod
        if v:
            out[t] = v
        else:
            out.pop(t, None)
    return out


def buchberger(polys: Iterable[dict], order: MonomialOrder, field: Field = QQ) -> list[dict]:
    """Reduced Groebner basis of kernel polynomials, sorted by descending leading term.

    Normal selection strategy with the Gebauer-Moeller pair criteria.
    """
    basis: list[dict] = []
    lts: list[tuple] = []
    active: list[int] = []
    pairs: list[tuple[int, int]] = []
    key = order.key

    def add(h: dict):
        nonlocal active, pairs
        lth = _leading(h, order)
        hi = len(basis)
        basis.append(h)
        lts.append(lth)
        # Gebauer-Moeller update
        cands = [(g, _lcm(lts[g], lth)) for g in active]
        kept = []
        for i, (g, l) in enumerate(cands):
            coprime = all(not (a and b) for a, b in zip(lts[g], lth))
            if coprime:
                kept.append((g, l, True))
                continue
            dominated = False
            for j, (g2, l2) in enumerate(cands):
                if j == i:
                    continue
                if _divides(l2, l) and (l2 != l or j < i):
                    dominated = True
                    break
            if not dominated:
                kept.append((g, l, False))
        new_pairs = [(g, hi) for g, l, coprime in kept if not coprime]
        survivors = []
        for a, b in pairs:
            l = _lcm(lts[a], lts[b])
            if (
                _divides(lth, l)
                and _lcm(lts[a], lth) != l
                and _lcm(lts[b], lth) != l
            ):
                continue
            survivors.append((a, b))
        pairs = survivors + new_pairs
        active = [g for g in active if not _divides(lth, lts[g])] + [hi]

    # inter-reduce the input first so the initial basis is small
    inputs = [d for d in polys if d]
    inputs.sort(key=lambda d: key(_leading(d, order)))
    for d in inputs:
        r = _reduce(d, [(lts[g], basis[g]) for g in active], order, field)
        if r:
            add(_monic(r, order, field))

    while pairs:
        best = min(
            range(len(pairs)),
            key=lambda i: (key(_lcm(lts[pairs[i][0]], lts[pairs[i][1]])), pairs[i]),
        )
        a, b = pairs.pop(best)
        s = _spoly(basis[a], lts[a], basis[b], lts[b], field)
        if not s:
            continue
        r = _reduce(s, [(lts[g], basis[g]) for g in active], order, field)
        if r:
            add(_monic(r, order, field))

    minimal = [basis[g] for g in active]
    minimal_lts = [lts[g] for g in active]
    reduced = []
    for i, g in enumerate(minimal):
        others = [(minimal_lts[j], minimal[j]) for j in range(len(minimal)) if j != i]
        # the leading term survives, only the tail changes
        r = _reduce(g, others, order, field)
        reduced.append(_monic(r, order, field))
    reduced.sort(key=lambda d: key(_leading(d, order)), reverse=True)
    return reduced


# ideals ---------------------------------------------------------------------


def _as_poly(f, nvars: int) -> Polynomial:
    if isinstance(f, Polynomial):
        if f.nvars != nvars:
            raise ValueError(f"arity mismatch: {f.nvars} vs {nvars}")
        return f
    return Polynomial.constant(f, nvars)


class PolyIdeal:
    """Ideal given by generators, with a lazily computed reduced Groebner basis."""

    __slots__ = ("gens", "order", "field", "nvars", "_basis", "_kernel")

    def __init__(
        self,
        gens: Iterable[Polynomial],
        order: MonomialOrder,
        field: Field = QQ,
        nvars: int | None = None,
    ):
        gens = list(gens)
        if nvars is None:
            if not gens:
                raise ValueError("nvars is required for an empty generator list")
            nvars = gens[0].nvars
        if getattr(order, "nvars", nvars) != nvars:
            raise OrderMismatchError(f"order {order!r} is not on {nvars} variables")
        self.nvars = nvars
        self.gens = tuple(_as_poly(g, nvars) for g in gens if g)
        self.order = order
        self.field = field
        self._basis = None
        self._kernel = None

    def __getstate__(self):
        return (self.gens, self.order, self.field, self.nvars, self._basis)

    def __setstate__(self, state):
        self.gens, self.order, self.field, self.nvars, self._basis = state
        self._kernel = None

    @classmethod
    def unit(cls, nvars: int, order: MonomialOrder, field: Field = QQ) -> PolyIdeal:
        return cls([Polynomial.constant(1, nvars)], order, field)

    # basis

    def _kernel_basis(self) -> list[dict]:
        if self._kernel is None:
            if self._basis is not None:
                self._kernel = [self.field.to_kernel(g) for g in self._basis]
            else:
                self._kernel = buchberger(
                    (self.field.to_kernel(g) for g in self.gens), self.order, self.field
                )
        return self._kernel

    @property
    def basis(self) -> tuple[Polynomial, ...]:
        """Reduced Groebner basis under ``self.order``."""
        if self._basis is None:
            self._basis = tuple(
                self.field.from_kernel(d, self.nvars) for d in self._kernel_basis()
            )
        return self._basis

    def _reducers(self):
        return [(_leading(d, self.order), d) for d in self._kernel_basis()]

    def with_order(self, order: MonomialOrder) -> PolyIdeal:
        if order == self.order:
            return self
        return PolyIdeal(self.gens, order, self.field, self.nvars)

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return any(not any(e) for g in self.basis for e in g.terms)

    # membership and comparison

    def normal_form(self, f: Polynomial, order: MonomialOrder | None = None) -> Polynomial:
        if order is not None and order != self.order:
            raise OrderMismatchError(f"{order!r} differs from cached order {self.order!r}")
        f = _as_poly(f, self.nvars)
        r = _reduce(self.field.to_kernel(f), self._reducers(), self.order, self.field)
        return self.field.from_kernel(r, self.nvars)

    def __contains__(self, f) -> bool:
        return self.normal_form(f).is_zero

    def _compatible(self, other: PolyIdeal) -> None:
        if self.nvars != other.nvars:
            raise ValueError(f"arity mismatch: {self.nvars} vs {other.nvars}")
        if self.field != other.field:
            raise ValueError(f"field mismatch: {self.field} vs {other.field}")

    def __eq__(self, other):
        if not isinstance(other, PolyIdeal):
            return NotImplemented
        self._compatible(other)
        return self.basis == other.with_order(self.order).basis

    def __hash__(self):
        return hash((self.nvars, self.basis))

    def __le__(self, other: PolyIdeal) -> bool:
        self._compatible(other)
        return all(g in other for g in self.gens)

    def __ge__(self, other: PolyIdeal) -> bool:
        return other <= self

    # arithmetic

    def _gens_of(self, other) -> tuple[Polynomial, ...]:
        if isinstance(other, PolyIdeal):
            self._compatible(other)
            return other.gens
        if isinstance(other, Polynomial) or isinstance(other, (int, Fraction)):
            return (_as_poly(other, self.nvars),)
        return tuple(_as_poly(g, self.nvars) for g in other)

    def __add__(self, other) -> PolyIdeal:
        return PolyIdeal(self.gens + self._gens_of(other), self.order, self.field, self.nvars)

    def __mul__(self, other) -> PolyIdeal:
        gens: dict = {}
        for a in self.gens:
            for b in self._gens_of(other):
                gens.setdefault(a * b, None)
        return PolyIdeal(gens, self.order, self.field, self.nvars)

    def __pow__(self, k: int) -> PolyIdeal:
        if k < 0:
            raise ValueError("negative power")
        result = PolyIdeal.unit(self.nvars, self.order, self.field)
        for _ in range(k):
            result = result * self
        return result

    # derived ideals

    def leading_ideal(self) -> MonomialIdeal:
        return MonomialIdeal(
            (_leading(d, self.order) for d in self._kernel_basis()), self.nvars
        )

    def length(self):
        """``dim_k`` of the quotient via standard monomials, or ``INFINITE``."""
        if self.is_zero:
            return INFINITE
        return self.leading_ideal().length()

    def is_homogeneous(self, weights: Sequence[int]) -> bool:
        return all(g.is_homogeneous(weights) for g in self.gens)

    def eliminate(self, var: int = 0) -> PolyIdeal:
        """Intersection with the subring without variable ``var`` (a tag variable)."""
        if not self.order.eliminates(var) or var != 0:
            raise EliminationError(f"{self.order!r} is not an elimination order for variable {var}")
        if isinstance(self.order, GradedBlockOrder) and not self.is_homogeneous(self.order.weights):
            raise EliminationError("graded elimination needs a homogeneous ideal")
        ntag = self.order.ntag
        kept = []
        for g in self.basis:
            if all(not any(e[:ntag]) for e in g.terms):
                p = g
                for _ in range(ntag):
                    p = p.drop_variable(0)
                kept.append(p)
        return PolyIdeal(kept, self.order.inner, self.field, self.nvars - ntag)

    def _tagged_order(self, extra: Sequence[Polynomial]) -> MonomialOrder:
        inner = self.order
        if isinstance(inner, WeightedGradedLex):
            w = inner.weights
            if self.is_homogeneous(w) and all(f.is_homogeneous(w) for f in extra):
                return GradedBlockOrder(inner, (0,))
        return BlockOrder(inner, 1)

    def intersect(self, other: PolyIdeal) -> PolyIdeal:
        """``I ∩ J`` via ``t*I + (1-t)*J`` and elimination of ``t``."""
        self._compatible(other)
        if self.is_zero or other.is_zero:
            return PolyIdeal([], self.order, self.field, self.nvars)
        t = Polynomial.variable(0, self.nvars + 1)
        gens = [t * g.insert_variable(0) for g in self.gens]
        gens += [(1 - t) * f.insert_variable(0) for f in other.gens]
        order = self._tagged_order(other.gens)
        return PolyIdeal(gens, order, self.field, self.nvars + 1).eliminate(0)

    def colon(self, f) -> PolyIdeal:
        """``(I : f) = {g : g*f in I}``."""
        f = _as_poly(f, self.nvars)
        if f.is_zero:
            raise ValueError("colon by zero")
        if len(f.terms) == 1 and all(c == 1 for c in f.terms.values()) and not any(next(iter(f.terms))):
            return self
        meet = self.intersect(PolyIdeal([f], self.order, self.field))
        quotients = []
        for g in meet.gens:
            q, r = divide(g, [f], self.order)
            if not r.is_zero:
                raise ArithmeticError(f"non-exact division of {g} by {f}")
            quotients.append(q[0])
        return PolyIdeal(quotients, self.order, self.field, self.nvars)

    def saturate(self, f, max_steps: int = 64) -> tuple[PolyIdeal, int]:
        """``(I : f^inf)`` and the number of colon steps until it stabilised."""
        current = self
        for step in range(max_steps + 1):
            nxt = current.colon(f)
            if nxt == current:
                return current, step
            current = nxt
        raise RuntimeError("saturation did not stabilise")

    def minimal_generators(self, weights: Sequence[int]) -> list[Polynomial]:
        """Minimal generators of an ideal homogeneous for positive ``weights``."""
        cands = sorted(
            self.basis, key=lambda g: (min(g.weighted_degrees(weights)), self.order.key(g.leading_monomial(self.order)))
        )
        chosen: list[Polynomial] = []
        for g in cands:
            if chosen and g in PolyIdeal(chosen, self.order, self.field, self.nvars):
                continue
            chosen.append(g)
        return chosen

    def __repr__(self):
        return f"PolyIdeal({', '.join(map(str, self.gens))})"

    def to_strs(self) -> list[str]:
        return [g.to_str(self.order) for g in self.basis]


def divide(f: Polynomial, divisors: Sequence[Polynomial], order: MonomialOrder):
    """Multivariate division: ``f = sum(q_i * d_i) + r``; returns ``(quotients, r)``."""
    p = dict(f.terms)
    quot = [dict() for _ in divisors]
    rem: dict = {}
    lts = [d.leading_term(order) for d in divisors]
    while p:
        m = max(p, key=order.key)
        c = p[m]
        for i, (lt, lc) in enumerate(lts):
            if _divides(lt, m):
                shift = tuple(x - y for x, y in zip(m, lt))
                k = c / lc
                quot[i][shift] = quot[i].get(shift, 0) + k
                for e, v in divisors[i].terms.items():
                    t = tuple(a + b for a, b in zip(e, shift))
                    nv = p.get(t, 0) - k * v
                    if nv:
                        p[t] = nv
                    else:
                        p.pop(t, None)
                break
        else:
            rem[m] = p.pop(m)
    return [Polynomial(q, f.nvars) for q in quot], Polynomial(rem, f.nvars)


def reduced_groebner(gens: Sequence[Polynomial], order: MonomialOrder, field: Field = QQ) -> PolyIdeal:
    ideal = PolyIdeal(gens, order, field)
    ideal.basis
    return ideal


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    ltf, cf = f.leading_term(order)
    ltg, cg = g.leading_term(order)
    l = _lcm(ltf, ltg)
    return f.mul_term(tuple(a - b for a, b in zip(l, ltf)), 1 / cf) - g.mul_term(
        tuple(a - b for a, b in zip(l, ltg)), 1 / cg
    )


def toric_ideal(a: int, b: int, c: int, field: Field = QQ) -> PolyIdeal:
    """Kernel of ``x1 -> t^a, x2 -> t^b, x3 -> t^c``."""
    exps = (a, b, c)
    if any(e <= 0 for e in exps):
        raise ValueError("exponents must be positive")
    if len(set(exps)) != 3:
        raise ValueError("exponents must be pairwise distinct")
    inner = WeightedGradedLex(exps)
    order = GradedBlockOrder(inner, (1,))
    gens = []
    for i, e in enumerate(exps):
        x = Polynomial.variable(i + 1, 4)
        t = Polynomial.term((e, 0, 0, 0))
        gens.append(x - t)
    return PolyIdeal(gens, order, field).eliminate(0)
