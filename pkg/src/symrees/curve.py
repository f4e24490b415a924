"""The monomial curve (t^(2q+1), t^(2q+1+m), t^(2q+1+2m)) and its filtrations.

``Curve`` bundles the defining binomials, the auxiliary element ``f2`` and
lazily filled caches of the monomial ideals ``I_n`` in k[x2, x3], the
polynomial ideals ``calI_n`` in k[x1, x2, x3] and the symbolic powers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .groebner import QQ, Field, PolyIdeal, toric_ideal
from .monomial import MonomialIdeal
from .orders import WeightedGradedLex
from .poly import Polynomial


class CurveError(ValueError):
    pass


@dataclass(frozen=True)
class CurveParams:
    q: int
    m: int

    def __post_init__(self):
        if self.q < 1 or self.m < 1:
            raise CurveError(f"need q >= 1 and m >= 1, got q={self.q}, m={self.m}")
        if math.gcd(2 * self.q + 1, self.m) != 1:
            raise CurveError(
                f"gcd(2q+1, m) = gcd({2 * self.q + 1}, {self.m}) != 1"
            )

    @property
    def weights(self) -> tuple[int, int, int]:
        n1 = 2 * self.q + 1
        return (n1, n1 + self.m, n1 + 2 * self.m)

    @property
    def multiplicity(self) -> int:
        return 2 * self.q + 1


DEFAULT_GRID = (
    CurveParams(1, 1),
    CurveParams(1, 2),
    CurveParams(2, 1),
    CurveParams(2, 3),
    CurveParams(3, 1),
)


def _x(i: int) -> Polynomial:
    return Polynomial.variable(i - 1, 3)


def _mono(a: int, b: int, c: int) -> Polynomial:
    return Polynomial.term((a, b, c))


def weighted_pairs(n: int):
    """All ``(a1, a2)`` with ``a1 + 2*a2 == n``, by increasing ``a2``."""
    return [(n - 2 * a2, a2) for a2 in range(n // 2 + 1)]


class Curve:
    """Ideals attached to ``CurveParams``; all derived data is cached."""

    def __init__(self, params: CurveParams, field: Field = QQ, verify: bool = True):
        self.params = params
        self.field = field
        q, m = params.q, params.m
        self.order = WeightedGradedLex(params.weights)
        self.x1, self.x2, self.x3 = _x(1), _x(2), _x(3)
        self.g1 = _mono(m + q, 1, 0) - _mono(0, 0, q + 1)
        self.g2 = _mono(m + q + 1, 0, 0) - _mono(0, 1, q)
        self.g3 = _mono(0, 2, 0) - _mono(1, 0, 1)
        self.f1 = self.g3
        self.f2 = (
            -_mono(2 * (m + q) + 1, 0, 0)
            - _mono(m + q - 1, 3, q - 1)
            + 3 * _mono(m + q, 1, q)
            - _mono(0, 0, 2 * q + 1)
        )
        self.prime = PolyIdeal([self.g1, self.g2, self.g3], self.order, field)
        self.calJ1 = self.prime
        self.calJ2 = PolyIdeal([self.f2], self.order, field)
        self.J1 = MonomialIdeal([(2, 0), (1, q), (0, q + 1)])
        self.J2 = MonomialIdeal([(0, 2 * q + 1)])
        self._I: dict[int, MonomialIdeal] = {0: MonomialIdeal.unit_ideal(2)}
        self._powers: dict[int, PolyIdeal] = {}
        self._calI: dict[int, PolyIdeal] = {}
        self._symbolic: dict[int, PolyIdeal] = {}
        self._sat_steps: dict[int, int] = {}
        if verify:
            if not self.identity_residual().is_zero:
                raise CurveError("x3*f2 + g1^2 - x1^(m+q-1)*g2*g3 is not zero")
            a, b, c = params.weights
            if toric_ideal(a, b, c, field).with_order(self.order) != self.prime:
                raise CurveError("the 2x2 minors do not generate the toric ideal")

    def identity_residual(self) -> Polynomial:
        q, m = self.params.q, self.params.m
        return self.x3 * self.f2 + self.g1 * self.g1 - self.x1 ** (m + q - 1) * self.g2 * self.g3

    def ideal(self, gens) -> PolyIdeal:
        return PolyIdeal(gens, self.order, self.field, 3)

    # monomial filtration in k[x2, x3]

    def I(self, n: int) -> MonomialIdeal:
        """``I_n = sum over a1 + 2*a2 = n of J1^a1 * J2^a2``; unit ideal for n <= 0."""
        if n <= 0:
            return self._I[0]
        if n not in self._I:
            total = None
            for a1, a2 in weighted_pairs(n):
                part = (self.J1 ** a1) * (self.J2 ** a2)
                total = part if total is None else total + part
            self._I[n] = total
        return self._I[n]

    def length_I(self, n: int) -> int:
        """``l(T'/I_n)``, taken as 0 for n <= 0."""
        return 0 if n <= 0 else self.I(n).length()

    # polynomial ideals in k[x1, x2, x3]

    def prime_power(self, n: int) -> PolyIdeal:
        if n not in self._powers:
            if n == 0:
                self._powers[0] = PolyIdeal.unit(3, self.order, self.field)
            elif n == 1:
                self._powers[1] = self.prime
            else:
                self._powers[n] = self.prime_power(n - 1) * self.prime
        return self._powers[n]

    def calI(self, n: int) -> PolyIdeal:
        """``sum over a1 + 2*a2 = n of p^a1 * (f2)^a2``."""
        if n not in self._calI:
            gens: dict = {}
            for a1, a2 in weighted_pairs(n):
                f = self.f2 ** a2
                for g in self.prime_power(a1).gens:
                    gens.setdefault(g * f, None)
            self._calI[n] = self.ideal(gens)
        return self._calI[n]

    def symbolic_power(self, n: int, cross_check: bool = False) -> PolyIdeal:
        """``p^(n)`` computed as the saturation ``(p^n : x1^inf)``."""
        if n <= 0:
            return PolyIdeal.unit(3, self.order, self.field)
        if n not in self._symbolic:
            sat, steps = self.prime_power(n).saturate(self.x1)
            self._symbolic[n] = sat
            self._sat_steps[n] = steps
        result = self._symbolic[n]
        if cross_check and self.prime_power(n).saturate(self.x3)[0] != result:
            raise CurveError(f"saturations by x1 and x3 disagree for n={n}")
        return result

    def saturation_steps(self, n: int) -> int:
        self.symbolic_power(n)
        return self._sat_steps.get(n, 0)

    def rees_sum(self, n: int) -> PolyIdeal:
        """``sum over a1 + 2*a2 = n of p^a1 * (p^(2))^a2``."""
        total = None
        for a1, a2 in weighted_pairs(n):
            part = self.prime_power(a1)
            for _ in range(a2):
                part = part * self.symbolic_power(2)
            total = part if total is None else total + part
        return total

    def shadow(self, ideal: PolyIdeal) -> MonomialIdeal:
        """Image of the generators under x1 -> 0, as a monomial ideal in k[x2, x3].

        Raises if some image is not a monomial.
        """
        gens = []
        for g in ideal.gens:
            h = g.substitute_zero(0)
            if h.is_zero:
                continue
            if len(h.terms) != 1:
                raise ValueError(f"image of {g} under x1 -> 0 is not a monomial")
            (e,) = h.terms
            gens.append(e[1:])
        return MonomialIdeal(gens, 2)

    def cached_ideals(self) -> list[PolyIdeal]:
        """Every polynomial ideal whose basis has been computed so far."""
        out = [self.prime]
        for cache in (self._powers, self._calI, self._symbolic):
            out.extend(v for _, v in sorted(cache.items()))
        return [i for i in out if i._basis is not None or i._kernel is not None]

    # parity split of I_{n-1} modulo (I_n : x3^q)

    def parity_form(self, n: int, form: str) -> MonomialIdeal:
        """One of the two candidate decompositions of ``I_{n-1}``.

        ``odd``:  sum_{a2=0}^{(n-2)/2} x2^(2(n-1-2a2)-1) x3^((2q+1)a2) (x2, x3^q) + (I_n : x3^q)
        ``even``: (x3^((2q+1)(n-1)/2)) + the same sum up to (n-3)/2 + (I_n : x3^q)

        Fractional bounds and exponents are floored.
        """
        q = self.params.q
        colon = self.I(n).colon((0, q))
        if form == "odd":
            top, extra = (n - 2) // 2, []
        elif form == "even":
            top, extra = (n - 3) // 2, [(0, (2 * q + 1) * ((n - 1) // 2))]
        else:
            raise ValueError(form)
        gens = list(extra)
        for a2 in range(top + 1):
            a = 2 * (n - 1 - 2 * a2) - 1
            b = (2 * q + 1) * a2
            gens += [(a + 1, b), (a, b + q)]
        return MonomialIdeal(gens, 2) + colon if gens else colon

    @staticmethod
    def printed_parity(n: int) -> str:
        return "even" if (n - 1) % 2 == 0 else "odd"
