"""Monomials and monomial ideals in two or three variables.

Monomials are plain tuples of non-negative exponents.  A ``MonomialIdeal``
keeps its generators minimal and sorted in descending lex order, so two
ideals are equal exactly when their generator tuples are equal.
"""

from __future__ import annotations

import math
from itertools import product as _cartesian
from typing import Iterable, Sequence

Monomial = tuple

#: Length of a quotient that is not Artinian.
INFINITE = math.inf


class ArityError(ValueError):
    pass


class ZeroIdealError(ValueError):
    pass


def variable_names(arity: int) -> tuple[str, ...]:
    """Default variable names: ``x2, x3`` in two variables, ``x1, x2, x3`` in three."""
    if arity == 2:
        return ("x2", "x3")
    if arity == 3:
        return ("x1", "x2", "x3")
    if arity == 4:
        return ("t", "x1", "x2", "x3")
    return tuple(f"y{i}" for i in range(1, arity + 1))


def monomial(*exponents: int) -> Monomial:
    if any(e < 0 for e in exponents):
        raise ValueError(f"negative exponent in {exponents}")
    return tuple(int(e) for e in exponents)


def unit(arity: int) -> Monomial:
    return (0,) * arity


def _check_arity(a: Sequence[int], b: Sequence[int]) -> None:
    if len(a) != len(b):
        raise ArityError(f"arity mismatch: {len(a)} vs {len(b)}")


def divides(a: Monomial, b: Monomial) -> bool:
    """True iff ``a`` divides ``b``."""
    _check_arity(a, b)
    return all(x <= y for x, y in zip(a, b))


def mul(a: Monomial, b: Monomial) -> Monomial:
    _check_arity(a, b)
    return tuple(x + y for x, y in zip(a, b))


def lcm(a: Monomial, b: Monomial) -> Monomial:
    _check_arity(a, b)
    return tuple(max(x, y) for x, y in zip(a, b))


def gcd(a: Monomial, b: Monomial) -> Monomial:
    _check_arity(a, b)
    return tuple(min(x, y) for x, y in zip(a, b))


def quo(a: Monomial, b: Monomial) -> Monomial:
    """``a / gcd(a, b)``."""
    _check_arity(a, b)
    return tuple(x - min(x, y) for x, y in zip(a, b))


def format_monomial(e: Monomial, names: Sequence[str] | None = None) -> str:
    names = names or variable_names(len(e))
    parts = []
    for name, k in zip(names, e):
        if k == 1:
            parts.append(name)
        elif k > 1:
            parts.append(f"{name}^{k}")
    return "*".join(parts) if parts else "1"


def _minimal(gens: Iterable[Monomial]) -> list[Monomial]:
    # a divisor has total degree <= its multiple, so a degree sweep suffices
    kept: list[Monomial] = []
    for g in sorted(set(gens), key=lambda e: (sum(e), e)):
        if not any(all(x <= y for x, y in zip(h, g)) for h in kept):
            kept.append(g)
    return sorted(kept, reverse=True)


class MonomialIdeal:
    """An ideal generated by monomials, stored by its minimal generators."""

    __slots__ = ("gens", "arity")

    def __init__(self, gens: Iterable[Sequence[int]], arity: int | None = None):
        gens = [tuple(g) for g in gens]
        if arity is None:
            if not gens:
                raise ZeroIdealError("arity must be given for the zero ideal")
            arity = len(gens[0])
        for g in gens:
            if len(g) != arity:
                raise ArityError(f"generator {g} does not have arity {arity}")
            if any(x < 0 for x in g):
                raise ValueError(f"negative exponent in {g}")
        self.arity = arity
        self.gens: tuple[Monomial, ...] = tuple(_minimal(gens))

    @classmethod
    def unit_ideal(cls, arity: int) -> MonomialIdeal:
        return cls([unit(arity)], arity)

    @classmethod
    def zero_ideal(cls, arity: int) -> MonomialIdeal:
        return cls([], arity)

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return self.gens == (unit(self.arity),)

    def _same_arity(self, other: MonomialIdeal) -> None:
        if self.arity != other.arity:
            raise ArityError(f"arity mismatch: {self.arity} vs {other.arity}")

    def __eq__(self, other):
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.arity == other.arity and self.gens == other.gens

    def __hash__(self):
        return hash((self.arity, self.gens))

    def __repr__(self):
        return f"MonomialIdeal({self})"

    def __str__(self):
        if self.is_zero:
            return "(0)"
        return "(" + ", ".join(format_monomial(g) for g in self.gens) + ")"

    def __len__(self):
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def __contains__(self, w) -> bool:
        w = tuple(w)
        if len(w) != self.arity:
            raise ArityError(f"arity mismatch: {len(w)} vs {self.arity}")
        return any(all(x <= y for x, y in zip(g, w)) for g in self.gens)

    def __le__(self, other: MonomialIdeal) -> bool:
        self._same_arity(other)
        return all(g in other for g in self.gens)

    def __ge__(self, other: MonomialIdeal) -> bool:
        return other <= self

    def __add__(self, other: MonomialIdeal) -> MonomialIdeal:
        self._same_arity(other)
        return MonomialIdeal(self.gens + other.gens, self.arity)

    def __mul__(self, other) -> MonomialIdeal:
        if not isinstance(other, MonomialIdeal):
            # a single monomial
            other = MonomialIdeal([other], self.arity)
        self._same_arity(other)
        return MonomialIdeal(
            (tuple(x + y for x, y in zip(a, b)) for a in self.gens for b in other.gens),
            self.arity,
        )

    __rmul__ = __mul__

    def __pow__(self, k: int) -> MonomialIdeal:
        if k < 0:
            raise ValueError("negative power")
        result = MonomialIdeal.unit_ideal(self.arity)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def intersect(self, other: MonomialIdeal) -> MonomialIdeal:
        self._same_arity(other)
        return MonomialIdeal(
            (tuple(max(x, y) for x, y in zip(a, b)) for a in self.gens for b in other.gens),
            self.arity,
        )

    def colon(self, v) -> MonomialIdeal:
        """``(I : v)`` for a monomial ``v`` or a nonzero monomial ideal ``v``."""
        if isinstance(v, MonomialIdeal):
            self._same_arity(v)
            if v.is_zero:
                raise ZeroIdealError("colon by the zero ideal; use the unit ideal explicitly")
            result = None
            for g in v.gens:
                c = self.colon(g)
                result = c if result is None else result.intersect(c)
            return result
        v = tuple(v)
        if len(v) != self.arity:
            raise ArityError(f"arity mismatch: {len(v)} vs {self.arity}")
        return MonomialIdeal(
            (tuple(x - min(x, y) for x, y in zip(u, v)) for u in self.gens), self.arity
        )

    def pure_powers(self) -> list[int | None]:
        """Smallest ``k`` with ``x_i^k`` in the ideal, per variable, or None."""
        powers: list[int | None] = [None] * self.arity
        for g in self.gens:
            support = [i for i, x in enumerate(g) if x]
            if len(support) == 1:
                powers[support[0]] = g[support[0]]
            elif not support:
                powers = [0] * self.arity
                break
        return powers

    @property
    def is_artinian(self) -> bool:
        return all(p is not None for p in self.pure_powers())

    def length(self):
        """Number of monomials outside the ideal, or ``INFINITE``."""
        powers = self.pure_powers()
        if any(p is None for p in powers):
            return INFINITE
        if self.arity == 0:
            return 0 if self.gens else INFINITE
        # count the first variable's admissible exponents over the box of the others
        total = 0
        for rest in _cartesian(*(range(p) for p in powers[1:])):
            cap = powers[0]
            for g in self.gens:
                if g[0] < cap and all(x <= y for x, y in zip(g[1:], rest)):
                    cap = g[0]
            total += cap
        return total

    def standard_monomials(self) -> list[Monomial]:
        powers = self.pure_powers()
        if any(p is None for p in powers):
            raise ValueError("quotient is not Artinian")
        return [e for e in _cartesian(*(range(p) for p in powers)) if e not in self]


def length_of_quotient(ideal: MonomialIdeal):
    return ideal.length()


def quotient_dim(small: MonomialIdeal, big: MonomialIdeal) -> int:
    """``dim_k(small / big)`` for Artinian ``big`` contained in ``small``."""
    for g in big.gens:
        if g not in small:
            raise ValueError(
                f"containment fails: {format_monomial(g)} is not in {small}"
            )
    lb, ls = big.length(), small.length()
    if lb == INFINITE or ls == INFINITE:
        raise ValueError("both quotients must be Artinian")
    return lb - ls
