"""Sparse multivariate polynomials with exact rational coefficients."""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Mapping, Sequence

from .monomial import format_monomial, variable_names


class Polynomial:
    """Immutable sparse polynomial: a map from exponent tuples to ``Fraction``.

    Zero coefficients are never stored.  Term order is not part of the value;
    leading terms are always taken with respect to an explicit order.
    """

    __slots__ = ("terms", "nvars")

    def __init__(self, terms: Mapping[tuple, object] | None = None, nvars: int = 3):
        clean = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != nvars:
                raise ValueError(f"exponent {e} does not have {nvars} entries")
            c = Fraction(c)
            if c:
                clean[e] = clean.get(e, 0) + c
                if not clean[e]:
                    del clean[e]
        self.terms = clean
        self.nvars = nvars

    @classmethod
    def _raw(cls, terms: dict, nvars: int) -> Polynomial:
        p = cls.__new__(cls)
        p.terms = terms
        p.nvars = nvars
        return p

    @classmethod
    def constant(cls, c, nvars: int = 3) -> Polynomial:
        return cls({(0,) * nvars: c}, nvars)

    @classmethod
    def term(cls, e, c=1) -> Polynomial:
        return cls({tuple(e): c}, len(e))

    @classmethod
    def variable(cls, i: int, nvars: int = 3) -> Polynomial:
        e = [0] * nvars
        e[i] = 1
        return cls.term(e)

    # arithmetic

    def _coerce(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            if other.nvars != self.nvars:
                raise ValueError(f"arity mismatch: {self.nvars} vs {other.nvars}")
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(other, self.nvars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e, 0) + c
            if s:
                terms[e] = s
            else:
                terms.pop(e, None)
        return Polynomial._raw(terms, self.nvars)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw({e: -c for e, c in self.terms.items()}, self.nvars)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = terms.get(e, 0) + c1 * c2
                if s:
                    terms[e] = s
                else:
                    terms.pop(e, None)
        return Polynomial._raw(terms, self.nvars)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = Polynomial.constant(1, self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def mul_term(self, e, c=1) -> Polynomial:
        c = Fraction(c)
        if not c:
            return Polynomial({}, self.nvars)
        return Polynomial._raw(
            {tuple(a + b for a, b in zip(m, e)): c * v for m, v in self.terms.items()},
            self.nvars,
        )

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other, self.nvars)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    # order-dependent views

    def sorted_terms(self, order) -> list[tuple[tuple, Fraction]]:
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def leading_term(self, order) -> tuple[tuple, Fraction]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms, key=order.key)
        return e, self.terms[e]

    def leading_monomial(self, order) -> tuple:
        return self.leading_term(order)[0]

    def monic(self, order) -> Polynomial:
        _, c = self.leading_term(order)
        return Polynomial._raw({e: v / c for e, v in self.terms.items()}, self.nvars)

    # structure

    def weighted_degrees(self, weights: Sequence[int]) -> set[int]:
        return {sum(w * x for w, x in zip(weights, e)) for e in self.terms}

    def is_homogeneous(self, weights: Sequence[int]) -> bool:
        return len(self.weighted_degrees(weights)) <= 1

    @property
    def is_binomial(self) -> bool:
        """At most two terms (monomials count as degenerate binomials)."""
        return len(self.terms) <= 2

    def substitute_zero(self, i: int) -> Polynomial:
        """Set variable ``i`` to zero."""
        return Polynomial._raw(
            {e: c for e, c in self.terms.items() if e[i] == 0}, self.nvars
        )

    def drop_variable(self, i: int) -> Polynomial:
        """Remove variable ``i``, which must not occur."""
        if any(e[i] for e in self.terms):
            raise ValueError(f"variable {i} occurs in polynomial")
        return Polynomial._raw(
            {e[:i] + e[i + 1 :]: c for e, c in self.terms.items()}, self.nvars - 1
        )

    def insert_variable(self, i: int) -> Polynomial:
        """Add a new variable at position ``i`` (not occurring)."""
        return Polynomial._raw(
            {e[:i] + (0,) + e[i:]: c for e, c in self.terms.items()}, self.nvars + 1
        )

    def to_str(self, order=None, names: Sequence[str] | None = None) -> str:
        names = names or variable_names(self.nvars)
        if not self.terms:
            return "0"
        items = (
            self.sorted_terms(order)
            if order is not None
            else sorted(self.terms.items(), reverse=True)
        )
        out = []
        for idx, (e, c) in enumerate(items):
            sign = "-" if c < 0 else "+"
            a = abs(c)
            mono = format_monomial(e, names)
            if mono == "1":
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            if idx == 0:
                out.append(("-" if sign == "-" else "") + body)
            else:
                out.append(f" {sign} {body}")
        return "".join(out)

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"Polynomial({self.to_str()!r}, nvars={self.nvars})"


_TOKEN = re.compile(r"\s*(?:(?P<op>[+-])|(?P<num>\d+(?:/\d+)?)|(?P<var>[A-Za-z_]\w*)(?:\^(?P<exp>\d+))?|(?P<star>\*))")


def parse_polynomial(text: str, names: Sequence[str] | None = None, nvars: int | None = None) -> Polynomial:
    """Parse ``x1^2*x2 - 3/2*x3^2`` style text."""
    if names is None:
        names = variable_names(nvars or 3)
    index = {n: i for i, n in enumerate(names)}
    n = len(names)
    terms: dict = {}
    pos, text = 0, text.strip()
    sign, coeff, exps, seen_factor = 1, Fraction(1), [0] * n, False

    def flush():
        e = tuple(exps)
        terms[e] = terms.get(e, 0) + sign * coeff

    expect_factor = True
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse {text!r} at position {pos}")
        pos = m.end()
        if m.group("op"):
            if seen_factor:
                flush()
                sign, coeff, exps, seen_factor = 1, Fraction(1), [0] * n, False
            elif not expect_factor:
                raise ValueError(f"misplaced sign in {text!r}")
            if m.group("op") == "-":
                sign = -sign
            expect_factor = True
        elif m.group("star"):
            if not seen_factor:
                raise ValueError(f"misplaced '*' in {text!r}")
            expect_factor = True
        else:
            if not expect_factor:
                raise ValueError(f"missing operator in {text!r}")
            if m.group("num"):
                coeff *= Fraction(m.group("num"))
            else:
                name = m.group("var")
                if name not in index:
                    raise ValueError(f"unknown variable {name!r}")
                exps[index[name]] += int(m.group("exp") or 1)
            seen_factor, expect_factor = True, False
    if not seen_factor:
        if text:
            raise ValueError(f"dangling operator in {text!r}")
        return Polynomial({}, n)
    if expect_factor:
        raise ValueError(f"dangling '*' in {text!r}")
    flush()
    return Polynomial(terms, n)
