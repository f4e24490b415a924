"""Monomial orders.

Every order is realised as a sort key mapping an exponent tuple to a tuple
of integers; a larger key means a larger monomial.
"""

from __future__ import annotations

from typing import Sequence


class MonomialOrder:
    """Base class; subclasses define ``_key`` and ``signature``."""

    __slots__ = ("_cache",)

    def __init__(self):
        self._cache: dict = {}

    def key(self, e) -> tuple:
        k = self._cache.get(e)
        if k is None:
            k = self._cache[e] = self._key(e)
        return k

    def _key(self, e) -> tuple:
        raise NotImplementedError

    @property
    def signature(self) -> tuple:
        raise NotImplementedError

    def eliminates(self, var: int) -> bool:
        return False

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and self.signature == other.signature

    def __hash__(self):
        return hash(self.signature)

    def __repr__(self):
        return f"{type(self).__name__}{self.signature[1:]}"

    def __getstate__(self):
        return {k: getattr(self, k) for k in self._state_fields}

    def __setstate__(self, state):
        self._cache = {}
        for k, v in state.items():
            setattr(self, k, v)


class Lex(MonomialOrder):
    __slots__ = ("nvars",)
    _state_fields = ("nvars",)

    def __init__(self, nvars: int):
        super().__init__()
        self.nvars = nvars

    def _key(self, e):
        return e

    @property
    def signature(self):
        return ("lex", self.nvars)

    def eliminates(self, var):
        return var == 0


class WeightedGradedLex(MonomialOrder):
    """Compare weighted degree first, then lex with ``x1 > x2 > ...``."""

    __slots__ = ("weights",)
    _state_fields = ("weights",)

    def __init__(self, weights: Sequence[int]):
        super().__init__()
        if any(w <= 0 for w in weights):
            raise ValueError("weights must be positive")
        self.weights = tuple(int(w) for w in weights)

    @property
    def nvars(self):
        return len(self.weights)

    def degree(self, e) -> int:
        return sum(w * x for w, x in zip(self.weights, e))

    def _key(self, e):
        return (sum(w * x for w, x in zip(self.weights, e)),) + e

    @property
    def signature(self):
        return ("wglex", self.weights)


class BlockOrder(MonomialOrder):
    """Tag variables first (compared by total degree, then lex), then ``inner``.

    A genuine elimination order for the tag block.
    """

    __slots__ = ("inner", "ntag")
    _state_fields = ("inner", "ntag")

    def __init__(self, inner: MonomialOrder, ntag: int = 1):
        super().__init__()
        self.inner, self.ntag = inner, ntag

    @property
    def nvars(self):
        return self.ntag + self.inner.nvars

    def _key(self, e):
        tag = e[: self.ntag]
        return (sum(tag),) + tag + self.inner.key(e[self.ntag :])

    @property
    def signature(self):
        return ("block", self.ntag, self.inner.signature)

    def eliminates(self, var):
        return var < self.ntag


class GradedBlockOrder(MonomialOrder):
    """Weighted degree over all variables, then the tag block, then ``inner``.

    This eliminates the tag block only on ideals that are homogeneous for
    ``tag_weights + inner.weights``; callers must check that.
    """

    __slots__ = ("inner", "tag_weights")
    _state_fields = ("inner", "tag_weights")

    def __init__(self, inner: WeightedGradedLex, tag_weights: Sequence[int] = (0,)):
        super().__init__()
        self.inner, self.tag_weights = inner, tuple(tag_weights)

    @property
    def ntag(self):
        return len(self.tag_weights)

    @property
    def nvars(self):
        return self.ntag + self.inner.nvars

    @property
    def weights(self):
        return self.tag_weights + self.inner.weights

    def _key(self, e):
        n = len(self.tag_weights)
        deg = sum(w * x for w, x in zip(self.tag_weights, e)) + self.inner.degree(e[n:])
        return (deg,) + e[:n] + self.inner.key(e[n:])

    @property
    def signature(self):
        return ("gblock", self.tag_weights, self.inner.signature)

    def eliminates(self, var):
        return var < len(self.tag_weights)
