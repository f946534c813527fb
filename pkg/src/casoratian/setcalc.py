"""Finite sets of nonnegative integers and the combinatorics built on them.

A :class:`FiniteSet` is a strictly increasing tuple.  The central map is the
involution ``I(F) = {0, ..., max F} minus {max F - f : f in F}``.
"""

from __future__ import annotations

import itertools
import math
import re
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .errors import EmptyComponent
from .exact_core import Polynomial


class FiniteSet(tuple):
    """Strictly increasing tuple of nonnegative integers.

    Unsorted or duplicated input is rejected; use :func:`parse_set` for
    lenient parsing of user text.
    """

    __slots__ = ()

    def __new__(cls, elements: Iterable[int] = ()):
        items = tuple(elements)
        for e in items:
            if not isinstance(e, int) or isinstance(e, bool):
                raise TypeError(f"set elements must be integers, got {e!r}")
            if e < 0:
                raise ValueError(f"set elements must be nonnegative, got {e}")
        for a, b in zip(items, items[1:]):
            if a >= b:
                raise ValueError(f"elements must be strictly increasing: {items}")
        return super().__new__(cls, items)

    @property
    def max(self) -> int:
        if not self:
            raise EmptyComponent("max of the empty set is undefined")
        return self[-1]

    def is_positive(self) -> bool:
        """True when the set lies in the positive integers (or is empty)."""
        return not self or self[0] >= 1

    def is_segment_from_one(self) -> bool:
        return tuple(self) == tuple(range(1, len(self) + 1))

    def __repr__(self) -> str:
        return f"FiniteSet({set_text(self)})"

    def __str__(self) -> str:
        return set_text(self)


SetTuple = tuple  # tuple[FiniteSet, ...]

EMPTY = FiniteSet()


def set_text(F: Sequence[int]) -> str:
    return "{" + ",".join(str(f) for f in F) + "}"


_SET_RE = re.compile(r"\{\s*(?:\d+\s*(?:,\s*\d+\s*)*)?\}")


def parse_set(text: str) -> tuple[FiniteSet, list[str]]:
    """Parse ``{}`` or ``{n1,n2,...}``.

    Returns the set and a list of notes describing any sorting or
    de-duplication that was applied.
    """
    s = text.strip()
    if not _SET_RE.fullmatch(s):
        raise ValueError(f"malformed set literal: {text!r}")
    raw = [int(t) for t in re.findall(r"\d+", s)]
    notes = []
    cleaned = sorted(set(raw))
    if len(cleaned) != len(raw):
        notes.append(f"removed duplicates from {text.strip()}")
    if sorted(raw) != raw:
        notes.append(f"sorted elements of {text.strip()}")
    return FiniteSet(cleaned), notes


def weight(F: Sequence[int]) -> int:
    """``sum(F) - C(|F|, 2)``."""
    k = len(F)
    return sum(F) - k * (k - 1) // 2


def involute(F: FiniteSet) -> FiniteSet:
    # the empty set maps to itself by convention
    if not F:
        return EMPTY
    top = F[-1]
    removed = {top - f for f in F}
    return FiniteSet(g for g in range(top + 1) if g not in removed)


def s_of(F: FiniteSet) -> int:
    """The index ``s_F`` of the first gap, for sets of positive integers."""
    if not F.is_positive():
        raise ValueError("s_F is defined for sets of positive integers only")
    if not F:
        return 1
    if F.is_segment_from_one():
        return len(F) + 1
    return next(s for s in range(1, len(F) + 1) if s < F[s - 1])


def downarrow(F: FiniteSet) -> FiniteSet:
    if F and F[0] == 0:
        return downarrow(FiniteSet(F[1:]))
    if F.is_segment_from_one():
        return EMPTY
    s = s_of(F)
    return FiniteSet(f - s for f in F[s - 1:])


def vandermonde(F: Sequence[int]) -> Fraction:
    """``prod_{i<j} (f_j - f_i)``."""
    acc = 1
    for i, j in itertools.combinations(range(len(F)), 2):
        acc *= F[j] - F[i]
    return Fraction(acc)


def factorial_product(F: Iterable[int]) -> int:
    return math.prod(math.factorial(f) for f in F)


def weight_tuple(T: Sequence[FiniteSet]) -> int:
    return sum(weight(F) for F in T)


def involute_tuple(T: Sequence[FiniteSet]) -> tuple[FiniteSet, ...]:
    return tuple(involute(F) for F in T)


def annihilator(F: Iterable) -> Polynomial:
    """Monic ``prod_{f in F} (x - f)``."""
    return Polynomial.from_roots(F)


def subsets(universe: Iterable[int], max_size: int, min_size: int = 0) -> Iterator[FiniteSet]:
    """All subsets of ``universe`` with ``min_size <= |F| <= max_size``,
    in size-then-lexicographic order."""
    pool = sorted(set(universe))
    for k in range(min_size, max_size + 1):
        for combo in itertools.combinations(pool, k):
            yield FiniteSet(combo)
