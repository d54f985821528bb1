"""Finite partial bijections of the naturals.

A ``PBij`` is an injective partial map on a finite subset of the naturals,
stored as a canonically sorted tuple of ``(source, target)`` pairs.  Values
are immutable and hashable; composition applies the left factor first, so
``(a * b)(x) == b(a(x))``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Literal

from .errors import DomainError, PreconditionError


@dataclass(frozen=True)
class PBij:
    pairs: tuple[tuple[int, int], ...]
    _map: dict = field(init=False, repr=False, compare=False)
    _inv: dict = field(init=False, repr=False, compare=False)

    def __init__(self, pairs: Iterable[Iterable[int]] = ()):
        canon = sorted((int(x), int(y)) for x, y in pairs)
        fwd = {}
        bwd = {}
        for x, y in canon:
            if x < 0 or y < 0:
                raise DomainError(f"negative point in pair ({x}, {y})")
            if x in fwd:
                raise DomainError(f"source {x} mapped twice")
            if y in bwd:
                raise DomainError(f"target {y} hit twice")
            fwd[x] = y
            bwd[y] = x
        object.__setattr__(self, "pairs", tuple(canon))
        object.__setattr__(self, "_map", fwd)
        object.__setattr__(self, "_inv", bwd)

    @classmethod
    def _from_sorted(cls, canon: tuple[tuple[int, int], ...]) -> "PBij":
        """Fast path for pairs already known to be sorted and bijective."""
        self = object.__new__(cls)
        object.__setattr__(self, "pairs", canon)
        object.__setattr__(self, "_map", dict(canon))
        object.__setattr__(self, "_inv", {y: x for x, y in canon})
        return self

    @classmethod
    def identity(cls, n: int) -> "PBij":
        return cls._from_sorted(tuple((i, i) for i in range(n)))

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.pairs)

    def __contains__(self, pair) -> bool:
        x, y = pair
        return self._map.get(x) == y

    def __call__(self, x: int) -> int:
        return self._map[x]

    def get(self, x: int, default=None):
        return self._map.get(x, default)

    def has_target(self, y: int) -> bool:
        return y in self._inv

    @property
    def domain(self) -> frozenset[int]:
        return frozenset(self._map)

    @property
    def image(self) -> frozenset[int]:
        return frozenset(self._inv)

    def __mul__(self, other: "PBij") -> "PBij":
        omap = other._map
        return PBij._from_sorted(
            tuple(
                sorted((x, omap[y]) for x, y in self.pairs if y in omap)
            )
        )

    def inverse(self) -> "PBij":
        return PBij._from_sorted(tuple(sorted((y, x) for x, y in self.pairs)))

    def restrict(self, r: int) -> "PBij":
        """Keep exactly the pairs whose source is below ``r``."""
        return PBij._from_sorted(tuple(p for p in self.pairs if p[0] < r))

    def is_idempotent(self) -> bool:
        return all(x == y for x, y in self.pairs)

    def extends(self, other: "PBij") -> bool:
        """True when every pair of ``other`` is a pair of self."""
        return all(self._map.get(x) == y for x, y in other.pairs)

    def __repr__(self) -> str:
        body = ", ".join(f"{x}↦{y}" for x, y in self.pairs)
        return f"PBij({{{body}}})"


EMPTY = PBij()


def reindex(avoid: Iterable[int], x: int, direction: Literal["forward", "inverse"] = "forward") -> int:
    """Order isomorphism between the naturals and the naturals avoiding a finite set.

    ``forward`` sends ``x`` to the x-th natural (0-based) outside ``avoid``;
    ``inverse`` sends a natural outside ``avoid`` back to its rank.
    """
    avoid = frozenset(avoid)
    if x < 0:
        raise DomainError(f"negative point {x}")
    if direction == "forward":
        # counting walk: advance past members of avoid without a lookup table
        value = -1
        remaining = x + 1
        while remaining:
            value += 1
            if value not in avoid:
                remaining -= 1
        return value
    if direction == "inverse":
        if x in avoid:
            raise DomainError(f"{x} lies in the avoided set")
        return x - sum(1 for a in avoid if a < x)
    raise DomainError(f"unknown direction {direction!r}")


def collapse(g: PBij, h: PBij) -> PBij:
    """Collapse an extension ``h`` of ``g`` onto the renumbered complement.

    Removes the pairs of ``g`` from ``h`` and renumbers sources by their rank
    outside ``dom(g)`` and targets by their rank outside ``im(g)``.  The
    result has exactly ``len(h) - len(g)`` pairs.
    """
    if not h.extends(g):
        raise PreconditionError("h does not extend g")
    dom_g = g.domain
    im_g = g.image
    pairs = [
        (reindex(dom_g, x, "inverse"), reindex(im_g, y, "inverse"))
        for x, y in h.pairs
        if x not in dom_g
    ]
    return PBij(pairs)
