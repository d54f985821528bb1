"""Symbolic open-set descriptors with exact membership for partial bijections.

A descriptor denotes a basic or derived open set; ``member`` evaluates the
exact predicate on a finite partial bijection.  Subset and equality questions
between descriptors are settled by exhaustive checks over bounded universes
(see ``waning.harness``), never symbolically.

The refinement operations return witnesses extracted from constructive
arguments: a radius whose principal neighbourhood sits inside a given basic
set, a descriptor that rewrites a neighbourhood through the waning closure,
a radius making multiplication land inside a target neighbourhood, and
explicit separating elements for the order and compactness results.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union

from .errors import (
    BadBase,
    InvalidDescriptor,
    InvalidR,
    NoWitness,
    NotMember,
    PreconditionError,
)
from .extnat import is_omega
from .functions import GenFn, WaningFn, closure
from .pbij import PBij


@dataclass(frozen=True)
class PointHit:
    """Elements whose graph contains the pair (x, y)."""

    x: int
    y: int


@dataclass(frozen=True)
class DomMiss:
    """Elements whose domain avoids the point x."""

    x: int


@dataclass(frozen=True)
class ImMiss:
    """Elements whose image avoids the point x."""

    x: int


@dataclass(frozen=True)
class UBasic:
    """Elements with at least n image points outside ``avoid`` and at most
    f(n) image points inside it."""

    f: Union[GenFn, WaningFn]
    n: int
    avoid: frozenset[int]

    def __init__(self, f, n: int, avoid: Iterable[int]):
        object.__setattr__(self, "f", f)
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "avoid", frozenset(int(x) for x in avoid))


@dataclass(frozen=True)
class WNbhd:
    """Principal neighbourhood of g: agree with g below r and hit at most
    f(|g|) image points in range(r) outside im(g)."""

    f: WaningFn
    g: PBij
    r: int


@dataclass(frozen=True)
class Wany:
    """Elements with domain clear of range(n) whose image misses some member
    of the family."""

    n: int
    families: tuple[frozenset[int], ...]

    def __init__(self, n: int, families: Iterable[Iterable[int]]):
        object.__setattr__(self, "n", int(n))
        # canonical order so structural equality matches set-of-sets equality
        sets = {frozenset(int(x) for x in ys) for ys in families}
        object.__setattr__(
            self, "families", tuple(sorted(sets, key=lambda ys: sorted(ys)))
        )


@dataclass(frozen=True)
class Dual:
    """Image of the inner set under inversion."""

    inner: "SetDescriptor"


@dataclass(frozen=True)
class Intersection:
    parts: tuple["SetDescriptor", ...]

    def __init__(self, parts: Iterable["SetDescriptor"]):
        object.__setattr__(self, "parts", tuple(parts))


@dataclass(frozen=True)
class FixBelow:
    """Elements agreeing with g on all sources below r."""

    g: PBij
    r: int


SetDescriptor = Union[
    PointHit, DomMiss, ImMiss, UBasic, WNbhd, Wany, Dual, Intersection, FixBelow
]


def _wnbhd_valid(f: WaningFn, g: PBij, r: int) -> bool:
    size_value = f(len(g))
    return f(r) <= size_value and f(len(g.restrict(r))) == size_value


def member(d: SetDescriptor, h: PBij) -> bool:
    """Exact membership of a finite partial bijection in the described set."""
    if isinstance(d, PointHit):
        return h.get(d.x) == d.y
    if isinstance(d, DomMiss):
        return h.get(d.x) is None
    if isinstance(d, ImMiss):
        return not h.has_target(d.x)
    if isinstance(d, UBasic):
        inside = sum(1 for _, y in h.pairs if y in d.avoid)
        outside = len(h) - inside
        return outside >= d.n and inside <= d.f(d.n)
    if isinstance(d, WNbhd):
        if not _wnbhd_valid(d.f, d.g, d.r):
            raise InvalidDescriptor(
                f"radius {d.r} is not valid for this neighbourhood"
            )
        if h.restrict(d.r) != d.g.restrict(d.r):
            return False
        mistakes = sum(
            1 for _, y in h.pairs if y < d.r and not d.g.has_target(y)
        )
        return mistakes <= d.f(len(d.g))
    if isinstance(d, Wany):
        if not d.families:
            raise InvalidDescriptor("empty family of avoided sets")
        if any(x < d.n for x, _ in h.pairs):
            return False
        return any(
            all(y not in ys for _, y in h.pairs) for ys in d.families
        )
    if isinstance(d, Dual):
        return member(d.inner, h.inverse())
    if isinstance(d, Intersection):
        return all(member(part, h) for part in d.parts)
    if isinstance(d, FixBelow):
        return h.restrict(d.r) == d.g.restrict(d.r)
    raise TypeError(f"not a descriptor: {d!r}")


def valid_r_min(f: WaningFn, g: PBij) -> int:
    """Smallest radius r with f(r) <= f(|g|) = f(|g restricted below r|).

    Every larger radius is also valid and shrinks the neighbourhood.
    """
    size_value = f(len(g))
    r = 0
    while not (f(r) <= size_value and f(len(g.restrict(r))) == size_value):
        r += 1
    return r


def basis_refinement(f: WaningFn, n: int, avoid: Iterable[int], g: PBij) -> int:
    """Smallest valid radius r whose neighbourhood of g sits inside the basic set.

    Requires g itself to be a member.  r clears max(avoid), shows at least n
    image points of g outside ``avoid`` below r, and is valid for (f, g).
    """
    avoid = frozenset(avoid)
    if not member(UBasic(f, n, avoid), g):
        raise NotMember("base point is outside the basic set")
    r = valid_r_min(f, g)
    if avoid:
        r = max(r, max(avoid) + 1)
    while sum(1 for x, y in g.pairs if x < r and y not in avoid) < n:
        r += 1
    return r


def much_wan_witness(f: GenFn, g: PBij, r: int) -> SetDescriptor:
    """Descriptor over the original function equal to the closure neighbourhood.

    For the waning closure f' of f and a radius valid for (f', g), returns a
    set built from f alone that agrees pointwise with the (f', g, r)
    neighbourhood on finite elements.
    """
    fp = closure(f)
    if not _wnbhd_valid(fp, g, r):
        raise PreconditionError(f"radius {r} is not valid for the closure")
    size_value = fp(len(g))
    if is_omega(size_value):
        # the mistake budget is unlimited, so only the agreement clause binds
        return FixBelow(g, r)
    i = len(g.restrict(r))
    j = min(range(i + 1), key=lambda jj: f(jj) - (i - jj))
    b = fp(i) + i - f(j)
    outside = frozenset(range(r)) - g.image
    hits = sorted(g.restrict(r).image)
    picked = frozenset(hits[: i - b])
    return Intersection((FixBelow(g, r), UBasic(f, j, outside | picked)))


def tfprime_refinement(
    f: GenFn, n: int, avoid: Iterable[int], g: PBij
) -> SetDescriptor:
    """Neighbourhood of g under the waning closure inside the original basic set.

    When the closure is still positive at |g| the same basic set over the
    closure works; otherwise a principal neighbourhood with a radius clearing
    ``avoid``, the sources of g hitting it, and the first n sources of g
    missing it.
    """
    avoid = frozenset(avoid)
    if not member(UBasic(f, n, avoid), g):
        raise NotMember("base point is outside the basic set")
    fp = closure(f)
    if fp(len(g)) > 0:
        return UBasic(fp, n, avoid)
    hit_sources = [x for x, y in g.pairs if y in avoid]
    miss_sources = [x for x, y in g.pairs if y not in avoid][:n]
    r = valid_r_min(fp, g)
    for point in (*avoid, *hit_sources, *miss_sources):
        r = max(r, point + 1)
    return WNbhd(fp, g, r)


def continuity_p(f: WaningFn, a: PBij, b: PBij, r: int) -> int:
    """Smallest joint radius making products land inside the target neighbourhood.

    The radius p >= 1 is valid for both factors and clears the images of
    {0..r} under a and under the inverse of b, so that the product of the
    two principal p-neighbourhoods lies in the r-neighbourhood of a*b.
    """
    c = a * b
    if not _wnbhd_valid(f, c, r):
        raise InvalidR(f"radius {r} is not valid for the product")
    a_bound = max((y for x, y in a.pairs if x <= r), default=-1)
    b_bound = max((x for x, y in b.pairs if y <= r), default=-1)
    p = 1
    while True:
        if (
            _wnbhd_valid(f, a, p)
            and _wnbhd_valid(f, b, p)
            and p > a_bound
            and p > b_bound
        ):
            return p
        p += 1


def order_counterexample(
    f: WaningFn, g: WaningFn, r: int
) -> tuple[int, int, PBij]:
    """Separating element for two waning functions that are out of order.

    Finds the least n where f(n) < g(n), the least b with f(n) < b - n <= g(n),
    and the element extending the identity on n by b - n pairs shifted past r.
    The element lies in the (g, id_n, r) neighbourhood but not the (f, id_n, b)
    one.  Raises NoWitness when f(n) >= g(n) everywhere.
    """
    if g.const_omega:
        bound = 0 if f.const_omega else f.omega_prefix + 1
    else:
        bound = g.support_end
    n = next((i for i in range(bound) if f(i) < g(i)), None)
    if n is None:
        raise NoWitness("first function dominates the second pointwise")
    b = n + f(n) + 1
    if r <= b:
        raise PreconditionError(f"radius {r} must exceed the separation bound {b}")
    extra = tuple((r + i, n + i) for i in range(b - n))
    return n, b, PBij(PBij.identity(n).pairs + extra)


def cover_witness(
    n: int,
    h0: PBij,
    avoid: Iterable[int],
    covered_m: Iterable[int],
    includes_dommiss: bool,
) -> PBij:
    """Element of a basic set escaping a finite subfamily of the standard cover.

    The basic set fixes h0 below n and bans ``avoid`` from the image.  The
    cover consists of the sets "n maps to m" for each m plus "n is outside
    the domain".  For a non-empty subfamily the witness extends h0 at n by
    the least value outside ``avoid``, im(h0) and the covered values; for an
    empty subfamily h0 itself already works.
    """
    avoid = frozenset(avoid)
    covered = frozenset(covered_m)
    if any(x >= n for x in h0.domain) or (h0.image & avoid):
        raise BadBase("base is not a partial bijection from n avoiding the set")
    if not includes_dommiss and not covered:
        return h0
    banned = avoid | h0.image | covered
    v = 0
    while v in banned:
        v += 1
    return PBij(h0.pairs + ((n, v),))
